mod common;

use std::collections::HashSet;

use common::{random_permutation, random_tree};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tiwiener::io::{
    decode_graph6, decode_line, decode_sparse6, encode_graph6, encode_sparse6, parse_edge_list, read_trees,
    to_edge_list, write_sparse6_lines,
};
use tiwiener::search::{collect_ti_trees, enumerate_trees};
use tiwiener::{Error, FamilySpec, Tree};

#[test]
fn sparse6_roundtrip_random() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=64);
        let t = random_tree(&mut rng, n);
        let line = encode_sparse6(&t);
        assert!(line.starts_with(':'));
        assert!(line[1..].bytes().all(|b| (63..=126).contains(&b)));
        assert_eq!(decode_sparse6(&line).unwrap(), t, "{line}");
        assert_eq!(decode_graph6(&encode_graph6(&t)).unwrap(), t);
        assert_eq!(parse_edge_list(&to_edge_list(&t)).unwrap(), t);
    }
}

#[test]
fn sparse6_every_small_tree_every_labeling() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in 1..=10 {
        for t in enumerate_trees(n).unwrap() {
            for _ in 0..4 {
                let u = t.relabeled(&random_permutation(&mut rng, n)).unwrap();
                assert_eq!(decode_sparse6(&encode_sparse6(&u)).unwrap(), u);
            }
        }
    }
}

#[test]
fn nauty_corpus_reencodes_byte_for_byte() {
    // gentreeg writes edges in the same order our encoder sorts them
    for text in [include_str!("data/gentreeg_10.s6"), include_str!("data/gentreeg_12.s6")] {
        for line in text.lines() {
            let t = decode_sparse6(line).unwrap();
            assert_eq!(encode_sparse6(&t), line);
        }
    }
}

#[test]
fn corpus_of_order_10() {
    let trees = read_trees(include_str!("data/gentreeg_10.s6")).unwrap();
    assert_eq!(trees.len(), 106);
    let theirs: HashSet<_> = trees.iter().map(Tree::canonical_code).collect();
    let ours: HashSet<_> = enumerate_trees(10).unwrap().map(|t| t.canonical_code()).collect();
    assert_eq!(theirs, ours);
}

#[test]
fn golden_ti_files() {
    let files = [
        (7, include_str!("data/ti_trees_7.s6"), 1),
        (9, include_str!("data/ti_trees_9.s6"), 1),
        (11, include_str!("data/ti_trees_11.s6"), 6),
        (13, include_str!("data/ti_trees_13.s6"), 24),
        (14, include_str!("data/ti_trees_14.s6"), 1),
    ];
    for (n, text, count) in files {
        let trees = collect_ti_trees(n).unwrap();
        assert_eq!(trees.len(), count);
        assert_eq!(write_sparse6_lines(&trees), text, "order {n}");
        let decoded = read_trees(text).unwrap();
        assert!(decoded.iter().all(|t| t.order() == n && t.is_ti()));
        assert_eq!(decoded, trees);
    }
    let only = decode_line(include_str!("data/ti_trees_14.s6").trim()).unwrap();
    let spec: FamilySpec = "CV(9; 3:1, 5:1, 5:3)".parse().unwrap();
    assert!(only.is_isomorphic(&spec.build().unwrap().tree));
}

#[test]
fn roundtrip_up_to_isomorphism() {
    let spec: FamilySpec = "CV(13; 7:2, 9:1)".parse().unwrap();
    let t = spec.build().unwrap().tree;
    let back = decode_sparse6(&encode_sparse6(&t)).unwrap();
    assert_eq!(back.canonical_code(), t.canonical_code());
}

#[test]
fn text_formats() {
    let spec: FamilySpec = "S(3,2,1)".parse().unwrap();
    assert_eq!(spec.to_string(), "S(3,2,1)");
    let t = spec.build().unwrap().tree;
    assert_eq!(to_edge_list(&t), "7\n0 1\n0 4\n0 6\n1 2\n2 3\n4 5\n");
    for text in ["P(5)", "S(4,3,1)", "C(9; 5,7)", "CV(9; 3:1, 5:1, 5:3)"] {
        let parsed: FamilySpec = text.parse().unwrap();
        assert_eq!(parsed.to_string(), text);
        assert_eq!(serde_json::to_string(&parsed).unwrap(), format!("\"{text}\""));
    }
    assert!(matches!("S(1,2)".parse::<FamilySpec>(), Err(Error::Parse { .. })));
}

#[test]
fn malformed_input() {
    assert!(matches!(decode_sparse6("no-colon-prefix"), Err(Error::MalformedSparse6(_))));
    assert!(matches!(decode_sparse6(":Fa@x^"), Err(Error::NotATree(_))));
    assert!(matches!(read_trees(":An\n:~\n"), Err(Error::Parse { position: 2, .. })));
    assert!(matches!(parse_edge_list("3\n0 1\n0 1\n"), Err(Error::NotATree(_)) | Err(Error::Parse { .. })));
}
