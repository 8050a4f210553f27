//! Named tree families: paths, starlike trees and two kinds of caterpillar.
//!
//! Spine positions are 1-based, as in the usual `C_n(a_1, ..., a_k)`
//! notation. Built trees are labeled spine first (`v_i` gets label
//! `i - 1`), then each attachment in declaration order with its vertices
//! numbered outward. A starlike tree has its center at label 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Tree, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Starlike(Vec<usize>),
    OrdinaryCaterpillar { spine: usize, positions: Vec<usize> },
    VariantCaterpillar { spine: usize, attachments: Vec<(usize, usize)> },
}

/// Where each named vertex of a family ended up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelMap {
    /// `spine[i]` is the label of `v_{i+1}`; for a starlike tree this is
    /// just the center.
    pub spine: Vec<Vertex>,
    pub arms: Vec<Arm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arm {
    pub anchor: Vertex,
    /// From the anchor's neighbour out to the leaf.
    pub vertices: Vec<Vertex>,
}

impl LabelMap {
    /// Label of the 1-based spine vertex `v_i`.
    pub fn spine_vertex(&self, i: usize) -> Option<Vertex> {
        i.checked_sub(1).and_then(|j| self.spine.get(j).copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltTree {
    pub tree: Tree,
    pub labels: LabelMap,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadFamilyParams(msg.into())
}

impl FamilySpec {
    pub fn starlike(lengths: impl Into<Vec<usize>>) -> Self {
        Self::Starlike(lengths.into())
    }

    pub fn caterpillar(spine: usize, positions: impl Into<Vec<usize>>) -> Self {
        Self::OrdinaryCaterpillar { spine, positions: positions.into() }
    }

    pub fn variant(spine: usize, attachments: impl Into<Vec<(usize, usize)>>) -> Self {
        Self::VariantCaterpillar { spine, attachments: attachments.into() }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Path(_) => "path",
            Self::Starlike(_) => "starlike",
            Self::OrdinaryCaterpillar { .. } => "ordinary-caterpillar",
            Self::VariantCaterpillar { .. } => "variant-caterpillar",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Path(n) => {
                if *n == 0 {
                    return Err(bad("a path needs at least one vertex"));
                }
            }
            Self::Starlike(arms) => {
                if arms.len() < 3 {
                    return Err(bad(format!("a starlike tree needs at least 3 arms, got {}", arms.len())));
                }
                if arms.contains(&0) {
                    return Err(bad("starlike arm lengths must be at least 1"));
                }
            }
            Self::OrdinaryCaterpillar { spine, positions } => {
                check_positions(*spine, positions.iter().copied())?;
                let mut sorted = positions.clone();
                sorted.sort_unstable();
                if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    return Err(bad(format!("position {} is repeated", w[0])));
                }
            }
            Self::VariantCaterpillar { spine, attachments } => {
                check_positions(*spine, attachments.iter().map(|a| a.0))?;
                if attachments.iter().any(|a| a.1 == 0) {
                    return Err(bad("pendent path lengths must be at least 1"));
                }
                if attachments.iter().all(|a| a.1 < 2) {
                    return Err(bad("a variant caterpillar needs some pendent path of length at least 2"));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> Result<usize> {
        self.validate()?;
        Ok(self.order_unchecked())
    }

    fn order_unchecked(&self) -> usize {
        match self {
            Self::Path(n) => *n,
            Self::Starlike(arms) => 1 + arms.iter().sum::<usize>(),
            Self::OrdinaryCaterpillar { spine, positions } => spine + positions.len(),
            Self::VariantCaterpillar { spine, attachments } => spine + attachments.iter().map(|a| a.1).sum::<usize>(),
        }
    }

    pub fn build(&self) -> Result<BuiltTree> {
        self.validate()?;
        let n = self.order_unchecked();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let (spine_len, hangs): (usize, Vec<(usize, usize)>) = match self {
            Self::Path(n) => (*n, Vec::new()),
            Self::Starlike(arms) => (1, arms.iter().map(|&a| (1, a)).collect()),
            Self::OrdinaryCaterpillar { spine, positions } => (*spine, positions.iter().map(|&p| (p, 1)).collect()),
            Self::VariantCaterpillar { spine, attachments } => (*spine, attachments.clone()),
        };
        edges.extend((1..spine_len).map(|i| (i - 1, i)));
        let mut next = spine_len;
        let mut arms = Vec::with_capacity(hangs.len());
        for (position, length) in hangs {
            let anchor = position - 1;
            let vertices: Vec<Vertex> = (next..next + length).collect();
            let mut prev = anchor;
            for &v in &vertices {
                edges.push((prev, v));
                prev = v;
            }
            next += length;
            arms.push(Arm { anchor, vertices });
        }
        let tree = Tree::new(n, edges)?;
        Ok(BuiltTree { tree, labels: LabelMap { spine: (0..spine_len).collect(), arms } })
    }

    /// Component orders around every branching vertex, computed from the
    /// parameters alone. Each entry is `(label, sizes)`; sizes are listed
    /// descending.
    pub fn branch_profile(&self) -> Result<Vec<(Vertex, Vec<usize>)>> {
        self.validate()?;
        let n = self.order_unchecked();
        let mut out = Vec::new();
        match self {
            Self::Path(_) => {}
            Self::Starlike(arms) => {
                let mut sizes = arms.clone();
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                out.push((0, sizes));
            }
            Self::OrdinaryCaterpillar { spine, positions } => {
                let hangs: Vec<_> = positions.iter().map(|&p| (p, 1)).collect();
                caterpillar_profile(n, *spine, &hangs, &mut out);
            }
            Self::VariantCaterpillar { spine, attachments } => {
                caterpillar_profile(n, *spine, attachments, &mut out);
            }
        }
        Ok(out)
    }
}

fn check_positions(spine: usize, positions: impl ExactSizeIterator<Item = usize>) -> Result<()> {
    if positions.len() < 2 {
        return Err(bad(format!("a caterpillar needs at least 2 attachments, got {}", positions.len())));
    }
    for p in positions {
        if p < 2 || p + 1 > spine {
            return Err(bad(format!("position {p} is outside 2..={}", spine.saturating_sub(1))));
        }
    }
    Ok(())
}

fn caterpillar_profile(n: usize, spine: usize, hangs: &[(usize, usize)], out: &mut Vec<(Vertex, Vec<usize>)>) {
    let mut positions: Vec<usize> = hangs.iter().map(|h| h.0).collect();
    positions.sort_unstable();
    positions.dedup();
    for p in positions {
        let here: Vec<usize> = hangs.iter().filter(|h| h.0 == p).map(|h| h.1).collect();
        let left = (p - 1) + hangs.iter().filter(|h| h.0 < p).map(|h| h.1).sum::<usize>();
        let right = n - 1 - left - here.iter().sum::<usize>();
        debug_assert_eq!(right, (spine - p) + hangs.iter().filter(|h| h.0 > p).map(|h| h.1).sum::<usize>());
        let mut sizes = here;
        sizes.push(left);
        sizes.push(right);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        out.push((p - 1, sizes));
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Path(n) => write!(f, "P({n})"),
            Self::Starlike(arms) => write!(f, "S({})", join(arms.iter().map(usize::to_string))),
            Self::OrdinaryCaterpillar { spine, positions } => {
                write!(f, "C({spine}; {})", join(positions.iter().map(usize::to_string)))
            }
            Self::VariantCaterpillar { spine, attachments } => {
                let parts: Vec<_> = attachments.iter().map(|(a, b)| format!("{a}:{b}")).collect();
                write!(f, "CV({spine}; {})", parts.join(", "))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let spec = Parser { src: s.as_bytes(), pos: 0 }.spec()?;
        spec.validate().map_err(|e| Error::Parse { position: 0, message: e.to_string() })?;
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("digits are ASCII");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("number out of range")
        })
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        let mut out = vec![item(self)?];
        while self.eat(b',') {
            out.push(item(self)?);
        }
        Ok(out)
    }

    fn spec(mut self) -> Result<FamilySpec> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        let head = &self.src[start..self.pos];
        let spec = match head {
            b"P" => {
                self.expect(b'(')?;
                FamilySpec::Path(self.number()?)
            }
            b"S" => {
                self.expect(b'(')?;
                FamilySpec::Starlike(self.list(Self::number)?)
            }
            b"C" => {
                self.expect(b'(')?;
                let spine = self.number()?;
                self.expect(b';')?;
                FamilySpec::OrdinaryCaterpillar { spine, positions: self.list(Self::number)? }
            }
            b"CV" => {
                self.expect(b'(')?;
                let spine = self.number()?;
                self.expect(b';')?;
                let attachments = self.list(|p| {
                    let a = p.number()?;
                    p.expect(b':')?;
                    Ok((a, p.number()?))
                })?;
                FamilySpec::VariantCaterpillar { spine, attachments }
            }
            _ => {
                self.pos = start;
                return self.err("expected one of P, S, C, CV");
            }
        };
        self.expect(b')')?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("trailing input");
        }
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starlike_321() {
        let built = FamilySpec::starlike([3, 2, 1]).build().unwrap();
        assert_eq!(built.tree.order(), 7);
        assert_eq!(built.tree.branching_vertices(), vec![0]);
        assert_eq!(built.tree.degree(0).unwrap(), 3);
        assert_eq!(built.labels.arms[0].vertices, vec![1, 2, 3]);
        assert_eq!(built.tree.wiener(), 50);
    }

    #[test]
    fn caterpillar_9_5_7() {
        let spec = FamilySpec::caterpillar(9, [5, 7]);
        assert_eq!(spec.order().unwrap(), 11);
        let built = spec.build().unwrap();
        let v5 = built.labels.spine_vertex(5).unwrap();
        let v7 = built.labels.spine_vertex(7).unwrap();
        assert_eq!(built.tree.branching_vertices(), vec![v5, v7]);
        assert_eq!(built.tree.decompose_at(v5).unwrap(), vec![5, 4, 1]);
        assert_eq!(built.tree.wiener(), 186);
        assert_eq!(spec.branch_profile().unwrap(), vec![(v5, vec![5, 4, 1]), (v7, vec![7, 2, 1])]);
    }

    #[test]
    fn variant_with_repeated_position() {
        let spec = FamilySpec::variant(9, [(3, 1), (5, 1), (5, 3)]);
        assert_eq!(spec.order().unwrap(), 14);
        let built = spec.build().unwrap();
        assert_eq!(built.tree.degree(4).unwrap(), 4);
        assert!(built.tree.is_ti());
    }

    #[test]
    fn orders() {
        assert_eq!(FamilySpec::variant(13, [(7, 2), (9, 1)]).order().unwrap(), 16);
        assert_eq!(FamilySpec::starlike([8, 6, 2]).order().unwrap(), 17);
        assert_eq!(FamilySpec::Path(5).order().unwrap(), 5);
    }

    #[test]
    fn rejections() {
        assert!(matches!(FamilySpec::starlike([1, 2]).build(), Err(Error::BadFamilyParams(_))));
        assert!(matches!(FamilySpec::starlike([1, 0, 2]).build(), Err(Error::BadFamilyParams(_))));
        assert!(matches!(FamilySpec::caterpillar(9, [5, 5]).build(), Err(Error::BadFamilyParams(_))));
        assert!(matches!(FamilySpec::caterpillar(9, [1, 5]).build(), Err(Error::BadFamilyParams(_))));
        assert!(matches!(FamilySpec::caterpillar(9, [9, 5]).build(), Err(Error::BadFamilyParams(_))));
        assert!(matches!(FamilySpec::caterpillar(9, [5]).build(), Err(Error::BadFamilyParams(_))));
        assert!(matches!(FamilySpec::variant(9, [(3, 1), (5, 1)]).build(), Err(Error::BadFamilyParams(_))));
        assert!(matches!(FamilySpec::variant(9, [(3, 0), (5, 2)]).build(), Err(Error::BadFamilyParams(_))));
        assert!(matches!(FamilySpec::Path(0).build(), Err(Error::BadFamilyParams(_))));
    }

    #[test]
    fn text_roundtrip() {
        for text in ["P(4)", "S(3,2,1)", "C(9; 5,7)", "CV(9; 3:1, 5:1, 5:3)", "CV(13; 7:2, 9:1)"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("C(9;5, 7)".parse::<FamilySpec>().unwrap(), FamilySpec::caterpillar(9, [5, 7]));
        assert_eq!(
            "CV(9; 3:1, 5:1, 5:3)".parse::<FamilySpec>().unwrap(),
            FamilySpec::variant(9, [(3, 1), (5, 1), (5, 3)])
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!("S(1,2)".parse::<FamilySpec>(), Err(Error::Parse { .. })));
        assert_eq!(
            "C(9; 5,)".parse::<FamilySpec>(),
            Err(Error::Parse { position: 7, message: "expected a number".into() })
        );
        assert!(matches!("Q(3)".parse::<FamilySpec>(), Err(Error::Parse { position: 0, .. })));
        assert!(matches!("P(3) x".parse::<FamilySpec>(), Err(Error::Parse { position: 5, .. })));
    }
}
