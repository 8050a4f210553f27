use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tiwiener::io::{encode_sparse6, parse_edge_list, read_trees, to_edge_list};
use tiwiener::search::{enumerate_trees, for_each_ti_tree};
use tiwiener::{
    extremal, search_max_ti_sharded, verify_range, ClosedForm, FamilySpec, SearchReport, SpectrumKind, Tree,
};

#[derive(Parser)]
#[command(name = "tiwiener", version, about = "Transmission-irregular trees with maximum Wiener index")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a tree from family notation, e.g. "CV(9; 3:1, 5:1, 5:3)".
    Construct {
        spec: String,
        #[arg(long, value_enum, default_value_t = Emit::Edges)]
        emit: Emit,
    },
    /// Transmissions, Wiener index and TI status of a tree.
    Invariants(TreeInput),
    /// The dispatcher's TI tree of maximum Wiener index for an order.
    Extremal {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Evaluate a closed-form Wiener index or a transmission spectrum.
    Formula {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
    },
    /// Stream every tree of an order as sparse6.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        ti_only: bool,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for TI trees of maximum Wiener index.
    SearchMax {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
    /// Compare exhaustive search with the dispatcher over a range of orders.
    Verify {
        /// Inclusive range such as 2..24, or a single order.
        #[arg(long, value_parser = parse_orders)]
        orders: RangeInclusive<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Sparse6,
    Edges,
    Spec,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct TreeInput {
    /// Family notation.
    #[arg(long)]
    spec: Option<String>,
    /// A sparse6 or graph6 line.
    #[arg(long)]
    sparse6: Option<String>,
    /// A file holding an edge list, or sparse6/graph6 lines.
    #[arg(long)]
    file: Option<PathBuf>,
}

fn parse_orders(text: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("bad order {s:?}: {e}"));
    let range = match text.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let n = parse(text)?;
            n..=n
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {text}"));
    }
    Ok(range)
}

fn load_trees(input: &TreeInput) -> Result<Vec<Tree>> {
    if let Some(spec) = &input.spec {
        return Ok(vec![spec.parse::<FamilySpec>()?.build()?.tree]);
    }
    if let Some(line) = &input.sparse6 {
        return Ok(read_trees(line)?);
    }
    let path = input.file.as_ref().expect("clap enforces one input");
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let first = text.lines().find(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#')).unwrap_or("");
    let looks_numeric = first.split_whitespace().all(|w| w.parse::<usize>().is_ok());
    if looks_numeric {
        Ok(vec![parse_edge_list(&text)?])
    } else {
        Ok(read_trees(&text)?)
    }
}

fn emit(tree: &Tree, spec: Option<&FamilySpec>, how: Emit) -> String {
    match how {
        Emit::Sparse6 => encode_sparse6(tree),
        Emit::Edges => to_edge_list(tree).trim_end().to_string(),
        Emit::Spec => spec.map(ToString::to_string).unwrap_or_default(),
    }
}

fn print_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn print_report(r: &SearchReport) {
    println!("order {}: {} trees, {} TI", r.order, r.total_trees, r.ti_trees);
    match r.max_wiener {
        None => println!("no TI tree"),
        Some(w) => {
            println!("max W = {w}, {} maximizer(s)", r.maximizers.len());
            for m in &r.maximizers {
                println!("{}", m.sparse6);
            }
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Construct { spec, emit: how } => {
            let spec: FamilySpec = spec.parse()?;
            let built = spec.build()?;
            if cli.json {
                print_json(&json!({
                    "spec": spec,
                    "order": built.tree.order(),
                    "edges": built.tree.edges(),
                    "sparse6": encode_sparse6(&built.tree),
                    "spine": built.labels.spine,
                }))?;
            } else {
                println!("{}", emit(&built.tree, Some(&spec), how));
            }
        }
        Command::Invariants(input) => {
            let trees = load_trees(&input)?;
            let mut rows = Vec::with_capacity(trees.len());
            for t in &trees {
                let p = t.transmission_profile();
                rows.push(json!({
                    "order": t.order(),
                    "wiener": p.wiener,
                    "is_ti": p.is_ti,
                    "transmissions": p.tr,
                    "min_vertex": p.min_vertex,
                    "canonical_code": t.canonical_code(),
                }));
                if !cli.json {
                    let tr: Vec<String> = p.tr.iter().map(ToString::to_string).collect();
                    println!("n={} W={} TI={}", t.order(), p.wiener, if p.is_ti { "yes" } else { "no" });
                    println!("Tr: {}", tr.join(" "));
                }
            }
            if cli.json {
                print_json(&rows)?;
            }
        }
        Command::Extremal { order, emit: how } => {
            let outcome = extremal(order)?;
            if cli.json {
                print_json(&outcome)?;
            } else {
                println!("{outcome}");
                if let (Some(how), Some(tree)) = (how, outcome.tree()) {
                    println!("{}", emit(&tree, outcome.spec.as_ref(), how));
                }
            }
        }
        Command::Formula { name, n } => {
            if let Ok(form) = name.parse::<ClosedForm>() {
                let value = form.evaluate(n)?;
                if cli.json {
                    print_json(&value)?;
                } else {
                    println!("{} = {}", form.id(), value.value);
                }
            } else if let Ok(kind) = name.parse::<SpectrumKind>() {
                let spectrum = kind.generate(n)?;
                if cli.json {
                    print_json(&spectrum)?;
                } else {
                    let offsets: Vec<String> = spectrum.offsets.iter().map(ToString::to_string).collect();
                    println!("{} base={} distinct={}", kind.id(), spectrum.base, spectrum.is_distinct());
                    println!("{}", offsets.join(" "));
                }
            } else {
                let known: Vec<&str> =
                    ClosedForm::ALL.iter().map(|f| f.id()).chain(SpectrumKind::ALL.iter().map(|k| k.id())).collect();
                bail!("unknown formula {name:?}; known: {}", known.join(", "));
            }
        }
        Command::Enumerate { order, ti_only, out } => {
            let sink: Box<dyn Write> = match &out {
                Some(path) => Box::new(File::create(path).with_context(|| format!("creating {}", path.display()))?),
                None => Box::new(io::stdout().lock()),
            };
            let mut sink = BufWriter::new(sink);
            let mut written = 0u64;
            let mut failure = None;
            let mut write_tree = |tree: Tree| {
                if failure.is_none() {
                    match writeln!(sink, "{}", encode_sparse6(&tree)) {
                        Ok(()) => written += 1,
                        Err(e) => failure = Some(e),
                    }
                }
            };
            if ti_only {
                for_each_ti_tree(order, &mut write_tree)?;
            } else {
                enumerate_trees(order)?.for_each(&mut write_tree);
            }
            if let Some(e) = failure {
                return Err(e.into());
            }
            sink.flush()?;
            if out.is_some() {
                if cli.json {
                    print_json(&json!({ "order": order, "ti_only": ti_only, "written": written }))?;
                } else {
                    eprintln!("wrote {written} tree(s)");
                }
            }
        }
        Command::SearchMax { order, shards } => {
            let report = search_max_ti_sharded(order, shards)?;
            if cli.json {
                print_json(&report)?;
            } else {
                print_report(&report);
            }
        }
        Command::Verify { orders, report, shards } => {
            let table = verify_range(orders, shards)?;
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&table)?;
                std::fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
            }
            if cli.json {
                print_json(&table)?;
            } else {
                println!("{table}");
            }
            return Ok(table.all_passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
