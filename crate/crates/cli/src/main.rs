use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use knotkit::algebra::{check_axioms, BirackTable, Builtin, Check};
use knotkit::colouring::{enumerate_edge_colourings, enumerate_whole_colourings, ColouringFile};
use knotkit::diagram::{catalog, catalog_names, equivalence_pairs, Diagram};
use knotkit::homology::{homology_group, Theory};
use knotkit::invariants::{chirality_classes, diagram_report, REPORT_TABLES};
use knotkit::{KnotError, Result};

const FORMAT_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "knotkit", version, about = "Biquandle colourings and homology of knot diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON (sorted keys)
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit plain text (default)
    #[arg(long, global = true)]
    text: bool,
    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List builtin diagrams and biracks
    Catalog,
    /// Check the birack axioms
    Axioms {
        #[arg(long)]
        birack: String,
    },
    /// Write the doubled table as birack JSON
    Double {
        #[arg(long)]
        birack: String,
    },
    /// Count (and optionally list) colourings
    Colour {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        birack: String,
        /// List every colouring
        #[arg(long)]
        all: bool,
        /// Whole colourings (faces too) instead of edge colourings
        #[arg(long)]
        whole: bool,
    },
    /// Homology group of a birack
    Homology {
        #[arg(long)]
        birack: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "BR")]
        theory: Theory,
    },
    /// Quandle homology classes of all whole colourings
    Chirality {
        #[arg(long)]
        diagram: String,
        #[arg(long, default_value = "q3")]
        birack: String,
    },
    /// Genus, sidedness, chessboard and alternate orientations
    Analyze {
        #[arg(long)]
        diagram: String,
    },
    /// Full invariant report
    Report {
        #[arg(long)]
        diagram: String,
    },
}

/// Builtin names first; anything with '/' or '.' is a path.
fn load_birack(spec: &str) -> Result<BirackTable> {
    if !looks_like_path(spec) {
        if let Ok(b) = spec.parse::<Builtin>() {
            return b.build();
        }
    }
    let text = read(spec)?;
    BirackTable::from_json(&text)
}

fn load_diagram(spec: &str) -> Result<Diagram> {
    if !looks_like_path(spec) {
        if let Ok(d) = catalog(spec) {
            return Ok(d);
        }
    }
    let text = read(spec)?;
    Diagram::from_json(&text)
}

fn looks_like_path(spec: &str) -> bool {
    spec.contains('/') || spec.contains('.')
}

fn read(spec: &str) -> Result<String> {
    if !Path::new(spec).exists() && !looks_like_path(spec) {
        return Err(KnotError::UnknownName(spec.to_string()));
    }
    fs::read_to_string(spec).map_err(|e| KnotError::MalformedInput(format!("{spec}: {e}")))
}

struct Output {
    json: Value,
    text: String,
    /// Emitted as is in both modes, for outputs that are themselves an input file format.
    raw: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, raw: false }
    }
}

fn check_line(name: &str, c: &Check) -> String {
    let verdict = if c.passed { "pass" } else { "FAIL" };
    let mut line = format!("{name:<18} {verdict}  ({} checked)", c.checked);
    if !c.counterexamples.is_empty() {
        line.push_str(&format!("  e.g. {:?}", c.counterexamples[0]));
    }
    line
}

fn multiset_text(values: &[String]) -> String {
    let mut counts: Vec<(String, usize)> = Vec::new();
    for v in values {
        match counts.last_mut() {
            Some((last, k)) if last == v => *k += 1,
            _ => counts.push((v.clone(), 1)),
        }
    }
    counts.iter().map(|(v, k)| format!("{v} x{k}")).collect::<Vec<_>>().join(", ")
}

fn signed(x: i64) -> String {
    if x > 0 {
        format!("+{x}")
    } else {
        x.to_string()
    }
}

fn run(command: &Command) -> Result<Output> {
    Ok(match command {
        Command::Catalog => {
            let diagrams: Vec<Value> = catalog_names()
                .iter()
                .map(|&n| {
                    let d = catalog(n).expect("catalog entry");
                    json!({
                        "name": n,
                        "crossings": d.classical_count(),
                        "virtual_crossings": d.virtual_count(),
                        "components": d.component_count(),
                    })
                })
                .collect();
            let biracks = ["q3", "bq21", "i<n>", "r<m>", "twist:<n>", "dihedral:<m>", "alexander:<m>:<lambda>:<mu>"];
            let pairs: Vec<Value> = equivalence_pairs().iter().map(|(a, b)| json!([a, b])).collect();
            let mut text = String::from("diagrams:\n");
            for d in &diagrams {
                text.push_str(&format!(
                    "  {:<18} {} classical, {} virtual, {} component(s)\n",
                    d["name"].as_str().unwrap_or_default(),
                    d["crossings"],
                    d["virtual_crossings"],
                    d["components"]
                ));
            }
            text.push_str("equivalent pairs:\n");
            for (a, b) in equivalence_pairs() {
                text.push_str(&format!("  {a} ~ {b}\n"));
            }
            text.push_str("biracks:\n");
            for b in biracks {
                text.push_str(&format!("  {b}\n"));
            }
            Output::new(json!({ "diagrams": diagrams, "biracks": biracks, "equivalence_pairs": pairs }), text)
        }
        Command::Axioms { birack } => {
            let r = check_axioms(&load_birack(birack)?);
            let mut text = format!("{} ({} elements, {})\n", r.name, r.size, if r.total { "total" } else { "partial" });
            text.push_str(&format!("{}\n", check_line("B1", &r.b1)));
            text.push_str(&format!("{}\n", check_line("  sideways", &r.sideways_invertible)));
            text.push_str(&format!("{}\n", check_line("  diagonal up", &r.b1_diagonal_up)));
            text.push_str(&format!("{}\n", check_line("  diagonal down", &r.b1_diagonal_down)));
            text.push_str(&format!("{}\n", check_line("B2", &r.b2)));
            text.push_str(&format!("{}\n", check_line("B3", &r.b3)));
            for (i, c) in r.derived.iter().enumerate() {
                text.push_str(&format!("{}\n", check_line(&format!("  B3 identity {}", i + 1), c)));
            }
            text.push_str(&format!("class: {}\n", serde_json::to_value(r.class).expect("class").as_str().unwrap_or("")));
            Output::new(serde_json::to_value(&r).expect("report"), text)
        }
        Command::Double { birack } => {
            let d = load_birack(birack)?.double()?;
            Output { json: Value::Null, text: format!("{}\n", d.to_json()), raw: true }
        }
        Command::Colour { diagram, birack, all, whole } => {
            let d = load_diagram(diagram)?;
            let t = load_birack(birack)?;
            let listing: Vec<(knotkit::colouring::EdgeColouring, Option<Vec<usize>>)> = if *whole {
                enumerate_whole_colourings(&d, &t)?.into_iter().map(|w| (w.edges, Some(w.faces))).collect()
            } else {
                enumerate_edge_colourings(&d, &t).into_iter().map(|e| (e, None)).collect()
            };
            let mut text = format!("{}\n", listing.len());
            let mut json = json!({
                "diagram": d.name(),
                "birack": t.name(),
                "kind": if *whole { "whole" } else { "edge" },
                "count": listing.len(),
            });
            if *all {
                let words = |xs: &[usize]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                let mut files = Vec::new();
                for (edges, faces) in &listing {
                    text.push_str(&format!("edges {}", words(&edges.0)));
                    if let Some(f) = faces {
                        text.push_str(&format!("  faces {}", words(f)));
                    }
                    text.push('\n');
                    files.push(ColouringFile::new(&d, &t, edges, faces.as_deref()));
                }
                json["colourings"] = serde_json::to_value(&files).expect("colourings");
            }
            Output::new(json, text)
        }
        Command::Homology { birack, degree, theory } => {
            let h = homology_group(&load_birack(birack)?, *degree, *theory)?;
            Output::new(serde_json::to_value(h.report()).expect("report"), format!("{}\n", h.group))
        }
        Command::Chirality { diagram, birack } => {
            let d = load_diagram(diagram)?;
            let t = load_birack(birack)?;
            let basis = homology_group(&t, 3, Theory::Q)?;
            let classes = chirality_classes(&d, &t, &basis)?;
            let cyclic = basis.group.free_rank == 0 && basis.group.torsion.len() == 1;
            let (values, text_values): (Vec<Value>, Vec<String>) = if cyclic {
                let mut vs: Vec<i64> = d_values(&d, &t, &basis)?;
                vs.sort_unstable();
                (vs.iter().map(|&v| json!(v)).collect(), vs.iter().map(|&v| signed(v)).collect())
            } else {
                let mut cs = classes;
                cs.sort();
                (
                    cs.iter().map(|c| serde_json::to_value(c).expect("class")).collect(),
                    cs.iter().map(|c| serde_json::to_string(c).expect("class")).collect(),
                )
            };
            let text = format!(
                "{} by {} in H3^Q = {}: {}\n",
                d.name(),
                t.name(),
                basis.group,
                if text_values.is_empty() { "no whole colourings".into() } else { multiset_text(&text_values) }
            );
            Output::new(
                json!({
                    "diagram": d.name(),
                    "birack": t.name(),
                    "group": basis.group.to_string(),
                    "classes": values,
                }),
                text,
            )
        }
        Command::Analyze { diagram } => {
            let d = load_diagram(diagram)?;
            let faces = d.faces()?;
            let side = d.sidedness()?;
            let chess = d.chessboard()?.is_some();
            let chords = d.chord_diagram();
            let parity: Vec<Value> = chords
                .chords
                .iter()
                .map(|c| json!({ "vertex": c.vertex, "parity": chords.parity(c.vertex) }))
                .collect();
            let orientations = d.alternate_orientations();
            let mut text = format!(
                "{}: gauss {}\nwrithe {}, genus {}, {} faces, two-sided {}, irreducible {}, chessboard {}\n",
                d.name(),
                if d.gauss_code().is_empty() { "(none)".into() } else { d.gauss_code() },
                d.writhe(),
                d.genus()?,
                faces.count,
                side.two_sided,
                side.irreducible,
                chess
            );
            let parities: Vec<String> = chords
                .chords
                .iter()
                .map(|c| {
                    let p = chords.parity(c.vertex).map_or("exterior".to_string(), |p| format!("{p:?}").to_lowercase());
                    format!("{}:{p}", c.vertex)
                })
                .collect();
            if !parities.is_empty() {
                text.push_str(&format!("chord parity {}\n", parities.join(" ")));
            }
            if orientations.is_empty() {
                text.push_str("no alternate orientation\n");
            }
            for (i, o) in orientations.iter().enumerate() {
                text.push_str(&format!(
                    "orientation {i}: {} sinks, {} sources, {} saddles{}\n",
                    o.sinks,
                    o.sources,
                    o.saddles,
                    if o.is_good() { " (good)" } else { "" }
                ));
            }
            Output::new(
                json!({
                    "diagram": d.name(),
                    "gauss_code": d.gauss_code(),
                    "writhe": d.writhe(),
                    "genus": d.genus()?,
                    "faces": faces.count,
                    "two_sided": side.two_sided,
                    "irreducible": side.irreducible,
                    "chessboard": chess,
                    "parity": parity,
                    "orientations": orientations,
                }),
                text,
            )
        }
        Command::Report { diagram } => {
            let r = diagram_report(&load_diagram(diagram)?)?;
            let mut text = format!(
                "{}: writhe {}, genus {}, {} classical + {} virtual crossings, {} component(s)\n",
                r.diagram, r.writhe, r.genus, r.crossings, r.virtual_crossings, r.components
            );
            text.push_str("colourings:");
            for b in REPORT_TABLES {
                let name = b.build()?.name().to_string();
                text.push_str(&format!(" {name}={}", r.colour_counts[&name]));
            }
            text.push('\n');
            match &r.chirality_q3 {
                Some(v) => {
                    let vs: Vec<String> = v.iter().map(|&x| signed(x)).collect();
                    text.push_str(&format!("chirality (Q33): {}\n", multiset_text(&vs)));
                }
                None => text.push_str("chirality (Q33): not defined (crossing sums are not cycles)\n"),
            }
            let good = r.orientation.iter().filter(|o| o.good).count();
            text.push_str(&format!(
                "alternate orientations: {} ({} good), two-sided {}, chessboard {}\n",
                r.orientation.len(),
                good,
                r.two_sided,
                r.chessboard
            ));
            Output::new(serde_json::to_value(&r).expect("report"), text)
        }
    })
}

fn d_values(d: &Diagram, t: &BirackTable, basis: &knotkit::homology::HomologyBasis) -> Result<Vec<i64>> {
    enumerate_whole_colourings(d, t)?
        .iter()
        .map(|w| Ok(basis.cyclic_value(&knotkit::invariants::whole_cycle(d, w)?)?.expect("cyclic group")))
        .collect()
}

fn configure_threads() {
    if let Some(n) = std::env::var("KNOTKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // ignore the error if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn emit(cli: &Cli, out: Output) -> std::io::Result<()> {
    let body = if out.raw {
        out.text
    } else if cli.output.json {
        let mut v = out.json;
        match v.as_object_mut() {
            Some(map) => {
                map.insert("format_version".into(), json!(FORMAT_VERSION));
            }
            None => v = json!({ "format_version": FORMAT_VERSION, "value": v }),
        }
        format!("{}\n", serde_json::to_string(&v).expect("json"))
    } else {
        format!("{}format_version {FORMAT_VERSION}\n", out.text)
    };
    match &cli.output.out {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli.command) {
        Ok(out) => match emit(&cli, out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
