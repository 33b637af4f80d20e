//! Command-line front end. [`run`] takes the argument list and two writers
//! and returns the process exit status:
//!
//! - `0` success (including a clean audit),
//! - `1` a verification failure or a flagged audit,
//! - `2` a usage error: bad arguments, an invalid tableau, an unreadable or
//!   malformed graph file.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::graph::{CrystalGraph, GraphDocument};
use crate::operators::{action_side, Operator};
use crate::relation::{audit_document, is_applicable, verify_crystal, CrystalReport, TableCell, TableauModel};
use crate::signature::{
    block_layout, epsilon, phi, reduce_by_rewriting, reduced_signature, signature, Color, SignatureSymbol,
    SignatureWord,
};
use crate::tableau::{Shape, Tableau};

const CONFLUENCE_WORDS: usize = 10_000;
const CONFLUENCE_MAX_LEN: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "c2crystal", version, about = "Type C2 crystal graphs of tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate the crystal graph of a shape.
    Generate {
        /// Shape as `L1,L2` with L1 >= L2 >= 0.
        #[arg(long)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Statistics, signatures and blocks of one tableau.
    Stats {
        /// Tableau as `top / bottom`, e.g. "2 -2 -1 / -2".
        #[arg(allow_hyphen_values = true)]
        tableau: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply operators to a tableau, left to right.
    Apply {
        #[arg(allow_hyphen_values = true)]
        tableau: String,
        /// Operators `e1`, `e2`, `f1`, `f2`, applied in the order given.
        #[arg(required = true)]
        ops: Vec<Operator>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustively check the local relations of one or more crystals.
    Verify {
        #[arg(long, required_unless_present = "max_l1", conflicts_with = "max_l1")]
        shape: Option<Shape>,
        /// Every shape with L1 at most this.
        #[arg(long)]
        max_l1: Option<usize>,
        /// Also run a seeded random-order reduction check.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a colored digraph in the JSON graph format.
    Audit {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

struct Usage(String);

type Outcome = Result<i32, Usage>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Generate {
            shape,
            format,
            out: path,
        } => generate(shape, format, path, out),
        Command::Stats { tableau, format } => stats(&tableau, format, out),
        Command::Apply { tableau, ops, format } => apply(&tableau, &ops, format, out),
        Command::Verify {
            shape,
            max_l1,
            seed,
            format,
        } => verify(shape, max_l1, seed, format, out),
        Command::Audit { path, format } => audit(&path, format, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Usage(format!("cannot write output: {e}")))?;
    Ok(0)
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Outcome {
    let text = serde_json::to_string_pretty(value).expect("json values serialize");
    emit(out, &format!("{text}\n"))
}

fn text_or_json(format: Format) -> Result<bool, Usage> {
    match format {
        Format::Text => Ok(false),
        Format::Json => Ok(true),
        Format::Dot => Err(Usage("--format dot is only available for generate".into())),
    }
}

fn parse_tableau(text: &str) -> Result<Tableau, Usage> {
    let t = Tableau::parse(text).map_err(|e| Usage(e.to_string()))?;
    if let Err(violations) = t.validate() {
        let list: Vec<String> = violations.iter().map(|v| format!("  {v}")).collect();
        return Err(Usage(format!("{t} is not a tableau:\n{}", list.join("\n"))));
    }
    Ok(t)
}

fn generate(shape: Shape, format: Format, path: Option<PathBuf>, out: &mut dyn Write) -> Outcome {
    let g = CrystalGraph::generate(shape);
    let text = match format {
        Format::Json => g.export_json(),
        Format::Dot => g.export_dot(),
        Format::Text => return Err(Usage("generate supports --format dot or json".into())),
    };
    match path {
        Some(p) => {
            fs::write(&p, text).map_err(|e| Usage(format!("cannot write {}: {e}", p.display())))?;
            Ok(0)
        }
        None => emit(out, &text),
    }
}

fn stats(text: &str, format: Format, out: &mut dyn Write) -> Outcome {
    let json = text_or_json(format)?;
    let t = parse_tableau(text)?;
    let s = t.abcd();
    let cell = is_applicable(&TableauModel, &t).then(|| TableCell::of(&s));

    let colors: Vec<Value> = Color::BOTH
        .iter()
        .map(|&c| {
            let layout = block_layout(&t, c);
            json!({
                "color": c.number(),
                "signature": signature(&t, c).to_string(),
                "reduced": reduced_signature(&t, c).to_string(),
                "epsilon": epsilon(&t, c),
                "phi": phi(&t, c),
                "left_block": { "size": layout.left.size, "edge": layout.left.left_edge.to_string() },
                "right_block": { "size": layout.right.size, "edge": layout.right.left_edge.to_string() },
                "action_side": action_side(&t, c),
            })
        })
        .collect();

    if json {
        let relation = cell.map(|c| json!({ "cell": c.to_string(), "degree": c.degree().value() }));
        return emit_json(
            out,
            &json!({
                "tableau": t.render(),
                "shape": [t.shape().lambda1(), t.shape().lambda2()],
                "column_word": t.column_word().iter().map(|l| l.token()).collect::<Vec<_>>().join(" "),
                "stats": s,
                "colors": colors,
                "relation": relation,
            }),
        );
    }

    let mut lines = vec![
        format!("tableau: {}", t.render()),
        format!("shape: {}", t.shape()),
        format!(
            "column word: {}",
            t.column_word().iter().map(|l| l.token()).collect::<Vec<_>>().join(" ")
        ),
        format!("stats: {s}"),
    ];
    for c in Color::BOTH {
        let layout = block_layout(&t, c);
        let acts = match action_side(&t, c) {
            Some(side) => format!("e{c} acts on the {side} block"),
            None => format!("e{c} = 0"),
        };
        lines.push(format!(
            "color {c}: signature {} reduced {} epsilon {} phi {}",
            signature(&t, c),
            reduced_signature(&t, c),
            epsilon(&t, c),
            phi(&t, c)
        ));
        lines.push(format!(
            "color {c}: left block {} edge {}, right block {} edge {}, {acts}",
            layout.left.size, layout.left.left_edge, layout.right.size, layout.right.left_edge
        ));
    }
    lines.push(match cell {
        Some(c) => format!("relation: degree {} ({c})", c.degree()),
        None => "relation: not applicable (needs e1 and e2 defined)".to_string(),
    });
    emit(out, &(lines.join("\n") + "\n"))
}

fn apply(text: &str, ops: &[Operator], format: Format, out: &mut dyn Write) -> Outcome {
    let json = text_or_json(format)?;
    let start = parse_tableau(text)?;
    let mut current = Some(start.clone());
    let mut steps = Vec::new();
    for &op in ops {
        current = current.and_then(|t| op.apply(&t));
        steps.push((op, current.clone()));
    }
    if json {
        let steps: Vec<Value> = steps
            .iter()
            .map(|(op, t)| json!({ "op": op.to_string(), "result": t.as_ref().map(Tableau::render) }))
            .collect();
        return emit_json(
            out,
            &json!({
                "tableau": start.render(),
                "steps": steps,
                "result": current.as_ref().map(Tableau::render),
            }),
        );
    }
    let mut text = format!("start: {}\n", start.render());
    for (op, t) in &steps {
        match t {
            Some(t) => text.push_str(&format!("{op}: {}\n", t.render())),
            None => text.push_str(&format!("{op}: 0\n")),
        }
    }
    emit(out, &text)
}

fn confluence_disagreements(seed: u64) -> usize {
    use SignatureSymbol::*;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..CONFLUENCE_WORDS)
        .filter(|_| {
            let len = rng.gen_range(0..=CONFLUENCE_MAX_LEN);
            let word: Vec<SignatureSymbol> = (0..len).map(|_| [Plus, Minus, Star][rng.gen_range(0..3)]).collect();
            let rewritten = reduce_by_rewriting(&word, &mut rng);
            SignatureWord::from_symbols(word).reduce().symbols() != rewritten.as_slice()
        })
        .count()
}

fn shape_line(r: &CrystalReport, counts_agree: bool) -> String {
    let degrees: Vec<String> = [2, 4, 5, 7]
        .iter()
        .map(|d| format!("{d}:{}", r.e_side.degree_counts.get(d).copied().unwrap_or(0)))
        .collect();
    let status = if r.passed() && counts_agree { "pass" } else { "FAIL" };
    format!(
        "shape {},{}: {} vertices, {} applicable vertices, degrees {}, f-side {}, {status}",
        r.shape[0],
        r.shape[1],
        r.vertices,
        r.e_side.applicable,
        degrees.join(" "),
        if counts_agree { "counts agree" } else { "counts differ" },
    )
}

fn verify(
    shape: Option<Shape>,
    max_l1: Option<usize>,
    seed: Option<u64>,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    let json = text_or_json(format)?;
    let shapes = match (shape, max_l1) {
        (Some(s), _) => vec![s],
        (None, Some(n)) => Shape::all_up_to(n),
        (None, None) => unreachable!("clap requires one of --shape, --max-l1"),
    };

    let mut all_pass = true;
    let mut lines = Vec::new();
    let mut reports = Vec::new();
    for s in shapes {
        let g = CrystalGraph::generate(s);
        let r = verify_crystal(&g);
        let agree = r.e_side.degree_counts == r.f_side.degree_counts && r.e_side.applicable == r.f_side.applicable;
        all_pass &= r.passed() && agree;
        lines.push(shape_line(&r, agree));
        for (id, f) in &r.e_side.failures {
            lines.push(format!("  vertex {id} ({}): {f}", g.vertices()[*id].render()));
        }
        for (id, f) in &r.f_side.failures {
            lines.push(format!("  dual vertex {id} ({}): {f}", g.vertices()[*id].render()));
        }
        reports.push((r, agree));
    }

    let confluence = seed.map(|seed| (seed, confluence_disagreements(seed)));
    if let Some((seed, bad)) = confluence {
        all_pass &= bad == 0;
        lines.push(format!(
            "confluence: {CONFLUENCE_WORDS} random words, {bad} disagreements (seed {seed})"
        ));
    }
    lines.push(format!(
        "{} shapes: {}",
        reports.len(),
        if all_pass { "pass" } else { "FAIL" }
    ));

    let code = if all_pass { 0 } else { 1 };
    if json {
        let shapes: Vec<Value> = reports
            .iter()
            .map(|(r, agree)| {
                let mut v = serde_json::to_value(r).expect("reports serialize");
                v["f_side_counts_agree"] = json!(agree);
                v["passed"] = json!(r.passed() && *agree);
                v
            })
            .collect();
        let confluence =
            confluence.map(|(seed, bad)| json!({ "seed": seed, "words": CONFLUENCE_WORDS, "disagreements": bad }));
        emit_json(
            out,
            &json!({ "shapes": shapes, "confluence": confluence, "passed": all_pass }),
        )?;
    } else {
        emit(out, &(lines.join("\n") + "\n"))?;
    }
    Ok(code)
}

fn audit(path: &PathBuf, format: Format, out: &mut dyn Write) -> Outcome {
    let json = text_or_json(format)?;
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = GraphDocument::parse(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let report = audit_document(&doc).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let code = if report.is_clean() { 0 } else { 1 };

    if json {
        let mut v = serde_json::to_value(&report).expect("reports serialize");
        v["clean"] = json!(report.is_clean());
        emit_json(out, &v)?;
        return Ok(code);
    }

    let mut lines = vec![format!(
        "{} vertices, {} edges, {} applicable vertices",
        report.vertices, report.edges, report.applicable
    )];
    for w in &report.well_formedness {
        lines.push(format!("well-formedness: {w}"));
    }
    for flag in &report.flagged {
        for f in &flag.failures {
            lines.push(format!("vertex {}: {f}", flag.id));
        }
    }
    lines.push(if report.is_clean() {
        "clean".to_string()
    } else {
        "not a doubly laced crystal".to_string()
    });
    emit(out, &(lines.join("\n") + "\n"))?;
    Ok(code)
}
