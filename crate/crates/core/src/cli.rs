//! Command-line front end: enumeration, composition, exhaustive law
//! suites, free extensions into the boolean endomorphism operad, and
//! coherence synthesis.
//!
//! Output is deterministic — identical invocations produce byte-identical
//! bytes — and `--format json` emits a single self-describing document
//! with a top-level `format_version`. Exit status is 0 on success or an
//! all-pass suite, 1 when a suite reports at least one failing instance,
//! and 2 on usage, parse, or enumeration-ceiling errors.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cat::ExprModel;
use crate::coherence::{check_coherence_corpus, moveseq_bijection, synthesize};
use crate::diagrams::{check_algebra_gamma_compat, check_diagrams_expr, check_diagrams_word};
use crate::endo::{EndFn, EndOperad};
use crate::expr::Expr;
use crate::laws::{
    check_nonsym_axioms, check_operad_map, check_sym_axioms, mutant, Overflow,
};
use crate::parse::{split_top_level, ParseError};
use crate::perm::Permutation;
use crate::report::Report;
use crate::slots::Slotted;
use crate::sym::{FreeSymOperad, SymElem};
use crate::tree::{TPoint, Tree, V0Tree};
use crate::view::{Operad, TOperad, V0Operad, VOperad, ZOperad};

/// Version of the JSON report schema.
pub const FORMAT_VERSION: u32 = 1;

/// How many failing detail rows the text renderer prints.
const TEXT_FAILURE_ROWS: usize = 20;

#[derive(Parser)]
#[command(
    name = "smcop",
    version,
    about = "Enumerate, compose, and exhaustively law-check operads for symmetric monoidal structure"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the elements of an operad degree, one per line.
    Enumerate(EnumerateArgs),
    /// Compose an element with arguments and print the result.
    Compose(ComposeArgs),
    /// Run an exhaustive law suite and report per-law tallies.
    Check(CheckArgs),
    /// Build the free extension determined by generator images in the
    /// boolean endomorphism operad and law-check the induced map.
    FreeExt(FreeExtArgs),
    /// Synthesize the canonical structure isomorphism between two tensor
    /// expressions.
    Coherence(CoherenceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperadName {
    #[value(name = "V")]
    V,
    #[value(name = "V0")]
    V0,
    #[value(name = "Z")]
    Z,
    #[value(name = "T")]
    T,
    #[value(name = "LV")]
    Lv,
    #[value(name = "LZ")]
    Lz,
    #[value(name = "End2")]
    End2,
}

impl OperadName {
    fn as_str(self) -> &'static str {
        match self {
            OperadName::V => "V",
            OperadName::V0 => "V0",
            OperadName::Z => "Z",
            OperadName::T => "T",
            OperadName::Lv => "LV",
            OperadName::Lz => "LZ",
            OperadName::End2 => "End2",
        }
    }
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    operad: OperadName,
    /// Operad degree (open slot count).
    #[arg(long)]
    degree: usize,
    /// Internal-degree ceiling for the slotted operads (Z, LZ).
    #[arg(long, default_value_t = 4)]
    internal: usize,
    /// Refuse enumerations larger than this.
    #[arg(long, default_value_t = 500_000)]
    max_instances: usize,
}

#[derive(Args)]
struct ComposeArgs {
    #[arg(long, value_enum)]
    operad: OperadName,
    /// The outer element, in the operad's text grammar.
    #[arg(long)]
    outer: String,
    /// Comma-separated argument elements (commas inside brackets stay put).
    #[arg(long, default_value = "")]
    args: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Nonsym,
    Sym,
    Map,
    Diagrams,
    Algebra,
    CoherenceCorpus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    #[value(name = "v-to-z")]
    VToZ,
    #[value(name = "z-to-v0")]
    ZToV0,
    #[value(name = "v0-to-t")]
    V0ToT,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelName {
    Word,
    Expr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MutantName {
    /// Composition that forgets the outer parenthesization.
    DroppedParens,
    /// Equivariance with block sizes taken in permuted order.
    WrongBlockOrder,
    /// Slot substitution that forgets to shift the right factor.
    UnshiftedSlots,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    suite: SuiteName,
    /// Operad under test (nonsym: V, V0, Z, T; sym: LV, LZ, End2).
    #[arg(long, value_enum)]
    operad: Option<OperadName>,
    /// Result-measure ceiling: degree for V, V0, T, LV; internal degree
    /// for Z, LZ; arity for End2. Defaults are per-operad.
    #[arg(long)]
    bound: Option<usize>,
    /// Which structure-preserving map to check (suite `map`).
    #[arg(long, value_enum)]
    map: Option<MapName>,
    /// Which algebra model to use (suite `diagrams`).
    #[arg(long, value_enum, default_value_t = ModelName::Word)]
    model: ModelName,
    /// Alphabet size for the word model.
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    /// Maximum word length for the word model.
    #[arg(long, default_value_t = 2)]
    max_len: usize,
    /// Maximum total variable count for the expression model.
    #[arg(long, default_value_t = 4)]
    max_leaves: usize,
    /// Internal-degree ceiling for the algebra suite.
    #[arg(long, default_value_t = 2)]
    internal: usize,
    /// Arity ceiling for the algebra suite.
    #[arg(long, default_value_t = 2)]
    arity: usize,
    /// Distinct-variable ceiling for the coherence corpus.
    #[arg(long, default_value_t = 3)]
    max_vars: usize,
    /// Unit-leaf ceiling per expression for the coherence corpus.
    #[arg(long, default_value_t = 1)]
    max_units: usize,
    /// Refuse suites that would check more instances than this.
    #[arg(long, default_value_t = 500_000)]
    max_instances: usize,
    /// Swap in a deliberately broken view to confirm the suite notices.
    #[arg(long, value_enum)]
    mutate: Option<MutantName>,
}

#[derive(Args)]
struct FreeExtArgs {
    /// Source operad of the extension (V or Z).
    #[arg(long, value_enum)]
    operad: OperadName,
    /// Truth table of the binary generator's image, four bits in row order
    /// (0,0), (0,1), (1,0), (1,1) — e.g. `0111` for boolean or.
    #[arg(long)]
    generator: String,
    /// Image of the nullary generator (Z only): `0` or `1`.
    #[arg(long)]
    point: Option<String>,
    /// Result-measure ceiling for the induced-map check.
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, default_value_t = 500_000)]
    max_instances: usize,
}

#[derive(Args)]
struct CoherenceArgs {
    /// Source expression, e.g. `((x1*x2)*x3)`.
    #[arg(long)]
    source: String,
    /// Target expression over the same variable set.
    #[arg(long)]
    target: String,
}

/// Runs one invocation against an output stream and returns the exit
/// status. `argv` includes the program name.
pub fn dispatch<I, T, W>(argv: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.cmd {
        Cmd::Enumerate(args) => run_enumerate(args, cli.format, out),
        Cmd::Compose(args) => run_compose(args, cli.format, out),
        Cmd::Check(args) => run_check(args, cli.format, out),
        Cmd::FreeExt(args) => run_free_ext(args, cli.format, out),
        Cmd::Coherence(args) => run_coherence(args, cli.format, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(out, "error: {msg}");
            2
        }
    }
}

type CmdResult = Result<i32, String>;

fn run_enumerate(args: &EnumerateArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let texts = enumerate_texts(args)?;
    if texts.len() > args.max_instances {
        return Err(format!(
            "enumeration yields {} elements, over the ceiling {}; raise --max-instances",
            texts.len(),
            args.max_instances
        ));
    }
    match format {
        Format::Text => {
            for t in &texts {
                writeln!(out, "{t}").map_err(|e| e.to_string())?;
            }
        }
        Format::Json => {
            let mut doc = json!({
                "format_version": FORMAT_VERSION,
                "command": "enumerate",
                "operad": args.operad.as_str(),
                "degree": args.degree,
                "elements": texts,
            });
            if matches!(args.operad, OperadName::Z | OperadName::Lz) {
                doc["internal"] = json!(args.internal);
            }
            writeln!(out, "{doc}").map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn enumerate_texts(args: &EnumerateArgs) -> Result<Vec<String>, String> {
    let n = args.degree;
    Ok(match args.operad {
        OperadName::V => Tree::enumerate(n).iter().map(Tree::to_string).collect(),
        OperadName::V0 => V0Tree::enumerate(n).iter().map(V0Tree::to_string).collect(),
        OperadName::Z => Slotted::enumerate(n, args.internal)
            .iter()
            .map(Slotted::to_string)
            .collect(),
        OperadName::T => vec![TPoint(n).to_string()],
        OperadName::Lv => sym_texts(Tree::enumerate(n), n),
        OperadName::Lz => sym_texts(Slotted::enumerate(n, args.internal), n),
        OperadName::End2 => {
            let rows = 1usize
                .checked_shl(n as u32)
                .ok_or("degree too large for truth tables")?;
            let count = 1usize
                .checked_shl(rows as u32)
                .ok_or("degree too large for truth tables")?;
            if count > args.max_instances {
                return Err(format!(
                    "enumeration yields {count} elements, over the ceiling {}; raise --max-instances",
                    args.max_instances
                ));
            }
            (0..count)
                .map(|code| {
                    let table: Vec<usize> = (0..rows).map(|r| (code >> r) & 1).collect();
                    EndFn::new(2, n, table).expect("binary table").to_string()
                })
                .collect()
        }
    })
}

fn sym_texts<B: std::fmt::Display + Clone>(bases: Vec<B>, degree: usize) -> Vec<String> {
    let perms = Permutation::all(degree);
    let mut texts = Vec::with_capacity(bases.len() * perms.len());
    for b in &bases {
        for p in &perms {
            texts.push(SymElem::new(b.clone(), p.clone()).to_string());
        }
    }
    texts
}

fn parse_elem<E>(text: &str) -> Result<E, String>
where
    E: std::str::FromStr<Err = ParseError>,
{
    text.parse::<E>().map_err(|e| format!("`{text}`: {e}"))
}

/// Parses the `(base | perm)` grammar of the free symmetric operads.
fn parse_sym_elem<B>(text: &str) -> Result<(B, Permutation), String>
where
    B: std::str::FromStr<Err = ParseError>,
{
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| format!("`{t}`: expected `(base | perm)`"))?;
    let mut depth = 0usize;
    let mut split = None;
    for (i, b) in inner.bytes().enumerate() {
        match b {
            b'(' | b'[' | b'{' => depth += 1,
            b')' | b']' | b'}' => depth = depth.saturating_sub(1),
            b'|' if depth == 0 => {
                split = Some(i);
                break;
            }
            _ => {}
        }
    }
    let i = split.ok_or_else(|| format!("`{t}`: expected `(base | perm)`"))?;
    let base = parse_elem::<B>(inner[..i].trim())?;
    let perm = parse_elem::<Permutation>(inner[i + 1..].trim())?;
    Ok((base, perm))
}

fn split_args(csv: &str) -> Vec<&str> {
    if csv.trim().is_empty() {
        return Vec::new();
    }
    split_top_level(csv)
}

fn compose_in<O>(view: &O, outer: O::Elem, args: Vec<O::Elem>) -> Result<String, String>
where
    O: Operad,
{
    let want = view.degree(&outer);
    if args.len() != want {
        return Err(format!(
            "outer element has degree {want} but {} arguments were given",
            args.len()
        ));
    }
    Ok(view.gamma(&outer, &args).to_string())
}

fn run_compose(args: &ComposeArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let parts = split_args(&args.args);
    let result = match args.operad {
        OperadName::V => {
            let outer: Tree = parse_elem(&args.outer)?;
            let xs = parts.iter().map(|p| parse_elem(p)).collect::<Result<Vec<Tree>, _>>()?;
            outer.gamma(&xs).map_err(|e| e.to_string())?.to_string()
        }
        OperadName::V0 => {
            let outer: V0Tree = parse_elem(&args.outer)?;
            let xs = parts.iter().map(|p| parse_elem(p)).collect::<Result<Vec<V0Tree>, _>>()?;
            outer.gamma(&xs).map_err(|e| e.to_string())?.to_string()
        }
        OperadName::Z => {
            let outer: Slotted = parse_elem(&args.outer)?;
            let xs = parts.iter().map(|p| parse_elem(p)).collect::<Result<Vec<Slotted>, _>>()?;
            outer.gamma(&xs).map_err(|e| e.to_string())?.to_string()
        }
        OperadName::T => {
            let outer: TPoint = parse_elem(&args.outer)?;
            let xs = parts.iter().map(|p| parse_elem(p)).collect::<Result<Vec<TPoint>, _>>()?;
            outer.gamma(&xs).map_err(|e| e.to_string())?.to_string()
        }
        OperadName::Lv => {
            let view = FreeSymOperad::new(VOperad);
            let (base, perm) = parse_sym_elem::<Tree>(&args.outer)?;
            let outer = view.elem(base, perm).map_err(|e| e.to_string())?;
            let xs = parts
                .iter()
                .map(|p| {
                    let (b, q) = parse_sym_elem::<Tree>(p)?;
                    view.elem(b, q).map_err(|e| e.to_string())
                })
                .collect::<Result<Vec<_>, String>>()?;
            compose_in(&view, outer, xs)?
        }
        OperadName::Lz => {
            let view = FreeSymOperad::new(ZOperad);
            let (base, perm) = parse_sym_elem::<Slotted>(&args.outer)?;
            let outer = view.elem(base, perm).map_err(|e| e.to_string())?;
            let xs = parts
                .iter()
                .map(|p| {
                    let (b, q) = parse_sym_elem::<Slotted>(p)?;
                    view.elem(b, q).map_err(|e| e.to_string())
                })
                .collect::<Result<Vec<_>, String>>()?;
            compose_in(&view, outer, xs)?
        }
        OperadName::End2 => {
            return Err("compose does not support End2: truth tables have no input grammar".into())
        }
    };
    match format {
        Format::Text => writeln!(out, "{result}").map_err(|e| e.to_string())?,
        Format::Json => {
            let doc = json!({
                "format_version": FORMAT_VERSION,
                "command": "compose",
                "operad": args.operad.as_str(),
                "outer": args.outer,
                "args": parts,
                "result": result,
            });
            writeln!(out, "{doc}").map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn overflow_msg(o: Overflow) -> String {
    format!("{o}; raise --max-instances")
}

fn run_check(args: &CheckArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let limit = args.max_instances;
    let report = match args.suite {
        SuiteName::Nonsym => check_nonsym_suite(args)?,
        SuiteName::Sym => check_sym_suite(args)?,
        SuiteName::Map => {
            let map = args.map.ok_or("suite `map` needs --map")?;
            require_no_mutant(args)?;
            let r = match map {
                MapName::VToZ => check_operad_map(
                    "v-to-z",
                    |t: &Tree| Slotted::fully_slotted(t.clone()),
                    &VOperad,
                    &ZOperad,
                    args.bound.unwrap_or(5),
                    limit,
                ),
                MapName::ZToV0 => check_operad_map(
                    "z-to-v0",
                    Slotted::project_v0,
                    &ZOperad,
                    &V0Operad,
                    args.bound.unwrap_or(4),
                    limit,
                ),
                MapName::V0ToT => check_operad_map(
                    "v0-to-t",
                    V0Tree::to_point,
                    &V0Operad,
                    &TOperad,
                    args.bound.unwrap_or(5),
                    limit,
                ),
            };
            r.map_err(overflow_msg)?
        }
        SuiteName::Diagrams => {
            require_no_mutant(args)?;
            match args.model {
                ModelName::Word => {
                    check_diagrams_word(args.alphabet, args.max_len, limit).map_err(overflow_msg)?
                }
                ModelName::Expr => check_diagrams_expr(args.max_leaves, limit).map_err(overflow_msg)?,
            }
        }
        SuiteName::Algebra => {
            require_no_mutant(args)?;
            match args.model {
                ModelName::Word => crate::diagrams::check_word_algebra(
                    args.alphabet,
                    args.max_len,
                    args.internal,
                    args.arity,
                    limit,
                )
                .map_err(overflow_msg)?,
                ModelName::Expr => {
                    let inputs = crate::diagrams::expr_tuples(1, args.max_leaves)
                        .into_iter()
                        .flatten()
                        .collect::<Vec<Expr>>();
                    check_algebra_gamma_compat(&ExprModel, &inputs, args.internal, args.arity, limit)
                        .map_err(overflow_msg)?
                }
            }
        }
        SuiteName::CoherenceCorpus => {
            require_no_mutant(args)?;
            check_coherence_corpus(args.max_vars, args.max_units, limit).map_err(overflow_msg)?
        }
    };
    emit_report(&report, format, out)?;
    Ok(if report.all_pass() { 0 } else { 1 })
}

fn require_no_mutant(args: &CheckArgs) -> Result<(), String> {
    if args.mutate.is_some() {
        return Err("--mutate applies only to `nonsym` (V, Z) and `sym` (LV) suites".into());
    }
    Ok(())
}

fn check_nonsym_suite(args: &CheckArgs) -> Result<Report, String> {
    let operad = args.operad.ok_or("suite `nonsym` needs --operad")?;
    let limit = args.max_instances;
    let run = match (operad, args.mutate) {
        (OperadName::V, None) => check_nonsym_axioms(&VOperad, args.bound.unwrap_or(6), limit),
        (OperadName::V, Some(MutantName::DroppedParens)) => {
            check_nonsym_axioms(&mutant::DroppedParensV, args.bound.unwrap_or(6), limit)
        }
        (OperadName::V0, None) => check_nonsym_axioms(&V0Operad, args.bound.unwrap_or(5), limit),
        (OperadName::Z, None) => check_nonsym_axioms(&ZOperad, args.bound.unwrap_or(4), limit),
        (OperadName::Z, Some(MutantName::UnshiftedSlots)) => {
            check_nonsym_axioms(&mutant::UnshiftedZ, args.bound.unwrap_or(4), limit)
        }
        (OperadName::T, None) => check_nonsym_axioms(&TOperad, args.bound.unwrap_or(6), limit),
        (_, Some(_)) => {
            return Err(
                "--mutate pairs: dropped-parens with V, unshifted-slots with Z (suite nonsym)"
                    .into(),
            )
        }
        _ => return Err("suite `nonsym` covers V, V0, Z, T".into()),
    };
    run.map_err(overflow_msg)
}

fn check_sym_suite(args: &CheckArgs) -> Result<Report, String> {
    let operad = args.operad.ok_or("suite `sym` needs --operad")?;
    let limit = args.max_instances;
    let run = match (operad, args.mutate) {
        (OperadName::Lv, None) => {
            check_sym_axioms(&FreeSymOperad::new(VOperad), args.bound.unwrap_or(4), limit)
        }
        (OperadName::Lv, Some(MutantName::WrongBlockOrder)) => {
            check_sym_axioms(&mutant::WrongBlockOrderLV, args.bound.unwrap_or(4), limit)
        }
        (OperadName::Lz, None) => {
            check_sym_axioms(&FreeSymOperad::new(ZOperad), args.bound.unwrap_or(3), limit)
        }
        (OperadName::End2, None) => {
            check_sym_axioms(&EndOperad::new(2), args.bound.unwrap_or(2), limit)
        }
        (_, Some(_)) => {
            return Err("--mutate pairs: wrong-block-order with LV (suite sym)".into())
        }
        _ => return Err("suite `sym` covers LV, LZ, End2".into()),
    };
    run.map_err(overflow_msg)
}

fn run_free_ext(args: &FreeExtArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let generator = parse_end2_table(&args.generator)?;
    let target = EndOperad::new(2);
    let mut report = match args.operad {
        OperadName::V => {
            if args.point.is_some() {
                return Err("--point applies only to Z extensions".into());
            }
            let ev = crate::tree::TreeEvaluator::new(&target, generator)
                .map_err(|e| e.to_string())?;
            check_operad_map(
                "free-ext",
                |t: &Tree| ev.eval(t),
                &VOperad,
                &target,
                args.bound.unwrap_or(5),
                args.max_instances,
            )
            .map_err(overflow_msg)?
        }
        OperadName::Z => {
            let point_text = args.point.as_deref().ok_or("Z extensions need --point 0|1")?;
            let point = parse_end2_point(point_text)?;
            let ev = crate::slots::SlotEvaluator::new(&target, point, generator)
                .map_err(|e| e.to_string())?;
            check_operad_map(
                "free-ext",
                |z: &Slotted| ev.eval(z),
                &ZOperad,
                &target,
                args.bound.unwrap_or(3),
                args.max_instances,
            )
            .map_err(overflow_msg)?
        }
        _ => return Err("free-ext extends from V or Z".into()),
    };
    report
        .params
        .push(("generator".to_string(), args.generator.clone()));
    if let Some(p) = &args.point {
        report.params.push(("point".to_string(), p.clone()));
    }
    emit_report(&report, format, out)?;
    Ok(if report.all_pass() { 0 } else { 1 })
}

fn parse_end2_table(bits: &str) -> Result<EndFn, String> {
    let table: Vec<usize> = bits
        .trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(format!("`{bits}`: generator must be bits")),
        })
        .collect::<Result<_, _>>()?;
    if table.len() != 4 {
        return Err(format!(
            "`{bits}`: a binary generator needs exactly 4 bits, one per input row"
        ));
    }
    EndFn::new(2, 2, table).map_err(|e| e.to_string())
}

fn parse_end2_point(bit: &str) -> Result<EndFn, String> {
    match bit.trim() {
        "0" => EndFn::constant(2, 0).map_err(|e| e.to_string()),
        "1" => EndFn::constant(2, 1).map_err(|e| e.to_string()),
        other => Err(format!("`{other}`: --point must be 0 or 1")),
    }
}

fn run_coherence(args: &CoherenceArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let source: Expr = args.source.parse().map_err(|e| format!("--source {e}"))?;
    let target: Expr = args.target.parse().map_err(|e| format!("--target {e}"))?;
    let seq = synthesize(&source, &target).map_err(|e| e.to_string())?;
    let bijection = moveseq_bijection(&seq).map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            writeln!(out, "source: {source}").map_err(|e| e.to_string())?;
            writeln!(out, "target: {target}").map_err(|e| e.to_string())?;
            writeln!(out, "moves: {}", seq.len()).map_err(|e| e.to_string())?;
            for m in &seq.moves {
                writeln!(out, "  {m}").map_err(|e| e.to_string())?;
            }
            writeln!(out, "bijection: {bijection}").map_err(|e| e.to_string())?;
        }
        Format::Json => {
            let doc = json!({
                "format_version": FORMAT_VERSION,
                "command": "coherence",
                "source": source.to_string(),
                "target": target.to_string(),
                "moves": seq.moves,
                "bijection": bijection.one_based_images(),
            });
            writeln!(out, "{doc}").map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn emit_report(report: &Report, format: Format, out: &mut dyn Write) -> Result<(), String> {
    match format {
        Format::Text => render_report_text(report, out).map_err(|e| e.to_string()),
        Format::Json => {
            let doc = json!({
                "format_version": FORMAT_VERSION,
                "command": "check",
                "report": report,
            });
            writeln!(out, "{doc}").map_err(|e| e.to_string())
        }
    }
}

fn render_report_text(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "suite: {}", report.suite)?;
    for (k, v) in &report.params {
        writeln!(out, "  {k} = {v}")?;
    }
    let width = report
        .stats
        .iter()
        .map(|s| s.law.len())
        .max()
        .unwrap_or(3)
        .max("law".len());
    writeln!(out, "{:<width$}  {:>9}  {:>7}", "law", "checked", "failed")?;
    for s in &report.stats {
        writeln!(out, "{:<width$}  {:>9}  {:>7}", s.law, s.total, s.failed)?;
    }
    let failures: Vec<_> = report.failures().collect();
    if !failures.is_empty() {
        writeln!(
            out,
            "failing instances (showing {} of {}):",
            failures.len().min(TEXT_FAILURE_ROWS),
            report.failed()
        )?;
        for inst in failures.iter().take(TEXT_FAILURE_ROWS) {
            writeln!(
                out,
                "  {} at {}: expected {}, got {}",
                inst.law, inst.operands, inst.expected, inst.actual
            )?;
        }
    }
    writeln!(out, "result: {}", report.summary())?;
    Ok(())
}
