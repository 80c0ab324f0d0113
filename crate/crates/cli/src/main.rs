//! Command-line front end: ordinal terms, tree terms, gap trees, Higman's
//! order and the verification suites.

use std::io::{self, BufRead};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thetatree::collapse::ord_to_tree;
use thetatree::gap::{from_gap, gap_leq, in_t2bar, parse_labeled_tree, to_gap, LabeledTree};
use thetatree::ordinal::{
    coefficient_set, complexity, max_coefficient, natural_product, natural_sum, parse, try_compare,
    universe, validate, EnumBounds, Ordinal, System,
};
use thetatree::text::ParseError;
use thetatree::tree::{enumerate, left_set_bounded, parse_tree_term, t_leq, TreeTerm};
use thetatree::verify::{run_suite, Config, Suite};
use thetatree::wpo::{higman_leq, parse_wexpr, FinitePoset, WExpr};

#[derive(Parser)]
#[command(
    name = "thetatree",
    version,
    about = "Ordinal notations, tree orders and gap embeddings"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Opts {
    /// Print one JSON record per line.
    #[arg(long, global = true)]
    json: bool,
    /// Print trees as Graphviz DOT.
    #[arg(long, global = true)]
    dot: bool,
    /// Notation system for ordinal terms.
    #[arg(long, global = true, value_enum, default_value_t = SystemArg::Full)]
    system: SystemArg,
    /// Seed for randomised suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Size bound (complexity, term size, node count or length).
    #[arg(long, global = true)]
    size: Option<usize>,
    /// Number of random samples.
    #[arg(long, global = true)]
    samples: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Full,
    Restricted,
}

impl From<SystemArg> for System {
    fn from(s: SystemArg) -> System {
        match s {
            SystemArg::Full => System::Full,
            SystemArg::Restricted => System::Restricted,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Ordinal terms.
    #[command(subcommand)]
    Ord(OrdCmd),
    /// Terms of T(W) for a constructor expression W.
    #[command(subcommand)]
    Tree(TreeCmd),
    /// Labelled trees under the gap-embedding order.
    #[command(subcommand)]
    Gap(GapCmd),
    /// Higman's order on sequences over a finite poset, e.g.
    /// `higman "P{3;0<1}" "[0,2]" "[1,2,2]"`. Without sequences, reads
    /// tab-separated pairs from standard input.
    Higman {
        poset: String,
        xs: Option<String>,
        ys: Option<String>,
    },
    /// Runs a verification suite, or `all` of them.
    Verify { suite: String },
}

#[derive(Subcommand)]
enum OrdCmd {
    /// Compares two terms (LT, EQ or GT); without terms, reads
    /// tab-separated pairs from standard input.
    Cmp {
        a: Option<String>,
        b: Option<String>,
    },
    /// The largest coefficient k(a).
    K { a: String },
    /// The coefficient set K(a).
    Kset { a: String },
    /// The natural sum.
    Sum { a: String, b: String },
    /// The natural product.
    Prod { a: String, b: String },
    /// The tree term g(a) in T(B(_)).
    G { a: String },
    /// Checks the formation rules of the system.
    Validate { a: String },
    /// Lists every term up to complexity `--size`.
    Enum {
        #[arg(long, default_value_t = 2)]
        summands: usize,
        #[arg(long, default_value_t = 2)]
        monomials: usize,
        #[arg(long)]
        countable: bool,
    },
}

#[derive(Subcommand)]
enum TreeCmd {
    /// Decides s <= t in T(W); without terms, reads tab-separated pairs from
    /// standard input.
    Leq {
        w: String,
        s: Option<String>,
        t: Option<String>,
    },
    /// Lists every term of T(W) up to size `--size`.
    Enum { w: String },
    /// Lists the terms up to size `--size` outside the upper cone of t.
    Leftset { w: String, t: String },
}

#[derive(Subcommand)]
enum GapCmd {
    /// Decides gap embeddability; without trees, reads tab-separated pairs
    /// from standard input.
    Leq {
        a: Option<String>,
        b: Option<String>,
        /// Allow siblings to be reordered.
        #[arg(long)]
        unstructured: bool,
    },
    /// The T2-bar tree of a term of T(B(_)).
    IsoTo { term: String },
    /// The term of T(B(_)) of a T2-bar tree.
    IsoFrom { tree: String },
    /// Membership in T2-bar.
    CheckT2bar { tree: String },
}

/// Why a command could not produce an answer; always exit status 2.
struct Failure(String);

impl Failure {
    fn parse(src: &str, e: &ParseError) -> Self {
        Failure(format!("{e}\n  {src}\n  {}^", " ".repeat(e.pos)))
    }
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.opts) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, opts: Opts) -> Outcome {
    match cmd {
        Command::Ord(c) => ord(c, opts),
        Command::Tree(c) => tree(c, opts),
        Command::Gap(c) => gap(c, opts),
        Command::Higman { poset, xs, ys } => higman(&poset, xs, ys, opts),
        Command::Verify { suite } => verify(&suite, opts),
    }
}

fn emit(opts: Opts, text: impl std::fmt::Display, record: Value) {
    if opts.json {
        println!("{record}");
    } else {
        println!("{text}");
    }
}

fn decision(value: bool) -> ExitCode {
    if value {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Runs a binary decision on the given pair, or on every tab-separated pair
/// read from standard input; exit 0 only if every answer is true.
fn pairs(
    a: Option<String>,
    b: Option<String>,
    opts: Opts,
    mut decide: impl FnMut(&str, &str) -> Result<bool, Failure>,
) -> Outcome {
    let mut all = true;
    let mut one = |a: &str, b: &str| -> Result<(), Failure> {
        let v = decide(a, b)?;
        all &= v;
        emit(opts, v, json!({ "inputs": [a, b], "result": v }));
        Ok(())
    };
    match (a, b) {
        (Some(a), Some(b)) => one(&a, &b)?,
        (None, None) => {
            for line in io::stdin().lock().lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let (a, b) = line
                    .split_once('\t')
                    .ok_or_else(|| Failure(format!("expected a tab-separated pair: {line}")))?;
                one(a, b)?;
            }
        }
        _ => return Err(Failure("give both inputs or neither".into())),
    }
    Ok(decision(all))
}

fn read_ord(src: &str, sys: System) -> Result<Ordinal, Failure> {
    let t = parse(src, sys).map_err(|e| Failure::parse(src, &e))?;
    validate(&t, sys)?;
    Ok(t)
}

fn ord(cmd: OrdCmd, opts: Opts) -> Outcome {
    let sys = System::from(opts.system);
    let is_sum = matches!(cmd, OrdCmd::Sum { .. });
    match cmd {
        OrdCmd::Cmp { a, b } => {
            let cmp = |a: &str, b: &str| -> Result<&'static str, Failure> {
                let o = try_compare(&read_ord(a, sys)?, &read_ord(b, sys)?)?;
                Ok(match o {
                    std::cmp::Ordering::Less => "LT",
                    std::cmp::Ordering::Equal => "EQ",
                    std::cmp::Ordering::Greater => "GT",
                })
            };
            let one = |a: &str, b: &str| -> Result<(), Failure> {
                let r = cmp(a, b)?;
                emit(opts, r, json!({ "inputs": [a, b], "result": r }));
                Ok(())
            };
            match (a, b) {
                (Some(a), Some(b)) => one(&a, &b)?,
                (None, None) => {
                    for line in io::stdin().lock().lines() {
                        let line = line?;
                        if let Some((a, b)) = line.split_once('\t') {
                            one(a, b)?;
                        } else if !line.trim().is_empty() {
                            return Err(Failure(format!("expected a tab-separated pair: {line}")));
                        }
                    }
                }
                _ => return Err(Failure("give both terms or neither".into())),
            }
            Ok(ExitCode::SUCCESS)
        }
        OrdCmd::K { a } => {
            let k = max_coefficient(&read_ord(&a, sys)?);
            emit(opts, &k, json!({ "input": a, "result": k.to_string() }));
            Ok(ExitCode::SUCCESS)
        }
        OrdCmd::Kset { a } => {
            let ks: Vec<String> = coefficient_set(&read_ord(&a, sys)?)
                .iter()
                .map(Ordinal::to_string)
                .collect();
            emit(opts, ks.join("\n"), json!({ "input": a, "result": ks }));
            Ok(ExitCode::SUCCESS)
        }
        OrdCmd::Sum { a, b } | OrdCmd::Prod { a, b } => {
            let (x, y) = (read_ord(&a, sys)?, read_ord(&b, sys)?);
            let r = if is_sum {
                natural_sum(&x, &y, sys)?
            } else {
                natural_product(&x, &y, sys)?
            };
            emit(
                opts,
                &r,
                json!({ "inputs": [a, b], "result": r.to_string() }),
            );
            Ok(ExitCode::SUCCESS)
        }
        OrdCmd::G { a } => {
            let t = ord_to_tree(&read_ord(&a, System::Full)?)?;
            print_term(&t, opts);
            Ok(ExitCode::SUCCESS)
        }
        OrdCmd::Validate { a } => {
            let t = parse(&a, sys).map_err(|e| Failure::parse(&a, &e))?;
            let v = validate(&t, sys);
            let text = match &v {
                Ok(()) => "true".to_string(),
                Err(e) => format!("false: {e}"),
            };
            let reason = v.as_ref().err().map(|e| e.to_string());
            emit(
                opts,
                text,
                json!({ "input": a, "result": v.is_ok(), "reason": reason }),
            );
            Ok(decision(v.is_ok()))
        }
        OrdCmd::Enum {
            summands,
            monomials,
            countable,
        } => {
            let g = opts.size.unwrap_or(2) as u32;
            let bounds = EnumBounds::new(g)
                .summands(summands)
                .monomials(monomials)
                .countable_only(countable);
            for t in universe(sys, bounds) {
                let c = complexity(&t, sys);
                emit(opts, &t, json!({ "term": t.to_string(), "complexity": c }));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_wexpr(src: &str) -> Result<WExpr, Failure> {
    parse_wexpr(src).map_err(|e| Failure::parse(src, &e))
}

fn read_term(src: &str, w: &WExpr) -> Result<TreeTerm, Failure> {
    parse_tree_term(src, w).map_err(|e| match e {
        thetatree::tree::TreeError::Parse(p) => Failure::parse(src, &p),
        other => Failure(other.to_string()),
    })
}

fn print_term(t: &TreeTerm, opts: Opts) {
    if opts.dot {
        print!("{}", t.to_dot());
    } else {
        emit(opts, t, json!({ "result": t.to_string() }));
    }
}

fn print_labeled(t: &LabeledTree, opts: Opts) {
    if opts.dot {
        print!("{}", t.to_dot());
    } else {
        emit(opts, t, json!({ "result": t.to_string() }));
    }
}

fn tree(cmd: TreeCmd, opts: Opts) -> Outcome {
    let size = opts.size.unwrap_or(5);
    match cmd {
        TreeCmd::Leq { w, s, t } => {
            let w = read_wexpr(&w)?;
            pairs(s, t, opts, |s, t| {
                Ok(t_leq(&read_term(s, &w)?, &read_term(t, &w)?, &w)?)
            })
        }
        TreeCmd::Enum { w } => {
            for t in enumerate(&read_wexpr(&w)?, size) {
                print_term(&t, opts);
            }
            Ok(ExitCode::SUCCESS)
        }
        TreeCmd::Leftset { w, t } => {
            let w = read_wexpr(&w)?;
            let t = read_term(&t, &w)?;
            t.check_shape(&w)?;
            for s in left_set_bounded(&t, &w, size) {
                print_term(&s, opts);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_labeled(src: &str) -> Result<LabeledTree, Failure> {
    parse_labeled_tree(src).map_err(|e| Failure::parse(src, &e))
}

fn gap(cmd: GapCmd, opts: Opts) -> Outcome {
    let b = WExpr::btree(WExpr::Hole);
    match cmd {
        GapCmd::Leq { a, b, unstructured } => pairs(a, b, opts, |a, b| {
            Ok(gap_leq(&read_labeled(a)?, &read_labeled(b)?, !unstructured))
        }),
        GapCmd::IsoTo { term } => {
            print_labeled(&to_gap(&read_term(&term, &b)?)?, opts);
            Ok(ExitCode::SUCCESS)
        }
        GapCmd::IsoFrom { tree } => {
            print_term(&from_gap(&read_labeled(&tree)?)?, opts);
            Ok(ExitCode::SUCCESS)
        }
        GapCmd::CheckT2bar { tree } => {
            let v = in_t2bar(&read_labeled(&tree)?);
            emit(opts, v, json!({ "input": tree, "result": v }));
            Ok(decision(v))
        }
    }
}

fn higman(poset: &str, xs: Option<String>, ys: Option<String>, opts: Opts) -> Outcome {
    let p: FinitePoset = match read_wexpr(poset)? {
        WExpr::Const(p) => p,
        other => {
            return Err(Failure(format!(
                "expected a poset literal P{{n;…}}, got {other}"
            )))
        }
    };
    let seq = |s: &str| -> Result<Vec<usize>, Failure> {
        let v: Vec<usize> = serde_json::from_str(s)
            .map_err(|e| Failure(format!("expected a sequence like [0, 1]: {e}")))?;
        match v.iter().find(|&&x| x >= p.size()) {
            Some(x) => Err(Failure(format!("{x} is not an element of {p}"))),
            None => Ok(v),
        }
    };
    pairs(xs, ys, opts, |a, b| {
        Ok(higman_leq(&seq(a)?, &seq(b)?, |x, y| p.leq(*x, *y)))
    })
}

fn verify(name: &str, opts: Opts) -> Outcome {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name.parse()?]
    };
    let cfg = Config {
        size: opts.size,
        samples: opts.samples,
        seed: opts.seed,
    };
    let mut ok = true;
    for s in suites {
        let report = run_suite(s, &cfg);
        ok &= report.passed();
        if opts.json {
            println!("{}", serde_json::to_string(&report)?);
        } else {
            print!("{report}");
        }
    }
    Ok(decision(ok))
}
