//! The `gturan` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 enumeration cap or time budget exceeded.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gturan::constructions as build;
use gturan::detect::classify::{classify_structure_with, ClassTag};
use gturan::detect::count_cliques;
use gturan::formulas::{self, TheoremParams};
use gturan::oracle::{self, EnumerationConfig, OracleError, MAX_ORDER};
use gturan::report::{self, Format, Scope};
use gturan::{graph6, BigCount, Graph};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFY: u8 = 2;
pub const EXIT_CAP: u8 = 3;

/// Overrides the enumeration order cap (at most 10).
pub const CAP_ENV: &str = "GTURAN_MAX_N";

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Cap(String),
    Io(std::io::Error),
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::CapExceeded { .. } | OracleError::BudgetExceeded { .. } => {
                Failure::Cap(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<gturan::GraphError> for Failure {
    fn from(e: gturan::GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<formulas::FormulaError> for Failure {
    fn from(e: formulas::FormulaError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

#[derive(Parser, Debug)]
#[command(
    name = "gturan",
    version,
    about = "Generalized Turán numbers for a path and a clique"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named construction as graph6.
    Construct(ConstructArgs),
    /// Count r-cliques of graph6 input (argument or one graph per stdin line).
    Count {
        #[arg(long)]
        r: usize,
        graph: Option<String>,
    },
    /// Evaluate a closed form.
    Formula(FormulaArgs),
    /// Exact ex or ex_con by exhaustive search.
    Oracle(OracleArgs),
    /// Compare the oracle with the predicted values over a range of orders.
    Verify(VerifyArgs),
    /// Structural class of a connected free graph of large minimum degree.
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "disable-class", hide = true)]
        disable: Vec<String>,
        graph: Option<String>,
    },
    /// Delete vertices of degree below --delta and report the trace.
    Disintegrate {
        #[arg(long)]
        delta: usize,
        /// Only delete non-cut vertices of end blocks.
        #[arg(long)]
        preserve: bool,
        graph: Option<String>,
    },
    /// CSV of the closed forms over a parameter grid.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Turan,
    H,
    HMinus,
    DoubleStar,
    G1,
    G2,
    G3,
    G4,
    G5,
    TuranUnion,
    PairJoin,
    Path,
    Cycle,
    Star,
    Complete,
    Empty,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Number of Turán parts.
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    /// Copies of K_2 for pair-join.
    #[arg(long)]
    t: Option<usize>,
    /// pair-join: use K_2 instead of I_2 on top.
    #[arg(long)]
    clique: bool,
    /// g3: the replacing block as graph6.
    #[arg(long)]
    block: Option<String>,
    /// g3: vertex of the block glued to the center.
    #[arg(long, default_value_t = 0)]
    attach: usize,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    quantity: Quantity,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Quantity {
    /// Threshold case with both sides.
    #[arg(long)]
    case: bool,
    /// N_r(H_n(m, k)).
    #[arg(long)]
    h: bool,
    /// Predicted ex(n, K_r, {P_k, K_m}).
    #[arg(long)]
    ex: bool,
    /// Predicted ex_con(n, K_r, {P_k, K_m}).
    #[arg(long = "ex-con")]
    ex_con: bool,
    /// Edge extremal number for connected graphs.
    #[arg(long)]
    katona: bool,
    /// ex_con(n, K_r, P_k).
    #[arg(long)]
    luo: bool,
    /// δ_k.
    #[arg(long)]
    delta: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Forbidden path order.
    #[arg(long)]
    k: Option<usize>,
    /// Forbidden clique order.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    connected: bool,
    #[arg(long = "budget-secs")]
    budget_secs: Option<u64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    r: Option<usize>,
    /// Inclusive range such as 4..9.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long)]
    connected: bool,
    /// Check the structural classification instead of extremal values.
    #[arg(long)]
    classification: bool,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long = "budget-secs")]
    budget_secs: Option<u64>,
    #[arg(long = "disable-class", hide = true)]
    disable: Vec<String>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_parser = parse_range)]
    k: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    m: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range, default_value = "2..6")]
    r: RangeInclusive<usize>,
    /// Also evaluate the values at this order.
    #[arg(long)]
    n: Option<usize>,
}

/// `a..b` or `a..=b` (both inclusive) or a single number.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{x}' is not a non-negative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

/// Parses arguments and runs one command; returns the process exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let command_line: Vec<String> = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let result = match cli.command {
        Command::Construct(a) => construct(&a, out),
        Command::Count { r, graph } => count(r, graph, input, out),
        Command::Formula(a) => formula(&a, out),
        Command::Oracle(a) => run_oracle(&a, out),
        Command::Verify(a) if a.classification => verify_classification(&a, out),
        Command::Verify(a) => verify(&a, &command_line, out),
        Command::Classify {
            k,
            m,
            disable,
            graph,
        } => classify(k, m, &disable, graph, input, out),
        Command::Disintegrate {
            delta,
            preserve,
            graph,
        } => disintegrate(delta, preserve, graph, input, out),
        Command::Table(a) => table(&a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Verification(m) => (EXIT_VERIFY, m),
                Failure::Cap(m) => (EXIT_CAP, m),
                Failure::Io(e) => (EXIT_USAGE, e.to_string()),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn need(v: Option<usize>, flag: &str, family: Family) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for {family:?}")))
}

fn construct(a: &ConstructArgs, out: &mut dyn Write) -> Outcome {
    let f = a.family;
    let n = || need(a.n, "n", f);
    let k = || need(a.k, "k", f);
    let m = || need(a.m, "m", f);
    let g = match f {
        Family::Turan => build::turan(n()?, need(a.p, "p", f)?)?,
        Family::H => build::h_extremal(n()?, m()?, k()?)?,
        Family::HMinus => build::h_minus(n()?, m()?, k()?)?,
        Family::DoubleStar => build::double_star(need(a.a, "a", f)?, need(a.b, "b", f)?)?,
        Family::G1 => build::g1(n()?, k()?)?,
        Family::G2 => build::g2(need(a.n1, "n1", f)?, need(a.n2, "n2", f)?, k()?)?,
        Family::G3 => {
            let text = a
                .block
                .as_deref()
                .ok_or_else(|| Failure::Usage("--block is required for G3".into()))?;
            let b = parse_graph(text)?;
            build::g3(n()?, k()?, &b, a.attach)?
        }
        Family::G4 => build::g4(need(a.n1, "n1", f)?, need(a.n2, "n2", f)?)?,
        Family::G5 => build::g5(need(a.n1, "n1", f)?, need(a.n2, "n2", f)?)?,
        Family::TuranUnion => build::turan_union(n()?, k()?, m()?)?,
        Family::PairJoin => build::pair_join_matching(need(a.t, "t", f)?, a.clique)?,
        Family::Path => Graph::path(n()?)?,
        Family::Cycle => Graph::cycle(n()?)?,
        Family::Star => Graph::star(n()?)?,
        Family::Complete => Graph::complete(n()?)?,
        Family::Empty => Graph::empty(n()?)?,
    };
    writeln!(out, "{}", g.to_graph6())?;
    Ok(())
}

fn parse_graph(text: &str) -> Result<Graph, Failure> {
    graph6::decode(text.trim())
        .map_err(|e| Failure::Usage(format!("bad graph6 '{}': {e}", text.trim())))
}

/// The positional graph, or every non-empty stdin line.
fn read_graphs(arg: Option<String>, input: &mut dyn BufRead) -> Result<Vec<Graph>, Failure> {
    let lines: Vec<String> = match arg {
        Some(g) => vec![g],
        None => input
            .lines()
            .collect::<std::io::Result<Vec<_>>>()?
            .into_iter()
            .filter(|l| !l.trim().is_empty())
            .collect(),
    };
    if lines.is_empty() {
        return Err(Failure::Usage("no graph given".into()));
    }
    lines.iter().map(|l| parse_graph(l)).collect()
}

fn count(r: usize, arg: Option<String>, input: &mut dyn BufRead, out: &mut dyn Write) -> Outcome {
    for g in read_graphs(arg, input)? {
        writeln!(out, "{}", count_cliques(&g, r))?;
    }
    Ok(())
}

fn params(k: usize, m: Option<usize>, r: Option<usize>) -> Result<TheoremParams, Failure> {
    let m = m.ok_or_else(|| Failure::Usage("--m is required".into()))?;
    let r = r.ok_or_else(|| Failure::Usage("--r is required".into()))?;
    Ok(TheoremParams::new(k, m, r)?)
}

fn formula(a: &FormulaArgs, out: &mut dyn Write) -> Outcome {
    let n = || a.n.ok_or_else(|| Failure::Usage("--n is required".into()));
    let q = &a.quantity;
    if q.delta {
        writeln!(out, "{}", formulas::delta_k(a.k))?;
    } else if q.case {
        let label = formulas::threshold_case::<BigCount>(&params(a.k, a.m, a.r)?)?;
        writeln!(out, "{label}")?;
    } else if q.h {
        let m =
            a.m.ok_or_else(|| Failure::Usage("--m is required".into()))?;
        let r =
            a.r.ok_or_else(|| Failure::Usage("--r is required".into()))?;
        let v: BigCount = formulas::h_clique_count(n()?, m, a.k, r)?;
        writeln!(out, "{v}")?;
    } else if q.ex {
        let p = formulas::predicted_ex::<BigCount>(n()?, &params(a.k, a.m, a.r)?)?;
        let kind = if p.exact { "exact" } else { "upper-bound" };
        writeln!(out, "{} {} {kind}", p.value, p.case)?;
    } else if q.ex_con {
        let v: BigCount = formulas::predicted_ex_con(n()?, &params(a.k, a.m, a.r)?)?;
        writeln!(out, "{v}")?;
    } else if q.katona {
        let m =
            a.m.ok_or_else(|| Failure::Usage("--m is required".into()))?;
        let v: BigCount = formulas::katona_value(n()?, a.k, m)?;
        writeln!(out, "{v}")?;
    } else if q.luo {
        let r =
            a.r.ok_or_else(|| Failure::Usage("--r is required".into()))?;
        let v: BigCount = formulas::luo_value(n()?, a.k, r)?;
        writeln!(out, "{v}")?;
    }
    Ok(())
}

/// Cap from the environment, bounded by the hard limit.
fn limits(budget_secs: Option<u64>) -> Result<EnumerationConfig, Failure> {
    let mut config = EnumerationConfig::new(0);
    if let Ok(raw) = std::env::var(CAP_ENV) {
        let cap: usize = raw
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{CAP_ENV}='{raw}' is not a number")))?;
        if cap > MAX_ORDER {
            return Err(Failure::Usage(format!(
                "{CAP_ENV} is bounded at {MAX_ORDER}"
            )));
        }
        config = config.cap(cap);
    }
    if let Some(s) = budget_secs {
        config = config.budget(Duration::from_secs(s));
    }
    Ok(config)
}

fn run_oracle(a: &OracleArgs, out: &mut dyn Write) -> Outcome {
    let mut config = limits(a.budget_secs)?;
    config.n = a.n;
    let config = config.forbid(a.k, a.m).connected(a.connected);
    let res = oracle::ex_oracle_with(&config, a.r)?;
    log::info!("enumeration took {} ms", res.stats.elapsed_ms);
    writeln!(out, "value {}", res.value)?;
    writeln!(out, "classes {}", res.extremal.len())?;
    for w in &res.witness_graphs {
        writeln!(out, "{w}")?;
    }
    Ok(())
}

fn disabled_classes(names: &[String]) -> Result<Vec<ClassTag>, Failure> {
    let mut out = Vec::new();
    for n in names {
        out.extend(
            ClassTag::parse_set(n).ok_or_else(|| Failure::Usage(format!("unknown class '{n}'")))?,
        );
    }
    Ok(out)
}

fn verify(a: &VerifyArgs, command_line: &[String], out: &mut dyn Write) -> Outcome {
    let p = params(a.k, Some(a.m), a.r)?;
    let scope = if a.connected {
        Scope::Connected
    } else {
        Scope::All
    };
    let rows = oracle::verify_theorem_with(&p, a.n.clone(), scope, &limits(a.budget_secs)?)?;
    for (path, format) in [(&a.json, Format::Json), (&a.csv, Format::Csv)] {
        if let Some(path) = path {
            report::write_report(&rows, format, path)?;
            report::write_meta(&rows, path, command_line)?;
        }
    }
    write!(out, "{}", report::render_report(&rows, Format::Csv)?)?;
    let bad: Vec<usize> = rows
        .iter()
        .filter(|r| r.status.is_failure())
        .map(|r| r.n)
        .collect();
    if !bad.is_empty() {
        return Err(Failure::Verification(format!(
            "oracle below a feasible construction at n = {bad:?}"
        )));
    }
    Ok(())
}

fn verify_classification(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let disabled = disabled_classes(&a.disable)?;
    let rep = oracle::verify_classification_with(
        a.k,
        a.m,
        a.n.clone(),
        &limits(a.budget_secs)?,
        &disabled,
    )?;
    for level in &rep.levels {
        write!(out, "n={} total={}", level.n, level.total)?;
        for (tag, c) in &level.histogram {
            write!(out, " {tag}={c}")?;
        }
        writeln!(out)?;
        for g in &level.unclassified {
            writeln!(out, "unclassified {g}")?;
        }
    }
    if let Some(path) = &a.json {
        let mut s = serde_json::to_string_pretty(&rep).map_err(std::io::Error::from)?;
        s.push('\n');
        std::fs::write(path, s)?;
    }
    if !rep.is_clean() {
        return Err(Failure::Verification(format!(
            "{} graphs fit none of the structural cases",
            rep.unclassified_count()
        )));
    }
    Ok(())
}

fn classify(
    k: usize,
    m: usize,
    disable: &[String],
    arg: Option<String>,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Outcome {
    let disabled = disabled_classes(disable)?;
    let mut unclassified = 0;
    for g in read_graphs(arg, input)? {
        let c = classify_structure_with(&g, k, m, &disabled)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        if c.class_tag == ClassTag::Unclassified {
            unclassified += 1;
        }
        writeln!(
            out,
            "{}",
            serde_json::to_string(&c).map_err(std::io::Error::from)?
        )?;
    }
    if unclassified > 0 {
        return Err(Failure::Verification(format!(
            "{unclassified} graphs fit none of the structural cases"
        )));
    }
    Ok(())
}

fn disintegrate(
    delta: usize,
    preserve: bool,
    arg: Option<String>,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Outcome {
    for g in read_graphs(arg, input)? {
        let t = oracle::disintegrate(&g, delta, preserve);
        writeln!(
            out,
            "{}",
            serde_json::to_string(&t).map_err(std::io::Error::from)?
        )?;
    }
    Ok(())
}

fn table(a: &TableArgs, out: &mut dyn Write) -> Outcome {
    write!(
        out,
        "k,m,r,delta,case,lhs,rhs_numerator,rhs_denominator,has_h_minus"
    )?;
    if a.n.is_some() {
        write!(out, ",n,h_value,predicted_ex,exact")?;
    }
    writeln!(out)?;
    for k in a.k.clone() {
        for m in a.m.clone() {
            for r in a.r.clone() {
                let Ok(p) = TheoremParams::new(k, m, r) else {
                    continue;
                };
                let c = formulas::threshold_case::<BigCount>(&p)?;
                write!(
                    out,
                    "{k},{m},{r},{},{},{},{},{},{}",
                    p.delta(),
                    c.tag,
                    c.lhs,
                    c.rhs_numerator,
                    c.rhs_denominator,
                    p.has_h_minus()
                )?;
                if let Some(n) = a.n {
                    let h: BigCount = formulas::h_value(n, &p)?;
                    let e = formulas::predicted_ex::<BigCount>(n, &p)?;
                    write!(out, ",{n},{h},{},{}", e.value, e.exact)?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}
