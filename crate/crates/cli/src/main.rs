use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use semiorder::labeled::{labeled_series_exact, labeled_series_leq, substitute_one_minus_exp};
use semiorder::oracle::{enumerate_semiorders_unbounded, MAX_VECTOR_N};
use semiorder::unlabeled::{count_leq_upto, series_exact, series_leq};
use semiorder::{
    count_trunk_trees, dyck_to_semiorder, semiorder_to_dyck, semiorder_to_tree, tree_to_semiorder,
    verify, DyckPath, IntegerSeries, Method, OrderedTree, Semiorder,
};

#[derive(Parser, Debug)]
#[command(
    name = "semiorder",
    version,
    about = "Count, enumerate and convert semiorders of bounded length"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of n-element semiorders of length exactly h (or at most h)
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        height: usize,
        /// Count length at most h instead of exactly h
        #[arg(long)]
        at_most: bool,
        /// Count labeled semiorders on {1..n}
        #[arg(long)]
        labeled: bool,
        #[arg(long, value_enum, default_value_t = Mode::Convolution)]
        mode: Mode,
        /// Recompute through the series route and fail on disagreement
        #[arg(long)]
        check: bool,
    },
    /// List canonical vectors in lexicographic order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_height: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Vector)]
        format: Format,
        /// Allow n above the enumeration cap
        #[arg(long)]
        force: bool,
    },
    /// Convert between vectors, trees and Dyck words
    Map {
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Coefficients of a generating function, comma separated
    Series {
        #[arg(long)]
        height: usize,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        labeled: bool,
        #[arg(long)]
        at_most: bool,
    },
    /// Distinct trunk trees of a length-at-most-one semiorder
    TrunkTrees {
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Run a self-consistency suite
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Convolution,
    Alternating,
    Series,
    Trig,
    Closed,
}

impl From<Mode> for Method {
    fn from(m: Mode) -> Method {
        match m {
            Mode::Convolution => Method::Convolution,
            Mode::Alternating => Method::Alternating,
            Mode::Series => Method::Series,
            Mode::Trig => Method::Trig,
            Mode::Closed => Method::Closed,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Vector,
    Tree,
    Dyck,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteArg {
    All,
    Bijection,
    Recurrences,
    Labeled,
    Trunk,
    Oracle,
}

impl From<SuiteArg> for verify::Suite {
    fn from(s: SuiteArg) -> verify::Suite {
        match s {
            SuiteArg::All => verify::Suite::All,
            SuiteArg::Bijection => verify::Suite::Bijection,
            SuiteArg::Recurrences => verify::Suite::Recurrences,
            SuiteArg::Labeled => verify::Suite::Labeled,
            SuiteArg::Trunk => verify::Suite::Trunk,
            SuiteArg::Oracle => verify::Suite::Oracle,
        }
    }
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<semiorder::Error> for Failure {
    fn from(e: semiorder::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let line = rendered
                .lines()
                .next()
                .unwrap_or("error: invalid arguments");
            eprintln!("{line}");
            return ExitCode::from(1);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(cli.command, &mut out).and_then(|()| Ok(out.flush()?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = out.flush();
            eprintln!("mismatch: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Count {
            n,
            height,
            at_most,
            labeled,
            mode,
            check,
        } => count(out, n, height, at_most, labeled, mode.into(), check),
        Command::Enumerate {
            n,
            max_height,
            format,
            force,
        } => enumerate(out, n, max_height, format, force),
        Command::Map { from, to, input } => {
            let s = parse(from, &input)?;
            writeln!(out, "{}", render(&s, to))?;
            Ok(())
        }
        Command::Series {
            height,
            terms,
            labeled,
            at_most,
        } => series(out, height, terms, labeled, at_most),
        Command::TrunkTrees { rho, count_only } => trunk_trees(out, &rho, count_only),
        Command::Verify { suite, max_n } => {
            let checks = verify::run(suite.into(), max_n)?;
            let mut bad = 0;
            for c in &checks {
                writeln!(out, "{c}")?;
                bad += usize::from(!c.ok);
            }
            if bad > 0 {
                return Err(Failure::Mismatch(format!(
                    "{bad} of {} checks failed",
                    checks.len()
                )));
            }
            Ok(())
        }
    }
}

/// `f_{<=g}(0..=n)` by `method`, with `g = -1` meaning the family of the empty set.
fn leq_upto(n: usize, g: Option<usize>, method: Method) -> semiorder::Result<Vec<BigUint>> {
    match g {
        None => Ok((0..=n).map(|m| BigUint::from(u8::from(m == 0))).collect()),
        Some(g) => count_leq_upto(n, g, method),
    }
}

/// Ordinary coefficients `0..=n` of the requested family.
fn unlabeled_counts(
    n: usize,
    h: usize,
    at_most: bool,
    method: Method,
) -> semiorder::Result<Vec<BigUint>> {
    let top = leq_upto(n, Some(h), method)?;
    if at_most {
        return Ok(top);
    }
    let below = match (h.checked_sub(1), method) {
        // Closed forms exist only for a few heights; the lower term falls back.
        (Some(g), Method::Closed) if g != 1 && g != 3 => leq_upto(n, Some(g), Method::Convolution)?,
        (g, _) => leq_upto(n, g, method)?,
    };
    Ok(top
        .iter()
        .zip(&below)
        .enumerate()
        .map(|(m, (a, b))| if m == 0 { BigUint::ZERO } else { a - b })
        .collect())
}

fn as_series(counts: &[BigUint]) -> IntegerSeries {
    IntegerSeries::new(
        counts.iter().map(|c| c.clone().into()).collect(),
        counts.len() - 1,
    )
}

fn count_value(
    n: usize,
    h: usize,
    at_most: bool,
    labeled: bool,
    method: Method,
) -> semiorder::Result<BigUint> {
    let counts = unlabeled_counts(n, h, at_most, method)?;
    if !labeled {
        return Ok(counts[n].clone());
    }
    let g = substitute_one_minus_exp(&as_series(&counts), n);
    Ok(g.coeff(n)
        .to_biguint()
        .expect("labeled counts are nonnegative"))
}

fn count(
    out: &mut impl Write,
    n: usize,
    h: usize,
    at_most: bool,
    labeled: bool,
    method: Method,
    check: bool,
) -> Outcome {
    let value = count_value(n, h, at_most, labeled, method)?;
    writeln!(out, "{value}")?;
    if check {
        let reference = count_value(n, h, at_most, labeled, Method::Series)?;
        if reference != value {
            return Err(Failure::Mismatch(format!(
                "{method} gives {value}, series gives {reference}"
            )));
        }
    }
    Ok(())
}

fn enumerate(
    out: &mut impl Write,
    n: usize,
    max_height: Option<usize>,
    format: Format,
    force: bool,
) -> Outcome {
    if n > MAX_VECTOR_N && !force {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds {MAX_VECTOR_N}; pass --force to enumerate anyway"
        )));
    }
    for s in enumerate_semiorders_unbounded(n) {
        if let Some(h) = max_height {
            if s.length().is_ok_and(|l| l > h) {
                continue;
            }
        }
        writeln!(out, "{}", render(&s, format))?;
    }
    Ok(())
}

fn parse(format: Format, input: &str) -> semiorder::Result<Semiorder> {
    Ok(match format {
        Format::Vector => input.parse()?,
        Format::Tree => tree_to_semiorder(&input.parse::<OrderedTree>()?),
        Format::Dyck => dyck_to_semiorder(&input.parse::<DyckPath>()?),
    })
}

fn render(s: &Semiorder, format: Format) -> String {
    match format {
        Format::Vector => s.to_string(),
        Format::Tree => semiorder_to_tree(s).to_string(),
        Format::Dyck => semiorder_to_dyck(s).to_string(),
    }
}

fn series(out: &mut impl Write, h: usize, terms: usize, labeled: bool, at_most: bool) -> Outcome {
    let Some(order) = terms.checked_sub(1) else {
        return Err(Failure::Usage("--terms must be at least 1".into()));
    };
    let line = match (labeled, at_most) {
        (false, true) => series_leq(h, order).to_string(),
        (false, false) => series_exact(h, order).to_string(),
        (true, true) => labeled_series_leq(h, order).to_string(),
        (true, false) => labeled_series_exact(h, order).to_string(),
    };
    writeln!(out, "{line}")?;
    Ok(())
}

fn trunk_trees(out: &mut impl Write, rho: &str, count_only: bool) -> Outcome {
    let s: Semiorder = rho.parse()?;
    let c = count_trunk_trees(&s)?;
    if !c.hypothesis_holds {
        eprintln!(
            "warning: upper elements share down-set sizes, so the count need not be C_{}",
            c.upper
        );
    }
    if count_only {
        writeln!(out, "{}", c.count())?;
        return Ok(());
    }
    for t in &c.trees {
        writeln!(out, "{t}")?;
    }
    writeln!(out, "count={} catalan={}", c.count(), c.expected())?;
    Ok(())
}
