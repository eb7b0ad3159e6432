use std::collections::HashSet;
use std::io::{self, Write};
use std::panic;
use std::process::ExitCode;
use std::sync::OnceLock;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ascent_core::counting::{
    gt_count, quadrant_count, weighted_quadrant_count, weighted_quadrant_table, WalkKind, WalkSpec,
};
use ascent_core::involution::{involution_f, verify_involution};
use ascent_core::paths::{enumerate_paths_with_limit, parse_path, FamilyKind, PathFamily, DEFAULT_SIZE_LIMIT};
use ascent_core::poset::{enumerate_intervals_with_limit, hasse_with_limit, Interval, DEFAULT_INTERVAL_LIMIT};
use ascent_core::series::asym::{asymptotics, empirical_growth};
use ascent_core::series::feq::{at_one, functional_equation_expand};
use ascent_core::sylvester::{format_word, interval_to_sylvester, phi};
use ascent_core::verify::{self, CheckResult};
use ascent_core::{paths, series, CountTableBig};

mod checks;

#[derive(Parser)]
#[command(name = "ascent", version, about = "Dyck paths under the ascent order")]
struct Cli {
    /// Enumeration guard on n*m; overrides ASCENT_SIZE_LIMIT
    #[arg(long, global = true)]
    size_limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

static SIZE_LIMIT: OnceLock<usize> = OnceLock::new();

#[derive(Subcommand)]
enum Command {
    /// Enumerate paths of a family
    #[command(subcommand)]
    Paths(PathsCmd),
    /// Hasse diagrams and intervals
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Intervals as canonical words of sylvester classes
    #[command(subcommand)]
    Sylvester(SylvesterCmd),
    /// Count intervals and quadrant walks
    #[command(subcommand)]
    Count(CountCmd),
    /// Generating functions, identities and growth constants
    #[command(subcommand)]
    Series(SeriesCmd),
    /// The involution exchanging first ascent and r
    #[command(subcommand)]
    Involution(InvolutionCmd),
    /// Run the invariant suite
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyOpt {
    Plain,
    Mdyck,
    Mirrored,
}

#[derive(Args, Clone, Copy)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value = "plain")]
    family: FamilyOpt,
    #[arg(long, default_value_t = 1)]
    m: usize,
}

impl FamilyArgs {
    fn family(&self) -> Result<PathFamily> {
        let kind = match self.family {
            FamilyOpt::Plain => FamilyKind::Plain,
            FamilyOpt::Mdyck => FamilyKind::MDyck,
            FamilyOpt::Mirrored => FamilyKind::Mirrored,
        };
        Ok(PathFamily::new(kind, self.m)?)
    }
}

#[derive(Subcommand)]
enum PathsCmd {
    Enumerate {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum PosetCmd {
    Hasse {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    Intervals {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        n: usize,
        /// Append final descents, first ascent and r
        #[arg(long)]
        stats: bool,
    },
}

#[derive(Subcommand)]
enum SylvesterCmd {
    ToWord {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bottom: String,
        #[arg(long)]
        top: String,
    },
    /// Exhaustive interval -> word -> interval check on plain paths
    Roundtrip {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Gtree,
    Walk,
    Weighted,
    Series,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpecOpt {
    S,
    Sprime,
    Weighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum CountCmd {
    Intervals {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Quadrant walks of `n` steps by endpoint
    Table {
        #[arg(long, value_enum)]
        spec: SpecOpt,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum SeriesCmd {
    Counts {
        #[arg(long)]
        n: usize,
    },
    Verify {
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    Asym {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Largest size used by the empirical fit
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
}

#[derive(Subcommand)]
enum InvolutionCmd {
    Apply {
        #[arg(long)]
        bottom: String,
        #[arg(long)]
        top: String,
    },
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    All {
        #[arg(long)]
        fast: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
}

/// Enumeration guard: `--size-limit`, then `ASCENT_SIZE_LIMIT`, then `default`.
fn size_limit(default: usize) -> Result<usize> {
    if let Some(&v) = SIZE_LIMIT.get() {
        return Ok(v);
    }
    match std::env::var("ASCENT_SIZE_LIMIT") {
        Ok(v) => v.trim().parse().with_context(|| format!("ASCENT_SIZE_LIMIT={v:?} is not a number")),
        Err(_) => Ok(default),
    }
}

fn interval(bottom: &str, top: &str) -> Result<Interval> {
    Ok(Interval::new(parse_path(bottom)?, parse_path(top)?)?)
}

fn json<T: Serialize>(out: &mut impl Write, v: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn print_checks(out: &mut impl Write, results: &[CheckResult], format: TextFormat) -> Result<bool> {
    let ok = results.iter().all(|r| r.passed);
    match format {
        TextFormat::Json => json(out, &results)?,
        TextFormat::Text => {
            for r in results {
                writeln!(out, "{:<6} {:<22} {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail)?;
            }
            let passed = results.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} passed", results.len())?;
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct MethodCount {
    method: &'static str,
    count: String,
}

#[derive(Serialize)]
struct CountReport {
    family: PathFamily,
    n: usize,
    counts: Vec<MethodCount>,
    agree: bool,
}

fn count_intervals(f: &PathFamily, n: usize, method: Method) -> Result<Vec<MethodCount>> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    let weighted_ok = f.is_mirrored() || f.kind() == FamilyKind::Plain;
    if method == Method::Weighted && !weighted_ok {
        bail!("weighted walks only count mirrored families");
    }
    let wants = |m: Method| method == m || method == Method::All;
    let mut out = Vec::new();
    if wants(Method::Brute) {
        let ivs = enumerate_intervals_with_limit(f, n, size_limit(DEFAULT_INTERVAL_LIMIT)?)?;
        out.push(MethodCount { method: "brute", count: ivs.len().to_string() });
    }
    if wants(Method::Gtree) {
        out.push(MethodCount { method: "gtree", count: gt_count(f, n)?.to_string() });
    }
    if wants(Method::Walk) {
        let c = quadrant_count(&WalkSpec::for_family(f), n).get(0, 0);
        out.push(MethodCount { method: "walk", count: c.to_string() });
    }
    if wants(Method::Weighted) && weighted_ok {
        out.push(MethodCount { method: "weighted", count: weighted_quadrant_count(f.m(), n)?.to_string() });
    }
    if wants(Method::Series) {
        let c = &at_one(&functional_equation_expand(f, n)?)[n];
        out.push(MethodCount { method: "series", count: c.to_string() });
    }
    Ok(out)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Paths(PathsCmd::Enumerate { fam, n, count_only }) => {
            let ps = enumerate_paths_with_limit(&fam.family()?, n, size_limit(DEFAULT_SIZE_LIMIT)?)?;
            if count_only {
                writeln!(out, "{}", ps.len())?;
            } else {
                for p in ps {
                    writeln!(out, "{p}")?;
                }
            }
        }
        Command::Poset(PosetCmd::Hasse { fam, n, format }) => {
            let h = hasse_with_limit(&fam.family()?, n, size_limit(DEFAULT_SIZE_LIMIT)?)?;
            match format {
                GraphFormat::Dot => write!(out, "{}", h.to_dot())?,
                GraphFormat::Json => json(out, &h)?,
            }
        }
        Command::Poset(PosetCmd::Intervals { fam, n, stats }) => {
            let mut ivs = enumerate_intervals_with_limit(&fam.family()?, n, size_limit(DEFAULT_INTERVAL_LIMIT)?)?;
            ivs.sort_by(|a, b| (a.bottom().steps(), a.top().steps()).cmp(&(b.bottom().steps(), b.top().steps())));
            for iv in ivs {
                write!(out, "{}\t{}", iv.bottom(), iv.top())?;
                if stats {
                    let s = iv.stats();
                    write!(
                        out,
                        "\t{}\t{}\t{}\t{}",
                        s.final_descent_bottom, s.final_descent_top, s.first_ascent_bottom, s.r
                    )?;
                }
                writeln!(out)?;
            }
        }
        Command::Sylvester(SylvesterCmd::ToWord { fam, n, bottom, top }) => {
            let f = fam.family()?;
            let iv = interval(&bottom, &top)?;
            let size = f.size_of(iv.bottom());
            if size != n {
                bail!("paths have size {size} in {f}, not {n}");
            }
            writeln!(out, "{}", format_word(&interval_to_sylvester(&iv, &f)?))?;
        }
        Command::Sylvester(SylvesterCmd::Roundtrip { n }) => {
            let f = PathFamily::plain();
            let ivs = enumerate_intervals_with_limit(&f, n, size_limit(DEFAULT_INTERVAL_LIMIT)?)?;
            let mut words = HashSet::new();
            let mut bad = 0;
            for iv in &ivs {
                let w = interval_to_sylvester(iv, &f)?;
                let (u, v) = phi(&w, n)?;
                let back = (paths::decode_sequence(&u, &f)?, paths::decode_sequence(&v, &f)?);
                if (&back.0, &back.1) != (iv.bottom(), iv.top()) {
                    bad += 1;
                }
                words.insert(w);
            }
            let ok = bad == 0 && words.len() == ivs.len();
            writeln!(out, "{} intervals, {} distinct words, {bad} failed round trips", ivs.len(), words.len())?;
            return Ok(ok);
        }
        Command::Count(CountCmd::Intervals { fam, n, method, format }) => {
            let f = fam.family()?;
            let counts = count_intervals(&f, n, method)?;
            let agree = counts.windows(2).all(|w| w[0].count == w[1].count);
            if let TextFormat::Json = format {
                json(out, &CountReport { family: f, n, counts, agree })?;
            } else {
                for c in &counts {
                    writeln!(out, "{:<9} {}", c.method, c.count)?;
                }
                if counts.len() > 1 {
                    writeln!(out, "{}", if agree { "MATCH" } else { "MISMATCH" })?;
                }
            }
            return Ok(agree);
        }
        Command::Count(CountCmd::Table { spec, m, n, format }) => {
            if m == 0 {
                bail!("m must be at least 1");
            }
            let table: CountTableBig = match spec {
                SpecOpt::S => quadrant_count(&WalkSpec::new(WalkKind::InfiniteS, m), n),
                SpecOpt::Sprime => quadrant_count(&WalkSpec::new(WalkKind::InfiniteSPrime, m), n),
                SpecOpt::Weighted => weighted_quadrant_table(m, n),
            };
            match format {
                TableFormat::Csv => write!(out, "{}", table.to_csv())?,
                TableFormat::Json => json(out, &checks::table_rows(&table))?,
            }
        }
        Command::Series(SeriesCmd::Counts { n }) => {
            if n == 0 {
                bail!("n must be at least 1");
            }
            for g in series::gf::gf_counts(n)? {
                writeln!(out, "{g}")?;
            }
        }
        Command::Series(SeriesCmd::Verify { order, format }) => {
            if order == 0 {
                bail!("order must be at least 1");
            }
            return print_checks(out, &checks::series_checks(order), format);
        }
        Command::Series(SeriesCmd::Asym { fam, n_max, format }) => {
            let f = fam.family()?;
            let n_max = n_max.unwrap_or(if f.kind() == FamilyKind::Plain { 60 } else { 40 });
            if n_max < 8 {
                bail!("--n-max must be at least 8");
            }
            let a = asymptotics(&f);
            let fit = empirical_growth(&f, n_max)?;
            match format {
                TextFormat::Json => json(out, &checks::AsymReport { family: f, asymptotics: a, fit })?,
                TextFormat::Text => {
                    writeln!(out, "family    {f}")?;
                    writeln!(out, "mu        {:.12}", a.mu)?;
                    writeln!(out, "c         {:.12}", a.c)?;
                    writeln!(out, "alpha     {:.12}", a.alpha)?;
                    writeln!(out, "x0        {:.12}", a.x0)?;
                    writeln!(out, "y0        {:.12}", a.y0)?;
                    writeln!(out, "mu_hat    {:.8} (n <= {n_max})", fit.mu_hat)?;
                    writeln!(out, "alpha_hat {:.6}", fit.alpha_hat)?;
                    writeln!(out, "kappa_hat {:.6}", fit.kappa_hat)?;
                }
            }
        }
        Command::Involution(InvolutionCmd::Apply { bottom, top }) => {
            let iv = interval(&bottom, &top)?;
            let image = involution_f(&iv)?;
            for (label, x) in [("input", &iv), ("image", &image)] {
                let s = x.stats();
                writeln!(out, "{label}\t{}\t{}\ta={}\tr={}", x.bottom(), x.top(), s.first_ascent_bottom, s.r)?;
            }
        }
        Command::Involution(InvolutionCmd::Verify { n }) => {
            if n == 0 {
                bail!("n must be at least 1");
            }
            let r = verify_involution(n, size_limit(DEFAULT_INTERVAL_LIMIT)?)?;
            writeln!(
                out,
                "n={} intervals={} involutive={} exchanges={} symmetric={}",
                r.n, r.intervals, r.involutive, r.exchanges_statistics, r.symmetric_distribution
            )?;
            return Ok(r.ok());
        }
        Command::Verify(VerifyCmd::All { fast, format }) => {
            return print_checks(out, &verify::run_all(fast), format);
        }
    }
    Ok(true)
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        let kind = c
            .downcast_ref::<io::Error>()
            .map(io::Error::kind)
            .or_else(|| c.downcast_ref::<serde_json::Error>().and_then(serde_json::Error::io_error_kind));
        kind == Some(io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(v) = cli.size_limit {
        SIZE_LIMIT.set(v).expect("set once");
    }
    let result = panic::catch_unwind(panic::AssertUnwindSafe(|| {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        let r = run(cli, &mut out);
        let _ = out.flush();
        r
    }));
    match result {
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(1),
        Ok(Err(e)) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(3),
    }
}
