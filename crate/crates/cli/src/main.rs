//! `schubert`: command-line access to the Schubert-calculus and
//! conformal-blocks engines.

mod cache;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use schubert_core::cb::{cb_c1_degree_m04, cb_dot_fcurve, cb_rank, CbBundle};
use schubert_core::gw::{gw_divisor_degree_m04, gw_dot_fcurve};
use schubert_core::moduli::{decimal, FCurve};
use schubert_core::partitions::{canonical_tuple_key, format_tuple, parse_tuple};
use schubert_core::quantum::quantum_lr_coefficient;
use schubert_core::schur::generalized_lr;
use schubert_core::verify::{
    nonvanishing_certificate, reduction_consistency, sweep_conjecture, Certificate, CertificateSearch,
    DegreeSource, SweepReport,
};
use schubert_core::{Partition, Rect};

use cache::{Cache, Kind};

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Exact Schubert calculus and conformal-blocks degrees")]
struct Cli {
    /// Print results as JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Append-only coefficient cache (JSON lines).
    #[arg(long, global = true, env = "SCHUBERT_CACHE")]
    cache: Option<PathBuf>,

    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BoxArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    l: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generalized Littlewood-Richardson coefficient.
    Lr {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        lams: String,
    },
    /// Coefficient of q^d σ_ν in a quantum product on Gr(k, m).
    Qlr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        lams: String,
    },
    /// Rank of the conformal-blocks bundle for sl_{r+1} at the given level.
    Rank {
        #[command(flatten)]
        rect: BoxArgs,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        lams: String,
    },
    /// Degree of the critical-level CB divisor on M_{0,4}.
    Cbdeg {
        #[command(flatten)]
        rect: BoxArgs,
        #[arg(long)]
        lams: String,
    },
    /// Degree of the GW divisor on M_{0,4}.
    Gwdeg {
        #[command(flatten)]
        rect: BoxArgs,
        #[arg(long)]
        lams: String,
    },
    /// GW and CB divisors intersected with an F-curve such as {1,2|3|4|5}.
    Fcurve {
        #[command(flatten)]
        rect: BoxArgs,
        #[arg(long)]
        lams: String,
        #[arg(long)]
        blocks: FCurve,
    },
    /// Compare GW and CB divisors on every critical-level tuple.
    Sweep {
        #[command(flatten)]
        rect: BoxArgs,
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Enumerate ordered tuples instead of one per multiset.
        #[arg(long)]
        full: bool,
        /// Compare F-curve pairings summand by summand (n >= 5).
        #[arg(long)]
        summands: bool,
    },
    /// Search for a nonvanishing certificate.
    Certify {
        #[command(flatten)]
        rect: BoxArgs,
        #[arg(long)]
        lams: String,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Core(#[from] schubert_core::Error),
    #[error("cache: {0}")]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(schubert_core::Error::Internal(_) | schubert_core::Error::Disagreement { .. }) => 1,
            Failure::Core(_) => 2,
            Failure::Io(_) | Failure::Pool(_) => 2,
        }
    }
}

/// Everything the tool can print. The JSON form round-trips exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
enum Output {
    Lr {
        nu: Partition,
        lams: Vec<Partition>,
        #[serde(with = "decimal")]
        value: BigInt,
    },
    Qlr {
        k: usize,
        m: usize,
        d: usize,
        nu: Partition,
        lams: Vec<Partition>,
        #[serde(with = "decimal")]
        value: BigInt,
    },
    Rank {
        r: usize,
        level: usize,
        lams: Vec<Partition>,
        #[serde(with = "decimal")]
        value: BigInt,
    },
    Cbdeg {
        r: usize,
        l: usize,
        lams: Vec<Partition>,
        #[serde(with = "decimal")]
        value: BigInt,
    },
    Gwdeg {
        r: usize,
        l: usize,
        lams: Vec<Partition>,
        #[serde(with = "decimal")]
        value: BigInt,
    },
    Fcurve {
        r: usize,
        l: usize,
        lams: Vec<Partition>,
        fcurve: FCurve,
        #[serde(with = "decimal")]
        gw: BigInt,
        #[serde(with = "decimal")]
        cb: BigInt,
    },
    Sweep(SweepReport),
    Certify {
        lams: Vec<Partition>,
        search: CertificateSearch,
    },
}

impl Output {
    /// Exit status: 1 when a comparison failed or a demanded certificate
    /// was not found.
    fn failed(&self) -> bool {
        match self {
            Output::Fcurve { gw, cb, .. } => gw != cb,
            Output::Sweep(report) => !report.verified(),
            Output::Certify { search, .. } => !matches!(search, CertificateSearch::Found(_)),
            _ => false,
        }
    }

    fn human(&self) -> String {
        match self {
            Output::Lr { value, .. }
            | Output::Qlr { value, .. }
            | Output::Rank { value, .. }
            | Output::Cbdeg { value, .. }
            | Output::Gwdeg { value, .. } => value.to_string(),
            Output::Fcurve { fcurve, gw, cb, .. } => {
                let verdict = if gw == cb { "agree" } else { "DIFFER" };
                format!("F{fcurve}: gw {gw}, cb {cb} ({verdict})")
            }
            Output::Sweep(report) => {
                let mut out = format!(
                    "box {}x{}, n={}: {} tuples, {} mismatches ({:.2}s)",
                    report.rect.rows,
                    report.rect.cols,
                    report.n,
                    report.tuples_checked,
                    report.mismatches.len(),
                    report.elapsed.as_secs_f64()
                );
                for m in &report.mismatches {
                    let curve = m.fcurve.as_ref().map(|f| format!(" F{f}")).unwrap_or_default();
                    let _ = write!(
                        out,
                        "\n  {:?} {}{curve}: gw {} vs cb {}",
                        m.kind,
                        format_tuple(&m.tuple),
                        m.gw,
                        m.cb
                    );
                }
                out
            }
            Output::Certify { search, .. } => match search {
                CertificateSearch::Found(Certificate { fcurve, mu }) => {
                    format!("certificate: F{fcurve}, mu = {}", format_tuple(mu))
                }
                CertificateSearch::NotFound { examined } => {
                    format!("no certificate ({examined} candidates examined)")
                }
                CertificateSearch::BudgetExhausted { examined } => {
                    format!("budget exhausted after {examined} candidates")
                }
            },
        }
    }
}

/// Degree source that consults and fills the persistent cache.
struct Cached<'a> {
    cache: Option<&'a Cache>,
}

impl Cached<'_> {
    fn lookup(
        &self,
        kind: Kind,
        key: impl FnOnce() -> String,
        compute: impl FnOnce() -> schubert_core::Result<BigInt>,
    ) -> Result<BigInt, Failure> {
        match self.cache {
            Some(cache) => cache.get_or_compute(kind, key(), || compute().map_err(Failure::from)),
            None => Ok(compute()?),
        }
    }
}

fn box_key(r: usize, l: usize, tuple: &[Partition]) -> String {
    format!("r={r};l={l};{}", canonical_tuple_key(tuple))
}

/// Cache I/O failures inside a sweep surface as internal errors.
fn into_core(e: Failure) -> schubert_core::Error {
    match e {
        Failure::Core(e) => e,
        other => schubert_core::Error::Internal(other.to_string()),
    }
}

impl DegreeSource for Cached<'_> {
    fn gw_degree(&self, tuple: &[Partition], rect: Rect) -> schubert_core::Result<BigInt> {
        self.lookup(Kind::GwDeg4, || box_key(rect.rows, rect.cols, tuple), || gw_divisor_degree_m04(tuple, rect))
            .map_err(into_core)
    }

    fn cb_degree(&self, tuple: &[Partition], rect: Rect) -> schubert_core::Result<BigInt> {
        self.lookup(
            Kind::CbDeg4,
            || box_key(rect.rows, rect.cols, tuple),
            || cb_c1_degree_m04(&CbBundle::new(rect.rows, rect.cols, tuple.to_vec())?),
        )
        .map_err(into_core)
    }
}

fn run(cli: &Cli, cache: Option<&Cache>) -> Result<Output, Failure> {
    let src = Cached { cache };
    Ok(match &cli.command {
        Command::Lr { nu, lams } => {
            let lams = parse_tuple(lams)?;
            let value = src.lookup(
                Kind::Lr,
                || format!("nu={nu};{}", canonical_tuple_key(&lams)),
                || Ok(generalized_lr(&lams, nu)),
            )?;
            Output::Lr { nu: nu.clone(), lams, value }
        }
        Command::Qlr { k, m, d, nu, lams } => {
            let (k, m, d) = (*k, *m, *d);
            let lams = parse_tuple(lams)?;
            let value = src.lookup(
                Kind::Qlr,
                || format!("k={k};m={m};d={d};nu={nu};{}", canonical_tuple_key(&lams)),
                || quantum_lr_coefficient(&lams, d, nu, k, m),
            )?;
            Output::Qlr { k, m, d, nu: nu.clone(), lams, value }
        }
        Command::Rank { rect, level, lams } => {
            let (r, level) = (rect.r, *level);
            let lams = parse_tuple(lams)?;
            let rect = Rect::new(r, rect.l);
            for lam in &lams {
                lam.ensure_in(rect)?;
            }
            let value = src.lookup(
                Kind::CbRank,
                || format!("r={r};level={level};{}", canonical_tuple_key(&lams)),
                || cb_rank(&CbBundle::new(r, level, lams.clone())?),
            )?;
            Output::Rank { r, level, lams, value }
        }
        Command::Cbdeg { rect, lams } => {
            let lams = parse_tuple(lams)?;
            let value = src.cb_degree(&lams, Rect::new(rect.r, rect.l))?;
            Output::Cbdeg { r: rect.r, l: rect.l, lams, value }
        }
        Command::Gwdeg { rect, lams } => {
            let lams = parse_tuple(lams)?;
            let value = src.gw_degree(&lams, Rect::new(rect.r, rect.l))?;
            Output::Gwdeg { r: rect.r, l: rect.l, lams, value }
        }
        Command::Fcurve { rect, lams, blocks } => {
            let lams = parse_tuple(lams)?;
            let b = Rect::new(rect.r, rect.l);
            let gw = gw_dot_fcurve(&lams, b, blocks)?;
            let cb = cb_dot_fcurve(&CbBundle::new(rect.r, rect.l, lams.clone())?, blocks)?;
            Output::Fcurve { r: rect.r, l: rect.l, lams, fcurve: blocks.clone(), gw, cb }
        }
        Command::Sweep { rect, n, full, summands } => {
            let b = Rect::new(rect.r, rect.l);
            let report = if *summands {
                reduction_consistency(b, *n)?
            } else {
                sweep_conjecture(&src, b, *n, !full)?
            };
            Output::Sweep(report)
        }
        Command::Certify { rect, lams, budget } => {
            let lams = parse_tuple(lams)?;
            let search = nonvanishing_certificate(&lams, Rect::new(rect.r, rect.l), *budget)?;
            Output::Certify { lams, search }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {}", Failure::Pool(e.to_string()));
            return ExitCode::from(2);
        }
    }
    let cache = match cli.cache.as_ref().map(Cache::open).transpose() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", Failure::Io(e));
            return ExitCode::from(2);
        }
    };
    match run(&cli, cache.as_ref()) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string(&out).expect("outputs serialize"));
            } else {
                println!("{}", out.human());
            }
            if out.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
