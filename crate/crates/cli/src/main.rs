//! `qdilog`: exact checks of the quantum-torus dilogarithm identities and
//! the graph-mutation bookkeeping behind them.
//!
//! Reports are printed as JSON on stdout (deterministic for a fixed
//! configuration); a human-readable summary goes to stderr. Exit codes:
//! 0 all requested checks pass, 1 some check failed, 2 invalid usage.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qdilog_core::curves::check_twist_consistency;
use qdilog_core::graphs::{long_sequence, short_sequence, verify_mutation_equivalence};
use qdilog_core::linkskein::LinkskeinConfig;
use qdilog_core::qtorus::{
    reineke_product_check, verify_pentagon, verify_reineke, PENTAGON_MIDDLE_C_HALVES,
};
use qdilog_core::quiver::{enumerate_admissible_orders, AdmissibleOrder, Interval};
use qdilog_core::report::Report;

/// Overridable convention constants, loadable from a JSON file.
#[derive(Debug, Clone, Serialize, serde::Deserialize)]
#[serde(default)]
struct Conventions {
    version: u32,
    /// Power of t per middle-factor power in the pentagon check.
    pentagon_middle_c_halves: i64,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            version: 1,
            pentagon_middle_c_halves: PENTAGON_MIDDLE_C_HALVES,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "qdilog",
    about = "Exact quantum-torus dilogarithm identity checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Write the JSON output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// JSON file overriding the recorded convention constants.
    #[arg(long, global = true)]
    convention_file: Option<std::path::PathBuf>,
    /// Number of worker threads for fan-out subcommands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include wall-clock runtimes in the JSON output (breaks byte-for-byte
    /// determinism between runs).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the admissible orders on the interval representations.
    Orders {
        #[arg(long)]
        n: u32,
        /// Enumeration cap on n.
        #[arg(long, default_value_t = 5)]
        limit: u32,
    },
    /// Verify the pentagon identity at a truncation degree.
    Pentagon {
        #[arg(long, default_value_t = 8)]
        degree: u32,
        /// Override the middle-argument normalization (halves of a q-power).
        #[arg(long)]
        middle_c_halves: Option<i64>,
    },
    /// Verify the product-reordering identity for admissible orders.
    Reineke {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degree: u32,
        /// Order selector: "all", an index, or an explicit JSON array of
        /// [lo, hi] pairs (which may be non-admissible; it is then checked
        /// as a raw product comparison).
        #[arg(long, default_value = "all")]
        order: String,
    },
    /// Emit the short or long mutation trace as JSON.
    Mutate {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = ["short", "long"])]
        kind: String,
        /// Order index for the long sequence.
        #[arg(long, default_value_t = 0)]
        order: usize,
    },
    /// Verify mutation equivalence of the short and long sequences.
    Equivalence {
        #[arg(long)]
        n: u32,
    },
    /// Check the Dehn-twist rewrite calculus against the homology oracle.
    Twists {
        #[arg(long)]
        n: u32,
    },
    /// Check the face-operator conjugation identity on the shipped (or a
    /// given) surface configuration.
    Conjugation {
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// Configuration JSON; defaults to the shipped n=2 data.
        #[arg(long)]
        config: Option<std::path::PathBuf>,
    },
}

#[derive(Serialize)]
struct Output {
    version: u32,
    command: String,
    params: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orders: Option<Vec<AdmissibleOrder>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reports: Option<Vec<Report>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<serde_json::Value>,
}

impl Output {
    fn new(command: &str) -> Self {
        Output {
            version: 1,
            command: command.to_string(),
            params: BTreeMap::new(),
            orders: None,
            reports: None,
            trace: None,
        }
    }

    fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

fn load_conventions(common: &Common) -> Result<Conventions> {
    match &common.convention_file {
        None => Ok(Conventions::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading convention file {}", path.display()))?;
            serde_json::from_str(&text).context("parsing convention file")
        }
    }
}

fn strip_runtimes(reports: &mut [Report], keep: bool) {
    if !keep {
        for r in reports.iter_mut() {
            r.runtime_ms = None;
        }
    }
}

fn parse_order_selector(selector: &str, n: u32) -> Result<OrderSelector> {
    if selector == "all" {
        return Ok(OrderSelector::All);
    }
    if let Ok(idx) = selector.parse::<usize>() {
        return Ok(OrderSelector::Index(idx));
    }
    let pairs: Vec<(u32, u32)> = serde_json::from_str(selector)
        .context("order selector must be \"all\", an index, or a JSON array of [lo,hi] pairs")?;
    let intervals = pairs
        .into_iter()
        .map(|(lo, hi)| {
            if 1 <= lo && lo <= hi && hi <= n {
                Ok(Interval::new(lo, hi))
            } else {
                bail!("interval [{lo},{hi}] is out of range for n={n}")
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrderSelector::Explicit(intervals))
}

enum OrderSelector {
    All,
    Index(usize),
    Explicit(Vec<Interval>),
}

fn run() -> Result<(Output, bool)> {
    let cli = Cli::parse();
    let conventions = load_conventions(&cli.common)?;
    if let Some(jobs) = cli.common.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }

    let (mut output, ok) = match &cli.command {
        Command::Orders { n, limit } => {
            let orders = enumerate_admissible_orders(*n, Some(*limit))?;
            let mut out = Output::new("orders")
                .param("n", *n)
                .param("count", orders.len());
            out.orders = Some(orders);
            (out, true)
        }
        Command::Pentagon {
            degree,
            middle_c_halves,
        } => {
            let c = middle_c_halves.unwrap_or(conventions.pentagon_middle_c_halves);
            let report = verify_pentagon(*degree, c);
            let ok = report.passed();
            let mut out = Output::new("pentagon")
                .param("degree", *degree)
                .param("middle_c_halves", c);
            out.reports = Some(vec![report]);
            (out, ok)
        }
        Command::Reineke { n, degree, order } => {
            let mut out = Output::new("reineke")
                .param("n", *n)
                .param("degree", *degree)
                .param("order", order.clone());
            let reports = match parse_order_selector(order, *n)? {
                OrderSelector::All => {
                    let orders = enumerate_admissible_orders(*n, None)?;
                    use rayon::prelude::*;
                    let mut indexed: Vec<(usize, Report)> = orders
                        .par_iter()
                        .enumerate()
                        .map(|(i, o)| {
                            let r = verify_reineke(o, *degree)
                                .expect("enumerated orders are admissible")
                                .with_param("order", i as i64);
                            (i, r)
                        })
                        .collect();
                    indexed.sort_by_key(|(i, _)| *i);
                    indexed.into_iter().map(|(_, r)| r).collect::<Vec<_>>()
                }
                OrderSelector::Index(idx) => {
                    let orders = enumerate_admissible_orders(*n, None)?;
                    let order = orders
                        .get(idx)
                        .with_context(|| format!("order index {idx} out of range"))?;
                    vec![verify_reineke(order, *degree)?.with_param("order", idx as i64)]
                }
                OrderSelector::Explicit(intervals) => {
                    vec![reineke_product_check(*n, &intervals, *degree)]
                }
            };
            let ok = reports.iter().all(Report::passed);
            out.reports = Some(reports);
            (out, ok)
        }
        Command::Mutate { n, kind, order } => {
            let trace = if kind == "short" {
                short_sequence(*n)?
            } else {
                let orders = enumerate_admissible_orders(*n, None)?;
                let order = orders
                    .get(*order)
                    .with_context(|| format!("order index {order} out of range"))?;
                long_sequence(order)?
            };
            let mut out = Output::new("mutate")
                .param("n", *n)
                .param("kind", kind.clone())
                .param("order", *order);
            out.trace = Some(serde_json::to_value(&trace)?);
            (out, true)
        }
        Command::Equivalence { n } => {
            let report = verify_mutation_equivalence(*n, None)?;
            let ok = report.passed();
            let mut out = Output::new("equivalence").param("n", *n);
            out.reports = Some(vec![report]);
            (out, ok)
        }
        Command::Twists { n } => {
            let consistency = check_twist_consistency(*n);
            let report = consistency.report();
            let ok = report.passed();
            let mut out = Output::new("twists").param("n", *n);
            out.reports = Some(vec![report]);
            (out, ok)
        }
        Command::Conjugation { degree, config } => {
            let text = match config {
                Some(path) => std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?,
                None => qdilog_core::linkskein::N2_CONFIG_JSON.to_string(),
            };
            let cfg = LinkskeinConfig::from_json(&text)?;
            let labels = cfg.check_face_labels();
            let conj = cfg.check_bigon_conjugation(*degree)?;
            let ok = labels.passed() && conj.passed();
            let mut out = Output::new("conjugation").param("degree", *degree);
            out.reports = Some(vec![labels, conj]);
            (out, ok)
        }
    };

    if let Some(reports) = output.reports.as_mut() {
        strip_runtimes(reports, cli.common.timings);
        for r in reports.iter() {
            eprintln!("{}", r.summary());
        }
    }
    let json = serde_json::to_string_pretty(&output)?;
    match &cli.common.out {
        Some(path) => {
            std::fs::write(path, json.as_bytes())
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(json.as_bytes())?;
            stdout.write_all(b"\n")?;
        }
    }
    Ok((output, ok))
}

fn main() -> ExitCode {
    match run() {
        Ok((_, true)) => ExitCode::SUCCESS,
        Ok((_, false)) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
