//! The `sgq` command line. [`run`] takes the argument vector and output
//! streams so it can be driven from tests without spawning a process.
//!
//! Exit status: 0 on success, 1 when a check fails or a computation cannot
//! complete (e.g. the enumeration cap is exceeded), 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{enumerate_catalog, order_of_descriptor, GroupDescriptor};
use crate::data::DataDir;
use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::invariants::{derive_invariants, sylow_normalizer_order};
use crate::io::{build_catalog, write_catalog_csv, write_catalog_file};
use crate::lab::{
    compare_spectra, confirm_moreto_collision, equal_order_pairs, moreto_signature, npe_collision_search,
    verify_paper_report, CollisionReport, Lab, ReportOptions,
};
use crate::prime_graph::build_prime_graph;
use crate::realize::{SamplerConfig, DEFAULT_ELEMENT_CAP, MIN_SAMPLES};

#[derive(Parser, Debug)]
#[command(name = "sgq", version, about = "Quantitative invariants of finite simple groups")]
struct Cli {
    /// Worker threads for enumeration and sampling [default: available cores]
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the order of a group, factored and in decimal
    Order { group: String },
    /// Enumerate a group and print `k |G(k)|` for every element order k
    Census {
        group: String,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: u64,
    },
    /// Print spectrum, npe, involution count and Sylow data
    Invariants {
        group: String,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: u64,
    },
    /// Print the prime graph and its components
    PrimeGraph {
        group: String,
        /// Also write a Graphviz file
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: u64,
    },
    /// Write every simple group up to a bound as JSON lines (or CSV)
    Catalog {
        #[arg(long)]
        max_order: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: u64,
    },
    /// Compare an invariant across equal-order groups up to a bound
    Collide {
        #[arg(long, value_enum)]
        invariant: InvariantKind,
        #[arg(long)]
        max_order: String,
        /// Monte Carlo samples per group when exact counts are missing
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: u64,
    },
    /// Estimate the proportion of elements of a given order by random sampling
    Sample {
        group: String,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        slots: usize,
        #[arg(long, default_value_t = 100)]
        burn_in: usize,
    },
    /// Recompute every published value and report pass/fail per item
    VerifyPaper {
        /// Also write the report as JSON lines to this file
        #[arg(long)]
        jsonl: Option<PathBuf>,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InvariantKind {
    Moreto,
    Shi,
    Npe,
}

/// Runs one command; returns the process exit status.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

fn parse_group(token: &str) -> Result<GroupDescriptor> {
    token.parse()
}

/// Accepts `5000000000`, `5e9` or a factored form such as `2^9*3^9*5*7*13`.
fn parse_bound(text: &str) -> Result<FactoredInteger> {
    let bad = || Error::OutOfRange(format!("cannot read {text:?} as a positive integer bound"));
    let text = text.trim().replace('_', "");
    if let Some((mantissa, exp)) = text.split_once(['e', 'E']) {
        let m: u128 = mantissa.parse().map_err(|_| bad())?;
        let e: u32 = exp.parse().map_err(|_| bad())?;
        let n = 10u128.checked_pow(e).and_then(|p| p.checked_mul(m)).ok_or_else(bad)?;
        if n == 0 {
            return Err(bad());
        }
        return crate::factored::factor_integer(n);
    }
    text.parse::<FactoredInteger>().map_err(|_| bad())
}

fn lab_for(threads: Option<usize>, cap: u64) -> Lab {
    let lab = Lab::new(DataDir::from_env()).with_cap(cap);
    match threads {
        Some(t) => lab.with_threads(t),
        None => lab,
    }
}

fn check_samples(samples: u64) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(Error::OutOfRange(format!("--samples must be at least {MIN_SAMPLES}")));
    }
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let threads = cli.threads;
    if threads == Some(0) {
        return Err(Error::OutOfRange("--threads must be at least 1".into()));
    }
    match cli.command {
        Command::Order { group } => {
            let d = parse_group(&group)?;
            let order = order_of_descriptor(&d)?;
            writeln!(out, "{order} = {}", order.decimal())?;
        }
        Command::Census { group, cap } => {
            let d = parse_group(&group)?;
            let census = lab_for(threads, cap).census(&d)?;
            write!(out, "{}", census.render())?;
        }
        Command::Invariants { group, cap } => {
            let d = parse_group(&group)?;
            invariants(&d, &lab_for(threads, cap), out)?;
        }
        Command::PrimeGraph { group, dot, cap } => {
            let d = parse_group(&group)?;
            let census = lab_for(threads, cap).census(&d)?;
            let graph = build_prime_graph(&census.counts().keys().copied().collect())?;
            writeln!(out, "vertices: {}", set(graph.vertices()))?;
            let edges: Vec<String> = graph.edges().iter().map(|(p, q)| format!("{p}-{q}")).collect();
            writeln!(out, "edges: {}", if edges.is_empty() { "none".into() } else { edges.join(" ") })?;
            let comps: Vec<String> = graph.components().iter().map(set).collect();
            writeln!(out, "components (t = {}): {}", graph.component_count(), comps.join(" "))?;
            if let Some(path) = dot {
                std::fs::write(&path, graph.to_dot(&d.to_string()))?;
            }
        }
        Command::Catalog {
            max_order,
            out: path,
            csv,
            cap,
        } => {
            let bound = parse_bound(&max_order)?;
            let records = build_catalog(&bound, &lab_for(threads, cap))?;
            if csv {
                write_catalog_csv(&records, std::fs::File::create(&path)?)?;
            } else {
                write_catalog_file(&records, &path)?;
            }
            writeln!(out, "wrote {} records to {}", records.len(), path.display())?;
        }
        Command::Collide {
            invariant,
            max_order,
            samples,
            seed,
            csv,
            cap,
        } => {
            check_samples(samples)?;
            let bound = parse_bound(&max_order)?;
            let lab = lab_for(threads, cap);
            let catalog = enumerate_catalog(&bound)?;
            let reports = collide(invariant, &catalog, &lab, samples, seed, err)?;
            if csv {
                collisions_csv(&reports, out)?;
            } else {
                collisions_table(&reports, out)?;
            }
        }
        Command::Sample {
            group,
            order,
            samples,
            seed,
            slots,
            burn_in,
        } => {
            let d = parse_group(&group)?;
            check_samples(samples)?;
            let lab = lab_for(threads, DEFAULT_ELEMENT_CAP);
            let config = SamplerConfig {
                slots,
                burn_in,
                threads: threads.unwrap_or(1),
            };
            let e = lab.realize(&d)?.estimate_order_fraction(order, samples, seed, &config)?;
            writeln!(
                out,
                "order {order}: {} of {} samples, fraction {:.6} ± {:.6}",
                e.hits, e.samples, e.fraction, e.std_error
            )?;
        }
        Command::VerifyPaper { jsonl, samples, seed } => {
            check_samples(samples)?;
            let lab = lab_for(threads, DEFAULT_ELEMENT_CAP);
            let report = verify_paper_report(&lab, &ReportOptions { samples, seed });
            write!(out, "{}", report.render_table())?;
            if let Some(path) = jsonl {
                std::fs::write(path, report.to_jsonl())?;
            }
            if !report.all_passed() {
                for item in report.failures() {
                    writeln!(err, "FAILED: {}: {}", item.name, item.computed_value)?;
                }
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn set<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn invariants(d: &GroupDescriptor, lab: &Lab, out: &mut dyn Write) -> Result<()> {
    let order = order_of_descriptor(d)?;
    writeln!(out, "group: {d}")?;
    writeln!(out, "order: {order} = {}", order.decimal())?;
    writeln!(out, "pi: {}", set(order.primes()))?;
    let sig = moreto_signature(d, lab)?;
    writeln!(out, "largest prime: {}", sig.p)?;
    match &sig.count_p {
        Some(c) => {
            writeln!(out, "count_p: {c} = {} ({})", c.decimal(), sig.count_provenance)?;
            if order.exponent(sig.p) == 1 {
                let n = sylow_normalizer_order(&order, sig.p, c)?;
                writeln!(out, "sylow normalizer: {n} = {}", n.decimal())?;
            }
        }
        None => writeln!(out, "count_p: unknown")?,
    }
    match lab.try_census(d)? {
        Some(c) => {
            let inv = derive_invariants(&c)?;
            writeln!(out, "pi_e: {}", set(&inv.pi_e))?;
            writeln!(out, "npe: {}", set(&inv.npe))?;
            writeln!(out, "npe multiset: {:?}", inv.npe_multiset)?;
            writeln!(out, "involutions: {}", inv.involutions)?;
        }
        None => writeln!(out, "pi_e: unavailable (no census within the cap)")?,
    }
    Ok(())
}

fn collide(
    kind: InvariantKind,
    catalog: &[GroupDescriptor],
    lab: &Lab,
    samples: u64,
    seed: u64,
    err: &mut dyn Write,
) -> Result<Vec<CollisionReport>> {
    match kind {
        InvariantKind::Npe => Ok(npe_collision_search(catalog, lab)?.examined),
        InvariantKind::Moreto => equal_order_pairs(catalog)?
            .iter()
            .map(|(a, b)| confirm_moreto_collision(a, b, lab, samples, seed))
            .collect(),
        InvariantKind::Shi => {
            let mut reports = Vec::new();
            for (a, b) in equal_order_pairs(catalog)? {
                match compare_spectra(&a, &b, lab) {
                    Ok(r) => reports.push(r),
                    Err(Error::Unsupported(_) | Error::CapExceeded { .. }) => {
                        writeln!(err, "skipping {a} / {b}: no census available")?;
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok(reports)
        }
    }
}

fn collisions_table(reports: &[CollisionReport], out: &mut dyn Write) -> Result<()> {
    if reports.is_empty() {
        writeln!(out, "no equal-order pairs")?;
        return Ok(());
    }
    for r in reports {
        writeln!(out, "{} / {}: {}", r.left, r.right, r.verdict)?;
        for e in &r.evidence {
            let mark = if e.equal { "=" } else { "≠" };
            writeln!(
                out,
                "  {}: {} {mark} {} ({} / {})",
                e.invariant, e.left, e.right, e.left_provenance, e.right_provenance
            )?;
        }
    }
    Ok(())
}

fn collisions_csv(reports: &[CollisionReport], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "left",
        "right",
        "invariant",
        "left_value",
        "right_value",
        "left_provenance",
        "right_provenance",
        "equal",
        "verdict",
    ])?;
    for r in reports {
        for e in &r.evidence {
            w.write_record([
                r.left.to_string(),
                r.right.to_string(),
                e.invariant.clone(),
                e.left.clone(),
                e.right.clone(),
                e.left_provenance.to_string(),
                e.right_provenance.to_string(),
                e.equal.to_string(),
                r.verdict.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let args: Vec<String> = std::iter::once("sgq").chain(args.iter().copied()).map(String::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&args, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bounds() {
        assert_eq!(parse_bound("5e9").unwrap().decimal(), "5000000000");
        assert_eq!(parse_bound("1000000").unwrap().decimal(), "1000000");
        assert_eq!(parse_bound("2^9*3^9*5*7*13").unwrap().decimal(), "4585351680");
        assert!(parse_bound("lots").is_err());
    }

    #[test]
    fn order_command() {
        assert_eq!(run_args(&["order", "M11"]), (0, "2^4*3^2*5*11 = 7920\n".into(), String::new()));
        let (code, _, err) = run_args(&["order", "Q7"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown group"));
        let (code, _, _) = run_args(&["order", "L2(6)"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn cap_exceeded_is_runtime_failure() {
        let (code, _, err) = run_args(&["census", "A8", "--cap", "1000"]);
        assert_eq!(code, 1);
        assert!(err.contains("cap"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["census"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }
}
