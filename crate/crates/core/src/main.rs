//! Command-line front end: every invariant as a subcommand, with text,
//! JSON, and DOT output, built-in oracle cross-checks, and exhaustive or
//! seeded verification sweeps.
//!
//! Exit codes: 0 on success, 1 when a requested check fails (the witness
//! is printed), 2 on usage or domain errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use minhess::hess::{self, HessFn};
use minhess::report::CheckReport;
use minhess::{betti, cohom, components, gkm, verify, Error, Result};

/// How many random Hessenberg functions a sweep draws when n is too large
/// to enumerate exhaustively.
const SAMPLE_COUNT: usize = 50;
const DEFAULT_SEED: u64 = 1729;

#[derive(Parser)]
#[command(
    name = "minhess",
    version,
    about = "Invariants of minimal-nilpotent Hessenberg varieties in Lie type A",
    long_about = "Computes fixed points, Poincaré polynomials, Euler numbers, irreducible \
components, GKM graphs, and cohomology ring presentations of the Hessenberg variety attached \
to a minimal nilpotent matrix and a Hessenberg function h, given as --hess 2,4,5,5,5."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Target {
    /// Rank parameter n; optional, checked against the --hess length
    #[arg(long)]
    n: Option<usize>,

    /// Hessenberg function values, comma separated (e.g. 2,4,5,5,5)
    #[arg(long)]
    hess: String,
}

impl Target {
    fn resolve(&self) -> Result<HessFn> {
        let h = HessFn::parse(&self.hess)?;
        if let Some(n) = self.n {
            if n != h.n() {
                return Err(Error::Malformed {
                    what: "arguments",
                    reason: format!("--n {n} disagrees with the --hess length {}", h.n()),
                });
            }
        }
        Ok(h)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Poincaré polynomial and the box-count polynomial q_H
    Poincare {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check the closed form against brute-force enumeration
        #[arg(long)]
        oracle: bool,
    },
    /// Euler number (= number of torus fixed points)
    Euler {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check against the fixed-point count and P(1)
        #[arg(long)]
        oracle: bool,
    },
    /// Complex dimension and codimension inside the flag variety
    Dimension {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check against the top degree of the oracle Poincaré polynomial
        #[arg(long)]
        oracle: bool,
    },
    /// Torus fixed points, one word per line
    FixedPoints {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Irreducible components: one Bruhat-maximal word per corner
    Components {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check against Bruhat-maximal fixed points
        #[arg(long)]
        oracle: bool,
    },
    /// Moment (GKM) graph of the fixed-point set
    Gkm {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Kernel dimension of the GKM edge conditions in one cohomological degree
    GkmDim {
        #[command(flatten)]
        target: Target,
        /// Cohomological degree (odd degrees give 0)
        #[arg(long)]
        degree: usize,
        /// Largest cohomological degree the kernel computation will accept
        #[arg(long, default_value_t = 8)]
        degree_cap: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cohomology ring on the fixed-point Schubert basis
    Cohomology {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print the Hilbert series of the quotient ring
        #[arg(long)]
        hilbert: bool,
        /// Print all structure constants over the basis
        #[arg(long)]
        multiplication_table: bool,
        /// Run the n = 3 Springer generating-set regression (requires --hess 1,2,3)
        #[arg(long)]
        tanisaki: bool,
    },
    /// Verify every closed form against its oracle, for one h or for all
    Check {
        /// Rank parameter n (required with --all-h)
        #[arg(long)]
        n: Option<usize>,
        /// A single Hessenberg function to verify
        #[arg(long, conflicts_with = "all_h")]
        hess: Option<String>,
        /// Verify all valid functions for n (seeded sample when n > 6)
        #[arg(long)]
        all_h: bool,
        /// Seed for the sampled mode
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Continue past the first failing function
        #[arg(long)]
        keep_going: bool,
        /// Also write the JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Machine-readable verification sweep over all h for one n
    Sweep {
        #[arg(long)]
        n: usize,
        /// Seed for the sampled mode (n > 6)
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Continue past the first failing function
        #[arg(long)]
        keep_going: bool,
        /// Also write the JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // die silently on a closed pipe (e.g. `minhess sweep --n 4 | head`)
    // instead of panicking mid-print
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn no_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::Malformed {
            what: "arguments",
            reason: "dot output is only available for the gkm subcommand".into(),
        });
    }
    Ok(())
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn write_out(path: &PathBuf, value: &serde_json::Value) -> Result<()> {
    let text = format!("{}\n", serde_json::to_string_pretty(value).expect("serializable"));
    fs::write(path, text).map_err(|e| Error::Malformed {
        what: "output path",
        reason: format!("{}: {e}", path.display()),
    })
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Poincare { target, format, oracle } => {
            no_dot(format)?;
            let h = target.resolve()?;
            let p = betti::poincare(&h)?;
            let q = betti::q_poly(&h)?;
            let agrees = if oracle { Some(betti::poincare_bruteforce(&h)? == p) } else { None };
            match format {
                Format::Text => {
                    println!("{p}");
                    println!("q_H(t) = {q}");
                    if let Some(ok) = agrees {
                        println!("oracle: {}", if ok { "agrees" } else { "MISMATCH" });
                    }
                }
                Format::Json => {
                    let mut value = json!({
                        "n": h.n(),
                        "h": h.values(),
                        "poincare": p.to_json_pairs(),
                        "q": q.to_json_pairs(),
                        "euler": betti::euler_number(&h)?.to_string(),
                        "dimension": betti::dimension(&h)?,
                    });
                    if let Some(ok) = agrees {
                        value["oracle"] = json!(if ok { "agrees" } else { "mismatch" });
                    }
                    print_json(&value);
                }
                Format::Dot => unreachable!(),
            }
            Ok(if agrees == Some(false) { 1 } else { 0 })
        }

        Command::Euler { target, format, oracle } => {
            no_dot(format)?;
            let h = target.resolve()?;
            let e = betti::euler_number(&h)?;
            let agrees = if oracle {
                let count = betti::fixed_points(&h)?.len();
                let at_one = betti::poincare(&h)?.eval_one();
                Some(e == num::BigInt::from(count) && e == at_one)
            } else {
                None
            };
            match format {
                Format::Text => {
                    println!("{e}");
                    if let Some(ok) = agrees {
                        println!("oracle: {}", if ok { "agrees" } else { "MISMATCH" });
                    }
                }
                Format::Json => {
                    let mut value = json!({
                        "n": h.n(),
                        "h": h.values(),
                        "euler": e.to_string(),
                        "dimension": betti::dimension(&h)?,
                    });
                    if let Some(ok) = agrees {
                        value["oracle"] = json!(if ok { "agrees" } else { "mismatch" });
                    }
                    print_json(&value);
                }
                Format::Dot => unreachable!(),
            }
            Ok(if agrees == Some(false) { 1 } else { 0 })
        }

        Command::Dimension { target, format, oracle } => {
            no_dot(format)?;
            let h = target.resolve()?;
            let dim = betti::dimension(&h)?;
            let codim = betti::codimension(&h)?;
            let agrees = if oracle {
                Some(betti::poincare_bruteforce(&h)?.degree() == Some(2 * dim))
            } else {
                None
            };
            match format {
                Format::Text => {
                    println!("dimension: {dim}");
                    println!("codimension: {codim}");
                    if let Some(ok) = agrees {
                        println!("oracle: {}", if ok { "agrees" } else { "MISMATCH" });
                    }
                }
                Format::Json => {
                    let mut value = json!({
                        "n": h.n(),
                        "h": h.values(),
                        "dimension": dim,
                        "codimension": codim,
                    });
                    if let Some(ok) = agrees {
                        value["oracle"] = json!(if ok { "agrees" } else { "mismatch" });
                    }
                    print_json(&value);
                }
                Format::Dot => unreachable!(),
            }
            Ok(if agrees == Some(false) { 1 } else { 0 })
        }

        Command::FixedPoints { target, format } => {
            no_dot(format)?;
            let h = target.resolve()?;
            let points = betti::fixed_points(&h)?;
            match format {
                Format::Text => {
                    for w in &points {
                        println!("{w}");
                    }
                }
                Format::Json => {
                    let value = json!({
                        "n": h.n(),
                        "h": h.values(),
                        "count": points.len(),
                        "fixed_points": points.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    });
                    print_json(&value);
                }
                Format::Dot => unreachable!(),
            }
            Ok(0)
        }

        Command::Components { target, format, oracle } => {
            no_dot(format)?;
            let h = target.resolve()?;
            let comps = components::components(&h)?;
            let agrees = if oracle { Some(components::components_match_oracle(&h)?) } else { None };
            match format {
                Format::Text => {
                    for c in &comps {
                        println!("{}", c.word);
                    }
                    if let Some(ok) = agrees {
                        println!("oracle: {}", if ok { "agrees" } else { "MISMATCH" });
                    }
                }
                Format::Json => {
                    let value = serde_json::Value::Array(
                        comps
                            .iter()
                            .map(|c| {
                                json!({
                                    "corner": [c.corner.row, c.corner.col],
                                    "word": c.word.to_string(),
                                    "dimension": c.dimension,
                                })
                            })
                            .collect(),
                    );
                    print_json(&value);
                    if agrees == Some(false) {
                        eprintln!("oracle: MISMATCH");
                    }
                }
                Format::Dot => unreachable!(),
            }
            Ok(if agrees == Some(false) { 1 } else { 0 })
        }

        Command::Gkm { target, format } => {
            let h = target.resolve()?;
            let graph = gkm::GkmGraph::hessenberg(&h)?;
            match format {
                Format::Text => {
                    println!("n: {}", graph.n());
                    println!("h: {h}");
                    println!("vertices: {}", graph.vertices().len());
                    for w in graph.vertices() {
                        println!("{w}");
                    }
                    println!("edges: {}", graph.edges().len());
                    for e in graph.edges() {
                        println!(
                            "{} -- {}  {}",
                            graph.vertices()[e.u],
                            graph.vertices()[e.v],
                            e.label
                        );
                    }
                }
                Format::Json => print_json(&graph.to_json()),
                Format::Dot => print!("{}", graph.to_dot()),
            }
            Ok(0)
        }

        Command::GkmDim { target, degree, degree_cap, format } => {
            no_dot(format)?;
            let h = target.resolve()?;
            let graph = gkm::GkmGraph::hessenberg(&h)?;
            let value = if degree % 2 == 1 {
                0
            } else {
                gkm::cochain_dimension(&graph, degree / 2, degree_cap / 2)?
            };
            match format {
                Format::Text => println!("{value}"),
                Format::Json => print_json(&json!({
                    "n": h.n(),
                    "h": h.values(),
                    "degree": degree,
                    "dimension": value,
                })),
                Format::Dot => unreachable!(),
            }
            Ok(0)
        }

        Command::Cohomology { target, format, hilbert, multiplication_table, tanisaki } => {
            no_dot(format)?;
            let h = target.resolve()?;
            if tanisaki && h != HessFn::springer(3)? {
                return Err(Error::Malformed {
                    what: "arguments",
                    reason: "--tanisaki is the n = 3 Springer regression; use --hess 1,2,3".into(),
                });
            }
            let ring = cohom::QuotientRing::new(&h)?;
            let table = if multiplication_table { Some(ring.multiplication_table()?) } else { None };
            let tan_report = if tanisaki { Some(cohom::tanisaki_check()?) } else { None };
            let failed = tan_report.as_ref().map(|r| !r.passed()).unwrap_or(false);
            match format {
                Format::Text => {
                    println!("h: {h}");
                    println!("dimension: {}", ring.dimension());
                    println!("basis:");
                    for w in ring.basis() {
                        println!("{w}");
                    }
                    if hilbert {
                        println!("hilbert: {}", ring.hilbert_series());
                    }
                    if let Some(rows) = &table {
                        println!("multiplication table:");
                        for (u, w, product) in rows {
                            println!("s[{u}] * s[{w}] = {product}");
                        }
                    }
                    if let Some(report) = &tan_report {
                        println!("tanisaki:");
                        print_report(report, "  ");
                    }
                }
                Format::Json => {
                    let mut value = json!({
                        "n": h.n(),
                        "h": h.values(),
                        "dimension": ring.dimension(),
                        "basis": ring.basis().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    });
                    if hilbert {
                        value["hilbert"] = ring.hilbert_series().to_json_pairs();
                    }
                    if let Some(rows) = &table {
                        value["table"] = serde_json::Value::Array(
                            rows.iter()
                                .map(|(u, w, product)| {
                                    json!({
                                        "u": u.to_string(),
                                        "w": w.to_string(),
                                        "product": product
                                            .iter()
                                            .map(|(v, c)| json!([v.to_string(), c.to_string()]))
                                            .collect::<Vec<_>>(),
                                    })
                                })
                                .collect(),
                        );
                    }
                    if let Some(report) = &tan_report {
                        value["tanisaki"] = report.to_json();
                    }
                    print_json(&value);
                }
                Format::Dot => unreachable!(),
            }
            Ok(if failed { 1 } else { 0 })
        }

        Command::Check { n, hess: hess_text, all_h, seed, keep_going, out } => {
            let (list, sampled) = match (&hess_text, all_h) {
                (Some(text), false) => {
                    let h = HessFn::parse(text)?;
                    if let Some(n) = n {
                        if n != h.n() {
                            return Err(Error::Malformed {
                                what: "arguments",
                                reason: format!(
                                    "--n {n} disagrees with the --hess length {}",
                                    h.n()
                                ),
                            });
                        }
                    }
                    (vec![h], false)
                }
                (None, true) => {
                    let n = n.ok_or(Error::Malformed {
                        what: "arguments",
                        reason: "--all-h requires --n".into(),
                    })?;
                    collect_functions(n, seed)?
                }
                _ => {
                    return Err(Error::Malformed {
                        what: "arguments",
                        reason: "provide either --hess or --all-h".into(),
                    })
                }
            };
            if sampled {
                println!(
                    "sampled {} distinct functions for n = {} (seed {seed})",
                    list.len(),
                    list[0].n()
                );
            }
            let mut entries = Vec::new();
            let mut failures = 0usize;
            for h in &list {
                let report = verify::verify_h(h)?;
                println!("h = {h}");
                print_report(&report, "  ");
                entries.push(json!({
                    "h": h.values(),
                    "passed": report.passed(),
                    "items": report.to_json(),
                }));
                if !report.passed() {
                    failures += 1;
                    if !keep_going {
                        break;
                    }
                }
            }
            if failures == 0 {
                println!("checked {} function(s): all passed", entries.len());
            } else {
                println!("checked {} function(s): {failures} failed", entries.len());
            }
            if let Some(path) = &out {
                let value = json!({
                    "count": list.len(),
                    "passed": failures == 0,
                    "entries": entries,
                });
                write_out(path, &value)?;
            }
            Ok(if failures == 0 { 0 } else { 1 })
        }

        Command::Sweep { n, seed, keep_going, out } => {
            let (list, sampled) = collect_functions(n, seed)?;
            let mut entries = Vec::new();
            let mut failures = 0usize;
            for h in &list {
                let report = verify::verify_h(h)?;
                entries.push(json!({
                    "h": h.values(),
                    "passed": report.passed(),
                    "items": report.to_json(),
                }));
                if !report.passed() {
                    failures += 1;
                    if !keep_going {
                        break;
                    }
                }
            }
            let value = json!({
                "n": n,
                "mode": if sampled { "sampled" } else { "exhaustive" },
                "seed": seed,
                "count": list.len(),
                "passed": failures == 0,
                "entries": entries,
            });
            print_json(&value);
            if let Some(path) = &out {
                write_out(path, &value)?;
            }
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

/// All valid functions for n when that is feasible, otherwise a seeded
/// sample, in lexicographic order either way.
fn collect_functions(n: usize, seed: u64) -> Result<(Vec<HessFn>, bool)> {
    if n <= 6 {
        Ok((hess::enumerate(n)?, false))
    } else {
        let mut list = hess::sample(n, SAMPLE_COUNT, seed)?;
        list.sort_by(|a, b| a.values().cmp(b.values()));
        list.dedup();
        Ok((list, true))
    }
}

fn print_report(report: &CheckReport, indent: &str) {
    for item in &report.items {
        if item.passed {
            println!("{indent}ok   {}", item.name);
        } else {
            println!(
                "{indent}FAIL {}: {}",
                item.name,
                item.witness.as_deref().unwrap_or("no witness")
            );
        }
    }
}
