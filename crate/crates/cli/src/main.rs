//! Command-line front end: instance generation, the three solvers with
//! optional exhaustive cross-checks, and the random-graph gap experiment.
//!
//! Structured output goes to stdout as `key=value` lines and is fully
//! determined by the arguments (no timestamps, no wall time); human
//! summaries and timing go to stderr.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use edgecover_core::{density, fcec, gen, instance, mwec, oracle, reduce};
use edgecover_core::{Error, Graph, Rational, Solution, VertexSet};

#[derive(Parser)]
#[command(name = "edgecover", version, about = "budgeted edge-cover solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Solve a problem on an instance file
    Solve {
        #[command(subcommand)]
        problem: Problem,
    },
    /// Random-graph integrality gap experiment
    Gap {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "EDGECOVER_SEED", default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct OutFile {
    /// output path (stdout when omitted)
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Erdos-Renyi G(n, p)
    Gnp {
        #[arg(long)]
        n: usize,
        /// edge probability as a fraction, e.g. 1/10
        #[arg(long)]
        p: Rational,
        #[arg(long, env = "EDGECOVER_SEED", default_value_t = 0)]
        seed: u64,
        /// random integer weights "lo:hi" (unit weights when omitted)
        #[arg(long)]
        weights: Option<String>,
        #[command(flatten)]
        out: OutFile,
    },
    /// Star with the given number of leaves (center is vertex 0)
    Star {
        #[arg(long)]
        leaves: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Path on n vertices
    Path {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Complete graph on n vertices
    Complete {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Args)]
struct SolveCommon {
    /// instance file
    #[arg(short, long)]
    input: PathBuf,
    /// cross-check against the exhaustive solver
    #[arg(long)]
    oracle: bool,
    /// vertex-count cap for the exhaustive solver
    #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
    oracle_cap: usize,
    /// recompute weight and touched count from scratch and verify
    #[arg(long)]
    audit: bool,
}

#[derive(Subcommand)]
enum Problem {
    /// Minimize touched edges subject to a weight target
    Fcec {
        #[command(flatten)]
        common: SolveCommon,
        #[arg(long)]
        target_weight: u64,
    },
    /// Maximize weight subject to a touched-edge budget
    Mwec {
        #[command(flatten)]
        common: SolveCommon,
        #[arg(long)]
        edge_budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// use the randomized FCEC reduction instead of the direct solver
        #[arg(long)]
        via_fcec: bool,
        #[arg(long, default_value = "2")]
        alpha: Rational,
        #[arg(long, default_value = "1/2")]
        tau: Rational,
        #[arg(long, default_value_t = 10)]
        retries: u32,
        #[arg(long, env = "EDGECOVER_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Maximize (e(W) + e(U,W)) / deg(W) over W disjoint from the anchor
    Density {
        #[command(flatten)]
        common: SolveCommon,
        /// anchor set U as a comma-separated vertex list (may be empty)
        #[arg(long, default_value = "")]
        anchor: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let code = match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    };
    eprintln!("wall_time={:?}", started.elapsed());
    code
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::Parse { .. } => 3,
        Error::Infeasible(_) | Error::Degenerate(_) | Error::Overflow(_) => 4,
        Error::CapExceeded { .. } => 6,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Gen { family } => run_gen(family),
        Command::Solve { problem } => run_solve(problem),
        Command::Gap { n, seed } => {
            let report = reduce::gap_experiment(n, seed)?;
            println!("cmd=gap {}", report.to_kv());
            eprintln!(
                "gap experiment: n={} ratio={} ({:.4})",
                report.n,
                report.ratio,
                report.ratio.to_f64()
            );
            Ok(())
        }
    }
}

fn run_gen(family: GenFamily) -> Result<(), Error> {
    let (g, out) = match family {
        GenFamily::Gnp {
            n,
            p,
            seed,
            weights,
            out,
        } => {
            let mut g = gen::gnp(n, p, seed)?;
            if let Some(spec) = weights {
                let (lo, hi) = parse_weight_range(&spec)?;
                g = gen::random_weights(&g, lo, hi, seed ^ 0x9e37_79b9)?;
            }
            (g, out)
        }
        GenFamily::Star { leaves, out } => (gen::star(leaves)?, out),
        GenFamily::Path { n, out } => (gen::path(n)?, out),
        GenFamily::Complete { n, out } => (gen::complete(n)?, out),
    };
    let text = instance::save_instance(&g);
    match out.out {
        Some(path) => std::fs::write(&path, &text)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    eprintln!("generated n={} m={}", g.n(), g.m());
    Ok(())
}

fn parse_weight_range(spec: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::Input(format!("bad weight range {spec:?}, expected lo:hi"));
    let (lo, hi) = spec.split_once(':').ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_anchor(spec: &str) -> Result<VertexSet, Error> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| Error::Input(format!("bad anchor vertex {s:?}")))
        })
        .collect()
}

/// FNV-1a over the canonical instance text; stable instance fingerprint.
fn digest(g: &Graph) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in instance::save_instance(g).bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn load(common: &SolveCommon) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(&common.input)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", common.input.display())))?;
    instance::load_instance(&text)
}

fn report_header(kind: &str, g: &Graph) -> String {
    format!(
        "cmd=solve.{kind} instance={:016x} n={} m={}",
        digest(g),
        g.n(),
        g.m()
    )
}

fn check_audit(g: &Graph, sol: &Solution) -> Result<(), Error> {
    let fresh = Solution::audit(g, sol.set.clone())?;
    if fresh != *sol {
        // an audit mismatch is a solver bug, not an input problem
        return Err(Error::Input(format!(
            "audit mismatch: reported weight={} touched={}, recomputed weight={} touched={}",
            sol.weight, sol.touched, fresh.weight, fresh.touched
        )));
    }
    Ok(())
}

fn run_solve(problem: Problem) -> Result<(), Error> {
    match problem {
        Problem::Fcec {
            common,
            target_weight,
        } => {
            let g = load(&common)?;
            let inst = fcec::FcecInstance {
                graph: g.clone(),
                target_weight,
            };
            let sol = fcec::fcec_approx(&inst)?;
            if common.audit {
                check_audit(&g, &sol)?;
            }
            let mut line = report_header("fcec", &g);
            write!(
                line,
                " target_weight={target_weight} set={} weight={} touched={}",
                sol.set, sol.weight, sol.touched
            )
            .unwrap();
            if common.oracle {
                let best = oracle::brute_fcec(&g, target_weight, common.oracle_cap)?;
                write!(
                    line,
                    " oracle_touched={} oracle_witness={} ratio={}",
                    best.int(),
                    best.witness,
                    Rational::new(sol.touched as i128, best.int().max(1) as i128)?
                )
                .unwrap();
            }
            println!("{line}");
            eprintln!(
                "fcec: touched {} edges with weight {} (target {})",
                sol.touched, sol.weight, target_weight
            );
        }
        Problem::Mwec {
            common,
            edge_budget,
            threads,
            via_fcec,
            alpha,
            tau,
            retries,
            seed,
        } => {
            let g = load(&common)?;
            let mut line = report_header("mwec", &g);
            write!(line, " edge_budget={edge_budget}").unwrap();
            let sol = if via_fcec {
                let outcome =
                    reduce::mwec_via_fcec(&g, edge_budget, &alpha, &tau, retries, seed)?;
                write!(
                    line,
                    " via_fcec=true alpha={alpha} tau={tau} retries={retries} seed={seed} exhausted={}",
                    outcome.exhausted
                )
                .unwrap();
                outcome.solution
            } else {
                let inst = mwec::MwecInstance {
                    graph: g.clone(),
                    edge_budget,
                };
                mwec::mwec_dp_threads(&inst, threads)?
            };
            if common.audit {
                check_audit(&g, &sol)?;
            }
            if sol.touched > edge_budget {
                return Err(Error::Infeasible(format!(
                    "result touches {} > {} edges",
                    sol.touched, edge_budget
                )));
            }
            write!(
                line,
                " set={} weight={} touched={}",
                sol.set, sol.weight, sol.touched
            )
            .unwrap();
            if common.oracle {
                let best = oracle::brute_mwec(&g, edge_budget, common.oracle_cap)?;
                write!(
                    line,
                    " oracle_weight={} oracle_witness={}",
                    best.int(),
                    best.witness
                )
                .unwrap();
            }
            println!("{line}");
            eprintln!(
                "mwec: weight {} touching {} edges (budget {})",
                sol.weight, sol.touched, edge_budget
            );
        }
        Problem::Density { common, anchor } => {
            let g = load(&common)?;
            let u = parse_anchor(&anchor)?;
            let (w, rho) = density::density_aug(&g, &u)?;
            let mut line = report_header("density", &g);
            write!(line, " anchor={u} set={w} rho={rho}").unwrap();
            if common.oracle {
                let best = oracle::brute_density_aug(&g, &u, common.oracle_cap)?;
                if best.ratio() != rho {
                    return Err(Error::Input(format!(
                        "oracle mismatch: solver rho={rho}, exhaustive rho={}",
                        best.ratio()
                    )));
                }
                write!(line, " oracle_rho={} oracle_witness={}", best.ratio(), best.witness)
                    .unwrap();
            }
            println!("{line}");
            eprintln!("density: rho*={} ({:.4}) at W={w}", rho, rho.to_f64());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_range_parses() {
        assert_eq!(parse_weight_range("1:8").unwrap(), (1, 8));
        assert!(parse_weight_range("8:1").is_err());
        assert!(parse_weight_range("1-8").is_err());
    }

    #[test]
    fn anchor_parses() {
        assert_eq!(parse_anchor("").unwrap(), VertexSet::empty());
        let u = parse_anchor("2, 0,1").unwrap();
        assert_eq!(u.to_string(), "{0,1,2}");
        assert!(parse_anchor("x").is_err());
    }

    #[test]
    fn digest_is_stable() {
        let g = gen::path(3).unwrap();
        assert_eq!(digest(&g), digest(&gen::path(3).unwrap()));
        assert_ne!(digest(&g), digest(&gen::path(4).unwrap()));
    }
}
