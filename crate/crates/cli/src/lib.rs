//! Command-line front end.
//!
//! Exit codes: 0 yes/verified, 1 no/refuted, 2 budget exceeded, 64 usage
//! error, 65 malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use cycletype::json::{read_instance, read_reduced, read_witness, write_reduced, ReducedInstance};
use cycletype::notation::{format_permutation, parse_permutation};
use cycletype::perm::basis_for_degree;
use cycletype::solvers::brute_cyclic;
use cycletype::{
    decide_cycletype_cyclic, extract_assignment, extract_hitting_set, reduce_3sat, reduce_x3hs,
    solve_cycletype_ab2, solve_fpf_ab2, verify_witness_cycletype, verify_witness_fpf, Instance,
    Permutation, SearchBudget, SolveStatus,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATAERR: i32 = 65;

/// Environment variable holding the default pair budget for `solve`.
pub const BUDGET_ENV: &str = "CYCLETYPE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "cycletype", version, about = "Cycle types in permutation groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct PermOpts {
    /// Degree of the permutations (default: largest point mentioned).
    #[arg(long)]
    deg: Option<usize>,
    /// Print fixpoints as 1-cycles.
    #[arg(long)]
    explicit_fixpoints: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    X3hs,
    #[value(name = "3sat")]
    ThreeSat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveKind {
    Ab2,
    Cyclic,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the cycle type.
    Ct {
        perm: String,
        #[command(flatten)]
        opts: PermOpts,
    },
    /// Print the order, factored and in decimal.
    Order {
        perm: String,
        #[command(flatten)]
        opts: PermOpts,
    },
    /// Print a power of a permutation. EXP is decimal or factored (2^3·5).
    Pow {
        perm: String,
        exp: String,
        #[command(flatten)]
        opts: PermOpts,
    },
    /// Decide whether some power of PI has the cycle type of RHO.
    DecideCyclic {
        pi: String,
        rho: String,
        #[command(flatten)]
        opts: PermOpts,
    },
    /// Reduce an X3HS or 3-SAT instance to a 2-generated abelian instance.
    Reduce {
        problem: Problem,
        file: PathBuf,
        /// Read the 3-SAT instance as DIMACS CNF.
        #[arg(long)]
        dimacs: bool,
        /// Mark the reduced instance as a coset problem.
        #[arg(long)]
        coset: bool,
        /// Write the JSON here and print a summary instead.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Brute-force search. `ab2 PI1 PI2 [RHO]` or `cyclic PI RHO`.
    Solve {
        kind: SolveKind,
        #[arg(value_name = "PERMS")]
        texts: Vec<String>,
        /// Search for a fixpoint-free element instead of a cycle type.
        #[arg(long)]
        fpf: bool,
        /// Maximum number of exponent pairs (or exponents) to try.
        #[arg(long, env = BUDGET_ENV, default_value_t = 10_000_000)]
        budget: u64,
        /// Wall-clock limit in seconds.
        #[arg(long, default_value_t = 60.0)]
        time_limit: f64,
        #[command(flatten)]
        opts: PermOpts,
    },
    /// Check a witness against a reduced instance.
    Verify {
        file: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        /// Require the first exponent to be 1.
        #[arg(long)]
        coset: bool,
    },
    /// Translate a witness back to a hitting set or truth assignment.
    Extract {
        file: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
}

/// A failure that ends the command with a message on stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn data(message: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_DATAERR, message: message.to_string() }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn perm(text: &str, deg: Option<usize>) -> Result<Permutation, Failure> {
    parse_permutation(text, deg).map_err(|e| Failure::data(format!("{text:?}: {e}")))
}

/// Parses several permutations into one symmetric group. Without `--deg` the
/// degree is the largest one any input implies on its own.
fn perms(texts: &[String], deg: Option<usize>) -> Result<Vec<Permutation>, Failure> {
    let deg = deg.or_else(|| texts.iter().filter_map(|t| parse_permutation(t, None).ok()).map(|p| p.degree()).max());
    texts.iter().map(|t| perm(t, deg)).collect()
}

/// Decimal (`360`) or factored (`2^3·3^2·5`, `*` also accepted).
fn parse_exponent(text: &str) -> Result<BigUint, Failure> {
    let bad = || Failure::data(format!("{text:?}: expected a nonnegative integer or p^e·… product"));
    let mut acc = BigUint::from(1u32);
    for factor in text.trim().split(['·', '*']) {
        let (base, exp) = match factor.trim().split_once('^') {
            Some((b, e)) => (b, e.trim().parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let base: BigUint = base.trim().parse().map_err(|_| bad())?;
        acc *= base.pow(exp);
    }
    Ok(acc)
}

fn emit(out: &mut dyn Write, format: Format, text: impl std::fmt::Display, json: serde_json::Value) {
    let _ = match format {
        Format::Text => writeln!(out, "{text}"),
        Format::Json => writeln!(out, "{json}"),
    };
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_YES
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Ct { perm: p, opts } => {
            let ct = perm(&p, opts.deg)?.cycle_type();
            let entries: Vec<_> = ct.entries().iter().map(|&(l, m)| json!([l, m])).collect();
            emit(out, format, &ct, json!({ "cycle_type": entries }));
            Ok(EXIT_YES)
        }
        Command::Order { perm: p, opts } => {
            let p = perm(&p, opts.deg)?;
            let ord = p.order_pe(&basis_for_degree(p.degree())).map_err(Failure::data)?;
            let decimal = ord.to_u128().map(|v| v.to_string());
            let text = match &decimal {
                Some(d) => format!("{ord} = {d}"),
                None => ord.to_string(),
            };
            emit(out, format, text, json!({ "order_factored": ord.to_string(), "order": decimal }));
            Ok(EXIT_YES)
        }
        Command::Pow { perm: p, exp, opts } => {
            let p = perm(&p, opts.deg)?.power(parse_exponent(&exp)?);
            let text = format_permutation(&p, opts.explicit_fixpoints);
            let images: Vec<usize> = p.images().collect();
            let cycles = p.to_cycles().notation(opts.explicit_fixpoints);
            emit(out, format, text, json!({ "degree": p.degree(), "images": images, "cycles": cycles }));
            Ok(EXIT_YES)
        }
        Command::DecideCyclic { pi, rho, opts } => {
            let [pi, rho]: [Permutation; 2] = perms(&[pi, rho], opts.deg)?.try_into().expect("two inputs");
            let d = decide_cycletype_cyclic(&pi, &rho).map_err(Failure::data)?;
            let reason = d.reason.as_str();
            match &d.witness_d {
                Some(w) => {
                    let shown = w.to_u128().map_or_else(|| w.to_string(), |v| v.to_string());
                    emit(
                        out,
                        format,
                        format!("YES d={shown}"),
                        json!({ "answer": true, "d": w.to_u128().map(|v| v.to_string()), "d_factored": w.to_string(), "reason": reason }),
                    );
                    Ok(EXIT_YES)
                }
                None => {
                    emit(out, format, format!("NO reason={reason}"), json!({ "answer": false, "reason": reason }));
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Reduce { problem, file, dimacs, coset, output } => {
            let text = read_file(&file)?;
            let reduced = match (problem, dimacs) {
                (Problem::ThreeSat, true) => {
                    let f = cycletype::dimacs::parse_dimacs(&text)
                        .map_err(|e| Failure::data(format!("{}: {e}", file.display())))?;
                    ReducedInstance::FixpointFree(reduce_3sat(&f).map_err(Failure::data)?.with_coset(coset))
                }
                (Problem::X3hs, true) => {
                    return Err(Failure { code: EXIT_USAGE, message: "--dimacs applies to 3sat only".into() })
                }
                (p, false) => {
                    let inst = read_instance(&text).map_err(|e| Failure::data(format!("{}: {e}", file.display())))?;
                    match (p, inst) {
                        (Problem::X3hs, Instance::X3hs(i)) => {
                            ReducedInstance::CycleType(reduce_x3hs(&i).map_err(Failure::data)?.with_coset(coset))
                        }
                        (Problem::ThreeSat, Instance::Cnf3(i)) => {
                            ReducedInstance::FixpointFree(reduce_3sat(&i).map_err(Failure::data)?.with_coset(coset))
                        }
                        _ => return Err(Failure::data("instance type does not match the requested reduction")),
                    }
                }
            };
            let doc = write_reduced(&reduced);
            match output {
                Some(path) => {
                    std::fs::write(&path, doc + "\n")
                        .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
                    let (kind, n, comps) = match &reduced {
                        ReducedInstance::CycleType(r) => ("reduced-x3hs", r.degree(), r.layout().components.len()),
                        ReducedInstance::FixpointFree(r) => ("reduced-cnf3", r.degree(), r.layout().components.len()),
                    };
                    emit(
                        out,
                        format,
                        format!("{kind} N={n} components={comps}"),
                        json!({ "type": kind, "n_total": n, "components": comps }),
                    );
                }
                None => {
                    let _ = writeln!(out, "{doc}");
                }
            }
            Ok(EXIT_YES)
        }
        Command::Solve { kind, texts, fpf, budget, time_limit, opts } => {
            let parsed = perms(&texts, opts.deg)?;
            let usage = |m: &str| Failure { code: EXIT_USAGE, message: m.to_string() };
            match kind {
                SolveKind::Cyclic => {
                    let [pi, rho] = parsed.as_slice() else {
                        return Err(usage("solve cyclic takes PI RHO"));
                    };
                    match brute_cyclic(pi, rho, budget) {
                        Ok(Some(q)) => {
                            emit(out, format, format!("FOUND q={q}"), json!({ "status": "found", "q": q.to_string() }));
                            Ok(EXIT_YES)
                        }
                        Ok(None) => {
                            emit(out, format, "NONE", json!({ "status": "exhausted" }));
                            Ok(EXIT_NO)
                        }
                        Err(cycletype::Error::OrderBudget(o)) => {
                            emit(out, format, format!("BUDGET-EXCEEDED order={o}"), json!({ "status": "budget-exceeded", "order": o }));
                            Ok(EXIT_BUDGET)
                        }
                        Err(e) => Err(Failure::data(e)),
                    }
                }
                SolveKind::Ab2 => {
                    let b = SearchBudget { max_pairs: budget, time_limit: Duration::from_secs_f64(time_limit.max(0.0)) };
                    let result = match (parsed.as_slice(), fpf) {
                        ([p1, p2], true) => solve_fpf_ab2(p1, p2, b),
                        ([p1, p2, rho], false) => solve_cycletype_ab2(p1, p2, rho, b),
                        _ => return Err(usage("solve ab2 takes PI1 PI2 RHO, or PI1 PI2 with --fpf")),
                    }
                    .map_err(Failure::data)?;
                    let tried = result.pairs_tried;
                    match (result.status, result.witness) {
                        (SolveStatus::FoundWitness, Some(w)) => {
                            emit(
                                out,
                                format,
                                format!("FOUND x1={} x2={} pairs={tried}", w.x1, w.x2),
                                json!({ "status": "found", "x1": w.x1.to_string(), "x2": w.x2.to_string(), "pairs_tried": tried }),
                            );
                            Ok(EXIT_YES)
                        }
                        (SolveStatus::BudgetExceeded, _) => {
                            emit(out, format, format!("BUDGET-EXCEEDED pairs={tried}"), json!({ "status": "budget-exceeded", "pairs_tried": tried }));
                            Ok(EXIT_BUDGET)
                        }
                        _ => {
                            emit(out, format, format!("NONE pairs={tried}"), json!({ "status": "exhausted", "pairs_tried": tried }));
                            Ok(EXIT_NO)
                        }
                    }
                }
            }
        }
        Command::Verify { file, witness, coset } => {
            let (reduced, w) = load_pair(&file, &witness)?;
            let ok = match reduced {
                ReducedInstance::CycleType(r) => {
                    let coset = coset || r.is_coset();
                    verify_witness_cycletype(&r.with_coset(coset), &w)
                }
                ReducedInstance::FixpointFree(r) => {
                    let coset = coset || r.is_coset();
                    verify_witness_fpf(&r.with_coset(coset), &w)
                }
            };
            let text = if ok { "VERIFIED" } else { "REFUTED" };
            emit(out, format, text, json!({ "verified": ok }));
            Ok(if ok { EXIT_YES } else { EXIT_NO })
        }
        Command::Extract { file, witness } => {
            let (reduced, w) = load_pair(&file, &witness)?;
            let refuted = |e: cycletype::Error| Failure { code: EXIT_NO, message: e.to_string() };
            match reduced {
                ReducedInstance::CycleType(r) => {
                    let t = extract_hitting_set(&r, &w).map_err(refuted)?;
                    let shown: Vec<String> = t.iter().map(ToString::to_string).collect();
                    emit(out, format, format!("T = {{{}}}", shown.join(", ")), json!({ "hitting_set": t }));
                }
                ReducedInstance::FixpointFree(r) => {
                    let sigma = extract_assignment(&r, &w).map_err(refuted)?;
                    let lits: Vec<String> = sigma
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if v { format!("{}", i + 1) } else { format!("-{}", i + 1) })
                        .collect();
                    emit(out, format, format!("assignment: {}", lits.join(" ")), json!({ "assignment": sigma }));
                }
            }
            Ok(EXIT_YES)
        }
    }
}

fn load_pair(file: &Path, witness: &Path) -> Result<(ReducedInstance, cycletype::WitnessExponents), Failure> {
    let reduced = read_reduced(&read_file(file)?).map_err(|e| Failure::data(format!("{}: {e}", file.display())))?;
    let w = read_witness(&read_file(witness)?).map_err(|e| Failure::data(format!("{}: {e}", witness.display())))?;
    Ok((reduced, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cycletype").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exponent_syntax() {
        assert_eq!(parse_exponent("360").ok(), Some(BigUint::from(360u32)));
        assert_eq!(parse_exponent("2^3·3^2·5").ok(), Some(BigUint::from(360u32)));
        assert_eq!(parse_exponent("2^3*45").ok(), Some(BigUint::from(360u32)));
        assert!(parse_exponent("two").is_err());
        assert!(parse_exponent("-1").is_err());
    }

    #[test]
    fn usage_errors_exit_64() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["ct"]).0, EXIT_USAGE);
        assert_eq!(call(&["solve", "ab2", "(1 2)"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_YES);
    }

    #[test]
    fn malformed_input_exit_65() {
        let (code, _, err) = call(&["ct", "(1 2"]);
        assert_eq!(code, EXIT_DATAERR);
        assert!(err.contains("column"), "{err}");
        assert_eq!(call(&["decide-cyclic", "(1 2 3)", "(1 2)", "--deg", "2"]).0, EXIT_DATAERR);
        assert_eq!(call(&["verify", "/nonexistent.json", "--witness", "/nonexistent.json"]).0, EXIT_DATAERR);
    }

    #[test]
    fn json_output() {
        let (code, out, _) = call(&["--format", "json", "ct", "(1 2)(3 4 5)", "--deg", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"cycle_type\":[[1,1],[2,1],[3,1]]}\n");
        let (_, out, _) = call(&["decide-cyclic", "(1 2 3 4 5 6)", "(1 2)(3 4)(5 6)", "--format", "json"]);
        assert_eq!(out, "{\"answer\":true,\"d\":\"3\",\"d_factored\":\"3\",\"reason\":\"match\"}\n");
    }

    #[test]
    fn inputs_share_the_largest_degree() {
        // (1 2)(3 4) alone has degree 4; it is read in Sym(6) alongside π.
        let (code, out, _) = call(&["decide-cyclic", "(1 2 3 4 5 6)", "(1 2)(3 4)"]);
        assert_eq!((code, out.as_str()), (EXIT_NO, "NO reason=type-mismatch\n"));
        let (code, out, _) = call(&["solve", "ab2", "(1 2)", "(3 4)", "(1 2)(3 4)"]);
        assert_eq!((code, out.as_str()), (EXIT_YES, "FOUND x1=1 x2=1 pairs=4\n"));
        assert_eq!(call(&["decide-cyclic", "[2,1]", "(1 2 3)"]).0, EXIT_DATAERR);
    }
}
