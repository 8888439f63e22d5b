//! The `bohr` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or table check fails,
//! 2 on invalid arguments or parameters.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::json;

use crate::error::{BohrError, Result};
use crate::harness::{golden_table, run_suite, Suite, GOLDEN_TOL};
use crate::multidim::{
    half_plane_radius, hilbert_radius, hpn_exact, hpn_lower_combine, pbohr_scalar_lower,
    pbohr_vector_lower, PlConvexityConstant,
};
use crate::oracle::{radius_of_with, FunctionFamily, Functional, RadiusOptions, BISECTION_TOL};
use crate::output::{
    sig12, sweep_grid, write_sweep_csv, ArgminField, OutputRecord, RecordValue, SweepRange,
};
use crate::params::BohrParams;
use crate::radius::radius_scalar;

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Classical one-variable radius shared by `r_1^1` and `H_1^1`.
const CLASSICAL_ONE_DIM: f64 = 1.0 / 3.0;

#[derive(Debug, Parser)]
#[command(
    name = "bohr",
    version,
    about = "Generalized Bohr radii and their verification oracle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// R_{p,q}(C): exact value or certified interval with its case tag.
    Scalar {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        json: bool,
    },
    /// R^n_{p,q}(H) for a Hilbert space, q >= 2.
    Hilbert {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// H_p^n for functions with positive real part.
    PositiveReal {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        n: usize,
        /// Lower bound for H_1^n (defaults to 1/3 when n = 1).
        #[arg(long)]
        h1_lower: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// r_p^n(C), or r_p^n(X) given the PL-convexity constant I_p(X).
    Pbohr {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ip: Option<f64>,
        /// Lower bound for r_1^n(C) (defaults to 1/3 when n = 1).
        #[arg(long)]
        r1_lower: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Bisected radius of a concrete family under a functional.
    Oracle {
        /// mobius:a | zmobius:a | blaschke:z1,z2,... | halfplane | constant:c
        family: String,
        /// rpq:p,q | rp:p | hp:p
        functional: String,
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long, default_value_t = BISECTION_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Runs a verification suite; exits 1 on any failure.
    Verify {
        /// golden | oracle_equiv | extremal | identities | bombieri |
        /// schur_random | hilbert | monotone | dispatch_boundary |
        /// caratheodory | all
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Print the JSON report instead of a summary.
        #[arg(long)]
        json: bool,
    },
    /// CSV of R_{p,q}(C) over a grid, row-major in p.
    Sweep {
        #[arg(long)]
        p_range: SweepRange,
        #[arg(long)]
        q_range: SweepRange,
        #[arg(long)]
        step: f64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prints reference tables.
    Table {
        /// Only `known` is available.
        which: String,
    },
}

/// Parses the process arguments and runs the command.
pub fn run() -> ExitCode {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    ExitCode::from(run_from(std::env::args_os(), &mut out))
}

/// Runs the command line on explicit arguments and returns the exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Bohr(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Bohr(BohrError),
    Io(io::Error),
}

impl From<BohrError> for CliError {
    fn from(e: BohrError) -> Self {
        CliError::Bohr(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn emit(out: &mut dyn Write, record: &OutputRecord, label: &str, as_json: bool) -> io::Result<()> {
    if as_json {
        writeln!(out, "{}", record.to_json())
    } else {
        writeln!(out, "{}", record.render(label))
    }
}

fn execute(command: Command, out: &mut dyn Write) -> std::result::Result<u8, CliError> {
    match command {
        Command::Scalar { p, q, json } => {
            let record = OutputRecord::from_radius(&radius_scalar(BohrParams::new(p, q)?));
            emit(out, &record, &format!("R_{{{p},{q}}}(C)"), json)?;
        }
        Command::Hilbert { p, q, n, json } => {
            let h = hilbert_radius(BohrParams::new(p, q)?, n)?;
            let record = OutputRecord {
                p,
                q: Some(q),
                n: Some(n),
                value: RecordValue::Exact { value: h.value },
                case: "hilbert".into(),
                argmin_a: Some(ArgminField(h.argmin)),
            };
            emit(out, &record, &format!("R^{n}_{{{p},{q}}}(H)"), json)?;
        }
        Command::PositiveReal {
            p,
            n,
            h1_lower,
            json,
        } => {
            let record = positive_real(p, n, h1_lower)?;
            emit(out, &record, &format!("H_{p}^{n}"), json)?;
        }
        Command::Pbohr {
            p,
            n,
            ip,
            r1_lower,
            json,
        } => {
            let record = pbohr(p, n, ip, r1_lower)?;
            let space = if ip.is_some() { "X" } else { "C" };
            emit(out, &record, &format!("r_{p}^{n}({space})"), json)?;
        }
        Command::Oracle {
            family,
            functional,
            terms,
            tol,
            json,
        } => {
            let fam = parse_family(&family)?;
            let fun = parse_functional(&functional)?;
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(
                    BohrError::Precondition(format!("--tol must be positive, got {tol}")).into(),
                );
            }
            let r = radius_of_with(&fam, fun, &RadiusOptions { terms, tol })?;
            if json {
                let v = json!({"family": family, "functional": functional, "radius": r});
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "radius({family}, {functional}) = {}", sig12(r))?;
            }
        }
        Command::Verify {
            suite,
            seed,
            samples,
            json,
        } => {
            let report = run_suite(suite.parse::<Suite>()?, seed, samples)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                let status = if report.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {}: {} cases, {} failures, {:.2} s",
                    report.suite,
                    report.cases,
                    report.failures.len(),
                    report.seconds
                )?;
                for f in &report.failures {
                    writeln!(
                        out,
                        "  {}: expected {} got {} tol {}",
                        f.id, f.expected, f.got, f.tol
                    )?;
                }
            }
            if !report.passed() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Sweep {
            p_range,
            q_range,
            step,
            out: path,
        } => {
            let records = sweep_grid(p_range, q_range, step)?;
            match path {
                Some(path) => write_sweep_csv(&records, BufWriter::new(File::create(path)?))?,
                None => write_sweep_csv(&records, &mut *out)?,
            }
        }
        Command::Table { which } => {
            if which != "known" {
                return Err(BohrError::Precondition(format!(
                    "unknown table '{which}', expected 'known'"
                ))
                .into());
            }
            return Ok(print_known_table(out)?);
        }
    }
    Ok(0)
}

fn print_known_table(out: &mut dyn Write) -> io::Result<u8> {
    let mut code = 0;
    writeln!(
        out,
        "{:<16} {:<16} {:<16} {:<6} formula",
        "quantity", "expected", "computed", "status"
    )?;
    for e in golden_table() {
        let (computed, ok) = match &e.computed {
            Ok(v) => (sig12(*v), (v - e.expected).abs() <= GOLDEN_TOL),
            Err(err) => (format!("error: {err}"), false),
        };
        if !ok {
            code = EXIT_FAILURE;
        }
        writeln!(
            out,
            "{:<16} {:<16} {:<16} {:<6} {}",
            e.id,
            sig12(e.expected),
            computed,
            if ok { "ok" } else { "FAIL" },
            e.formula
        )?;
    }
    Ok(code)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(BohrError::Domain {
            what: "n",
            value: 0.0,
            expected: "n >= 1",
        });
    }
    Ok(())
}

fn default_for_one_dim(given: Option<f64>, n: usize, flag: &str) -> Result<f64> {
    match (given, n) {
        (Some(v), _) => Ok(v),
        (None, 1) => Ok(CLASSICAL_ONE_DIM),
        (None, _) => Err(BohrError::Precondition(format!(
            "no default lower bound for n = {n}; pass {flag}"
        ))),
    }
}

fn interval(lo: f64, hi: f64) -> RecordValue {
    RecordValue::Interval { lo, hi: hi.max(lo) }
}

/// `H_p^n`: exact for `p >= 2` and for `p = 1, n = 1`, otherwise an enclosure
/// whose upper end comes from the half-plane map `(1+z)/(1-z)`.
pub fn positive_real(p: f64, n: usize, h1_lower: Option<f64>) -> Result<OutputRecord> {
    check_n(n)?;
    let (value, case) = if p >= 2.0 {
        (
            RecordValue::Exact {
                value: hpn_exact(p)?,
            },
            "H_exact",
        )
    } else if p > 1.0 {
        let h1 = default_for_one_dim(h1_lower, n, "--h1-lower")?;
        let lo = hpn_lower_combine(p, h1, hpn_exact(2.0)?)?;
        (interval(lo, half_plane_radius(p)), "H_bounds")
    } else if p == 1.0 {
        match h1_lower {
            None if n == 1 => (
                RecordValue::Exact {
                    value: CLASSICAL_ONE_DIM,
                },
                "H_exact",
            ),
            None => {
                return Err(BohrError::Precondition(format!(
                    "no default lower bound for H_1^{n}; pass --h1-lower"
                )))
            }
            Some(h1) => {
                crate::error::check_domain("h1", h1, h1 > 0.0 && h1 <= 1.0, "0 < h1 <= 1")?;
                (interval(h1, CLASSICAL_ONE_DIM), "H_bounds")
            }
        }
    } else {
        return Err(BohrError::UnsupportedExponent {
            what: "p",
            value: p,
            reason: "H_p^n is defined for p >= 1",
        });
    };
    Ok(OutputRecord {
        p,
        q: None,
        n: Some(n),
        value,
        case: case.into(),
        argmin_a: None,
    })
}

/// `r_p^n`: scalar (exact for `p >= 2` and `p = 1, n = 1`) or vector-valued
/// given `I_p(X)`.
pub fn pbohr(p: f64, n: usize, ip: Option<f64>, r1_lower: Option<f64>) -> Result<OutputRecord> {
    check_n(n)?;
    let (value, case) = if let Some(ip) = ip {
        let lo = pbohr_vector_lower(PlConvexityConstant::new(p, ip)?);
        (interval(lo, 1.0), "r_p_vector")
    } else if p >= 2.0 {
        (RecordValue::Exact { value: 1.0 }, "r_p_exact")
    } else if p > 1.0 {
        let r1 = default_for_one_dim(r1_lower, n, "--r1-lower")?;
        (interval(pbohr_scalar_lower(p, r1)?, 1.0), "r_p_bounds")
    } else if p == 1.0 {
        match r1_lower {
            None if n == 1 => (
                RecordValue::Exact {
                    value: CLASSICAL_ONE_DIM,
                },
                "r_p_exact",
            ),
            None => {
                return Err(BohrError::Precondition(format!(
                    "no default lower bound for r_1^{n}; pass --r1-lower"
                )))
            }
            Some(r1) => {
                crate::error::check_domain("r1", r1, r1 > 0.0 && r1 <= 1.0, "0 < r1 <= 1")?;
                (interval(r1, CLASSICAL_ONE_DIM), "r_p_bounds")
            }
        }
    } else {
        return Err(BohrError::UnsupportedExponent {
            what: "p",
            value: p,
            reason: "r_p^n is defined for p >= 1",
        });
    };
    Ok(OutputRecord {
        p,
        q: None,
        n: Some(n),
        value,
        case: case.into(),
        argmin_a: None,
    })
}

fn parse_reals(s: &str, what: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| BohrError::Precondition(format!("cannot parse '{t}' in {what}")))
        })
        .collect()
}

/// Parses `mobius:a`, `zmobius:a`, `blaschke:z1,z2,...`, `halfplane` or `constant:c`.
pub fn parse_family(spec: &str) -> Result<FunctionFamily> {
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let one = |what: &str| -> Result<f64> {
        match parse_reals(arg, what)?.as_slice() {
            [x] => Ok(*x),
            _ => Err(BohrError::InvalidFamily(format!(
                "{what} takes one real argument"
            ))),
        }
    };
    let family = match name {
        "mobius" => FunctionFamily::Mobius(one("mobius")?),
        "zmobius" => FunctionFamily::ZMobius(one("zmobius")?),
        "constant" => FunctionFamily::Constant(one("constant")?),
        "halfplane" if arg.is_empty() => FunctionFamily::HalfPlane,
        "blaschke" => {
            let zeros = arg
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<Complex64>()
                        .map_err(|_| BohrError::InvalidFamily(format!("cannot parse zero '{t}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            FunctionFamily::Blaschke {
                zeros,
                phase: Complex64::new(1.0, 0.0),
            }
        }
        _ => {
            return Err(BohrError::InvalidFamily(format!(
                "unknown family spec '{spec}'"
            )))
        }
    };
    family.validate()?;
    Ok(family)
}

/// Parses `rpq:p,q`, `rp:p` or `hp:p`.
pub fn parse_functional(spec: &str) -> Result<Functional> {
    let bad = || BohrError::Precondition(format!("unknown functional spec '{spec}'"));
    let (name, arg) = spec.split_once(':').ok_or_else(bad)?;
    let args = parse_reals(arg, "functional")?;
    match (name, args.as_slice()) {
        ("rpq", [p, q]) => Ok(Functional::Rpq(BohrParams::new(*p, *q)?)),
        ("rp", [p]) => Ok(Functional::Rp(*p)),
        ("hp", [p]) => Ok(Functional::Hp(*p)),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (u8, String) {
        let mut out = Vec::new();
        let code = run_from(
            std::iter::once("bohr").chain(args.iter().copied()),
            &mut out,
        );
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn scalar_examples() {
        let (code, text) = run(&["scalar", "--p", "1", "--q", "1"]);
        assert_eq!(code, 0);
        assert!(
            text.contains("0.333333333333") && text.contains("PQ_le2"),
            "{text}"
        );
        let (_, text) = run(&["scalar", "--p", "2", "--q", "5"]);
        assert!(text.contains("0.707106781187") && text.contains("Ple2_Qgt2_exact"));
        let (_, text) = run(&["scalar", "--p", "1", "--q", "3", "--json"]);
        let rec = OutputRecord::from_json(text.trim()).unwrap();
        assert!(matches!(rec.value, RecordValue::Interval { .. }));
        assert_eq!(run(&["scalar", "--p", "0.5", "--q", "1"]).0, EXIT_USAGE);
        assert_eq!(run(&["scalar", "--p", "1"]).0, EXIT_USAGE);
    }

    #[test]
    fn multidim_examples() {
        let (_, text) = run(&["hilbert", "--p", "2", "--q", "2", "--n", "2"]);
        assert!(text.contains("0.541196100146"), "{text}");
        assert_eq!(
            run(&["hilbert", "--p", "2", "--q", "1.5", "--n", "2"]).0,
            EXIT_USAGE
        );
        let (_, text) = run(&["positive-real", "--p", "2", "--n", "7"]);
        assert!(text.contains("0.654653670708"), "{text}");
        assert_eq!(
            run(&["positive-real", "--p", "1.5", "--n", "3"]).0,
            EXIT_USAGE
        );
        let (code, _) = run(&[
            "positive-real",
            "--p",
            "1.5",
            "--n",
            "3",
            "--h1-lower",
            "0.1",
        ]);
        assert_eq!(code, 0);
        let (_, text) = run(&["pbohr", "--p", "3", "--n", "4", "--ip", "1"]);
        assert!(text.contains("0.231120424784"), "{text}");
        let (_, text) = run(&["pbohr", "--p", "1.5", "--n", "1"]);
        assert!(text.contains("0.693361274351"), "{text}");
    }

    #[test]
    fn positive_real_bounds_are_ordered() {
        for p in [1.1, 1.5, 1.9] {
            let r = positive_real(p, 1, None).unwrap();
            match r.value {
                RecordValue::Interval { lo, hi } => assert!(lo <= hi),
                RecordValue::Exact { .. } => panic!("expected interval"),
            }
        }
        assert!(positive_real(0.5, 1, None).is_err());
        assert!(pbohr(2.0, 0, None, None).is_err());
    }

    #[test]
    fn spec_parsers() {
        assert_eq!(
            parse_family("mobius:0.5").unwrap(),
            FunctionFamily::Mobius(0.5)
        );
        assert_eq!(
            parse_family("halfplane").unwrap(),
            FunctionFamily::HalfPlane
        );
        match parse_family("blaschke:0.5,0.3+0.2i").unwrap() {
            FunctionFamily::Blaschke { zeros, .. } => {
                assert_eq!(zeros[1], Complex64::new(0.3, 0.2));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_family("mobius:1.5").is_err());
        assert!(parse_family("wobbly:1").is_err());
        assert!(parse_functional("rpq:1,1").is_ok());
        assert!(parse_functional("rpq:1").is_err());
        assert!(parse_functional("hp:2").is_ok());
    }

    #[test]
    fn oracle_and_table() {
        let (code, text) = run(&["oracle", "mobius:0.5", "rpq:1,1"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.starts_with("radius(mobius:0.5, rpq:1,1) = "));
        let (code, text) = run(&["table", "known"]);
        assert_eq!(code, 0, "{text}");
        assert_eq!(text.lines().count(), 12);
        assert_eq!(run(&["table", "other"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(run(&["verify", "golden"]).0, 0);
        assert_eq!(run(&["verify", "nonsense"]).0, EXIT_USAGE);
        let (code, text) = run(&["verify", "dispatch_boundary", "--json"]);
        assert_eq!(code, 0);
        assert!(text.contains("\"suite\":\"dispatch_boundary\""));
    }
}
