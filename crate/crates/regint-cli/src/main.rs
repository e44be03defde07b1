//! Command-line front end: every library operation behind one subcommand,
//! with machine-readable output. Exit codes: 0 on success, 1 when a bounded
//! search comes up empty or a verification suite fails, 2 on invalid input.

use clap::{Parser, Subcommand};
use regint::density::{greedy_subseries, RatioKind};
use regint::error::Error;
use regint::sieve::{write_csv, ScanOptions, SpfTable};
use regint::witness::{
    linnik_witness_liminf, linnik_witness_limsup, prop1_ascending_witness,
    prop1_descending_witness, prop3_gap_witness, GapDirection, WitnessKind, WitnessReport,
};
use regint::{arith, verify};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "regint",
    about = "Regular integers modulo n: counts, profiles, range scans, prime witnesses, density targets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print V(n), the number of regular residues modulo n
    V { n: u64 },
    /// Print the regular residues in [1, n], space separated
    Regs {
        n: u64,
        /// Enumeration cap
        #[arg(long, default_value_t = arith::REG_SET_CAP)]
        cap: u64,
    },
    /// Stream per-n profiles (n, V, phi, psi, sigma, squarefree) over [lo, hi]
    Profile {
        lo: u64,
        hi: u64,
        /// Emit CSV instead of the aligned table
        #[arg(long)]
        csv: bool,
    },
    /// Scan [lo, hi] for the behaviour of V(n+1) versus V(n)
    Scan {
        lo: u64,
        hi: u64,
        /// Emit JSON instead of the human summary
        #[arg(long)]
        json: bool,
        /// Store membership lists only for intervals up to this size
        #[arg(long, default_value_t = 1_000_000)]
        list_threshold: u64,
    },
    /// Search for a verified prime witness; prints a JSON report
    ///
    /// Kinds: prop1_ascending/prop1_descending take a list of distinct
    /// primes; prop2_liminf/prop2_limsup take the smoothness bound x;
    /// prop3_up/prop3_down take the least admissible prime.
    Witness {
        kind: String,
        /// Kind-specific integer arguments
        args: Vec<String>,
        #[arg(long, default_value_t = regint::witness::DEFAULT_MAX_STEPS)]
        max_steps: u64,
    },
    /// Greedily select primes whose ratio product approaches delta from below
    Density {
        /// psi_over_v or v_over_phi
        kind: String,
        delta: f64,
        #[arg(long, default_value_t = regint::density::DEFAULT_PRIME_LIMIT)]
        prime_limit: u64,
    },
    /// Run a named invariant suite and print one line per check
    ///
    /// Suites: oracle, identities, ratio_sets, multiplicativity, extremes,
    /// witnesses, density, cross, or all.
    Verify {
        suite: String,
        /// Override the suite's principal bound
        #[arg(long)]
        limit: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::SearchExhausted { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::V { n } => {
            let f = arith::factorize(n)?;
            println!("{}", f.v()?);
        }
        Command::Regs { n, cap } => {
            let set = arith::reg_set_with_cap(n, cap)?;
            let line: Vec<String> = set.iter().map(|a| a.to_string()).collect();
            println!("{}", line.join(" "));
        }
        Command::Profile { lo, hi, csv } => {
            let table = SpfTable::new(hi.max(2))?;
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            if csv {
                write_csv(&mut out, table.profiles(lo, hi)?)
                    .map_err(|e| Error::InvalidInput(format!("write failed: {e}")))?;
            } else {
                writeln!(out, "n\tV\tphi\tpsi\tsigma\tsquarefree")
                    .map_err(|e| Error::InvalidInput(format!("write failed: {e}")))?;
                for p in table.profiles(lo, hi)? {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        p.n,
                        p.v,
                        p.phi,
                        p.psi,
                        p.sigma,
                        u8::from(p.squarefree)
                    )
                    .map_err(|e| Error::InvalidInput(format!("write failed: {e}")))?;
                }
            }
        }
        Command::Scan { lo, hi, json, list_threshold } => {
            let table = SpfTable::new(hi.saturating_add(1).max(2))?;
            let result = table.scan(lo, hi, &ScanOptions { list_threshold })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&result.to_json()).expect("valid json"));
            } else {
                println!("scan [{}, {}]", result.lo, result.hi);
                println!("a_members: {}", result.above.count);
                println!("b_members: {}", result.below.count);
                let equals: Vec<String> =
                    result.equal_points.iter().map(|n| n.to_string()).collect();
                println!("equal_points ({}): {}", equals.len(), equals.join(" "));
                println!("max_diff: {} at n={}", result.max_diff.diff, result.max_diff.n);
                println!("min_diff: {} at n={}", result.min_diff.diff, result.min_diff.n);
                println!("violations: {}", result.violations.len());
                for v in &result.violations {
                    println!("  n={}: {}", v.n, v.description);
                }
            }
        }
        Command::Witness { kind, args, max_steps } => {
            let report = run_witness(&kind, &args, max_steps)?;
            println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("valid json"));
        }
        Command::Density { kind, delta, prime_limit } => {
            let kind = RatioKind::parse(&kind)
                .ok_or_else(|| Error::InvalidInput(format!("unknown ratio kind {kind:?}; expected psi_over_v or v_over_phi")))?;
            let result = greedy_subseries(kind, delta, prime_limit)?;
            println!("{}", serde_json::to_string_pretty(&result.to_json()).expect("valid json"));
        }
        Command::Verify { suite, limit } => {
            let results = verify::run_suite(&suite, limit)?;
            let mut passed = 0usize;
            let mut failed = 0usize;
            for suite_result in &results {
                for check in &suite_result.checks {
                    let status = if check.passed { "PASS" } else { "FAIL" };
                    println!("{status} [{}] {} — {}", suite_result.suite, check.name, check.detail);
                    if check.passed {
                        passed += 1;
                    } else {
                        failed += 1;
                    }
                }
            }
            println!("passed {passed}/{} checks", passed + failed);
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_u64(s: &str) -> Result<u64, Error> {
    s.parse()
        .map_err(|_| Error::InvalidInput(format!("expected an unsigned integer, got {s:?}")))
}

fn parse_primes(args: &[String]) -> Result<Vec<u64>, Error> {
    // Accept either space-separated arguments or one comma-separated token.
    let tokens: Vec<&str> = if args.len() == 1 && args[0].contains(',') {
        args[0].split(',').collect()
    } else {
        args.iter().map(|s| s.as_str()).collect()
    };
    tokens.iter().map(|t| parse_u64(t)).collect()
}

fn one_arg(kind: &str, args: &[String]) -> Result<u64, Error> {
    match args {
        [single] => parse_u64(single),
        _ => Err(Error::InvalidInput(format!(
            "{kind} takes exactly one integer argument, got {}",
            args.len()
        ))),
    }
}

fn run_witness(kind: &str, args: &[String], max_steps: u64) -> Result<WitnessReport, Error> {
    let kind = WitnessKind::parse(kind).ok_or_else(|| {
        Error::InvalidInput(format!(
            "unknown witness kind {kind:?}; expected prop1_ascending, prop1_descending, \
             prop2_liminf, prop2_limsup, prop3_up, or prop3_down"
        ))
    })?;
    match kind {
        WitnessKind::Prop1Ascending => prop1_ascending_witness(&parse_primes(args)?, max_steps),
        WitnessKind::Prop1Descending => prop1_descending_witness(&parse_primes(args)?, max_steps),
        WitnessKind::Prop2Liminf => linnik_witness_liminf(one_arg("prop2_liminf", args)?, max_steps),
        WitnessKind::Prop2Limsup => linnik_witness_limsup(one_arg("prop2_limsup", args)?, max_steps),
        WitnessKind::Prop3Up => {
            prop3_gap_witness(GapDirection::Up, one_arg("prop3_up", args)?, max_steps)
        }
        WitnessKind::Prop3Down => {
            prop3_gap_witness(GapDirection::Down, one_arg("prop3_down", args)?, max_steps)
        }
    }
}
