//! Command-line front end for the exact semigroup invariants: compute
//! reports, sweep the non-representability indicator, verify formulas
//! against the brute-force oracle, and batch-process tuple files.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or validation
//! error.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use frobenius3::frobenius::{self, invariants};
use frobenius3::johnson::{self, diagonal_via_xi};
use frobenius3::oracle;
use frobenius3::semigroup::{
    matrix_representation, sylvester_pair, Generators, DEFAULT_MAGNITUDE_GUARD,
};
use frobenius3::series::SparseSeries;
use frob3::report::{Report, Verdict};

/// Overrides the default input magnitude guard (product of generators).
const GUARD_ENV: &str = "FROB3_MAGNITUDE_GUARD";

#[derive(Parser)]
#[command(
    name = "frob3",
    version,
    about = "Exact invariants of numerical semigroups with up to three generators",
    after_help = "Set FROB3_MAGNITUDE_GUARD to override the default bound on d1*d2*d3."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute F, G, J, the numerator Q, and the relation matrix of a triple
    Compute {
        #[arg(num_args = 3, value_names = ["D1", "D2", "D3"])]
        d: Vec<i64>,
        /// Emit the report as a single JSON object
        #[arg(long)]
        json: bool,
    },
    /// Classical closed forms for a two-generator semigroup
    Pair {
        #[arg(num_args = 2, value_names = ["D1", "D2"])]
        d: Vec<i64>,
        /// Also print the two-index residue grid with gaps flagged
        #[arg(long)]
        matrix: bool,
        /// Emit the report as a single JSON object
        #[arg(long)]
        json: bool,
    },
    /// Sweep the non-representability indicator of one axis over a range
    Xi {
        #[arg(num_args = 3, value_names = ["D1", "D2", "D3"])]
        d: Vec<i64>,
        /// Axis index
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
        /// First multiplier, at least 1
        #[arg(long)]
        b_min: i64,
        /// Last multiplier, inclusive
        #[arg(long)]
        b_max: i64,
        /// Write rows to this file instead of standard output
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check the closed forms against the brute-force oracle
    Verify {
        #[arg(
            num_args = 3,
            value_names = ["D1", "D2", "D3"],
            conflicts_with = "random",
            required_unless_present = "random"
        )]
        d: Vec<i64>,
        /// Verify this many seeded random tuples instead of one triple
        #[arg(long)]
        random: Option<usize>,
        /// Largest generator for random tuples
        #[arg(long, default_value_t = 150, requires = "random")]
        max_d: i64,
        /// Seed for the random tuple stream
        #[arg(long, default_value_t = 0, requires = "random")]
        seed: u64,
    },
    /// Process a file of triples, one JSON report per line
    Batch {
        file: PathBuf,
        /// Worker threads for the batch (default: one per core)
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Compute { d, json } => cmd_compute(&d, json),
        Cmd::Pair { d, matrix, json } => cmd_pair(&d, matrix, json),
        Cmd::Xi { d, k, b_min, b_max, csv } => cmd_xi(&d, k as usize, b_min, b_max, csv),
        Cmd::Verify { d, random, max_d, seed } => match random {
            Some(n) => cmd_verify_random(n, max_d, seed),
            None => cmd_verify_tuple(&d),
        },
        Cmd::Batch { file, jobs } => cmd_batch(&file, jobs),
    }
}

fn usage_error(msg: impl Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn magnitude_guard() -> Result<i64, String> {
    match std::env::var(GUARD_ENV) {
        Ok(raw) => match raw.trim().parse::<i64>() {
            Ok(v) if v >= 1 => Ok(v),
            Ok(v) => Err(format!("{GUARD_ENV} must be positive, got {v}")),
            Err(_) => Err(format!("{GUARD_ENV} must be an integer, got {raw:?}")),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAGNITUDE_GUARD),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(format!("{GUARD_ENV} is not valid unicode"))
        }
    }
}

fn validated(raw: &[i64]) -> Result<Generators, String> {
    let guard = magnitude_guard()?;
    Generators::validate_with_guard(raw, guard).map_err(|e| e.to_string())
}

fn cmd_compute(d: &[i64], json: bool) -> ExitCode {
    let gens = match validated(d) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    let inv = match invariants(&gens) {
        Ok(inv) => inv,
        Err(e) => return usage_error(e),
    };
    let rep = Report::from_invariants(d, &inv);
    if json {
        println!("{}", serde_json::to_string(&rep).expect("report serializes"));
    } else {
        let diag = diagonal_via_xi(&gens).expect("diagonal exists for a valid tuple");
        println!("tuple {gens}");
        println!(
            "diagonal ({},{},{})",
            diag.a11, diag.a22, diag.a33
        );
        println!("F {}", inv.f);
        println!("G {}", inv.g);
        match inv.j {
            Some(j) => println!("J {j}"),
            None => println!("J undefined"),
        }
        println!("symmetric {}", inv.symmetric);
        if let Some(m) = &inv.matrix {
            for (i, row) in m.rows().iter().enumerate() {
                println!("row {} [{}, {}, {}]", i + 1, row[0], row[1], row[2]);
            }
        }
        println!("Q {}", inv.q);
    }
    ExitCode::SUCCESS
}

fn cmd_pair(d: &[i64], matrix: bool, json: bool) -> ExitCode {
    let gens = match validated(d) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    let p = match sylvester_pair(&gens) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let rep = Report::from_pair(d, p.f, p.g);
    if json {
        println!("{}", serde_json::to_string(&rep).expect("report serializes"));
        return ExitCode::SUCCESS;
    }
    println!("pair {gens}");
    println!("F {}", p.f);
    println!("G {}", p.g);
    if matrix {
        let entries = match matrix_representation(&gens) {
            Ok(e) => e,
            Err(e) => return usage_error(e),
        };
        let q_max = gens.d(1) - 1;
        println!("residue grid, rows p, cols q 1..{q_max}; * marks gaps");
        let mut row = Vec::with_capacity(q_max as usize);
        let mut current_p = 1;
        for e in &entries {
            if e.p != current_p {
                println!("p={current_p}: {}", row.join(" "));
                row.clear();
                current_p = e.p;
            }
            let flag = if e.is_gap() { "*" } else { "" };
            row.push(format!("{}{}", e.value, flag));
        }
        if !row.is_empty() {
            println!("p={current_p}: {}", row.join(" "));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_xi(d: &[i64], k: usize, b_min: i64, b_max: i64, csv: Option<PathBuf>) -> ExitCode {
    let gens = match validated(d) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    if b_min < 1 {
        return usage_error("--b-min must be at least 1");
    }
    if b_max < b_min {
        return usage_error("--b-max must not be below --b-min");
    }
    let bound = johnson::diagonal_scan_bound(&gens, k);
    if b_max > bound {
        return usage_error(format!("--b-max {b_max} exceeds the axis bound {bound}"));
    }
    let rows = match johnson::xi_sweep(&gens, k, b_min..=b_max) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let mut out = String::from("b,xi\n");
    for (b, v) in rows {
        out.push_str(&format!("{b},{v}\n"));
    }
    match csv {
        Some(path) => {
            if let Err(e) = fs::write(&path, out) {
                return usage_error(format!("cannot write {}: {e}", path.display()));
            }
        }
        None => {
            print!("{out}");
        }
    }
    ExitCode::SUCCESS
}

/// Formula-versus-oracle checks for one tuple, in a fixed order.
fn tuple_checks(gens: &Generators) -> Vec<Verdict> {
    let mut out = Vec::new();
    let mut push = |check: &str, pass: bool| {
        out.push(Verdict { check: check.into(), pass });
    };
    let inv = match invariants(gens) {
        Ok(inv) => inv,
        Err(e) => {
            push(&format!("invariants computed ({e})"), false);
            return out;
        }
    };
    push("F matches oracle", inv.f == oracle::frobenius_bruteforce(gens));
    push("G matches oracle", inv.g == oracle::genus_bruteforce(gens));

    let diag = diagonal_via_xi(gens).expect("diagonal exists for a valid tuple");
    let three_way = johnson::diagonal_via_psi(gens).map(|p| p == diag).unwrap_or(false)
        && oracle::johnson_direct(gens) == diag;
    push("diagonal agrees across scan, series, and direct search", three_way);

    let reconstructed = (|| {
        let deg = inv.q.degree()?;
        let table = oracle::build_table(gens, deg).ok()?;
        let h = SparseSeries::from_terms(
            (0..=deg).filter(|&e| table.is_representable(e)).map(|e| (e, 1)),
            deg,
        )
        .ok()?;
        let mut product = h;
        for k in 1..=3 {
            let binom = SparseSeries::from_terms([(0, 1), (gens.d(k), -1)], deg).ok()?;
            product = &product * &binom;
        }
        Some(product == inv.q)
    })()
    .unwrap_or(false);
    push("numerator reconstructs from oracle series", reconstructed);

    if inv.symmetric {
        let matches = frobenius::closed_form_check(gens, &diag)
            .map(|(f, g)| f == inv.f && g == inv.g)
            .unwrap_or(false);
        push("closed forms match series values (symmetric)", matches);
    } else {
        match johnson::select_roots(gens, &diag) {
            Ok(sel) => {
                push(
                    "relation matrix passes structural checks",
                    sel.chosen.invariant_failures(gens).is_empty(),
                );
                push("conjugate root assembly rejected", !sel.rejected.is_valid());
                push(
                    "J equals the off-diagonal cross product",
                    Some(sel.chosen.cross_product_j()) == inv.j,
                );
            }
            Err(_) => push("off-diagonal assembly succeeds", false),
        }
    }
    out
}

/// 0 when every check passed, 1 otherwise; the verification exit code.
fn exit_for(verdicts: &[Verdict]) -> u8 {
    if verdicts.iter().all(|v| v.pass) {
        0
    } else {
        1
    }
}

fn cmd_verify_tuple(d: &[i64]) -> ExitCode {
    let gens = match validated(d) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    let verdicts = tuple_checks(&gens);
    println!("tuple {gens}");
    for v in &verdicts {
        println!("  {} {}", if v.pass { "ok" } else { "FAIL" }, v.check);
    }
    let all = verdicts.iter().all(|v| v.pass);
    println!("{}", if all { "PASS" } else { "FAIL" });
    ExitCode::from(exit_for(&verdicts))
}

fn cmd_verify_random(count: usize, max_d: i64, seed: u64) -> ExitCode {
    if max_d < 5 {
        return usage_error("--max-d must be at least 5");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < count {
        let d1 = rng.gen_range(3..max_d - 1);
        let d2 = rng.gen_range(d1 + 1..max_d);
        let d3 = rng.gen_range(d2 + 1..=max_d);
        let Ok(gens) = Generators::validate(&[d1, d2, d3]) else {
            continue;
        };
        let verdicts = tuple_checks(&gens);
        if let Some(first_fail) = verdicts.iter().find(|v| !v.pass) {
            println!("FAIL {gens}: {}", first_fail.check);
            return ExitCode::from(1);
        }
        println!("ok {gens}");
        done += 1;
    }
    println!("verified {count} tuples: PASS");
    ExitCode::SUCCESS
}

fn batch_line(raw: &str) -> Option<String> {
    let content = raw.split('#').next().unwrap_or("").trim();
    if content.is_empty() {
        return None;
    }
    let parsed: Result<Vec<i64>, _> = content
        .split_whitespace()
        .map(|tok| tok.parse::<i64>())
        .collect();
    let error = |msg: String| {
        serde_json::json!({ "input": content, "error": msg }).to_string()
    };
    let Ok(nums) = parsed else {
        return Some(error("not a line of integers".into()));
    };
    if nums.len() != 3 {
        return Some(error(format!("expected three integers, got {}", nums.len())));
    }
    let line = match validated(&nums) {
        Ok(gens) => match invariants(&gens) {
            Ok(inv) => serde_json::to_string(&Report::from_invariants(&nums, &inv))
                .expect("report serializes"),
            Err(e) => error(e.to_string()),
        },
        Err(e) => error(e),
    };
    Some(line)
}

fn cmd_batch(file: &PathBuf, jobs: Option<usize>) -> ExitCode {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("cannot read {}: {e}", file.display())),
    };
    let lines: Vec<&str> = text.lines().collect();
    let run = || -> Vec<Option<String>> { lines.par_iter().map(|l| batch_line(l)).collect() };
    let outputs = match jobs {
        Some(n) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(p) => p,
                Err(e) => return usage_error(format!("cannot build thread pool: {e}")),
            };
            pool.install(run)
        }
        None => run(),
    };
    let stdout = std::io::stdout();
    let mut handle = stdout.lock();
    for line in outputs.into_iter().flatten() {
        writeln!(handle, "{line}").expect("stdout write");
    }
    ExitCode::SUCCESS
}
