//! Command-line front end: exact word-statistic distributions, closed-form
//! generating functions with series expansions, and the verification reports.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use staircase_words::genfunc::{
    cyclic_hertzsprung_gf, cyclic_staircase_gf, f_series, g_series, hertzsprung_gf, staircase_gf,
    GFResult,
};
use staircase_words::matrixverify::run_matrix_checks;
use staircase_words::qsums;
use staircase_words::rational::rat;
use staircase_words::report::csv_row;
use staircase_words::wordstats::{
    brute_distribution, dp_distribution, special_count, SpecialKind, StatKind, DEFAULT_BUDGET,
};
use staircase_words::Rational;

const EXIT_BAD_ARGS: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_SELF_CHECK: u8 = 4;
const EXIT_VERIFY_FAILED: u8 = 5;

#[derive(Parser)]
#[command(
    name = "staircase",
    version,
    about = "Exact enumeration and verification for staircase (cyclic) word statistics",
    after_help = "CSV schemas (headers always emitted):\n  \
        dist:           n,k,kind,m,count\n  \
        gf:             n,t_degree,coefficient  (closed form on leading '#' lines)\n  \
        verify, q:      id,k_range,status,witness,note,samples\n  \
        verify, matrix: check,k,point,pass,witness\n\n\
        Exit codes: 0 ok; 2 invalid arguments; 3 enumeration budget exceeded;\n\
        4 generating-function self-check failed; 5 verification found mismatches."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Linear,
    Cyclic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Two-variable series for the linear statistic
    F,
    /// Two-variable series for the cyclic statistic
    G,
    Staircase,
    CyclicStaircase,
    Hertzsprung,
    CyclicHertzsprung,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    Q,
    Matrix,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact histogram of the adjacency statistic over all k^n words
    Dist {
        /// Alphabet size (k >= 2)
        #[arg(long)]
        k: u32,
        /// Word length
        #[arg(long)]
        n: usize,
        /// Statistic: adjacent pairs only, or including the wrap-around pair
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Write the output here instead of stdout
        #[arg(long)]
        out: Option<String>,
    },
    /// Closed-form generating function and its exact series expansion
    Gf {
        /// Alphabet size (2 <= k <= 8)
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        which: Which,
        /// Series truncation order
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Verification reports for the identity catalog and the matrix algebra
    Verify {
        #[arg(long, value_enum)]
        scope: Scope,
        /// Largest k exercised (1..=12)
        #[arg(long, default_value_t = 12)]
        k_max: i64,
        /// Seed for the random evaluation points
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
}

fn emit(out: &Option<String>, text: &str) -> ExitCode {
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(EXIT_BAD_ARGS);
            }
            ExitCode::SUCCESS
        }
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

fn cmd_dist(k: u32, n: usize, kind: Kind, format: Format, out: Option<String>) -> ExitCode {
    if k < 2 {
        eprintln!("error: --k must be at least 2");
        return ExitCode::from(EXIT_BAD_ARGS);
    }
    let kind = match kind {
        Kind::Linear => StatKind::Linear,
        Kind::Cyclic => StatKind::Cyclic,
    };
    let dist = match brute_distribution(n, k, kind, DEFAULT_BUDGET) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_BUDGET);
        }
    };
    use num_traits::Zero;
    let mut text = String::new();
    match format {
        Format::Csv => {
            text.push_str(&csv_row(&["n", "k", "kind", "m", "count"]));
            for (m, c) in dist.counts().iter().enumerate() {
                if !c.is_zero() {
                    text.push_str(&csv_row(&[
                        &n.to_string(),
                        &k.to_string(),
                        kind.name(),
                        &m.to_string(),
                        &c.to_string(),
                    ]));
                }
            }
        }
        Format::Plain => {
            let _ = writeln!(text, "distribution for n={n}, k={k}, kind={}", kind.name());
            for (m, c) in dist.counts().iter().enumerate() {
                if !c.is_zero() {
                    let _ = writeln!(text, "m={m} count={c}");
                }
            }
            let _ = writeln!(text, "total={}", dist.total());
        }
    }
    emit(&out, &text)
}

fn gf_result(k: u32, which: Which, order: usize) -> staircase_words::Result<GFResult> {
    match which {
        Which::F => f_series(k, order),
        Which::G => g_series(k, order),
        Which::Staircase => staircase_gf(k, order),
        Which::CyclicStaircase => cyclic_staircase_gf(k, order),
        Which::Hertzsprung => hertzsprung_gf(k, order),
        Which::CyclicHertzsprung => cyclic_hertzsprung_gf(k, order),
    }
}

/// Series coefficients against the enumeration oracle, through min(order, 8).
fn gf_self_check(k: u32, which: Which, result: &GFResult) -> Result<(), String> {
    let top = result.series.order().min(8);
    for n in 0..=top {
        match which {
            Which::F | Which::G => {
                let kind = if which == Which::F {
                    StatKind::Linear
                } else {
                    StatKind::Cyclic
                };
                let want = dp_distribution(n, k, kind).to_poly();
                if result.series.coeff(n) != &want {
                    return Err(format!(
                        "coefficient of x^{n} is {} but enumeration gives {want}",
                        result.series.coeff(n)
                    ));
                }
            }
            _ => {
                let special = match which {
                    Which::Staircase => SpecialKind::Staircase,
                    Which::CyclicStaircase => SpecialKind::CyclicStaircase,
                    Which::Hertzsprung => SpecialKind::Hertzsprung,
                    Which::CyclicHertzsprung => SpecialKind::CyclicHertzsprung,
                    Which::F | Which::G => unreachable!(),
                };
                let got = result.series.coeff(n).eval(&rat(0));
                let want = Rational::from_integer(special_count(n, k, special).into());
                if got != want {
                    return Err(format!(
                        "coefficient of x^{n} is {got} but enumeration gives {want}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn cmd_gf(k: u32, which: Which, order: usize, format: Format, out: Option<String>) -> ExitCode {
    if !(2..=8).contains(&k) {
        eprintln!("error: --k must be in 2..=8");
        return ExitCode::from(EXIT_BAD_ARGS);
    }
    let result = match gf_result(k, which, order) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_SELF_CHECK);
        }
    };
    if let Err(msg) = gf_self_check(k, which, &result) {
        eprintln!("error: self-check against the enumeration oracle failed: {msg}");
        return ExitCode::from(EXIT_SELF_CHECK);
    }
    use num_traits::Zero;
    let mut text = String::new();
    match format {
        Format::Csv => {
            let _ = writeln!(text, "# closed_numerator: {}", result.closed.num());
            let _ = writeln!(text, "# closed_denominator: {}", result.closed.den());
            text.push_str(&csv_row(&["n", "t_degree", "coefficient"]));
            for (n, c) in result.series.coeffs().iter().enumerate() {
                if c.is_zero() {
                    text.push_str(&csv_row(&[&n.to_string(), "0", "0"]));
                    continue;
                }
                for (d, coeff) in c.coeffs().iter().enumerate() {
                    if !coeff.is_zero() {
                        text.push_str(&csv_row(&[
                            &n.to_string(),
                            &d.to_string(),
                            &coeff.to_string(),
                        ]));
                    }
                }
            }
        }
        Format::Plain => {
            let _ = writeln!(text, "closed form: {}", result.closed);
            let _ = writeln!(text, "series to order {}:", result.series.order());
            for (n, c) in result.series.coeffs().iter().enumerate() {
                let _ = writeln!(text, "  x^{n}: {c}");
            }
        }
    }
    emit(&out, &text)
}

fn cmd_verify(
    scope: Scope,
    k_max: i64,
    seed: u64,
    format: Format,
    out: Option<String>,
) -> ExitCode {
    if !(1..=12).contains(&k_max) {
        eprintln!("error: --k-max must be in 1..=12");
        return ExitCode::from(EXIT_BAD_ARGS);
    }
    let mut text = String::new();
    let mut failed = false;
    if matches!(scope, Scope::Q | Scope::All) {
        let report = qsums::verify_all(k_max, seed);
        failed |= report.has_failures();
        match format {
            Format::Csv => text.push_str(&report.csv()),
            Format::Plain => {
                for e in &report.entries {
                    let _ = writeln!(
                        text,
                        "q_{:02} k={}..{} {}{}",
                        e.id,
                        e.k_lo,
                        e.k_hi,
                        e.status.name(),
                        e.witness
                            .as_ref()
                            .map(|w| format!(" (first counterexample at k={})", w.k))
                            .unwrap_or_default(),
                    );
                }
            }
        }
    }
    if matches!(scope, Scope::Matrix | Scope::All) {
        let k_hi = k_max.clamp(2, 6) as u32;
        let report = run_matrix_checks(2, k_hi, 5, seed);
        failed |= !report.all_pass();
        if scope == Scope::All {
            text.push('\n');
        }
        match format {
            Format::Csv => text.push_str(&report.csv()),
            Format::Plain => {
                for r in &report.rows {
                    let _ = writeln!(
                        text,
                        "{} k={} {} {}",
                        r.check,
                        r.k,
                        if r.pass { "pass" } else { "fail" },
                        r.point
                    );
                }
            }
        }
    }
    let code = emit(&out, &text);
    if code != ExitCode::SUCCESS {
        return code;
    }
    if failed {
        ExitCode::from(EXIT_VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Dist {
            k,
            n,
            kind,
            format,
            out,
        } => cmd_dist(k, n, kind, format, out),
        Cmd::Gf {
            k,
            which,
            order,
            format,
            out,
        } => cmd_gf(k, which, order, format, out),
        Cmd::Verify {
            scope,
            k_max,
            seed,
            format,
            out,
        } => cmd_verify(scope, k_max, seed, format, out),
    }
}
