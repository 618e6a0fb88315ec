//! `streakcount`: exact counts for the HH-versus-HT coin-tossing game.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};

use streakcount_core::counting::{delta, gap, heady_count, win_odds, ClosedForm};
use streakcount_core::oracle::{Oracle, OracleCap};
use streakcount_core::recurrence::{DpTable, SweepMode, TableSweep};
use streakcount_core::toss::score_range;
use streakcount_core::verify::{run_all, CountSource, FaultInjected, VerifyConfig};
use streakcount_core::{generate_sequences, Distribution, Mode, Signature};

use crate::render::{Cell, Format, Records};

#[derive(Debug, Parser)]
#[command(name = "streakcount", version, about = "Exact counts for the HH-versus-HT coin-tossing game")]
struct Cli {
    /// Largest n the exhaustive oracle may enumerate (default 24, or
    /// $STREAKCOUNT_ORACLE_CAP).
    #[arg(long, global = true)]
    oracle_cap: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Dp,
    Incremental,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Series {
    H2,
    H4,
    #[value(name = "D")]
    D,
    Delta,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Heady and taily counts for every score at length n.
    Dist {
        n: u32,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Win, loss and tie counts and the win gap at length n.
    Wins {
        n: u32,
        /// Digits after the decimal point.
        #[arg(long, default_value_t = 6)]
        digits: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Heady close-call wins h2(n) and h4(n) = D(n) for n in a range.
    Table {
        #[arg(long, default_value_t = 2)]
        from: u32,
        #[arg(long, default_value_t = 25)]
        to: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Every sequence with a given signature, length and final toss.
    Gen {
        /// Signature as '+'/'-' characters.
        #[arg(long, allow_hyphen_values = true)]
        signature: String,
        #[arg(long)]
        length: u32,
        #[arg(long)]
        mode: Mode,
        /// Only sequences that start with a 1.
        #[arg(long)]
        fixed_leading_one: bool,
    },
    /// Run every identity suite and cross-check all computation paths.
    Verify {
        #[arg(long, default_value_t = 64)]
        max_n: u32,
        #[arg(long, default_value_t = 16)]
        oracle_max: u32,
        /// Corrupt one closed-form cell, given as mode:s:n (negative control).
        #[arg(long, hide = true, allow_hyphen_values = true)]
        inject_fault: Option<String>,
    },
    /// OEIS b-file for one of the integer series.
    Bfile {
        #[arg(long, value_enum)]
        series: Series,
        #[arg(long)]
        max_n: u32,
        /// First index to emit (defaults to the series' first defined n).
        #[arg(long)]
        offset: Option<u32>,
    },
    /// Time full sweeps to n with each method and check they agree.
    Bench {
        #[arg(long, default_value_t = 200)]
        max_n: u32,
    },
}

fn oracle_cap(flag: Option<u32>) -> Result<OracleCap> {
    match flag {
        Some(cap) => Ok(OracleCap::new(cap)?),
        None => Ok(OracleCap::from_env()),
    }
}

fn distribution(n: u32, method: Method, cap: OracleCap) -> Result<Distribution> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    let dist = match method {
        Method::Closed => ClosedForm::<BigUint>::new().distribution(n),
        Method::Dp => DpTable::<BigUint>::at(n).into_distribution(),
        Method::Incremental => TableSweep::<BigUint>::new(n, SweepMode::Both)
            .last()
            .expect("sweep yields n >= 1"),
        Method::Oracle => Oracle::new(cap).distribution::<BigUint>(n)?,
    };
    Ok(dist.normalized())
}

fn cmd_dist(n: u32, method: Method, format: Format, cap: OracleCap) -> Result<String> {
    let dist = distribution(n, method, cap)?;
    let mut rec = Records::new(vec!["s", "heady", "taily"]).field("n", Cell::int(n));
    for (s, h, t) in dist.rows() {
        rec.push(vec![Cell::int(s), Cell::int(h), Cell::int(t)]);
    }
    Ok(rec.render(format, true))
}

fn cmd_wins(n: u32, digits: u32, format: Format) -> Result<String> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    let odds = win_odds(n, digits);
    let mut rec = Records::new(vec!["quantity", "count", "fraction", "decimal"])
        .field("n", Cell::int(n))
        .field("total", Cell::int(odds.total()));
    for (name, count) in [
        ("alice", BigInt::from(odds.alice_wins.clone())),
        ("bob", BigInt::from(odds.bob_wins.clone())),
        ("ties", BigInt::from(odds.ties.clone())),
        ("gap", odds.gap.clone()),
    ] {
        rec.push(vec![
            Cell::text(name),
            Cell::int(&count),
            Cell::text(odds.fraction(&count)),
            Cell::text(odds.decimal(&count)),
        ]);
    }
    Ok(rec.render(format, true))
}

fn cmd_table(from: u32, to: u32, format: Format) -> Result<String> {
    if from < 2 {
        bail!("h2(n) and h4(n) are defined for n >= 2 (got --from {from})");
    }
    if to < from {
        bail!("--to {to} is below --from {from}");
    }
    let mut rec = Records::new(vec!["n", "h2", "h4"]);
    for n in from..=to {
        rec.push(vec![
            Cell::int(n),
            Cell::int(heady_count::<BigUint>(1, n)),
            Cell::int(gap::<BigUint>(n)?),
        ]);
    }
    Ok(rec.render(format, false))
}

fn cmd_gen(signature: &str, length: u32, mode: Mode, fixed: bool, out: &mut impl Write) -> Result<()> {
    let sig: Signature = signature.parse()?;
    let gen = generate_sequences(&sig, length, mode, fixed)?;
    let mut count = 0u64;
    for x in gen {
        writeln!(out, "{x}")?;
        count += 1;
    }
    writeln!(out, "count {count}")?;
    Ok(())
}

fn parse_fault(spec: &str) -> Result<(Mode, i64, u32)> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [mode, s, n] = parts.as_slice() else {
        bail!("--inject-fault expects mode:s:n, got {spec:?}");
    };
    let mode: Mode = mode.parse().map_err(anyhow::Error::msg)?;
    Ok((mode, s.parse().context("fault score")?, n.parse().context("fault length")?))
}

fn cmd_verify(max_n: u32, oracle_max: u32, fault: Option<&str>, cap: OracleCap, out: &mut impl Write) -> Result<bool> {
    if max_n < 3 {
        bail!("--max-n must be at least 3");
    }
    cap.check(oracle_max)?;
    let cfg = VerifyConfig { max_n, oracle_max, ..VerifyConfig::default() };
    let closed = ClosedForm::<BigUint>::new();
    let reports = match fault {
        None => run_all(&closed, &cfg),
        Some(spec) => {
            let (mode, s, n) = parse_fault(spec)?;
            let faulty = FaultInjected { inner: closed, mode, s, n };
            run_all(&faulty as &dyn CountSource, &cfg)
        }
    };
    let mut all = true;
    for r in &reports {
        if r.passed() {
            writeln!(out, "PASS  {}  ({} checks)", r.name, r.checks)?;
        } else {
            all = false;
            writeln!(out, "FAIL  {}  ({} checks, {} failed)", r.name, r.checks, r.failures.len())?;
            for f in r.failures.iter().take(5) {
                writeln!(out, "      {f}")?;
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if all {
        writeln!(out, "all {} suites passed", reports.len())?;
    } else {
        writeln!(out, "{failed} of {} suites failed", reports.len())?;
    }
    Ok(all)
}

fn series_value(series: Series, n: u32) -> Result<BigUint> {
    Ok(match series {
        Series::H2 => heady_count::<BigUint>(1, n),
        Series::H4 | Series::D => gap::<BigUint>(n)?,
        Series::Delta => delta::<BigUint>(n)?,
    })
}

fn cmd_bfile(series: Series, max_n: u32, offset: Option<u32>) -> Result<String> {
    let first = match series {
        Series::H2 | Series::H4 | Series::D => 2,
        Series::Delta => 3,
    };
    let start = offset.unwrap_or(first);
    if start < first {
        bail!("the series starts at n = {first}; --offset {start} is out of range");
    }
    let mut out = String::new();
    for n in start..=max_n {
        out.push_str(&format!("{n} {}\n", series_value(series, n)?));
    }
    Ok(out)
}

fn cmd_bench(max_n: u32, out: &mut impl Write) -> Result<bool> {
    if max_n == 0 {
        bail!("--max-n must be at least 1");
    }
    let t = Instant::now();
    let closed_form = ClosedForm::<BigUint>::new();
    let closed: Vec<Distribution> = (1..=max_n).map(|n| closed_form.distribution(n).normalized()).collect();
    let closed_time = t.elapsed();

    let t = Instant::now();
    let mut dp_table = DpTable::<BigUint>::initial();
    let mut dp = Vec::with_capacity(max_n as usize);
    for _ in 1..=max_n {
        let next = dp_table.extend();
        dp.push(std::mem::replace(&mut dp_table, next).into_distribution().normalized());
    }
    let dp_time = t.elapsed();

    let t = Instant::now();
    let swept: Vec<Distribution> = TableSweep::<BigUint>::new(max_n, SweepMode::Both)
        .map(|d| d.normalized())
        .collect();
    let sweep_time = t.elapsed();

    writeln!(out, "# closed-form  {:>10.3} s", closed_time.as_secs_f64())?;
    writeln!(out, "# dp           {:>10.3} s", dp_time.as_secs_f64())?;
    writeln!(out, "# incremental  {:>10.3} s", sweep_time.as_secs_f64())?;

    let mismatch = (0..max_n as usize).find(|&i| closed[i] != dp[i] || closed[i] != swept[i]);
    if let Some(i) = mismatch {
        writeln!(out, "methods disagree at n = {}", i + 1)?;
        return Ok(false);
    }
    let last = &closed[max_n as usize - 1];
    let (lo, hi) = score_range(max_n);
    writeln!(out, "methods agree for n = 1..={max_n} ({} cells at n = {max_n})", hi - lo + 1)?;
    if max_n >= 2 {
        writeln!(out, "h2({max_n}) = {}", last.heady_at(1))?;
        writeln!(out, "h4({max_n}) = {}", last.heady_at(-1))?;
    }
    writeln!(out, "heady total = {}", last.total(Mode::Heady))?;
    writeln!(out, "taily total = {}", last.total(Mode::Taily))?;
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    let cap = oracle_cap(cli.oracle_cap)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Dist { n, method, format } => out.write_all(cmd_dist(n, method, format, cap)?.as_bytes())?,
        Command::Wins { n, digits, format } => out.write_all(cmd_wins(n, digits, format)?.as_bytes())?,
        Command::Table { from, to, format } => out.write_all(cmd_table(from, to, format)?.as_bytes())?,
        Command::Gen { signature, length, mode, fixed_leading_one } => {
            cmd_gen(&signature, length, mode, fixed_leading_one, &mut out)?
        }
        Command::Verify { max_n, oracle_max, inject_fault } => {
            return cmd_verify(max_n, oracle_max, inject_fault.as_deref(), cap, &mut out)
        }
        Command::Bfile { series, max_n, offset } => out.write_all(cmd_bfile(series, max_n, offset)?.as_bytes())?,
        Command::Bench { max_n } => return cmd_bench(max_n, &mut out),
    }
    out.flush()?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
