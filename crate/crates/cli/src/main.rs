//! `rileylo`: Riley polynomials, sign sequences and root certificates from
//! the command line.
//!
//! Exit status: 0 on success or a certified root, 2 when a scan is
//! inconclusive, 1 on any error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use riley_lo::certify::{
    certify_knot, lo_set, RootCertificate, ScanParams, ScanReport, ScanStatus,
};
use riley_lo::knots::{hm_chain, run_length, sign_sequence, Knot, TwoBridgeFraction};
use riley_lo::riley::{riley_for_knot, riley_generic_for_knot, RileyPolynomial};
use riley_lo::selftest::{run_selftest, SelftestOptions};

#[derive(Parser)]
#[command(
    name = "rileylo",
    version,
    about = "Riley polynomials of two-bridge knots and certified roots y > 2 of phi(2cos(pi/n), y)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Riley polynomial of a knot with its content hash.
    Riley {
        #[command(flatten)]
        knot: KnotArgs,
        /// Recompute with the generic matrix-word engine and compare.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the run-length sign sequence of a fraction.
    Signs {
        /// Fraction p/q with p odd, q odd, gcd 1 and q mod 2p in (0, p).
        #[arg(long)]
        fraction: TwoBridgeFraction,
        /// Also print the chain of run reductions S(p, q) -> S(p - 2q, q).
        #[arg(long)]
        reduce: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search for a certified root y > 2 of phi(x_n, y). Exits 2 when
    /// inconclusive, which never means that no root exists.
    Certify {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        scan: ScanArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Certify every n in 2..=n-max and print the table.
    LoSet {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        scan: ScanArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the exact identity suite.
    Selftest {
        /// Chebyshev and sign-sequence checks only.
        #[arg(long)]
        quick: bool,
        /// Perturb the K_l lambda to exercise failure reporting.
        #[arg(long, hide = true)]
        corrupt_kl_lambda: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct KnotArgs {
    /// Knot: J:k,m for J(2k+1, 2m), Kl:l, or a fraction p/q.
    #[arg(long)]
    knot: Option<Knot>,
    /// Two-bridge fraction p/q (generic engine).
    #[arg(long)]
    fraction: Option<TwoBridgeFraction>,
}

impl KnotArgs {
    fn knot(&self) -> Knot {
        match (self.knot, self.fraction) {
            (Some(k), _) => k,
            (None, Some(f)) => Knot::Fraction(f),
            (None, None) => unreachable!("clap enforces one of --knot, --fraction"),
        }
    }
}

#[derive(Args)]
struct ScanArgs {
    /// Upper end of the uniform grid.
    #[arg(long, default_value_t = 64)]
    ymax: u64,
    /// Largest y tried after the grid (doubling from --ymax).
    #[arg(long, default_value_t = 1 << 16)]
    ymax_cap: u64,
    /// Working precision in bits.
    #[arg(long, env = "RILEYLO_PREC", default_value_t = 128)]
    prec: u32,
    /// Largest precision reached by escalation.
    #[arg(long, default_value_t = 4096)]
    prec_cap: u32,
}

impl ScanArgs {
    fn params(&self) -> ScanParams {
        ScanParams {
            precision: self.prec,
            y_max: self.ymax,
            y_max_cap: self.ymax_cap.max(self.ymax),
            precision_cap: self.prec_cap.max(self.prec),
            ..ScanParams::default()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

fn run(cmd: Command) -> Result<u8, String> {
    match cmd {
        Command::Riley {
            knot,
            cross_check,
            format,
        } => cmd_riley(&knot.knot(), cross_check, format),
        Command::Signs {
            fraction,
            reduce,
            format,
        } => {
            cmd_signs(&fraction, reduce, format);
            Ok(0)
        }
        Command::Certify {
            knot,
            n,
            scan,
            format,
        } => cmd_certify(&knot.knot(), n, &scan.params(), format),
        Command::LoSet {
            knot,
            n_max,
            scan,
            format,
        } => cmd_lo_set(&knot.knot(), n_max, &scan.params(), format),
        Command::Selftest {
            quick,
            corrupt_kl_lambda,
            format,
        } => {
            let report = run_selftest(SelftestOptions {
                quick,
                corrupt_kl_lambda,
            });
            match format {
                Format::Structured => print_json(&report),
                Format::Text => {
                    for c in &report.checks {
                        let mark = if c.passed { "pass" } else { "FAIL" };
                        if c.detail.is_empty() {
                            println!("{mark}  {}", c.name);
                        } else {
                            println!("{mark}  {} ({})", c.name, c.detail);
                        }
                    }
                    let failed = report.checks.iter().filter(|c| !c.passed).count();
                    println!("{} checks, {failed} failed", report.checks.len());
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn cmd_riley(knot: &Knot, cross_check: bool, format: Format) -> Result<u8, String> {
    let phi = riley_for_knot(knot).map_err(|e| e.to_string())?;
    let check = if cross_check {
        let generic = riley_generic_for_knot(knot).map_err(|e| e.to_string())?;
        Some(generic.poly() == phi.poly())
    } else {
        None
    };
    match format {
        Format::Structured => print_json(&json!({
            "riley": phi,
            "cross_check": check.map(|ok| if ok { "ok" } else { "mismatch" }),
        })),
        Format::Text => {
            print_riley_text(&phi);
            if let Some(ok) = check {
                println!("cross-check: {}", if ok { "ok" } else { "MISMATCH" });
            }
        }
    }
    Ok(if check == Some(false) { 1 } else { 0 })
}

fn print_riley_text(phi: &RileyPolynomial) {
    if let Some(k) = phi.knot() {
        println!("knot: {k}");
    }
    println!("presentation: {}", phi.presentation());
    println!("hash: {}", phi.hash());
    print!("{}", phi.poly().to_canonical_text());
}

fn cmd_signs(f: &TwoBridgeFraction, reduce: bool, format: Format) {
    let runs = run_length(&sign_sequence(f));
    let chain = if reduce { hm_chain(f) } else { Vec::new() };
    match format {
        Format::Structured => {
            let steps: Vec<_> = chain
                .iter()
                .map(|r| {
                    json!({
                        "fraction": format!("{}/{}", r.p, r.q),
                        "runs": r.runs.to_string(),
                        "degenerate": r.degenerate,
                    })
                })
                .collect();
            print_json(&json!({
                "fraction": f.to_string(),
                "runs": runs.to_string(),
                "reductions": steps,
            }));
        }
        Format::Text => {
            if !reduce {
                println!("{runs}");
                return;
            }
            println!("{f}: {runs}");
            for r in &chain {
                let note = if r.degenerate { "  (degenerate)" } else { "" };
                let shown = if r.runs.is_empty() {
                    "(empty)".to_string()
                } else {
                    r.runs.to_string()
                };
                println!("{}/{}: {shown}{note}", r.p, r.q);
            }
            if chain.is_empty() {
                println!("no reduction applies (floor(p/q) < 2)");
            }
        }
    }
}

fn inconclusive_text(r: &ScanReport, params: &ScanParams) -> String {
    format!(
        "inconclusive: no sign change of phi(x_{}, y) found for 2 < y <= {} at up to {} bits; \
         this does not show that no root exists",
        r.n, r.trace.max_y_reached, params.precision_cap
    )
}

fn log2_width(c: &RootCertificate) -> i64 {
    let w = &c.b - &c.a;
    w.bits() as i64 + w.exponent() - 1
}

fn cmd_certify(knot: &Knot, n: u32, params: &ScanParams, format: Format) -> Result<u8, String> {
    if n < 2 {
        return Err("--n must be at least 2".into());
    }
    let report = certify_knot(knot, n, params).map_err(|e| e.to_string())?;
    match format {
        Format::Structured => print_json(&report),
        Format::Text => match &report.certificate {
            Some(c) => {
                println!(
                    "certified: phi(x_{n}, y) changes sign near y = {:.12} for {knot} \
                     (bracket width 2^{}, {} bits)",
                    c.a.to_f64(),
                    log2_width(c),
                    c.precision
                );
                println!("{}", c.to_json());
            }
            None => println!("{}", inconclusive_text(&report, params)),
        },
    }
    Ok(match report.status {
        ScanStatus::Certified => 0,
        ScanStatus::Inconclusive => 2,
    })
}

fn cmd_lo_set(knot: &Knot, n_max: u32, params: &ScanParams, format: Format) -> Result<u8, String> {
    if n_max < 2 {
        return Err("--n-max must be at least 2".into());
    }
    let table = lo_set(knot, n_max, params).map_err(|e| e.to_string())?;
    match format {
        Format::Structured => print_json(&json!({
            "knot": knot,
            "parameters": params,
            "reports": table.values().collect::<Vec<_>>(),
        })),
        Format::Text => {
            println!("knot: {knot}");
            for (n, r) in &table {
                match &r.certificate {
                    Some(c) => println!(
                        "n = {n:>3}  certified     y ~ {:.9}  width 2^{}",
                        c.a.to_f64(),
                        log2_width(c)
                    ),
                    None => println!(
                        "n = {n:>3}  inconclusive  (searched y <= {})",
                        r.trace.max_y_reached
                    ),
                }
            }
            let certified: Vec<String> = table
                .iter()
                .filter(|(_, r)| r.is_certified())
                .map(|(n, _)| n.to_string())
                .collect();
            println!("certified n: {{{}}}", certified.join(", "));
            println!("inconclusive entries make no claim either way");
        }
    }
    Ok(0)
}
