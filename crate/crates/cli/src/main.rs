//! Verification harness for coefficient bounds of meromorphic univalent
//! functions with a simple pole.
//!
//! Exit codes: 0 = success (certified where applicable); 1 = the computation
//! ran but verification failed or the counterexample was refused
//! (outside-window / invalid-regime); 2 = invalid input.

mod omega;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use umlam::counterexample::{
    certify, find_gauge_peak, find_min_witness, find_p0, lambda_limit, lambda_threshold, scan,
};
use umlam::search::{probe_a3, probe_bn, probe_proved_bounds, ProbeQuantity};
use umlam::umclass::{
    a2_abs_bound, a2_disk, b0_bound, b0_case_boundary, b0_case_iii_extremal_a, build,
    default_contour_radius, laurent_b0, residue, residue_modulus_range, small_pole_threshold,
    PoleParams,
};
use umlam::{Error, ScanStatus};

use output::{
    num, print_csv, print_json, probe_csv_row, probe_print_text, BoundsOutput, CertifyOutput,
    ComplexEntry, Format, RootsOutput, SeriesOutput, PROBE_CSV_HEADER,
};

const CURVE_POINTS: usize = 1024;

#[derive(Parser)]
#[command(
    name = "umlam",
    version,
    about = "Coefficient-bound verification for meromorphic univalent functions with a simple pole"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Threshold constants and, for a given pole, the witness roots
    Roots(RootsArgs),
    /// Certify a third-coefficient counterexample at (p, lambda)
    Certify(CertifyArgs),
    /// Sweep certification over a (p, lambda) grid
    Scan(ScanArgs),
    /// Proved variability bounds at (p, lambda)
    Bounds(BoundsArgs),
    /// Taylor and Laurent data of the member driven by --omega
    Series(SeriesArgs),
    /// Randomized extremal probe of one bound
    Probe(ProbeArgs),
}

#[derive(Args)]
struct RootsArgs {
    /// Pole location in (0, 1); adds the witness roots to the report
    #[arg(long)]
    p: Option<f64>,
    /// Root-finder argument tolerance
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, value_enum)]
    output_format: Option<Format>,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    lambda: f64,
    #[arg(long, value_enum)]
    output_format: Option<Format>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    p_min: f64,
    #[arg(long)]
    p_max: f64,
    #[arg(long)]
    p_steps: usize,
    #[arg(long)]
    lambda_min: f64,
    #[arg(long)]
    lambda_max: f64,
    #[arg(long)]
    lambda_steps: usize,
    /// Write a (p, lambda_limit) CSV curve over [p-min, p-max] to this path
    #[arg(long)]
    emit_curve: Option<PathBuf>,
    #[arg(long, value_enum)]
    output_format: Option<Format>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    lambda: f64,
    #[arg(long, value_enum)]
    output_format: Option<Format>,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    lambda: f64,
    /// Driving function: const:<re>,<im> | negmob:<a> | blaschke:<theta>;<re,im>;... | taylor:<c0>,<c1>,...
    #[arg(long)]
    omega: String,
    /// Truncation order of the Taylor data
    #[arg(long, default_value_t = 32)]
    order: usize,
    /// Contour radius for Laurent extraction (default min(p, 1-p)/2)
    #[arg(long)]
    rho: Option<f64>,
    /// Contour node count
    #[arg(long, default_value_t = 256)]
    contour_nodes: usize,
    #[arg(long, value_enum)]
    output_format: Option<Format>,
}

#[derive(Args)]
struct ProbeArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    lambda: f64,
    /// One of a2, a3, residue, b0, bn:<n>
    #[arg(long)]
    quantity: String,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write an (a, lambda_threshold) CSV curve at this pole to this path
    #[arg(long)]
    emit_curve: Option<PathBuf>,
    #[arg(long, value_enum)]
    output_format: Option<Format>,
}

fn main() -> ExitCode {
    ExitCode::from(run() as u8)
}

fn run() -> i32 {
    match Cli::parse().command {
        Command::Roots(args) => run_roots(args),
        Command::Certify(args) => run_certify(args),
        Command::Scan(args) => run_scan(args),
        Command::Bounds(args) => run_bounds(args),
        Command::Series(args) => run_series(args),
        Command::Probe(args) => run_probe(args),
    }
}

fn invalid(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn check_unit(name: &str, v: f64) -> Result<(), String> {
    if v > 0.0 && v < 1.0 && v.is_finite() {
        Ok(())
    } else {
        Err(format!("{name} must lie strictly inside (0, 1), got {v}"))
    }
}

fn run_roots(args: RootsArgs) -> i32 {
    if args.tol <= 0.0 {
        return invalid("tol must be positive");
    }
    if let Some(p) = args.p {
        if let Err(msg) = check_unit("p", p) {
            return invalid(&msg);
        }
    }
    let out = RootsOutput {
        p0: find_p0(args.tol),
        small_pole_threshold: small_pole_threshold(),
        p: args.p,
        b0_case_boundary: args.p.map(b0_case_boundary),
        gauge_peak_a: args.p.and_then(|p| find_gauge_peak(p, args.tol).ok()),
        min_witness_a: args.p.and_then(|p| find_min_witness(p, args.tol).ok()),
        lambda_limit: args.p.and_then(|p| lambda_limit(p).ok()),
    };
    match args.output_format.unwrap_or(Format::Text) {
        Format::Json => print_json(&out),
        Format::Csv => print_csv(&RootsOutput::CSV_HEADER, vec![out.csv_row()]),
        Format::Text => out.print_text(),
    }
    0
}

fn run_certify(args: CertifyArgs) -> i32 {
    if let Err(msg) = check_unit("p", args.p).and_then(|_| check_unit("lambda", args.lambda)) {
        return invalid(&msg);
    }
    let (out, code) = match certify(args.p, args.lambda) {
        Ok(cert) => (CertifyOutput::certified(&cert), 0),
        Err(Error::OutsideWindow { limit, .. }) => {
            let mut out = CertifyOutput::refused(ScanStatus::OutsideWindow, args.p, args.lambda);
            out.window_hi = Some(limit);
            (out, 1)
        }
        Err(Error::InvalidRegime { p0, .. }) => {
            let mut out = CertifyOutput::refused(ScanStatus::InvalidRegime, args.p, args.lambda);
            out.p0 = Some(p0);
            (out, 1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    match args.output_format.unwrap_or(Format::Json) {
        Format::Json => print_json(&out),
        Format::Csv => print_csv(&CertifyOutput::CSV_HEADER, vec![out.csv_row()]),
        Format::Text => out.print_text(),
    }
    code
}

fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![lo];
    }
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect()
}

fn run_scan(args: ScanArgs) -> i32 {
    for (name, lo, hi, steps) in [
        ("p", args.p_min, args.p_max, args.p_steps),
        ("lambda", args.lambda_min, args.lambda_max, args.lambda_steps),
    ] {
        if let Err(msg) = check_unit(&format!("{name}-min"), lo)
            .and_then(|_| check_unit(&format!("{name}-max"), hi))
        {
            return invalid(&msg);
        }
        if lo > hi {
            return invalid(&format!("{name}-min must not exceed {name}-max"));
        }
        if steps == 0 {
            return invalid(&format!("{name}-steps must be at least 1"));
        }
    }

    let p_grid = linspace(args.p_min, args.p_max, args.p_steps);
    let lambda_grid = linspace(args.lambda_min, args.lambda_max, args.lambda_steps);
    let cells = scan(&p_grid, &lambda_grid);
    let rows: Vec<CertifyOutput> = cells.iter().map(CertifyOutput::from_cell).collect();

    if let Some(path) = &args.emit_curve {
        let grid = linspace(args.p_min, args.p_max, CURVE_POINTS);
        let mut body = String::from("p,lambda_limit\n");
        for p in grid {
            if let Ok(limit) = lambda_limit(p) {
                body.push_str(&format!("{},{}\n", num(p), num(limit)));
            }
        }
        if let Err(e) = std::fs::write(path, body) {
            eprintln!("error: could not write curve to {}: {e}", path.display());
            return 1;
        }
    }

    match args.output_format.unwrap_or(Format::Json) {
        Format::Json => print_json(&rows),
        Format::Csv => print_csv(
            &CertifyOutput::CSV_HEADER,
            rows.iter().map(|r| r.csv_row()).collect(),
        ),
        Format::Text => {
            for row in &rows {
                let margin = row
                    .margin
                    .map(|m| format!(" margin={}", num(m)))
                    .unwrap_or_default();
                println!(
                    "p={} lambda={} status={}{margin}",
                    num(row.p),
                    num(row.lambda),
                    row.status
                );
            }
        }
    }
    0
}

fn run_bounds(args: BoundsArgs) -> i32 {
    if let Err(msg) = check_unit("p", args.p).and_then(|_| check_unit("lambda", args.lambda)) {
        return invalid(&msg);
    }
    let params = PoleParams::new(args.p, args.lambda).expect("validated above");
    let disk = a2_disk(params);
    let range = residue_modulus_range(params);
    let (bound, case) = b0_bound(params);
    let out = BoundsOutput {
        p: args.p,
        lambda: args.lambda,
        a2_center_re: disk.center().re,
        a2_center_im: disk.center().im,
        a2_radius: disk.radius(),
        a2_abs_min: 1.0 / args.p - args.lambda * args.p,
        a2_abs_max: a2_abs_bound(params),
        residue_lo: range.lo(),
        residue_hi: range.hi(),
        b0_bound: bound,
        b0_case: case.to_string(),
        case_iii_extremal_a: b0_case_iii_extremal_a(params).ok(),
    };
    match args.output_format.unwrap_or(Format::Json) {
        Format::Json => print_json(&out),
        Format::Csv => print_csv(&BoundsOutput::CSV_HEADER, vec![out.csv_row()]),
        Format::Text => out.print_text(),
    }
    0
}

fn run_series(args: SeriesArgs) -> i32 {
    if let Err(msg) = check_unit("p", args.p).and_then(|_| check_unit("lambda", args.lambda)) {
        return invalid(&msg);
    }
    if args.order < 4 {
        return invalid("order must be at least 4");
    }
    let rho = args.rho.unwrap_or_else(|| {
        default_contour_radius(PoleParams::new(args.p, args.lambda).expect("validated above"))
    });
    if !(rho > 0.0 && rho < args.p.min(1.0 - args.p)) {
        return invalid(&format!(
            "rho must lie in (0, min(p, 1-p)) = (0, {}), got {rho}",
            args.p.min(1.0 - args.p)
        ));
    }
    if args.contour_nodes < 64 {
        return invalid("contour-nodes must be at least 64");
    }
    let omega = match omega::parse_omega(&args.omega) {
        Ok(w) => w,
        Err(msg) => return invalid(&msg),
    };

    let params = PoleParams::new(args.p, args.lambda).expect("validated above");
    let member = match build(params, omega.clone(), args.order) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    // residual of the representation identity U_f = λ z² ω(z)
    let uf = member.uf_series();
    let omega_taylor = omega.taylor(uf.order());
    let mut uf_residual: f64 = 0.0;
    for k in 0..=uf.order() {
        let expect = if k >= 2 {
            args.lambda * omega_taylor.coeff(k - 2)
        } else {
            Complex64::new(0.0, 0.0)
        };
        uf_residual = uf_residual.max((uf.coeff(k) - expect).norm());
    }

    let b_minus1 = residue(params, &omega);
    let b0 = laurent_b0(params, &omega);
    let (b_minus1_contour, b0_contour) = match member
        .laurent_numeric(-1, rho, args.contour_nodes)
        .and_then(|r| Ok((r, member.laurent_numeric(0, rho, args.contour_nodes)?)))
    {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    let out = SeriesOutput {
        p: args.p,
        lambda: args.lambda,
        omega: args.omega.clone(),
        omega_certified: omega.is_certified(),
        order: args.order,
        coefficients: (1..=args.order)
            .map(|n| {
                let c = member.f_series().coeff(n);
                ComplexEntry {
                    n: n as i64,
                    re: c.re,
                    im: c.im,
                }
            })
            .collect(),
        uf_residual,
        b_minus1_closed: ComplexEntry {
            n: -1,
            re: b_minus1.re,
            im: b_minus1.im,
        },
        b_minus1_contour: ComplexEntry {
            n: -1,
            re: b_minus1_contour.re,
            im: b_minus1_contour.im,
        },
        b0_closed: ComplexEntry {
            n: 0,
            re: b0.re,
            im: b0.im,
        },
        b0_contour: ComplexEntry {
            n: 0,
            re: b0_contour.re,
            im: b0_contour.im,
        },
        membership_margin: member.membership_margin(0.999, 720),
        contour_rho: rho,
        contour_nodes: args.contour_nodes,
    };
    match args.output_format.unwrap_or(Format::Json) {
        Format::Json => print_json(&out),
        Format::Csv => print_csv(&SeriesOutput::CSV_HEADER, out.csv_rows()),
        Format::Text => out.print_text(),
    }
    0
}

fn run_probe(args: ProbeArgs) -> i32 {
    if let Err(msg) = check_unit("p", args.p).and_then(|_| check_unit("lambda", args.lambda)) {
        return invalid(&msg);
    }
    if args.samples == 0 {
        return invalid("samples must be at least 1");
    }
    let params = PoleParams::new(args.p, args.lambda).expect("validated above");

    let report = match args.quantity.as_str() {
        "a2" | "residue" | "b0" => {
            let wanted = match args.quantity.as_str() {
                "a2" => ProbeQuantity::A2,
                "residue" => ProbeQuantity::Residue,
                _ => ProbeQuantity::B0,
            };
            probe_proved_bounds(params, args.samples, args.seed)
                .into_iter()
                .find(|r| r.quantity == wanted)
                .expect("proved-bound probe reports all three quantities")
        }
        "a3" => {
            if args.samples < 10 {
                return invalid("the a3 sweep needs at least 10 samples");
            }
            probe_a3(params, args.samples, args.seed)
        }
        other => match other.strip_prefix("bn:").map(str::parse::<u32>) {
            Some(Ok(n)) => probe_bn(params, n, args.samples, args.seed),
            _ => {
                return invalid(&format!(
                    "unknown quantity `{other}` (expected a2, a3, residue, b0 or bn:<n>)"
                ))
            }
        },
    };

    if let Some(path) = &args.emit_curve {
        let mut body = String::from("a,lambda_threshold\n");
        for i in 0..CURVE_POINTS {
            let a = (i as f64 + 0.5) / CURVE_POINTS as f64;
            if let Ok(threshold) = lambda_threshold(args.p, a) {
                body.push_str(&format!("{},{}\n", num(a), num(threshold)));
            }
        }
        if let Err(e) = std::fs::write(path, body) {
            eprintln!("error: could not write curve to {}: {e}", path.display());
            return 1;
        }
    }

    match args.output_format.unwrap_or(Format::Json) {
        Format::Json => print_json(&report),
        Format::Csv => print_csv(&PROBE_CSV_HEADER, vec![probe_csv_row(&report)]),
        Format::Text => probe_print_text(&report),
    }
    0
}
