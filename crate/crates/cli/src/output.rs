//! Output records and the three serialization formats.
//!
//! JSON is the machine-readable default (numbers round-trip exactly), CSV
//! emits a header row plus one row per record with a documented column
//! order, and text prints `key=value` lines.

use serde::Serialize;
use umlam::{CertifiedCounterexample, ProbeReport, ScanCell, ScanStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output records serialize")
    );
}

pub fn num(x: f64) -> String {
    format!("{x}")
}

pub fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn print_csv(header: &[&str], rows: Vec<Vec<String>>) {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(header).expect("csv header");
    for row in rows {
        wtr.write_record(&row).expect("csv row");
    }
    let bytes = wtr.into_inner().expect("csv flush");
    print!("{}", String::from_utf8(bytes).expect("csv is utf-8"));
}

#[derive(Debug, Serialize)]
pub struct RootsOutput {
    pub p0: f64,
    pub small_pole_threshold: f64,
    pub p: Option<f64>,
    pub b0_case_boundary: Option<f64>,
    pub gauge_peak_a: Option<f64>,
    pub min_witness_a: Option<f64>,
    pub lambda_limit: Option<f64>,
}

impl RootsOutput {
    pub const CSV_HEADER: [&'static str; 7] = [
        "p0",
        "small_pole_threshold",
        "p",
        "b0_case_boundary",
        "gauge_peak_a",
        "min_witness_a",
        "lambda_limit",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            num(self.p0),
            num(self.small_pole_threshold),
            opt_num(self.p),
            opt_num(self.b0_case_boundary),
            opt_num(self.gauge_peak_a),
            opt_num(self.min_witness_a),
            opt_num(self.lambda_limit),
        ]
    }

    pub fn print_text(&self) {
        println!("p0={}", num(self.p0));
        println!("small_pole_threshold={}", num(self.small_pole_threshold));
        if let Some(p) = self.p {
            println!("p={}", num(p));
            println!("b0_case_boundary={}", text_opt(self.b0_case_boundary));
            println!("gauge_peak_a={}", text_opt(self.gauge_peak_a));
            println!("min_witness_a={}", text_opt(self.min_witness_a));
            println!("lambda_limit={}", text_opt(self.lambda_limit));
        }
    }
}

fn text_opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_else(|| "n/a".to_string())
}

#[derive(Debug, Serialize)]
pub struct CertifyOutput {
    pub status: ScanStatus,
    pub p: f64,
    pub lambda: f64,
    pub a: Option<f64>,
    pub a3_series: Option<f64>,
    pub a3_closed: Option<f64>,
    pub bound: Option<f64>,
    pub margin: Option<f64>,
    pub window_hi: Option<f64>,
    pub p0: Option<f64>,
}

impl CertifyOutput {
    pub const CSV_HEADER: [&'static str; 10] = [
        "status",
        "p",
        "lambda",
        "a",
        "a3_series",
        "a3_closed",
        "bound",
        "margin",
        "window_hi",
        "p0",
    ];

    pub fn certified(cert: &CertifiedCounterexample) -> Self {
        Self {
            status: ScanStatus::Certified,
            p: cert.p(),
            lambda: cert.lambda(),
            a: Some(cert.mobius_a()),
            a3_series: Some(cert.a3_series()),
            a3_closed: Some(cert.a3_closed()),
            bound: Some(cert.bound()),
            margin: Some(cert.margin()),
            window_hi: Some(cert.window_hi()),
            p0: None,
        }
    }

    pub fn refused(status: ScanStatus, p: f64, lambda: f64) -> Self {
        Self {
            status,
            p,
            lambda,
            a: None,
            a3_series: None,
            a3_closed: None,
            bound: None,
            margin: None,
            window_hi: None,
            p0: None,
        }
    }

    pub fn from_cell(cell: &ScanCell) -> Self {
        match &cell.certificate {
            Some(cert) => Self::certified(cert),
            None => Self::refused(cell.status, cell.p, cell.lambda),
        }
    }

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.status.to_string(),
            num(self.p),
            num(self.lambda),
            opt_num(self.a),
            opt_num(self.a3_series),
            opt_num(self.a3_closed),
            opt_num(self.bound),
            opt_num(self.margin),
            opt_num(self.window_hi),
            opt_num(self.p0),
        ]
    }

    pub fn print_text(&self) {
        println!("status={}", self.status);
        println!("p={}", num(self.p));
        println!("lambda={}", num(self.lambda));
        for (key, value) in [
            ("a", self.a),
            ("a3_series", self.a3_series),
            ("a3_closed", self.a3_closed),
            ("bound", self.bound),
            ("margin", self.margin),
            ("window_hi", self.window_hi),
            ("p0", self.p0),
        ] {
            if let Some(v) = value {
                println!("{key}={}", num(v));
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsOutput {
    pub p: f64,
    pub lambda: f64,
    pub a2_center_re: f64,
    pub a2_center_im: f64,
    pub a2_radius: f64,
    pub a2_abs_min: f64,
    pub a2_abs_max: f64,
    pub residue_lo: f64,
    pub residue_hi: f64,
    pub b0_bound: f64,
    pub b0_case: String,
    pub case_iii_extremal_a: Option<f64>,
}

impl BoundsOutput {
    pub const CSV_HEADER: [&'static str; 12] = [
        "p",
        "lambda",
        "a2_center_re",
        "a2_center_im",
        "a2_radius",
        "a2_abs_min",
        "a2_abs_max",
        "residue_lo",
        "residue_hi",
        "b0_bound",
        "b0_case",
        "case_iii_extremal_a",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            num(self.p),
            num(self.lambda),
            num(self.a2_center_re),
            num(self.a2_center_im),
            num(self.a2_radius),
            num(self.a2_abs_min),
            num(self.a2_abs_max),
            num(self.residue_lo),
            num(self.residue_hi),
            num(self.b0_bound),
            self.b0_case.clone(),
            opt_num(self.case_iii_extremal_a),
        ]
    }

    pub fn print_text(&self) {
        println!("p={}", num(self.p));
        println!("lambda={}", num(self.lambda));
        println!("a2_center={}{:+}i", num(self.a2_center_re), self.a2_center_im);
        println!("a2_radius={}", num(self.a2_radius));
        println!("a2_abs_min={}", num(self.a2_abs_min));
        println!("a2_abs_max={}", num(self.a2_abs_max));
        println!("residue_lo={}", num(self.residue_lo));
        println!("residue_hi={}", num(self.residue_hi));
        println!("b0_bound={}", num(self.b0_bound));
        println!("b0_case={}", self.b0_case);
        println!(
            "case_iii_extremal_a={}",
            text_opt(self.case_iii_extremal_a)
        );
    }
}

#[derive(Debug, Serialize)]
pub struct ComplexEntry {
    pub n: i64,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Serialize)]
pub struct SeriesOutput {
    pub p: f64,
    pub lambda: f64,
    pub omega: String,
    pub omega_certified: bool,
    pub order: usize,
    pub coefficients: Vec<ComplexEntry>,
    pub uf_residual: f64,
    pub b_minus1_closed: ComplexEntry,
    pub b_minus1_contour: ComplexEntry,
    pub b0_closed: ComplexEntry,
    pub b0_contour: ComplexEntry,
    pub membership_margin: f64,
    pub contour_rho: f64,
    pub contour_nodes: usize,
}

impl SeriesOutput {
    pub const CSV_HEADER: [&'static str; 4] = ["quantity", "index", "re", "im"];

    /// One row per Taylor coefficient, then the Laurent and diagnostic rows.
    pub fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for c in &self.coefficients {
            rows.push(vec![
                "a".to_string(),
                c.n.to_string(),
                num(c.re),
                num(c.im),
            ]);
        }
        for (name, entry) in [
            ("b_closed", &self.b_minus1_closed),
            ("b_contour", &self.b_minus1_contour),
            ("b_closed", &self.b0_closed),
            ("b_contour", &self.b0_contour),
        ] {
            rows.push(vec![
                name.to_string(),
                entry.n.to_string(),
                num(entry.re),
                num(entry.im),
            ]);
        }
        rows.push(vec![
            "uf_residual".to_string(),
            "0".to_string(),
            num(self.uf_residual),
            num(0.0),
        ]);
        rows.push(vec![
            "membership_margin".to_string(),
            "0".to_string(),
            num(self.membership_margin),
            num(0.0),
        ]);
        rows
    }

    pub fn print_text(&self) {
        println!("p={}", num(self.p));
        println!("lambda={}", num(self.lambda));
        println!("omega={}", self.omega);
        println!("omega_certified={}", self.omega_certified);
        println!("order={}", self.order);
        for c in &self.coefficients {
            println!("a[{}]={}{:+}i", c.n, num(c.re), c.im);
        }
        println!("uf_residual={}", num(self.uf_residual));
        println!(
            "b[-1]_closed={}{:+}i",
            num(self.b_minus1_closed.re),
            self.b_minus1_closed.im
        );
        println!(
            "b[-1]_contour={}{:+}i",
            num(self.b_minus1_contour.re),
            self.b_minus1_contour.im
        );
        println!("b[0]_closed={}{:+}i", num(self.b0_closed.re), self.b0_closed.im);
        println!(
            "b[0]_contour={}{:+}i",
            num(self.b0_contour.re),
            self.b0_contour.im
        );
        println!("membership_margin={}", num(self.membership_margin));
        println!("contour_rho={}", num(self.contour_rho));
        println!("contour_nodes={}", self.contour_nodes);
    }
}

pub const PROBE_CSV_HEADER: [&'static str; 10] = [
    "p",
    "lambda",
    "quantity",
    "samples",
    "seed",
    "observed_max",
    "theoretical",
    "violated",
    "witness",
    "certified",
];

pub fn probe_csv_row(report: &ProbeReport) -> Vec<String> {
    vec![
        num(report.params.p()),
        num(report.params.lambda()),
        report.quantity.to_string(),
        report.samples.to_string(),
        report.seed.to_string(),
        num(report.observed_max),
        num(report.theoretical),
        report.violated.to_string(),
        report.witness.clone(),
        report.certified.to_string(),
    ]
}

pub fn probe_print_text(report: &ProbeReport) {
    println!("p={}", num(report.params.p()));
    println!("lambda={}", num(report.params.lambda()));
    println!("quantity={}", report.quantity);
    println!("samples={}", report.samples);
    println!("seed={}", report.seed);
    println!("observed_max={}", num(report.observed_max));
    println!("theoretical={}", num(report.theoretical));
    println!("violated={}", report.violated);
    println!("witness={}", report.witness);
    println!("certified={}", report.certified);
}
