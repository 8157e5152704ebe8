//! Randomized extremal probing.
//!
//! Stresses the proved bounds over reproducible random members and maps
//! empirically where the conjectured bounds fail. Probe reports are
//! observations, not proofs: every report carries `certified: false`, and
//! only [`crate::counterexample::certify`] produces backed certifications.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::counterexample::{certify, conjectured_bound_n3};
use crate::schur::SchurFunction;
use crate::umclass::{
    a2_abs_bound, b0_bound, b0_case_iii_extremal_a, bhowmik_parveen_bound, build,
    default_contour_radius, laurent_b0, residue, residue_modulus_range, PoleParams,
    DEFAULT_CONTOUR_NODES,
};

/// Highest degree drawn for the random Blaschke pool.
const POOL_MAX_DEGREE: usize = 5;
/// Random members mixed into the third-coefficient sweep.
const A3_RANDOM_POOL: usize = 1000;
/// Series order for pool members that go through the series engine.
const POOL_SERIES_ORDER: usize = 8;
/// Comparison guard for conjectured quantities whose extremal member sits
/// exactly on the bound.
const VIOLATION_GUARD: f64 = 1e-9;

/// Which functional a probe measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeQuantity {
    A2,
    A3,
    Residue,
    B0,
    Bn(u32),
}

impl std::fmt::Display for ProbeQuantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProbeQuantity::A2 => write!(f, "a2"),
            ProbeQuantity::A3 => write!(f, "a3"),
            ProbeQuantity::Residue => write!(f, "residue"),
            ProbeQuantity::B0 => write!(f, "b0"),
            ProbeQuantity::Bn(n) => write!(f, "bn({n})"),
        }
    }
}

impl Serialize for ProbeQuantity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Outcome of one randomized sweep. `violated` is only ever set for
/// conjectured quantities; proved bounds are never reported violated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub params: PoleParams,
    pub samples: usize,
    pub quantity: ProbeQuantity,
    pub observed_max: f64,
    pub theoretical: f64,
    pub violated: bool,
    pub witness: String,
    pub seed: u64,
    /// Always false: reports are empirical observations.
    pub certified: bool,
}

/// The deterministic random pool: `samples` Blaschke products with degrees
/// drawn from `0..=5`, all derived from one master stream.
fn random_pool(samples: usize, seed: u64) -> Vec<(SchurFunction, String)> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let degree = master.gen_range(0..=POOL_MAX_DEGREE);
            let sub_seed = master.gen::<u64>();
            (
                SchurFunction::random_blaschke(degree, sub_seed),
                format!("blaschke(degree={degree}, seed={sub_seed})"),
            )
        })
        .collect()
}

fn track_max(best: &mut (f64, String), value: f64, witness: &str) {
    if value > best.0 {
        *best = (value, witness.to_string());
    }
}

/// Sweeps `samples` random members plus the named extremals and reports the
/// observed maxima of `|a₂|`, `|b₋₁|` and `|b₀|` against their proved
/// bounds. By construction the reports never flag a violation.
pub fn probe_proved_bounds(params: PoleParams, samples: usize, seed: u64) -> Vec<ProbeReport> {
    assert!(samples >= 1, "probe needs at least one sample");
    let p = params.p();
    let lambda = params.lambda();

    let mut pool = vec![(
        SchurFunction::Constant(Complex64::new(-1.0, 0.0)),
        "constant(-1)".to_string(),
    )];
    if let Ok(a) = b0_case_iii_extremal_a(params) {
        pool.push((
            SchurFunction::negated_mobius(a).expect("extremal parameter lies in (-1, 1)"),
            format!("negmob(a={a})"),
        ));
    }
    pool.extend(random_pool(samples, seed));

    let mut best_a2 = (f64::NEG_INFINITY, String::new());
    let mut best_res = (f64::NEG_INFINITY, String::new());
    let mut best_b0 = (f64::NEG_INFINITY, String::new());
    for (omega, name) in &pool {
        let vp = omega
            .antiderivative_at(Complex64::new(p, 0.0))
            .expect("pole lies inside the disk");
        let a2 = (Complex64::new(1.0 / p, 0.0) - lambda * vp).norm();
        track_max(&mut best_a2, a2, name);
        track_max(&mut best_res, residue(params, omega).norm(), name);
        track_max(&mut best_b0, laurent_b0(params, omega).norm(), name);
    }

    let (b0_cap, _) = b0_bound(params);
    let reports = vec![
        (ProbeQuantity::A2, best_a2, a2_abs_bound(params)),
        (
            ProbeQuantity::Residue,
            best_res,
            residue_modulus_range(params).hi(),
        ),
        (ProbeQuantity::B0, best_b0, b0_cap),
    ];
    reports
        .into_iter()
        .map(|(quantity, (observed_max, witness), theoretical)| {
            debug_assert!(
                observed_max <= theoretical + 1e-9,
                "proved bound exceeded: {quantity} observed {observed_max} vs {theoretical}"
            );
            ProbeReport {
                params,
                samples,
                quantity,
                observed_max,
                theoretical,
                violated: false,
                witness,
                seed,
                certified: false,
            }
        })
        .collect()
}

/// Sweeps the Möbius witness family over a uniform grid in `(0, 1)` plus a
/// random Blaschke pool (and the certified witness when one exists) and
/// compares the largest `|a₃|` against the conjectured bound.
pub fn probe_a3(params: PoleParams, grid_size: usize, seed: u64) -> ProbeReport {
    assert!(grid_size >= 10, "grid needs at least 10 points");
    let p = params.p();
    let lambda = params.lambda();

    let mut best = (f64::NEG_INFINITY, String::new());
    for i in 0..grid_size {
        let a = (i + 1) as f64 / (grid_size + 1) as f64;
        let a3 = crate::counterexample::a3_closed(p, lambda, a);
        track_max(&mut best, a3.abs(), &format!("negmob(a={a})"));
    }
    if let Ok(cert) = certify(p, lambda) {
        let a = cert.mobius_a();
        track_max(
            &mut best,
            cert.a3_closed().abs(),
            &format!("negmob(a={a}) [window maximizer]"),
        );
    }
    let mut samples = grid_size;
    for (omega, name) in random_pool(A3_RANDOM_POOL, seed) {
        let member = build(params, omega, POOL_SERIES_ORDER).expect("pool members are valid");
        track_max(&mut best, member.f_series().coeff(3).norm(), &name);
        samples += 1;
    }

    let theoretical = conjectured_bound_n3(p, lambda);
    ProbeReport {
        params,
        samples,
        quantity: ProbeQuantity::A3,
        observed_max: best.0,
        theoretical,
        violated: best.0 > theoretical,
        witness: best.1,
        seed,
        certified: false,
    }
}

/// Compares the largest observed `|b_n|` against the conjectured Laurent
/// bound. `n = 0` goes through the closed form (and includes the case-III
/// extremal, where the conjecture provably fails); `n ≥ 1` goes through the
/// contour oracle.
pub fn probe_bn(params: PoleParams, n: u32, samples: usize, seed: u64) -> ProbeReport {
    let mut pool = vec![(
        SchurFunction::Constant(Complex64::new(-1.0, 0.0)),
        "constant(-1)".to_string(),
    )];
    if n == 0 {
        if let Ok(a) = b0_case_iii_extremal_a(params) {
            pool.push((
                SchurFunction::negated_mobius(a).expect("extremal parameter lies in (-1, 1)"),
                format!("negmob(a={a})"),
            ));
        }
    }
    pool.extend(random_pool(samples, seed));

    let mut best = (f64::NEG_INFINITY, String::new());
    for (omega, name) in &pool {
        let bn = if n == 0 {
            laurent_b0(params, omega).norm()
        } else {
            let member = build(params, omega.clone(), POOL_SERIES_ORDER)
                .expect("pool members are valid");
            member
                .laurent_numeric(n as i32, default_contour_radius(params), DEFAULT_CONTOUR_NODES)
                .expect("default contour is admissible")
                .norm()
        };
        track_max(&mut best, bn, name);
    }

    let theoretical = bhowmik_parveen_bound(params, n);
    ProbeReport {
        params,
        samples,
        quantity: ProbeQuantity::Bn(n),
        observed_max: best.0,
        theoretical,
        violated: best.0 > theoretical + VIOLATION_GUARD,
        witness: best.1,
        seed,
        certified: false,
    }
}
