//! Cross-module flow: every witness a sweep certifies must be a genuine
//! class member whose coefficient data agrees along all three routes
//! (closed form, series engine, contour integration).

use umlam::counterexample::{a3_margin, conjectured_bound_n3, lambda_limit, scan, ScanStatus};
use umlam::schur::SchurFunction;
use umlam::umclass::{build, default_contour_radius, laurent_b0, residue, PoleParams};

#[test]
fn certified_witnesses_are_members_with_consistent_data() {
    let p_grid = [0.75, 0.8, 0.85, 0.9, 0.95];
    let lambda_grid = [0.005, 0.02];
    let cells = scan(&p_grid, &lambda_grid);
    assert_eq!(cells.len(), 10);

    let mut certified = 0;
    for cell in &cells {
        let cert = match (cell.status, &cell.certificate) {
            (ScanStatus::Certified, Some(cert)) => cert,
            (ScanStatus::Certified, None) => panic!("certified cell without certificate"),
            _ => continue,
        };
        certified += 1;

        let params = PoleParams::new(cert.p(), cert.lambda()).unwrap();
        let omega = SchurFunction::negated_mobius(cert.mobius_a()).unwrap();
        let member = build(params, omega.clone(), 16).unwrap();

        // membership of the witness
        assert!(
            member.membership_margin(0.999, 720) > 0.0,
            "witness at {cell:?} is not a member"
        );

        // Taylor route agrees with the certified record
        let a3 = member.f_series().coeff(3);
        assert!(a3.im.abs() < 1e-12);
        assert!((a3.re - cert.a3_closed()).abs() <= 1e-9);

        // the recorded margin is the bound violation
        assert!(cert.margin() > 0.0);
        let refit = a3_margin(cert.p(), cert.lambda(), cert.mobius_a());
        assert!((refit - cert.margin()).abs() <= 1e-15 * refit.abs().max(1.0));
        assert!(
            (cert.a3_closed() - conjectured_bound_n3(cert.p(), cert.lambda()) - cert.margin())
                .abs()
                <= 1e-12
        );

        // Laurent routes agree for the witness
        let rho = default_contour_radius(params);
        let res_gap =
            (residue(params, &omega) - member.laurent_numeric(-1, rho, 256).unwrap()).norm();
        let b0_gap =
            (laurent_b0(params, &omega) - member.laurent_numeric(0, rho, 256).unwrap()).norm();
        assert!(res_gap <= 1e-8 && b0_gap <= 1e-8, "contour gap at {cell:?}");
    }

    // every grid pole sits above the threshold and both lambdas sit inside
    // each window, so the whole grid certifies
    for &p in &p_grid {
        assert!(lambda_limit(p).unwrap() > 0.02);
    }
    assert_eq!(certified, 10);
}
