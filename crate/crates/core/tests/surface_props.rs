mod common;

use common::{d5_vec, max_abs, HELIX, HYPERBOLA, TWISTED};
use minkowski_lift::frenet::{linspace, CurveSpec};
use minkowski_lift::lift::Orientation;
use minkowski_lift::presets::EXAMPLES;
use minkowski_lift::surface::{
    alignment_at, analytic_normal_on_curve, check_asymptotic, check_isoparametric, ruled_surface,
    MarchingScale, RuledVariant, SurfaceFamily,
};
use proptest::prelude::*;

const H: f64 = 1e-4;

/// `P_s x P_t` from five-point differences of `eval` alone.
fn oracle_normal(surf: &SurfaceFamily, s: f64, t: f64) -> minkowski_lift::lorentz::Vec3 {
    let p_s = d5_vec(|x| surf.eval(x, t).unwrap(), s, H);
    let p_t = d5_vec(|y| surf.eval(s, y).unwrap(), t, H);
    p_s.cross(&p_t)
}

fn relative_gap(a: minkowski_lift::lorentz::Vec3, b: minkowski_lift::lorentz::Vec3) -> f64 {
    max_abs(a - b) / (1.0 + max_abs(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn numeric_normal_matches_oracle_off_the_curve(which in 0usize..4, a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let ex = &EXAMPLES[which];
        let surf = ex.surface().unwrap();
        // Stay 2h inside the domain so the oracle stencil fits.
        let s = ex.s_range.0 + 1e-3 + a * (ex.s_range.1 - ex.s_range.0 - 2e-3);
        let t = ex.t_range.0 + 1e-3 + b * (ex.t_range.1 - ex.t_range.0 - 2e-3);
        let got = surf.normal(s, t).unwrap();
        let want = oracle_normal(&surf, s, t);
        prop_assert!(relative_gap(got, want) <= 1e-6, "example {} at ({s}, {t})", ex.id);
    }
}

#[test]
fn analytic_normal_matches_oracle_on_the_curve() {
    for ex in &EXAMPLES {
        let surf = ex.surface().unwrap();
        for s in linspace(ex.s_range.0 + 1e-3, ex.s_range.1 - 1e-3, 41) {
            let want = oracle_normal(&surf, s, ex.t0);
            let got = analytic_normal_on_curve(&surf, s).unwrap().vector;
            let gap = relative_gap(got, want).min(relative_gap(-got, want));
            assert!(gap <= 1e-6, "example {} at {s}: {gap:e}", ex.id);
        }
    }
}

#[test]
fn ruled_surfaces_pass_on_every_curve() {
    let curves = [
        CurveSpec::parse(HYPERBOLA, -1.0, 1.0).unwrap(),
        CurveSpec::parse(HELIX, -1.1, 1.0).unwrap(),
        CurveSpec::parse(TWISTED, -1.0, 1.0).unwrap(),
    ];
    for curve in curves {
        for variant in [RuledVariant::TangentPlusNormal, RuledVariant::Normal] {
            for t0 in [0.0, 0.3] {
                let m = ruled_surface(t0, variant)
                    .with_t_range(t0 - 1.0, t0 + 1.0)
                    .unwrap();
                let surf = SurfaceFamily::new(curve.clone(), m, Orientation::Canonical);
                let grid = curve.grid(41);
                let report = check_asymptotic(&surf, &grid);
                assert!(report.passed(), "{variant:?} t0={t0}: {report:?}");
                for &s in &grid {
                    assert!(alignment_at(&surf, s).unwrap().asymptotic());
                    // Straight rulings: P is affine in t.
                    let mid = surf.eval(s, t0 + 0.5).unwrap();
                    let ends = 0.5 * (surf.eval(s, t0).unwrap() + surf.eval(s, t0 + 1.0).unwrap());
                    assert!(max_abs(mid - ends) <= 1e-12);
                }
            }
        }
    }
}

#[test]
fn each_clause_is_detected() {
    let curve = CurveSpec::parse(HELIX, -1.1, 1.0).unwrap();
    let grid = curve.grid(41);
    let check = |texts: [&str; 3]| {
        let m = MarchingScale::parse(texts, 0.0, -1.0, 1.0).unwrap();
        check_asymptotic(
            &SurfaceFamily::new(curve.clone(), m, Orientation::Canonical),
            &grid,
        )
    };
    let r = check(["s + 2", "t", "0"]);
    assert!(!r.iso_ok && r.dw_dt_zero_ok && r.dv_dt_nonzero_ok);
    let r = check(["0", "t", "t"]);
    assert!(r.iso_ok && !r.dw_dt_zero_ok && r.dv_dt_nonzero_ok);
    assert_eq!(r.failing_s_values.len(), grid.len());
    let r = check(["0", "t^2", "0"]);
    assert!(r.iso_ok && r.dw_dt_zero_ok && !r.dv_dt_nonzero_ok);
    assert!(r.symbolic_notes.contains("dv/dt(s,t0) = 0 identically"));
    let r = check(["0", "t", "0"]);
    assert!(r.passed() && r.failing_s_values.is_empty());
}

#[test]
fn isoparametric_residual() {
    let m = MarchingScale::parse(["t*s", "sinh(t)", "t - 0.5"], 0.5, 0.0, 1.0).unwrap();
    let grid = linspace(-1.0, 1.0, 5);
    assert_eq!(check_isoparametric(&m, &grid).unwrap(), 0.5f64.sinh());
    let m = MarchingScale::parse(["t", "sinh(t)", "0"], 0.0, -1.0, 0.0).unwrap();
    assert_eq!(check_isoparametric(&m, &grid).unwrap(), 0.0);
}
