mod common;

use common::{d5_vec, g, max_abs, HELIX, HYPERBOLA, TWISTED};
use minkowski_lift::frenet::{frenet_apparatus_timelike, CurveSpec};
use minkowski_lift::lift::{
    crosscheck_frames, lift_frame_direct, lift_frame_via_relations, natural_lift, Orientation,
};
use minkowski_lift::lorentz::{classify, EPS_CAUSAL};
use proptest::prelude::*;

const H: f64 = 1e-3;

fn curves() -> Vec<(&'static str, CurveSpec)> {
    vec![
        ("hyperbola", CurveSpec::parse(HYPERBOLA, -1.0, 1.0).unwrap()),
        ("helix", CurveSpec::parse(HELIX, -1.1, 1.0).unwrap()),
        ("twisted", CurveSpec::parse(TWISTED, -1.0, 1.0).unwrap()),
    ]
}

#[test]
fn lift_is_the_velocity() {
    for (name, curve) in curves() {
        let lift = natural_lift(&curve);
        for s in curve.grid(41) {
            let fd = d5_vec(|x| curve.point(x).unwrap(), s, H);
            assert!(max_abs(lift.point(s).unwrap() - fd) <= 1e-9, "{name}");
            let p = lift.point(s).unwrap();
            assert!(
                (g(p, p) + 1.0).abs() <= 1e-12,
                "{name}: lift lies on the unit hyperboloid"
            );
        }
    }
}

#[test]
fn direct_frame_is_the_frenet_frame_of_the_lift() {
    for (name, curve) in curves() {
        let lift = natural_lift(&curve);
        for s in curve.grid(101) {
            let f = lift_frame_direct(&curve, s).unwrap();
            let (t, n, b) = (f.tangent, f.normal, f.binormal);
            assert!((g(t, t) - 1.0).abs() <= 1e-9, "{name}: lift is spacelike");
            assert!((g(n, n).abs() - 1.0).abs() <= 1e-9);
            assert!((g(b, b).abs() - 1.0).abs() <= 1e-9);
            assert!(g(t, n).abs() + g(t, b).abs() + g(n, b).abs() <= 1e-9);
            // Exactly one of N~, B~ is timelike.
            assert_ne!(g(n, n) < 0.0, g(b, b) < 0.0, "{name}");
            assert_eq!(f.binormal_character.is_timelike(), g(b, b) < 0.0);

            // T~ is the unit velocity of the lift, and T~' has no B~ part.
            let vel = d5_vec(|x| lift.point(x).unwrap(), s, H);
            assert!(max_abs((1.0 / vel.norm()) * vel - t) <= 1e-8, "{name}");
            let dt = d5_vec(|x| lift_frame_direct(&curve, x).unwrap().tangent, s, H);
            assert!(
                g(dt, b).abs() <= 1e-6 && g(dt, t).abs() <= 1e-6,
                "{name} at {s}"
            );

            // Orientation rule of the canonical frame.
            let sign = if f.binormal_character.is_timelike() {
                1.0
            } else {
                -1.0
            };
            assert!(max_abs(t.cross(&n) - sign * b) <= 1e-9, "{name}");
        }
    }
}

#[test]
fn relations_reproduce_the_direct_frame() {
    for (name, curve) in curves() {
        for s in curve.grid(101) {
            let direct = lift_frame_direct(&curve, s).unwrap();
            let app = frenet_apparatus_timelike(&curve, s).unwrap();
            let rel = lift_frame_via_relations(&app, &direct.case);
            let r = crosscheck_frames(&direct, &rel).unwrap();
            assert!(r <= 1e-8, "{name} at {s}: {r:e}");
        }
    }
}

#[test]
fn negative_torsion_uses_the_flipped_rows() {
    // Reflecting x3 reverses the torsion of the helix.
    let mirrored =
        CurveSpec::parse(["(5/3)*s", "(4/9)*cos(3*s)", "-(4/9)*sin(3*s)"], -1.0, 1.0).unwrap();
    for s in mirrored.grid(21) {
        let app = frenet_apparatus_timelike(&mirrored, s).unwrap();
        assert!((app.torsion + 5.0).abs() <= 1e-12);
        let direct = lift_frame_direct(&mirrored, s).unwrap();
        assert_eq!(direct.case.torsion_sign, -1.0);
        let rel = lift_frame_via_relations(&app, &direct.case);
        assert!(crosscheck_frames(&direct, &rel).unwrap() <= 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn paper_signs_only_touch_timelike_binormals(s in -1.0..1.0f64, which in 0usize..3) {
        let (_, curve) = &curves()[which];
        let f = lift_frame_direct(curve, s).unwrap();
        let p = f.oriented(Orientation::PaperSigns);
        prop_assert_eq!(p.tangent, f.tangent);
        prop_assert_eq!(p.normal, f.normal);
        if f.binormal_character.is_timelike() {
            prop_assert_eq!(p.binormal, -f.binormal);
        } else {
            prop_assert_eq!(p.binormal, f.binormal);
        }
        prop_assert_eq!(classify(&p.binormal, EPS_CAUSAL).tag, f.binormal_character.tag);
    }
}
