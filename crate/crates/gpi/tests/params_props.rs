mod common;

use common::*;
use gpi::params::*;
use gpi::scheme::{classify_symmetries, is_decoupled};
use gpi::{Complex64, CouplingScheme, GreekParams, HalflineParams};
use proptest::prelude::*;

const TOL: f64 = 1e-10;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn greek_halfline_round_trip(g in greek()) {
        prop_assume!(g.beta.abs() > 1e-6);
        let h = greek_to_halfline(&g).unwrap();
        let back = halfline_to_greek(&h).unwrap();
        prop_assert!(greek_close(&g, &back, TOL), "{g:?} {back:?}");
    }

    #[test]
    fn halfline_greek_round_trip(h in halfline()) {
        prop_assume!((h.a + h.b - 2.0 * h.c.re).abs() > 1e-6);
        let g = halfline_to_greek(&h).unwrap();
        let back = greek_to_halfline(&g).unwrap();
        prop_assert!(halfline_close(&h, &back, TOL), "{h:?} {back:?}");
    }

    #[test]
    fn halfline_inverse_round_trip(h in halfline()) {
        prop_assume!((h.a * h.b - h.c.norm_sqr()).abs() > 1e-6);
        let i = halfline_to_inverse(&h).unwrap();
        let back = inverse_to_halfline(&i).unwrap();
        prop_assert!(halfline_close(&h, &back, TOL), "{h:?} {back:?}");
    }

    #[test]
    fn greek_inverse_round_trip(g in greek()) {
        prop_assume!(g.alpha.abs() > 1e-6);
        let i = greek_to_inverse(&g).unwrap();
        prop_assume!((i.a + i.b + 2.0 * i.c.re).abs() > 1e-6);
        let back = inverse_to_greek(&i).unwrap();
        prop_assert!(greek_close(&g, &back, TOL), "{g:?} {back:?}");
    }

    #[test]
    fn transfer_routes_agree(g in greek()) {
        prop_assume!(g.coupling_weight().norm() > 1e-6);
        let t = greek_to_transfer(&g).unwrap();
        let m = t.real_matrix();
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        prop_assert!((det - 1.0).abs() < TOL);
        prop_assert!((t.omega.norm() - 1.0).abs() < TOL);
        let back = transfer_to_greek(&t).unwrap();
        prop_assert!(greek_close(&g, &back, TOL), "{g:?} {back:?}");
        if t.tb.abs() > 1e-6 {
            let h = transfer_to_halfline(&t).unwrap();
            let via = halfline_to_greek(&h).unwrap();
            prop_assert!(greek_close(&g, &via, TOL), "{g:?} {via:?}");
        }
    }

    #[test]
    fn det_identity(h in halfline()) {
        let minus = h.a + h.b - 2.0 * h.c.re;
        prop_assume!(minus.abs() > 1e-6);
        let g = halfline_to_greek(&h).unwrap();
        let expect = 4.0 * (h.a + h.b + 2.0 * h.c.re) / minus;
        prop_assert!((g.det_a() - expect).abs() <= TOL * (1.0 + expect.abs()));
    }

    #[test]
    fn seba_images(gs in -5.0..5.0f64, ds in -5.0..5.0f64) {
        prop_assume!(ds.abs() > 1e-6);
        let s = SebaParams::from_gamma_delta(gs, ds).unwrap();
        let h = seba_to_halfline(&s).unwrap();
        prop_assert_eq!(h.c, Complex64::new(1.0 / ds, 0.0));
        if let Ok(g) = halfline_to_greek(&h) {
            prop_assert!(g.gamma.im.abs() < 1e-12);
        }
    }

    #[test]
    fn chernoff_hughes_images(r in -5.0..5.0f64, z in complex(2.0)) {
        if let Ok(g) = chernoff_hughes_to_greek(&ChernoffHughesParams { r, z }) {
            prop_assert_eq!(g.beta, 0.0);
        }
    }

    #[test]
    fn reflection_implies_time_reversal(g in greek(), real in any::<bool>()) {
        let g = if real { GreekParams::new(g.alpha, g.beta, Complex64::new(0.0, g.gamma.im)) } else { g };
        if let Ok(s) = CouplingScheme::from_greek(g) {
            let sym = classify_symmetries(&s);
            prop_assert!(!sym.space_reflection || sym.time_reversal);
        }
    }

    #[test]
    fn decoupling_matches_c(h in halfline(), zero in any::<bool>()) {
        let h = if zero { HalflineParams::new(h.a, h.b, Complex64::new(0.0, 0.0)) } else { h };
        prop_assume!((h.a + h.b - 2.0 * h.c.re).abs() > 1e-6);
        let g = halfline_to_greek(&h).unwrap();
        let raw = CouplingScheme::Coupled(g);
        prop_assert_eq!(is_decoupled(&raw), h.c.norm() < 1e-12);
    }
}

#[test]
fn separating_greek_canonicalizes() {
    let s = CouplingScheme::from_halfline(HalflineParams::real(1.5, -0.5, 0.0)).unwrap();
    let g = halfline_to_greek(&HalflineParams::real(1.5, -0.5, 0.0)).unwrap();
    assert!((g.det_a() - 4.0).abs() < 1e-12 && g.gamma.im == 0.0);
    assert!(matches!(s, CouplingScheme::Separated(_)));
}
