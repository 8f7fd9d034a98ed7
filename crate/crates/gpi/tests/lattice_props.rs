mod common;

use common::*;
use gpi::lattice::*;
use gpi::params::halfline_to_greek;
use gpi::scheme::gauge_transform;
use gpi::{Complex64, CouplingScheme};
use proptest::prelude::*;

fn lattice() -> impl Strategy<Value = LatticeSpec> {
    (coupled(), 0.5..2.0f64).prop_map(|(s, ell)| LatticeSpec::new(s, ell).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monodromy_agrees_with_band_condition(spec in lattice()) {
        let bound = band_condition_lhs_bound(&spec);
        for j in 1..=2000 {
            let k = 0.01 * j as f64;
            let rhs = band_condition_rhs(&spec, k);
            let tr = monodromy_trace(&spec, k).unwrap();
            let edge = (rhs.abs() / bound - 1.0).abs() < 1e-8;
            prop_assert!(edge || (rhs.abs() <= bound) == (tr.abs() <= 2.0), "{k} {rhs} {tr}");
        }
    }

    #[test]
    fn bloch_determinant_oracle(spec in lattice(), e in 0.05..60.0f64) {
        let k = Complex64::new(e.sqrt(), 0.0);
        match bloch_angles(&spec, e) {
            Some((t1, t2)) => {
                prop_assert!(bloch_determinant(&spec, k, t1).norm() < 1e-9);
                prop_assert!(bloch_determinant(&spec, k, t2).norm() < 1e-9);
            }
            None => {
                let smallest = (0..256)
                    .map(|j| bloch_determinant(&spec, k, -std::f64::consts::PI + j as f64 * 0.0245).norm())
                    .fold(f64::INFINITY, f64::min);
                prop_assert!(smallest > 0.0);
            }
        }
    }

    #[test]
    fn bands_disjoint_and_ordered(spec in lattice()) {
        let (bands, gaps) = band_structure(&spec, 8).unwrap();
        prop_assert!(!bands.is_empty());
        for b in &bands {
            prop_assert!(b.e_lo <= b.e_hi);
        }
        for w in bands.windows(2) {
            prop_assert!(w[0].e_hi < w[1].e_lo && w[0].m < w[1].m);
        }
        for w in gaps.windows(2) {
            prop_assert!(w[0].e_hi <= w[1].e_lo && w[0].m < w[1].m);
        }
        // Band edges solve |RHS| = |w|.
        let bound = band_condition_lhs_bound(&spec);
        for b in bands.iter().filter(|b| b.e_hi.is_finite()) {
            for e in [b.e_lo, b.e_hi] {
                if e > 1e-6 {
                    let h = band_condition_rhs(&spec, e.sqrt()) / bound;
                    prop_assert!((h.abs() - 1.0).abs() < 1e-7, "{e} {h}");
                }
            }
        }
    }

    #[test]
    fn gauge_leaves_bands(h in halfline(), phi in 0.0..6.3f64) {
        prop_assume!(h.c.norm() > 1e-2 && (h.a + h.b - 2.0 * h.c.re).abs() > 1e-2);
        let h2 = gauge_transform(&h, phi);
        prop_assume!((h2.a + h2.b - 2.0 * h2.c.re).abs() > 1e-2);
        let s1 = CouplingScheme::from_greek(halfline_to_greek(&h).unwrap()).unwrap();
        let s2 = CouplingScheme::from_greek(halfline_to_greek(&h2).unwrap()).unwrap();
        let (b1, _) = band_structure(&LatticeSpec::new(s1, 1.0).unwrap(), 6).unwrap();
        let (b2, _) = band_structure(&LatticeSpec::new(s2, 1.0).unwrap(), 6).unwrap();
        prop_assert_eq!(b1.len(), b2.len());
        for (x, y) in b1.iter().zip(&b2) {
            prop_assert!((x.e_lo - y.e_lo).abs() < 1e-8 * (1.0 + x.e_lo.abs()), "{:?} {:?}", x, y);
        }
    }

    #[test]
    fn dispersion_in_range(spec in lattice()) {
        let (bands, _) = band_structure(&spec, 4).unwrap();
        for b in &bands {
            for &(e, theta) in &b.samples {
                prop_assert!((0.0..=std::f64::consts::PI).contains(&theta));
                prop_assert!(e >= b.e_lo - 1e-12 * (1.0 + b.e_lo.abs()));
            }
        }
    }
}
