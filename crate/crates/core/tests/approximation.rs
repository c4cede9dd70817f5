use clifford_core::approx::{
    algebraic_scalar_projection, approximate, bernstein_fit, degree_sweep, extract_components,
    Grid, SampledFunction, Target,
};
use clifford_core::{BladeMask, Multivector, Signature};
use proptest::prelude::*;

const DEGREES: [usize; 5] = [4, 8, 16, 32, 64];

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

#[test]
fn every_target_converges_along_the_sweep() {
    for target in Target::ALL {
        for s in [target.default_signature(), sig(1, 2), sig(3, 0)] {
            let f = target.sample::<f64>(s).unwrap();
            let errs: Vec<f64> = degree_sweep(&f, &DEGREES)
                .unwrap()
                .iter()
                .map(|r| r.combined_error)
                .collect();
            assert!(errs.windows(2).all(|w| w[1] <= w[0]), "{target} {s}: {errs:?}");
            assert!(errs[4] < 0.05, "{target} {s}: {errs:?}");
        }
    }
}

#[test]
fn clifford_exponential_rate() {
    let f = Target::CliffordExp.sample::<f64>(sig(0, 2)).unwrap();
    let e4 = approximate(&f, 4).unwrap().combined_error;
    let e64 = approximate(&f, 64).unwrap().combined_error;
    assert!(e64 < e4 / 4.0, "{e4} -> {e64}");
}

#[test]
fn combined_error_bounded_by_components() {
    for target in Target::ALL {
        let s = target.default_signature();
        let r = approximate(&target.sample::<f64>(s).unwrap(), 8).unwrap();
        let total: f64 = r.component_errors.iter().map(|&(_, e)| e).sum();
        let worst = r.component_errors.iter().fold(0.0f64, |m, &(_, e)| m.max(e));
        assert!(r.combined_error >= 0.0);
        assert!(r.combined_error <= total);
        assert_eq!(r.combined_error, worst);
    }
}

#[test]
fn fitted_values_stay_in_component_range() {
    let f = Target::RotorField.sample::<f64>(sig(2, 0)).unwrap();
    for c in extract_components(&f) {
        let (lo, hi) = c.range();
        for m in [3, 10, 25] {
            let fit = bernstein_fit(&c, m).unwrap();
            for v in fit.eval_grid(&c.grid()) {
                assert!(v >= lo - 1e-12 && v <= hi + 1e-12, "{v} outside [{lo}, {hi}]");
            }
        }
    }
}

#[test]
fn scalar_projection_matches_grade_zero_part() {
    for s in [sig(0, 2), sig(2, 0), sig(0, 3), sig(2, 1), sig(1, 4)] {
        let grid = Grid::new(1, 33).unwrap();
        let f = SampledFunction::<f64>::from_fn(s, grid, move |x: &[f64]| {
            Multivector::from_fn(s, |m| (x[0] * (m.bits() as f64 + 1.0)).sin() - 0.25 * m.grade() as f64)
        })
        .unwrap();
        let proj = algebraic_scalar_projection(&f);
        let scalar_component = &extract_components(&f)[0];
        for ((v, p), c) in f.values().iter().zip(proj.values()).zip(scalar_component.values()) {
            assert!(p.is_scalar());
            assert!((p.scalar_part() - v.scalar_part()).abs() < 1e-12);
            assert!((p.scalar_part() - c).abs() < 1e-12);
        }
        // the projection keeps a point-evaluable source
        let off_grid = proj.eval(&[0.123]);
        assert!((off_grid.scalar_part() - f.eval(&[0.123]).scalar_part()).abs() < 1e-12);
    }
}

#[test]
fn constant_target_has_zero_error_everywhere() {
    let f = Target::Constant.sample::<f64>(sig(1, 1)).unwrap();
    for m in DEGREES {
        let r = approximate(&f, m).unwrap();
        assert!(r.rows("constant", sig(1, 1)).iter().all(|row| row.sup_error == 0.0));
    }
    let pseudo = BladeMask::pseudoscalar(sig(1, 1));
    assert_eq!(f.values()[0].get(pseudo), 0.75);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reconstruction_is_exact(
        coeffs in prop::collection::vec(prop::collection::vec(-1e3f64..1e3, 8), 6),
    ) {
        let s = sig(1, 2);
        let values: Vec<_> = coeffs
            .into_iter()
            .map(|c| Multivector::from_coeffs(s, c).unwrap())
            .collect();
        let f = SampledFunction::from_samples(s, Grid::new(1, 6).unwrap(), values).unwrap();
        let rebuilt = clifford_core::approx::recombine(s, &extract_components(&f));
        prop_assert_eq!(rebuilt, f.values().to_vec());
    }

    #[test]
    fn bernstein_of_affine_is_exact(a in -10.0f64..10.0, b in -10.0f64..10.0, m in 1usize..40) {
        let fit = clifford_core::approx::BernsteinFit::from_fn(1, m, |x: &[f64]| a + b * x[0]).unwrap();
        for i in 0..=20 {
            let x = i as f64 / 20.0;
            prop_assert!((fit.eval(&[x]) - (a + b * x)).abs() < 1e-12);
        }
    }
}
