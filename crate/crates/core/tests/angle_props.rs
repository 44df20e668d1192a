//! Property suites for the subspace angle pipeline.

mod common;

use common::{rank, rel_diff, TestRng};
use gangle::angle::{angle_1d, angle_2d, sup_orthonormal_two_norm, Subspace2};
use gangle::gram::{gram_context, project};
use gangle::twonorm::two_norm_euclidean;
use gangle::{LpVector64, OptimizerConfig64, SpaceConfig64};

fn fast() -> OptimizerConfig64 {
    OptimizerConfig64 {
        samples: 512,
        refine_iters: 60,
        ..OptimizerConfig64::default()
    }
}

fn random_subspace(rng: &mut TestRng, dim: usize) -> Subspace2<f64> {
    loop {
        let a = rng.vector(dim);
        let b = rng.vector(dim);
        if rank(&[a.clone(), b.clone()], 1e-4) == 2 {
            if let Ok(s) = Subspace2::new(a, b) {
                return s;
            }
        }
    }
}

/// In the inner-product case the supremum term is 1 and the angle reduces to
/// the plain ratio of Euclidean Gram-determinant two-norms.
#[test]
fn inner_product_reduction_at_p_two() {
    let mut rng = TestRng::new(0x5eed_0020);
    let cfg = SpaceConfig64::new(2.0).unwrap();
    let opt = fast();
    for _ in 0..8 {
        let dim = rng.usize_in(3, 5);
        let u = random_subspace(&mut rng, dim);
        let v = random_subspace(&mut rng, dim);
        let report = angle_2d(&u, &v, &cfg, &opt).unwrap();

        let ctx = gram_context(&[v.b1().clone(), v.b2().clone()], &cfg).unwrap();
        let u1v = project(u.b1(), &ctx).unwrap().projected;
        let u2v = project(u.b2(), &ctx).unwrap().projected;
        let expected = (two_norm_euclidean(&u1v, &u2v).unwrap()
            / two_norm_euclidean(u.b1(), u.b2()).unwrap())
        .powi(2);

        assert!(
            rel_diff(report.cos_sq, expected) <= 1e-4,
            "cos^2 {} vs Euclidean ratio {}",
            report.cos_sq,
            expected
        );
        assert!((report.den_sup - 1.0).abs() <= 1e-4, "den_sup {}", report.den_sup);
    }
}

#[test]
fn ratio_stays_in_range_and_below_denominator() {
    let mut rng = TestRng::new(0x5eed_0021);
    let opt = fast();
    for p in [1.0, 1.5, 2.0, 3.0] {
        let cfg = SpaceConfig64::new(p).unwrap();
        for _ in 0..6 {
            let dim = rng.usize_in(3, 5);
            let u = random_subspace(&mut rng, dim);
            let v = random_subspace(&mut rng, dim);
            let report = angle_2d(&u, &v, &cfg, &opt).unwrap();
            assert!(
                report.cos_sq >= -1e-6 && report.cos_sq <= 1.0 + 1e-6,
                "p={p}: cos^2 = {}",
                report.cos_sq
            );
            assert!(report.angle_rad >= 0.0 && report.angle_rad <= std::f64::consts::FRAC_PI_2);
            let den = report.den_norm * report.den_sup;
            assert!(
                report.num <= den + 1e-6 * den.max(1.0),
                "p={p}: num {} > den {}",
                report.num,
                den
            );
            if report.cos_sq < 1.0 {
                // away from the clamp band the ratio is reported verbatim
                let ratio = report.num / den;
                assert!(
                    (report.cos_sq - ratio).abs() <= 1e-12 * ratio.max(1.0),
                    "p={p}: cos^2 {} vs ratio {ratio}",
                    report.cos_sq
                );
            }
        }
    }
}

/// The supremum never falls below the value of any particular ordering of
/// any particular basis, since every ordering is one point of the sweep
/// family.
#[test]
fn sup_dominates_specific_orderings() {
    let mut rng = TestRng::new(0x5eed_0022);
    let opt = fast();
    for p in [1.0, 3.0] {
        let cfg = SpaceConfig64::new(p).unwrap();
        for _ in 0..5 {
            let dim = rng.usize_in(2, 4);
            let v = random_subspace(&mut rng, dim);
            let sup = sup_orthonormal_two_norm(&v, &cfg, &opt).unwrap();
            for pair in [
                [v.b1().clone(), v.b2().clone()],
                [v.b2().clone(), v.b1().clone()],
            ] {
                let Ok(stars) = gangle::gram::left_gram_schmidt(&pair, &cfg) else {
                    continue;
                };
                let value = gangle::twonorm::two_norm(&stars[0], &stars[1], &cfg, &opt)
                    .unwrap()
                    .value;
                assert!(
                    sup.value_sq >= value * value - 1e-4 * (value * value).max(1.0),
                    "p={p}: sup^2 {} < ordering^2 {}",
                    sup.value_sq,
                    value * value
                );
            }
        }
    }
}

#[test]
fn one_dimensional_angle_with_larger_bases() {
    let mut rng = TestRng::new(0x5eed_0023);
    let cfg = SpaceConfig64::new(2.0).unwrap();
    for _ in 0..20 {
        let dim = rng.usize_in(4, 6);
        let basis: Vec<LpVector64> = loop {
            let candidate: Vec<LpVector64> = (0..3).map(|_| rng.vector(dim)).collect();
            if rank(&candidate, 1e-4) == 3 {
                break candidate;
            }
        };
        let u = rng.nonzero_vector(dim);
        let report = angle_1d(&u, &basis, &cfg).unwrap();
        assert!(report.cos_sq >= 0.0 && report.cos_sq <= 1.0);
        assert_eq!(report.den_sup, 1.0);
        // consistency of the reported constituents
        assert!(
            (report.cos_sq - (report.num / report.den_norm).clamp(0.0, 1.0)).abs() <= 1e-12
        );
    }
}

/// For U = V the projections are the identity, so the numerator equals the
/// denominator norm and the ratio collapses to 1 / den_sup. At p = 2 the
/// supremum is 1 and the angle is 0; away from p = 2 the supremum generically
/// exceeds 1 (left-orthonormal pairs always have two-norm >= 1, attained at
/// the pair itself), and the formula assigns the same subspace a nonzero
/// angle.
#[test]
fn equal_subspaces_collapse_to_the_supremum() {
    let u = Subspace2::new(
        LpVector64::new(vec![1.0, 0.4, -0.2]).unwrap(),
        LpVector64::new(vec![0.3, -1.0, 0.5]).unwrap(),
    )
    .unwrap();
    // a different presentation of the same span
    let w = Subspace2::new(
        u.b1().scale(2.0).add(&u.b2().scale(-1.0)),
        u.b1().scale(0.5).add(&u.b2().scale(1.5)),
    )
    .unwrap();
    let opt = fast();

    let cfg = SpaceConfig64::new(2.0).unwrap();
    let r = angle_2d(&u, &w, &cfg, &opt).unwrap();
    assert!((r.cos_sq - 1.0).abs() <= 1e-4, "p=2: cos^2 = {}", r.cos_sq);
    assert!(r.angle_rad <= 2e-2);

    let cfg = SpaceConfig64::new(1.5).unwrap();
    let r = angle_2d(&u, &w, &cfg, &opt).unwrap();
    assert!(
        rel_diff(r.num, r.den_norm) <= 1e-4,
        "identity projection: num {} vs den_norm {}",
        r.num,
        r.den_norm
    );
    assert!(
        rel_diff(r.cos_sq, 1.0 / r.den_sup) <= 1e-4,
        "cos^2 {} vs 1/den_sup {}",
        r.cos_sq,
        1.0 / r.den_sup
    );
    assert!(r.den_sup >= 1.0 - 1e-6, "den_sup {}", r.den_sup);
}
