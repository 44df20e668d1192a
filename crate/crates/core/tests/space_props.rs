//! Property suites for the semi-inner product and the one-sided derivatives.

mod common;

use common::{close, TestRng};
use gangle::space::{
    lp_norm, one_sided_derivatives, semi_inner_product, semi_inner_product_numeric,
};
use gangle::{LpVector64, SpaceConfig64};
use proptest::prelude::*;

const EXPONENTS: [f64; 4] = [1.0, 1.5, 2.0, 3.0];

fn exponent() -> impl Strategy<Value = f64> {
    prop::sample::select(&EXPONENTS[..])
}

fn coords() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0f64..3.0, 1..7)
}

fn vector(c: Vec<f64>) -> LpVector64 {
    LpVector64::new(c).unwrap()
}

proptest! {
    #[test]
    fn norm_square_is_self_product(p in exponent(), c in coords()) {
        let cfg = SpaceConfig64::new(p).unwrap();
        let x = vector(c);
        let g = semi_inner_product(&x, &x, &cfg);
        let n2 = lp_norm(&x, &cfg).powi(2);
        prop_assert!(close(g, n2, 1e-12, n2), "p={p}: g(x,x)={g} vs ||x||^2={n2}");
    }

    #[test]
    fn homogeneity_in_both_slots(
        p in exponent(),
        c1 in coords(),
        c2 in coords(),
        a in -2.0f64..2.0,
        b in -2.0f64..2.0,
    ) {
        let cfg = SpaceConfig64::new(p).unwrap();
        let x = vector(c1);
        let y = vector(c2);
        let lhs = semi_inner_product(&x.scale(a), &y.scale(b), &cfg);
        let rhs = a * b * semi_inner_product(&x, &y, &cfg);
        let scale = (a * b).abs() * lp_norm(&x, &cfg) * lp_norm(&y, &cfg);
        prop_assert!(close(lhs, rhs, 1e-12, scale), "p={p}: {lhs} vs {rhs}");
    }

    #[test]
    fn shift_by_self_adds_norm_square(p in exponent(), c1 in coords(), c2 in coords()) {
        let cfg = SpaceConfig64::new(p).unwrap();
        let x = vector(c1);
        let y = vector(c2);
        let lhs = semi_inner_product(&x, &x.add(&y), &cfg);
        let n2 = lp_norm(&x, &cfg).powi(2);
        let rhs = n2 + semi_inner_product(&x, &y, &cfg);
        let scale = n2 + lp_norm(&x, &cfg) * lp_norm(&y, &cfg);
        prop_assert!(close(lhs, rhs, 1e-12, scale), "p={p}: {lhs} vs {rhs}");
    }

    #[test]
    fn cauchy_schwarz_bound(p in exponent(), c1 in coords(), c2 in coords()) {
        let cfg = SpaceConfig64::new(p).unwrap();
        let x = vector(c1);
        let y = vector(c2);
        let g = semi_inner_product(&x, &y, &cfg).abs();
        let bound = lp_norm(&x, &cfg) * lp_norm(&y, &cfg);
        prop_assert!(g <= bound + 1e-12 * bound.max(1.0), "p={p}: |g|={g} > {bound}");
    }

    #[test]
    fn linear_in_second_argument(
        p in exponent(),
        c1 in coords(),
        c2 in coords(),
        c3 in coords(),
        alpha in -2.0f64..2.0,
        beta in -2.0f64..2.0,
    ) {
        let cfg = SpaceConfig64::new(p).unwrap();
        let x = vector(c1);
        let y = vector(c2);
        let z = vector(c3);
        let lhs = semi_inner_product(&x, &y.scale(alpha).add(&z.scale(beta)), &cfg);
        let rhs = alpha * semi_inner_product(&x, &y, &cfg)
            + beta * semi_inner_product(&x, &z, &cfg);
        let nx = lp_norm(&x, &cfg);
        let scale = nx * (alpha.abs() * lp_norm(&y, &cfg) + beta.abs() * lp_norm(&z, &cfg));
        prop_assert!(close(lhs, rhs, 1e-12, scale), "p={p}: {lhs} vs {rhs}");
    }

    #[test]
    fn vectors_equal_after_padding_have_equal_products(p in exponent(), c in coords()) {
        let cfg = SpaceConfig64::new(p).unwrap();
        let x = vector(c.clone());
        let mut padded = c;
        padded.extend([0.0, 0.0, 0.0]);
        let xp = vector(padded);
        prop_assert_eq!(&x, &xp);
        prop_assert_eq!(lp_norm(&x, &cfg), lp_norm(&xp, &cfg));
        let y = LpVector64::new(vec![0.4, -1.0, 2.0]).unwrap();
        prop_assert_eq!(
            semi_inner_product(&x, &y, &cfg),
            semi_inner_product(&xp, &y, &cfg)
        );
    }
}

/// Derivative ordering and the closed-form/limit-form agreement, on vectors
/// with coordinates bounded away from zero so the quotients stabilize at
/// every tested exponent.
#[test]
fn derivative_ordering_and_agreement() {
    let mut rng = TestRng::new(0x5eed_0001);
    for p in EXPONENTS {
        let cfg = SpaceConfig64::new(p).unwrap();
        for _ in 0..150 {
            let dim = rng.usize_in(1, 6);
            let x = rng.nonzero_vector(dim);
            let y = rng.vector(dim);
            let d = one_sided_derivatives(&x, &y, &cfg)
                .expect("stable derivatives on nonzero coordinates");
            assert!(
                d.left <= d.right + 1e-10,
                "p={p}: left {} > right {}",
                d.left,
                d.right
            );
            let norm_y = lp_norm(&y, &cfg);
            assert!(d.right.abs() <= norm_y + 1e-7 * (1.0 + norm_y));
            assert!(d.left.abs() <= norm_y + 1e-7 * (1.0 + norm_y));

            let numeric = semi_inner_product_numeric(&x, &y, &cfg).unwrap();
            let closed = semi_inner_product(&x, &y, &cfg);
            assert!(
                (numeric - closed).abs() <= cfg.eps_g(),
                "p={p}: numeric {numeric} vs closed {closed}"
            );
        }
    }
}

#[test]
fn second_argument_zero_padding_is_immaterial() {
    let cfg = SpaceConfig64::new(1.5).unwrap();
    let x = LpVector64::new(vec![1.0, -2.0]).unwrap();
    let y = LpVector64::new(vec![0.3, 0.7]).unwrap();
    let y_padded = LpVector64::new(vec![0.3, 0.7, 0.0, 0.0]).unwrap();
    assert_eq!(
        semi_inner_product(&x, &y, &cfg),
        semi_inner_product(&x, &y_padded, &cfg)
    );
}
