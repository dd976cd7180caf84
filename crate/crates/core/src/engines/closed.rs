//! Closed-form generating functions for graded semiorders and for
//! `(3+1)`-avoiding graded posets.

use num_bigint::BigInt;

use super::psi::{bivariate_psi, PsiKind};
use crate::numbers::{binomial, rational};
use crate::series::{NamedSeries, PowerSeries};

fn poly(order: usize, coeffs: &[i64]) -> PowerSeries {
    PowerSeries::from_integers(order, coeffs.iter().copied())
}

/// Unlabeled graded semiorders:
/// `(1 - 3x + 2x^2 - x^3) / ((1 - x)(1 - 3x + x^2))`.
pub fn graded_semiorder_ogf(order: usize) -> PowerSeries {
    let numerator = poly(order, &[1, -3, 2, -1]);
    let denominator = poly(order, &[1, -1]) * poly(order, &[1, -3, 1]);
    numerator.div(&denominator).expect("constant term 1")
}

/// Faceoffs counted by total size: `(1 - x)^2 / (1 - 2x)`.
pub fn faceoff_ogf(order: usize) -> PowerSeries {
    poly(order, &[1, -1])
        .pow(2)
        .div(&poly(order, &[1, -2]))
        .expect("constant term 1")
}

/// Faceoffs with `m` vertices on the upper rank and `n` on the lower one:
/// `C(m + n - 2, n - 1)` for `m, n >= 1`, and 1 for the empty faceoff.
pub fn faceoff_count(m: usize, n: usize) -> BigInt {
    match (m, n) {
        (0, 0) => 1.into(),
        (0, _) | (_, 0) => 0.into(),
        _ => binomial(m + n - 2, n - 1),
    }
}

/// `z^k T^{k-1}` with `z = x / (1 - x)`: graded semiorders of height `k`.
pub fn graded_semiorder_height_ogf(order: usize, k: usize) -> PowerSeries {
    if k == 0 {
        return PowerSeries::one(order);
    }
    let z = PowerSeries::named(NamedSeries::Geom, order);
    z.pow(k) * faceoff_ogf(order).pow(k - 1)
}

/// `1 + sum_k z^k T^{k-1} = 1 + z / (1 - z T)`.
pub fn graded_semiorder_assembled_ogf(order: usize) -> PowerSeries {
    let z = PowerSeries::named(NamedSeries::Geom, order);
    let zt = &z * &faceoff_ogf(order);
    let resolvent = (PowerSeries::one(order) - zt).invert().expect("constant term 1");
    PowerSeries::one(order) + z * resolvent
}

/// Unlabeled graded semiorder seeds: `1 + x + x^2 / (1 - x - x^2)`. All of
/// them are primitive, so this is also their EGF in the `x^n/n!` reading
/// used by the seed substitutions.
pub fn graded_semiorder_seed_ogf(order: usize) -> PowerSeries {
    let tail = PowerSeries::monomial(order, 2, rational(1))
        .div(&poly(order, &[1, -1, -1]))
        .expect("constant term 1");
    poly(order, &[1, 1]) + tail
}

/// `(3+1)`-avoiding strongly graded posets:
/// `e^x - 1 + (2e^x + (e^x - 2)D) / (2e^{2x} + e^x + (e^{2x} - 2e^x - 1)D)`
/// with `D = Psi_w(x, x)`.
pub fn graded_31_egf(order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let e = PowerSeries::named(NamedSeries::Exp, order);
    let e2 = PowerSeries::exp_scaled(order, 2);
    let d = bivariate_psi(PsiKind::Weak, order).diagonal();
    let numerator = e.scale_int(2) + (&e - &one.scale_int(2)) * &d;
    let denominator = e2.scale_int(2) + &e + (&e2 - &e.scale_int(2) - &one) * &d;
    PowerSeries::named(NamedSeries::ExpMinusOne, order) + numerator.div(&denominator).expect("constant term 1")
}
