//! Edge-level weights: the number of ways to join two adjacent ranks of
//! sizes `m` (below) and `n` (above).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numbers::{binomial, factorial, rational};
use crate::series::BivariateSeries;

/// Stirling numbers of the second kind, `S(0, 0) = 1`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}

/// Arbitrary bipartite graphs: `2^{mn}`.
pub fn psi_w(m: usize, n: usize) -> BigInt {
    BigInt::one() << (m * n)
}

/// Bipartite graphs without isolated vertices, by inclusion-exclusion over
/// the isolated vertices on each side.
pub fn psi_s(m: usize, n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=m {
        for k in 0..=n {
            let term = binomial(m, j) * binomial(n, k) * psi_w(j, k);
            if (m - j + n - k).is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

/// `(2+2)`-avoiding edge levels (up-sets of the lower rank nested) with no
/// lower vertex seeing the whole upper rank and no upper vertex seeing the
/// whole lower rank. `psi_22(m, n)` has `m` lower and `n` upper vertices.
pub fn psi_22(m: usize, n: usize) -> BigInt {
    (0..=m.min(n))
        .map(|j| factorial(j).pow(2) * stirling2(n, j) * stirling2(m, j))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiKind {
    Weak,
    Strong,
    TwoTwo,
}

impl PsiKind {
    pub fn value(self, m: usize, n: usize) -> BigInt {
        match self {
            PsiKind::Weak => psi_w(m, n),
            PsiKind::Strong => psi_s(m, n),
            PsiKind::TwoTwo => psi_22(m, n),
        }
    }
}

/// `sum psi(m, n) x^m y^n / (m! n!)` through degree `order` in each variable.
pub fn bivariate_psi(kind: PsiKind, order: usize) -> BivariateSeries {
    BivariateSeries::from_fn(order, |m, n| rational(kind.value(m, n)))
}

/// `e^{-x-y} * Psi_w(x, y)`, which should equal `Psi_s`.
pub fn strong_from_weak(order: usize) -> BivariateSeries {
    BivariateSeries::exp_linear(order, -1, -1).mul(&bivariate_psi(PsiKind::Weak, order))
}

/// `1 / (e^x + e^y - e^{x+y})`, which should equal `Psi_{2+2}`.
pub fn two_two_closed_form(order: usize) -> BivariateSeries {
    let denominator = BivariateSeries::exp_linear(order, 1, 0)
        .add(&BivariateSeries::exp_linear(order, 0, 1))
        .sub(&BivariateSeries::exp_linear(order, 1, 1));
    denominator.invert().expect("constant term is 1")
}

/// Edge sets between `m` lower and `n` upper vertices, as one bitmask of
/// upper neighbours per lower vertex, passed to `keep`; returns how many pass.
pub fn count_edge_levels(m: usize, n: usize, mut keep: impl FnMut(&[u32]) -> bool) -> u64 {
    assert!(m * n < 32, "edge level too large for brute force");
    let mut count = 0;
    let mut ups = vec![0u32; m];
    for edges in 0u32..1 << (m * n) {
        for (i, u) in ups.iter_mut().enumerate() {
            *u = edges >> (i * n) & ((1 << n) - 1);
        }
        if keep(&ups) {
            count += 1;
        }
    }
    count
}

/// Bipartite graphs without isolated vertices, by brute force.
pub fn psi_s_direct(m: usize, n: usize) -> u64 {
    let top = (1u32 << n) - 1;
    count_edge_levels(m, n, |ups| {
        ups.iter().all(|&u| u != 0) && ups.iter().fold(0, |a, &u| a | u) == top
    })
}

/// The [`psi_22`] structures, by brute force over all edge sets.
pub fn psi_22_direct(m: usize, n: usize) -> u64 {
    let top = (1u32 << n) - 1;
    count_edge_levels(m, n, |ups| {
        let nested = ups.iter().all(|&a| ups.iter().all(|&b| a & b == a || a & b == b));
        let no_up_seeing = ups.iter().all(|&u| u != top);
        let no_down_seeing = ups.iter().fold(top, |a, &u| a & u) == 0;
        nested && no_up_seeing && no_down_seeing
    })
}

/// Rational `psi(m, n) / (m! n!)`.
pub fn psi_normalized(kind: PsiKind, m: usize, n: usize) -> BigRational {
    BigRational::new(kind.value(m, n), factorial(m) * factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(0, 0), 1.into());
        assert_eq!(stirling2(5, 0), 0.into());
        for n in 1..8 {
            assert_eq!(stirling2(n, 1), 1.into());
            assert_eq!(stirling2(n, n), 1.into());
        }
        assert_eq!(stirling2(4, 2), 7.into());
        assert_eq!(stirling2(6, 3), 90.into());
        assert_eq!(stirling2(2, 5), 0.into());
    }

    #[test]
    fn psi_spot_values() {
        assert_eq!(psi_w(2, 2), 16.into());
        assert_eq!(psi_s(2, 2), 7.into());
        assert_eq!(psi_22(2, 2), 5.into());
        assert_eq!(psi_22(0, 0), 1.into());
        assert_eq!(psi_22(3, 0), 0.into());
        assert_eq!(psi_s(0, 0), 1.into());
        assert_eq!(psi_s(3, 0), 0.into());
    }

    #[test]
    fn psi_match_brute_force() {
        for m in 0..=4 {
            for n in 0..=4 {
                assert_eq!(psi_s(m, n), psi_s_direct(m, n).into(), "psi_s({m},{n})");
                assert_eq!(psi_22(m, n), psi_22_direct(m, n).into(), "psi_22({m},{n})");
            }
        }
    }

    #[test]
    fn bivariate_identities() {
        let order = 8;
        assert!(strong_from_weak(order).agrees_through_total_degree(&bivariate_psi(PsiKind::Strong, order), order));
        assert!(two_two_closed_form(order).agrees_through_total_degree(&bivariate_psi(PsiKind::TwoTwo, order), order));
    }

    #[test]
    fn weak_diagonal() {
        let d = bivariate_psi(PsiKind::Weak, 4).diagonal();
        assert_eq!(d.coeff(2), &rational(3));
    }
}
