//! Transfer-matrix engines: a graded poset is read rank by rank, and the
//! matrix entry for consecutive ranks counts the ways to join them.

use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::{neumann_row, SeriesMatrix};
use super::psi::{psi_22, PsiKind};
use crate::numbers::{binomial, factorial, inv_factorial, rational};
use crate::series::{NamedSeries, PowerSeries};

/// Level-by-level count: row vector `[x^i / i!]`, step matrix
/// `M_ij = psi(i, j) x^j / j!`, all-ones column. Level sizes run over
/// `1..=dim`.
fn leveled_egf(kind: PsiKind, order: usize, height: Option<usize>, dim: usize) -> PowerSeries {
    let monomial = |k: usize| PowerSeries::monomial(order, k, inv_factorial(k));
    let step = SeriesMatrix::from_fn(dim, order, |i, j| {
        monomial(j + 1).scale(&rational(kind.value(i + 1, j + 1)))
    });
    let start: Vec<PowerSeries> = (1..=dim).map(monomial).collect();
    let sum = |row: &[PowerSeries]| row.iter().fold(PowerSeries::zero(order), |a, b| a + b);
    match height {
        Some(0) => PowerSeries::one(order),
        Some(k) => {
            let mut row = start;
            for _ in 1..k {
                row = step.left_apply(&row);
            }
            sum(&row)
        }
        None => PowerSeries::one(order) + sum(&neumann_row(&step, start)),
    }
}

/// EGF of strongly graded posets (all maximal chains of equal length),
/// restricted to `height` ranks if given. The empty poset counts once, as
/// the only poset of height 0.
pub fn all_graded_egf(order: usize, height: Option<usize>) -> PowerSeries {
    all_graded_egf_with_dim(order, height, order.max(1))
}

/// [`all_graded_egf`] with an explicit bound on the level sizes tracked.
pub fn all_graded_egf_with_dim(order: usize, height: Option<usize>, dim: usize) -> PowerSeries {
    leveled_egf(PsiKind::Strong, order, height, dim)
}

/// The same transfer matrix with arbitrary edge levels. It counts posets
/// together with a rank function whose values fill `0..height`, so a poset
/// with several such rank functions is counted once for each.
pub fn weakly_graded_egf(order: usize, height: Option<usize>) -> PowerSeries {
    weakly_graded_egf_with_dim(order, height, order.max(1))
}

pub fn weakly_graded_egf_with_dim(order: usize, height: Option<usize>, dim: usize) -> PowerSeries {
    leveled_egf(PsiKind::Weak, order, height, dim)
}

/// `A(m, n) = sum_l x^{l+n} / (l! n!) sum_{m'} C(m, m') psi_22(n, l + m')`:
/// from `m` vertices that are not down-seeing on one rank to `n` on the next,
/// `l` counting the new vertices of the lower rank that are down-seeing but
/// not up-seeing.
pub fn interval_graded_matrix_entry(m: usize, n: usize, order: usize) -> PowerSeries {
    let mut entry = PowerSeries::zero(order);
    if n > order {
        return entry;
    }
    let scale = inv_factorial(n);
    for l in 0..=order - n {
        let weight: num_bigint::BigInt = (0..=m).map(|mp| binomial(m, mp) * psi_22(n, l + mp)).sum();
        if weight.is_zero() {
            continue;
        }
        let c = BigRational::new(weight, factorial(l)) * &scale;
        entry = entry + PowerSeries::monomial(order, l + n, c);
    }
    entry
}

fn interval_matrix(order: usize, dim: usize) -> SeriesMatrix {
    SeriesMatrix::from_fn(dim, order, |m, n| interval_graded_matrix_entry(m, n, order))
}

/// EGF of graded interval orders (strongly graded, `(2+2)`-avoiding):
/// `[(I - (e^x - 1) A)^{-1}]_{00}`, or `(e^x - 1)^k [A^k]_{00}` for height `k`.
pub fn graded_interval_egf(order: usize, height: Option<usize>) -> PowerSeries {
    graded_interval_egf_with_dim(order, height, order + 1)
}

pub fn graded_interval_egf_with_dim(order: usize, height: Option<usize>, dim: usize) -> PowerSeries {
    let a = interval_matrix(order, dim);
    let e1 = PowerSeries::named(NamedSeries::ExpMinusOne, order);
    let mut unit = vec![PowerSeries::zero(order); dim];
    unit[0] = PowerSeries::one(order);
    match height {
        Some(k) => {
            let mut row = unit;
            for _ in 0..k {
                row = a.left_apply(&row);
            }
            e1.pow(k) * &row[0]
        }
        None => {
            let b = SeriesMatrix::from_fn(dim, order, |i, j| &e1 * a.get(i, j));
            neumann_row(&b, unit).swap_remove(0)
        }
    }
}
