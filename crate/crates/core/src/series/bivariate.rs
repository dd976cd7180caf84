use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{PowerSeries, SeriesError};
use crate::numbers::{binomial, inv_factorial, rational};

/// Exponential bivariate series truncated to `0..=N` in each variable.
///
/// Entry `(m, n)` is the coefficient of `x^m y^n / (m! n!)`, so counting
/// series such as `sum psi(m, n) x^m y^n / (m! n!)` store `psi(m, n)` verbatim
/// and products are binomial convolutions.
#[derive(Clone, PartialEq)]
pub struct BivariateSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            order,
            coeffs: vec![BigRational::zero(); (order + 1) * (order + 1)],
        }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut s = Self::zero(order);
        for m in 0..=order {
            for n in 0..=order {
                s.coeffs[m * (order + 1) + n] = f(m, n);
            }
        }
        s
    }

    /// `e^{a x + b y}` for integers `a`, `b`.
    pub fn exp_linear(order: usize, a: i64, b: i64) -> Self {
        let a = BigInt::from(a);
        let b = BigInt::from(b);
        Self::from_fn(order, |m, n| rational(a.pow(m as u32) * b.pow(n as u32)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, m: usize, n: usize) -> &BigRational {
        &self.coeffs[m * (self.order + 1) + n]
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |m, n| f(self.get(m, n), other.get(m, n)))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    /// Product in the exponential normalization (binomial convolution).
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |m, n| {
            let mut acc = BigRational::zero();
            for i in 0..=m {
                for j in 0..=n {
                    let a = self.get(i, j);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(m - i, n - j);
                    if b.is_zero() {
                        continue;
                    }
                    acc += a * b * rational(binomial(m, i) * binomial(n, j));
                }
            }
            acc
        })
    }

    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = self.get(0, 0).clone();
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let order = self.order;
        let mut out = Self::zero(order);
        let w = order + 1;
        // Total-degree order guarantees every needed entry is already known.
        for total in 0..=2 * order {
            for m in total.saturating_sub(order)..=total.min(order) {
                let n = total - m;
                if total == 0 {
                    out.coeffs[0] = inv0.clone();
                    continue;
                }
                let mut acc = BigRational::zero();
                for i in 0..=m {
                    for j in 0..=n {
                        if i == 0 && j == 0 {
                            continue;
                        }
                        let a = self.get(i, j);
                        if a.is_zero() {
                            continue;
                        }
                        let b = &out.coeffs[(m - i) * w + (n - j)];
                        if b.is_zero() {
                            continue;
                        }
                        acc += a * b * rational(binomial(m, i) * binomial(n, j));
                    }
                }
                out.coeffs[m * w + n] = -acc * &inv0;
            }
        }
        Ok(out)
    }

    /// `f(x, x)` as an ordinary power series in `x`, exact through `x^order`.
    pub fn diagonal(&self) -> PowerSeries {
        PowerSeries::from_fn(self.order, |t| {
            (0..=t)
                .map(|m| self.get(m, t - m) * inv_factorial(m) * inv_factorial(t - m))
                .fold(BigRational::zero(), |a, b| a + b)
        })
    }

    /// True when all entries of total degree `<= degree` agree.
    pub fn agrees_through_total_degree(&self, other: &Self, degree: usize) -> bool {
        let order = self.order.min(other.order);
        (0..=order).all(|m| (0..=order).all(|n| m + n > degree || self.get(m, n) == other.get(m, n)))
    }
}

impl fmt::Debug for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BivariateSeries(order {}) [", self.order)?;
        for m in 0..=self.order {
            let row: Vec<String> = (0..=self.order).map(|n| self.get(m, n).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn exp_product_adds_exponents() {
        let a = BivariateSeries::exp_linear(5, 1, 0);
        let b = BivariateSeries::exp_linear(5, 0, 1);
        assert_eq!(a.mul(&b), BivariateSeries::exp_linear(5, 1, 1));
        assert_eq!(
            BivariateSeries::exp_linear(5, 2, -1).mul(&BivariateSeries::exp_linear(5, -2, 1)),
            BivariateSeries::exp_linear(5, 0, 0)
        );
    }

    #[test]
    fn invert_roundtrip() {
        let f = BivariateSeries::from_fn(4, |m, n| rational(BigInt::from(1 + m * 3 + n * n)));
        let g = f.invert().unwrap();
        let one = BivariateSeries::from_fn(4, |m, n| {
            if m == 0 && n == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        assert_eq!(f.mul(&g), one);
    }

    #[test]
    fn diagonal_of_exp() {
        // e^{x+y} on the diagonal is e^{2x}.
        let d = BivariateSeries::exp_linear(6, 1, 1).diagonal();
        assert_eq!(d, PowerSeries::exp_scaled(6, 2));
    }
}
