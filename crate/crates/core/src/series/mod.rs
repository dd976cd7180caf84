//! Truncated formal power series with exact rational coefficients.
//!
//! A [`PowerSeries`] of truncation order `N` stores the coefficients of
//! `x^0 ..= x^N`; everything above is unknown and silently dropped by every
//! operation. The same type carries ordinary and exponential generating
//! functions: whether coefficient `k` means `a_k` or `a_k / k!` is decided by
//! the caller, and [`PowerSeries::egf_counts`] / [`PowerSeries::from_egf_counts`]
//! convert between the two readings.
//!
//! Binary operations on series of different orders truncate to the smaller
//! order.

mod bivariate;

pub use bivariate::BivariateSeries;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numbers::{factorial, inv_factorial, rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("square root requires constant term 1, found {0}")]
    BadConstantTerm(BigRational),
    #[error("cannot divide by x^{shift}: coefficient of x^{index} is nonzero")]
    NonzeroLowOrderTerm { shift: usize, index: usize },
    #[error("coefficient of x^{index} is not integral after scaling: {value}")]
    NonIntegral { index: usize, value: BigRational },
}

/// The handful of transcendental series the enumeration formulas substitute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedSeries {
    /// `e^x`
    Exp,
    /// `e^x - 1`
    ExpMinusOne,
    /// `1 - e^{-x}`
    OneMinusExpNeg,
    /// `x / (1 - x)`
    Geom,
    /// `-log(1 - x)`, the compositional inverse of `1 - e^{-x}`.
    NegLogOneMinus,
    /// `log(1 + x)`, the compositional inverse of `e^x - 1`.
    LogOnePlus,
    /// `x / (1 + x)`, the compositional inverse of `x / (1 - x)`.
    GeomInverse,
}

#[derive(Clone)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k`, or zero if `k` exceeds the order.
    pub fn monomial(order: usize, k: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, BigRational::one())
    }

    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        PowerSeries { coeffs }
    }

    /// Ordinary series with the given integer coefficients, zero-padded (or
    /// cut) to `order`.
    pub fn from_integers<I, T>(order: usize, values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (k, v) in values.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = rational(v);
        }
        s
    }

    /// Exponential series whose `k`-th count is `values[k]`, i.e. coefficient
    /// `values[k] / k!`.
    pub fn from_egf_counts<I, T>(order: usize, values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (k, v) in values.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = rational(v) * inv_factorial(k);
        }
        s
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> BigRational) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(&mut f).collect(),
        }
    }

    pub fn named(name: NamedSeries, order: usize) -> Self {
        use NamedSeries::*;
        let sign = |k: usize| {
            if k.is_multiple_of(2) {
                BigRational::one()
            } else {
                -BigRational::one()
            }
        };
        match name {
            Exp => Self::from_fn(order, inv_factorial),
            ExpMinusOne => Self::from_fn(order, |k| if k == 0 { BigRational::zero() } else { inv_factorial(k) }),
            // 1 - e^{-x} = sum_{k>=1} (-1)^{k+1} x^k / k!
            OneMinusExpNeg => Self::from_fn(order, |k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    -sign(k) * inv_factorial(k)
                }
            }),
            Geom => Self::from_fn(order, |k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    BigRational::one()
                }
            }),
            NegLogOneMinus => Self::from_fn(order, |k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    BigRational::new(BigInt::one(), BigInt::from(k))
                }
            }),
            LogOnePlus => Self::from_fn(order, |k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    -sign(k) * BigRational::new(BigInt::one(), BigInt::from(k))
                }
            }),
            GeomInverse => Self::from_fn(order, |k| if k == 0 { BigRational::zero() } else { -sign(k) }),
        }
    }

    /// `e^{c x}` for an integer `c`.
    pub fn exp_scaled(order: usize, c: i64) -> Self {
        let c = BigInt::from(c);
        Self::from_fn(order, |k| BigRational::new(c.pow(k as u32), factorial(k)))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<_> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rational(c))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut b = vec![BigRational::zero(); n + 1];
        b[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &b[k - j];
                }
            }
            b[k] = -acc * &inv0;
        }
        Ok(PowerSeries { coeffs: b })
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self * &other.invert()?)
    }

    /// `self(inner(x))`, evaluated by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(order, self.coeffs[order].clone());
        for k in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm(self.coeffs[0].clone()));
        }
        let n = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut b = vec![BigRational::zero(); n + 1];
        b[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc -= &b[j] * &b[k - j];
            }
            b[k] = acc * &half;
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// `self / x^k`. The result has order `order - k`, since the top `k`
    /// coefficients of the quotient are not determined by the input.
    pub fn shift_divide(&self, k: usize) -> Result<Self, SeriesError> {
        if let Some(index) = self.coeffs.iter().take(k).position(|c| !c.is_zero()) {
            return Err(SeriesError::NonzeroLowOrderTerm { shift: k, index });
        }
        if k > self.order() {
            // Nothing survives; the quotient is known to no order at all, so
            // report the zero series of order 0.
            return Ok(Self::zero(0));
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `self * x^k`, keeping the order.
    pub fn shift_multiply(&self, k: usize) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                BigRational::zero()
            }
        })
    }

    /// Coefficient `k` times `k!`, required to be an integer.
    pub fn egf_counts(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| integral(k, &(c * rational(factorial(k)))))
            .collect()
    }

    /// Coefficients, required to be integers.
    pub fn ogf_counts(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs.iter().enumerate().map(|(k, c)| integral(k, c)).collect()
    }

    /// Reinterprets ordinary coefficients `a_k` as EGF counts: `a_k / k!`.
    pub fn ogf_to_egf_normalization(&self) -> Self {
        Self::from_fn(self.order(), |k| &self.coeffs[k] * inv_factorial(k))
    }

    /// Inverse of [`Self::ogf_to_egf_normalization`]: `a_k * k!`.
    pub fn egf_to_ogf_normalization(&self) -> Self {
        Self::from_fn(self.order(), |k| &self.coeffs[k] * rational(factorial(k)))
    }
}

fn integral(index: usize, value: &BigRational) -> Result<BigInt, SeriesError> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(SeriesError::NonIntegral {
            index,
            value: value.clone(),
        })
    }
}

impl PartialEq for PowerSeries {
    /// Coefficient-wise equality up to the smaller of the two orders.
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(other.coeffs.iter()).all(|(a, b)| a == b)
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.order() + 1)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().zip(rhs.coeffs.iter()).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().zip(rhs.coeffs.iter()).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<PowerSeries> for PowerSeries {
            type Output = PowerSeries;
            fn $m(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PowerSeries> for PowerSeries {
            type Output = PowerSeries;
            fn $m(self, rhs: &PowerSeries) -> PowerSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<PowerSeries> for &PowerSeries {
            type Output = PowerSeries;
            fn $m(self, rhs: PowerSeries) -> PowerSeries {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        -&self
    }
}

impl std::iter::Sum for PowerSeries {
    /// # Panics
    /// On an empty iterator, since the order would be unknown.
    fn sum<I: Iterator<Item = PowerSeries>>(mut iter: I) -> PowerSeries {
        let first = iter.next().expect("sum of an empty series iterator");
        iter.fold(first, |acc, s| &acc + &s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.ogf_counts()
            .unwrap()
            .into_iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    fn poly(order: usize, c: &[i64]) -> PowerSeries {
        PowerSeries::from_integers(order, c.iter().copied())
    }

    #[test]
    fn ring_operations() {
        let a = poly(6, &[1, 1]);
        let b = poly(6, &[1, -1]);
        assert_eq!(ints(&(&a + &b)), vec![2, 0, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&(&a * &b)), vec![1, 0, -1, 0, 0, 0, 0]);
        let x = PowerSeries::x(6);
        assert_eq!(ints(&(&x * &x)), vec![0, 0, 1, 0, 0, 0, 0]);
        assert_eq!(ints(&(&a - &a)), vec![0; 7]);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = poly(3, &[1, 2, 3, 4]);
        let b = poly(6, &[1, 1]);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn invert_geometric_and_fubini() {
        let g = poly(6, &[1, -1]).invert().unwrap();
        assert_eq!(ints(&g), vec![1; 7]);
        assert_eq!(ints(&PowerSeries::one(5).invert().unwrap()), vec![1, 0, 0, 0, 0, 0]);

        let two_minus_exp = &PowerSeries::constant(7, rational(2)) - &PowerSeries::named(NamedSeries::Exp, 7);
        let counts = two_minus_exp.invert().unwrap().egf_counts().unwrap();
        let expected: Vec<BigInt> = [1, 1, 3, 13, 75, 541, 4683, 47293]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn invert_rejects_zero_constant() {
        assert_eq!(PowerSeries::x(4).invert().unwrap_err(), SeriesError::ZeroConstantTerm);
    }

    #[test]
    fn compose_examples() {
        let n = 8;
        let geom = poly(n, &[1, -1]).invert().unwrap();
        let e = geom
            .compose(&PowerSeries::named(NamedSeries::OneMinusExpNeg, n))
            .unwrap();
        assert_eq!(e, PowerSeries::named(NamedSeries::Exp, n));

        let f = poly(n, &[3, 1, 4, 1, 5]);
        assert_eq!(f.compose(&PowerSeries::x(n)).unwrap(), f);

        let e2 = poly(n, &[1, 1])
            .compose(&PowerSeries::named(NamedSeries::ExpMinusOne, n))
            .unwrap();
        assert_eq!(e2, PowerSeries::named(NamedSeries::Exp, n));

        assert_eq!(
            f.compose(&PowerSeries::one(n)).unwrap_err(),
            SeriesError::NonzeroInnerConstant
        );
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(ints(&PowerSeries::one(4).sqrt().unwrap()), vec![1, 0, 0, 0, 0]);
        let sq = poly(6, &[1, 2, 1]);
        assert_eq!(ints(&sq.sqrt().unwrap()), vec![1, 1, 0, 0, 0, 0, 0]);
        // Binomial series of (1 - 4x)^{1/2}: -2 C_{k-1} for k >= 1.
        let r = poly(7, &[1, -4]).sqrt().unwrap();
        assert_eq!(ints(&r), vec![1, -2, -2, -4, -10, -28, -84, -264]);
        assert_eq!(&r * &r, poly(7, &[1, -4]));
        assert!(matches!(poly(3, &[4, 1]).sqrt(), Err(SeriesError::BadConstantTerm(_))));
    }

    #[test]
    fn shift_divide_examples() {
        let x2 = PowerSeries::monomial(5, 2, BigRational::one());
        assert_eq!(x2.shift_divide(1).unwrap(), PowerSeries::x(4));
        assert!(PowerSeries::zero(5).shift_divide(1).unwrap().is_zero());
        assert_eq!(
            poly(4, &[0, 1]).shift_divide(2).unwrap_err(),
            SeriesError::NonzeroLowOrderTerm { shift: 2, index: 1 }
        );

        let n = 7;
        let root = poly(n + 1, &[1, -4]).sqrt().unwrap();
        let catalan = (&PowerSeries::one(n + 1) - &root)
            .shift_divide(1)
            .unwrap()
            .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
        assert_eq!(catalan.order(), n);
        assert_eq!(ints(&catalan), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn named_series_coefficients() {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let sixth = BigRational::new(BigInt::one(), BigInt::from(6));
        let em1 = PowerSeries::named(NamedSeries::ExpMinusOne, 3);
        assert_eq!(
            em1.coeffs(),
            &[BigRational::zero(), BigRational::one(), half.clone(), sixth.clone()]
        );
        let omen = PowerSeries::named(NamedSeries::OneMinusExpNeg, 3);
        assert_eq!(omen.coeffs(), &[BigRational::zero(), BigRational::one(), -half, sixth]);
        assert_eq!(ints(&PowerSeries::named(NamedSeries::Geom, 4)), vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn named_inverse_pairs() {
        let n = 9;
        let x = PowerSeries::x(n);
        let pairs = [
            (NamedSeries::OneMinusExpNeg, NamedSeries::NegLogOneMinus),
            (NamedSeries::ExpMinusOne, NamedSeries::LogOnePlus),
            (NamedSeries::Geom, NamedSeries::GeomInverse),
        ];
        for (a, b) in pairs {
            let fa = PowerSeries::named(a, n);
            let fb = PowerSeries::named(b, n);
            assert_eq!(fa.compose(&fb).unwrap(), x, "{a:?} o {b:?}");
            assert_eq!(fb.compose(&fa).unwrap(), x, "{b:?} o {a:?}");
        }
    }

    #[test]
    fn egf_counts_rejects_fractional() {
        let s = PowerSeries::from_coeffs(vec![rational(1), BigRational::new(BigInt::one(), BigInt::from(3))]);
        assert!(matches!(s.egf_counts(), Err(SeriesError::NonIntegral { index: 1, .. })));
        let ok = PowerSeries::from_egf_counts(4, [1, 1, 3, 13, 75]);
        assert_eq!(
            ok.egf_counts().unwrap(),
            vec![1, 1, 3, 13, 75].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn equality_uses_smaller_order() {
        assert_eq!(poly(2, &[1, 1, 1]), poly(5, &[1, 1, 1, 7]));
        assert_ne!(poly(3, &[1, 1, 1, 0]), poly(5, &[1, 1, 1, 7]));
    }

    #[test]
    fn display_is_readable() {
        let s = poly(3, &[1, -2, 0, 1]);
        assert_eq!(s.to_string(), "1 - 2*x + x^3 + O(x^4)");
    }
}
