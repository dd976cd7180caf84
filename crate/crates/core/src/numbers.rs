//! Small exact integer helpers shared by the series and engine code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `1/n!` as an exact rational.
pub fn inv_factorial(n: usize) -> BigRational {
    BigRational::new(BigInt::one(), factorial(n))
}

pub fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Table of `k!` for `k = 0..=n`, as `u64`. Panics on overflow (n > 20).
pub fn factorials_u64(n: usize) -> Vec<u64> {
    let mut out = vec![1u64; n + 1];
    for k in 1..=n {
        out[k] = out[k - 1].checked_mul(k as u64).expect("factorial overflow");
    }
    out
}
