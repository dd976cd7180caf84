//! Classical generating functions for semiorders and interval orders, used
//! as independent checks of the series machinery and the substitutions.

use crate::series::{NamedSeries, PowerSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnownSeries {
    /// Unlabeled semiorders, the Catalan numbers: `(1 - sqrt(1 - 4x)) / (2x)`.
    SemiorderOgf,
    /// Labeled semiorders: `(1 - sqrt(4e^{-x} - 3)) / (2(1 - e^{-x}))`.
    SemiorderEgf,
    /// Labeled interval orders: `sum_n prod_{k=1..n} (1 - e^{-kx})`.
    IntervalOrderEgf,
    /// Unlabeled interval orders: `sum_n prod_{k=1..n} (1 - (1 - x)^k)`.
    IntervalOrderOgf,
    /// Interval-order seeds: `sum_n prod_{k=1..n} (1 - (1 + x)^{-k})`.
    IntervalOrderSeeds,
}

impl KnownSeries {
    pub const ALL: [KnownSeries; 5] = [
        KnownSeries::SemiorderOgf,
        KnownSeries::SemiorderEgf,
        KnownSeries::IntervalOrderEgf,
        KnownSeries::IntervalOrderOgf,
        KnownSeries::IntervalOrderSeeds,
    ];

    /// True when the series is read as `x^n / n!`.
    pub fn is_exponential(self) -> bool {
        matches!(self, KnownSeries::SemiorderEgf | KnownSeries::IntervalOrderEgf)
    }

    pub fn series(self, order: usize) -> PowerSeries {
        match self {
            KnownSeries::SemiorderOgf => semiorder_ogf(order),
            KnownSeries::SemiorderEgf => semiorder_egf(order),
            KnownSeries::IntervalOrderEgf => product_sum(order, |k| {
                PowerSeries::one(order) - PowerSeries::exp_scaled(order, -(k as i64))
            }),
            KnownSeries::IntervalOrderOgf => {
                let one_minus_x = PowerSeries::one(order) - PowerSeries::x(order);
                product_sum(order, |k| PowerSeries::one(order) - one_minus_x.pow(k))
            }
            KnownSeries::IntervalOrderSeeds => {
                let inv = (PowerSeries::one(order) + PowerSeries::x(order))
                    .invert()
                    .expect("constant term 1");
                product_sum(order, |k| PowerSeries::one(order) - inv.pow(k))
            }
        }
    }
}

/// `sum_{n>=0} prod_{k=1..n} factor(k)`, where every factor has valuation at
/// least 1, so terms beyond `n = order` vanish.
fn product_sum(order: usize, factor: impl Fn(usize) -> PowerSeries) -> PowerSeries {
    let mut total = PowerSeries::one(order);
    let mut product = PowerSeries::one(order);
    for k in 1..=order {
        let f = factor(k);
        debug_assert!(f.valuation().is_none_or(|v| v >= 1));
        product = product * f;
        if product.is_zero() {
            break;
        }
        total = total + &product;
    }
    total
}

fn semiorder_ogf(order: usize) -> PowerSeries {
    let n = order + 1;
    let root = (PowerSeries::one(n) - PowerSeries::x(n).scale_int(4))
        .sqrt()
        .expect("constant term 1");
    let numerator = (PowerSeries::one(n) - root).shift_divide(1).expect("valuation 1");
    numerator.scale(&num_rational::BigRational::new(1.into(), 2.into()))
}

fn semiorder_egf(order: usize) -> PowerSeries {
    let n = order + 1;
    let one = PowerSeries::one(n);
    let inside = PowerSeries::exp_scaled(n, -1).scale_int(4) - one.scale_int(3);
    let numerator = (&one - inside.sqrt().expect("constant term 1"))
        .shift_divide(1)
        .expect("valuation 1");
    let denominator = PowerSeries::named(NamedSeries::OneMinusExpNeg, n)
        .scale_int(2)
        .shift_divide(1)
        .expect("valuation 1");
    numerator.div(&denominator).expect("constant term 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::{trictionary, Direction};
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn known_values() {
        let o = 6;
        assert_eq!(
            KnownSeries::SemiorderOgf.series(o).ogf_counts().unwrap(),
            ints(&[1, 1, 2, 5, 14, 42, 132])
        );
        assert_eq!(
            KnownSeries::SemiorderEgf.series(5).egf_counts().unwrap(),
            ints(&[1, 1, 3, 19, 183, 2371])
        );
        assert_eq!(
            KnownSeries::IntervalOrderEgf.series(5).egf_counts().unwrap(),
            ints(&[1, 1, 3, 19, 207, 3451])
        );
        assert_eq!(
            KnownSeries::IntervalOrderOgf.series(o).ogf_counts().unwrap(),
            ints(&[1, 1, 2, 5, 15, 53, 217])
        );
        assert_eq!(
            KnownSeries::IntervalOrderSeeds.series(o).ogf_counts().unwrap(),
            ints(&[1, 1, 1, 2, 5, 16, 61])
        );
    }

    #[test]
    fn substitutions_link_them() {
        let o = 8;
        let e = trictionary(&KnownSeries::IntervalOrderOgf.series(o), Direction::OgfToEgf).unwrap();
        assert_eq!(e, KnownSeries::IntervalOrderEgf.series(o));
        let e = trictionary(&KnownSeries::SemiorderOgf.series(o), Direction::OgfToEgf).unwrap();
        assert_eq!(e, KnownSeries::SemiorderEgf.series(o));
        let s = trictionary(&KnownSeries::IntervalOrderOgf.series(o), Direction::OgfToSeed).unwrap();
        assert_eq!(s, KnownSeries::IntervalOrderSeeds.series(o));
    }
}
