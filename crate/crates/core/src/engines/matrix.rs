//! Square matrices over the truncated power-series ring.

use rayon::prelude::*;

use crate::series::PowerSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesMatrix {
    dim: usize,
    order: usize,
    entries: Vec<PowerSeries>,
}

impl SeriesMatrix {
    pub fn from_fn(dim: usize, order: usize, mut f: impl FnMut(usize, usize) -> PowerSeries) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let e = f(i, j);
                assert!(e.order() >= order, "entry ({i},{j}) has order {} < {order}", e.order());
                entries.push(e.truncate(order));
            }
        }
        SeriesMatrix { dim, order, entries }
    }

    pub fn zero(dim: usize, order: usize) -> Self {
        Self::from_fn(dim, order, |_, _| PowerSeries::zero(order))
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        Self::from_fn(dim, order, |i, j| {
            if i == j {
                PowerSeries::one(order)
            } else {
                PowerSeries::zero(order)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &PowerSeries {
        &self.entries[i * self.dim + j]
    }

    /// Smallest valuation over all entries, `None` for the zero matrix.
    pub fn valuation(&self) -> Option<usize> {
        self.entries.iter().filter_map(PowerSeries::valuation).min()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, self.order.min(other.order), |i, j| {
            self.get(i, j) + other.get(i, j)
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let dim = self.dim;
        let order = self.order.min(other.order);
        let entries: Vec<PowerSeries> = (0..dim * dim)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / dim, idx % dim);
                (0..dim).fold(PowerSeries::zero(order), |acc, k| {
                    acc + self.get(i, k) * other.get(k, j)
                })
            })
            .collect();
        SeriesMatrix { dim, order, entries }
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, row: &[PowerSeries]) -> Vec<PowerSeries> {
        assert_eq!(row.len(), self.dim);
        (0..self.dim)
            .into_par_iter()
            .map(|j| {
                row.iter()
                    .enumerate()
                    .filter(|(_, r)| !r.is_zero())
                    .fold(PowerSeries::zero(self.order), |acc, (i, r)| acc + r * self.get(i, j))
            })
            .collect()
    }

    /// `(I - self)^{-1} = sum_j self^j`, which terminates in the truncated ring
    /// because every entry has positive valuation.
    ///
    /// # Panics
    /// If some entry has a nonzero constant term.
    pub fn neumann_resolvent(&self) -> Self {
        let v = match self.valuation() {
            None => return Self::identity(self.dim, self.order),
            Some(v) => v,
        };
        assert!(v > 0, "Neumann series needs entries of positive valuation");
        let mut total = Self::identity(self.dim, self.order);
        let mut power = Self::identity(self.dim, self.order);
        for _ in 0..=self.order / v {
            power = power.mul(self);
            if power.valuation().is_none() {
                break;
            }
            total = total.add(&power);
        }
        total
    }
}

/// `sum_j row * m^j`, the row-vector form of [`SeriesMatrix::neumann_resolvent`].
pub fn neumann_row(m: &SeriesMatrix, row: Vec<PowerSeries>) -> Vec<PowerSeries> {
    let v = m.valuation().unwrap_or(m.order() + 1);
    assert!(v > 0, "Neumann series needs entries of positive valuation");
    let mut total = row.clone();
    let mut current = row;
    for _ in 0..=m.order() / v {
        current = m.left_apply(&current);
        if current.iter().all(PowerSeries::is_zero) {
            break;
        }
        for (t, c) in total.iter_mut().zip(&current) {
            *t = &*t + c;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rational;

    #[test]
    fn resolvent_of_scalar() {
        // (1 - x)^{-1} as a 1x1 matrix
        let m = SeriesMatrix::from_fn(1, 6, |_, _| PowerSeries::x(6));
        let r = m.neumann_resolvent();
        assert_eq!(r.get(0, 0).ogf_counts().unwrap(), vec![1.into(); 7]);
    }

    #[test]
    fn resolvent_inverts() {
        let order = 6;
        let m = SeriesMatrix::from_fn(3, order, |i, j| {
            PowerSeries::monomial(order, 1 + (i + j) % 2, rational((i * 3 + j + 1) as i64))
        });
        let r = m.neumann_resolvent();
        let i_minus_m = SeriesMatrix::from_fn(3, order, |i, j| {
            let id = if i == j {
                PowerSeries::one(order)
            } else {
                PowerSeries::zero(order)
            };
            id - m.get(i, j)
        });
        assert_eq!(i_minus_m.mul(&r), SeriesMatrix::identity(3, order));
        let row = neumann_row(
            &m,
            vec![
                PowerSeries::one(order),
                PowerSeries::zero(order),
                PowerSeries::zero(order),
            ],
        );
        for (j, entry) in row.iter().enumerate() {
            assert_eq!(entry, r.get(0, j));
        }
    }
}
