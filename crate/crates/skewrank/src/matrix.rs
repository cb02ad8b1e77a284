//! Skew-symmetric matrices with exact rational entries, their support graphs,
//! and exact rank by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::{Error, Result};

/// An `n x n` skew-symmetric matrix over the rationals: `a_ji = -a_ij` and
/// the diagonal is zero. Every mutation goes through [`SkewMatrixQ::set`], so
/// the invariant cannot be broken.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewMatrixQ {
    n: usize,
    entries: Vec<BigRational>,
}

impl SkewMatrixQ {
    /// The zero matrix of the given order.
    pub fn zero(n: usize) -> Result<SkewMatrixQ> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        Ok(SkewMatrixQ {
            n,
            entries: vec![BigRational::zero(); n * n],
        })
    }

    /// Builds a matrix from its strictly upper entries `(i, j, value)` with
    /// `i < j`; the lower triangle is filled in by skew symmetry.
    pub fn from_upper(
        n: usize,
        upper: impl IntoIterator<Item = (usize, usize, BigRational)>,
    ) -> Result<SkewMatrixQ> {
        let mut m = SkewMatrixQ::zero(n)?;
        for (i, j, v) in upper {
            if i >= j {
                return Err(Error::NotUpperTriangle { i, j });
            }
            m.check_index(i)?;
            m.check_index(j)?;
            m.set(i, j, v);
        }
        Ok(m)
    }

    fn check_index(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry `a_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Sets `a_ij` and `a_ji = -a_ij`. Panics on a diagonal index.
    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        assert!(
            i != j,
            "diagonal entries of a skew-symmetric matrix are zero"
        );
        self.entries[(j - 1) * self.n + (i - 1)] = -v.clone();
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// The support graph: edge `ij` exactly where `a_ij != 0`, `i < j`.
    pub fn pattern(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.get(i, j).is_zero()).unwrap()
    }

    /// Strictly upper nonzero entries in row-major order.
    pub fn upper_entries(&self) -> Vec<(usize, usize, BigRational)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    /// Re-labels this matrix into a larger zero matrix: local vertex `k` goes
    /// to `positions[k - 1]`. Positions must be distinct and in `1..=order`.
    pub fn embed(&self, order: usize, positions: &[usize]) -> Result<SkewMatrixQ> {
        if positions.len() != self.n {
            return Err(Error::OrderMismatch {
                left: positions.len(),
                right: self.n,
            });
        }
        let mut seen = vec![false; order + 1];
        for &p in positions {
            if p == 0 || p > order {
                return Err(Error::VertexOutOfRange { vertex: p, order });
            }
            if seen[p] {
                return Err(Error::DuplicateVertex { vertex: p });
            }
            seen[p] = true;
        }
        let mut out = SkewMatrixQ::zero(order)?;
        for (i, j, v) in self.upper_entries() {
            let (a, b) = (positions[i - 1], positions[j - 1]);
            if a < b {
                out.set(a, b, v);
            } else {
                out.set(b, a, -v);
            }
        }
        Ok(out)
    }

    /// `self + scale * other`, entrywise.
    pub fn add_scaled(&self, other: &SkewMatrixQ, scale: &BigRational) -> Result<SkewMatrixQ> {
        if self.n != other.n {
            return Err(Error::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a + b * scale)
            .collect();
        Ok(SkewMatrixQ { n: self.n, entries })
    }

    /// Exact rank over the rationals.
    ///
    /// Each row is first scaled to integers (row scaling preserves rank),
    /// then eliminated fraction-free: the one-step minors divide exactly by
    /// the previous pivot, which keeps every intermediate value an integer
    /// minor of the scaled matrix and bounds coefficient growth. Pivots are
    /// chosen as the first nonzero in column order, so the computation is
    /// deterministic. For skew-symmetric input the result is always even.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<BigInt>> = (1..=self.n)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 1..=self.n {
                    lcm = lcm.lcm(self.get(i, j).denom());
                }
                (1..=self.n)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect();
        bareiss_rank(&mut rows)
    }
}

impl std::fmt::Debug for SkewMatrixQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SkewMatrixQ(n={})", self.n)?;
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free (integer-preserving) elimination; returns the rank.
/// Consumes the row data.
fn bareiss_rank(rows: &mut [Vec<BigInt>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for i in (rank + 1)..nrows {
            for j in (col + 1)..ncols {
                let num = &rows[rank][col] * &rows[i][j] - &rows[i][col] * &rows[rank][j];
                let (q, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "fraction-free step must divide exactly");
                rows[i][j] = q;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Convenience constructor for small integer values.
pub fn ratio(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Parses "p" or "p/q" into an exact rational.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    s.parse::<BigRational>()
        .map_err(|_| Error::BadRational(s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain rational Gaussian elimination, kept independent of the
    /// fraction-free path as a rank oracle.
    pub(crate) fn rational_rank(m: &SkewMatrixQ) -> usize {
        let n = m.order();
        let mut rows: Vec<Vec<BigRational>> = (1..=n)
            .map(|i| (1..=n).map(|j| m.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].recip();
            for j in col..n {
                let v = &rows[rank][j] * &inv;
                rows[rank][j] = v;
            }
            for i in 0..n {
                if i != rank && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    for j in col..n {
                        let v = &rows[i][j] - &rows[rank][j] * &f;
                        rows[i][j] = v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_of_simple_matrices() {
        assert_eq!(SkewMatrixQ::zero(4).unwrap().rank(), 0);
        let m = SkewMatrixQ::from_upper(2, [(1, 2, ratio(1))]).unwrap();
        assert_eq!(m.rank(), 2);
        // Tridiagonal with unit superdiagonal on 5 vertices has rank 4.
        let tri = SkewMatrixQ::from_upper(5, (1..5).map(|i| (i, i + 1, ratio(1)))).unwrap();
        assert_eq!(tri.rank(), 4);
        assert_eq!(rational_rank(&tri), 4);
    }

    #[test]
    fn pattern_examples() {
        assert_eq!(
            SkewMatrixQ::zero(3).unwrap().pattern(),
            Graph::edgeless(3).unwrap()
        );
        let tri = SkewMatrixQ::from_upper(5, (1..5).map(|i| (i, i + 1, ratio(1)))).unwrap();
        assert_eq!(tri.pattern(), Graph::path(5).unwrap());
    }

    #[test]
    fn skew_invariant_holds() {
        let mut m = SkewMatrixQ::zero(3).unwrap();
        m.set(1, 3, ratio(7));
        assert_eq!(*m.get(3, 1), ratio(-7));
        assert_eq!(*m.get(1, 1), ratio(0));
        assert!(SkewMatrixQ::from_upper(3, [(2, 2, ratio(1))]).is_err());
        assert!(SkewMatrixQ::from_upper(3, [(3, 1, ratio(1))]).is_err());
        assert!(SkewMatrixQ::from_upper(3, [(1, 4, ratio(1))]).is_err());
    }

    #[test]
    fn rational_entries_rank() {
        let m = SkewMatrixQ::from_upper(
            4,
            [
                (1, 2, BigRational::new(BigInt::from(1), BigInt::from(3))),
                (3, 4, BigRational::new(BigInt::from(-2), BigInt::from(7))),
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 4);
        assert_eq!(rational_rank(&m), 4);
    }

    #[test]
    fn embedding_keeps_entries_and_sign() {
        let m = SkewMatrixQ::from_upper(2, [(1, 2, ratio(5))]).unwrap();
        let e = m.embed(4, &[3, 1]).unwrap();
        assert_eq!(*e.get(1, 3), ratio(-5));
        assert_eq!(*e.get(3, 1), ratio(5));
        assert!(m.embed(4, &[1, 1]).is_err());
        assert!(m.embed(4, &[1, 5]).is_err());
        assert!(m.embed(4, &[1]).is_err());
    }

    #[test]
    fn parse_and_print_rationals() {
        assert_eq!(
            parse_ratio("3/4").unwrap(),
            BigRational::new(3.into(), 4.into())
        );
        assert_eq!(parse_ratio("-2").unwrap(), ratio(-2));
        assert!(parse_ratio("x").is_err());
    }
}
