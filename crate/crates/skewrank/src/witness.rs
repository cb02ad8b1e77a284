//! Explicit skew-symmetric rational matrices realizing every closed-form
//! minimum skew rank value.
//!
//! The constructions mirror the cover decompositions behind the closed
//! forms. A power of a path is covered by a complete multipartite window
//! plus a two-step-smaller power; the witness is the matching overlay of a
//! rank-2 block and a recursive witness. Strict powers with odd exponent use
//! the suffix window instead, and strict powers with even exponent pull the
//! two non-strict component witnesses back along the parity split.

use crate::formula::{mrs_spec, FormulaVerdict};
use crate::graph::Graph;
use crate::matrix::{ratio, SkewMatrixQ};
use crate::power::PowerSpec;
use crate::{Error, Result};

/// Tridiagonal witness for the path `P_n`: unit superdiagonal, rank `n` for
/// even `n` and `n - 1` for odd.
pub fn witness_path(n: usize) -> SkewMatrixQ {
    assert!(n >= 1);
    SkewMatrixQ::from_upper(n, (1..n).map(|i| (i, i + 1, ratio(1)))).unwrap()
}

/// Rank-2 witness for the complete multipartite graph on the given vertex
/// classes: entry `a_ij = x_i - x_j` where `x` is the class index, so the
/// entry vanishes exactly inside a class. Requires at least two classes (the
/// edgeless one-class graph needs the zero matrix, rank 0).
pub fn witness_partition(n: usize, classes: &[Vec<usize>]) -> Result<SkewMatrixQ> {
    if classes.len() < 2 {
        return Err(Error::SinglePart);
    }
    let mut label = vec![0usize; n + 1];
    let mut covered = 0usize;
    for (c, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::EmptyPart);
        }
        for &v in class {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if label[v] != 0 {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            label[v] = c + 1;
            covered += 1;
        }
    }
    if covered != n {
        return Err(Error::InvalidPartition);
    }
    let mut m = SkewMatrixQ::zero(n)?;
    for i in 1..=n {
        for j in (i + 1)..=n {
            if label[i] != label[j] {
                m.set(i, j, ratio(label[i] as i64 - label[j] as i64));
            }
        }
    }
    Ok(m)
}

/// Rank-2 witness for the complete multipartite graph with consecutive part
/// sizes, the layout produced by [`Graph::complete_multipartite`].
pub fn witness_multipartite(parts: &[usize]) -> Result<SkewMatrixQ> {
    if parts.is_empty() {
        return Err(Error::EmptySelection);
    }
    if parts.contains(&0) {
        return Err(Error::EmptyPart);
    }
    let n = parts.iter().sum();
    let mut classes = Vec::with_capacity(parts.len());
    let mut v = 1;
    for &size in parts {
        classes.push((v..v + size).collect::<Vec<_>>());
        v += size;
    }
    witness_partition(n, &classes)
}

/// Overlays two witnesses whose supports jointly cover the target pattern:
/// returns `A + lambda * B` for the smallest positive integer `lambda` that
/// avoids cancellation on shared edges. Each shared edge rules out at most
/// one value of `lambda`, so some `lambda <= shared + 1` always works; the
/// rank is at most `rank(A) + rank(B)`.
pub fn overlay(a: &SkewMatrixQ, b: &SkewMatrixQ, target: &Graph) -> Result<SkewMatrixQ> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    if a.order() != target.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: target.order(),
        });
    }
    let pattern_a = a.pattern();
    let pattern_b = b.pattern();
    if pattern_a.union(&pattern_b)? != *target {
        return Err(Error::PatternNotCovered);
    }
    let shared = pattern_a
        .edges()
        .into_iter()
        .filter(|&(i, j)| pattern_b.has_edge(i, j))
        .count();
    for lambda in 1..=(shared + 1) {
        let candidate = a.add_scaled(b, &ratio(lambda as i64))?;
        if candidate.pattern() == *target {
            return Ok(candidate);
        }
    }
    unreachable!("some scale factor up to shared+1 avoids all cancellations");
}

/// Vertex classes of the complete multipartite graph `power(path(n), r)` for
/// `r >= n-2`: all singletons when the power is complete, `{1, n}` merged
/// when only that one pair is too far apart.
fn terminal_power_classes(n: usize, r: usize) -> Vec<Vec<usize>> {
    debug_assert!(n >= 2 && r >= n - 2);
    if r >= n - 1 {
        (1..=n).map(|v| vec![v]).collect()
    } else {
        let mut classes = vec![vec![1, n]];
        classes.extend((2..n).map(|v| vec![v]));
        classes
    }
}

/// Parity classes (odds, evens) of a set of vertices.
fn parity_classes(vertices: impl Iterator<Item = usize>) -> Vec<Vec<usize>> {
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for v in vertices {
        if v % 2 == 1 {
            odd.push(v);
        } else {
            even.push(v);
        }
    }
    vec![odd, even]
}

/// Witness matrix for `power(path(n), r)` whose exact rank equals the
/// closed-form value.
///
/// Terminal exponents (`r >= n-2`) give a complete multipartite graph and a
/// rank-2 witness. Otherwise the pattern is covered by its first `r + 2`
/// vertices (a complete multipartite window) plus a copy of the `n - 2` case
/// on vertices `3..=n`, and the witness is the overlay of the two embedded
/// blocks.
pub fn witness_path_power(n: usize, r: usize) -> SkewMatrixQ {
    assert!(n >= 1 && r >= 1);
    if n == 1 {
        return SkewMatrixQ::zero(1).unwrap();
    }
    if r >= n - 2 {
        return witness_partition(n, &terminal_power_classes(n, r)).unwrap();
    }
    let window = witness_partition(r + 2, &terminal_power_classes(r + 2, r)).unwrap();
    let head = window.embed(n, &(1..=r + 2).collect::<Vec<_>>()).unwrap();
    let tail = witness_path_power(n - 2, r)
        .embed(n, &(3..=n).collect::<Vec<_>>())
        .unwrap();
    let target = PowerSpec {
        n,
        r,
        strict: false,
    }
    .graph();
    overlay(&head, &tail, &target).expect("cover decomposition spans the power")
}

/// Witness matrix for `strict_power(path(n), r)` whose exact rank equals the
/// closed-form value.
///
/// Odd `r`: terminal exponents give the complete bipartite graph on parity
/// classes (rank 2); otherwise the suffix window `n-r-1..=n` carries the
/// rank-2 block and the prefix `1..=n-2` carries the recursive witness. Even
/// `r = 2s`: the strict power splits into its parity classes, each a
/// non-strict power of a path, so the two non-strict witnesses are pulled
/// back onto the odd and even vertices; their supports are disjoint, so the
/// ranks add exactly.
pub fn witness_path_strict(n: usize, r: usize) -> SkewMatrixQ {
    assert!(n >= 1 && r >= 1);
    if n == 1 {
        return SkewMatrixQ::zero(1).unwrap();
    }
    let target = PowerSpec { n, r, strict: true }.graph();
    if r % 2 == 1 {
        if r >= n - 2 {
            return witness_partition(n, &parity_classes(1..=n)).unwrap();
        }
        let head = witness_path_strict(n - 2, r)
            .embed(n, &(1..=n - 2).collect::<Vec<_>>())
            .unwrap();
        let window = witness_partition(r + 2, &parity_classes(1..=r + 2)).unwrap();
        let tail = window
            .embed(n, &(n - r - 1..=n).collect::<Vec<_>>())
            .unwrap();
        overlay(&head, &tail, &target).expect("cover decomposition spans the strict power")
    } else {
        if n == 2 {
            // No walk of even length joins the two endpoints of one edge.
            return SkewMatrixQ::zero(2).unwrap();
        }
        let s = r / 2;
        let evens: Vec<usize> = (1..=n).filter(|v| v % 2 == 0).collect();
        let odds: Vec<usize> = (1..=n).filter(|v| v % 2 == 1).collect();
        let even_block = witness_path_power(evens.len(), s).embed(n, &evens).unwrap();
        let odd_block = witness_path_power(odds.len(), s).embed(n, &odds).unwrap();
        let result = even_block
            .add_scaled(&odd_block, &ratio(1))
            .expect("same order");
        debug_assert_eq!(result.pattern(), target);
        result
    }
}

/// Witness for a [`PowerSpec`] together with its closed-form verdict.
pub fn witness_spec(spec: &PowerSpec) -> (SkewMatrixQ, FormulaVerdict) {
    let w = if spec.strict {
        witness_path_strict(spec.n, spec.r)
    } else {
        witness_path_power(spec.n, spec.r)
    };
    (w, mrs_spec(spec))
}
