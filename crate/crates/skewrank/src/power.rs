//! Powers and strict powers of graphs.
//!
//! `power(G, r)` joins two distinct vertices whenever a walk of length at
//! most `r` connects them; `strict_power(G, r)` whenever a walk of length
//! exactly `r` does. Walks may repeat vertices and edges, so the strict power
//! is computed by boolean matrix powering, not by distances. On paths both
//! collapse to closed-form rules on `|i - j|`, which [`path_power_edge`]
//! evaluates and which the walk computations cross-validate.

use crate::graph::{Graph, IsoMapping};
use crate::{Error, Result};

/// Parameters of one (strict) path-power instance: the graph `P_n^r` when
/// `strict` is false, `P_n^(r)` when it is true.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PowerSpec {
    pub n: usize,
    pub r: usize,
    pub strict: bool,
}

impl PowerSpec {
    pub fn new(n: usize, r: usize, strict: bool) -> Result<PowerSpec> {
        if n < 1 || r < 1 {
            return Err(Error::BadPowerSpec { n, r });
        }
        Ok(PowerSpec { n, r, strict })
    }

    /// Half power `s` with `r = 2s`, defined only for even `r`.
    pub fn half_power(&self) -> Option<usize> {
        (self.r % 2 == 0).then_some(self.r / 2)
    }

    /// Half order `t` with `n = 2t`, defined only for even `n`.
    pub fn half_order(&self) -> Option<usize> {
        (self.n % 2 == 0).then_some(self.n / 2)
    }

    /// The graph this spec denotes.
    pub fn graph(&self) -> Graph {
        let p = Graph::path(self.n).expect("n >= 1");
        if self.strict {
            strict_power(&p, self.r)
        } else {
            power(&p, self.r)
        }
    }
}

impl std::fmt::Display for PowerSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.strict {
            write!(f, "P_{}^({})", self.n, self.r)
        } else {
            write!(f, "P_{}^{}", self.n, self.r)
        }
    }
}

/// `G^r`: edge `ij` (with `i != j`) whenever a walk of length at most `r`
/// joins `i` and `j`. Equivalently, graph distance at most `r` within a
/// connected component; computed by breadth-first search from every vertex.
pub fn power(g: &Graph, r: usize) -> Graph {
    assert!(r >= 1, "power requires r >= 1");
    let n = g.order();
    let mut dist_le_r = vec![false; n * n];
    for start in 1..=n {
        let mut dist = vec![usize::MAX; n + 1];
        dist[start] = 0;
        let mut frontier = vec![start];
        let mut depth = 0;
        while !frontier.is_empty() && depth < r {
            depth += 1;
            let mut next = Vec::new();
            for v in frontier.drain(..) {
                for w in g.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = depth;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        for v in 1..=n {
            if v != start && dist[v] != usize::MAX {
                dist_le_r[(start - 1) * n + (v - 1)] = true;
            }
        }
    }
    Graph::from_fn(n, |i, j| dist_le_r[(i - 1) * n + (j - 1)]).unwrap()
}

/// Square boolean matrices with row bitsets, for walk counting.
#[derive(Clone)]
struct BoolMat {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl BoolMat {
    fn adjacency(g: &Graph) -> BoolMat {
        let n = g.order();
        let b = n.div_ceil(64);
        let mut rows = vec![vec![0u64; b]; n];
        for (i, j) in g.edges() {
            rows[i - 1][(j - 1) / 64] |= 1 << ((j - 1) % 64);
            rows[j - 1][(i - 1) / 64] |= 1 << ((i - 1) % 64);
        }
        BoolMat { n, rows }
    }

    fn identity(n: usize) -> BoolMat {
        let b = n.div_ceil(64);
        let mut rows = vec![vec![0u64; b]; n];
        for (v, row) in rows.iter_mut().enumerate() {
            row[v / 64] |= 1 << (v % 64);
        }
        BoolMat { n, rows }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    fn mul(&self, other: &BoolMat) -> BoolMat {
        let n = self.n;
        let b = n.div_ceil(64);
        let mut rows = vec![vec![0u64; b]; n];
        for i in 0..n {
            for k in 0..n {
                if self.get(i, k) {
                    for (blk, out) in other.rows[k].iter().zip(rows[i].iter_mut()) {
                        *out |= *blk;
                    }
                }
            }
        }
        BoolMat { n, rows }
    }
}

/// `G^(r)`: edge `ij` (with `i != j`) whenever a walk of length exactly `r`
/// joins `i` and `j`. The boolean adjacency matrix is raised to the `r`-th
/// power by repeated squaring; closed walks (`i = j`) are discarded since all
/// graphs here are loop-free.
pub fn strict_power(g: &Graph, r: usize) -> Graph {
    assert!(r >= 1, "strict power requires r >= 1");
    let a = BoolMat::adjacency(g);
    let mut acc = BoolMat::identity(g.order());
    let mut base = a;
    let mut e = r;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    Graph::from_fn(g.order(), |i, j| acc.get(i - 1, j - 1)).unwrap()
}

/// Closed-form adjacency rule for (strict) powers of paths.
///
/// Non-strict: `1 <= |i-j| <= r`. Strict: additionally `|i-j| = r (mod 2)`,
/// because a path is bipartite and any slack `r - |i-j|` is even and can be
/// absorbed by back-and-forth moves along an incident edge.
pub fn path_power_edge(spec: &PowerSpec, i: usize, j: usize) -> Result<bool> {
    for v in [i, j] {
        if v == 0 || v > spec.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: spec.n,
            });
        }
    }
    let d = i.abs_diff(j);
    if d == 0 || d > spec.r {
        return Ok(false);
    }
    if spec.strict && d % 2 != spec.r % 2 {
        return Ok(false);
    }
    Ok(true)
}

/// Splits the strict even power `P_n^(2m)` into its two parity components.
///
/// Returns the explicit bijection sending even vertices `2t` to vertex `t` of
/// `P_{floor(n/2)}^m` and odd vertices `2s-1` to vertex `s` of
/// `P_{ceil(n/2)}^m` (placed after the even block in the disjoint union),
/// together with the two component graphs. The mapping is checked to be an
/// isomorphism onto the disjoint union before returning; a failure there
/// would be a bug, not a valid input state.
pub fn split_strict_even(n: usize, m: usize) -> Result<(IsoMapping, Graph, Graph)> {
    if n < 3 {
        return Err(Error::TooSmall { minimum: 3 });
    }
    if m < 1 {
        return Err(Error::BadPowerSpec { n, r: m });
    }
    let lo = n / 2;
    let even_part = power(&Graph::path(lo).unwrap(), m);
    let odd_part = power(&Graph::path(n - lo).unwrap(), m);
    let map: Vec<usize> = (1..=n)
        .map(|w| {
            if w % 2 == 0 {
                w / 2
            } else {
                lo + w.div_ceil(2)
            }
        })
        .collect();
    let iso = IsoMapping::new(map).expect("parity split is a bijection");
    let source = strict_power(&Graph::path(n).unwrap(), 2 * m);
    let target = even_part.disjoint_union(&odd_part);
    assert!(
        iso.is_isomorphism(&source, &target),
        "parity split must be an isomorphism for n={n} m={m}"
    );
    Ok((iso, even_part, odd_part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::find_isomorphism;

    #[test]
    fn power_examples() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(power(&p5, 1), p5);
        // K_5 minus the edge {1,5}
        let k5_minus = Graph::from_fn(5, |i, j| !(i == 1 && j == 5)).unwrap();
        assert_eq!(power(&p5, 3), k5_minus);
        assert_eq!(power(&p5, 4), Graph::complete(5).unwrap());
    }

    #[test]
    fn strict_power_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(strict_power(&p3, 2), Graph::new(3, [(1, 3)]).unwrap());
        let p2 = Graph::path(2).unwrap();
        assert_eq!(strict_power(&p2, 2), Graph::edgeless(2).unwrap());
        let p5 = Graph::path(5).unwrap();
        let k23 = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert!(find_isomorphism(&strict_power(&p5, 3), &k23).is_some());
    }

    #[test]
    fn closed_form_rule_examples() {
        let spec = PowerSpec::new(9, 4, true).unwrap();
        assert!(path_power_edge(&spec, 1, 5).unwrap());
        assert!(!path_power_edge(&spec, 1, 4).unwrap());
        let spec3 = PowerSpec::new(9, 3, true).unwrap();
        // Walk 1-2-1-2 has length 3; the cube of the path adjacency agrees.
        assert!(path_power_edge(&spec3, 1, 2).unwrap());
        assert!(strict_power(&Graph::path(9).unwrap(), 3).has_edge(1, 2));
        assert!(path_power_edge(&spec3, 0, 2).is_err());
        assert!(path_power_edge(&spec3, 1, 10).is_err());
    }

    #[test]
    fn closed_form_matches_walk_computation() {
        for n in 1..=20 {
            for r in 1..=n {
                for strict in [false, true] {
                    let spec = PowerSpec { n, r, strict };
                    let computed = spec.graph();
                    let rule =
                        Graph::from_fn(n, |i, j| path_power_edge(&spec, i, j).unwrap()).unwrap();
                    assert_eq!(computed, rule, "spec {spec}");
                }
            }
        }
    }

    #[test]
    fn power_monotone_in_r() {
        let g = Graph::new(7, [(1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap();
        for r in 1..=5 {
            let a = power(&g, r);
            let b = power(&g, r + 1);
            for (i, j) in a.edges() {
                assert!(b.has_edge(i, j));
            }
        }
    }

    #[test]
    fn terminal_powers_of_paths() {
        for n in 2..=12 {
            let p = Graph::path(n).unwrap();
            assert_eq!(power(&p, n - 1), Graph::complete(n).unwrap());
            assert_eq!(power(&p, n + 3), Graph::complete(n).unwrap());
            if n >= 3 {
                let k_minus = Graph::from_fn(n, |i, j| !(i == 1 && j == n)).unwrap();
                assert_eq!(power(&p, n - 2), k_minus);
            }
        }
    }

    #[test]
    fn terminal_strict_powers_of_paths() {
        for n in 3..=12usize {
            let p = Graph::path(n).unwrap();
            for r in (n.saturating_sub(2)..=n + 2).filter(|&r| r >= 1) {
                let sp = strict_power(&p, r);
                if r % 2 == 1 {
                    let target = Graph::complete_multipartite(&[n / 2, n.div_ceil(2)]).unwrap();
                    assert!(find_isomorphism(&sp, &target).is_some(), "n={n} r={r}");
                } else {
                    let target = Graph::complete(n / 2)
                        .unwrap()
                        .disjoint_union(&Graph::complete(n.div_ceil(2)).unwrap());
                    assert!(find_isomorphism(&sp, &target).is_some(), "n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn strict_even_split_examples() {
        let (iso, even_part, odd_part) = split_strict_even(9, 2).unwrap();
        assert_eq!(even_part, power(&Graph::path(4).unwrap(), 2));
        assert_eq!(odd_part, power(&Graph::path(5).unwrap(), 2));
        // Even vertex 4 = 2*2 goes to vertex 2 of the even block; odd vertex
        // 7 = 2*4-1 goes to vertex 4 of the odd block, offset by 4.
        assert_eq!(iso.apply(4), 2);
        assert_eq!(iso.apply(7), 4 + 4);

        let (_, a, b) = split_strict_even(4, 1).unwrap();
        assert_eq!(a, Graph::path(2).unwrap());
        assert_eq!(b, Graph::path(2).unwrap());

        let (_, a, b) = split_strict_even(8, 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, power(&Graph::path(4).unwrap(), 2));

        assert!(split_strict_even(2, 1).is_err());
    }

    #[test]
    fn strict_power_components_split_by_parity() {
        let comps = strict_power(&Graph::path(6).unwrap(), 2).connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].0, vec![1, 3, 5]);
        assert_eq!(comps[1].0, vec![2, 4, 6]);
    }

    #[test]
    fn strict_split_isomorphism_found_by_search() {
        let sp = strict_power(&Graph::path(9).unwrap(), 4);
        let target =
            power(&Graph::path(5).unwrap(), 2).disjoint_union(&power(&Graph::path(4).unwrap(), 2));
        assert!(find_isomorphism(&sp, &target).is_some());
    }

    #[test]
    fn spec_accessors() {
        let spec = PowerSpec::new(8, 4, true).unwrap();
        assert_eq!(spec.half_power(), Some(2));
        assert_eq!(spec.half_order(), Some(4));
        let spec = PowerSpec::new(9, 3, true).unwrap();
        assert_eq!(spec.half_power(), None);
        assert_eq!(spec.half_order(), None);
        assert!(PowerSpec::new(0, 1, false).is_err());
        assert!(PowerSpec::new(4, 0, false).is_err());
    }
}
