//! Simple undirected graphs on vertices `1..=n`, the constructors used by the
//! path-power sweeps, and small-instance isomorphism machinery.

use std::fmt;

use crate::{Error, Result};

/// A simple undirected graph on the vertex set `1..=n`.
///
/// Loop-free by construction; adjacency is stored as bit rows so equality is
/// structural (same order, same edge set).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

fn blocks(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// Graph with the given order and no edges.
    pub fn edgeless(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        Ok(Graph {
            n,
            rows: vec![vec![0u64; blocks(n)]; n],
        })
    }

    /// Builds a graph from an explicit edge list. Endpoints must lie in
    /// `1..=n` and differ; duplicate pairs collapse (the edge set is a set).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::edgeless(n)?;
        for (i, j) in edges {
            g.check_vertex(i)?;
            g.check_vertex(j)?;
            if i == j {
                return Err(Error::LoopEdge { vertex: i });
            }
            g.set_edge(i, j);
        }
        Ok(g)
    }

    /// Builds a graph of order `n` with an edge on `{i, j}` (for `i < j`)
    /// exactly when the predicate holds.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut g = Graph::edgeless(n)?;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if edge(i, j) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// The path `P_n`: edges `{i, i+1}` for `1 <= i <= n-1`.
    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |i, j| j == i + 1)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |_, _| true)
    }

    /// Complete multipartite graph with the given part sizes, parts laid out
    /// consecutively: vertices `1..=parts[0]` form the first class and so on.
    /// Edges join exactly the pairs in different classes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::EmptySelection);
        }
        if parts.contains(&0) {
            return Err(Error::EmptyPart);
        }
        let n: usize = parts.iter().sum();
        let mut class = vec![0usize; n + 1];
        let mut v = 1;
        for (c, &size) in parts.iter().enumerate() {
            for _ in 0..size {
                class[v] = c;
                v += 1;
            }
        }
        Graph::from_fn(n, |i, j| class[i] != class[j])
    }

    /// The paw: a triangle on `{1, 2, 3}` with the pendant vertex `4`
    /// attached to vertex `3`.
    pub fn paw() -> Graph {
        Graph::new(4, [(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn set_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        self.rows[i - 1][(j - 1) / 64] |= 1 << ((j - 1) % 64);
        self.rows[j - 1][(i - 1) / 64] |= 1 << ((i - 1) % 64);
    }

    /// Adjacency test. Panics on out-of-range vertices; `has_edge(v, v)` is
    /// false for every vertex (no loops).
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.rows[i - 1][(j - 1) / 64] >> ((j - 1) % 64) & 1 == 1
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        assert!(v >= 1 && v <= self.n);
        (1..=self.n).filter(|&w| self.has_edge(v, w)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n);
        self.rows[v - 1]
            .iter()
            .map(|b| b.count_ones() as usize)
            .sum()
    }

    /// Edges as `(i, j)` pairs with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Subgraph induced by `w`, relabeled so that `w[k]` becomes vertex
    /// `k + 1`. The selection must be nonempty, in range, and duplicate-free.
    pub fn induced(&self, w: &[usize]) -> Result<Graph> {
        if w.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut seen = vec![false; self.n + 1];
        for &v in w {
            self.check_vertex(v)?;
            if seen[v] {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            seen[v] = true;
        }
        Graph::from_fn(w.len(), |a, b| self.has_edge(w[a - 1], w[b - 1]))
    }

    /// Edge-set union of two graphs on the same labeled vertex set. Callers
    /// pad the smaller summand with isolated vertices first.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut g = self.clone();
        for (r, s) in g.rows.iter_mut().zip(other.rows.iter()) {
            for (a, b) in r.iter_mut().zip(s.iter()) {
                *a |= *b;
            }
        }
        Ok(g)
    }

    /// Disjoint union: `self` keeps its labels, `other` is shifted up by
    /// `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        Graph::from_fn(n, |i, j| {
            if j <= self.n {
                self.has_edge(i, j)
            } else if i > self.n {
                other.has_edge(i - self.n, j - self.n)
            } else {
                false
            }
        })
        .unwrap()
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.has_edge(i, j)).unwrap()
    }

    /// Connected components as `(vertex subset, induced graph)` pairs,
    /// ordered by smallest vertex; each subset is sorted.
    pub fn connected_components(&self) -> Vec<(Vec<usize>, Graph)> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(v) = queue.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            let induced = self.induced(&comp).unwrap();
            out.push((comp, induced));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Partition of `1..=n` into independent classes when non-adjacency is an
    /// equivalence relation, i.e. when the graph is complete multipartite
    /// (possibly with a single class when there are no edges). Classes are the
    /// connected components of the complement; each must be independent here.
    pub fn complete_multipartite_partition(&self) -> Option<Vec<Vec<usize>>> {
        let comp = self.complement();
        let mut classes = Vec::new();
        for (members, _) in comp.connected_components() {
            for (a, &u) in members.iter().enumerate() {
                for &v in &members[a + 1..] {
                    if self.has_edge(u, v) {
                        return None;
                    }
                }
            }
            classes.push(members);
        }
        Some(classes)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A vertex bijection between two graphs of equal order, with the edge
/// pairing it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoMapping {
    map: Vec<usize>,
}

impl IsoMapping {
    /// Wraps `map` (with `map[u-1]` the image of `u`) after checking it is a
    /// bijection of `1..=n`.
    pub fn new(map: Vec<usize>) -> Result<IsoMapping> {
        let n = map.len();
        let mut seen = vec![false; n + 1];
        for &v in &map {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            seen[v] = true;
        }
        Ok(IsoMapping { map })
    }

    pub fn order(&self) -> usize {
        self.map.len()
    }

    /// Image of vertex `u`.
    pub fn apply(&self, u: usize) -> usize {
        self.map[u - 1]
    }

    pub fn inverse(&self) -> IsoMapping {
        let mut inv = vec![0; self.map.len()];
        for (u0, &v) in self.map.iter().enumerate() {
            inv[v - 1] = u0 + 1;
        }
        IsoMapping { map: inv }
    }

    /// Checks the defining property in both directions: `uv` is an edge of
    /// `from` exactly when the image pair is an edge of `to`.
    pub fn is_isomorphism(&self, from: &Graph, to: &Graph) -> bool {
        if from.order() != to.order() || from.order() != self.map.len() {
            return false;
        }
        for u in 1..=from.order() {
            for v in (u + 1)..=from.order() {
                if from.has_edge(u, v) != to.has_edge(self.apply(u), self.apply(v)) {
                    return false;
                }
            }
        }
        true
    }

    /// The induced pairing of edges: each source edge with its image edge
    /// (endpoints normalized so the smaller comes first).
    pub fn edge_map(&self, from: &Graph) -> Vec<((usize, usize), (usize, usize))> {
        from.edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.apply(u), self.apply(v));
                ((u, v), (a.min(b), a.max(b)))
            })
            .collect()
    }
}

/// Jointly refines vertex colors of both graphs by iterated neighbor-color
/// signatures, starting from degrees. Returns `None` when the color
/// histograms separate the graphs.
fn refined_colors(g1: &Graph, g2: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g1.order();
    let mut c1: Vec<usize> = (1..=n).map(|v| g1.degree(v)).collect();
    let mut c2: Vec<usize> = (1..=n).map(|v| g2.degree(v)).collect();
    loop {
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w - 1]).collect();
            s.sort_unstable();
            (c[v - 1], s)
        };
        let s1: Vec<_> = (1..=n).map(|v| sig(g1, &c1, v)).collect();
        let s2: Vec<_> = (1..=n).map(|v| sig(g2, &c2, v)).collect();
        let mut all: Vec<_> = s1.iter().chain(s2.iter()).cloned().collect();
        all.sort();
        all.dedup();
        let index = |s: &(usize, Vec<usize>)| all.binary_search(s).unwrap();
        let n1: Vec<usize> = s1.iter().map(index).collect();
        let n2: Vec<usize> = s2.iter().map(index).collect();
        let mut h1 = n1.clone();
        let mut h2 = n2.clone();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return None;
        }
        if n1 == c1 && n2 == c2 {
            return Some((c1, c2));
        }
        c1 = n1;
        c2 = n2;
    }
}

/// Searches for an isomorphism `g1 -> g2`. Degree and edge-count pruning and
/// color refinement run first; a backtracking search over color-compatible
/// assignments finishes the job. Deterministic for fixed inputs.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<IsoMapping> {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let n = g1.order();
    let (c1, c2) = refined_colors(g1, g2)?;

    // Most constrained first: rare colors, then high degree.
    let mut class_size = std::collections::HashMap::new();
    for &c in &c1 {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| (class_size[&c1[v - 1]], usize::MAX - g1.degree(v), v));

    let mut map = vec![0usize; n];
    let mut used = vec![false; n + 1];

    fn backtrack(
        depth: usize,
        order: &[usize],
        g1: &Graph,
        g2: &Graph,
        c1: &[usize],
        c2: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        'candidate: for v in 1..=g2.order() {
            if used[v] || c1[u - 1] != c2[v - 1] {
                continue;
            }
            for &w in &order[..depth] {
                if g1.has_edge(u, w) != g2.has_edge(v, map[w - 1]) {
                    continue 'candidate;
                }
            }
            map[u - 1] = v;
            used[v] = true;
            if backtrack(depth + 1, order, g1, g2, c1, c2, map, used) {
                return true;
            }
            used[v] = false;
            map[u - 1] = 0;
        }
        false
    }

    if backtrack(0, &order, g1, g2, &c1, &c2, &mut map, &mut used) {
        let iso = IsoMapping::new(map).expect("backtracking built a bijection");
        debug_assert!(iso.is_isomorphism(g1, g2));
        Some(iso)
    } else {
        None
    }
}

/// Does `g` contain an induced subgraph isomorphic to `h`?
pub fn has_induced(g: &Graph, h: &Graph) -> bool {
    let (n, m) = (g.order(), h.order());
    if m > n {
        return false;
    }
    let mut pick: Vec<usize> = (1..=m).collect();
    loop {
        let sub = g.induced(&pick).unwrap();
        if find_isomorphism(&sub, h).is_some() {
            return true;
        }
        // next lexicographic m-subset of 1..=n
        let mut i = m;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if pick[i] < n - (m - 1 - i) {
                pick[i] += 1;
                for k in (i + 1)..m {
                    pick[k] = pick[k - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All labeled graphs on `1..=n`, enumerated by edge bitmask. Intended for
/// exhaustive small-order sweeps (`n <= 6`).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |bits| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}
