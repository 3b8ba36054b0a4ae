//! Bitset-backed simple graphs and vertex subsets.
//!
//! A [`Graph`] stores one n-bit adjacency row per vertex, giving O(1) edge
//! tests and O(n/64) neighborhood intersections. Graphs are immutable after
//! construction and safe to share across threads. Vertices are dense integers
//! `0..n`; there are no labels, no loops and no parallel edges.

use std::fmt;
use std::io::{self, BufRead, Write};

use crate::bits::{self, BitIter};

/// Errors raised by graph construction, queries and DIMACS parsing.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    UniverseMismatch { expected: usize, got: usize },
    EmptySubset,
    InvalidProbability { p: f64 },
    Parse { line: usize, reason: String },
    Io(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::UniverseMismatch { expected, got } => {
                write!(f, "vertex set universe {got} does not match graph order {expected}")
            }
            GraphError::EmptySubset => write!(f, "operation requires a nonempty vertex set"),
            GraphError::InvalidProbability { p } => {
                write!(f, "edge probability must lie in [0,1], got {p}")
            }
            GraphError::Parse { line, reason } => write!(f, "parse error on line {line}: {reason}"),
            GraphError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for GraphError {}

impl From<io::Error> for GraphError {
    fn from(e: io::Error) -> Self {
        GraphError::Io(e.to_string())
    }
}

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// A subset of the vertices `0..n`, iterated in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; bits::words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut words = vec![u64::MAX; bits::words_for(universe)];
        if let Some(last) = words.last_mut() {
            *last = bits::tail_mask(universe);
        }
        VertexSet { universe, words }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(
        universe: usize,
        members: I,
    ) -> Result<Self, GraphError> {
        let mut set = VertexSet::empty(universe);
        for v in members {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: universe });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        bits::count_ones(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[bits::word_of(v)] & bits::mask_of(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[bits::word_of(v)] |= bits::mask_of(v);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[bits::word_of(v)] &= !bits::mask_of(v);
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> BitIter<'_> {
        BitIter::new(&self.words)
    }

    pub fn as_words(&self) -> &[u64] {
        &self.words
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Removes every vertex whose bit is set in `row`.
    pub fn subtract_words(&mut self, row: &[u64]) {
        debug_assert_eq!(row.len(), self.words.len());
        for (w, r) in self.words.iter_mut().zip(row) {
            *w &= !r;
        }
    }

    /// Keeps only vertices whose bit is set in `row`.
    pub fn intersect_words(&mut self, row: &[u64]) {
        debug_assert_eq!(row.len(), self.words.len());
        for (w, r) in self.words.iter_mut().zip(row) {
            *w &= r;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.subtract_words(&other.words)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (w, r) in self.words.iter_mut().zip(&other.words) {
            *w |= r;
        }
    }

    pub fn intersection_size(&self, row: &[u64]) -> usize {
        bits::count_and(&self.words, row)
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// An immutable simple graph on vertices `0..n` with a bitset adjacency row
/// per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = bits::words_for(n);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            let row = g.row_mut(v);
            for w in row.iter_mut() {
                *w = u64::MAX;
            }
            if let Some(last) = row.last_mut() {
                *last &= bits::tail_mask(n);
            }
            row[bits::word_of(v)] &= !bits::mask_of(v);
        }
        g.edge_count = n * n.saturating_sub(1) / 2;
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.set_edge(u, v)?;
        }
        g.edge_count = g.count_edges();
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.row_mut(u)[bits::word_of(v)] |= bits::mask_of(v);
        self.row_mut(v)[bits::word_of(u)] |= bits::mask_of(u);
        Ok(())
    }

    fn count_edges(&self) -> usize {
        let total: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    pub(crate) fn row_mut(&mut self, v: usize) -> &mut [u64] {
        let s = self.stride;
        &mut self.rows[v * s..(v + 1) * s]
    }

    pub(crate) fn set_edge_count(&mut self, m: usize) {
        self.edge_count = m;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Adjacency row of `v` as a word slice (stride matches `VertexSet`).
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.row(u)[bits::word_of(v)] & bits::mask_of(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count_ones(self.row(v))
    }

    /// Degree of `v` counted within `set`.
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        bits::count_and(self.row(v), set.as_words())
    }

    pub fn neighbors(&self, v: usize) -> BitIter<'_> {
        BitIter::new(self.row(v))
    }

    /// Edges in ascending lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The complement graph: pairs adjacent iff non-adjacent here.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(n);
        let tail = bits::tail_mask(n);
        for v in 0..n {
            let src = self.row(v);
            let dst = g.row_mut(v);
            for (d, s) in dst.iter_mut().zip(src) {
                *d = !s;
            }
            if let Some(last) = dst.last_mut() {
                *last &= tail;
            }
            dst[bits::word_of(v)] &= !bits::mask_of(v);
        }
        g.edge_count = n * n.saturating_sub(1) / 2 - self.edge_count;
        g
    }

    /// Induced subgraph on `s`, relabeled by the ascending-order bijection.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.universe() != self.n {
            return Err(GraphError::UniverseMismatch {
                expected: self.n,
                got: s.universe(),
            });
        }
        let members: Vec<usize> = s.iter().collect();
        let k = members.len();
        let mut g = Graph::empty(k);
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.row_mut(i)[bits::word_of(j)] |= bits::mask_of(j);
                    g.row_mut(j)[bits::word_of(i)] |= bits::mask_of(i);
                }
            }
        }
        g.edge_count = g.count_edges();
        Ok(g)
    }

    /// Minimum-degree vertex of the induced subgraph on `s`, with its degree.
    /// Ties are broken by smallest vertex index.
    pub fn min_degree_vertex(&self, s: &VertexSet) -> Result<(usize, usize), GraphError> {
        if s.universe() != self.n {
            return Err(GraphError::UniverseMismatch {
                expected: self.n,
                got: s.universe(),
            });
        }
        let mut best: Option<(usize, usize)> = None;
        for v in s.iter() {
            let d = self.degree_in(v, s);
            match best {
                Some((_, bd)) if bd <= d => {}
                _ => best = Some((v, d)),
            }
        }
        best.ok_or(GraphError::EmptySubset)
    }
}

// ---------------------------------------------------------------------------
// DIMACS-like text format
// ---------------------------------------------------------------------------

/// Writes `p edge n m` followed by `e u v` lines with 1-based endpoints in
/// ascending lexicographic order.
pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

/// Parses the format emitted by [`write_dimacs`]. Comment lines starting with
/// `c` and blank lines are ignored; endpoints may appear in either order.
pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(GraphError::Parse {
                        line: lineno,
                        reason: "duplicate problem line".into(),
                    });
                }
                let kind = parts.next().unwrap_or("");
                if kind != "edge" {
                    return Err(GraphError::Parse {
                        line: lineno,
                        reason: format!("expected 'p edge', got 'p {kind}'"),
                    });
                }
                let n = parse_field(parts.next(), lineno, "vertex count")?;
                let m = parse_field(parts.next(), lineno, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or(GraphError::Parse {
                    line: lineno,
                    reason: "edge before problem line".into(),
                })?;
                let u: usize = parse_field(parts.next(), lineno, "endpoint")?;
                let v: usize = parse_field(parts.next(), lineno, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(GraphError::Parse {
                        line: lineno,
                        reason: format!("endpoint out of range 1..={n}"),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            Some(tok) => {
                return Err(GraphError::Parse {
                    line: lineno,
                    reason: format!("unknown line type {tok:?}"),
                })
            }
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse {
        line: 0,
        reason: "missing problem line".into(),
    })?;
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != m {
        return Err(GraphError::Parse {
            line: 0,
            reason: format!("header declares {m} edges, found {}", g.edge_count()),
        });
    }
    Ok(g)
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    field
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| GraphError::Parse {
            line,
            reason: format!("missing or invalid {what}"),
        })
}

// ---------------------------------------------------------------------------
// Small named graphs used across the test suites
// ---------------------------------------------------------------------------

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, edges).expect("cycle edges are valid")
}

/// Petersen graph: outer 5-cycle, inner 5-star, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for v in 0..5 {
        edges.push((v, (v + 1) % 5));
        edges.push((5 + v, 5 + (v + 2) % 5));
        edges.push((v, 5 + v));
    }
    Graph::from_edges(10, edges).expect("petersen edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{sample_gnp, SampleSpec};

    #[test]
    fn complete_graph_counts() {
        let g = Graph::complete(5);
        assert_eq!(g.edge_count(), 10);
        for v in 0..5 {
            assert_eq!(g.degree(v), 4);
            assert!(!g.has_edge(v, v));
        }
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Graph::complete(5).complement();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let g = Graph::empty(4).complement();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        // C5's complement is the pentagram, again a 5-cycle: check degrees and
        // that complementing twice restores the original.
        let c5 = cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        for v in 0..5 {
            assert_eq!(comp.degree(v), 2);
        }
        // 2-regular connected on 5 vertices is a 5-cycle.
        let mut seen = vec![false; 5];
        let mut v = 0;
        let mut prev = usize::MAX;
        for _ in 0..5 {
            seen[v] = true;
            let next = comp.neighbors(v).find(|&u| u != prev).unwrap();
            prev = v;
            v = next;
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(v, 0);
    }

    #[test]
    fn double_complement_is_identity() {
        for seed in 0..20u64 {
            let spec = SampleSpec::new(23, 0.4, seed, 0).unwrap();
            let g = sample_gnp(&spec);
            assert_eq!(g.complement().complement(), g);
            assert_eq!(
                g.edge_count() + g.complement().edge_count(),
                23 * 22 / 2
            );
        }
    }

    #[test]
    fn induced_subgraph_empty_and_clique() {
        let g = Graph::complete(5);
        let empty = VertexSet::empty(5);
        assert_eq!(g.induced_subgraph(&empty).unwrap().n(), 0);
        let tri = VertexSet::from_members(5, [0, 2, 4]).unwrap();
        let sub = g.induced_subgraph(&tri).unwrap();
        assert_eq!(sub, Graph::complete(3));
    }

    #[test]
    fn induced_subgraph_matches_pairwise_filter() {
        let spec = SampleSpec::new(12, 0.5, 99, 0).unwrap();
        let g = sample_gnp(&spec);
        let members = [1usize, 2, 5, 7, 8, 11];
        let s = VertexSet::from_members(12, members).unwrap();
        let sub = g.induced_subgraph(&s).unwrap();
        // Brute-force filter of the edge list under the ascending relabeling.
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                assert_eq!(sub.has_edge(i, j), g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn induced_on_full_set_is_identity() {
        let spec = SampleSpec::new(17, 0.3, 5, 0).unwrap();
        let g = sample_gnp(&spec);
        assert_eq!(g.induced_subgraph(&VertexSet::full(17)).unwrap(), g);
    }

    #[test]
    fn min_degree_vertex_tie_break_and_star() {
        let k4 = Graph::complete(4);
        assert_eq!(
            k4.min_degree_vertex(&VertexSet::full(4)).unwrap(),
            (0, 3)
        );
        // Star K_{1,4}: center 0, leaves 1..=4.
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        let (v, d) = star.min_degree_vertex(&VertexSet::full(5)).unwrap();
        assert_eq!((v, d), (1, 1));
    }

    #[test]
    fn min_degree_vertex_matches_exhaustive_scan() {
        let spec = SampleSpec::new(15, 0.4, 7, 0).unwrap();
        let g = sample_gnp(&spec);
        let full = VertexSet::full(15);
        let (v, d) = g.min_degree_vertex(&full).unwrap();
        let degrees: Vec<usize> = (0..15).map(|u| g.degree(u)).collect();
        let best = *degrees.iter().min().unwrap();
        assert_eq!(d, best);
        assert_eq!(v, degrees.iter().position(|&x| x == best).unwrap());
    }

    #[test]
    fn min_degree_vertex_rejects_empty() {
        let g = Graph::complete(3);
        assert_eq!(
            g.min_degree_vertex(&VertexSet::empty(3)),
            Err(GraphError::EmptySubset)
        );
    }

    #[test]
    fn dimacs_round_trip_is_bit_exact() {
        let spec = SampleSpec::new(14, 0.35, 3, 0).unwrap();
        let g = sample_gnp(&spec);
        let mut buf = Vec::new();
        write_dimacs(&g, &mut buf).unwrap();
        let parsed = read_dimacs(buf.as_slice()).unwrap();
        assert_eq!(parsed, g);
        let mut buf2 = Vec::new();
        write_dimacs(&parsed, &mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }

    #[test]
    fn dimacs_rejects_bad_input() {
        assert!(matches!(
            read_dimacs("e 1 2\n".as_bytes()),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            read_dimacs("p edge 3 1\ne 1 4\n".as_bytes()),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            read_dimacs("p edge 3 2\ne 1 2\n".as_bytes()),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            read_dimacs("p edge 3 1\ne 2 2\n".as_bytes()),
            Err(GraphError::SelfLoop { .. })
        ));
    }

    #[test]
    fn dimacs_accepts_comments_and_reversed_endpoints() {
        let text = "c a comment\n\np edge 3 2\ne 2 1\ne 3 2\n";
        let g = read_dimacs(text.as_bytes()).unwrap();
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 2));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn vertex_set_iteration_is_ascending() {
        let s = VertexSet::from_members(100, [70, 3, 65, 3, 0]).unwrap();
        let got: Vec<usize> = s.iter().collect();
        assert_eq!(got, vec![0, 3, 65, 70]);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        for v in 0..10 {
            assert_eq!(g.degree(v), 3);
        }
    }
}
