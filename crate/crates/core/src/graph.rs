//! Dense representations of oriented graphs and tournaments on at most 64
//! vertices.
//!
//! Adjacency is stored as one out-neighbor bitmask per vertex, which makes
//! neighborhood intersections single word operations. All types are
//! immutable once built (construction goes through `&mut` builders such as
//! [`OrientedGraph::add_edge`]) and safe to share across threads.

use std::fmt;
use std::ops::Deref;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Hard cap on vertex counts: adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..=64")]
    BadOrder(usize),
    #[error("vertex {0} out of range")]
    VertexRange(usize),
    #[error("wire text has length {got}, expected {expected} for n = {n}")]
    WireLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("wire text has byte {byte:#04x} at offset {offset}; only '0' and '1' are allowed")]
    WireChar { offset: usize, byte: u8 },
    #[error("pair ({u}, {v}) has no edge; graph is not a tournament")]
    MissingEdge { u: usize, v: usize },
    #[error("cannot orient pair ({u}, {v}): self-loop or already oriented")]
    BadEdge { u: usize, v: usize },
    #[error("blow-up needs one size per vertex: got {got} sizes for {n} vertices")]
    SizeCount { n: usize, got: usize },
    #[error("blow-up class {0} has size zero")]
    EmptyClass(usize),
    #[error("total blow-up size {0} exceeds 64")]
    SizeOverflow(usize),
    #[error("vertex {t} is not adjacent to {anchor}")]
    NotAdjacent { anchor: usize, t: usize },
}

/// A set of vertex indices packed into a `u64` bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut s = 0u64;
        for v in vs {
            debug_assert!(v < MAX_VERTICES);
            s |= 1 << v;
        }
        VertexSet(s)
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

/// Iterator over set bits in ascending order.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Orientation policy for the inside of a blown-up vertex class.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum InnerPolicy {
    /// No edges inside the class.
    Independent,
    /// Complete acyclic orientation: lower index beats higher index.
    Transitive,
    /// Complete orientation drawn from a seeded RNG.
    SeededRandom(u64),
}

/// Per-vertex and minimum degree statistics.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeReport {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    pub total_degrees: Vec<usize>,
    /// Minimum out-degree over all vertices.
    pub min_out: usize,
    /// Minimum in-degree over all vertices.
    pub min_in: usize,
    /// Minimum semidegree: `min(min_out, min_in)`.
    pub min_semi: usize,
    /// Minimum total degree.
    pub min_total: usize,
}

/// The four-way partition of a set by edge directions from two anchors.
///
/// A vertex `t` lands in the part whose first sign gives the direction of
/// the `x`-`t` edge as seen from `x` (`+` when `x -> t`) and whose second
/// sign does the same for `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodSplit {
    pub pp: VertexSet,
    pub pm: VertexSet,
    pub mp: VertexSet,
    pub mm: VertexSet,
}

impl NeighborhoodSplit {
    pub fn parts(&self) -> [VertexSet; 4] {
        [self.pp, self.pm, self.mp, self.mm]
    }

    pub fn sizes(&self) -> [usize; 4] {
        [self.pp.len(), self.pm.len(), self.mp.len(), self.mm.len()]
    }
}

/// An oriented graph: irreflexive, with at most one directed edge per pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    n: usize,
    out: Vec<u64>,
}

impl OrientedGraph {
    /// An edgeless graph on `n` vertices (`1 <= n <= 64`).
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        Ok(OrientedGraph { n, out: vec![0; n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_mask(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Adds the directed edge `u -> v`. The pair must be unoriented so far.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexRange(u));
        }
        if v >= self.n {
            return Err(GraphError::VertexRange(v));
        }
        if u == v || self.adjacent(u, v) {
            return Err(GraphError::BadEdge { u, v });
        }
        self.out[u] |= 1 << v;
        Ok(())
    }

    /// True iff the directed edge `u -> v` is present.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] >> v & 1 == 1
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet(self.out[v])
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    /// In-neighbors of `v`, computed from the out rows.
    pub fn in_set(&self, v: usize) -> VertexSet {
        let mut m = 0u64;
        for u in 0..self.n {
            m |= (self.out[u] >> v & 1) << u;
        }
        VertexSet(m)
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All directed edges in `(source, target)` form.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut es = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.out[u]).iter() {
                es.push((u, v));
            }
        }
        es
    }

    /// The graph with every edge direction flipped.
    pub fn reverse(&self) -> Self {
        let mut rev = OrientedGraph {
            n: self.n,
            out: vec![0; self.n],
        };
        for u in 0..self.n {
            for v in VertexSet(self.out[u]).iter() {
                rev.out[v] |= 1 << u;
            }
        }
        rev
    }

    /// Subgraph induced on `set`, vertices renumbered in ascending order.
    /// The returned map sends new indices to the original vertex labels.
    pub fn induced_with_map(&self, set: VertexSet) -> (Self, Vec<usize>) {
        let map = set.to_vec();
        let m = map.len();
        let mut g = OrientedGraph {
            n: m,
            out: vec![0; m],
        };
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.out[i] |= 1 << j;
                }
            }
        }
        (g, map)
    }

    pub fn induced(&self, set: VertexSet) -> Self {
        self.induced_with_map(set).0
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the subgraph induced on `s` is a transitive tournament.
    ///
    /// Uses the out-degree criterion: a set of size `s` induces a transitive
    /// tournament iff the internal out-degrees are pairwise distinct and
    /// below `s` (their sum then forces completeness, and a tournament with
    /// distinct out-degrees is acyclic). Empty and singleton sets qualify.
    pub fn induces_transitive(&self, s: VertexSet) -> bool {
        debug_assert!(s.is_subset_of(self.vertex_mask()));
        let size = s.len();
        if size <= 1 {
            return true;
        }
        let mut seen: u64 = 0;
        for v in s.iter() {
            let d = (self.out[v] & s.0).count_ones() as usize;
            if d >= size || seen >> d & 1 == 1 {
                return false;
            }
            seen |= 1 << d;
        }
        true
    }

    /// All `k`-subsets inducing a transitive tournament, in ascending
    /// bitmask order.
    ///
    /// Every transitive set is found exactly once through its unique
    /// domination order: a chain `v1 -> v2 -> ...` where each new vertex is
    /// dominated by all previous ones.
    pub fn transitive_copies(&self, k: usize) -> Vec<VertexSet> {
        assert!(k >= 1, "copy size must be at least 1");
        let mut acc = Vec::new();
        if k <= self.n {
            self.chains(self.vertex_mask().0, k, 0, &mut acc);
        }
        acc.sort_unstable();
        acc
    }

    fn chains(&self, allowed: u64, remaining: usize, cur: u64, acc: &mut Vec<VertexSet>) {
        if remaining == 0 {
            acc.push(VertexSet(cur));
            return;
        }
        if (allowed.count_ones() as usize) < remaining {
            return;
        }
        let mut m = allowed;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            self.chains(allowed & self.out[v], remaining - 1, cur | 1 << v, acc);
        }
    }

    /// True iff the graph contains a transitive tournament on `k` vertices.
    /// Short-circuits on the first copy.
    pub fn contains_transitive(&self, k: usize) -> bool {
        assert!(k >= 1, "copy size must be at least 1");
        k <= self.n && self.has_chain(self.vertex_mask().0, k)
    }

    fn has_chain(&self, allowed: u64, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        if (allowed.count_ones() as usize) < remaining {
            return false;
        }
        let mut m = allowed;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.has_chain(allowed & self.out[v], remaining - 1) {
                return true;
            }
        }
        false
    }

    /// First transitive `k`-set inside `within`, if any, in domination-chain
    /// search order.
    pub fn first_transitive_within(&self, within: VertexSet, k: usize) -> Option<VertexSet> {
        assert!(k >= 1);
        self.first_chain(within.0, k, 0)
    }

    fn first_chain(&self, allowed: u64, remaining: usize, cur: u64) -> Option<VertexSet> {
        if remaining == 0 {
            return Some(VertexSet(cur));
        }
        if (allowed.count_ones() as usize) < remaining {
            return None;
        }
        let mut m = allowed;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if let Some(found) =
                self.first_chain(allowed & self.out[v], remaining - 1, cur | 1 << v)
            {
                return Some(found);
            }
        }
        None
    }

    /// Replaces vertex `i` by a class of `sizes[i]` vertices. Edges between
    /// classes inherit the base orientation; edges inside a class follow
    /// `inner`. Classes occupy contiguous index ranges in input order.
    pub fn blow_up(
        &self,
        sizes: &[usize],
        inner: InnerPolicy,
    ) -> Result<OrientedGraph, GraphError> {
        if sizes.len() != self.n {
            return Err(GraphError::SizeCount {
                n: self.n,
                got: sizes.len(),
            });
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::EmptyClass(i));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(GraphError::SizeOverflow(total));
        }
        let mut offsets = Vec::with_capacity(self.n);
        let mut acc = 0;
        for &s in sizes {
            offsets.push(acc);
            acc += s;
        }
        let mut g = OrientedGraph::empty(total)?;
        for u in 0..self.n {
            for v in VertexSet(self.out[u]).iter() {
                for a in offsets[u]..offsets[u] + sizes[u] {
                    for b in offsets[v]..offsets[v] + sizes[v] {
                        g.add_edge(a, b)?;
                    }
                }
            }
        }
        let mut rng = match inner {
            InnerPolicy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        for i in 0..self.n {
            let class = VertexSet::from_iter(offsets[i]..offsets[i] + sizes[i]);
            g.orient_clique_inner(class, inner, rng.as_mut())?;
        }
        Ok(g)
    }

    /// Turns `set` into a clique oriented by `policy`. All pairs inside
    /// `set` must be unoriented beforehand.
    pub fn orient_clique(&mut self, set: VertexSet, policy: InnerPolicy) -> Result<(), GraphError> {
        let mut rng = match policy {
            InnerPolicy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        self.orient_clique_inner(set, policy, rng.as_mut())
    }

    fn orient_clique_inner(
        &mut self,
        set: VertexSet,
        policy: InnerPolicy,
        rng: Option<&mut ChaCha8Rng>,
    ) -> Result<(), GraphError> {
        if matches!(policy, InnerPolicy::Independent) {
            return Ok(());
        }
        let vs = set.to_vec();
        let mut rng = rng;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let forward = match policy {
                    InnerPolicy::Independent => unreachable!(),
                    InnerPolicy::Transitive => true,
                    InnerPolicy::SeededRandom(_) => rng
                        .as_mut()
                        .expect("seeded policy carries an RNG")
                        .gen_bool(0.5),
                };
                if forward {
                    self.add_edge(vs[i], vs[j])?;
                } else {
                    self.add_edge(vs[j], vs[i])?;
                }
            }
        }
        Ok(())
    }

    pub fn degree_report(&self) -> DegreeReport {
        let out_degrees: Vec<usize> = (0..self.n).map(|v| self.out_degree(v)).collect();
        let in_degrees: Vec<usize> = (0..self.n).map(|v| self.in_set(v).len()).collect();
        let total_degrees: Vec<usize> = (0..self.n)
            .map(|v| out_degrees[v] + in_degrees[v])
            .collect();
        let min_out = out_degrees.iter().copied().min().unwrap_or(0);
        let min_in = in_degrees.iter().copied().min().unwrap_or(0);
        let min_total = total_degrees.iter().copied().min().unwrap_or(0);
        DegreeReport {
            out_degrees,
            in_degrees,
            total_degrees,
            min_out,
            min_in,
            min_semi: min_out.min(min_in),
            min_total,
        }
    }

    /// Partitions `t` by the directions of the `x`-`t` and `y`-`t` edges.
    /// Every member of `t` must be adjacent to both anchors; the `x`-`y`
    /// pair itself is not consulted.
    pub fn split_neighborhoods(
        &self,
        x: usize,
        y: usize,
        t: VertexSet,
    ) -> Result<NeighborhoodSplit, GraphError> {
        if x >= self.n {
            return Err(GraphError::VertexRange(x));
        }
        if y >= self.n {
            return Err(GraphError::VertexRange(y));
        }
        let mut split = NeighborhoodSplit {
            pp: VertexSet::EMPTY,
            pm: VertexSet::EMPTY,
            mp: VertexSet::EMPTY,
            mm: VertexSet::EMPTY,
        };
        for v in t.iter() {
            if v >= self.n {
                return Err(GraphError::VertexRange(v));
            }
            if !self.adjacent(x, v) {
                return Err(GraphError::NotAdjacent { anchor: x, t: v });
            }
            if !self.adjacent(y, v) {
                return Err(GraphError::NotAdjacent { anchor: y, t: v });
            }
            let from_x = self.has_edge(x, v);
            let from_y = self.has_edge(y, v);
            let part = match (from_x, from_y) {
                (true, true) => &mut split.pp,
                (true, false) => &mut split.pm,
                (false, true) => &mut split.mp,
                (false, false) => &mut split.mm,
            };
            *part = part.with(v);
        }
        Ok(split)
    }

    /// Upper-triangle wire encoding; errors when some pair is unoriented.
    pub fn to_upper_triangle(&self) -> Result<String, GraphError> {
        let mut s = String::with_capacity(self.n * (self.n - 1) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    s.push('1');
                } else if self.has_edge(v, u) {
                    s.push('0');
                } else {
                    return Err(GraphError::MissingEdge { u, v });
                }
            }
        }
        Ok(s)
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A complete oriented graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament(OrientedGraph);

impl Tournament {
    /// Validates completeness and wraps the graph.
    pub fn try_from_graph(g: OrientedGraph) -> Result<Self, GraphError> {
        for u in 0..g.n {
            for v in u + 1..g.n {
                if !g.adjacent(u, v) {
                    return Err(GraphError::MissingEdge { u, v });
                }
            }
        }
        Ok(Tournament(g))
    }

    /// Decodes the upper-triangle wire format: `n(n-1)/2` characters, bit
    /// order `a(1,2) a(1,3) .. a(1,n) a(2,3) .. a(n-1,n)`, where a `'1'`
    /// orients the pair from the lower-indexed vertex to the higher one.
    pub fn from_upper_triangle(text: &str, n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let expected = n * (n - 1) / 2;
        let bytes = text.as_bytes();
        if bytes.len() != expected {
            return Err(GraphError::WireLength {
                n,
                expected,
                got: bytes.len(),
            });
        }
        for (offset, &b) in bytes.iter().enumerate() {
            if b != b'0' && b != b'1' {
                return Err(GraphError::WireChar { offset, byte: b });
            }
        }
        Ok(Self::from_pair_bits(n, |idx| bytes[idx] == b'1'))
    }

    /// Builds a tournament from a predicate over upper-triangle pair
    /// indices (same order as the wire format).
    pub(crate) fn from_pair_bits(n: usize, forward: impl Fn(usize) -> bool) -> Self {
        let mut g = OrientedGraph::empty(n).expect("order validated by caller");
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                if forward(idx) {
                    g.out[u] |= 1 << v;
                } else {
                    g.out[v] |= 1 << u;
                }
                idx += 1;
            }
        }
        Tournament(g)
    }

    pub fn to_upper_triangle(&self) -> String {
        self.0
            .to_upper_triangle()
            .expect("tournaments are complete")
    }

    /// The transitive tournament: `i -> j` whenever `i < j`.
    pub fn transitive(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        Ok(Self::from_pair_bits(n, |_| true))
    }

    /// The cyclic triangle `0 -> 1 -> 2 -> 0`.
    pub fn cyclic_triangle() -> Self {
        // a(1,2)=1, a(1,3)=0, a(2,3)=1
        Self::from_pair_bits(3, |idx| idx != 1)
    }

    /// A deterministic batch of uniformly random labeled tournaments.
    pub fn seeded_batch(n: usize, count: usize, seed: u64) -> Result<Vec<Self>, GraphError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| Self::random(n, &mut rng)).collect()
    }

    /// A uniformly random labeled tournament.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for _ in 0..n * (n - 1) / 2 {
            bits.push(rng.gen_bool(0.5));
        }
        Ok(Self::from_pair_bits(n, |idx| bits[idx]))
    }

    /// Relabels vertices: `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = OrientedGraph::empty(self.n()).expect("same order");
        for u in 0..self.n() {
            for v in VertexSet(self.0.out[u]).iter() {
                g.out[perm[u]] |= 1 << perm[v];
            }
        }
        Tournament(g)
    }

    /// Removes one vertex, shifting higher labels down by one.
    pub fn delete_vertex(&self, v: usize) -> Tournament {
        debug_assert!(v < self.n() && self.n() > 1);
        let set = self.vertex_mask().without(v);
        Tournament(self.0.induced(set))
    }

    /// Appends a vertex whose out-neighborhood among the existing vertices
    /// is `beats`.
    pub fn extend(&self, beats: VertexSet) -> Result<Tournament, GraphError> {
        let n = self.n();
        if n + 1 > MAX_VERTICES {
            return Err(GraphError::BadOrder(n + 1));
        }
        debug_assert!(beats.is_subset_of(self.vertex_mask()));
        let mut g = OrientedGraph::empty(n + 1)?;
        g.out[..n].copy_from_slice(&self.0.out);
        g.out[n] = beats.0;
        for u in 0..n {
            if !beats.contains(u) {
                g.out[u] |= 1 << n;
            }
        }
        Ok(Tournament(g))
    }

    pub fn as_graph(&self) -> &OrientedGraph {
        &self.0
    }

    pub fn into_graph(self) -> OrientedGraph {
        self.0
    }
}

impl Deref for Tournament {
    type Target = OrientedGraph;

    fn deref(&self) -> &OrientedGraph {
        &self.0
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Tournament(n={}, \"{}\")",
            self.n(),
            self.to_upper_triangle()
        )
    }
}
