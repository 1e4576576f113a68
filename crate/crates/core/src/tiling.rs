//! Exact integral tilings by transitive tournaments.
//!
//! The perfect-tiling decision runs over the lattice of covered vertex
//! sets: always cover the lowest-indexed uncovered vertex, memoizing failed
//! states. Up to 24 vertices the memo is a dense bit array over all `2^n`
//! states; beyond that the pivot switches to the uncovered vertex with the
//! fewest available copies and the memo to a hash set. Maximum tilings use
//! branch and bound, pruned at the root by the floor of the fractional
//! optimum.

use std::collections::HashSet;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::exec::{self, Parallelism};
use crate::fractional::{self, TilingHypergraph};
use crate::graph::{GraphError, OrientedGraph, Tournament, VertexSet};
use crate::iso;
use crate::rational::{self, Rational};

#[derive(Debug, Error)]
pub enum TilingError {
    #[error("k = {k} does not divide n = {n}")]
    Divisibility { k: usize, n: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("linking sets need |T| = 11, got {0}")]
    LinkingSize(usize),
    #[error("anchors must be two distinct vertices outside T")]
    LinkingAnchors,
    #[error("linking hypothesis violated: {0}")]
    LinkingHypothesis(GraphError),
    #[error(
        "no linking set found; the hypotheses guarantee one, so this input or \
         implementation is broken"
    )]
    LinkingNotFound,
    #[error("line {line}: {error}")]
    Parse { line: usize, error: GraphError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Iso(#[from] iso::IsoError),
}

/// A collection of pairwise disjoint transitive `k`-sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TilingWitness {
    pub k: usize,
    pub parts: Vec<VertexSet>,
}

impl TilingWitness {
    pub fn covered(&self) -> VertexSet {
        self.parts
            .iter()
            .fold(VertexSet::EMPTY, |acc, p| acc.union(*p))
    }

    pub fn is_perfect_for(&self, g: &OrientedGraph) -> bool {
        self.covered() == g.vertex_mask() && self.parts.len() * self.k == g.n()
    }
}

/// Validates a witness against its host graph: parts of size `k`, pairwise
/// disjoint, each inducing a transitive tournament.
pub fn verify_tiling(g: &OrientedGraph, witness: &TilingWitness) -> bool {
    let mut covered = VertexSet::EMPTY;
    for part in &witness.parts {
        if part.len() != witness.k
            || !part.is_subset_of(g.vertex_mask())
            || !covered.is_disjoint(*part)
            || !g.induces_transitive(*part)
        {
            return false;
        }
        covered = covered.union(*part);
    }
    true
}

/// Decides whether the vertex set partitions into transitive `k`-sets,
/// returning a witness when it does.
pub fn has_perfect_tiling(
    g: &OrientedGraph,
    k: usize,
) -> Result<Option<TilingWitness>, TilingError> {
    if k == 0 {
        return Err(TilingError::ZeroK);
    }
    let n = g.n();
    if !n.is_multiple_of(k) {
        return Err(TilingError::Divisibility { k, n });
    }
    let copies = g.transitive_copies(k);
    let mut by_min: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut containing: Vec<Vec<u64>> = vec![Vec::new(); n];
    for c in &copies {
        by_min[c.lowest().expect("k >= 1")].push(c.0);
        for v in c.iter() {
            containing[v].push(c.0);
        }
    }
    let full = g.vertex_mask().0;
    let mut parts: Vec<u64> = Vec::with_capacity(n / k);
    let found = if n <= 24 {
        let mut failed = vec![0u64; (1usize << n).div_ceil(64)];
        search_low(full, &by_min, &mut failed, &mut parts)
    } else {
        let mut failed = HashSet::new();
        search_least_candidates(full, &containing, &mut failed, &mut parts)
    };
    if !found {
        return Ok(None);
    }
    parts.reverse();
    let witness = TilingWitness {
        k,
        parts: parts.into_iter().map(VertexSet).collect(),
    };
    debug_assert!(verify_tiling(g, &witness) && witness.is_perfect_for(g));
    Ok(Some(witness))
}

/// Lowest-uncovered-vertex pivot with a dense failed-state memo.
fn search_low(
    remaining: u64,
    by_min: &[Vec<u64>],
    failed: &mut [u64],
    parts: &mut Vec<u64>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    let state = remaining as usize;
    if failed[state >> 6] >> (state & 63) & 1 == 1 {
        return false;
    }
    let v = remaining.trailing_zeros() as usize;
    for &c in &by_min[v] {
        if c & !remaining == 0 && search_low(remaining & !c, by_min, failed, parts) {
            parts.push(c);
            return true;
        }
    }
    failed[state >> 6] |= 1 << (state & 63);
    false
}

/// Fewest-available-copies pivot with a hashed failed-state memo.
fn search_least_candidates(
    remaining: u64,
    containing: &[Vec<u64>],
    failed: &mut HashSet<u64>,
    parts: &mut Vec<u64>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    if failed.contains(&remaining) {
        return false;
    }
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    let mut m = remaining;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let avail = containing[v]
            .iter()
            .filter(|&&c| c & !remaining == 0)
            .count();
        if avail < best {
            best = avail;
            pivot = v;
            if best == 0 {
                break;
            }
        }
    }
    for &c in &containing[pivot] {
        if c & !remaining == 0 && search_least_candidates(remaining & !c, containing, failed, parts)
        {
            parts.push(c);
            return true;
        }
    }
    failed.insert(remaining);
    false
}

/// Maximum number of disjoint transitive `k`-sets, with a witness.
///
/// Branch and bound over vertices in index order: the lowest undecided
/// vertex is either covered by one of its copies or skipped. The incumbent
/// is bounded above by the floor of the fractional optimum, computed once
/// at the root; inside the tree the bound is the remaining vertex budget.
pub fn max_tiling(g: &OrientedGraph, k: usize) -> Result<(usize, TilingWitness), TilingError> {
    if k == 0 {
        return Err(TilingError::ZeroK);
    }
    let n = g.n();
    let copies = g.transitive_copies(k);
    let mut by_min: Vec<Vec<u64>> = vec![Vec::new(); n];
    for c in &copies {
        by_min[c.lowest().expect("k >= 1")].push(c.0);
    }
    let h = TilingHypergraph::from_graph(g, k);
    let (frac, _) = fractional::nu_star(&h);
    let ub = rational::floor_i64(&frac) as usize;

    let mut state = MaxSearch {
        by_min,
        k,
        n,
        best: 0,
        best_parts: Vec::new(),
        ub,
    };
    state.run(0, 0, &mut Vec::new());
    let witness = TilingWitness {
        k,
        parts: state.best_parts.into_iter().map(VertexSet).collect(),
    };
    debug_assert!(verify_tiling(g, &witness));
    Ok((state.best, witness))
}

struct MaxSearch {
    by_min: Vec<Vec<u64>>,
    k: usize,
    n: usize,
    best: usize,
    best_parts: Vec<u64>,
    ub: usize,
}

impl MaxSearch {
    /// Returns true when the proven upper bound has been reached and the
    /// whole search can stop.
    fn run(&mut self, from: usize, covered: u64, chosen: &mut Vec<u64>) -> bool {
        if chosen.len() > self.best {
            self.best = chosen.len();
            self.best_parts = chosen.clone();
        }
        if self.best >= self.ub {
            return true;
        }
        let mut v = from;
        while v < self.n && covered >> v & 1 == 1 {
            v += 1;
        }
        if v == self.n {
            return false;
        }
        let undecided = (self.n - v) - (covered >> v).count_ones() as usize;
        if chosen.len() + undecided / self.k <= self.best {
            return false;
        }
        let candidates: Vec<u64> = self.by_min[v]
            .iter()
            .copied()
            .filter(|&c| c & covered == 0)
            .collect();
        for c in candidates {
            chosen.push(c);
            let stop = self.run(v + 1, covered | c, chosen);
            chosen.pop();
            if stop {
                return true;
            }
        }
        self.run(v + 1, covered, chosen)
    }
}

/// Perfect tiling of the subgraph induced on `set`, with parts mapped back
/// to the host graph's labels.
pub fn tile_subset(
    g: &OrientedGraph,
    set: VertexSet,
    k: usize,
) -> Result<Option<TilingWitness>, TilingError> {
    let (sub, map) = g.induced_with_map(set);
    let tiled = has_perfect_tiling(&sub, k)?;
    Ok(tiled.map(|w| TilingWitness {
        k,
        parts: w
            .parts
            .into_iter()
            .map(|p| VertexSet::from_iter(p.iter().map(|i| map[i])))
            .collect(),
    }))
}

/// A set `Z` such that both anchor extensions `{x} u Z` and `{y} u Z` have
/// perfect tilings by transitive 4-sets, certified by stored witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct LinkingSet {
    pub z: VertexSet,
    pub x_witness: TilingWitness,
    pub y_witness: TilingWitness,
}

/// Finds a linking set of size 7 inside an 11-set `t` whose members are
/// all adjacent to both anchors (the two anchor extensions must induce
/// tournaments on 12 vertices; the `x`-`y` pair itself is irrelevant).
///
/// The search tries all 3-subsets first: a transitive 3-set pairing with
/// both anchors extends to size 7 by any disjoint transitive 4-set inside
/// the remaining 8 = r(4) members. Only then does it fall back to testing
/// all 7-subsets directly. The hypotheses guarantee a hit, so exhausting
/// both stages reports a contract breach rather than a value.
pub fn find_linking_set(
    g: &OrientedGraph,
    x: usize,
    y: usize,
    t: VertexSet,
) -> Result<LinkingSet, TilingError> {
    if t.len() != 11 {
        return Err(TilingError::LinkingSize(t.len()));
    }
    if x == y || t.contains(x) || t.contains(y) || x >= g.n() || y >= g.n() {
        return Err(TilingError::LinkingAnchors);
    }
    // Hypothesis: {x} u T and {y} u T induce tournaments.
    for anchor in [x, y] {
        for v in t.iter() {
            if !g.adjacent(anchor, v) {
                return Err(TilingError::LinkingHypothesis(GraphError::NotAdjacent {
                    anchor,
                    t: v,
                }));
            }
        }
    }
    let members = t.to_vec();
    for u in 0..members.len() {
        for v in u + 1..members.len() {
            if !g.adjacent(members[u], members[v]) {
                return Err(TilingError::LinkingHypothesis(GraphError::MissingEdge {
                    u: members[u],
                    v: members[v],
                }));
            }
        }
    }

    // Stage one: transitive 3-sets extending through both anchors.
    for z3 in k_subsets(&members, 3) {
        if g.induces_transitive(z3.with(x)) && g.induces_transitive(z3.with(y)) {
            let rest = t.minus(z3);
            let extra = g
                .first_transitive_within(rest, 4)
                .expect("8 tournament vertices contain a transitive 4-set");
            let z = z3.union(extra);
            let x_witness = TilingWitness {
                k: 4,
                parts: vec![z3.with(x), extra],
            };
            let y_witness = TilingWitness {
                k: 4,
                parts: vec![z3.with(y), extra],
            };
            debug_assert!(verify_tiling(g, &x_witness) && verify_tiling(g, &y_witness));
            return Ok(LinkingSet {
                z,
                x_witness,
                y_witness,
            });
        }
    }
    // Stage two: all 7-subsets.
    for z in k_subsets(&members, 7) {
        if let Some(x_witness) = tile_subset(g, z.with(x), 4)? {
            if let Some(y_witness) = tile_subset(g, z.with(y), 4)? {
                return Ok(LinkingSet {
                    z,
                    x_witness,
                    y_witness,
                });
            }
        }
    }
    Err(TilingError::LinkingNotFound)
}

/// All `k`-subsets of `items` as vertex sets, in lexicographic order of the
/// chosen index tuples.
fn k_subsets(items: &[usize], k: usize) -> Vec<VertexSet> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(VertexSet::EMPTY);
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(VertexSet::from_iter(idx.iter().map(|&i| items[i])));
        // Advance the rightmost index that still has room.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Per-line outcome of a catalog file verification.
#[derive(Clone, Debug, Serialize)]
pub struct AppendixLine {
    /// 1-based line number in the input file.
    pub line: usize,
    pub parse_error: Option<String>,
    /// True iff the tournament has no perfect tiling by transitive 4-sets.
    pub untileable: Option<bool>,
    /// Exact fractional matching optimum for k = 4.
    #[serde(with = "rational::serde_pq_opt")]
    pub nu_star_4: Option<Rational>,
}

/// Aggregate result of verifying a 12-vertex catalog file.
#[derive(Clone, Debug, Serialize)]
pub struct AppendixReport {
    /// Number of successfully parsed tournaments.
    pub count: usize,
    pub all_untileable: bool,
    pub pairwise_nonisomorphic: bool,
    pub first_collision: Option<(usize, usize)>,
    pub entries: Vec<AppendixLine>,
}

/// Parses a file in the upper-triangle wire format (n = 12, one tournament
/// per line, blank lines skipped) and checks that every entry has no
/// perfect tiling by transitive 4-sets, that entries are pairwise
/// non-isomorphic, and records each entry's exact fractional optimum.
pub fn verify_appendix(path: &Path) -> Result<AppendixReport, TilingError> {
    let text = std::fs::read_to_string(path)?;
    verify_appendix_text(&text)
}

pub fn verify_appendix_text(text: &str) -> Result<AppendixReport, TilingError> {
    let numbered: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let entries: Vec<(AppendixLine, Option<Tournament>)> =
        exec::map(Parallelism::Auto, &numbered, |&(line, text)| {
            match Tournament::from_upper_triangle(text, 12) {
                Err(e) => (
                    AppendixLine {
                        line,
                        parse_error: Some(e.to_string()),
                        untileable: None,
                        nu_star_4: None,
                    },
                    None,
                ),
                Ok(t) => {
                    let untileable = has_perfect_tiling(t.as_graph(), 4)
                        .expect("12 is divisible by 4")
                        .is_none();
                    let h = TilingHypergraph::from_graph(t.as_graph(), 4);
                    let (nu, _) = fractional::nu_star(&h);
                    (
                        AppendixLine {
                            line,
                            parse_error: None,
                            untileable: Some(untileable),
                            nu_star_4: Some(nu),
                        },
                        Some(t),
                    )
                }
            }
        });
    let parsed: Vec<Tournament> = entries.iter().filter_map(|(_, t)| t.clone()).collect();
    let distinct = iso::pairwise_distinct(&parsed)?;
    Ok(AppendixReport {
        count: parsed.len(),
        all_untileable: entries.iter().all(|(e, _)| e.untileable == Some(true)),
        pairwise_nonisomorphic: distinct.all_distinct,
        first_collision: distinct.first_collision,
        entries: entries.into_iter().map(|(e, _)| e).collect(),
    })
}
