//! Exact-rational linear programming over the tiling hypergraph.
//!
//! For an oriented graph `G` and order `k`, the tiling hypergraph has the
//! vertices of `G` and one `k`-edge per vertex set inducing a transitive
//! tournament. Its fractional matching and cover optima (`nu*`, `tau*`)
//! coincide by LP duality; this module computes them exactly and returns
//! primal-dual certificates whose feasibility, value equality and
//! complementary slackness are re-verified by independent arithmetic after
//! every solve.

use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{self, RamseyTable};
use crate::exec::{self, Parallelism};
use crate::graph::{OrientedGraph, Tournament, VertexSet};
use crate::rational::{self, int, ratio, Rational};
use crate::simplex;

use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FracError {
    #[error("edge {0:?} does not have the declared uniformity {1}")]
    BadEdgeSize(VertexSet, usize),
    #[error("edge {0:?} leaves the vertex range 0..{1}")]
    EdgeRange(VertexSet, usize),
    #[error("vertex {0} out of range")]
    VertexRange(usize),
    #[error("the lower-bound check is search-verified only for k = 4, got {0}")]
    CheckRange(usize),
    #[error("the lower-bound check needs at least {needed} vertices, got {got}")]
    TooSmall { needed: usize, got: usize },
    #[error("exhaustive sweeps support n <= 9, got {0}")]
    SweepCap(usize),
    #[error(transparent)]
    Search(#[from] enumerate::SearchError),
}

/// The `k`-uniform hypergraph of transitive `k`-sets of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingHypergraph {
    n: usize,
    k: usize,
    edges: Vec<VertexSet>,
}

impl TilingHypergraph {
    /// Hypergraph whose edges are exactly the transitive `k`-sets of `g`.
    pub fn from_graph(g: &OrientedGraph, k: usize) -> Self {
        TilingHypergraph {
            n: g.n(),
            k,
            edges: g.transitive_copies(k),
        }
    }

    /// Builds from an explicit edge list (sorted and deduplicated here).
    pub fn new(n: usize, k: usize, mut edges: Vec<VertexSet>) -> Result<Self, FracError> {
        let range = VertexSet::full(n);
        for &e in &edges {
            if e.len() != k {
                return Err(FracError::BadEdgeSize(e, k));
            }
            if !e.is_subset_of(range) {
                return Err(FracError::EdgeRange(e, n));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(TilingHypergraph { n, k, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// The link of `v`: every edge through `v`, with `v` removed. The
    /// vertex set is unchanged (`v` simply sits in no edge); uniformity
    /// drops by one.
    pub fn link(&self, v: usize) -> Result<TilingHypergraph, FracError> {
        if v >= self.n {
            return Err(FracError::VertexRange(v));
        }
        debug_assert!(self.k >= 2, "link of a 1-uniform hypergraph is degenerate");
        let edges: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.without(v))
            .collect();
        Ok(TilingHypergraph {
            n: self.n,
            k: self.k - 1,
            edges,
        })
    }
}

/// A primal-dual optimality certificate: a fractional matching `w`, a
/// fractional cover `y`, and their common total.
#[derive(Clone, Debug, Serialize)]
pub struct FractionalCertificate {
    /// One weight per hypergraph edge, in edge-list order.
    #[serde(with = "rational::serde_pq_vec")]
    pub edge_weights: Vec<Rational>,
    /// One weight per vertex.
    #[serde(with = "rational::serde_pq_vec")]
    pub vertex_weights: Vec<Rational>,
    #[serde(with = "rational::serde_pq")]
    pub value: Rational,
}

/// A failed certificate condition. Produced only by [`FractionalCertificate::verify`];
/// a failure on a solver-produced certificate indicates a bug, not bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateViolation {
    #[error("certificate shape does not match the hypergraph")]
    Shape,
    #[error("weight outside [0, 1]")]
    Range,
    #[error("vertex {0} is overloaded: incident edge weights exceed 1")]
    PrimalInfeasible(usize),
    #[error("edge {0:?} is undercovered: vertex weights sum below 1")]
    DualInfeasible(VertexSet),
    #[error("matching total differs from cover total")]
    ValueGap,
    #[error("complementary slackness fails at edge {0:?}")]
    SlackEdge(VertexSet),
    #[error("complementary slackness fails at vertex {0}")]
    SlackVertex(usize),
}

impl FractionalCertificate {
    /// Re-derives every optimality condition from scratch: weight ranges,
    /// primal and dual feasibility, equal totals, and complementary
    /// slackness in both directions.
    pub fn verify(&self, h: &TilingHypergraph) -> Result<(), CertificateViolation> {
        if self.edge_weights.len() != h.edges.len() || self.vertex_weights.len() != h.n {
            return Err(CertificateViolation::Shape);
        }
        let zero = int(0);
        let one = int(1);
        for w in self.edge_weights.iter().chain(&self.vertex_weights) {
            if *w < zero || *w > one {
                return Err(CertificateViolation::Range);
            }
        }
        let mut vertex_load = vec![int(0); h.n];
        for (e, w) in h.edges.iter().zip(&self.edge_weights) {
            for v in e.iter() {
                vertex_load[v] += w;
            }
        }
        for (v, load) in vertex_load.iter().enumerate() {
            if *load > one {
                return Err(CertificateViolation::PrimalInfeasible(v));
            }
        }
        let mut edge_cover = Vec::with_capacity(h.edges.len());
        for e in &h.edges {
            let covered: Rational = e.iter().map(|v| self.vertex_weights[v].clone()).sum();
            if covered < one {
                return Err(CertificateViolation::DualInfeasible(*e));
            }
            edge_cover.push(covered);
        }
        let matching_total: Rational = self.edge_weights.iter().cloned().sum();
        let cover_total: Rational = self.vertex_weights.iter().cloned().sum();
        if matching_total != cover_total || matching_total != self.value {
            return Err(CertificateViolation::ValueGap);
        }
        for ((e, w), covered) in h.edges.iter().zip(&self.edge_weights).zip(&edge_cover) {
            if w > &zero && covered != &one {
                return Err(CertificateViolation::SlackEdge(*e));
            }
        }
        for (v, y) in self.vertex_weights.iter().enumerate() {
            if y > &zero && vertex_load[v] != one {
                return Err(CertificateViolation::SlackVertex(v));
            }
        }
        Ok(())
    }
}

fn solve(h: &TilingHypergraph) -> (Rational, FractionalCertificate) {
    let columns: Vec<u64> = h.edges.iter().map(|e| e.0).collect();
    let sol = simplex::solve_matching_lp(h.n, &columns);
    let cert = FractionalCertificate {
        edge_weights: sol.column_weights,
        vertex_weights: sol.row_prices,
        value: sol.value.clone(),
    };
    cert.verify(h)
        .expect("solver output must certify its own optimality");
    (sol.value, cert)
}

/// Size of the largest fractional matching, with a verified certificate.
pub fn nu_star(h: &TilingHypergraph) -> (Rational, FractionalCertificate) {
    solve(h)
}

/// Size of the smallest fractional vertex cover, with a verified
/// certificate.
///
/// Solved on the same factorization as [`nu_star`]: the cover is the dual
/// read off the optimal matching basis, so the two optima agree bit for
/// bit. The certificate verifier re-checks both solutions independently.
pub fn tau_star(h: &TilingHypergraph) -> (Rational, FractionalCertificate) {
    solve(h)
}

/// `nu*` of the link of `v` in the tiling hypergraph of `(g, k)`: the size
/// of the largest fractional tiling by `k`-sets through `v`, each counted
/// without `v`.
pub fn v_extendable_value(g: &OrientedGraph, k: usize, v: usize) -> Result<Rational, FracError> {
    let h = TilingHypergraph::from_graph(g, k);
    let link = h.link(v)?;
    Ok(nu_star(&link).0)
}

/// Outcome of the link-extendability implication check.
#[derive(Clone, Debug, Serialize)]
pub struct ExtendabilityReport {
    pub n: usize,
    pub k: usize,
    pub divisible: bool,
    /// `n/k` when `k | n`, otherwise `floor(n/k)` (reporting only).
    #[serde(with = "rational::serde_pq")]
    pub threshold: Rational,
    #[serde(with = "rational::serde_pq")]
    pub min_link_value: Rational,
    pub min_link_vertex: usize,
    /// True iff every link value reaches the threshold.
    pub implication_applies: bool,
    /// `nu*` of the full hypergraph, solved independently when the
    /// implication applies (and on the divisible path only).
    #[serde(with = "rational::serde_pq_opt")]
    pub nu_star: Option<Rational>,
    /// True iff the implied equality `nu* = n/k` was confirmed exactly.
    pub confirmed: Option<bool>,
}

/// Checks the implication "if every vertex has a `v`-extendable fractional
/// tiling of size at least `n/k`, then `nu* = n/k`" on a concrete instance.
///
/// When `k` does not divide `n` the check degrades to reporting the
/// minimum link value against `floor(n/k)` without asserting anything.
pub fn extendability_implication_check(
    g: &OrientedGraph,
    k: usize,
) -> Result<ExtendabilityReport, FracError> {
    let n = g.n();
    let divisible = k != 0 && n.is_multiple_of(k);
    let h = TilingHypergraph::from_graph(g, k);
    let link_values: Vec<Rational> = exec::map_range(Parallelism::Auto, n, |v| {
        nu_star(&h.link(v).expect("vertex in range")).0
    });
    let (min_link_vertex, min_link_value) = link_values
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(v, val)| (v, val.clone()))
        .expect("graphs have at least one vertex");
    let threshold = if divisible {
        ratio(n as i64, k as i64)
    } else {
        int((n / k) as i64)
    };
    let implication_applies = min_link_value >= threshold;
    let (nu, confirmed) = if divisible && implication_applies {
        let value = nu_star(&h).0;
        let ok = value == threshold;
        (Some(value), Some(ok))
    } else {
        (None, None)
    };
    Ok(ExtendabilityReport {
        n,
        k,
        divisible,
        threshold,
        min_link_value,
        min_link_vertex,
        implication_applies,
        nu_star: nu,
        confirmed,
    })
}

/// Checks the residue lower bound on fractional matchings of subtournament
/// order `k - 1`: for a tournament `S` on `s >= r(k-1)` vertices,
/// `nu*_{k-1}(S) >= (s - (r(k-1) - k + 1)) / (k - 1)`. Search-verified for
/// `k = 4`, where the bound reads `(s - 1) / 3`.
pub fn matching_floor_check(s: &Tournament, k: usize) -> Result<bool, FracError> {
    if k != 4 {
        return Err(FracError::CheckRange(k));
    }
    let r_km1 = RamseyTable::constants()
        .value(k - 1)
        .expect("r(3) is tabulated") as i64;
    if (s.n() as i64) < r_km1 {
        return Err(FracError::TooSmall {
            needed: r_km1 as usize,
            got: s.n(),
        });
    }
    let h = TilingHypergraph::from_graph(s.as_graph(), k - 1);
    let (value, _) = nu_star(&h);
    let bound = ratio(s.n() as i64 - (r_km1 - k as i64 + 1), k as i64 - 1);
    Ok(value >= bound)
}

/// How a minimum sweep covers the space of tournaments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum SweepMode {
    /// Every isomorphism class on `n` vertices (requires `n <= 9`).
    Exhaustive,
    /// Seeded uniformly random labeled tournaments.
    Sampled { samples: usize, seed: u64 },
}

/// Result of minimizing `nu*` over tournaments on `n` vertices.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub k: usize,
    #[serde(flatten)]
    pub mode: SweepMode,
    pub examined: usize,
    #[serde(with = "rational::serde_pq")]
    pub minimum: Rational,
    /// Upper-triangle encodings of the minimizers (canonical representatives
    /// in exhaustive mode, sampled tournaments otherwise).
    pub witnesses: Vec<String>,
    /// The reference value `(n - (r(k) - 2)) / 2` when `r(k)` is tabulated.
    #[serde(with = "rational::serde_pq_opt")]
    pub reference_bound: Option<Rational>,
    /// Whether the minimum equals the reference value.
    pub matches_reference: Option<bool>,
}

/// Minimum of `nu*` over all classes on `n` vertices (exhaustive mode) or
/// over seeded samples.
pub fn min_nu_star_sweep(n: usize, k: usize, mode: SweepMode) -> Result<SweepReport, FracError> {
    let values_and_wires: Vec<(Rational, String)> = match &mode {
        SweepMode::Exhaustive => {
            if n > 9 {
                return Err(FracError::SweepCap(n));
            }
            let classes = enumerate::generate_tournaments(n)?;
            exec::map(Parallelism::Auto, &classes, |t| {
                let h = TilingHypergraph::from_graph(t.as_graph(), k);
                (nu_star(&h).0, t.to_upper_triangle())
            })
        }
        SweepMode::Sampled { samples, seed } => {
            let wires: Vec<String> = {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*samples)
                    .map(|_| {
                        Tournament::random(n, &mut rng)
                            .expect("sampled order within range")
                            .to_upper_triangle()
                    })
                    .collect()
            };
            exec::map(Parallelism::Auto, &wires, |wire| {
                let t = Tournament::from_upper_triangle(wire, n).expect("self-produced wire");
                let h = TilingHypergraph::from_graph(t.as_graph(), k);
                (nu_star(&h).0, wire.clone())
            })
        }
    };
    let examined = values_and_wires.len();
    let minimum = values_and_wires
        .iter()
        .map(|(v, _)| v.clone())
        .min()
        .unwrap_or_else(Rational::zero);
    let mut witnesses: Vec<String> = values_and_wires
        .into_iter()
        .filter(|(v, _)| *v == minimum)
        .map(|(_, w)| w)
        .collect();
    witnesses.dedup();
    let reference_bound = RamseyTable::constants()
        .value(k)
        .map(|r| ratio(n as i64 - (r as i64 - 2), 2));
    let matches_reference = reference_bound.as_ref().map(|b| *b == minimum);
    Ok(SweepReport {
        n,
        k,
        mode,
        examined,
        minimum,
        witnesses,
        reference_bound,
        matches_reference,
    })
}
