//! Canonical forms and isomorphism testing for tournaments on up to 16
//! vertices.
//!
//! The canonical form of a tournament is the lexicographically smallest
//! upper-triangle bitstring over all vertex orderings. It is computed by a
//! depth-first search over an ordered partition of the still-unplaced
//! vertices: placing a vertex emits its row (zeros before ones inside every
//! cell, which is the minimal arrangement the remaining order can realize)
//! and splits each cell into in-neighbors followed by out-neighbors. Only
//! row-minimal candidates are expanded, and whole branches are cut as soon
//! as their emitted prefix exceeds the best complete string. Tournaments
//! have odd, and in practice tiny, automorphism groups, so ties stay rare
//! and the search is fast even on regular instances.

use crate::exec::{self, Parallelism};
use crate::graph::Tournament;
use thiserror::Error;

/// Canonicalization cap; larger instances are outside this crate's scope.
pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("canonical forms support at most {MAX_CANON_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// A relabeling-invariant encoding of an isomorphism class.
///
/// Two tournaments have equal canonical forms iff they are isomorphic. The
/// string bits are packed most-significant-first into `bits`, so the derived
/// ordering agrees with lexicographic order of the bitstrings for equal `n`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical upper-triangle bitstring.
    pub fn to_bit_string(&self) -> String {
        let len = self.n() * (self.n() - 1) / 2;
        (0..len)
            .map(|i| {
                if self.bits >> (127 - i) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    /// The canonical representative tournament.
    pub fn as_tournament(&self) -> Tournament {
        Tournament::from_pair_bits(self.n(), |i| self.bits >> (127 - i) & 1 == 1)
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CanonicalForm(n={}, \"{}\")",
            self.n,
            self.to_bit_string()
        )
    }
}

/// Canonical form of `t`.
pub fn canonical_form(t: &Tournament) -> Result<CanonicalForm, IsoError> {
    canonicalize(t).map(|(form, _)| form)
}

/// Canonical form together with an ordering realizing it: `labeling[pos]`
/// is the original vertex placed at canonical position `pos`.
pub fn canonicalize(t: &Tournament) -> Result<(CanonicalForm, Vec<usize>), IsoError> {
    let n = t.n();
    if n > MAX_CANON_VERTICES {
        return Err(IsoError::TooLarge(n));
    }
    let mut search = Search {
        out: (0..n).map(|v| t.out_set(v).0).collect(),
        best: None,
        best_labeling: Vec::new(),
        labeling: Vec::with_capacity(n),
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.dfs(&[full], n, 0, 0);
    let form = CanonicalForm {
        n: n as u8,
        bits: search.best.expect("search visits a leaf"),
    };
    Ok((form, search.best_labeling))
}

struct Search {
    out: Vec<u64>,
    best: Option<u128>,
    best_labeling: Vec<usize>,
    labeling: Vec<usize>,
}

impl Search {
    /// `blocks`: ordered partition of unplaced vertices; `unplaced`: their
    /// count; `bitlen`: prefix length emitted so far; `bits`: that prefix,
    /// packed most-significant-first.
    fn dfs(&mut self, blocks: &[u64], unplaced: usize, bitlen: u32, bits: u128) {
        if unplaced == 0 {
            if self.best.is_none_or(|b| bits < b) {
                self.best = Some(bits);
                self.best_labeling = self.labeling.clone();
            }
            return;
        }
        let rowlen = (unplaced - 1) as u32;
        // Row-minimal candidates from the first cell.
        let mut min_frag = u128::MAX;
        let mut mins: Vec<(usize, u128)> = Vec::new();
        let mut m = blocks[0];
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let frag = self.row_fragment(blocks, v);
            if frag < min_frag {
                min_frag = frag;
                mins.clear();
            }
            if frag == min_frag {
                mins.push((v, frag));
            }
        }
        let new_bits = if rowlen == 0 {
            bits
        } else {
            bits | (min_frag >> bitlen)
        };
        let plen = bitlen + rowlen;
        for (v, _) in mins {
            // Re-check against the incumbent on every iteration: a completed
            // sibling may have updated it.
            if let Some(best) = self.best {
                let mask = prefix_mask(plen);
                if new_bits & mask > best & mask {
                    return;
                }
            }
            let next_blocks = split_blocks(blocks, v, self.out[v]);
            self.labeling.push(v);
            self.dfs(&next_blocks, unplaced - 1, plen, new_bits);
            self.labeling.pop();
        }
    }

    /// The row a candidate would emit: per cell, non-out-neighbors (zeros)
    /// then out-neighbors (ones), packed most-significant-first.
    fn row_fragment(&self, blocks: &[u64], v: usize) -> u128 {
        let out_v = self.out[v];
        let mut frag: u128 = 0;
        let mut pos: u32 = 0;
        for (i, &b) in blocks.iter().enumerate() {
            let cell = if i == 0 { b & !(1 << v) } else { b };
            let ones = (cell & out_v).count_ones();
            let zeros = cell.count_ones() - ones;
            pos += zeros;
            if ones > 0 {
                frag |= (!0u128 << (128 - ones)) >> pos;
            }
            pos += ones;
        }
        frag
    }
}

fn prefix_mask(plen: u32) -> u128 {
    if plen == 0 {
        0
    } else {
        !0u128 << (128 - plen)
    }
}

fn split_blocks(blocks: &[u64], v: usize, out_v: u64) -> Vec<u64> {
    let mut next = Vec::with_capacity(blocks.len() * 2);
    for (i, &b) in blocks.iter().enumerate() {
        let cell = if i == 0 { b & !(1 << v) } else { b };
        let ones = cell & out_v;
        let zeros = cell & !out_v;
        if zeros != 0 {
            next.push(zeros);
        }
        if ones != 0 {
            next.push(ones);
        }
    }
    next
}

/// True iff the tournaments are isomorphic. Differing orders compare as
/// non-isomorphic rather than erroring.
pub fn are_isomorphic(a: &Tournament, b: &Tournament) -> Result<bool, IsoError> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Outcome of a pairwise-distinctness scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distinctness {
    pub all_distinct: bool,
    /// Earliest colliding index pair `(i, j)` with `i < j`, if any.
    pub first_collision: Option<(usize, usize)>,
}

/// Checks that no two list entries are isomorphic. Canonical forms are
/// computed in parallel; the collision scan itself is deterministic.
pub fn pairwise_distinct(list: &[Tournament]) -> Result<Distinctness, IsoError> {
    let forms = exec::map(Parallelism::Auto, list, canonical_form);
    let mut seen = std::collections::HashMap::new();
    for (j, form) in forms.into_iter().enumerate() {
        let form = form?;
        if let Some(&i) = seen.get(&form) {
            return Ok(Distinctness {
                all_distinct: false,
                first_collision: Some((i, j)),
            });
        }
        seen.insert(form, j);
    }
    Ok(Distinctness {
        all_distinct: true,
        first_collision: None,
    })
}
