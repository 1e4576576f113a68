//! Exact-rational primal simplex for the fractional matching LP.
//!
//! The problem solved is: maximize the total weight over columns subject to
//! one `<=1` constraint per row (vertex), weights nonnegative. The slack
//! basis is feasible from the start (all right-hand sides are 1), so no
//! phase-one is needed. Pivoting uses Bland's rule throughout — entering
//! column of smallest index with positive reduced cost, leaving row whose
//! basic variable has the smallest index among the minimum ratios — which
//! rules out cycling on degenerate instances. Everything is arbitrary-
//! precision rational; there is no floating point on any path that decides
//! optimality.

use num::{One, Signed, Zero};

use crate::rational::Rational;

/// Exact optimum of the matching LP together with both solution vectors.
#[derive(Clone, Debug)]
pub struct LpSolution {
    /// Optimal objective value.
    pub value: Rational,
    /// Primal weights, one per input column.
    pub column_weights: Vec<Rational>,
    /// Dual prices, one per row, read off the optimal basis.
    pub row_prices: Vec<Rational>,
}

/// Solves `max sum(x)` subject to, for each row `i`, the sum of `x_j` over
/// columns `j` whose bitmask contains `i` being at most 1, and `x >= 0`.
///
/// `rows` is the number of constraints; `columns[j]` is the incidence
/// bitmask of column `j` over rows `0..rows`.
pub fn solve_matching_lp(rows: usize, columns: &[u64]) -> LpSolution {
    assert!(rows <= 64, "row index must fit a bitmask");
    let ncols = columns.len();
    let total = ncols + rows;

    if ncols == 0 {
        return LpSolution {
            value: Rational::zero(),
            column_weights: Vec::new(),
            row_prices: vec![Rational::zero(); rows],
        };
    }

    // Dense tableau: one Vec per constraint row plus a reduced-cost row.
    // Column layout: structural columns first, then one slack per row.
    let mut tableau: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row = vec![Rational::zero(); total];
            for (j, &mask) in columns.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    row[j] = Rational::one();
                }
            }
            row[ncols + i] = Rational::one();
            row
        })
        .collect();
    let mut rhs: Vec<Rational> = vec![Rational::one(); rows];
    let mut reduced: Vec<Rational> = (0..total)
        .map(|j| {
            if j < ncols {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let mut value = Rational::zero();
    let mut basis: Vec<usize> = (0..rows).map(|i| ncols + i).collect();

    // Bland: entering column = smallest index with positive reduced cost.
    while let Some(entering) = (0..total).find(|&j| reduced[j].is_positive()) {
        // Ratio test; ties broken by the smallest basic-variable index.
        let mut pivot_row: Option<usize> = None;
        let mut best_ratio: Option<Rational> = None;
        for i in 0..rows {
            if !tableau[i][entering].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &tableau[i][entering];
            let better = match &best_ratio {
                None => true,
                Some(best) => {
                    ratio < *best
                        || (ratio == *best && basis[i] < basis[pivot_row.expect("set with best")])
                }
            };
            if better {
                best_ratio = Some(ratio);
                pivot_row = Some(i);
            }
        }
        let r = pivot_row.expect("matching LP is bounded: every column hits a row");

        // Normalize the pivot row.
        let pivot = tableau[r][entering].clone();
        if !pivot.is_one() {
            for cell in tableau[r].iter_mut() {
                if !cell.is_zero() {
                    *cell /= &pivot;
                }
            }
            rhs[r] /= &pivot;
        }
        // Eliminate the entering column from the other rows. The column
        // becomes a unit vector, so it is written directly instead of being
        // folded into the elimination loop.
        for i in 0..rows {
            if i == r || tableau[i][entering].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut tableau[i][entering], Rational::zero());
            let (pivot_row, target_row) = if i < r {
                let (head, tail) = tableau.split_at_mut(r);
                (&tail[0], &mut head[i])
            } else {
                let (head, tail) = tableau.split_at_mut(i);
                (&head[r], &mut tail[0])
            };
            for (j, (cell, p)) in target_row.iter_mut().zip(pivot_row).enumerate() {
                if j != entering && !p.is_zero() {
                    *cell -= &factor * p;
                }
            }
            let delta = &factor * &rhs[r];
            rhs[i] -= delta;
        }
        // Update the reduced costs and the objective value.
        let factor = std::mem::replace(&mut reduced[entering], Rational::zero());
        if !factor.is_zero() {
            for (j, (cell, p)) in reduced.iter_mut().zip(&tableau[r]).enumerate() {
                if j != entering && !p.is_zero() {
                    *cell -= &factor * p;
                }
            }
            value += &factor * &rhs[r];
        }
        basis[r] = entering;
    }

    let mut column_weights = vec![Rational::zero(); ncols];
    for (i, &b) in basis.iter().enumerate() {
        if b < ncols {
            column_weights[b] = rhs[i].clone();
        }
    }
    // At optimality the reduced cost of slack i is -y_i.
    let row_prices: Vec<Rational> = (0..rows).map(|i| -reduced[ncols + i].clone()).collect();

    LpSolution {
        value,
        column_weights,
        row_prices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn empty_lp_is_zero() {
        let sol = solve_matching_lp(3, &[]);
        assert_eq!(sol.value, int(0));
        assert_eq!(sol.row_prices, vec![int(0); 3]);
    }

    #[test]
    fn single_column_gets_weight_one() {
        let sol = solve_matching_lp(4, &[0b1111]);
        assert_eq!(sol.value, int(1));
        assert_eq!(sol.column_weights, vec![int(1)]);
        assert_eq!(sol.row_prices.iter().cloned().sum::<Rational>(), int(1));
    }

    #[test]
    fn disjoint_columns_all_saturate() {
        let sol = solve_matching_lp(6, &[0b000011, 0b001100, 0b110000]);
        assert_eq!(sol.value, int(3));
        assert_eq!(sol.column_weights, vec![int(1); 3]);
    }

    #[test]
    fn triangle_of_pairwise_overlapping_columns() {
        // Three 2-subsets of {0,1,2}: the odd cycle forces value 3/2.
        let sol = solve_matching_lp(3, &[0b011, 0b101, 0b110]);
        assert_eq!(sol.value, ratio(3, 2));
        let dual_total: Rational = sol.row_prices.iter().cloned().sum();
        assert_eq!(dual_total, ratio(3, 2));
        // Dual feasibility: each column is covered to at least 1.
        for &mask in &[0b011u64, 0b101, 0b110] {
            let covered: Rational = (0..3)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| sol.row_prices[i].clone())
                .sum();
            assert!(covered >= int(1));
        }
    }

    #[test]
    fn star_shares_the_center() {
        // Columns {0,1}, {0,2}, {0,3}: all meet row 0, value 1.
        let sol = solve_matching_lp(4, &[0b0011, 0b0101, 0b1001]);
        assert_eq!(sol.value, int(1));
        let primal_total: Rational = sol.column_weights.iter().cloned().sum();
        assert_eq!(primal_total, int(1));
    }

    #[test]
    fn degenerate_duplicate_columns_terminate() {
        let cols = vec![0b111u64; 20];
        let sol = solve_matching_lp(3, &cols);
        assert_eq!(sol.value, int(1));
    }
}
