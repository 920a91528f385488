//! Graded Smith normal form over Q[c].
//!
//! Every homogeneous entry of a matrix between graded free Q[c]-modules is a
//! single monomial q·c^k, so elimination never leaves monomials: pick the
//! pivot of minimal cpower (globally minimal, so all multipliers are honest
//! ring elements c^t with t ≥ 0), clear its row and column by exact
//! Q-division, retire both, repeat. Pivots are chosen deterministically:
//! minimal cpower, ties broken by smallest row then column index.
//!
//! The reduction optionally tracks the column transform V. Because column
//! operations are homogeneous, V's columns stay homogeneous and its entries
//! stay monomials; the columns of V over the all-zero columns of the reduced
//! matrix are a basis of the kernel of the original map of free modules.

use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Pivot {
    pub row: usize,
    pub col: usize,
    pub cpower: u32,
}

pub(crate) struct Reduced {
    pub entries: Vec<Vec<Monomial>>,
    pub pivots: Vec<Pivot>,
    /// Column transform; `v[i][j]` is the coefficient of original basis
    /// vector i in the j-th new basis vector. Identity-initialised, so only
    /// present when tracking was requested.
    pub v: Option<Vec<Vec<Monomial>>>,
    pub cols: usize,
}

pub(crate) fn reduce(
    rows: usize,
    cols: usize,
    mut entries: Vec<Vec<Monomial>>,
    track_columns: bool,
) -> Reduced {
    debug_assert_eq!(entries.len(), rows);
    debug_assert!(entries.iter().all(|r| r.len() == cols));

    let mut v = track_columns.then(|| {
        (0..cols)
            .map(|i| {
                (0..cols)
                    .map(|j| if i == j { Monomial::one() } else { Monomial::zero() })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    });

    let mut row_active = vec![true; rows];
    let mut col_active = vec![true; cols];
    let mut pivots = Vec::new();

    loop {
        // Deterministic pivot: minimal cpower, first in row-major order.
        let mut pivot: Option<Pivot> = None;
        for r in 0..rows {
            if !row_active[r] {
                continue;
            }
            for c in 0..cols {
                if !col_active[c] || entries[r][c].is_zero() {
                    continue;
                }
                let k = entries[r][c].cpower();
                if pivot.map_or(true, |p| k < p.cpower) {
                    pivot = Some(Pivot { row: r, col: c, cpower: k });
                }
            }
        }
        let Some(pivot) = pivot else { break };
        let (r0, c0) = (pivot.row, pivot.col);
        let pivot_entry = entries[r0][c0].clone();

        // Clear column c0 with row operations (not recorded).
        for r in 0..rows {
            if r == r0 || entries[r][c0].is_zero() {
                continue;
            }
            let factor = Monomial::new(
                entries[r][c0].coeff() / pivot_entry.coeff(),
                entries[r][c0].cpower() - pivot.cpower,
            );
            for j in 0..cols {
                let delta = &factor * &entries[r0][j];
                entries[r][j] = &entries[r][j] - &delta;
            }
        }

        // Clear row r0 with column operations, mirrored into V.
        for c in 0..cols {
            if c == c0 || entries[r0][c].is_zero() {
                continue;
            }
            let factor = Monomial::new(
                entries[r0][c].coeff() / pivot_entry.coeff(),
                entries[r0][c].cpower() - pivot.cpower,
            );
            for i in 0..rows {
                let delta = &factor * &entries[i][c0];
                entries[i][c] = &entries[i][c] - &delta;
            }
            if let Some(v) = v.as_mut() {
                for i in 0..cols {
                    let delta = &factor * &v[i][c0];
                    v[i][c] = &v[i][c] - &delta;
                }
            }
        }

        row_active[r0] = false;
        col_active[c0] = false;
        pivots.push(pivot);
    }

    Reduced { entries, pivots, v, cols }
}

impl Reduced {
    /// Reads the reduction as a presentation (rows = relations, columns =
    /// generators): pivot columns of c-order n ≥ 1 become torsion summands,
    /// unit pivots cancel their generator, untouched columns stay free.
    pub fn cokernel_summands(&self, generator_degrees: &[i64]) -> (Vec<i64>, Vec<(i64, u32)>) {
        debug_assert_eq!(generator_degrees.len(), self.cols);
        let mut pivot_of_col = vec![None; self.cols];
        for p in &self.pivots {
            pivot_of_col[p.col] = Some(p.cpower);
        }
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for (c, &degree) in generator_degrees.iter().enumerate() {
            match pivot_of_col[c] {
                None => free.push(degree),
                Some(0) => {}
                Some(n) => torsion.push((degree, n)),
            }
        }
        (free, torsion)
    }

    /// Reads the reduction as a map of free modules (columns = source
    /// basis): the V-columns over all-zero columns of the reduced matrix
    /// are a homogeneous basis of the kernel. Returns (degree, coordinates
    /// over the original source basis) per basis vector.
    pub fn kernel_basis(&self, col_degrees: &[i64]) -> Vec<(i64, Vec<Monomial>)> {
        debug_assert_eq!(col_degrees.len(), self.cols);
        let v = self
            .v
            .as_ref()
            .expect("kernel_basis requires a tracked reduction");
        let pivoted: Vec<bool> = {
            let mut flags = vec![false; self.cols];
            for p in &self.pivots {
                flags[p.col] = true;
            }
            flags
        };
        let mut basis = Vec::new();
        for c in 0..self.cols {
            if pivoted[c] {
                continue;
            }
            debug_assert!(self.entries.iter().all(|row| row[c].is_zero()));
            let column: Vec<Monomial> = (0..self.cols).map(|i| v[i][c].clone()).collect();
            basis.push((col_degrees[c], column));
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn m(num: i64, den: i64, k: u32) -> Monomial {
        Monomial::new(Rational::new(num, den), k)
    }

    #[test]
    fn single_torsion_pivot() {
        // [[c^2]] over generator degree 0: coker = Q[c]/(c²).
        let red = reduce(1, 1, vec![vec![m(1, 1, 2)]], false);
        let (free, torsion) = red.cokernel_summands(&[0]);
        assert!(free.is_empty());
        assert_eq!(torsion, vec![(0, 2)]);
    }

    #[test]
    fn elimination_prefers_smallest_cpower() {
        // [[c^2, 3c]] over generators [0, -2]: pivot is 3c, the leftover
        // generator of degree 0 stays free, pivot order 1 at degree -2.
        let red = reduce(1, 2, vec![vec![m(1, 1, 2), m(3, 1, 1)]], false);
        let (free, torsion) = red.cokernel_summands(&[0, -2]);
        assert_eq!(free, vec![0]);
        assert_eq!(torsion, vec![(-2, 1)]);
    }

    #[test]
    fn kernel_of_diagonal_map() {
        // Map with matrix [[1, c]], source degrees [0, -2]: the kernel is
        // generated by (-c, 1), in degree -2.
        let red = reduce(1, 2, vec![vec![m(1, 1, 0), m(1, 1, 1)]], true);
        let basis = red.kernel_basis(&[0, -2]);
        assert_eq!(basis.len(), 1);
        let (degree, column) = &basis[0];
        assert_eq!(*degree, -2);
        assert_eq!(column[0], m(-1, 1, 1));
        assert_eq!(column[1], m(1, 1, 0));
    }

    #[test]
    fn empty_matrix_leaves_generators_free() {
        let red = reduce(0, 2, vec![], false);
        let (free, torsion) = red.cokernel_summands(&[3, -1]);
        assert_eq!(free, vec![3, -1]);
        assert!(torsion.is_empty());
    }
}
