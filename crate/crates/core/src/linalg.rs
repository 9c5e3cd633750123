//! Exact integer linear algebra on sparse column matrices: rank, a `ℤ`-basis
//! of the kernel, and membership in the column lattice.
//!
//! [`Echelon`] brings the columns into echelon form by unimodular column
//! operations, processing rows from the last index to the first and pivoting
//! on the entry of smallest absolute value. Matrices whose rows are sorted by
//! increasing length (as in [`crate::exactness`]) stay close to triangular in
//! that order, so little fill-in occurs.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Sparse integer vector, index to non-zero entry.
pub type SparseVec = BTreeMap<usize, BigInt>;

fn axpy(target: &mut SparseVec, q: &BigInt, source: &SparseVec) {
    for (&i, v) in source {
        let entry = target.entry(i).or_default();
        *entry -= q * v;
        if entry.is_zero() {
            target.remove(&i);
        }
    }
}

/// Column echelon form of an integer matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    nrows: usize,
    ncols: usize,
    columns: Vec<SparseVec>,
    /// Row of each pivot to its column.
    pivot_of_row: BTreeMap<usize, usize>,
    /// Column operations applied so far: column `j` of the reduced matrix is
    /// the original matrix times `transform[j]`.
    transform: Option<Vec<SparseVec>>,
}

impl Echelon {
    /// Reduces the `nrows × columns.len()` matrix. With `track` the column
    /// transform is kept, which [`kernel_basis`](Self::kernel_basis) and
    /// [`solve`](Self::solve) need.
    pub fn new(nrows: usize, columns: &[SparseVec], track: bool) -> Result<Self> {
        let ncols = columns.len();
        let mut cols = columns.to_vec();
        let mut by_row: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nrows];
        for (j, col) in cols.iter().enumerate() {
            for &i in col.keys() {
                if i >= nrows {
                    return Err(Error::DimensionMismatch { expected: nrows, found: i + 1 });
                }
                by_row[i].insert(j);
            }
        }
        let mut transform =
            track.then(|| (0..ncols).map(|j| SparseVec::from([(j, BigInt::one())])).collect::<Vec<_>>());
        let mut pivot_of_row = BTreeMap::new();

        for r in (0..nrows).rev() {
            loop {
                let candidates: Vec<usize> = by_row[r].iter().copied().collect();
                let Some(&p) = candidates.iter().min_by_key(|&&j| (cols[j][&r].magnitude().clone(), j)) else {
                    break;
                };
                if candidates.len() == 1 {
                    for &i in cols[p].keys() {
                        by_row[i].remove(&p);
                    }
                    pivot_of_row.insert(r, p);
                    break;
                }
                let pivot_col = cols[p].clone();
                let pivot_value = pivot_col[&r].clone();
                for &j in candidates.iter().filter(|&&j| j != p) {
                    let q = &cols[j][&r] / &pivot_value;
                    if q.is_zero() {
                        continue;
                    }
                    let before: BTreeSet<usize> = pivot_col.keys().filter(|i| cols[j].contains_key(i)).copied().collect();
                    axpy(&mut cols[j], &q, &pivot_col);
                    for &i in pivot_col.keys() {
                        match (before.contains(&i), cols[j].contains_key(&i)) {
                            (true, false) => {
                                by_row[i].remove(&j);
                            }
                            (false, true) => {
                                by_row[i].insert(j);
                            }
                            _ => {}
                        }
                    }
                    if let Some(u) = transform.as_mut() {
                        let up = u[p].clone();
                        axpy(&mut u[j], &q, &up);
                    }
                }
            }
        }
        Ok(Echelon { nrows, ncols, columns: cols, pivot_of_row, transform })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivot_of_row.len()
    }

    /// Rows holding a pivot, in increasing order.
    pub fn pivot_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_of_row.keys().copied()
    }

    /// A `ℤ`-basis of the integer kernel; `None` without a tracked transform.
    pub fn kernel_basis(&self) -> Option<Vec<SparseVec>> {
        let transform = self.transform.as_ref()?;
        let pivots: BTreeSet<usize> = self.pivot_of_row.values().copied().collect();
        Some(
            (0..self.ncols)
                .filter(|j| !pivots.contains(j))
                .map(|j| {
                    debug_assert!(self.columns[j].is_empty());
                    transform[j].clone()
                })
                .collect(),
        )
    }

    /// Reduces `target` against the pivots, returning the coefficients used
    /// on each pivot column, or `None` when `target` is not in the lattice.
    fn reduce(&self, target: &SparseVec) -> Result<Option<Vec<(usize, BigInt)>>> {
        if let Some((&i, _)) = target.last_key_value() {
            if i >= self.nrows {
                return Err(Error::DimensionMismatch { expected: self.nrows, found: i + 1 });
            }
        }
        let mut residual: SparseVec = target.iter().filter(|(_, v)| !v.is_zero()).map(|(&i, v)| (i, v.clone())).collect();
        let mut used = Vec::new();
        // a pivot column vanishes on every row after its pivot row
        while let Some((&r, value)) = residual.last_key_value() {
            let Some(&p) = self.pivot_of_row.get(&r) else {
                return Ok(None);
            };
            let pivot_value = &self.columns[p][&r];
            if !(value % pivot_value).is_zero() {
                return Ok(None);
            }
            let q = value / pivot_value;
            axpy(&mut residual, &q, &self.columns[p]);
            used.push((p, q));
        }
        Ok(Some(used))
    }

    /// Whether `target` is an integer combination of the columns.
    pub fn contains(&self, target: &SparseVec) -> Result<bool> {
        Ok(self.reduce(target)?.is_some())
    }

    /// Integer `x` with `A x = target`. `None` when there is none or when the
    /// transform was not tracked.
    pub fn solve(&self, target: &SparseVec) -> Result<Option<SparseVec>> {
        let Some(used) = self.reduce(target)? else {
            return Ok(None);
        };
        let Some(transform) = self.transform.as_ref() else {
            return Ok(None);
        };
        let mut x = SparseVec::new();
        for (p, q) in used {
            axpy(&mut x, &-q, &transform[p]);
        }
        Ok(Some(x))
    }
}

/// `A x` for a sparse column matrix.
pub fn apply(columns: &[SparseVec], x: &SparseVec) -> Result<SparseVec> {
    let mut out = SparseVec::new();
    for (&j, q) in x {
        let col = columns.get(j).ok_or(Error::DimensionMismatch { expected: columns.len(), found: j + 1 })?;
        axpy(&mut out, &-q, col);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn vec_of(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().filter(|(_, v)| *v != 0).map(|&(i, v)| (i, BigInt::from(v))).collect()
    }

    fn dense(rows: usize, cols: &[&[i64]]) -> Vec<SparseVec> {
        cols.iter()
            .map(|c| {
                assert_eq!(c.len(), rows);
                vec_of(&c.iter().copied().enumerate().collect::<Vec<_>>())
            })
            .collect()
    }

    #[test]
    fn diagonal_membership() {
        let m = dense(2, &[&[1, 0], &[0, 2]]);
        let e = Echelon::new(2, &m, true).unwrap();
        assert_eq!(e.rank(), 2);
        assert!(!e.contains(&vec_of(&[(1, 1)])).unwrap());
        assert!(e.contains(&vec_of(&[(1, 4), (0, -3)])).unwrap());
        assert!(e.contains(&SparseVec::new()).unwrap());
    }

    #[test]
    fn gcd_pivoting() {
        // columns 4 and 6 span 2ℤ
        let m = dense(1, &[&[4], &[6]]);
        let e = Echelon::new(1, &m, true).unwrap();
        assert_eq!(e.rank(), 1);
        assert!(e.contains(&vec_of(&[(0, 2)])).unwrap());
        assert!(!e.contains(&vec_of(&[(0, 3)])).unwrap());
        let kernel = e.kernel_basis().unwrap();
        assert_eq!(kernel.len(), 1);
        assert!(apply(&m, &kernel[0]).unwrap().is_empty());
        // the kernel generator is primitive: (3, -2) up to sign
        let size: BigInt = kernel[0].values().map(|v| v.abs()).sum();
        assert_eq!(size, BigInt::from(5));
        let x = e.solve(&vec_of(&[(0, 2)])).unwrap().unwrap();
        assert_eq!(apply(&m, &x).unwrap(), vec_of(&[(0, 2)]));
    }

    #[test]
    fn kernel_of_dependent_columns() {
        let m = dense(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 2, 1], &[2, 0, -2]]);
        let e = Echelon::new(3, &m, true).unwrap();
        assert_eq!(e.rank(), 2);
        let kernel = e.kernel_basis().unwrap();
        assert_eq!(kernel.len(), 2);
        for k in &kernel {
            assert!(apply(&m, k).unwrap().is_empty());
        }
        assert!(Echelon::new(3, &m, false).unwrap().kernel_basis().is_none());
    }

    #[test]
    fn dimension_errors() {
        let m = dense(2, &[&[1, 0]]);
        let e = Echelon::new(2, &m, false).unwrap();
        assert!(matches!(e.contains(&vec_of(&[(5, 1)])), Err(Error::DimensionMismatch { .. })));
        assert!(Echelon::new(1, &m, false).is_ok());
        assert!(Echelon::new(1, &dense(2, &[&[0, 1]]), false).is_err());
    }

    #[test]
    fn empty_matrix() {
        let e = Echelon::new(3, &[], true).unwrap();
        assert_eq!(e.rank(), 0);
        assert!(e.kernel_basis().unwrap().is_empty());
        assert!(!e.contains(&vec_of(&[(0, 1)])).unwrap());
    }
}
