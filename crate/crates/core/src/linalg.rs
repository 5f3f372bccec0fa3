//! Dense linear algebra over GF(p): incremental row reduction, rank, and
//! nullspace. Degree-slice dimension counts and membership tests reduce to
//! these primitives.

use crate::field_poly::field::{Coeff, FieldConfig};

/// A row space maintained in reduced echelon form; rows are inserted one at
/// a time and reduced against the current basis.
pub struct SpanBasis {
    pub field: FieldConfig,
    pub cols: usize,
    /// (pivot column, normalized row)
    pub rows: Vec<(usize, Vec<Coeff>)>,
}

impl SpanBasis {
    pub fn new(field: FieldConfig, cols: usize) -> Self {
        SpanBasis { field, cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis in place; returns the remainder.
    pub fn reduce(&self, mut row: Vec<Coeff>) -> Vec<Coeff> {
        let f = self.field;
        for (piv, base) in &self.rows {
            let c = row[*piv];
            if c != 0 {
                for (r, b) in row.iter_mut().zip(base.iter()) {
                    *r = f.sub(*r, f.mul(c, *b));
                }
            }
        }
        row
    }

    /// Inserts a row; returns true if it enlarged the span.
    pub fn insert(&mut self, row: Vec<Coeff>) -> bool {
        let f = self.field;
        let mut row = self.reduce(row);
        let Some(piv) = row.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(row[piv]).unwrap();
        for c in row.iter_mut() {
            *c = f.mul(*c, inv);
        }
        // back-substitute into existing rows to keep reduced form
        for (_, base) in self.rows.iter_mut() {
            let c = base[piv];
            if c != 0 {
                for (b, r) in base.iter_mut().zip(row.iter()) {
                    *b = f.sub(*b, f.mul(c, *r));
                }
            }
        }
        let pos = self.rows.partition_point(|(p, _)| *p < piv);
        self.rows.insert(pos, (piv, row));
        true
    }

    pub fn contains(&self, row: Vec<Coeff>) -> bool {
        self.reduce(row).iter().all(|&c| c == 0)
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &Vec<Coeff>> {
        self.rows.iter().map(|(_, r)| r)
    }
}

/// Rank of a dense matrix.
pub fn rank(field: FieldConfig, rows: &[Vec<Coeff>]) -> usize {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut span = SpanBasis::new(field, cols);
    for r in rows {
        span.insert(r.clone());
    }
    span.rank()
}

/// Basis of the right nullspace {v : A v = 0} of the matrix given by rows.
pub fn nullspace(field: FieldConfig, rows: &[Vec<Coeff>], cols: usize) -> Vec<Vec<Coeff>> {
    let f = field;
    let mut span = SpanBasis::new(f, cols);
    for r in rows {
        debug_assert_eq!(r.len(), cols);
        span.insert(r.clone());
    }
    let pivots: Vec<usize> = span.rows.iter().map(|(p, _)| *p).collect();
    let mut free_cols: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free_cols.sort_unstable();
    let mut out = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut v = vec![0; cols];
        v[fc] = 1;
        for (piv, row) in &span.rows {
            // pivot entry is 1; solve for v[piv]
            v[*piv] = f.neg(row[fc]);
        }
        out.push(v);
    }
    out
}

/// Rank of a symmetric matrix by symmetric Gaussian elimination; used for
/// quadric ranks.
pub fn symmetric_rank(field: FieldConfig, mat: &[Vec<Coeff>]) -> usize {
    let rows: Vec<Vec<Coeff>> = mat.to_vec();
    rank(field, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let f = FieldConfig::new(7).unwrap();
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(f, &rows), 2);
        let ns = nullspace(f, &rows, 3);
        assert_eq!(ns.len(), 1);
        // check A v = 0
        for r in &rows {
            let dot = r.iter().zip(&ns[0]).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn span_membership() {
        let f = FieldConfig::new(101).unwrap();
        let mut s = SpanBasis::new(f, 4);
        assert!(s.insert(vec![1, 1, 0, 0]));
        assert!(s.insert(vec![0, 0, 1, 1]));
        assert!(!s.insert(vec![1, 1, 1, 1]));
        assert!(s.contains(vec![2, 2, 3, 3]));
        assert!(!s.contains(vec![1, 0, 0, 0]));
    }
}
