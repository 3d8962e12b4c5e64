use crate::field::{Fe, Field};

/// Incrementally maintained reduced row echelon basis.
///
/// Used for stacked linear systems with many more equations than unknowns:
/// rows are fed one at a time and dependent rows are discarded, so the
/// caller can stop as soon as the rank is known to be maximal.
#[derive(Clone, Debug)]
pub struct RowReducer {
    field: Field,
    cols: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(field: Field, cols: usize) -> RowReducer {
        RowReducer { field, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Remainder of `row` after elimination against the current basis.
    pub fn reduce(&self, mut row: Vec<Fe>) -> Vec<Fe> {
        assert_eq!(row.len(), self.cols, "row length");
        for (basis, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = row[pc];
            if f.is_zero() {
                continue;
            }
            for (x, &b) in row.iter_mut().zip(basis).skip(pc) {
                if !b.is_zero() {
                    *x -= f * b;
                }
            }
        }
        row
    }

    pub fn contains(&self, row: &[Fe]) -> bool {
        self.reduce(row.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<Fe>) -> bool {
        let mut row = self.reduce(row);
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[pc].inv().expect("nonzero pivot");
        for x in row.iter_mut().skip(pc) {
            *x *= inv;
        }
        for basis in self.rows.iter_mut() {
            let f = basis[pc];
            if f.is_zero() {
                continue;
            }
            for (x, &r) in basis.iter_mut().zip(&row).skip(pc) {
                if !r.is_zero() {
                    *x -= f * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&c| c < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, row);
        true
    }

    /// Basis of the vectors orthogonal to every row, i.e. the solution space
    /// of the homogeneous system collected so far.
    pub fn kernel(&self) -> Vec<Vec<Fe>> {
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.cols];
                v[free] = self.field.one();
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = -row[free];
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kernel, Matrix};

    #[test]
    fn agrees_with_batch_kernel() {
        let f = Field::prime(7).unwrap();
        let a = Matrix::from_ints(f, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0], &[1, 3, 4, 4]]);
        let mut rr = RowReducer::new(f, 4);
        let grew: Vec<bool> = (0..4).map(|r| rr.insert(a.row(r).to_vec())).collect();
        assert_eq!(grew, vec![true, false, true, false]);
        assert_eq!(rr.rank(), 2);
        assert_eq!(rr.kernel(), kernel(&a));
    }
}
