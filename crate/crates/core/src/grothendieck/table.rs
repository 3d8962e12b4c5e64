use rayon::prelude::*;

use crate::field::{Fe, Field};
use crate::report::ensure;

/// Integer structure constants `T_{ab}^c` of a based algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable {
    pub labels: Vec<String>,
    pub unit: usize,
    /// `coeffs[(a * r + b) * r + c] = T_{ab}^c`.
    pub coeffs: Vec<i64>,
}

impl FusionTable {
    pub fn new(labels: Vec<String>, unit: usize, coeffs: Vec<i64>) -> FusionTable {
        let r = labels.len();
        assert_eq!(coeffs.len(), r * r * r, "coefficient tensor has the wrong size");
        FusionTable { labels, unit, coeffs }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> i64 {
        let r = self.rank();
        self.coeffs[(a * r + b) * r + c]
    }

    pub fn row(&self, a: usize, b: usize) -> &[i64] {
        let r = self.rank();
        &self.coeffs[(a * r + b) * r..(a * r + b + 1) * r]
    }

    /// Nonzero entries `(a, b, c, T_{ab}^c)` in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, i64)> + '_ {
        let r = self.rank();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(move |(idx, &x)| (idx / (r * r), (idx / r) % r, idx % r, x))
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        let r = self.rank();
        (0..r * r)
            .map(|ab| {
                self.coeffs[ab * r..(ab + 1) * r]
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(c, &x)| (c, x))
                    .collect()
            })
            .collect()
    }

    /// `(ab)c = a(bc)` exactly over the integers.
    pub fn check_associative(&self) -> Result<(), String> {
        let r = self.rank();
        let rows = self.sparse_rows();
        (0..r).into_par_iter().try_for_each(|a| {
            let mut lhs = vec![0i64; r];
            let mut rhs = vec![0i64; r];
            for b in 0..r {
                for c in 0..r {
                    lhs.iter_mut().for_each(|x| *x = 0);
                    rhs.iter_mut().for_each(|x| *x = 0);
                    for &(e, t) in &rows[a * r + b] {
                        for &(d, s) in &rows[e * r + c] {
                            lhs[d] += t * s;
                        }
                    }
                    for &(e, t) in &rows[b * r + c] {
                        for &(d, s) in &rows[a * r + e] {
                            rhs[d] += t * s;
                        }
                    }
                    ensure(lhs == rhs, || {
                        format!(
                            "({}·{})·{} != {}·({}·{})",
                            self.labels[a], self.labels[b], self.labels[c], self.labels[a], self.labels[b], self.labels[c]
                        )
                    })?;
                }
            }
            Ok(())
        })
    }

    /// The unit label acts as identity on both sides.
    pub fn check_unit(&self) -> Result<(), String> {
        let r = self.rank();
        let u = self.unit;
        (0..r).try_for_each(|a| {
            (0..r).try_for_each(|c| {
                let delta = i64::from(a == c);
                ensure(self.get(u, a, c) == delta && self.get(a, u, c) == delta, || {
                    format!("{} is not a unit at {}", self.labels[u], self.labels[a])
                })
            })
        })
    }

    /// Labels line, then one `a b c value` line per nonzero entry.
    pub fn dump(&self) -> String {
        let mut out = format!("labels {}\n", self.labels.join(" "));
        for (a, b, c, x) in self.entries() {
            out.push_str(&format!("{a} {b} {c} {x}\n"));
        }
        out
    }

    /// Sub-table on `subset`, or the first product leaving it.
    pub fn restrict(&self, subset: &[usize]) -> Result<FusionTable, String> {
        let r = self.rank();
        let pos: Vec<Option<usize>> = (0..r).map(|a| subset.iter().position(|&s| s == a)).collect();
        let unit = pos[self.unit].ok_or_else(|| format!("{} is not in the subset", self.labels[self.unit]))?;
        let s = subset.len();
        let mut coeffs = vec![0i64; s * s * s];
        for (x, &a) in subset.iter().enumerate() {
            for (y, &b) in subset.iter().enumerate() {
                for (c, &t) in self.row(a, b).iter().enumerate().filter(|(_, &t)| t != 0) {
                    let z = pos[c].ok_or_else(|| {
                        format!("{}·{} contains {}", self.labels[a], self.labels[b], self.labels[c])
                    })?;
                    coeffs[(x * s + y) * s + z] = t;
                }
            }
        }
        Ok(FusionTable::new(subset.iter().map(|&a| self.labels[a].clone()).collect(), unit, coeffs))
    }
}

/// The table read over a field, for computations with idempotents.
#[derive(Clone, Debug)]
pub struct FusionAlgebra {
    field: Field,
    rank: usize,
    products: Vec<Vec<(usize, Fe)>>,
}

impl FusionAlgebra {
    pub fn new(table: &FusionTable, field: Field) -> FusionAlgebra {
        let products = table
            .sparse_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|(c, x)| (c, field.from_int(x))).collect())
            .collect();
        FusionAlgebra { field, rank: table.rank(), products }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn zero(&self) -> Vec<Fe> {
        vec![self.field.zero(); self.rank]
    }

    pub fn basis(&self, a: usize) -> Vec<Fe> {
        let mut x = self.zero();
        x[a] = self.field.one();
        x
    }

    pub fn mul(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let r = self.rank;
        let mut out = self.zero();
        for (a, &xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, &yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = xa * yb;
                for &(c, t) in &self.products[a * r + b] {
                    out[c] += s * t;
                }
            }
        }
        out
    }
}

pub(crate) fn add(x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    x.iter().zip(y).map(|(&a, &b)| a + b).collect()
}

pub(crate) fn sub(x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    x.iter().zip(y).map(|(&a, &b)| a - b).collect()
}

pub(crate) fn scale(x: &[Fe], s: Fe) -> Vec<Fe> {
    x.iter().map(|&a| a * s).collect()
}

pub(crate) fn combination(terms: impl IntoIterator<Item = (Fe, Vec<Fe>)>, field: Field, len: usize) -> Vec<Fe> {
    terms
        .into_iter()
        .fold(vec![field.zero(); len], |acc, (s, v)| add(&acc, &scale(&v, s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FusionTable {
        // Z/2 group ring.
        FusionTable::new(vec!["a".into(), "b".into()], 0, vec![1, 0, 0, 1, 0, 1, 1, 0])
    }

    #[test]
    fn group_ring_is_associative_and_unital() {
        let t = z2();
        assert!(t.check_associative().is_ok());
        assert!(t.check_unit().is_ok());
        assert_eq!(t.dump(), "labels a b\n0 0 0 1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n");
    }

    #[test]
    fn broken_table_is_caught() {
        let mut t = z2();
        t.coeffs[1] = 1; // a·a = a + b
        assert!(t.check_unit().is_err());
        assert!(t.restrict(&[0]).is_err());
        assert_eq!(z2().restrict(&[0]).unwrap().coeffs, vec![1]);

        // b·b = c, b·c = b, c·b = 0: (bb)b = 0 but b(bb) = b.
        let mut coeffs = vec![0i64; 27];
        let mut set = |a: usize, b: usize, c: usize| coeffs[(a * 3 + b) * 3 + c] = 1;
        for x in 0..3 {
            set(0, x, x);
            set(x, 0, x);
        }
        set(1, 1, 2);
        set(1, 2, 1);
        let t = FusionTable::new(vec!["1".into(), "b".into(), "c".into()], 0, coeffs);
        assert!(t.check_unit().is_ok());
        assert!(t.check_associative().is_err());
    }
}
