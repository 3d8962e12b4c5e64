//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Basis elements are `0..dim`. Elements are dense coefficient vectors
//! ([`HopfElement`]); elements of `H ⊗ H` are dense vectors of length `dim²`
//! indexed by `b * dim + c`.

mod constructors;
mod validate;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::{Embedding, Fe, Field};
use crate::linalg::{solve, Matrix};

pub use validate::{validate_hopf, ValidationReport};

/// Coefficient vector of length `dim`.
pub type HopfElement = Vec<Fe>;

/// Structure constants of a Hopf algebra. Construction does not check the
/// axioms; use [`validate_hopf`].
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: Field,
    dim: usize,
    /// `mult[a * dim + b]` lists `(c, m_ab^c)` with nonzero coefficients.
    mult: Vec<Vec<(usize, Fe)>>,
    /// `comult[a]` lists `(b, c, Δ_a^bc)` with nonzero coefficients.
    comult: Vec<Vec<(usize, usize, Fe)>>,
    unit: Vec<Fe>,
    counit: Vec<Fe>,
    /// Column `b` is `S(b)`.
    antipode: Matrix,
    antipode_cols: Vec<Vec<(usize, Fe)>>,
    antipode_inv: OnceLock<Option<Matrix>>,
}

/// Sums duplicate keys and drops zeros; leaves `terms` sorted by key.
pub(crate) fn combine<K: Ord + Copy>(terms: &mut Vec<(K, Fe)>) {
    terms.sort_unstable_by_key(|t| t.0);
    let mut out = 0;
    for i in 0..terms.len() {
        if out > 0 && terms[out - 1].0 == terms[i].0 {
            let v = terms[i].1;
            terms[out - 1].1 += v;
        } else {
            terms[out] = terms[i];
            out += 1;
        }
    }
    terms.truncate(out);
    terms.retain(|t| !t.1.is_zero());
}

impl HopfAlgebra {
    /// Raw ingestion. Entries are `(a, b, c, coefficient)`; repeated index
    /// triples are summed. Only shapes and index ranges are checked.
    pub fn from_parts(
        field: Field,
        dim: usize,
        mult: impl IntoIterator<Item = (usize, usize, usize, Fe)>,
        comult: impl IntoIterator<Item = (usize, usize, usize, Fe)>,
        unit: Vec<Fe>,
        counit: Vec<Fe>,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit has length {}, counit has length {}, expected {dim}",
                unit.len(),
                counit.len()
            )));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "antipode is {}x{}, expected {dim}x{dim}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        let check_field = |x: Fe| {
            if x.field() == field {
                Ok(())
            } else {
                Err(Error::DimensionMismatch("coefficient from a different field".into()))
            }
        };
        let mut mult_terms: Vec<Vec<(usize, Fe)>> = vec![Vec::new(); dim * dim];
        for (a, b, c, x) in mult {
            if a >= dim || b >= dim || c >= dim {
                return Err(Error::DimensionMismatch(format!("mult index ({a}, {b}, {c}) out of range")));
            }
            check_field(x)?;
            mult_terms[a * dim + b].push((c, x));
        }
        mult_terms.iter_mut().for_each(combine);
        let mut comult_terms: Vec<Vec<((usize, usize), Fe)>> = vec![Vec::new(); dim];
        for (a, b, c, x) in comult {
            if a >= dim || b >= dim || c >= dim {
                return Err(Error::DimensionMismatch(format!("comult index ({a}, {b}, {c}) out of range")));
            }
            check_field(x)?;
            comult_terms[a].push(((b, c), x));
        }
        comult_terms.iter_mut().for_each(combine);
        let comult = comult_terms
            .into_iter()
            .map(|t| t.into_iter().map(|((b, c), x)| (b, c, x)).collect())
            .collect();
        for &x in unit.iter().chain(&counit) {
            check_field(x)?;
        }
        let antipode_cols = (0..dim)
            .map(|b| (0..dim).filter_map(|a| Some((a, antipode[(a, b)])).filter(|t| !t.1.is_zero())).collect())
            .collect();
        Ok(HopfAlgebra {
            field,
            dim,
            mult: mult_terms,
            comult,
            unit,
            counit,
            antipode,
            antipode_cols,
            antipode_inv: OnceLock::new(),
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(c, m_ab^c)` for the product of basis elements `a` and `b`.
    pub fn product_of(&self, a: usize, b: usize) -> &[(usize, Fe)] {
        &self.mult[a * self.dim + b]
    }

    /// `(b, c, Δ_a^bc)` for the coproduct of basis element `a`.
    pub fn coproduct_of(&self, a: usize) -> &[(usize, usize, Fe)] {
        &self.comult[a]
    }

    pub fn mult_entries(&self) -> impl Iterator<Item = (usize, usize, usize, Fe)> + '_ {
        let d = self.dim;
        self.mult
            .iter()
            .enumerate()
            .flat_map(move |(ab, terms)| terms.iter().map(move |&(c, x)| (ab / d, ab % d, c, x)))
    }

    pub fn comult_entries(&self) -> impl Iterator<Item = (usize, usize, usize, Fe)> + '_ {
        self.comult
            .iter()
            .enumerate()
            .flat_map(|(a, terms)| terms.iter().map(move |&(b, c, x)| (a, b, c, x)))
    }

    pub fn unit(&self) -> &[Fe] {
        &self.unit
    }

    pub fn counit(&self) -> &[Fe] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// Nonzero entries of `S(b)`.
    pub fn antipode_of(&self, b: usize) -> &[(usize, Fe)] {
        &self.antipode_cols[b]
    }

    pub fn zero(&self) -> HopfElement {
        vec![self.field.zero(); self.dim]
    }

    pub fn one(&self) -> HopfElement {
        self.unit.clone()
    }

    pub fn basis(&self, a: usize) -> HopfElement {
        let mut x = self.zero();
        x[a] = self.field.one();
        x
    }

    pub fn scalar(&self, s: Fe) -> HopfElement {
        self.unit.iter().map(|&u| u * s).collect()
    }

    pub fn multiply(&self, x: &[Fe], y: &[Fe]) -> HopfElement {
        let mut out = self.zero();
        for (a, &xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, &yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xa * yb;
                for &(c, m) in self.product_of(a, b) {
                    out[c] += s * m;
                }
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn multiply_all(&self, xs: &[&[Fe]]) -> HopfElement {
        xs.iter().fold(self.one(), |acc, x| self.multiply(&acc, x))
    }

    pub fn power(&self, x: &[Fe], e: u64) -> HopfElement {
        (0..e).fold(self.one(), |acc, _| self.multiply(&acc, x))
    }

    /// `Δ(x)` as a dense `dim²` vector.
    pub fn comultiply(&self, x: &[Fe]) -> Vec<Fe> {
        let d = self.dim;
        let mut out = vec![self.field.zero(); d * d];
        for (a, &xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for &(b, c, m) in self.coproduct_of(a) {
                out[b * d + c] += xa * m;
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[Fe]) -> Fe {
        x.iter().zip(&self.counit).map(|(&a, &b)| a * b).sum()
    }

    /// Product in `H ⊗ H` of dense `dim²` vectors.
    pub fn tensor_multiply(&self, s: &[Fe], t: &[Fe]) -> Vec<Fe> {
        let d = self.dim;
        let mut out = vec![self.field.zero(); d * d];
        let nz = |v: &[Fe]| -> Vec<(usize, usize, Fe)> {
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, &x)| (i / d, i % d, x))
                .collect()
        };
        let (sn, tn) = (nz(s), nz(t));
        for &(a, b, x) in &sn {
            for &(c, e, y) in &tn {
                let xy = x * y;
                for &(u, m1) in self.product_of(a, c) {
                    let k = xy * m1;
                    for &(w, m2) in self.product_of(b, e) {
                        out[u * d + w] += k * m2;
                    }
                }
            }
        }
        out
    }

    /// `x ⊗ y` as a dense `dim²` vector.
    pub fn tensor(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        x.iter().flat_map(|&a| y.iter().map(move |&b| a * b)).collect()
    }

    fn antipode_inverse(&self) -> Option<&Matrix> {
        self.antipode_inv.get_or_init(|| self.antipode.inverse()).as_ref()
    }

    /// Matrix of `S^power`; negative powers use the inverse of `S`.
    pub fn antipode_power(&self, power: i64) -> Result<Matrix> {
        let base = if power >= 0 {
            &self.antipode
        } else {
            self.antipode_inverse()
                .ok_or_else(|| Error::InvalidHopf("antipode matrix is singular".into()))?
        };
        Ok(base.pow(power.unsigned_abs()))
    }

    pub fn apply_antipode(&self, x: &[Fe], power: i64) -> Result<HopfElement> {
        if power == 1 {
            return Ok(self.antipode.mul_vec(x));
        }
        Ok(self.antipode_power(power)?.mul_vec(x))
    }

    /// Column `b` is `x · b`.
    pub fn left_mult_matrix(&self, x: &[Fe]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (a, &xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for b in 0..self.dim {
                for &(c, k) in self.product_of(a, b) {
                    m[(c, b)] += xa * k;
                }
            }
        }
        m
    }

    /// Column `b` is `b · x`.
    pub fn right_mult_matrix(&self, x: &[Fe]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (a, &xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for b in 0..self.dim {
                for &(c, k) in self.product_of(b, a) {
                    m[(c, b)] += xa * k;
                }
            }
        }
        m
    }

    /// Two-sided inverse, if any.
    pub fn inverse(&self, x: &[Fe]) -> Option<HopfElement> {
        let y = solve(&self.left_mult_matrix(x), &self.unit).ok()?;
        (self.multiply(&y, x) == self.unit).then_some(y)
    }

    /// `χ_H(a) = tr(L_a)` on each basis element.
    pub fn regular_character(&self) -> Vec<Fe> {
        (0..self.dim)
            .map(|a| {
                (0..self.dim)
                    .flat_map(|b| self.product_of(a, b).iter().filter(move |t| t.0 == b).map(|t| t.1))
                    .fold(self.field.zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// Evaluates a functional (coefficient vector on the basis).
    pub fn pair(&self, f: &[Fe], x: &[Fe]) -> Fe {
        f.iter().zip(x).map(|(&a, &b)| a * b).fold(self.field.zero(), |s, t| s + t)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|a| (0..self.dim).all(|b| self.product_of(a, b) == self.product_of(b, a)))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|a| {
            let mut flipped: Vec<((usize, usize), Fe)> =
                self.coproduct_of(a).iter().map(|&(b, c, x)| ((c, b), x)).collect();
            combine(&mut flipped);
            let orig: Vec<((usize, usize), Fe)> = self.coproduct_of(a).iter().map(|&(b, c, x)| ((b, c), x)).collect();
            flipped == orig
        })
    }

    /// `S² = id`.
    pub fn is_involutory(&self) -> bool {
        self.antipode.mul(&self.antipode).is_identity()
    }

    /// The same structure constants read in a larger field.
    pub fn embed(&self, emb: &Embedding) -> Result<HopfAlgebra> {
        if emb.source() != self.field {
            return Err(Error::DimensionMismatch("embedding from a different field".into()));
        }
        let f = emb.target();
        let d = self.dim;
        let map = |v: &[Fe]| -> Vec<Fe> { v.iter().map(|&x| emb.apply(x)).collect() };
        let antipode = Matrix::from_rows(f, (0..d).map(|r| map(self.antipode.row(r))).collect());
        HopfAlgebra::from_parts(
            f,
            d,
            self.mult_entries().map(|(a, b, c, x)| (a, b, c, emb.apply(x))),
            self.comult_entries().map(|(a, b, c, x)| (a, b, c, emb.apply(x))),
            map(&self.unit),
            map(&self.counit),
            antipode,
        )
    }
}

/// Same dimension, field and structure constants.
impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &HopfAlgebra) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.mult == other.mult
            && self.comult == other.comult
            && self.unit == other.unit
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl Eq for HopfAlgebra {}
