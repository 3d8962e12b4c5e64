use super::HopfAlgebra;
use crate::error::Result;
use crate::field::Field;
use crate::groups::Group;
use crate::linalg::Matrix;

impl HopfAlgebra {
    /// `kG`: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn group_algebra(group: &Group, field: Field) -> HopfAlgebra {
        let n = group.order();
        let one = field.one();
        let mut unit = vec![field.zero(); n];
        unit[group.identity()] = one;
        let mut antipode = Matrix::zeros(field, n, n);
        for g in 0..n {
            antipode[(group.inverse(g), g)] = one;
        }
        HopfAlgebra::from_parts(
            field,
            n,
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b, group.mul(a, b), one))),
            (0..n).map(|g| (g, g, g, one)),
            unit,
            vec![one; n],
            antipode,
        )
        .expect("group algebra shapes are consistent")
    }

    /// Group algebra from a Cayley table, rejecting tables that are not groups.
    pub fn from_cayley(rows: &[Vec<usize>], field: Field) -> Result<HopfAlgebra> {
        Ok(HopfAlgebra::group_algebra(&Group::from_cayley(rows)?, field))
    }

    /// `(kG)*`, the algebra of functions on `G`, in the basis of point masses.
    pub fn dual_group_algebra(group: &Group, field: Field) -> HopfAlgebra {
        HopfAlgebra::group_algebra(group, field).dual()
    }

    /// `H*` in the dual basis: multiplication is the transposed
    /// comultiplication and vice versa, `S* = Sᵀ`, unit `ε`, counit `1_H`.
    pub fn dual(&self) -> HopfAlgebra {
        HopfAlgebra::from_parts(
            self.field,
            self.dim,
            self.comult_entries().map(|(a, b, c, x)| (b, c, a, x)),
            self.mult_entries().map(|(a, b, c, x)| (c, a, b, x)),
            self.counit.clone(),
            self.unit.clone(),
            self.antipode.transpose(),
        )
        .expect("dual shapes are consistent")
    }

    /// `H ⊗ K`; basis `(a, x)` is flattened as `a * dim K + x`.
    pub fn tensor_product(&self, other: &HopfAlgebra) -> HopfAlgebra {
        assert_eq!(self.field, other.field, "tensor factors over different fields");
        let (d, e) = (self.dim, other.dim);
        let idx = move |a: usize, x: usize| a * e + x;
        let mult: Vec<_> = self
            .mult_entries()
            .flat_map(|(a, b, c, s)| {
                other
                    .mult_entries()
                    .map(move |(x, y, z, t)| (idx(a, x), idx(b, y), idx(c, z), s * t))
            })
            .collect();
        let comult: Vec<_> = self
            .comult_entries()
            .flat_map(|(a, b, c, s)| {
                other
                    .comult_entries()
                    .map(move |(x, y, z, t)| (idx(a, x), idx(b, y), idx(c, z), s * t))
            })
            .collect();
        let outer = |u: &[_], v: &[_]| -> Vec<_> {
            u.iter().flat_map(|&a| v.iter().map(move |&b| a * b)).collect()
        };
        let mut antipode = Matrix::zeros(self.field, d * e, d * e);
        for (a, b) in (0..d).flat_map(|a| (0..d).map(move |b| (a, b))) {
            let s = self.antipode[(a, b)];
            if s.is_zero() {
                continue;
            }
            for x in 0..e {
                for y in 0..e {
                    antipode[(idx(a, x), idx(b, y))] = s * other.antipode[(x, y)];
                }
            }
        }
        HopfAlgebra::from_parts(
            self.field,
            d * e,
            mult,
            comult,
            outer(&self.unit, &other.unit),
            outer(&self.counit, &other.counit),
            antipode,
        )
        .expect("tensor product shapes are consistent")
    }
}
