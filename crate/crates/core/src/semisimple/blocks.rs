use super::IntegralPair;
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::hopf::{HopfAlgebra, HopfElement};
use crate::linalg::{split_commutative_algebra, Matrix, RowReducer};
use crate::report::{ensure, Check, Report};

/// Wedderburn data of a split semisimple Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockData {
    /// Central primitive idempotents; `e[0]` is the one with `ε(e_0) = 1`.
    pub e: Vec<HopfElement>,
    /// `dim(H e_i) = d_i²`.
    pub d: Vec<usize>,
    /// `chi[i][a] = χ_i(a)` on basis elements.
    pub chi: Vec<Vec<Fe>>,
    /// `S(e_i) = e_{dual[i]}`.
    pub dual: Vec<usize>,
    /// `λ(e_i)`.
    pub lambda_e: Vec<Fe>,
}

impl BlockData {
    pub fn m(&self) -> usize {
        self.e.len()
    }

    /// `χ_i(x)` for an arbitrary element.
    pub fn character(&self, i: usize, x: &[Fe]) -> Fe {
        let f = x[0].field();
        self.chi[i].iter().zip(x).map(|(&a, &b)| a * b).fold(f.zero(), |s, t| s + t)
    }
}

fn isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == n)
}

/// Basis of the center: the common kernel of `x ↦ bx - xb` over basis `b`.
pub fn center_basis(h: &HopfAlgebra) -> Vec<HopfElement> {
    let d = h.dim();
    let mut reducer = RowReducer::new(h.field(), d);
    for b in 0..d {
        let comm = h.left_mult_matrix(&h.basis(b)).sub(&h.right_mult_matrix(&h.basis(b)));
        for r in 0..d {
            reducer.insert(comm.row(r).to_vec());
        }
    }
    reducer.kernel()
}

/// Splits `H` into blocks, orders them canonically (trivial block first,
/// then by dimension, then by character row) and computes characters and the
/// duality permutation.
pub fn block_decomposition(h: &HopfAlgebra, integrals: &IntegralPair) -> Result<BlockData> {
    let dim = h.dim();
    let f = h.field();
    let center = center_basis(h);
    let ops: Vec<Matrix> = center.iter().map(|z| h.left_mult_matrix(z)).collect();
    let projectors = split_commutative_algebra(&ops)?;
    let chi_h = h.regular_character();

    struct Block {
        e: HopfElement,
        d: usize,
        chi: Vec<Fe>,
        eps: Fe,
    }
    let mut blocks = Vec::with_capacity(projectors.len());
    for (i, p) in projectors.iter().enumerate() {
        let e = p.mul_vec(h.unit());
        let size = p.rank();
        let d = isqrt(size).ok_or(Error::NonSquareBlockDim { block: i, dim: size })?;
        let d_inv = f
            .from_int(d as i64)
            .inv()
            .ok_or_else(|| Error::Hypothesis(format!("block dimension {d} vanishes in the field")))?;
        let chi = (0..dim)
            .map(|a| h.pair(&chi_h, &h.multiply(&h.basis(a), &e)) * d_inv)
            .collect();
        let eps = h.counit_of(&e);
        blocks.push(Block { e, d, chi, eps });
    }
    let trivial: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i].eps.is_one()).collect();
    if trivial.len() != 1 {
        return Err(Error::Inconsistent(format!("{} blocks with ε(e) = 1", trivial.len())));
    }
    let key = |b: &Block| (!b.eps.is_one(), b.d, b.chi.iter().map(Fe::encoding).collect::<Vec<_>>());
    blocks.sort_by_key(|x| key(x));

    let e: Vec<HopfElement> = blocks.iter().map(|b| b.e.clone()).collect();
    let mut dual = Vec::with_capacity(e.len());
    for (i, ei) in e.iter().enumerate() {
        let s = h.apply_antipode(ei, 1)?;
        let j = e
            .iter()
            .position(|ej| *ej == s)
            .ok_or_else(|| Error::Inconsistent(format!("S(e_{i}) is not a block idempotent")))?;
        dual.push(j);
    }
    let lambda_e = e.iter().map(|x| h.pair(&integrals.right, x)).collect();
    Ok(BlockData {
        e,
        d: blocks.iter().map(|b| b.d).collect(),
        chi: blocks.into_iter().map(|b| b.chi).collect(),
        dual,
        lambda_e,
    })
}

/// Idempotent relations, block dimensions, duality and independence of the
/// characters.
pub fn check_blocks(h: &HopfAlgebra, blocks: &BlockData) -> Report {
    let mut r = Report::new();
    let m = blocks.m();
    let f = h.field();
    let idem = (|| {
        let mut sum = h.zero();
        for i in 0..m {
            for j in 0..m {
                let p = h.multiply(&blocks.e[i], &blocks.e[j]);
                let expect = if i == j { blocks.e[i].clone() } else { h.zero() };
                ensure(p == expect, || format!("e_{i} e_{j} != δ e_{i}"))?;
            }
            for b in 0..h.dim() {
                let x = h.basis(b);
                ensure(h.multiply(&x, &blocks.e[i]) == h.multiply(&blocks.e[i], &x), || {
                    format!("e_{i} does not commute with basis element {b}")
                })?;
            }
            for (s, &x) in sum.iter_mut().zip(&blocks.e[i]) {
                *s += x;
            }
        }
        ensure(sum == h.one(), || "Σ e_i != 1".into())?;
        let eps: Vec<Fe> = blocks.e.iter().map(|x| h.counit_of(x)).collect();
        ensure(eps[0].is_one() && eps[1..].iter().all(|x| x.is_zero()), || {
            format!("ε(e_i) = {eps:?}")
        })
    })();
    r.push(Check::from_result("Blocks.idempotents", idem));

    let dims = (0..m).try_for_each(|i| {
        let rank = h.left_mult_matrix(&blocks.e[i]).rank();
        let d = blocks.d[i];
        ensure(rank == d * d, || format!("dim(H e_{i}) = {rank}, d_{i} = {d}"))?;
        let at_one = blocks.character(i, h.unit());
        ensure(at_one == f.from_int(d as i64), || format!("χ_{i}(1) = {at_one}, expected {d}"))
    });
    r.push(Check::from_result("Blocks.dims", dims));

    let duality = (0..m).try_for_each(|i| {
        let j = blocks.dual[i];
        ensure(blocks.dual[j] == i, || format!("duality is not an involution at {i}"))?;
        ensure(blocks.d[j] == blocks.d[i], || format!("d_{i} != d_{j}*"))?;
        ensure(blocks.lambda_e[j] == blocks.lambda_e[i], || format!("λ(e_{i}) != λ(e_{j})"))
    });
    r.push(Check::from_result("Blocks.duality", duality));

    let rank = Matrix::from_rows(f, blocks.chi.clone()).rank();
    r.push(Check::from_result(
        "Blocks.independent",
        ensure(rank == m, || format!("characters span rank {rank} < {m}")),
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::groups::Group;
    use crate::semisimple::compute_integrals;

    fn blocks_of(h: &HopfAlgebra) -> BlockData {
        block_decomposition(h, &compute_integrals(h).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_two() {
        let f = Field::prime(5).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::cyclic(2), f);
        let b = blocks_of(&h);
        assert_eq!(b.d, vec![1, 1]);
        assert_eq!(b.chi[1][1], f.from_int(-1));
        assert_eq!(b.dual, vec![0, 1]);
        assert!(check_blocks(&h, &b).all_passed());
    }

    #[test]
    fn symmetric_three() {
        let f = Field::prime(7).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::symmetric3(), f);
        let b = blocks_of(&h);
        assert_eq!(b.d, vec![1, 1, 2]);
        assert!(check_blocks(&h, &b).all_passed());
        let dual = blocks_of(&h.dual());
        assert_eq!(dual.d, vec![1; 6]);
    }

    #[test]
    fn cube_roots_need_extension() {
        // x² + x + 1 is irreducible over GF(5).
        let f = Field::prime(5).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::cyclic(3), f);
        let ip = compute_integrals(&h).unwrap();
        assert_eq!(block_decomposition(&h, &ip), Err(Error::SplittingFieldTooSmall { degree: 2 }));
    }
}
