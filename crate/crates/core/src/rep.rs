//! Simple modules `V_i ⊗ W_j` of the smash product and their characters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Fe;
use crate::hopf::{HopfAlgebra, HopfElement};
use crate::linalg::{factor_poly, minimal_polynomial, Matrix, RowReducer, RowSpaceSolver};
use crate::report::{ensure, Check, Report};
use crate::semisimple::{BlockData, IntegralPair, VElement};
use crate::smash::SmashAlgebra;

const SPLIT_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleLabel {
    pub i: usize,
    pub j: usize,
}

impl SimpleLabel {
    /// Position in the canonical label order `i * n + j`.
    pub fn index(self, n: usize) -> usize {
        self.i * n + self.j
    }
}

impl std::fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "V{}W{}", self.i, self.j)
    }
}

/// `values[a * n + k] = χ_i(a v^k) ψ^{jk}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashCharacter {
    pub label: SimpleLabel,
    pub values: Vec<Fe>,
}

/// All `m n` characters in label order.
pub fn enumerate_simples(sm: &SmashAlgebra, blocks: &BlockData, vd: &VElement, psi: Fe) -> Vec<SmashCharacter> {
    let h = &sm.base;
    let n = sm.n;
    let mut v_pow = vec![h.one()];
    for k in 1..n {
        v_pow.push(h.multiply(&v_pow[k - 1], &vd.v));
    }
    // base[i][a * n + k] = χ_i(a v^k)
    let base: Vec<Vec<Fe>> = (0..blocks.m())
        .map(|i| {
            (0..h.dim() * n)
                .map(|ak| blocks.character(i, &h.multiply(&h.basis(ak / n), &v_pow[ak % n])))
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(blocks.m() * n);
    for (i, row) in base.iter().enumerate() {
        for j in 0..n {
            let values = row
                .iter()
                .enumerate()
                .map(|(ak, &x)| x * psi.pow(((j * (ak % n)) % n) as u64))
                .collect();
            out.push(SmashCharacter { label: SimpleLabel { i, j }, values });
        }
    }
    out
}

/// An explicit simple `H`-module `V_i = H x` for a rank-one element `x` of
/// the block `H e_i`.
#[derive(Clone, Debug)]
pub struct SimpleHModule {
    pub block: usize,
    /// Basis of `V_i` inside `H`.
    pub basis: Vec<HopfElement>,
    /// `action[a]` is the matrix of the basis element `a`.
    pub action: Vec<Matrix>,
}

impl SimpleHModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of an arbitrary element.
    pub fn act(&self, x: &[Fe]) -> Matrix {
        let f = self.action[0].field();
        let mut out = Matrix::zeros(f, self.dim(), self.dim());
        for (a, &c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = out.add(&self.action[a].scale(c));
        }
        out
    }
}

fn rank_one_element(h: &HopfAlgebra, e: &[Fe], d: usize, rng: &mut ChaCha8Rng) -> Option<HopfElement> {
    let f = h.field();
    if d == 1 {
        return Some(e.to_vec());
    }
    for _ in 0..SPLIT_ATTEMPTS {
        let r: Vec<Fe> = (0..h.dim()).map(|_| f.element(rng.gen_range(0..f.order()))).collect();
        let a = h.multiply(&r, e);
        let fac = factor_poly(&minimal_polynomial(&h.left_mult_matrix(&a)));
        if fac.factors.iter().any(|(p, mult)| p.degree() != Some(1) || *mult > 1) {
            continue;
        }
        let roots: Vec<Fe> = fac.factors.iter().map(|(p, _)| -p.coeffs()[0]).collect();
        for (k, _) in roots.iter().enumerate() {
            let mut x = e.to_vec();
            for (l, &mu) in roots.iter().enumerate() {
                if l != k {
                    let shifted: Vec<Fe> = a.iter().zip(e).map(|(&ai, &ei)| ai - mu * ei).collect();
                    x = h.multiply(&x, &shifted);
                }
            }
            if h.right_mult_matrix(&x).rank() == d {
                return Some(x);
            }
        }
    }
    None
}

/// Builds `V_i` from a seeded random element of the block.
pub fn simple_h_module(h: &HopfAlgebra, blocks: &BlockData, i: usize, seed: u64) -> Result<SimpleHModule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let d = blocks.d[i];
    let x = rank_one_element(h, &blocks.e[i], d, &mut rng).ok_or(Error::RepresentationSplitFailure(i))?;
    let mut reducer = RowReducer::new(h.field(), h.dim());
    let mut basis = Vec::with_capacity(d);
    for b in 0..h.dim() {
        let y = h.multiply(&h.basis(b), &x);
        if reducer.insert(y.clone()) {
            basis.push(y);
        }
    }
    if basis.len() != d {
        return Err(Error::RepresentationSplitFailure(i));
    }
    let solver = RowSpaceSolver::new(Matrix::from_rows(h.field(), basis.clone()))?;
    let mut action = Vec::with_capacity(h.dim());
    for a in 0..h.dim() {
        let cols: Vec<Vec<Fe>> = basis
            .iter()
            .map(|y| solver.coords(&h.multiply(&h.basis(a), y)))
            .collect::<Result<_>>()
            .map_err(|_| Error::RepresentationSplitFailure(i))?;
        action.push(Matrix::from_columns(h.field(), d, &cols));
    }
    Ok(SimpleHModule { block: i, basis, action })
}

/// `ρ(h # g^k) = ψ^{jk} ρ_i(h v^k)` for every smash basis element.
pub fn module_action(sm: &SmashAlgebra, module: &SimpleHModule, j: usize, vd: &VElement, psi: Fe) -> Vec<Matrix> {
    let h = &sm.base;
    let n = sm.n;
    let mut v_pow = vec![h.one()];
    for k in 1..n {
        v_pow.push(h.multiply(&v_pow[k - 1], &vd.v));
    }
    (0..sm.product.dim())
        .map(|ak| {
            let (a, k) = (ak / n, ak % n);
            module
                .act(&h.multiply(&h.basis(a), &v_pow[k]))
                .scale(psi.pow(((j * k) % n) as u64))
        })
        .collect()
}

fn check_action(sm: &SmashAlgebra, rho: &[Matrix], chi: &SmashCharacter) -> std::result::Result<(), String> {
    let p = &sm.product;
    let d = rho[0].rows();
    let f = p.field();
    for x in 0..p.dim() {
        ensure(rho[x].trace() == chi.values[x], || {
            format!("{}: trace of basis element {x} differs from the character", chi.label)
        })?;
        for y in 0..p.dim() {
            let lhs = rho[x].mul(&rho[y]);
            let mut rhs = Matrix::zeros(f, d, d);
            for &(c, m) in p.product_of(x, y) {
                rhs = rhs.add(&rho[c].scale(m));
            }
            ensure(lhs == rhs, || format!("{}: ρ(x)ρ(y) != ρ(xy) at ({x}, {y})", chi.label))?;
        }
    }
    Ok(())
}

/// Dimension of the commutant `{X : ρ(x)X = Xρ(x)}`.
fn commutant_dim(rho: &[Matrix]) -> usize {
    let d = rho[0].rows();
    let f = rho[0].field();
    let mut reducer = RowReducer::new(f, d * d);
    for m in rho {
        // Coefficient of X[s][t] in (mX - Xm)[r][c].
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![f.zero(); d * d];
                for s in 0..d {
                    row[s * d + c] += m[(r, s)];
                    row[r * d + s] -= m[(s, c)];
                }
                reducer.insert(row);
            }
        }
        if reducer.rank() + 1 == d * d {
            break;
        }
    }
    d * d - reducer.rank()
}

/// Inputs shared by the representation checks.
pub struct RepContext<'a> {
    pub sm: &'a SmashAlgebra,
    pub blocks: &'a BlockData,
    pub vd: &'a VElement,
    pub psi: Fe,
    pub seed: u64,
}

/// Explicit modules: homomorphism law, traces, and simplicity.
pub fn verify_modules(ctx: &RepContext, chars: &[SmashCharacter]) -> Report {
    let mut r = Report::new();
    let h = &ctx.sm.base;
    let n = ctx.sm.n;
    let mut hom = Ok(());
    let mut simple = Ok(());
    'blocks: for i in 0..ctx.blocks.m() {
        let module = match simple_h_module(h, ctx.blocks, i, ctx.seed) {
            Ok(m) => m,
            Err(e) => {
                hom = Err(e.to_string());
                simple = Err(e.to_string());
                break;
            }
        };
        for j in 0..n {
            let rho = module_action(ctx.sm, &module, j, ctx.vd, ctx.psi);
            if let Err(w) = check_action(ctx.sm, &rho, &chars[i * n + j]) {
                hom = Err(w);
                break 'blocks;
            }
            if simple.is_ok() {
                let c = commutant_dim(&rho);
                if c != 1 {
                    simple = Err(format!("V{i}W{j}: commutant has dimension {c}"));
                }
            }
        }
    }
    r.push(Check::from_result("Lemma.module", hom));
    r.push(Check::from_result("Lemma2.simple", simple));
    r
}

/// Trivial character, linear independence and completeness of the simple
/// characters.
pub fn verify_completeness(
    ctx: &RepContext,
    chars: &[SmashCharacter],
    smash_integrals: &IntegralPair,
    smash_u: &[Fe],
) -> Report {
    let mut r = Report::new();
    let p = &ctx.sm.product;
    let h = &ctx.sm.base;
    let f = p.field();
    let n = ctx.sm.n;

    r.push(Check::from_result(
        "Remark.chi00",
        ensure(chars[0].values == p.counit(), || "χ_00 differs from the counit".into()),
    ));

    let rank = Matrix::from_rows(f, chars.iter().map(|c| c.values.clone()).collect()).rank();
    r.push(Check::from_result(
        "Thm3.independent",
        ensure(rank == chars.len(), || format!("rank {rank} < {}", chars.len())),
    ));

    let complete = (|| {
        let regular = p.regular_character();
        let mut weighted = vec![f.zero(); p.dim()];
        for c in chars {
            let d = f.from_int(ctx.blocks.d[c.label.i] as i64);
            for (w, &x) in weighted.iter_mut().zip(&c.values) {
                *w += d * x;
            }
        }
        ensure(weighted == regular, || "Σ d_i χ_ij differs from the regular character".into())?;
        let chi_h = h.regular_character();
        let nn = f.from_int(n as i64);
        (0..p.dim()).try_for_each(|ak| {
            let expect = if ak % n == 0 { nn * chi_h[ak / n] } else { f.zero() };
            ensure(regular[ak] == expect, || {
                format!("χ_smash(h # g^k) at (h, k) = ({}, {}) is {}, expected {expect}", ak / n, ak % n, regular[ak])
            })
        })?;
        (0..p.dim()).try_for_each(|x| {
            let t = p.pair(&smash_integrals.right, &p.multiply(smash_u, &p.basis(x)));
            ensure(t == regular[x], || format!("(λ # Σψ^j)(u x) != χ_smash(x) at x = {x}"))
        })
    })();
    r.push(Check::from_result("Thm3.complete", complete));
    r
}

/// `χ_{i*, -j} = χ_ij ∘ S` for every label.
pub fn verify_duals(ctx: &RepContext, chars: &[SmashCharacter]) -> Report {
    let mut r = Report::new();
    let p = &ctx.sm.product;
    let n = ctx.sm.n;
    let s = p.antipode();
    let res = chars.iter().try_for_each(|c| {
        let composed: Vec<Fe> = (0..p.dim())
            .map(|x| {
                (0..p.dim())
                    .map(|y| s[(y, x)] * c.values[y])
                    .fold(p.field().zero(), |a, b| a + b)
            })
            .collect();
        let dual = SimpleLabel { i: ctx.blocks.dual[c.label.i], j: (n - c.label.j) % n };
        ensure(chars[dual.index(n)].values == composed, || {
            format!("χ_{dual} != χ_{} ∘ S", c.label)
        })
    });
    r.push(Check::from_result("Prop.dual", res));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::groups::Group;
    use crate::semisimple::{block_decomposition, compute_integrals, compute_u, compute_v};
    use crate::smash::{build_smash, smash_integral, smash_u};

    #[test]
    fn cyclic_two_simples() {
        let f = Field::new(5, 2).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::cyclic(2), f);
        let ip = compute_integrals(&h).unwrap();
        let b = block_decomposition(&h, &ip).unwrap();
        let u = compute_u(&h, &ip).unwrap();
        let vd = compute_v(&h, &ip, &b, &u).unwrap();
        let sm = build_smash(&h).unwrap();
        let psi = f.primitive_root_of_unity(4).unwrap();
        let chars = enumerate_simples(&sm, &b, &vd, psi);
        assert_eq!(chars.len(), 8);
        let ctx = RepContext { sm: &sm, blocks: &b, vd: &vd, psi, seed: 7 };
        let sip = smash_integral(&sm, &ip).unwrap();
        let us = smash_u(&sm, &sip).unwrap();
        for rep in [verify_modules(&ctx, &chars), verify_completeness(&ctx, &chars, &sip, &us), verify_duals(&ctx, &chars)] {
            assert!(rep.all_passed(), "{rep}");
        }
    }

    #[test]
    fn two_dimensional_module_of_s3() {
        let f = Field::new(7, 2).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::symmetric3(), f);
        let ip = compute_integrals(&h).unwrap();
        let b = block_decomposition(&h, &ip).unwrap();
        let m = simple_h_module(&h, &b, 2, 1).unwrap();
        assert_eq!(m.dim(), 2);
        for x in 0..6 {
            for y in 0..6 {
                let xy = h.multiply(&h.basis(x), &h.basis(y));
                assert_eq!(m.action[x].mul(&m.action[y]), m.act(&xy));
            }
            assert_eq!(m.action[x].trace(), b.chi[2][x]);
        }
        assert_eq!(commutant_dim(&m.action), 1);
    }
}
