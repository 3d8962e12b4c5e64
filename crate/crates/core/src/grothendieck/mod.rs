//! Grothendieck algebras of `H` (with the convolution `*` and the twisted
//! product `⋆`) and of the smash product, with the corner decomposition by
//! the idempotents `θ_l`.

mod table;
mod theorem;

use rayon::prelude::*;

pub use table::{FusionAlgebra, FusionTable};
pub use theorem::{
    quantum_dimensions, subcategory_c, subcategory_labels, theta_idempotents, verify_theta,
    verify_theorem_decomposition, QuantumDims, ThetaIdempotent,
};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, RowSpaceSolver};
use crate::rep::SmashCharacter;
use crate::report::{ensure, Check, Report};
use crate::semisimple::{BlockData, VElement};
use crate::smash::SmashAlgebra;

/// Coordinates of `target` in the span of `chars`.
fn character_solver(field: Field, chars: Vec<Vec<Fe>>) -> Result<RowSpaceSolver> {
    RowSpaceSolver::new(Matrix::from_rows(field, chars))
        .map_err(|_| Error::NonIntegralCoefficient("characters are linearly dependent".into()))
}

fn coordinates(solver: &RowSpaceSolver, target: &[Fe], what: &str) -> Result<Vec<Fe>> {
    solver
        .coords(target)
        .map_err(|_| Error::NonIntegralCoefficient(format!("{what} is not a combination of simple characters")))
}

/// Representative in `[0, p)`, bounded by `bound`.
fn lift_count(x: Fe, bound: i64, what: impl Fn() -> String) -> Result<i64> {
    let v = x
        .to_prime()
        .ok_or_else(|| Error::NonIntegralCoefficient(format!("{} = {x} is not in the prime field", what())))?;
    let v = i64::from(v);
    if v > bound {
        return Err(Error::NonIntegralCoefficient(format!("{} = {v} exceeds the bound {bound}", what())));
    }
    Ok(v)
}

fn h_labels(m: usize) -> Vec<String> {
    (0..m).map(|i| format!("V{i}")).collect()
}

/// `(χ_i * χ_j)(h) = (χ_i ⊗ χ_j)(Δ(h))`, decomposed over the characters.
pub fn star_product_coeffs(h: &HopfAlgebra, blocks: &BlockData) -> Result<FusionTable> {
    let m = blocks.m();
    let solver = character_solver(h.field(), blocks.chi.clone())?;
    let mut coeffs = vec![0i64; m * m * m];
    for i in 0..m {
        for j in 0..m {
            let prod: Vec<Fe> = (0..h.dim())
                .map(|a| {
                    h.coproduct_of(a)
                        .iter()
                        .fold(h.field().zero(), |s, &(b, c, x)| s + x * blocks.chi[i][b] * blocks.chi[j][c])
                })
                .collect();
            let bound = (blocks.d[i] * blocks.d[j]) as i64;
            for (k, x) in coordinates(&solver, &prod, &format!("χ{i} * χ{j}"))?.into_iter().enumerate() {
                coeffs[(i * m + j) * m + k] = lift_count(x, bound, || format!("N_{i}{j}^{k}"))?;
            }
        }
    }
    Ok(FusionTable::new(h_labels(m), 0, coeffs))
}

/// `(χ_i ⋆ χ_j)(h) = (χ_i ⊗ χ_j)(Δ(h) Δ(v⁻¹)(v ⊗ v))`, decomposed over the
/// characters with coefficients in `(-p/2, p/2]`, constrained by `N`.
pub fn newstar_product_coeffs(
    h: &HopfAlgebra,
    blocks: &BlockData,
    vd: &VElement,
    n_table: &FusionTable,
) -> Result<FusionTable> {
    let m = blocks.m();
    let d = h.dim();
    let f = h.field();
    let solver = character_solver(f, blocks.chi.clone())?;
    let twist = h.tensor_multiply(&h.comultiply(&vd.v_inv), &h.tensor(&vd.v, &vd.v));
    let twisted: Vec<Vec<Fe>> = (0..d)
        .map(|a| h.tensor_multiply(&h.comultiply(&h.basis(a)), &twist))
        .collect();
    let mut coeffs = vec![0i64; m * m * m];
    for i in 0..m {
        for j in 0..m {
            let prod: Vec<Fe> = twisted
                .iter()
                .map(|w| {
                    w.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .fold(f.zero(), |s, (bc, &x)| s + x * blocks.chi[i][bc / d] * blocks.chi[j][bc % d])
                })
                .collect();
            for (k, x) in coordinates(&solver, &prod, &format!("χ{i} ⋆ χ{j}"))?.into_iter().enumerate() {
                let l = x.lift_symmetric().ok_or_else(|| {
                    Error::NonIntegralCoefficient(format!("L_{i}{j}^{k} = {x} is not in the prime field"))
                })?;
                let n = n_table.get(i, j, k);
                if l.abs() > n || (n - l) % 2 != 0 {
                    return Err(Error::ConstraintViolation(format!(
                        "N_{i}{j}^{k} = {n}, L_{i}{j}^{k} = {l}: (N ± L)/2 is not a nonnegative integer"
                    )));
                }
                coeffs[(i * m + j) * m + k] = l;
            }
        }
    }
    Ok(FusionTable::new(h_labels(m), 0, coeffs))
}

/// Full table of the smash product by convolution over its coproduct.
pub fn smash_fusion_table(sm: &SmashAlgebra, chars: &[SmashCharacter], dims: &[usize]) -> Result<FusionTable> {
    let p = &sm.product;
    let f = p.field();
    let r = chars.len();
    let solver = character_solver(f, chars.iter().map(|c| c.values.clone()).collect())?;
    let dim_of = |a: usize| dims[chars[a].label.i] as i64;
    let rows: Vec<Vec<i64>> = (0..r * r)
        .into_par_iter()
        .map(|ab| {
            let (a, b) = (ab / r, ab % r);
            let (x, y) = (&chars[a].values, &chars[b].values);
            let prod: Vec<Fe> = (0..p.dim())
                .map(|z| p.coproduct_of(z).iter().fold(f.zero(), |s, &(u, w, c)| s + c * x[u] * y[w]))
                .collect();
            let what = format!("χ{} * χ{}", chars[a].label, chars[b].label);
            coordinates(&solver, &prod, &what)?
                .into_iter()
                .enumerate()
                .map(|(c, t)| {
                    lift_count(t, dim_of(a) * dim_of(b), || {
                        format!("coefficient of {} in {what}", chars[c].label)
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let labels = chars.iter().map(|c| c.label.to_string()).collect();
    Ok(FusionTable::new(labels, 0, rows.concat()))
}

/// Table laws of `N`, `L` and the smash table, the constraints relating `N`
/// and `L`, and the three product formulas for smash characters.
pub fn check_fusion(
    h_is_involutory: bool,
    blocks: &BlockData,
    n_table: &FusionTable,
    l_table: &FusionTable,
    smash: &FusionTable,
    n: usize,
) -> Report {
    let mut r = Report::new();
    let m = blocks.m();

    let fusion_n = n_table.check_associative().and_then(|_| n_table.check_unit()).and_then(|_| {
        (0..m).try_for_each(|i| {
            (0..m).try_for_each(|j| {
                let total: i64 = (0..m).map(|k| n_table.get(i, j, k) * blocks.d[k] as i64).sum();
                let expect = (blocks.d[i] * blocks.d[j]) as i64;
                ensure(total == expect, || format!("Σ_k N_{i}{j}^k d_k = {total}, expected {expect}"))
            })
        })
    });
    r.push(Check::from_result("Fusion.N", fusion_n));
    r.push(Check::from_result(
        "Prop4.star_assoc",
        l_table.check_associative().and_then(|_| l_table.check_unit()),
    ));
    r.push(if h_is_involutory {
        Check::from_result(
            "Remark6",
            ensure(l_table.coeffs == n_table.coeffs, || {
                let (a, b, c, _) = n_table
                    .entries()
                    .chain(l_table.entries())
                    .find(|&(a, b, c, _)| n_table.get(a, b, c) != l_table.get(a, b, c))
                    .expect("tables differ");
                format!("L_{a}{b}^{c} != N_{a}{b}^{c}")
            }),
        )
    } else {
        Check::not_applicable("Remark6", "S² != id")
    });
    let remark9 = n_table.coeffs.iter().zip(&l_table.coeffs).enumerate().try_for_each(|(idx, (&nv, &lv))| {
        ensure(nv + lv >= 0 && nv - lv >= 0 && (nv + lv) % 2 == 0, || {
            format!("(N ± L)/2 at {:?} with N = {nv}, L = {lv}", (idx / (m * m), (idx / m) % m, idx % m))
        })
    });
    r.push(Check::from_result("Remark9", remark9));
    r.push(Check::from_result(
        "Fusion.smash",
        smash.check_associative().and_then(|_| smash.check_unit()),
    ));

    let idx = |i: usize, j: usize| i * n + j;
    let prop11 = (0..m).try_for_each(|i| {
        (0..n).try_for_each(|j| {
            for (x, y) in [(idx(i, 0), idx(0, j)), (idx(0, j), idx(i, 0))] {
                let row = smash.row(x, y);
                ensure(row.iter().enumerate().all(|(c, &t)| t == i64::from(c == idx(i, j))), || {
                    format!("{} * {} != χ{}", smash.labels[x], smash.labels[y], smash.labels[idx(i, j)])
                })?;
            }
            Ok(())
        })
    });
    r.push(Check::from_result("Prop1.1", prop11));

    let formula = |i: usize, j: usize, s: usize, t: usize| -> std::result::Result<(), String> {
        let mut expect = vec![0i64; m * n];
        for k in 0..m {
            let (nv, lv) = (n_table.get(i, j, k), l_table.get(i, j, k));
            expect[idx(k, (s + t) % n)] += (nv + lv) / 2;
            expect[idx(k, (s + t + n / 2) % n)] += (nv - lv) / 2;
        }
        let got = smash.row(idx(i, s), idx(j, t));
        match (0..m * n).find(|&c| got[c] != expect[c]) {
            None => Ok(()),
            Some(c) => Err(format!(
                "(i, j, s, t, k) = ({i}, {j}, {s}, {t}, {}): coefficient of {} is {}, expected {}",
                c / n, smash.labels[c], got[c], expect[c]
            )),
        }
    };
    let prop12 = (0..m).try_for_each(|i| (0..m).try_for_each(|j| formula(i, j, 0, 0)));
    r.push(Check::from_result("Prop1.2", prop12));
    let prop13 = (0..m).try_for_each(|i| {
        (0..m).try_for_each(|j| (0..n).try_for_each(|s| (0..n).try_for_each(|t| formula(i, j, s, t))))
    });
    r.push(Check::from_result("Prop1.3", prop13));

    let frobenius = (0..m).try_for_each(|i| {
        (0..m).try_for_each(|j| {
            let expect = i64::from(j == blocks.dual[i]);
            ensure(n_table.get(i, j, 0) == expect, || {
                format!("N_{i}{j}^0 = {}, expected {expect}", n_table.get(i, j, 0))
            })
        })
    });
    r.push(Check::from_result("Fusion.frobenius", frobenius));
    r
}
