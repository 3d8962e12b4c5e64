use super::table::{add, combination, scale, sub, FusionAlgebra, FusionTable};
use crate::field::{Fe, Field};
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::report::{ensure, Check, Report};
use crate::semisimple::{BlockData, VElement};

type CheckResult = std::result::Result<(), String>;

/// `θ_l = (1/n) Σ_t ψ^{-lt} χ_{0t}`, stored by its coefficients on `χ_{0t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaIdempotent {
    pub l: usize,
    pub coeffs: Vec<Fe>,
}

impl ThetaIdempotent {
    /// As an element of the smash algebra, where `χ_{0t}` has index `t`.
    pub fn embed(&self, rank: usize) -> Vec<Fe> {
        let f = self.coeffs[0].field();
        let mut x = vec![f.zero(); rank];
        x[..self.coeffs.len()].copy_from_slice(&self.coeffs);
        x
    }
}

pub fn theta_idempotents(n: usize, psi: Fe) -> Vec<ThetaIdempotent> {
    let f = psi.field();
    let n_inv = f.from_int(n as i64).inv().expect("n is invertible");
    let psi_inv = psi.inv().expect("ψ is a unit");
    (0..n)
        .map(|l| ThetaIdempotent {
            l,
            coeffs: (0..n).map(|t| n_inv * psi_inv.pow(((l * t) % n) as u64)).collect(),
        })
        .collect()
}

fn power_sign(psi: Fe, e: usize, n: usize) -> Fe {
    psi.pow((e % n) as u64)
}

/// Idempotency, orthogonality, completeness, centrality and the action of
/// `χ_{ij}` on each `θ_l`.
pub fn verify_theta(alg: &FusionAlgebra, thetas: &[ThetaIdempotent], m: usize, n: usize, psi: Fe) -> Report {
    let mut r = Report::new();
    let rank = alg.rank();
    let th: Vec<Vec<Fe>> = thetas.iter().map(|t| t.embed(rank)).collect();
    let res = (|| -> CheckResult {
        for (l, x) in th.iter().enumerate() {
            for (l2, y) in th.iter().enumerate() {
                let expect = if l == l2 { x.clone() } else { alg.zero() };
                ensure(alg.mul(x, y) == expect, || format!("θ_{l} * θ_{l2} != δ θ_{l}"))?;
            }
        }
        let total = th.iter().fold(alg.zero(), |acc, x| add(&acc, x));
        ensure(total == alg.basis(0), || "Σ θ_l != χ_00".into())?;
        for (l, x) in th.iter().enumerate() {
            for a in 0..rank {
                let b = alg.basis(a);
                ensure(alg.mul(&b, x) == alg.mul(x, &b), || format!("θ_{l} does not commute with basis {a}"))?;
            }
            for i in 0..m {
                let base = alg.mul(&alg.basis(i * n), x);
                for j in 0..n {
                    let c = power_sign(psi, j * l, n);
                    if i == 0 {
                        ensure(alg.mul(&alg.basis(j), x) == scale(x, c), || {
                            format!("χ_0{j} * θ_{l} != ψ^{{{j}·{l}}} θ_{l}")
                        })?;
                    }
                    ensure(alg.mul(&alg.basis(i * n + j), x) == scale(&base, c), || {
                        format!("χ_{i}{j} * θ_{l} != ψ^{{{j}·{l}}} χ_{i}0 * θ_{l}")
                    })?;
                }
            }
        }
        Ok(())
    })();
    r.push(Check::from_result("Eq4.theta", res));
    r
}

/// `images[i] * images[j] = Σ_k T_{ij}^k images[k]` and the images are
/// independent.
fn check_isomorphism(alg: &FusionAlgebra, images: &[Vec<Fe>], table: &FusionTable, name: &str) -> CheckResult {
    let f = alg.field();
    let rank = Matrix::from_rows(f, images.to_vec()).rank();
    ensure(rank == table.rank(), || format!("{name}: image has rank {rank}, expected {}", table.rank()))?;
    for i in 0..table.rank() {
        for j in 0..table.rank() {
            let lhs = alg.mul(&images[i], &images[j]);
            let rhs = combination(
                (0..table.rank()).map(|k| (f.from_int(table.get(i, j, k)), images[k].clone())),
                f,
                alg.rank(),
            );
            ensure(lhs == rhs, || {
                format!("{name}: φ({}) φ({}) != φ({} · {})", table.labels[i], table.labels[j], table.labels[i], table.labels[j])
            })?;
        }
    }
    Ok(())
}

/// Even corners against `N`, odd corners against `L`, and the corners
/// together spanning the whole algebra. Returns the corner ranks.
pub fn verify_theorem_decomposition(
    alg: &FusionAlgebra,
    n_table: &FusionTable,
    l_table: &FusionTable,
    thetas: &[ThetaIdempotent],
    n: usize,
) -> (Report, Vec<usize>) {
    let mut r = Report::new();
    let f = alg.field();
    let m = n_table.rank();
    let mut ranks = Vec::with_capacity(n);
    let mut all_images = Vec::with_capacity(m * n);
    let mut even = Ok(());
    let mut odd = Ok(());
    for t in thetas {
        let theta = t.embed(alg.rank());
        let images: Vec<Vec<Fe>> = (0..m).map(|i| alg.mul(&alg.basis(i * n), &theta)).collect();
        ranks.push(Matrix::from_rows(f, images.clone()).rank());
        let (table, slot) = if t.l % 2 == 0 { (n_table, &mut even) } else { (l_table, &mut odd) };
        if slot.is_ok() {
            let sign = if t.l % 2 == 0 { f.one() } else { -f.one() };
            *slot = check_isomorphism(alg, &images, table, &format!("corner θ_{}", t.l)).and_then(|_| {
                (0..m).try_for_each(|i| {
                    let shifted = alg.mul(&alg.basis(i * n + n / 2), &theta);
                    ensure(shifted == scale(&images[i], sign), || {
                        format!("χ_{i},n/2 * θ_{} != {sign} χ_{i}0 * θ_{}", t.l, t.l)
                    })
                })
            });
        }
        all_images.extend(images);
    }
    r.push(Check::from_result("Thm1.1", even));
    r.push(Check::from_result("Thm1.2", odd));
    let total = Matrix::from_rows(f, all_images).rank();
    let sum_ok = ensure(ranks.iter().all(|&k| k == m) && total == alg.rank(), || {
        format!("corner ranks {ranks:?} span rank {total} of {}", alg.rank())
    });
    r.push(Check::from_result("Thm1.3", sum_ok).with_note(format!("corner ranks {ranks:?}")));
    (r, ranks)
}

/// Smash labels `(i, 0)` followed by `(i, n/2)`.
pub fn subcategory_labels(m: usize, n: usize) -> Vec<usize> {
    (0..m).map(|i| i * n).chain((0..m).map(|i| i * n + n / 2)).collect()
}

/// Closure of the subcategory, its splitting by `θ = ½(χ_00 + χ_{0,n/2})`,
/// and the decomposition of the full algebra into `n/2` copies of it.
pub fn subcategory_c(
    smash: &FusionTable,
    smash_alg: &FusionAlgebra,
    n_table: &FusionTable,
    l_table: &FusionTable,
    thetas: &[ThetaIdempotent],
    blocks: &BlockData,
    n: usize,
) -> (Report, Option<FusionTable>) {
    let mut r = Report::new();
    let m = blocks.m();
    let f = smash_alg.field();
    let subset = subcategory_labels(m, n);
    let half = n / 2;

    let closure = smash.restrict(&subset).and_then(|c| {
        for i in 0..m {
            let dual = blocks.dual[i];
            for j in [0, half] {
                let d = dual * n + (n - j) % n;
                ensure(subset.contains(&d), || format!("dual of V{i}W{j} leaves the subcategory"))?;
            }
        }
        for i in 0..m {
            for j in 0..m {
                for (a, b) in [(0, 0), (half, half), (0, half), (half, 0)] {
                    let (same, other) = if a == b { (0, half) } else { (half, 0) };
                    let row = smash.row(i * n + a, j * n + b);
                    for k in 0..m {
                        let (nv, lv) = (n_table.get(i, j, k), l_table.get(i, j, k));
                        ensure(row[k * n + same] == (nv + lv) / 2 && row[k * n + other] == (nv - lv) / 2, || {
                            format!("V{i}W{a} ⊗ V{j}W{b} has the wrong multiplicity of V{k}")
                        })?;
                    }
                }
            }
        }
        Ok(c)
    });
    let c_table = match closure {
        Ok(c) => {
            r.push(Check::pass("Subcat.closure"));
            c
        }
        Err(w) => {
            r.push(Check::fail("Subcat.closure", w));
            r.push(Check::not_applicable("Prop.p1", "subcategory is not closed"));
            r.push(Check::not_applicable("Cor", "subcategory is not closed"));
            return (r, None);
        }
    };

    let alg = FusionAlgebra::new(&c_table, f);
    let half_f = f.from_int(2).inv().expect("p is odd");
    let theta = scale(&add(&alg.basis(0), &alg.basis(m)), half_f);
    let co_theta = sub(&alg.basis(0), &theta);
    let p1 = (|| -> CheckResult {
        ensure(alg.mul(&theta, &theta) == theta, || "θ is not idempotent".into())?;
        ensure(alg.mul(&co_theta, &co_theta) == co_theta, || "1 - θ is not idempotent".into())?;
        ensure(alg.mul(&theta, &co_theta) == alg.zero(), || "θ (1 - θ) != 0".into())?;
        for a in 0..alg.rank() {
            let b = alg.basis(a);
            ensure(alg.mul(&b, &theta) == alg.mul(&theta, &b), || format!("θ does not commute with {}", c_table.labels[a]))?;
        }
        for i in 0..m {
            ensure(alg.mul(&alg.basis(m + i), &theta) == alg.mul(&alg.basis(i), &theta), || {
                format!("χ_{i},n/2 * θ != χ_{i}0 * θ")
            })?;
        }
        let phi: Vec<Vec<Fe>> = (0..m).map(|i| alg.mul(&alg.basis(i), &theta)).collect();
        check_isomorphism(&alg, &phi, n_table, "φ onto (G0(C), *) θ")?;
        let varphi: Vec<Vec<Fe>> = (0..m).map(|i| alg.mul(&alg.basis(i), &co_theta)).collect();
        check_isomorphism(&alg, &varphi, l_table, "φ onto (G0(C), *) (1 - θ)")
    })();
    r.push(Check::from_result("Prop.p1", p1));

    let cor = (0..half).try_for_each(|s| {
        let e = add(&thetas[2 * s].embed(smash_alg.rank()), &thetas[2 * s + 1].embed(smash_alg.rank()));
        let images: Vec<Vec<Fe>> = subset.iter().map(|&a| smash_alg.mul(&smash_alg.basis(a), &e)).collect();
        check_isomorphism(smash_alg, &images, &c_table, &format!("copy {s}"))
    });
    r.push(Check::from_result("Cor", cor).with_note(format!("{half} copies of a rank-{} algebra", 2 * m)));
    (r, Some(c_table))
}

/// `dim(V_i ⊗ W_j) = χ_i(v) ψ^j`, indexed by `i * n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumDims {
    pub values: Vec<Fe>,
    /// Whether the dual object has the same dimension.
    pub self_dual_dim: Vec<bool>,
}

pub fn quantum_dimensions(
    h: &HopfAlgebra,
    blocks: &BlockData,
    vd: &VElement,
    psi: Fe,
    n: usize,
) -> (Report, QuantumDims) {
    let mut r = Report::new();
    let m = blocks.m();
    let f: Field = h.field();
    let chi_v: Vec<Fe> = (0..m).map(|i| blocks.character(i, &vd.v)).collect();
    let values: Vec<Fe> = (0..m * n).map(|ij| chi_v[ij / n] * psi.pow((ij % n) as u64)).collect();
    let formula = (0..m)
        .try_for_each(|i| {
            let expect = vd.s_lambda * vd.s[i];
            ensure(chi_v[i] == expect, || format!("χ_{i}(v) = {}, s_Λ s_{i} = {expect}", chi_v[i]))
        })
        .and_then(|_| ensure(values[0] == f.one(), || format!("dim(V0W0) = {}", values[0])));
    r.push(Check::from_result("QDim.formula", formula));

    let self_dual_dim: Vec<bool> = (0..m * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            values[blocks.dual[i] * n + (n - j) % n] == values[ij]
        })
        .collect();
    let spherical = (0..m * n).try_for_each(|ij| {
        let j = ij % n;
        let expect = j == 0 || 2 * j == n;
        ensure(self_dual_dim[ij] == expect, || {
            format!("V{}W{j}: dual dimension equality is {}, expected {expect}", ij / n, self_dual_dim[ij])
        })
    });
    let verdict: Vec<String> = (0..m * n)
        .map(|ij| format!("V{}W{}={}", ij / n, ij % n, if self_dual_dim[ij] { "eq" } else { "ne" }))
        .collect();
    r.push(Check::from_result("QDim.spherical", spherical).with_note(verdict.join(" ")));
    (r, QuantumDims { values, self_dual_dim })
}
