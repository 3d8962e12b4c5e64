//! The smash product `H # kG` with `G = ⟨g⟩` cyclic of order `n = 2 dim H`,
//! where `g` acts on `H` by `S²`.
//!
//! Basis element `a # g^i` has index `a * n + i`.

use crate::error::{Error, Result};
use crate::field::Fe;
use crate::groups::Group;
use crate::hopf::{validate_hopf, HopfAlgebra, HopfElement};
use crate::linalg::Matrix;
use crate::report::{ensure, Check, Report};
use crate::semisimple::{compute_integrals, compute_u, IntegralPair};

#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    pub base: HopfAlgebra,
    pub n: usize,
    pub product: HopfAlgebra,
    /// `S^k` for `0 <= k < 2n`.
    s_powers: Vec<Matrix>,
}

impl SmashAlgebra {
    pub fn index(&self, a: usize, i: usize) -> usize {
        a * self.n + i
    }

    /// `S^k` of the base, any integer `k`.
    pub fn s_power(&self, k: i64) -> &Matrix {
        &self.s_powers[k.rem_euclid(2 * self.n as i64) as usize]
    }

    /// `x # g^i`.
    pub fn embed(&self, x: &[Fe], i: usize) -> HopfElement {
        let mut out = self.product.zero();
        for (a, &c) in x.iter().enumerate() {
            out[self.index(a, i % self.n)] = c;
        }
        out
    }

    /// `1 # g^i`.
    pub fn group_element(&self, i: usize) -> HopfElement {
        self.embed(self.base.unit(), i)
    }
}

/// Builds `H # kG` from the structure maps
/// `(a # g^i)(b # g^j) = a S^{2i}(b) # g^{i+j}`,
/// `Δ(h # g^i) = (h₁ # g^i) ⊗ (h₂ # g^i)`, `ε(h # g^i) = ε(h)` and
/// `S(h # g^i) = S^{1-2i}(h) # g^{-i}`.
pub fn build_smash(h: &HopfAlgebra) -> Result<SmashAlgebra> {
    let d = h.dim();
    let n = 2 * d;
    let f = h.field();
    let mut s_powers = Vec::with_capacity(2 * n);
    let mut cur = Matrix::identity(f, d);
    for _ in 0..2 * n {
        s_powers.push(cur.clone());
        cur = cur.mul(h.antipode());
    }
    if !cur.is_identity() {
        return Err(Error::InvalidHopf(format!("S^{} is not the identity", 2 * n)));
    }
    let idx = |a: usize, i: usize| a * n + i;
    let sparse_col = |m: &Matrix, b: usize| -> Vec<(usize, Fe)> {
        (0..d).map(|r| (r, m[(r, b)])).filter(|t| !t.1.is_zero()).collect()
    };

    let mut mult = Vec::new();
    for i in 0..n {
        let s2i = &s_powers[(2 * i) % (2 * n)];
        for b in 0..d {
            let col = sparse_col(s2i, b);
            for a in 0..d {
                for &(s, x) in &col {
                    for &(c, y) in h.product_of(a, s) {
                        for j in 0..n {
                            mult.push((idx(a, i), idx(b, j), idx(c, (i + j) % n), x * y));
                        }
                    }
                }
            }
        }
    }
    let comult: Vec<_> = h
        .comult_entries()
        .flat_map(|(a, b, c, x)| (0..n).map(move |i| (idx(a, i), idx(b, i), idx(c, i), x)))
        .collect();
    let mut unit = vec![f.zero(); d * n];
    for (a, &x) in h.unit().iter().enumerate() {
        unit[idx(a, 0)] = x;
    }
    let counit: Vec<Fe> = (0..d * n).map(|k| h.counit()[k / n]).collect();
    let mut antipode = Matrix::zeros(f, d * n, d * n);
    for i in 0..n {
        let e = (1 - 2 * i as i64).rem_euclid(2 * n as i64) as usize;
        let target = (n - i) % n;
        for b in 0..d {
            for (a, x) in sparse_col(&s_powers[e], b) {
                antipode[(idx(a, target), idx(b, i))] = x;
            }
        }
    }
    let product = HopfAlgebra::from_parts(f, d * n, mult, comult, unit, counit, antipode)?;
    Ok(SmashAlgebra { base: h.clone(), n, product, s_powers })
}

/// `Λ # (1/n) Σ g^i`.
pub fn smash_integral_closed_form(sm: &SmashAlgebra, integrals: &IntegralPair) -> Result<HopfElement> {
    let f = sm.base.field();
    let inv_n = f
        .from_int(sm.n as i64)
        .inv()
        .ok_or_else(|| Error::Hypothesis(format!("p divides n = {}", sm.n)))?;
    let mut out = sm.product.zero();
    for (a, &x) in integrals.left.iter().enumerate() {
        for i in 0..sm.n {
            out[sm.index(a, i)] = x * inv_n;
        }
    }
    Ok(out)
}

/// `λ # Σ_j ψ^j`, which is `n λ(h)` on `h # 1` and zero on other group slots.
pub fn smash_right_integral(sm: &SmashAlgebra, integrals: &IntegralPair) -> Vec<Fe> {
    let f = sm.base.field();
    let n = f.from_int(sm.n as i64);
    (0..sm.product.dim())
        .map(|k| if k % sm.n == 0 { integrals.right[k / sm.n] * n } else { f.zero() })
        .collect()
}

/// The closed-form integral pair of the smash product, after checking that
/// the closed-form `Λ` spans the solved integral line.
pub fn smash_integral(sm: &SmashAlgebra, integrals: &IntegralPair) -> Result<IntegralPair> {
    let left = smash_integral_closed_form(sm, integrals)?;
    let solved = compute_integrals(&sm.product)?;
    let pivot = solved
        .left
        .iter()
        .position(|x| !x.is_zero())
        .expect("solved integral is nonzero");
    let ratio = left[pivot] / solved.left[pivot];
    if solved.left.iter().zip(&left).any(|(&s, &c)| s * ratio != c) {
        return Err(Error::Inconsistent("closed-form integral is not on the solved integral line".into()));
    }
    let right = smash_right_integral(sm, integrals);
    Ok(IntegralPair {
        eps_lambda: sm.product.counit_of(&left),
        left,
        right,
        convention: integrals.convention,
    })
}

/// `u` of the smash product, from its closed-form integral.
pub fn smash_u(sm: &SmashAlgebra, smash_integrals: &IntegralPair) -> Result<HopfElement> {
    compute_u(&sm.product, smash_integrals)
}

/// Axioms, counit, the inner form of `S²`, the embedding of `H`, the
/// integrals, `u`, and the reduction to a tensor product in the involutory
/// case.
pub fn check_smash(sm: &SmashAlgebra, integrals: &IntegralPair, u: &[Fe]) -> Report {
    let mut r = Report::new();
    let p = &sm.product;
    let h = &sm.base;
    let f = h.field();
    let n = sm.n;

    let axioms = validate_hopf(p);
    r.push(Check::from_result(
        "Smash.axioms",
        match axioms.failures().next() {
            None => Ok(()),
            Some(c) => Err(format!("{}: {}", c.id, c.witness.clone().unwrap_or_default())),
        },
    ));

    let counit = (0..p.dim()).try_for_each(|k| {
        ensure(p.counit()[k] == h.counit()[k / n], || format!("ε(a # g^i) != ε(a) at index {k}"))
    });
    r.push(Check::from_result("Smash.counit", counit));

    let eq2 = (|| {
        let g = sm.group_element(1);
        ensure(p.power(&g, n as u64) == p.one(), || "(1 # g)^n != 1".into())?;
        ensure(p.counit_of(&g).is_one() && p.comultiply(&g) == p.tensor(&g, &g), || {
            "1 # g is not group-like".into()
        })?;
        let s2 = p.antipode_power(2).expect("nonnegative power");
        (0..p.dim()).try_for_each(|k| {
            let x = p.basis(k);
            let lhs = p.multiply(&s2.mul_vec(&x), &g);
            let rhs = p.multiply(&g, &x);
            ensure(lhs == rhs, || format!("S²(x)(1 # g) != (1 # g)x at x = {k}"))
        })
    })();
    r.push(Check::from_result("Smash.eq2", eq2));

    let embedding = (|| {
        let d = h.dim();
        for a in 0..d {
            for b in 0..d {
                let lhs = p.multiply(&sm.embed(&h.basis(a), 0), &sm.embed(&h.basis(b), 0));
                let rhs = sm.embed(&h.multiply(&h.basis(a), &h.basis(b)), 0);
                ensure(lhs == rhs, || format!("(a # 1)(b # 1) != ab # 1 at ({a}, {b})"))?;
            }
            let x = h.basis(a);
            let dx = h.comultiply(&x);
            let mut lifted = vec![f.zero(); p.dim() * p.dim()];
            for (bc, &c) in dx.iter().enumerate() {
                lifted[sm.index(bc / d, 0) * p.dim() + sm.index(bc % d, 0)] = c;
            }
            ensure(p.comultiply(&sm.embed(&x, 0)) == lifted, || format!("Δ does not restrict at {a}"))?;
            ensure(p.counit_of(&sm.embed(&x, 0)) == h.counit()[a], || format!("ε does not restrict at {a}"))?;
            let sx = h.apply_antipode(&x, 1).expect("power 1");
            ensure(p.apply_antipode(&sm.embed(&x, 0), 1).expect("power 1") == sm.embed(&sx, 0), || {
                format!("S does not restrict at {a}")
            })?;
        }
        ensure(sm.embed(h.unit(), 0) == p.one(), || "1_H # 1 is not the unit".into())
    })();
    r.push(Check::from_result("Smash.embedding", embedding));

    let smash_ip = smash_integral(sm, integrals);
    let integral = match &smash_ip {
        Ok(ip) => (|| {
            (0..p.dim()).try_for_each(|k| {
                let lhs = p.multiply(&p.basis(k), &ip.left);
                let rhs: Vec<Fe> = ip.left.iter().map(|&x| x * p.counit()[k]).collect();
                ensure(lhs == rhs, || format!("closed-form integral fails h Λ = ε(h) Λ at {k}"))
            })?;
            ensure(ip.eps_lambda == integrals.eps_lambda && !ip.eps_lambda.is_zero(), || {
                format!("ε(closed form) = {}, ε(Λ) = {}", ip.eps_lambda, integrals.eps_lambda)
            })
        })(),
        Err(e) => Err(e.to_string()),
    };
    r.push(Check::from_result("Smash.integral", integral));

    let lambda = match &smash_ip {
        Ok(ip) => (|| {
            let pairing = p.pair(&ip.right, &ip.left);
            ensure(pairing.is_one(), || format!("(λ # Σψ^j)(Λ # (1/n)Σg^i) = {pairing}"))?;
            let solved = crate::semisimple::compute_integrals_with(p, ip.convention).map_err(|e| e.to_string())?;
            let scale = solved.right.iter().zip(&ip.right).find(|(s, _)| !s.is_zero()).map(|(&s, &c)| c / s);
            let scale = scale.ok_or_else(|| "solved right integral is zero".to_string())?;
            ensure(solved.right.iter().zip(&ip.right).all(|(&s, &c)| s * scale == c), || {
                "λ # Σψ^j is not a right integral of the smash product".into()
            })
        })(),
        Err(e) => Err(e.to_string()),
    };
    r.push(Check::from_result("Smash.lambda", lambda));

    let u_check = match &smash_ip {
        Ok(ip) => (|| {
            let us = smash_u(sm, ip).map_err(|e| e.to_string())?;
            ensure(us == sm.embed(u, 0), || format!("u of the smash = {us:?}, u # 1 = {:?}", sm.embed(u, 0)))?;
            let mut avg = h.zero();
            for i in 0..n {
                for (o, x) in avg.iter_mut().zip(sm.s_power(-2 * i as i64).mul_vec(u)) {
                    *o += x;
                }
            }
            let inv_n = f.from_int(n as i64).inv().ok_or("p divides n")?;
            let avg: Vec<Fe> = avg.into_iter().map(|x| x * inv_n).collect();
            ensure(avg == u, || "(1/n) Σ S^{-2i}(u) != u".into())
        })(),
        Err(e) => Err(e.to_string()),
    };
    r.push(Check::from_result("Smash.u", u_check));

    if h.is_involutory() {
        let direct = h.tensor_product(&HopfAlgebra::group_algebra(&Group::cyclic(n), f));
        r.push(Check::from_result(
            "Smash.tensor",
            ensure(direct == *p, || "smash product differs from H ⊗ kG".into()),
        ));
    } else {
        r.push(Check::not_applicable("Smash.tensor", "S² != id"));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::semisimple::compute_integrals;

    #[test]
    fn cyclic_two_smash() {
        let f = Field::new(5, 2).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::cyclic(2), f);
        let sm = build_smash(&h).unwrap();
        assert_eq!(sm.product.dim(), 8);
        let ip = compute_integrals(&h).unwrap();
        let u = compute_u(&h, &ip).unwrap();
        let r = check_smash(&sm, &ip, &u);
        assert!(r.all_passed(), "{r}");
        let sip = smash_integral(&sm, &ip).unwrap();
        assert_eq!(sip.eps_lambda, f.from_int(2));
        assert_eq!(smash_u(&sm, &sip).unwrap(), sm.embed(&h.scalar(f.from_int(2)), 0));
    }

    #[test]
    fn smash_antipode_layout() {
        let f = Field::prime(7).unwrap();
        let h = HopfAlgebra::dual_group_algebra(&Group::symmetric3(), f);
        let sm = build_smash(&h).unwrap();
        // S(δ_x # g) = δ_{x⁻¹} # g^{n-1}.
        let g = Group::symmetric3();
        for x in 0..6 {
            let s = sm.product.apply_antipode(&sm.product.basis(sm.index(x, 1)), 1).unwrap();
            assert_eq!(s, sm.product.basis(sm.index(g.inverse(x), sm.n - 1)));
        }
    }
}
