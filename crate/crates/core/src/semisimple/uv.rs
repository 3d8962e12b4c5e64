use super::{BlockData, IntegralPair};
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::hopf::{HopfAlgebra, HopfElement};
use crate::report::{ensure, Check, Report};

/// `u = S(Λ₂)Λ₁`. Fails with `NonInvertibleU` when `u` has no inverse.
pub fn compute_u(h: &HopfAlgebra, integrals: &IntegralPair) -> Result<HopfElement> {
    let mut u = h.zero();
    for (a, &x) in integrals.left.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for &(b, c, y) in h.coproduct_of(a) {
            for &(s, z) in h.antipode_of(c) {
                for &(t, w) in h.product_of(s, b) {
                    u[t] += x * y * z * w;
                }
            }
        }
    }
    h.inverse(&u).ok_or(Error::NonInvertibleU)?;
    Ok(u)
}

/// `x ↦ Σ f(Λ₁, Λ₂)` over the coproduct of `Λ`, where `f` returns an element.
fn sum_over_coproduct(
    h: &HopfAlgebra,
    lambda: &[Fe],
    mut f: impl FnMut(usize, usize) -> HopfElement,
) -> HopfElement {
    let mut out = h.zero();
    for (a, &x) in lambda.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for &(b, c, y) in h.coproduct_of(a) {
            let term = f(b, c);
            for (o, t) in out.iter_mut().zip(term) {
                *o += x * y * t;
            }
        }
    }
    out
}

fn is_group_like(h: &HopfAlgebra, x: &[Fe]) -> bool {
    h.counit_of(x).is_one() && h.comultiply(x) == h.tensor(x, x)
}

/// The five identities satisfied by `u`.
pub fn check_u_properties(
    h: &HopfAlgebra,
    integrals: &IntegralPair,
    blocks: &BlockData,
    u: &[Fe],
) -> Report {
    let mut r = Report::new();
    let f = h.field();
    let Some(u_inv) = h.inverse(u) else {
        for k in 1..=5 {
            r.push(Check::fail(format!("Prop3.20.{k}"), "u is not invertible"));
        }
        return r;
    };
    let chi_h = h.regular_character();
    let s = |b: usize| h.apply_antipode(&h.basis(b), 1).expect("power 1");

    let alt = sum_over_coproduct(h, &integrals.left, |b, c| {
        s(c).into_iter().map(|x| x * chi_h[b]).collect()
    });
    r.push(Check::from_result(
        "Prop3.20.1",
        ensure(alt == u, || format!("χ_H(Λ₁)S(Λ₂) = {alt:?}, u = {u:?}")),
    ));

    let two = sum_over_coproduct(h, &integrals.left, |b, c| h.multiply_all(&[&h.basis(b), &u_inv, &s(c)]));
    r.push(Check::from_result(
        "Prop3.20.2",
        ensure(two == h.one(), || format!("Λ₁u⁻¹S(Λ₂) = {two:?}")),
    ));

    let three = (0..blocks.m()).try_for_each(|i| {
        let rhs = f.from_int(blocks.d[i] as i64) * blocks.character(i, &u_inv);
        ensure(blocks.lambda_e[i] == rhs, || {
            format!("block {i}: λ(e_i) = {}, d_i χ_i(u⁻¹) = {rhs}", blocks.lambda_e[i])
        })
    });
    r.push(Check::from_result("Prop3.20.3", three));

    let s_u = h.apply_antipode(u, 1).expect("power 1");
    let four = (|| {
        let mut rhs = h.zero();
        for i in 0..blocks.m() {
            let l_inv = blocks.lambda_e[i].inv().ok_or_else(|| format!("λ(e_{i}) = 0"))?;
            let d = f.from_int(blocks.d[i] as i64);
            let c = integrals.eps_lambda * d * d * l_inv;
            for (o, &x) in rhs.iter_mut().zip(&blocks.e[i]) {
                *o += c * x;
            }
        }
        let left = h.multiply(u, &s_u);
        let right = h.multiply(&s_u, u);
        ensure(left == rhs, || format!("uS(u) = {left:?}, expected {rhs:?}"))?;
        ensure(right == rhs, || format!("S(u)u = {right:?}, expected {rhs:?}"))
    })();
    r.push(Check::from_result("Prop3.20.4", four));

    let s_u_inv = h.apply_antipode(&u_inv, 1).expect("power 1");
    let five = (|| {
        let a = h.multiply(&s_u_inv, u);
        let b = h.multiply(u, &s_u_inv);
        ensure(a == b, || format!("S(u⁻¹)u = {a:?} but uS(u⁻¹) = {b:?}"))?;
        ensure(is_group_like(h, &a), || format!("S(u⁻¹)u = {a:?} is not group-like"))
    })();
    r.push(Check::from_result("Prop3.20.5", five));

    let twisted: Vec<Fe> = (0..h.dim()).map(|a| h.pair(&integrals.right, &h.multiply(u, &h.basis(a)))).collect();
    r.push(Check::from_result(
        "Integral.regular_character",
        ensure(twisted == chi_h, || format!("λ(u·) = {twisted:?}, χ_H = {chi_h:?}")),
    ));
    r
}

/// The element `v` with the square roots used to build it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VElement {
    pub u: HopfElement,
    pub u_inv: HopfElement,
    pub v: HopfElement,
    pub v_inv: HopfElement,
    /// `s_Λ² = ε(Λ)`.
    pub s_lambda: Fe,
    /// `s_i² = λ(e_i)`.
    pub s: Vec<Fe>,
}

impl VElement {
    pub const POLICY: &'static str = "s_Lambda = least sqrt(eps(Lambda)); s_0 = 1/s_Lambda; \
        s_i = (d_i/s_Lambda) * least sqrt(eps(Lambda) lambda(e_i) / d_i^2) for i = min(i, i*); s_i* = s_i";
}

/// `v = (u / s_Λ) Σ (s_i / d_i) e_i`.
///
/// Branches: `s_Λ` is the least square root of `ε(Λ)`, `s_0 = 1/s_Λ`, and for
/// the other blocks `s_i = (d_i / s_Λ) c_i` with `c_i` the least square root
/// of `ε(Λ)λ(e_i)/d_i²`, chosen once per dual pair. On involutory inputs
/// `c_i = 1`, so `v = 1`.
pub fn compute_v(h: &HopfAlgebra, integrals: &IntegralPair, blocks: &BlockData, u: &[Fe]) -> Result<VElement> {
    let f = h.field();
    let u_inv = h.inverse(u).ok_or(Error::NonInvertibleU)?;
    let s_lambda = integrals.eps_lambda.sqrt()?;
    let s_lambda_inv = s_lambda.inv().ok_or(Error::NotSemisimple)?;
    let m = blocks.m();
    let mut s: Vec<Option<Fe>> = vec![None; m];
    s[0] = Some(s_lambda_inv);
    for i in 1..m {
        if s[i].is_some() {
            continue;
        }
        let d = f.from_int(blocks.d[i] as i64);
        let ratio = integrals.eps_lambda * blocks.lambda_e[i] / (d * d);
        let si = d * s_lambda_inv * ratio.sqrt()?;
        s[i] = Some(si);
        s[blocks.dual[i]] = Some(si);
    }
    let s: Vec<Fe> = s.into_iter().map(|x| x.expect("every block assigned")).collect();
    let mut central = h.zero();
    for (i, &si) in s.iter().enumerate() {
        let c = si / f.from_int(blocks.d[i] as i64) * s_lambda_inv;
        for (o, &x) in central.iter_mut().zip(&blocks.e[i]) {
            *o += c * x;
        }
    }
    let v = h.multiply(u, &central);
    let v_inv = h.inverse(&v).ok_or_else(|| Error::Inconsistent("v is not invertible".into()))?;
    Ok(VElement { u: u.to_vec(), u_inv, v, v_inv, s_lambda, s })
}

/// The six identities satisfied by `v`, plus coherence of the recorded
/// square roots. `n = 2 dim H`.
pub fn check_v_properties(
    h: &HopfAlgebra,
    integrals: &IntegralPair,
    blocks: &BlockData,
    vd: &VElement,
) -> Report {
    let mut r = Report::new();
    let f = h.field();
    let n = 2 * h.dim() as u64;
    let one = h.one();
    let eps_v = h.counit_of(&vd.v);
    r.push(Check::from_result("Prop2.1", ensure(eps_v.is_one(), || format!("ε(v) = {eps_v}"))));

    let s2 = h.antipode_power(2).expect("nonnegative power");
    let conj = (0..h.dim()).try_for_each(|a| {
        let x = h.basis(a);
        let lhs = s2.mul_vec(&x);
        let rhs = h.multiply_all(&[&vd.v, &x, &vd.v_inv]);
        ensure(lhs == rhs, || format!("S²(h) != v h v⁻¹ at h = {a}"))
    });
    r.push(Check::from_result("Prop2.2", conj));

    let s_u_inv = h.apply_antipode(&vd.u_inv, 1).expect("power 1");
    let grp = h.multiply(&vd.u, &s_u_inv);
    let v2 = h.multiply(&vd.v, &vd.v);
    r.push(Check::from_result(
        "Prop2.3",
        ensure(v2 == grp, || format!("v² = {v2:?}, uS(u⁻¹) = {grp:?}")),
    ));

    let vn = h.power(&vd.v, n);
    r.push(Check::from_result("Prop2.4", ensure(vn == one, || format!("v^{n} = {vn:?}"))));

    let s_v = h.apply_antipode(&vd.v, 1).expect("power 1");
    r.push(Check::from_result(
        "Prop2.5",
        ensure(h.multiply(&s_v, &vd.v) == one && h.multiply(&vd.v, &s_v) == one, || {
            format!("S(v) = {s_v:?} is not the inverse of v = {:?}", vd.v)
        }),
    ));

    let v_is_one = vd.v == one;
    let involutory = h.is_involutory();
    r.push(Check::from_result(
        "Prop2.6",
        ensure(v_is_one == involutory, || format!("v = 1 is {v_is_one} but S² = id is {involutory}")),
    ));

    let branches = (|| {
        ensure(vd.s_lambda * vd.s_lambda == integrals.eps_lambda, || "s_Λ² != ε(Λ)".into())?;
        ensure(vd.s[0] * vd.s_lambda == f.one(), || "s_0 s_Λ != 1".into())?;
        for i in 0..blocks.m() {
            ensure(vd.s[i] * vd.s[i] == blocks.lambda_e[i], || {
                format!("s_{i}² = {} but λ(e_{i}) = {}", vd.s[i] * vd.s[i], blocks.lambda_e[i])
            })?;
            ensure(vd.s[blocks.dual[i]] == vd.s[i], || format!("s_{i} differs from its dual"))?;
        }
        Ok(())
    })();
    r.push(Check::from_result("V.branches", branches).with_note(VElement::POLICY));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::groups::Group;
    use crate::semisimple::{block_decomposition, check_blocks, compute_integrals};

    #[test]
    fn cyclic_two_over_gf25() {
        let f = Field::new(5, 2).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::cyclic(2), f);
        let ip = compute_integrals(&h).unwrap();
        let b = block_decomposition(&h, &ip).unwrap();
        assert!(check_blocks(&h, &b).all_passed());
        let u = compute_u(&h, &ip).unwrap();
        assert_eq!(u, h.scalar(f.from_int(2)));
        // λ(e_i) = d_i² / ε(Λ) = 1/2 = 3 mod 5.
        assert!(b.lambda_e.iter().all(|&x| x == f.from_int(3)));
        let ur = check_u_properties(&h, &ip, &b, &u);
        assert!(ur.all_passed(), "{ur}");
        let vd = compute_v(&h, &ip, &b, &u).unwrap();
        assert_eq!(vd.v, h.one());
        let vr = check_v_properties(&h, &ip, &b, &vd);
        assert!(vr.all_passed(), "{vr}");
    }

    #[test]
    fn sqrt_of_two_is_missing_in_gf5() {
        let f = Field::prime(5).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::cyclic(2), f);
        let ip = compute_integrals(&h).unwrap();
        let b = block_decomposition(&h, &ip).unwrap();
        let u = compute_u(&h, &ip).unwrap();
        assert!(matches!(compute_v(&h, &ip, &b, &u), Err(Error::NonResidue { .. })));
    }

    #[test]
    fn symmetric_three_u() {
        let f = Field::new(7, 2).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::symmetric3(), f);
        let ip = compute_integrals(&h).unwrap();
        let b = block_decomposition(&h, &ip).unwrap();
        let u = compute_u(&h, &ip).unwrap();
        assert_eq!(u, h.scalar(f.from_int(6)));
        assert!(check_u_properties(&h, &ip, &b, &u).all_passed());
        let vd = compute_v(&h, &ip, &b, &u).unwrap();
        assert_eq!(vd.v, h.one());
        assert!(check_v_properties(&h, &ip, &b, &vd).all_passed());
    }
}
