use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::hopf::{HopfAlgebra, HopfElement};
use crate::linalg::RowReducer;
use crate::report::{ensure, Check, Report};

/// Which identity defines a right integral `λ ∈ H*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RightIntegralConvention {
    /// `λ(h₁) h₂ = λ(h) 1`.
    Standard,
    /// `h₁ λ(h₂) = λ(h) 1`.
    Opposite,
}

impl RightIntegralConvention {
    pub fn other(self) -> RightIntegralConvention {
        match self {
            RightIntegralConvention::Standard => RightIntegralConvention::Opposite,
            RightIntegralConvention::Opposite => RightIntegralConvention::Standard,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            RightIntegralConvention::Standard => "lambda(h1) h2 = lambda(h) 1",
            RightIntegralConvention::Opposite => "h1 lambda(h2) = lambda(h) 1",
        }
    }
}

/// Left integral `Λ`, right integral `λ` with `λ(Λ) = 1`, and `ε(Λ) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralPair {
    pub left: HopfElement,
    pub right: Vec<Fe>,
    pub eps_lambda: Fe,
    pub convention: RightIntegralConvention,
}

/// One-dimensional solution space of a stacked homogeneous system, fed
/// equation by equation; stops eliminating once the rank is `cols - 1` and
/// then verifies the candidate against the remaining equations.
fn unique_line(field: Field, cols: usize, mut equations: impl Iterator<Item = Vec<Fe>>) -> Result<Vec<Fe>> {
    let mut reducer = RowReducer::new(field, cols);
    for eq in equations.by_ref() {
        reducer.insert(eq);
        if reducer.rank() + 1 >= cols {
            break;
        }
    }
    let kernel = reducer.kernel();
    if kernel.len() != 1 {
        return Err(Error::DegenerateIntegralSpace(kernel.len()));
    }
    let x = &kernel[0];
    for eq in equations {
        let s: Fe = eq.iter().zip(x).map(|(&a, &b)| a * b).fold(field.zero(), |s, t| s + t);
        if !s.is_zero() {
            return Err(Error::DegenerateIntegralSpace(0));
        }
    }
    let lead = x.iter().copied().find(|c| !c.is_zero()).expect("kernel vector is nonzero");
    let inv = lead.inv().expect("nonzero");
    Ok(x.iter().map(|&c| c * inv).collect())
}

/// Equations `h Λ = ε(h) Λ` for every basis `h`, one per output component.
#[allow(clippy::needless_range_loop)]
fn left_integral_equations(h: &HopfAlgebra) -> impl Iterator<Item = Vec<Fe>> + '_ {
    let d = h.dim();
    let f = h.field();
    (0..d).flat_map(move |a| {
        let mut rows = vec![vec![f.zero(); d]; d];
        for x in 0..d {
            for &(c, m) in h.product_of(a, x) {
                rows[c][x] += m;
            }
            rows[x][x] -= h.counit()[a];
        }
        rows.into_iter()
    })
}

/// Equations for `λ` under the given convention: for every basis `a` and
/// component `c`, the coefficient of `c` in `λ(a₁)a₂ - λ(a)1` (or its mirror).
fn right_integral_equations(
    h: &HopfAlgebra,
    conv: RightIntegralConvention,
) -> impl Iterator<Item = Vec<Fe>> + '_ {
    let d = h.dim();
    let f = h.field();
    (0..d).flat_map(move |a| {
        let mut rows = vec![vec![f.zero(); d]; d];
        for &(b, c, x) in h.coproduct_of(a) {
            match conv {
                RightIntegralConvention::Standard => rows[c][b] += x,
                RightIntegralConvention::Opposite => rows[b][c] += x,
            }
        }
        for (c, row) in rows.iter_mut().enumerate() {
            row[a] -= h.unit()[c];
        }
        rows.into_iter()
    })
}

pub fn compute_integrals(h: &HopfAlgebra) -> Result<IntegralPair> {
    compute_integrals_with(h, RightIntegralConvention::Standard)
}

/// `Λ` is scaled so its first nonzero coefficient is 1, then `λ` so that
/// `λ(Λ) = 1`. Fails with `NotSemisimple` when `ε(Λ) = 0`.
pub fn compute_integrals_with(h: &HopfAlgebra, convention: RightIntegralConvention) -> Result<IntegralPair> {
    let f = h.field();
    let left = unique_line(f, h.dim(), left_integral_equations(h))?;
    let eps_lambda = h.counit_of(&left);
    if eps_lambda.is_zero() {
        return Err(Error::NotSemisimple);
    }
    let right = unique_line(f, h.dim(), right_integral_equations(h, convention))?;
    let pairing = h.pair(&right, &left);
    let scale = pairing
        .inv()
        .ok_or_else(|| Error::Inconsistent("right integral vanishes on the left integral".into()))?;
    let right = right.into_iter().map(|x| x * scale).collect();
    Ok(IntegralPair { left, right, eps_lambda, convention })
}

/// Integral laws, normalization and the semisimplicity witness.
pub fn check_integrals(h: &HopfAlgebra, ip: &IntegralPair) -> Report {
    let mut r = Report::new();
    let left_ok = (0..h.dim()).try_for_each(|a| {
        let lhs = h.multiply(&h.basis(a), &ip.left);
        let rhs: Vec<Fe> = ip.left.iter().map(|&x| x * h.counit()[a]).collect();
        ensure(lhs == rhs, || format!("h Λ != ε(h) Λ at h = {a}"))
    });
    r.push(Check::from_result("Integral.left", left_ok));
    let right_ok = right_integral_equations(h, ip.convention).enumerate().try_for_each(|(i, eq)| {
        let s: Fe = eq.iter().zip(&ip.right).map(|(&a, &b)| a * b).fold(h.field().zero(), |s, t| s + t);
        ensure(s.is_zero(), || {
            format!("right integral law fails at h = {}, component {}", i / h.dim(), i % h.dim())
        })
    });
    r.push(
        Check::from_result("Integral.right", right_ok).with_note(format!("convention: {}", ip.convention.describe())),
    );
    let pairing = h.pair(&ip.right, &ip.left);
    r.push(Check::from_result(
        "Integral.normalized",
        ensure(pairing.is_one(), || format!("λ(Λ) = {pairing}")),
    ));
    r.push(Check::from_result(
        "Integral.semisimple",
        ensure(!ip.eps_lambda.is_zero() && h.counit_of(&ip.left) == ip.eps_lambda, || {
            format!("ε(Λ) = {}", h.counit_of(&ip.left))
        }),
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Group;

    #[test]
    fn group_algebra_integrals() {
        let f = Field::prime(5).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::cyclic(2), f);
        let ip = compute_integrals(&h).unwrap();
        assert_eq!(ip.left, vec![f.one(), f.one()]);
        assert_eq!(ip.eps_lambda, f.from_int(2));
        assert_eq!(ip.right, vec![f.one(), f.zero()]);
        assert!(check_integrals(&h, &ip).all_passed());

        let f7 = Field::prime(7).unwrap();
        let s3 = HopfAlgebra::group_algebra(&Group::symmetric3(), f7);
        assert_eq!(compute_integrals(&s3).unwrap().eps_lambda, f7.from_int(6));
    }

    #[test]
    fn dual_integrals() {
        let f = Field::prime(7).unwrap();
        let h = HopfAlgebra::dual_group_algebra(&Group::symmetric3(), f);
        let ip = compute_integrals(&h).unwrap();
        // Point mass at the identity; λ evaluates the sum of all group elements.
        assert_eq!(ip.left, h.basis(0));
        assert_eq!(ip.right, vec![f.one(); 6]);
        assert!(check_integrals(&h, &ip).all_passed());
    }

    #[test]
    fn modular_group_algebra_is_not_semisimple() {
        // p divides |G|.
        let f = Field::prime(3).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::cyclic(3), f);
        assert_eq!(compute_integrals(&h), Err(Error::NotSemisimple));
    }
}
