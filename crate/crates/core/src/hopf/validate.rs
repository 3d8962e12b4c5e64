//! Exact check of every Hopf algebra axiom on basis elements.

use super::{combine, HopfAlgebra};
use crate::field::Fe;
use crate::report::{Check, Report};

pub type ValidationReport = Report;

type Outcome = std::result::Result<(), String>;

/// One entry per axiom, each with the first failing basis indices.
pub fn validate_hopf(h: &HopfAlgebra) -> ValidationReport {
    let mut r = Report::new();
    r.push(Check::from_result("Hopf.assoc", associativity(h)));
    r.push(Check::from_result("Hopf.unit", unit_law(h)));
    r.push(Check::from_result("Hopf.coassoc", coassociativity(h)));
    r.push(Check::from_result("Hopf.counit", counit_law(h)));
    r.push(Check::from_result("Hopf.bialgebra", bialgebra_law(h)));
    r.push(Check::from_result("Hopf.antipode", antipode_law(h)));
    r
}

fn first_nonzero<K: Copy>(terms: &[(K, Fe)]) -> Option<K> {
    terms.first().map(|t| t.0)
}

fn associativity(h: &HopfAlgebra) -> Outcome {
    let d = h.dim();
    let mut buf: Vec<(usize, Fe)> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                buf.clear();
                for &(e, x) in h.product_of(a, b) {
                    for &(f, y) in h.product_of(e, c) {
                        buf.push((f, x * y));
                    }
                }
                for &(e, x) in h.product_of(b, c) {
                    for &(f, y) in h.product_of(a, e) {
                        buf.push((f, -(x * y)));
                    }
                }
                combine(&mut buf);
                if let Some(f) = first_nonzero(&buf) {
                    return Err(format!("(ab)c != a(bc) at (a, b, c) = ({a}, {b}, {c}), component {f}"));
                }
            }
        }
    }
    Ok(())
}

fn unit_law(h: &HopfAlgebra) -> Outcome {
    let one = h.one();
    for a in 0..h.dim() {
        let e = h.basis(a);
        if h.multiply(&one, &e) != e {
            return Err(format!("1 * {a} != {a}"));
        }
        if h.multiply(&e, &one) != e {
            return Err(format!("{a} * 1 != {a}"));
        }
    }
    Ok(())
}

fn coassociativity(h: &HopfAlgebra) -> Outcome {
    let mut buf: Vec<((usize, usize, usize), Fe)> = Vec::new();
    for a in 0..h.dim() {
        buf.clear();
        for &(b, c, x) in h.coproduct_of(a) {
            for &(p, q, y) in h.coproduct_of(b) {
                buf.push(((p, q, c), x * y));
            }
            for &(p, q, y) in h.coproduct_of(c) {
                buf.push(((b, p, q), -(x * y)));
            }
        }
        combine(&mut buf);
        if let Some(t) = first_nonzero(&buf) {
            return Err(format!("(Δ⊗id)Δ != (id⊗Δ)Δ on basis element {a}, component {t:?}"));
        }
    }
    Ok(())
}

fn counit_law(h: &HopfAlgebra) -> Outcome {
    let eps = h.counit();
    for a in 0..h.dim() {
        let mut left = h.zero();
        let mut right = h.zero();
        for &(b, c, x) in h.coproduct_of(a) {
            left[c] += eps[b] * x;
            right[b] += eps[c] * x;
        }
        let e = h.basis(a);
        if left != e {
            return Err(format!("(ε⊗id)Δ({a}) != {a}"));
        }
        if right != e {
            return Err(format!("(id⊗ε)Δ({a}) != {a}"));
        }
    }
    Ok(())
}

fn bialgebra_law(h: &HopfAlgebra) -> Outcome {
    let d = h.dim();
    let f = h.field();
    let eps = h.counit();
    let one = h.one();
    if h.counit_of(&one) != f.one() {
        return Err("ε(1) != 1".into());
    }
    if h.comultiply(&one) != h.tensor(&one, &one) {
        return Err("Δ(1) != 1⊗1".into());
    }
    let mut buf: Vec<((usize, usize), Fe)> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let eps_ab = h.product_of(a, b).iter().map(|&(c, x)| x * eps[c]).fold(f.zero(), |s, t| s + t);
            if eps_ab != eps[a] * eps[b] {
                return Err(format!("ε(ab) != ε(a)ε(b) at (a, b) = ({a}, {b})"));
            }
            buf.clear();
            for &(c, x) in h.product_of(a, b) {
                for &(p, q, y) in h.coproduct_of(c) {
                    buf.push(((p, q), x * y));
                }
            }
            for &(a1, a2, x) in h.coproduct_of(a) {
                for &(b1, b2, y) in h.coproduct_of(b) {
                    let xy = x * y;
                    for &(u, m1) in h.product_of(a1, b1) {
                        for &(w, m2) in h.product_of(a2, b2) {
                            buf.push(((u, w), -(xy * m1 * m2)));
                        }
                    }
                }
            }
            combine(&mut buf);
            if let Some(t) = first_nonzero(&buf) {
                return Err(format!("Δ(ab) != Δ(a)Δ(b) at (a, b) = ({a}, {b}), component {t:?}"));
            }
        }
    }
    Ok(())
}

#[allow(clippy::needless_range_loop)]
fn antipode_law(h: &HopfAlgebra) -> Outcome {
    let d = h.dim();
    let eps = h.counit();
    let unit = h.unit();
    for a in 0..d {
        let mut left = h.zero();
        let mut right = h.zero();
        for &(b, c, x) in h.coproduct_of(a) {
            for &(s, y) in h.antipode_of(b) {
                for &(t, z) in h.product_of(s, c) {
                    left[t] += x * y * z;
                }
            }
            for &(s, y) in h.antipode_of(c) {
                for &(t, z) in h.product_of(b, s) {
                    right[t] += x * y * z;
                }
            }
        }
        let expect: Vec<Fe> = unit.iter().map(|&u| u * eps[a]).collect();
        if left != expect {
            return Err(format!("S(a₁)a₂ != ε(a)1 at a = {a}"));
        }
        if right != expect {
            return Err(format!("a₁S(a₂) != ε(a)1 at a = {a}"));
        }
    }
    Ok(())
}
