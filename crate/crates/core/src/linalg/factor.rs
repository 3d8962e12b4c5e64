//! Factorization over GF(q), q odd: squarefree decomposition, distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::Poly;
use crate::field::Fe;

const EDF_SEED: u64 = 0x5eed_f00d;

/// `f = leading · Π factor^multiplicity` with monic irreducible factors in
/// canonical order (degree, then coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub leading: Fe,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> Poly {
        let f = self.leading.field();
        let mut acc = Poly::new(f, vec![self.leading]);
        for (p, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(p);
            }
        }
        acc
    }
}

/// Panics on the zero polynomial.
pub fn factor_poly(f: &Poly) -> Factorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let leading = f.lead();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let mut factors = Vec::new();
    for (part, mult) in squarefree(&monic) {
        for (block, deg) in distinct_degree(&part) {
            for irreducible in equal_degree(&block, deg, &mut rng) {
                factors.push((irreducible, mult));
            }
        }
    }
    factors.sort_by_key(|(p, _)| p.sort_key());
    Factorization { leading, factors }
}

/// `p`-th root of a polynomial whose exponents are all multiples of `p`.
fn pth_root(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let root_exp = (field.characteristic() as u64).pow(field.degree() - 1);
    Poly::new(
        field,
        f.coeffs().iter().step_by(p).map(|c| c.pow(root_exp)).collect(),
    )
}

/// Musser's squarefree decomposition of a monic polynomial.
fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let p = field.characteristic() as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree(&pth_root(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in squarefree(&pth_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree.
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let q = field.order() as u64;
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.powmod(q, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&d| d > 0) {
        out.push((rest, deg));
    }
    out
}

/// `a^((q^d - 1)/2) mod f`, via `(q^d-1)/2 = (q-1)/2 · (1 + q + .. + q^{d-1})`.
fn half_norm_power(a: &Poly, d: usize, f: &Poly) -> Poly {
    let q = a.field().order() as u64;
    let mut t = a.rem(f);
    let mut acc = t.clone();
    for _ in 1..d {
        t = t.powmod(q, f);
        acc = acc.mulmod(&t, f);
    }
    acc.powmod((q - 1) / 2, f)
}

fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field();
    let q = field.order();
    loop {
        let a = Poly::new(field, (0..n).map(|_| field.element(rng.gen_range(0..q))).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        let candidate = if !g.is_one() {
            g
        } else {
            let b = half_norm_power(&a, d, f).sub(&Poly::one(field));
            b.gcd(f)
        };
        let cd = candidate.degree().unwrap_or(0);
        if cd > 0 && cd < n {
            let other = f.div_exact(&candidate);
            let mut out = equal_degree(&candidate, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn difference_of_squares() {
        let f = Field::prime(5).unwrap();
        let fac = factor_poly(&Poly::from_ints(f, &[-1, 0, 1]));
        assert_eq!(
            fac.factors,
            vec![(Poly::from_ints(f, &[1, 1]), 1), (Poly::from_ints(f, &[-1, 1]), 1)]
        );
    }

    #[test]
    fn irreducible_quadratic_stays_whole() {
        let f = Field::prime(7).unwrap();
        // x^2 + 1 has no root mod 7 (squares are 0,1,2,4 so -1 = 6 is not one).
        assert!((0..7).all(|x| (x * x + 1) % 7 != 0));
        let g = Poly::from_ints(f, &[1, 0, 1]);
        assert_eq!(factor_poly(&g).factors, vec![(g, 1)]);
    }

    #[test]
    fn repeated_root() {
        let f = Field::prime(5).unwrap();
        let fac = factor_poly(&Poly::from_ints(f, &[0, 0, 0, 1]));
        assert_eq!(fac.factors, vec![(Poly::x(f), 3)]);
    }

    #[test]
    fn pth_power_inputs() {
        let f = Field::new(3, 2).unwrap();
        // (x + 1)^3 (x^2 + 1)^2 (x - 1): exercises the p-th root branch.
        let a = Poly::from_ints(f, &[1, 1]);
        let b = Poly::from_ints(f, &[1, 0, 1]);
        let c = Poly::from_ints(f, &[-1, 1]);
        let g = a.mul(&a).mul(&a).mul(&b).mul(&b).mul(&c).scale(f.element(5));
        let fac = factor_poly(&g);
        assert_eq!(fac.product(), g);
        // x^2 + 1 splits over GF(9).
        assert_eq!(fac.factors.iter().map(|(_, m)| m).sum::<usize>(), 3 + 2 * 2 + 1);
        assert!(fac.factors.iter().all(|(p, _)| p.degree() == Some(1)));
    }
}
