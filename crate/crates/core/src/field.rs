//! Finite fields GF(p^k) for odd primes p.
//!
//! Elements are stored by their *encoding*: the coefficient vector
//! `(c_0, .., c_{k-1})` of the residue polynomial, packed as the integer
//! `c_0 + c_1 p + .. + c_{k-1} p^{k-1}`. Ordering elements by encoding is the
//! lexicographic order on coefficient vectors read from the top coefficient
//! down; every "least" choice in this crate (moduli, generators, square-root
//! branches) refers to this order.
//!
//! Fields are interned: [`Field::new`] returns the same handle for the same
//! `(p, k)`, so elements are small `Copy` values that carry a pointer to their
//! field's log/exp tables.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported field order; arithmetic is table driven.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

pub struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    /// `exp[i] = generator^i`, stored twice over so `log a + log b` needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Handle to an interned finite field.
#[derive(Clone, Copy)]
pub struct Field(&'static FieldData);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.0.p, self.0.k).hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.k)
    }
}

fn registry() -> &'static Mutex<HashMap<(u32, u32), &'static FieldData>> {
    static REGISTRY: OnceLock<Mutex<HashMap<(u32, u32), &'static FieldData>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Constructs GF(p^k) with the least monic irreducible modulus of degree `k`.
pub fn gf_construct(p: u32, k: u32) -> Result<Field> {
    Field::new(p, k)
}

impl Field {
    pub fn new(p: u32, k: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if p == 2 {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge { p, k });
        };
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(data) = reg.get(&(p, k)) {
            return Ok(Field(data));
        }
        let data: &'static FieldData = Box::leak(Box::new(build_field(p, k, q as u32)));
        reg.insert((p, k), data);
        Ok(Field(data))
    }

    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the modulus, lowest degree first; the last entry is 1.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe { field: *self, v: 0 }
    }

    pub fn one(&self) -> Fe {
        Fe { field: *self, v: 1 }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.0.p as i64;
        Fe { field: *self, v: n.rem_euclid(p) as u32 }
    }

    /// Element from its encoding (see module docs).
    pub fn element(&self, encoding: u32) -> Fe {
        assert!(encoding < self.0.q, "encoding {encoding} out of range for {self:?}");
        Fe { field: *self, v: encoding }
    }

    /// Element from coefficients `c_0, c_1, ..` (missing ones are zero).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        let (p, k) = (self.0.p, self.0.k as usize);
        if coeffs.len() > k || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::DimensionMismatch(format!(
                "coefficients {coeffs:?} do not encode an element of {self:?}"
            )));
        }
        let mut v = 0u32;
        for &c in coeffs.iter().rev() {
            v = v * p + c;
        }
        Ok(Fe { field: *self, v })
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        let f = *self;
        (0..self.0.q).map(move |v| Fe { field: f, v })
    }

    /// The least generator of the multiplicative group.
    pub fn generator(&self) -> Fe {
        Fe { field: *self, v: self.0.generator }
    }

    /// A primitive `n`-th root of unity: the least generator raised to `(q-1)/n`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Fe> {
        let q1 = self.0.q as u64 - 1;
        if n == 0 || !q1.is_multiple_of(n) {
            return Err(Error::NoRootOfUnity { n, q: self.0.q as u64 });
        }
        Ok(self.generator().pow(q1 / n))
    }

    /// GF(p^{k·factor}) together with the embedding of `self` into it.
    pub fn extend(&self, factor: u32) -> Result<(Field, Embedding)> {
        let big = Field::new(self.0.p, self.0.k * factor.max(1))?;
        let emb = Embedding::new(*self, big)?;
        Ok((big, emb))
    }
}

/// Same as [`Field::extend`].
pub fn extend_field(field: Field, factor: u32) -> Result<(Field, Embedding)> {
    field.extend(factor)
}

/// Element of a [`Field`].
#[derive(Clone, Copy)]
pub struct Fe {
    field: Field,
    v: u32,
}

pub type FieldElement = Fe;

impl PartialEq for Fe {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.field == other.field
    }
}

impl Eq for Fe {}

impl Hash for Fe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
    }
}

impl PartialOrd for Fe {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fe {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.v.cmp(&other.v)
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prime-field elements print as integers; extension elements as
/// comma-separated coefficients `c_0,c_1,..`.
impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.0.k == 1 {
            return write!(f, "{}", self.v);
        }
        let c = self.coeffs();
        let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Fe {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn encoding(&self) -> u32 {
        self.v
    }

    pub fn coeffs(&self) -> Vec<u32> {
        let (p, k) = (self.field.0.p, self.field.0.k);
        let mut v = self.v;
        (0..k)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    pub fn is_one(&self) -> bool {
        self.v == 1
    }

    pub fn inv(&self) -> Option<Fe> {
        if self.v == 0 {
            return None;
        }
        let d = self.field.0;
        let l = d.log[self.v as usize];
        let e = if l == 0 { 0 } else { d.q - 1 - l };
        Some(Fe { field: self.field, v: d.exp[e as usize] })
    }

    pub fn pow(&self, e: u64) -> Fe {
        let d = self.field.0;
        if self.v == 0 {
            return if e == 0 { self.field.one() } else { *self };
        }
        let l = d.log[self.v as usize] as u64;
        let idx = (l * (e % (d.q as u64 - 1))) % (d.q as u64 - 1);
        Fe { field: self.field, v: d.exp[idx as usize] }
    }

    /// Signed power; `None` for a negative power of zero.
    pub fn pow_i(&self, e: i64) -> Option<Fe> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inv().map(|x| x.pow(e.unsigned_abs()))
        }
    }

    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.v == 0 {
            return None;
        }
        let q1 = self.field.0.q as u64 - 1;
        let l = self.field.0.log[self.v as usize] as u64;
        Some(q1 / gcd(q1, l))
    }

    pub fn is_square(&self) -> bool {
        self.v == 0 || self.pow((self.field.0.q as u64 - 1) / 2).is_one()
    }

    /// Square root by Tonelli–Shanks, returning the lesser of the two roots.
    pub fn sqrt(&self) -> Result<Fe> {
        if self.v == 0 {
            return Ok(*self);
        }
        let f = self.field;
        if !self.is_square() {
            return Err(Error::NonResidue { p: f.0.p, k: f.0.k });
        }
        let q = f.0.q as u64;
        let r = if q % 4 == 3 { self.pow((q + 1) / 4) } else { tonelli_shanks(*self) };
        debug_assert_eq!(r * r, *self);
        let s = -r;
        Ok(if s.v < r.v { s } else { r })
    }

    /// The residue in `0..p` when this element lies in the prime subfield.
    pub fn to_prime(&self) -> Option<u32> {
        (self.v < self.field.0.p).then_some(self.v)
    }

    /// Integer lift into `(-p/2, p/2]` for prime-subfield elements.
    pub fn lift_symmetric(&self) -> Option<i64> {
        let p = self.field.0.p as i64;
        self.to_prime().map(|r| {
            let r = r as i64;
            if r > p / 2 {
                r - p
            } else {
                r
            }
        })
    }
}

fn tonelli_shanks(a: Fe) -> Fe {
    let f = a.field;
    let q1 = f.0.q as u64 - 1;
    let s = q1.trailing_zeros();
    let t = q1 >> s;
    let z = f
        .elements()
        .skip(1)
        .find(|x| !x.is_square())
        .expect("odd-order field has a nonresidue");
    let mut m = s;
    let mut c = z.pow(t);
    let mut x = a.pow(t.div_ceil(2));
    let mut b = a.pow(t);
    while !b.is_one() {
        let mut i = 0;
        let mut b2 = b;
        while !b2.is_one() {
            b2 = b2 * b2;
            i += 1;
        }
        let mut g = c;
        for _ in 0..(m - i - 1) {
            g = g * g;
        }
        x *= g;
        c = g * g;
        b *= c;
        m = i;
    }
    x
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Add for Fe {
    type Output = Fe;
    fn add(self, rhs: Fe) -> Fe {
        debug_assert!(self.field == rhs.field, "mixed fields");
        let d = self.field.0;
        if d.k == 1 {
            let s = self.v + rhs.v;
            return Fe { field: self.field, v: if s >= d.p { s - d.p } else { s } };
        }
        let (mut a, mut b) = (self.v, rhs.v);
        let (mut out, mut place) = (0u32, 1u32);
        while a != 0 || b != 0 {
            let mut c = a % d.p + b % d.p;
            if c >= d.p {
                c -= d.p;
            }
            out += c * place;
            place *= d.p;
            a /= d.p;
            b /= d.p;
        }
        Fe { field: self.field, v: out }
    }
}

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        let d = self.field.0;
        if d.k == 1 {
            return Fe { field: self.field, v: if self.v == 0 { 0 } else { d.p - self.v } };
        }
        let mut a = self.v;
        let (mut out, mut place) = (0u32, 1u32);
        while a != 0 {
            let c = a % d.p;
            out += if c == 0 { 0 } else { (d.p - c) * place };
            place *= d.p;
            a /= d.p;
        }
        Fe { field: self.field, v: out }
    }
}

impl Sub for Fe {
    type Output = Fe;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Fe) -> Fe {
        self + (-rhs)
    }
}

impl Mul for Fe {
    type Output = Fe;
    fn mul(self, rhs: Fe) -> Fe {
        debug_assert!(self.field == rhs.field, "mixed fields");
        if self.v == 0 || rhs.v == 0 {
            return self.field.zero();
        }
        let d = self.field.0;
        let i = d.log[self.v as usize] + d.log[rhs.v as usize];
        Fe { field: self.field, v: d.exp[i as usize] }
    }
}

impl Div for Fe {
    type Output = Fe;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fe) -> Fe {
        self * rhs.inv().expect("division by zero")
    }
}

impl AddAssign for Fe {
    fn add_assign(&mut self, rhs: Fe) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fe {
    fn sub_assign(&mut self, rhs: Fe) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fe {
    fn mul_assign(&mut self, rhs: Fe) {
        *self = *self * rhs;
    }
}

impl Sum for Fe {
    /// Panics on an empty iterator (no field to take zero from).
    fn sum<I: Iterator<Item = Fe>>(mut iter: I) -> Fe {
        let first = iter.next().expect("sum of an empty iterator of field elements");
        iter.fold(first, |a, b| a + b)
    }
}

impl Product for Fe {
    fn product<I: Iterator<Item = Fe>>(mut iter: I) -> Fe {
        let first = iter.next().expect("product of an empty iterator of field elements");
        iter.fold(first, |a, b| a * b)
    }
}

/// Injective ring homomorphism GF(p^a) -> GF(p^b), a | b.
#[derive(Clone)]
pub struct Embedding {
    from: Field,
    to: Field,
    image: Vec<u32>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding({:?} -> {:?})", self.from, self.to)
    }
}

impl Embedding {
    /// Sends the residue class of `x` to the least root of the modulus of
    /// `from` inside `to`.
    pub fn new(from: Field, to: Field) -> Result<Embedding> {
        let (p, a, b) = (from.0.p, from.0.k, to.0.k);
        if to.0.p != p || b % a != 0 {
            return Err(Error::NoEmbedding { p, from: a, to: b });
        }
        let modulus = from.modulus();
        let eval = |x: Fe| {
            modulus
                .iter()
                .rev()
                .fold(to.zero(), |acc, &c| acc * x + to.from_int(c as i64))
        };
        let root = to
            .elements()
            .find(|&x| eval(x).is_zero())
            .ok_or(Error::NoEmbedding { p, from: a, to: b })?;
        let powers: Vec<Fe> = (0..a).map(|i| root.pow(i as u64)).collect();
        let image = from
            .elements()
            .map(|e| {
                e.coeffs()
                    .iter()
                    .zip(&powers)
                    .fold(to.zero(), |acc, (&c, &r)| acc + to.from_int(c as i64) * r)
                    .v
            })
            .collect();
        Ok(Embedding { from, to, image })
    }

    pub fn source(&self) -> Field {
        self.from
    }

    pub fn target(&self) -> Field {
        self.to
    }

    pub fn apply(&self, x: Fe) -> Fe {
        debug_assert!(x.field == self.from);
        Fe { field: self.to, v: self.image[x.v as usize] }
    }
}

// ---- construction over GF(p) with plain residues ----

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (a, p) = (a as u64, p as u64);
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r as u32
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p) as u64;
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] as u64 * lead_inv % p as u64;
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    poly_trim(out.into_iter().map(|x| x as u32).collect())
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    poly_rem(&poly_mul(a, b, p), m, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let (mut a, mut b) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or irreducibility test for a monic polynomial over GF(p).
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 0..k / 2 {
        let mut acc = vec![1u32];
        let mut base = h.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, f, p);
            }
            base = poly_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        h = acc;
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(f, &poly_trim(diff), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn digits(mut v: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let c = v % p;
            v /= p;
            c
        })
        .collect()
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    let lower = (p as u64).pow(k) as u32;
    for t in 0..lower {
        let mut f = digits(t, p, k);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn build_field(p: u32, k: u32, q: u32) -> FieldData {
    let modulus = least_irreducible(p, k);
    let q1 = q - 1;
    let mut generator = 0;
    let mut exp = Vec::new();
    for cand in 2..q {
        let g = digits(cand, p, k);
        let g = poly_trim(g);
        let mut table = Vec::with_capacity(q1 as usize);
        let mut cur = vec![1u32];
        let mut ok = true;
        for i in 0..q1 {
            let enc = undigits(&cur, p);
            if i > 0 && enc == 1 {
                ok = false;
                break;
            }
            table.push(enc);
            cur = poly_mulmod(&cur, &g, &modulus, p);
        }
        if ok && undigits(&cur, p) == 1 {
            generator = cand;
            exp = table;
            break;
        }
    }
    assert_eq!(exp.len() as u32, q1, "no generator found for GF({p}^{k})");
    let mut log = vec![0u32; q as usize];
    for (i, &e) in exp.iter().enumerate() {
        log[e as usize] = i as u32;
    }
    let doubled: Vec<u32> = exp.iter().chain(exp.iter()).copied().collect();
    FieldData { p, k, q, modulus, generator, exp: doubled, log }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_x() {
        let f = gf_construct(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 5);
    }

    #[test]
    fn gf49_has_48_units() {
        let f = gf_construct(7, 2).unwrap();
        assert_eq!(f.elements().filter(|x| !x.is_zero()).count(), 48);
        assert_eq!(f.generator().multiplicative_order(), Some(48));
    }

    #[test]
    fn gf49_modulus_is_least_irreducible_quadratic() {
        // Oracle: scan monic quadratics x^2 + b x + c in (b, c) order and
        // keep the first without a root in GF(7).
        let p = 7u32;
        let mut expected = None;
        'outer: for b in 0..p {
            for c in 0..p {
                if (0..p).all(|x| (x * x + b * x + c) % p != 0) {
                    expected = Some(vec![c, b, 1]);
                    break 'outer;
                }
            }
        }
        let f = gf_construct(7, 2).unwrap();
        assert_eq!(Some(f.modulus().to_vec()), expected);
    }

    #[test]
    fn rejects_composite_and_two() {
        assert_eq!(gf_construct(9, 1), Err(Error::NotPrime(9)));
        assert_eq!(gf_construct(2, 3), Err(Error::UnsupportedCharacteristic(2)));
        assert!(matches!(gf_construct(1009, 3), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn sqrt_examples() {
        let f = gf_construct(5, 1).unwrap();
        assert_eq!(f.from_int(4).sqrt().unwrap(), f.from_int(2));
        assert_eq!(f.zero().sqrt().unwrap(), f.zero());
        // 3 is not among the squares {0,1,4} of GF(5).
        let squares: Vec<u32> = (0..5).map(|x| x * x % 5).collect();
        assert!(!squares.contains(&3));
        assert_eq!(f.from_int(3).sqrt(), Err(Error::NonResidue { p: 5, k: 1 }));
    }

    #[test]
    fn sqrt_matches_brute_force_everywhere() {
        for (p, k) in [(5, 1), (7, 1), (13, 1), (5, 2), (7, 2), (3, 3), (17, 1)] {
            let f = gf_construct(p, k).unwrap();
            for x in f.elements() {
                let roots: Vec<Fe> = f.elements().filter(|y| *y * *y == x).collect();
                match x.sqrt() {
                    Ok(r) => assert_eq!(Some(&r), roots.iter().min(), "{x:?} in {f:?}"),
                    Err(_) => assert!(roots.is_empty()),
                }
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let f = gf_construct(5, 1).unwrap();
        let z = f.primitive_root_of_unity(4).unwrap();
        assert_eq!(z, f.from_int(2));
        assert!(z.pow(4).is_one() && !z.pow(2).is_one());
        assert!(matches!(f.primitive_root_of_unity(3), Err(Error::NoRootOfUnity { .. })));

        let g = gf_construct(7, 2).unwrap();
        let z = g.primitive_root_of_unity(12).unwrap();
        assert!(z.pow(12).is_one());
        assert!((1..12).all(|m| !z.pow(m).is_one()));
    }

    #[test]
    fn extension_embeds_and_splits_squares() {
        let f = gf_construct(5, 1).unwrap();
        let (big, emb) = f.extend(2).unwrap();
        assert_eq!(big.order(), 25);
        assert_eq!(emb.apply(f.one()), big.one());
        let four = emb.apply(f.from_int(4));
        let two = emb.apply(f.from_int(2));
        assert_eq!(two * two, four);
        assert!(emb.apply(f.from_int(3)).sqrt().is_ok());
        for x in f.elements() {
            assert!(emb.apply(x).is_square());
        }
    }

    #[test]
    fn nonprime_subfield_embedding() {
        let small = gf_construct(3, 2).unwrap();
        let big = gf_construct(3, 4).unwrap();
        let emb = Embedding::new(small, big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(emb.apply(a * b), emb.apply(a) * emb.apply(b));
                assert_eq!(emb.apply(a + b), emb.apply(a) + emb.apply(b));
            }
        }
        assert!(Embedding::new(gf_construct(3, 3).unwrap(), big).is_err());
    }

    #[test]
    fn display_and_coeffs() {
        let f = gf_construct(7, 2).unwrap();
        let x = f.from_coeffs(&[3, 5]).unwrap();
        assert_eq!(x.coeffs(), vec![3, 5]);
        assert_eq!(x.to_string(), "3,5");
        assert_eq!(f.from_int(-1).lift_symmetric(), Some(-1));
        assert_eq!(x.lift_symmetric(), None);
    }
}
