//! Text format for Hopf algebra presentations and the built-in examples.
//!
//! ```text
//! hopf-sc v1 p=5 k=1 dim=2
//! MULT
//! 0 0 0 1
//! ...
//! COMULT
//! UNIT
//! COUNIT
//! ANTIPODE
//! ```
//!
//! `MULT`/`COMULT` lines are `a b c x`, `UNIT`/`COUNIT` lines are `a x` and
//! `ANTIPODE` lines are `row col x`, where `x` is a comma-separated list of
//! coefficients (lowest degree first). Alternatively a `GENERATOR` stanza
//! names `group_algebra` or `dual_group_algebra` followed by a `CAYLEY`
//! section. `#` starts a comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{is_prime, Fe, Field};
use crate::groups::Group;
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;

type Coeffs = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    GroupAlgebra,
    DualGroupAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Explicit {
        mult: Vec<(usize, usize, usize, Coeffs)>,
        comult: Vec<(usize, usize, usize, Coeffs)>,
        unit: Vec<(usize, Coeffs)>,
        counit: Vec<(usize, Coeffs)>,
        antipode: Vec<(usize, usize, Coeffs)>,
    },
    Generator {
        kind: GeneratorKind,
        cayley: Vec<Vec<usize>>,
    },
}

/// A presentation before any field is built, so that the standing
/// hypotheses can be checked on `p` and `dim` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub p: u32,
    pub k: u32,
    pub dim: usize,
    pub body: Body,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_index(tok: &str, dim: usize, line: usize) -> Result<usize> {
    let v: usize = tok.parse().map_err(|_| parse_err(line, format!("invalid index {tok:?}")))?;
    if v >= dim {
        return Err(parse_err(line, format!("index {v} out of range for dim {dim}")));
    }
    Ok(v)
}

fn parse_coeffs(tok: &str, p: u32, k: u32, line: usize) -> Result<Coeffs> {
    let cs: Coeffs = tok
        .split(',')
        .map(|c| c.trim().parse::<u32>().map_err(|_| parse_err(line, format!("invalid coefficient {tok:?}"))))
        .collect::<Result<_>>()?;
    if cs.len() > k as usize || cs.iter().any(|&c| c >= p) {
        return Err(parse_err(line, format!("{tok:?} is not an element of GF({p}^{k})")));
    }
    Ok(cs)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Mult,
    Comult,
    Unit,
    Counit,
    Antipode,
    Cayley,
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty presentation"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("hopf-sc") || toks.next() != Some("v1") {
        return Err(parse_err(hline, "expected header `hopf-sc v1 p=<p> k=<k> dim=<d>`"));
    }
    let (mut p, mut k, mut dim) = (None, 1u32, None);
    for t in toks {
        let (key, val) = t.split_once('=').ok_or_else(|| parse_err(hline, format!("malformed field {t:?}")))?;
        let num = || val.parse::<u64>().map_err(|_| parse_err(hline, format!("invalid number in {t:?}")));
        match key {
            "p" => p = Some(num()?),
            "k" => k = num()? as u32,
            "dim" => dim = Some(num()? as usize),
            _ => return Err(parse_err(hline, format!("unknown header key {key:?}"))),
        }
    }
    let p = p.ok_or_else(|| parse_err(hline, "missing p="))?;
    let dim = dim.ok_or_else(|| parse_err(hline, "missing dim="))?;
    if !is_prime(p) || p > u64::from(u32::MAX) {
        return Err(Error::NotPrime(p));
    }
    let p = p as u32;
    if k == 0 || dim == 0 {
        return Err(parse_err(hline, "k and dim must be positive"));
    }

    let (mut mult, mut comult, mut unit, mut counit, mut antipode) = (vec![], vec![], vec![], vec![], vec![]);
    let mut kind = None;
    let mut cayley: Vec<Vec<usize>> = Vec::new();
    let mut section = Section::None;
    for (ln, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let next = match toks.as_slice() {
            ["MULT"] => Some(Section::Mult),
            ["COMULT"] => Some(Section::Comult),
            ["UNIT"] => Some(Section::Unit),
            ["COUNIT"] => Some(Section::Counit),
            ["ANTIPODE"] => Some(Section::Antipode),
            ["CAYLEY"] => Some(Section::Cayley),
            ["GENERATOR", g] => {
                kind = Some(match *g {
                    "group_algebra" => GeneratorKind::GroupAlgebra,
                    "dual_group_algebra" => GeneratorKind::DualGroupAlgebra,
                    _ => return Err(parse_err(ln, format!("unknown generator {g:?}"))),
                });
                Some(Section::None)
            }
            _ => None,
        };
        if let Some(s) = next {
            section = s;
            continue;
        }
        let idx = |t: &str| parse_index(t, dim, ln);
        let co = |t: &str| parse_coeffs(t, p, k, ln);
        let arity = |n: usize| {
            if toks.len() == n {
                Ok(())
            } else {
                Err(parse_err(ln, format!("expected {n} fields, found {}", toks.len())))
            }
        };
        match section {
            Section::None => return Err(parse_err(ln, format!("line outside any section: {l:?}"))),
            Section::Mult | Section::Comult => {
                arity(4)?;
                let e = (idx(toks[0])?, idx(toks[1])?, idx(toks[2])?, co(toks[3])?);
                if section == Section::Mult { mult.push(e) } else { comult.push(e) }
            }
            Section::Unit | Section::Counit => {
                arity(2)?;
                let e = (idx(toks[0])?, co(toks[1])?);
                if section == Section::Unit { unit.push(e) } else { counit.push(e) }
            }
            Section::Antipode => {
                arity(3)?;
                antipode.push((idx(toks[0])?, idx(toks[1])?, co(toks[2])?));
            }
            Section::Cayley => {
                arity(dim)?;
                cayley.push(toks.iter().map(|t| idx(t)).collect::<Result<_>>()?);
            }
        }
    }
    let body = match kind {
        Some(kind) => {
            if cayley.len() != dim {
                return Err(parse_err(hline, format!("CAYLEY has {} rows, expected {dim}", cayley.len())));
            }
            Body::Generator { kind, cayley }
        }
        None => Body::Explicit { mult, comult, unit, counit, antipode },
    };
    Ok(Presentation { p, k, dim, body })
}

/// Standing hypotheses `p² > dim` and `p ∤ 2 dim`, checked before any field
/// is built.
pub fn check_hypotheses(p: u32, dim: usize) -> Result<()> {
    let p64 = u64::from(p);
    if p64 * p64 <= dim as u64 {
        return Err(Error::Hypothesis(format!("p = {p} does not exceed sqrt(dim H) = sqrt({dim})")));
    }
    if (2 * dim as u64).is_multiple_of(p64) {
        return Err(Error::Hypothesis(format!("p = {p} divides 2 dim H = {}", 2 * dim)));
    }
    Ok(())
}

impl Presentation {
    pub fn build(&self) -> Result<HopfAlgebra> {
        let field = Field::new(self.p, self.k)?;
        match &self.body {
            Body::Generator { kind, cayley } => {
                let g = Group::from_cayley(cayley)?;
                Ok(match kind {
                    GeneratorKind::GroupAlgebra => HopfAlgebra::group_algebra(&g, field),
                    GeneratorKind::DualGroupAlgebra => HopfAlgebra::dual_group_algebra(&g, field),
                })
            }
            Body::Explicit { mult, comult, unit, counit, antipode } => {
                let el = |c: &Coeffs| field.from_coeffs(c);
                let dense = |entries: &[(usize, Coeffs)]| -> Result<Vec<Fe>> {
                    let mut v = vec![field.zero(); self.dim];
                    for (a, c) in entries {
                        v[*a] += el(c)?;
                    }
                    Ok(v)
                };
                let mut s = Matrix::zeros(field, self.dim, self.dim);
                for (r, c, x) in antipode {
                    s[(*r, *c)] += el(x)?;
                }
                let triples = |entries: &[(usize, usize, usize, Coeffs)]| -> Result<Vec<(usize, usize, usize, Fe)>> {
                    entries.iter().map(|(a, b, c, x)| Ok((*a, *b, *c, el(x)?))).collect()
                };
                HopfAlgebra::from_parts(
                    field,
                    self.dim,
                    triples(mult)?,
                    triples(comult)?,
                    dense(unit)?,
                    dense(counit)?,
                    s,
                )
            }
        }
    }
}

pub(crate) fn fmt_fe(x: Fe) -> String {
    let mut c = x.coeffs();
    while c.len() > 1 && c.last() == Some(&0) {
        c.pop();
    }
    c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Explicit presentation of `h`; parsing it back gives an equal algebra.
pub fn write_presentation(h: &HopfAlgebra) -> String {
    let f = h.field();
    let mut out = format!("hopf-sc v1 p={} k={} dim={}\n", f.characteristic(), f.degree(), h.dim());
    out.push_str("MULT\n");
    for (a, b, c, x) in h.mult_entries() {
        let _ = writeln!(out, "{a} {b} {c} {}", fmt_fe(x));
    }
    out.push_str("COMULT\n");
    for (a, b, c, x) in h.comult_entries() {
        let _ = writeln!(out, "{a} {b} {c} {}", fmt_fe(x));
    }
    for (name, v) in [("UNIT", h.unit()), ("COUNIT", h.counit())] {
        let _ = writeln!(out, "{name}");
        for (a, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let _ = writeln!(out, "{a} {}", fmt_fe(*x));
        }
    }
    out.push_str("ANTIPODE\n");
    let s = h.antipode();
    for r in 0..h.dim() {
        for c in 0..h.dim() {
            if !s[(r, c)].is_zero() {
                let _ = writeln!(out, "{r} {c} {}", fmt_fe(s[(r, c)]));
            }
        }
    }
    out
}

pub const BUILTIN_NAMES: [&str; 8] = ["kC2", "kC3", "kS3", "kD4", "dual-kC2", "dual-kC3", "dual-kS3", "dual-kD4"];

/// `[builtin:]NAME@p=P`.
pub fn builtin(source: &str) -> Result<Presentation> {
    let source = source.strip_prefix("builtin:").unwrap_or(source);
    let bad = || parse_err(1, format!("expected NAME@p=P with NAME one of {}, got {source:?}", BUILTIN_NAMES.join(", ")));
    let (name, p) = source.split_once("@p=").ok_or_else(bad)?;
    let p: u64 = p.parse().map_err(|_| bad())?;
    if !is_prime(p) || p > u64::from(u32::MAX) {
        return Err(Error::NotPrime(p));
    }
    let (kind, base) = match name.strip_prefix("dual-") {
        Some(b) => (GeneratorKind::DualGroupAlgebra, b),
        None => (GeneratorKind::GroupAlgebra, name),
    };
    let group = match base {
        "kC2" => Group::cyclic(2),
        "kC3" => Group::cyclic(3),
        "kS3" => Group::symmetric3(),
        "kD4" => Group::dihedral4(),
        _ => return Err(bad()),
    };
    Ok(Presentation {
        p: p as u32,
        k: 1,
        dim: group.order(),
        body: Body::Generator { kind, cayley: group.cayley() },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_round_trip() {
        for name in BUILTIN_NAMES {
            let pres = builtin(&format!("builtin:{name}@p=7")).unwrap();
            let h = pres.build().unwrap();
            let text = write_presentation(&h);
            let back = parse_presentation(&text).unwrap().build().unwrap();
            assert_eq!(back, h, "{name}");
        }
    }

    #[test]
    fn generator_stanza() {
        let text = "hopf-sc v1 p=5 dim=2 # header\nGENERATOR dual_group_algebra\nCAYLEY\n0 1\n1 0\n";
        let h = parse_presentation(text).unwrap().build().unwrap();
        assert!(h.is_commutative());
        assert_eq!(h.counit()[0], h.field().one());
        assert_eq!(h.counit()[1], h.field().zero());
    }

    #[test]
    fn extension_field_coefficients() {
        let text = "hopf-sc v1 p=3 k=2 dim=1\nMULT\n0 0 0 1,0\nCOMULT\n0 0 0 1\nUNIT\n0 1\nCOUNIT\n0 1\nANTIPODE\n0 0 1\n";
        let pres = parse_presentation(text).unwrap();
        assert_eq!(pres.k, 2);
        assert_eq!(pres.build().unwrap().field().order(), 9);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_presentation("hopf-sc v2 p=5 dim=2"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_presentation("hopf-sc v1 p=6 dim=2"), Err(Error::NotPrime(6)));
        let oob = "hopf-sc v1 p=5 dim=2\nMULT\n0 0 2 1\n";
        assert!(matches!(parse_presentation(oob), Err(Error::Parse { line: 3, .. })));
        let big = "hopf-sc v1 p=5 dim=2\nUNIT\n0 5\n";
        assert!(matches!(parse_presentation(big), Err(Error::Parse { line: 3, .. })));
        assert!(builtin("kQ8@p=7").is_err());
        assert_eq!(builtin("kC2@p=9"), Err(Error::NotPrime(9)));
    }

    #[test]
    fn hypotheses() {
        assert!(check_hypotheses(5, 2).is_ok());
        assert!(check_hypotheses(7, 6).is_ok());
        assert!(matches!(check_hypotheses(2, 2), Err(Error::Hypothesis(_))));
        assert!(matches!(check_hypotheses(3, 6), Err(Error::Hypothesis(_))));
        assert!(matches!(check_hypotheses(3, 9), Err(Error::Hypothesis(_))));
    }
}
