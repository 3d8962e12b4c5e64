//! Character tables and fusion rules recomputed from group data alone,
//! without the block decomposition or representation code.
#![allow(dead_code)]

use hopf_fusion::pipeline::{run_pipeline, PipelineOptions, PipelineOutput, Stage};
use hopf_fusion::presentation::{builtin, Body, GeneratorKind};
use hopf_fusion::{Fe, Field, Group};

pub struct Run {
    pub out: PipelineOutput,
    pub group: Group,
    pub kind: GeneratorKind,
}

pub fn run(name: &str, through: Stage) -> Run {
    let pres = builtin(name).unwrap();
    let Body::Generator { kind, cayley } = &pres.body else { panic!("builtins use generator stanzas") };
    let group = Group::from_cayley(cayley).unwrap();
    let kind = *kind;
    let out = run_pipeline(name, &pres, &PipelineOptions { through, seed: 0 }).unwrap();
    Run { out, group, kind }
}

pub fn det(mut a: Vec<Vec<Fe>>, f: Field) -> Fe {
    let n = a.len();
    let mut d = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return f.zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        let inv = a[c][c].inv().unwrap();
        for r in c + 1..n {
            let t = a[r][c] * inv;
            let (top, bottom) = a.split_at_mut(r);
            for (x, &y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= t * y;
            }
        }
    }
    d
}

/// Irreducible characters of `G` over `f` as functions on group elements,
/// found as the algebra maps out of the class algebra.
pub fn group_characters(g: &Group, f: Field) -> Vec<Vec<Fe>> {
    let classes = g.conjugacy_classes();
    let c = classes.len();
    let class_of = |x: usize| classes.iter().position(|cl| cl.contains(&x)).unwrap();
    // a[r][s][t] = #{(x, y) ∈ C_r × C_s : xy = z} for a fixed z ∈ C_t.
    let mut a = vec![vec![vec![0i64; c]; c]; c];
    for (r, cr) in classes.iter().enumerate() {
        for (s, cs) in classes.iter().enumerate() {
            for (t, ct) in classes.iter().enumerate() {
                let z = ct[0];
                a[r][s][t] = cr.iter().flat_map(|&x| cs.iter().map(move |&y| (x, y))).filter(|&(x, y)| g.mul(x, y) == z).count() as i64;
            }
        }
    }
    // Eigenvalue candidates of left multiplication by each class sum.
    let candidates: Vec<Vec<Fe>> = (0..c)
        .map(|r| {
            f.elements()
                .filter(|&w| {
                    let m = (0..c)
                        .map(|s| (0..c).map(|t| f.from_int(a[r][s][t]) - if s == t { w } else { f.zero() }).collect())
                        .collect();
                    det(m, f).is_zero()
                })
                .collect()
        })
        .collect();
    let mut omegas = Vec::new();
    let mut idx = vec![0usize; c];
    loop {
        let w: Vec<Fe> = (0..c).map(|r| candidates[r][idx[r]]).collect();
        let hom = (0..c).all(|r| {
            (0..c).all(|s| w[r] * w[s] == (0..c).map(|t| f.from_int(a[r][s][t]) * w[t]).sum::<Fe>())
        });
        if hom && !w.iter().all(Fe::is_zero) {
            omegas.push(w);
        }
        let Some(r) = (0..c).find(|&r| idx[r] + 1 < candidates[r].len()) else { break };
        idx[r] += 1;
        idx[..r].iter_mut().for_each(|i| *i = 0);
    }
    assert_eq!(omegas.len(), c, "one central character per class");
    let order = f.from_int(g.order() as i64);
    omegas
        .into_iter()
        .map(|w| {
            let sum: Fe = classes
                .iter()
                .enumerate()
                .map(|(r, cl)| w[r] * w[class_of(g.inverse(cl[0]))] / f.from_int(cl.len() as i64))
                .sum();
            let d = (1..=g.order()).find(|&d| f.from_int((d * d) as i64) * sum == order).unwrap();
            (0..g.order())
                .map(|x| {
                    let r = class_of(x);
                    f.from_int(d as i64) * w[r] / f.from_int(classes[r].len() as i64)
                })
                .collect()
        })
        .collect()
}

/// Simple characters as functions on basis elements, and `N` in the same order.
pub fn oracle(run: &Run) -> (Vec<Vec<Fe>>, Vec<i64>) {
    let f = run.out.artifacts.field.unwrap();
    let g = &run.group;
    let n = g.order();
    match run.kind {
        GeneratorKind::GroupAlgebra => {
            let chars = group_characters(g, f);
            let m = chars.len();
            let inv_order = f.from_int(n as i64).inv().unwrap();
            let mut coeffs = Vec::with_capacity(m * m * m);
            for a in &chars {
                for b in &chars {
                    for c in &chars {
                        let v: Fe = (0..n).map(|x| a[x] * b[x] * c[g.inverse(x)]).sum::<Fe>() * inv_order;
                        coeffs.push(i64::from(v.to_prime().unwrap()));
                    }
                }
            }
            (chars, coeffs)
        }
        GeneratorKind::DualGroupAlgebra => {
            let chars = (0..n).map(|x| (0..n).map(|y| if x == y { f.one() } else { f.zero() }).collect()).collect();
            let coeffs =
                (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| i64::from(g.mul(a, b) == c)))).collect();
            (chars, coeffs)
        }
    }
}

/// Position of each oracle character among the pipeline's blocks.
pub fn matching(oracle_chars: &[Vec<Fe>], pipeline_chars: &[Vec<Fe>]) -> Vec<usize> {
    let perm: Vec<usize> = oracle_chars
        .iter()
        .map(|c| pipeline_chars.iter().position(|p| p == c).expect("every oracle character is a block character"))
        .collect();
    assert_eq!(perm.len(), pipeline_chars.len());
    perm
}
