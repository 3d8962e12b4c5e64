use std::sync::OnceLock;

use hopf_fusion::linalg::{kernel, solve, Matrix};
use hopf_fusion::pipeline::{run_pipeline, PipelineOptions, Stage};
use hopf_fusion::presentation::builtin;
use hopf_fusion::rep::{module_action, simple_h_module};
use hopf_fusion::semisimple::{block_decomposition, compute_integrals, compute_u, compute_v, BlockData, VElement};
use hopf_fusion::smash::{build_smash, SmashAlgebra};
use hopf_fusion::{Embedding, Fe, Field, Group, HopfAlgebra};
use proptest::prelude::*;

const FIELDS: [(u32, u32); 6] = [(3, 1), (5, 1), (11, 1), (5, 2), (7, 2), (3, 3)];

fn field(i: usize) -> Field {
    let (p, k) = FIELDS[i];
    Field::new(p, k).unwrap()
}

fn elems(f: Field, n: usize) -> impl Strategy<Value = Vec<Fe>> {
    prop::collection::vec(0..f.order(), n).prop_map(move |v| v.into_iter().map(|e| f.element(e)).collect())
}

fn field_and_elems(n: usize) -> impl Strategy<Value = (Field, Vec<Fe>)> {
    (0..FIELDS.len()).prop_flat_map(move |i| {
        let f = field(i);
        elems(f, n).prop_map(move |v| (f, v))
    })
}

proptest! {
    #[test]
    fn field_axioms((f, v) in field_and_elems(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a + (-a), f.zero());
        prop_assert_eq!(a - b, a + (-b));
        if !a.is_zero() {
            prop_assert_eq!(a * a.inv().unwrap(), f.one());
            prop_assert_eq!(a.pow(u64::from(f.order()) - 1), f.one());
        } else {
            prop_assert!(a.inv().is_none());
        }
        let p = u64::from(f.characteristic());
        prop_assert_eq!((a + b).pow(p), a.pow(p) + b.pow(p));
    }

    #[test]
    fn square_roots_are_least((_f, v) in field_and_elems(1)) {
        let x = v[0] * v[0];
        let r = x.sqrt().unwrap();
        prop_assert_eq!(r * r, x);
        prop_assert!(r <= -r);
    }

    #[test]
    fn embedding_is_a_ring_homomorphism(a in 0u32..25, b in 0u32..25, factor in 2u32..4) {
        let small = Field::new(5, 2).unwrap();
        let big = Field::new(5, 2 * factor).unwrap();
        let e = Embedding::new(small, big).unwrap();
        let (x, y) = (small.element(a), small.element(b));
        prop_assert_eq!(e.apply(x + y), e.apply(x) + e.apply(y));
        prop_assert_eq!(e.apply(x * y), e.apply(x) * e.apply(y));
        prop_assert_eq!(e.apply(small.one()), big.one());
        prop_assert_eq!(e.apply(x) == e.apply(y), x == y);
    }

    #[test]
    fn solve_reproduces_the_right_hand_side((f, v) in field_and_elems(4 * 4 + 4)) {
        let a = Matrix::from_rows(f, v[..16].chunks(4).map(<[Fe]>::to_vec).collect());
        let b = a.mul_vec(&v[16..]);
        let x = solve(&a, &b).unwrap();
        prop_assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn rank_nullity((f, v) in field_and_elems(3 * 5), zero_rows in 0usize..3) {
        let mut rows: Vec<Vec<Fe>> = v.chunks(5).map(<[Fe]>::to_vec).collect();
        for r in rows.iter_mut().take(zero_rows) {
            r.iter_mut().for_each(|x| *x = f.zero());
        }
        let a = Matrix::from_rows(f, rows);
        let ker = kernel(&a);
        prop_assert_eq!(a.rank() + ker.len(), 5);
        for k in &ker {
            prop_assert!(a.mul_vec(k).iter().all(Fe::is_zero));
        }
        prop_assert_eq!(Matrix::from_rows(f, ker.clone()).rank(), ker.len());
    }
}

fn hopf_examples() -> &'static [HopfAlgebra] {
    static H: OnceLock<Vec<HopfAlgebra>> = OnceLock::new();
    H.get_or_init(|| {
        let f = Field::prime(7).unwrap();
        vec![
            HopfAlgebra::group_algebra(&Group::symmetric3(), f),
            HopfAlgebra::dual_group_algebra(&Group::symmetric3(), f),
            HopfAlgebra::group_algebra(&Group::dihedral4(), f),
            HopfAlgebra::group_algebra(&Group::cyclic(3), f).tensor_product(&HopfAlgebra::dual_group_algebra(&Group::cyclic(2), f)),
        ]
    })
}

fn hopf_and_elems() -> impl Strategy<Value = (usize, Vec<u32>, Vec<u32>)> {
    (0..4usize).prop_flat_map(|i| {
        let d = hopf_examples()[i].dim();
        (Just(i), prop::collection::vec(0u32..7, d), prop::collection::vec(0u32..7, d))
    })
}

proptest! {
    #[test]
    fn counit_and_antipode_laws((i, x, y) in hopf_and_elems()) {
        let h = &hopf_examples()[i];
        let f = h.field();
        let x: Vec<Fe> = x.into_iter().map(|e| f.element(e)).collect();
        let y: Vec<Fe> = y.into_iter().map(|e| f.element(e)).collect();
        // ε is multiplicative.
        prop_assert_eq!(h.counit_of(&h.multiply(&x, &y)), h.counit_of(&x) * h.counit_of(&y));
        let d = h.dim();
        let dx = h.comultiply(&x);
        // (ε ⊗ id)Δ(x) = x = (id ⊗ ε)Δ(x)
        let mut left = h.zero();
        let mut right = h.zero();
        let mut s_left = h.zero();
        for (bc, &c) in dx.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (b, e) = (bc / d, bc % d);
            left[e] += c * h.counit()[b];
            right[b] += c * h.counit()[e];
            let sb = h.apply_antipode(&h.basis(b), 1).unwrap();
            let term = h.multiply(&sb, &h.basis(e));
            for (acc, t) in s_left.iter_mut().zip(term) {
                *acc += c * t;
            }
        }
        prop_assert_eq!(&left, &x);
        prop_assert_eq!(&right, &x);
        // S(x₁)x₂ = ε(x)1
        prop_assert_eq!(s_left, h.scalar(h.counit_of(&x)));
    }
}

struct SmashFixture {
    sm: SmashAlgebra,
    blocks: BlockData,
    vd: VElement,
    psi: Fe,
}

fn smash_s3() -> &'static SmashFixture {
    static S: OnceLock<SmashFixture> = OnceLock::new();
    S.get_or_init(|| {
        let f = Field::new(7, 2).unwrap();
        let h = HopfAlgebra::group_algebra(&Group::symmetric3(), f);
        let ip = compute_integrals(&h).unwrap();
        let blocks = block_decomposition(&h, &ip).unwrap();
        let u = compute_u(&h, &ip).unwrap();
        let vd = compute_v(&h, &ip, &blocks, &u).unwrap();
        let sm = build_smash(&h).unwrap();
        let psi = f.primitive_root_of_unity(12).unwrap();
        SmashFixture { sm, blocks, vd, psi }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn smash_modules_are_homomorphisms(
        seed in any::<u64>(),
        j in 0usize..12,
        x in prop::collection::vec(0u32..49, 72),
        y in prop::collection::vec(0u32..49, 72),
    ) {
        let fx = smash_s3();
        let p = &fx.sm.product;
        let f = p.field();
        let module = simple_h_module(&fx.sm.base, &fx.blocks, 2, seed).unwrap();
        let rho = module_action(&fx.sm, &module, j, &fx.vd, fx.psi);
        let act = |z: &[Fe]| {
            z.iter().enumerate().fold(Matrix::zeros(f, 2, 2), |acc, (a, &c)| acc.add(&rho[a].scale(c)))
        };
        let x: Vec<Fe> = x.into_iter().map(|e| f.element(e)).collect();
        let y: Vec<Fe> = y.into_iter().map(|e| f.element(e)).collect();
        prop_assert_eq!(act(&x).mul(&act(&y)), act(&p.multiply(&x, &y)));
        // The trace does not depend on the random splitting.
        for (a, m) in rho.iter().enumerate() {
            let (h, k) = (a / 12, a % 12);
            let hv = fx.sm.base.multiply(&fx.sm.base.basis(h), &fx.sm.base.power(&fx.vd.v, k as u64));
            let expect = fx.blocks.character(2, &hv) * fx.psi.pow(((j * k) % 12) as u64);
            prop_assert_eq!(m.trace(), expect);
        }
    }

    #[test]
    fn reports_do_not_depend_on_the_seed(seed in any::<u64>()) {
        let pres = builtin("kC3@p=5").unwrap();
        let base = run_pipeline("kC3@p=5", &pres, &PipelineOptions { through: Stage::Simples, seed: 0 }).unwrap();
        let other = run_pipeline("kC3@p=5", &pres, &PipelineOptions { through: Stage::Simples, seed }).unwrap();
        prop_assert_eq!(base.report.checks, other.report.checks);
    }
}
