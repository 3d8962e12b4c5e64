mod common;

use common::{matching, oracle, run};
use hopf_fusion::grothendieck::FusionTable;
use hopf_fusion::pipeline::Stage;

fn assert_fusion_matches(name: &str) {
    let r = run(name, Stage::Fusion);
    let blocks = r.out.artifacts.blocks.as_ref().unwrap();
    let (chars, coeffs) = oracle(&r);
    let perm = matching(&chars, &blocks.chi);
    let m = perm.len();
    let table = r.out.artifacts.n_table.as_ref().unwrap();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                assert_eq!(
                    table.get(perm[a], perm[b], perm[c]),
                    coeffs[(a * m + b) * m + c],
                    "{name}: N at oracle labels ({a}, {b}, {c})"
                );
            }
        }
    }
    assert_eq!(r.out.artifacts.l_table.as_ref().unwrap().coeffs, table.coeffs, "{name}: L = N");

    // With v = 1 the twist is trivial and each smash product χ_{i,s} χ_{j,t}
    // is Σ_k N_{ij}^k χ_{k,s+t}.
    let n = r.out.artifacts.n;
    let smash: &FusionTable = r.out.artifacts.smash_table.as_ref().unwrap();
    let v = &r.out.artifacts.vdata.as_ref().unwrap().v;
    // An element of a split semisimple algebra is 1 when every simple character takes the value d_i on it.
    let is_one = (0..m).all(|i| blocks.character(i, v) == r.out.artifacts.field.unwrap().from_int(blocks.d[i] as i64));
    assert!(is_one, "{name}: v = 1 on involutory builtins");
    for a in 0..m {
        for b in 0..m {
            for s in 0..n {
                for t in 0..n {
                    let row = smash.row(perm[a] * n + s, perm[b] * n + t);
                    for c in 0..m {
                        for u in 0..n {
                            let expect = if u == (s + t) % n { coeffs[(a * m + b) * m + c] } else { 0 };
                            assert_eq!(row[perm[c] * n + u], expect, "{name}: smash ({a},{s}) ({b},{t}) -> ({c},{u})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn s3_fusion_rules() {
    assert_fusion_matches("kS3@p=7");
}

#[test]
fn d4_fusion_rules() {
    assert_fusion_matches("kD4@p=7");
}

#[test]
fn cyclic_fusion_rules() {
    assert_fusion_matches("kC2@p=5");
    assert_fusion_matches("kC3@p=5");
    assert_fusion_matches("kC3@p=7");
}

#[test]
fn dual_group_fusion_rules() {
    for name in ["dual-kC2@p=5", "dual-kC3@p=5", "dual-kS3@p=7", "dual-kD4@p=7"] {
        assert_fusion_matches(name);
    }
}

#[test]
fn s3_character_degrees() {
    let r = run("kS3@p=7", Stage::Fusion);
    let (chars, _) = oracle(&r);
    let mut degrees: Vec<u32> = chars.iter().map(|c| c[r.group.identity()].to_prime().unwrap()).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, [1, 1, 2]);
}
