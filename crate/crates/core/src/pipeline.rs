//! Staged verification run over a presentation, with automatic extension of
//! the working field and a line-oriented report.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::grothendieck::{
    check_fusion, newstar_product_coeffs, quantum_dimensions, smash_fusion_table, star_product_coeffs,
    subcategory_c, theta_idempotents, verify_theorem_decomposition, verify_theta, FusionAlgebra, FusionTable,
    QuantumDims,
};
use crate::hopf::{validate_hopf, HopfAlgebra};
use crate::presentation::{check_hypotheses, fmt_fe, Presentation};
use crate::rep::{enumerate_simples, verify_completeness, verify_duals, verify_modules, RepContext};
use crate::report::{Check, Report, Status};
use crate::semisimple::{
    block_decomposition, check_blocks, check_integrals, check_u_properties, check_v_properties, compute_integrals_with,
    compute_u, compute_v, BlockData, IntegralPair, RightIntegralConvention, VElement,
};
use crate::smash::{build_smash, check_smash, smash_integral, smash_u};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    Integrals,
    Blocks,
    Uv,
    Smash,
    Simples,
    Fusion,
    Theorem,
    Qdims,
}

impl Stage {
    pub const ALL: [Stage; 8] = [
        Stage::Integrals,
        Stage::Blocks,
        Stage::Uv,
        Stage::Smash,
        Stage::Simples,
        Stage::Fusion,
        Stage::Theorem,
        Stage::Qdims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Integrals => "integrals",
            Stage::Blocks => "blocks",
            Stage::Uv => "uv",
            Stage::Smash => "smash",
            Stage::Simples => "simples",
            Stage::Fusion => "fusion",
            Stage::Theorem => "theorem",
            Stage::Qdims => "qdims",
        }
    }

    /// Check identifiers produced by this stage, in report order.
    pub fn checks(self) -> &'static [&'static str] {
        match self {
            Stage::Integrals => &["Integral.left", "Integral.right", "Integral.normalized", "Integral.semisimple"],
            Stage::Blocks => &["Blocks.idempotents", "Blocks.dims", "Blocks.duality", "Blocks.independent"],
            Stage::Uv => &[
                "Prop3.20.1",
                "Prop3.20.2",
                "Prop3.20.3",
                "Prop3.20.4",
                "Prop3.20.5",
                "Integral.regular_character",
                "Prop2.1",
                "Prop2.2",
                "Prop2.3",
                "Prop2.4",
                "Prop2.5",
                "Prop2.6",
                "V.branches",
            ],
            Stage::Smash => &[
                "Smash.axioms",
                "Smash.counit",
                "Smash.eq2",
                "Smash.embedding",
                "Smash.integral",
                "Smash.lambda",
                "Smash.u",
                "Smash.tensor",
            ],
            Stage::Simples => &[
                "Lemma.module",
                "Lemma2.simple",
                "Remark.chi00",
                "Thm3.independent",
                "Thm3.complete",
                "Prop.dual",
            ],
            Stage::Fusion => &[
                "Fusion.N",
                "Prop4.star_assoc",
                "Remark6",
                "Remark9",
                "Fusion.smash",
                "Prop1.1",
                "Prop1.2",
                "Prop1.3",
                "Fusion.frobenius",
            ],
            Stage::Theorem => &["Eq4.theta", "Thm1.1", "Thm1.2", "Thm1.3", "Subcat.closure", "Prop.p1", "Cor"],
            Stage::Qdims => &["QDim.formula", "QDim.spherical"],
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stage {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Stage, String> {
        Stage::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown stage {s:?}; expected one of {}", Stage::ALL.map(Stage::name).join(", ")))
    }
}

pub const VALIDATION_CHECKS: [&str; 6] =
    ["Hopf.assoc", "Hopf.unit", "Hopf.coassoc", "Hopf.counit", "Hopf.bialgebra", "Hopf.antipode"];

/// Every check identifier a full run reports, in order.
pub fn manifest() -> Vec<&'static str> {
    VALIDATION_CHECKS
        .iter()
        .copied()
        .chain(Stage::ALL.iter().flat_map(|s| s.checks().iter().copied()))
        .collect()
}

/// Process exit code for an error that aborted a run.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonIntegralCoefficient(_) | Error::ConstraintViolation(_) => 1,
        Error::Hypothesis(_) => 3,
        Error::Inconsistent(_)
        | Error::NonSquareBlockDim { .. }
        | Error::NonInvertibleU
        | Error::RepresentationSplitFailure(_)
        | Error::DegenerateIntegralSpace(_)
        | Error::NotDiagonalizable
        | Error::NoRootOfUnity { .. }
        | Error::NoEmbedding { .. }
        | Error::NoSolution => 4,
        Error::NotPrime(_)
        | Error::UnsupportedCharacteristic(_)
        | Error::FieldTooLarge { .. }
        | Error::ZeroDegree
        | Error::NonResidue { .. }
        | Error::SplittingFieldTooSmall { .. }
        | Error::DimensionMismatch(_)
        | Error::NotAGroup(_)
        | Error::InvalidHopf(_)
        | Error::NotSemisimple
        | Error::Parse { .. } => 2,
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub through: Stage,
    pub seed: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { through: Stage::Qdims, seed: 0 }
    }
}

/// Everything computed along the way; later fields stay `None` when their
/// stage was not reached.
#[derive(Clone, Debug, Default)]
pub struct Artifacts {
    pub field_log: Vec<String>,
    pub field: Option<Field>,
    pub convention_note: Option<String>,
    pub integrals: Option<IntegralPair>,
    pub blocks: Option<BlockData>,
    pub vdata: Option<VElement>,
    pub psi: Option<Fe>,
    pub n: usize,
    pub smash_dim: Option<usize>,
    pub n_table: Option<FusionTable>,
    pub l_table: Option<FusionTable>,
    pub smash_table: Option<FusionTable>,
    pub c_table: Option<FusionTable>,
    pub corner_ranks: Option<Vec<usize>>,
    pub qdims: Option<QuantumDims>,
}

#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub input: String,
    pub seed: u64,
    pub through: Stage,
    pub report: Report,
    pub artifacts: Artifacts,
}

impl PipelineOutput {
    /// 0 when every check passed, 2 when the input fails the Hopf axioms,
    /// 1 for any other failed check.
    pub fn exit_code(&self) -> i32 {
        let hopf_failed = VALIDATION_CHECKS
            .iter()
            .any(|id| self.report.get(id).is_some_and(|c| c.status == Status::Fail));
        if hopf_failed {
            2
        } else if self.report.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self) -> String {
        let a = &self.artifacts;
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k}: {v}");
        };
        line("report", "hopf-fusion v1".into());
        line("input", self.input.clone());
        line("seed", self.seed.to_string());
        line("through", self.through.to_string());
        for (i, entry) in a.field_log.iter().enumerate() {
            line(&format!("field.attempt.{i}"), entry.clone());
        }
        if let Some(f) = a.field {
            line("field", field_name(f));
        }
        if let Some(note) = &a.convention_note {
            line("integral.convention", note.clone());
        }
        if let Some(ip) = &a.integrals {
            line("eps_lambda", fmt_fe(ip.eps_lambda));
            line("integral.left", vec_str(&ip.left));
            line("integral.right", vec_str(&ip.right));
        }
        if let Some(b) = &a.blocks {
            line("blocks.m", b.m().to_string());
            line("blocks.dims", join(&b.d));
            line("blocks.dual", join(&b.dual));
            line("blocks.lambda_e", vec_str(&b.lambda_e));
        }
        if let Some(vd) = &a.vdata {
            line("u", vec_str(&vd.u));
            line("v", vec_str(&vd.v));
            line("branch.policy", VElement::POLICY.into());
            line("branch.s_lambda", fmt_fe(vd.s_lambda));
            line("branch.s", vec_str(&vd.s));
        }
        if let Some(psi) = a.psi {
            line("n", a.n.to_string());
            line("psi", fmt_fe(psi));
        }
        if let Some(d) = a.smash_dim {
            line("smash.dim", d.to_string());
        }
        for (name, t) in [("N", &a.n_table), ("L", &a.l_table), ("C", &a.c_table)] {
            if let Some(t) = t {
                line(&format!("table.{name}.labels"), t.labels.join(" "));
                for (x, y, z, v) in t.entries() {
                    line(&format!("table.{name}"), format!("{x} {y} {z} {v}"));
                }
            }
        }
        if let Some(t) = &a.smash_table {
            line("table.smash.nonzero", t.entries().count().to_string());
        }
        if let Some(r) = &a.corner_ranks {
            line("theta.corner_ranks", join(r));
        }
        if let Some(q) = &a.qdims {
            let n = a.n;
            let dims: Vec<String> = q
                .values
                .iter()
                .enumerate()
                .map(|(ij, x)| format!("V{}W{}={}", ij / n, ij % n, fmt_fe(*x)))
                .collect();
            line("qdim", dims.join(" "));
        }
        for c in &self.report.checks {
            let _ = writeln!(out, "{c}");
        }
        let count = |s: Status| self.report.checks.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} n/a",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::NotApplicable)
        );
        out
    }
}

fn field_name(f: Field) -> String {
    format!("GF({}^{})", f.characteristic(), f.degree())
}

fn vec_str(v: &[Fe]) -> String {
    v.iter().map(|&x| format!("[{}]", fmt_fe(x))).collect::<Vec<_>>().join(" ")
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

struct Semisimple {
    integrals: IntegralPair,
    blocks: Option<BlockData>,
    vdata: Option<VElement>,
    report: Report,
    convention_note: String,
}

/// Integrals, blocks, `u` and `v` over one field; errors that call for a
/// larger field are passed through.
fn semisimple_stages(h: &HopfAlgebra, through: Stage) -> Result<Semisimple> {
    let mut fallback = None;
    for conv in [RightIntegralConvention::Standard, RightIntegralConvention::Opposite] {
        let ip = compute_integrals_with(h, conv)?;
        let mut report = check_integrals(h, &ip);
        let note = match &fallback {
            None => conv.describe().to_string(),
            Some(why) => format!("{} (after {why} under {})", conv.describe(), conv.other().describe()),
        };
        if through < Stage::Blocks {
            return Ok(Semisimple { integrals: ip, blocks: None, vdata: None, report, convention_note: note });
        }
        let blocks = block_decomposition(h, &ip)?;
        report.extend(check_blocks(h, &blocks));
        if through < Stage::Uv {
            return Ok(Semisimple { integrals: ip, blocks: Some(blocks), vdata: None, report, convention_note: note });
        }
        let u = compute_u(h, &ip)?;
        let urep = check_u_properties(h, &ip, &blocks, &u);
        let failed: Vec<&str> = ["Prop3.20.3", "Integral.regular_character"]
            .into_iter()
            .filter(|id| urep.get(id).is_some_and(|c| c.status == Status::Fail))
            .collect();
        if !failed.is_empty() && conv == RightIntegralConvention::Standard {
            fallback = Some(format!("{} failing", failed.join(", ")));
            continue;
        }
        report.extend(urep);
        let vd = compute_v(h, &ip, &blocks, &u)?;
        report.extend(check_v_properties(h, &ip, &blocks, &vd));
        return Ok(Semisimple {
            integrals: ip,
            blocks: Some(blocks),
            vdata: Some(vd),
            report,
            convention_note: note,
        });
    }
    unreachable!("the opposite convention never falls back")
}

fn initial_degree(p: u32, k: u32, n: usize) -> Result<u32> {
    let mut deg = k;
    loop {
        let q = u64::from(p).checked_pow(deg).ok_or(Error::FieldTooLarge { p, k: deg })?;
        if (q - 1) % n as u64 == 0 {
            return Ok(deg);
        }
        deg += k;
    }
}

fn not_reached(report: &mut Report, from: Stage, why: &str) {
    for s in Stage::ALL.into_iter().filter(|&s| s >= from) {
        for id in s.checks() {
            report.push(Check::not_applicable(*id, why));
        }
    }
}

/// Runs every stage up to `opts.through`.
pub fn run_pipeline(input: &str, pres: &Presentation, opts: &PipelineOptions) -> Result<PipelineOutput> {
    check_hypotheses(pres.p, pres.dim)?;
    let h0 = pres.build()?;
    let mut out = PipelineOutput {
        input: input.to_string(),
        seed: opts.seed,
        through: opts.through,
        report: validate_hopf(&h0),
        artifacts: Artifacts { n: 2 * h0.dim(), ..Artifacts::default() },
    };
    if !out.report.all_passed() {
        not_reached(&mut out.report, Stage::Integrals, "Hopf axioms fail");
        return finish(out);
    }
    let n = 2 * h0.dim();
    let mut degree = initial_degree(pres.p, h0.field().degree(), n)?;
    let (h, ss) = loop {
        let (field, emb) = h0.field().extend(degree / h0.field().degree())?;
        let h = h0.embed(&emb)?;
        match semisimple_stages(&h, opts.through) {
            Err(Error::SplittingFieldTooSmall { degree: d }) => {
                out.artifacts.field_log.push(format!("{}: center does not split (factor of degree {d})", field_name(field)));
                degree *= d as u32;
            }
            Err(Error::NonResidue { .. }) => {
                out.artifacts.field_log.push(format!("{}: square root missing", field_name(field)));
                degree *= 2;
            }
            Err(e) => return Err(e),
            Ok(ss) => break (h, ss),
        }
    };
    let f = h.field();
    out.artifacts.field = Some(f);
    out.artifacts.convention_note = Some(ss.convention_note);
    out.report.extend(ss.report);
    out.artifacts.integrals = Some(ss.integrals.clone());
    out.artifacts.blocks = ss.blocks.clone();
    out.artifacts.vdata = ss.vdata.clone();
    let (Some(blocks), Some(vd)) = (ss.blocks, ss.vdata) else {
        let next = if out.artifacts.blocks.is_none() { Stage::Blocks } else { Stage::Uv };
        not_reached(&mut out.report, next, "stage not requested");
        return finish(out);
    };
    let ip = ss.integrals;
    let psi = f.primitive_root_of_unity(n as u64)?;
    out.artifacts.psi = Some(psi);
    if opts.through < Stage::Smash {
        not_reached(&mut out.report, Stage::Smash, "stage not requested");
        return finish(out);
    }

    let sm = build_smash(&h)?;
    out.artifacts.smash_dim = Some(sm.product.dim());
    let sip = smash_integral(&sm, &ip)?;
    let us = smash_u(&sm, &sip)?;
    out.report.extend(check_smash(&sm, &ip, &vd.u));
    if opts.through < Stage::Simples {
        not_reached(&mut out.report, Stage::Simples, "stage not requested");
        return finish(out);
    }

    let chars = enumerate_simples(&sm, &blocks, &vd, psi);
    let ctx = RepContext { sm: &sm, blocks: &blocks, vd: &vd, psi, seed: opts.seed };
    out.report.extend(verify_modules(&ctx, &chars));
    out.report.extend(verify_completeness(&ctx, &chars, &sip, &us));
    out.report.extend(verify_duals(&ctx, &chars));
    if opts.through < Stage::Fusion {
        not_reached(&mut out.report, Stage::Fusion, "stage not requested");
        return finish(out);
    }

    let n_table = star_product_coeffs(&h, &blocks)?;
    let l_table = newstar_product_coeffs(&h, &blocks, &vd, &n_table)?;
    let smash_table = smash_fusion_table(&sm, &chars, &blocks.d)?;
    out.report.extend(check_fusion(h.is_involutory(), &blocks, &n_table, &l_table, &smash_table, n));
    out.artifacts.n_table = Some(n_table.clone());
    out.artifacts.l_table = Some(l_table.clone());
    out.artifacts.smash_table = Some(smash_table.clone());
    if opts.through < Stage::Theorem {
        not_reached(&mut out.report, Stage::Theorem, "stage not requested");
        return finish(out);
    }

    let alg = FusionAlgebra::new(&smash_table, f);
    let thetas = theta_idempotents(n, psi);
    out.report.extend(verify_theta(&alg, &thetas, blocks.m(), n, psi));
    let (thm, ranks) = verify_theorem_decomposition(&alg, &n_table, &l_table, &thetas, n);
    out.report.extend(thm);
    out.artifacts.corner_ranks = Some(ranks);
    let (sub, c_table) = subcategory_c(&smash_table, &alg, &n_table, &l_table, &thetas, &blocks, n);
    out.report.extend(sub);
    out.artifacts.c_table = c_table;
    if opts.through < Stage::Qdims {
        not_reached(&mut out.report, Stage::Qdims, "stage not requested");
        return finish(out);
    }

    let (qrep, qdims) = quantum_dimensions(&h, &blocks, &vd, psi, n);
    out.report.extend(qrep);
    out.artifacts.qdims = Some(qdims);
    finish(out)
}

/// Rejects reports that do not list every manifest entry exactly once, in
/// order.
fn finish(out: PipelineOutput) -> Result<PipelineOutput> {
    let ids: Vec<&str> = out.report.checks.iter().map(|c| c.id.as_str()).collect();
    let expected = manifest();
    if ids != expected {
        let missing: Vec<&&str> = expected.iter().filter(|id| !ids.contains(id)).collect();
        let extra: Vec<&&str> = ids.iter().filter(|id| !expected.contains(id)).collect();
        return Err(Error::Inconsistent(format!(
            "report does not match the check manifest (missing {missing:?}, unexpected {extra:?})"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::builtin;

    fn run(name: &str, through: Stage) -> Result<PipelineOutput> {
        run_pipeline(name, &builtin(name)?, &PipelineOptions { through, seed: 0 })
    }

    #[test]
    fn cyclic_two_full_run() {
        let out = run("kC2@p=5", Stage::Qdims).unwrap();
        assert!(out.report.all_passed(), "{}", out.render());
        assert_eq!(out.artifacts.field.unwrap().order(), 25);
        assert_eq!(out.exit_code(), 0);
    }

    #[test]
    fn partial_runs_are_complete() {
        for s in Stage::ALL {
            let out = run("kC2@p=5", s).unwrap();
            assert_eq!(out.report.checks.len(), manifest().len());
            assert_eq!(out.exit_code(), 0);
        }
    }

    #[test]
    fn hypothesis_violation() {
        let e = run("kC2@p=2", Stage::Qdims).unwrap_err();
        assert_eq!(exit_code(&e), 3);
        assert_eq!(exit_code(&run("kS3@p=3", Stage::Qdims).unwrap_err()), 3);
    }

    #[test]
    fn stage_names_round_trip() {
        for s in Stage::ALL {
            assert_eq!(s.name().parse::<Stage>(), Ok(s));
        }
        assert!("nope".parse::<Stage>().is_err());
    }
}
