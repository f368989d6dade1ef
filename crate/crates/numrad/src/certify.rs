//! Certification driver: samples matrix families, evaluates every bound in
//! the inventory against solver-computed targets, checks the ordering
//! chains, sharpness cases, equality implications, and lemma inequalities,
//! and aggregates worst-case normalized slacks into a reproducible report.
//!
//! Slack convention: `slack = (rhs − lhs) / (1 + scale)` where the check
//! asserts `lhs ≤ rhs` and `scale` is the magnitude of the quantities
//! involved; a check passes iff `slack ≥ −τ` with `τ` recorded per row.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::bounds::{self, Sign};
use crate::corpus::{self, splitmix64, Family};
use crate::io::MatrixFile;
use crate::lemmas;
use crate::linalg::op_norm;
use crate::matrix::CMatrix;
use crate::radius::numerical_radius;
use crate::transform::cartesian;
use crate::{tol, Error, Result};

/// Golden-section width for the α-minimization inside certification runs.
/// Coarser than the library default: every refined point is still a valid
/// bound, so the chain checks are exact regardless of refinement depth.
const CERT_ALPHA_REFINE: f64 = 1e-4;

/// Certification configuration; the report echoes it for reproducibility.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertConfig {
    pub families: Vec<Family>,
    pub sizes: Vec<usize>,
    /// Matrices per (family, size) cell.
    pub count: usize,
    pub seed: u64,
    pub r_values: Vec<f64>,
    pub alpha_grid: usize,
    /// Bound-check tolerance τ (relative slack).
    pub tol: f64,
    /// Deliberately perturbs the plain norm upper bound by −1 to prove the
    /// harness can fail.
    pub self_test_fail: bool,
}

impl Default for CertConfig {
    fn default() -> Self {
        Self {
            families: Family::ALL.to_vec(),
            sizes: vec![2, 3, 4, 5, 6],
            count: 17,
            seed: 7919,
            r_values: vec![1.0, 1.5, 2.0, 3.0],
            alpha_grid: 33,
            tol: tol::CHECK,
            self_test_fail: false,
        }
    }
}

/// One sampled corpus instance with its companion operands.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseRecord {
    pub index: usize,
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    pub matrix: MatrixFile,
    /// Companion `B` for pair and commutator checks.
    pub second: MatrixFile,
    /// Companion `X` in `AXB ± BYA` and `A*X + XA`.
    pub x: MatrixFile,
    /// Companion `Y` in `AXB ± BYA`.
    pub y: MatrixFile,
}

/// One evaluated check row (worst instance over internal parameter sweeps).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    /// Index into the report's `matrices`.
    pub case: usize,
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Aggregate over all cases for one check id.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: String,
    pub tolerance: f64,
    pub applied: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_slack: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_case: Option<usize>,
    pub pass: bool,
    /// Worst-case matrix, embedded when the check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<MatrixFile>,
}

/// Full certification report; serializes to byte-identical JSON for
/// identical configurations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertReport {
    pub suite: String,
    pub config: CertConfig,
    pub matrices: Vec<CaseRecord>,
    pub records: Vec<CheckRecord>,
    pub summary: Vec<CheckSummary>,
    pub violations: usize,
    pub pass: bool,
}

impl CertReport {
    /// Summary table as CSV (`check,tolerance,applied,worst_slack,worst_case,pass`).
    pub fn summary_csv(&self) -> String {
        let mut out = String::from("check,tolerance,applied,worst_slack,worst_case,pass\n");
        for s in &self.summary {
            let slack = s.worst_slack.map(|v| v.to_string()).unwrap_or_default();
            let case = s.worst_case.map(|v| v.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                s.check, s.tolerance, s.applied, slack, case, s.pass
            ));
        }
        out
    }
}

/// Check ids with their per-row tolerances, in registry order.
fn registry(cfg: &CertConfig) -> Vec<(&'static str, f64)> {
    let t = cfg.tol;
    vec![
        ("bound:lower_half_norm", t),
        ("bound:upper_norm", t),
        ("bound:lower_kittaneh", t),
        ("bound:upper_kittaneh", t),
        ("bound:upper_kittaneh_power", t),
        ("bound:upper_yamazaki", t),
        ("bound:lower_rotated_cartesian", t),
        ("bound:lower_cartesian_parts", t),
        ("bound:lower_sq_rotated_cartesian", t),
        ("bound:lower_sq_cartesian_parts", t),
        ("bound:upper_aluthge_refined", t),
        ("bound:upper_alpha_moduli", t),
        ("bound:upper_alpha_moduli_min", t),
        ("bound:prod_upper_dragomir_half_norm", t),
        ("bound:prod_upper_dragomir", t),
        ("bound:prod_upper_heydarbeygi", t),
        ("bound:prod_upper_complex_moduli", t),
        ("bound:prod_upper_anticommutator", t),
        ("bound:comm_upper_generalized", t),
        ("bound:comm_upper_refined", t),
        ("bound:comm_upper_fong_holbrook", t),
        ("bound:comm_upper_hirzallah_kittaneh", t),
        ("bound:upper_axxa_fong", t),
        ("chain:aluthge_refined_le_yamazaki", t),
        ("chain:yamazaki_le_kittaneh_power", t),
        ("chain:alpha_min_le_alpha_half", t),
        ("chain:anticommutator_le_heydarbeygi", t),
        ("chain:complex_moduli_le_dragomir_2r", t),
        ("chain:comm_refined_le_fong_holbrook", t),
        ("chain:lower_rotated_ge_half_norm", t),
        ("chain:lower_sq_rotated_ge_kittaneh_lower", t),
        ("sharp:nilpotent_half_norm", 1e-9),
        ("sharp:normal_norm", 1e-9),
        ("eq:half_norm_implies_rotated_parts", 2.0 * 2f64.sqrt() * t),
        ("eq:kittaneh_implies_sq_rotated_parts", 4.0 * t),
        ("lemma:polarization", 1e-12),
        ("lemma:heinz", 1e-10),
        ("lemma:buzano", 1e-12),
        ("lemma:power_mean", 1e-10),
        ("lemma:scalar_rotation", 1e-12),
        ("lemma:convex_norm", 1e-10),
    ]
}

#[derive(Clone, Copy)]
struct Row {
    lhs: f64,
    rhs: f64,
    slack: f64,
}

/// Per-case rows, keeping the worst slack per check across parameter sweeps.
struct Rows {
    map: BTreeMap<&'static str, Row>,
}

impl Rows {
    fn new() -> Self {
        Self {
            map: BTreeMap::new(),
        }
    }

    /// Records `lhs ≤ rhs` with normalization scale `scale`.
    fn push(&mut self, check: &'static str, lhs: f64, rhs: f64, scale: f64) {
        let slack = (rhs - lhs) / (1.0 + scale);
        let row = Row { lhs, rhs, slack };
        match self.map.get_mut(check) {
            Some(existing) if existing.slack <= slack => {}
            Some(existing) => *existing = row,
            None => {
                self.map.insert(check, row);
            }
        }
    }

    fn push_lower(&mut self, check: &'static str, value: f64, target: f64) {
        self.push(check, value, target, value.abs().max(target.abs()));
    }

    fn push_upper(&mut self, check: &'static str, target: f64, value: f64) {
        self.push(check, target, value, value.abs().max(target.abs()));
    }
}

struct CasePlan {
    index: usize,
    family: Family,
    n: usize,
    seed: u64,
}

struct CaseOutput {
    case: CaseRecord,
    rows: BTreeMap<&'static str, Row>,
}

fn case_seed(seed: u64, family_idx: usize, size_idx: usize, k: usize) -> u64 {
    let mut z = splitmix64(seed);
    z = splitmix64(z ^ (family_idx as u64 + 1));
    z = splitmix64(z ^ (size_idx as u64 + 1));
    splitmix64(z ^ (k as u64 + 1))
}

fn wrad(a: &CMatrix) -> Result<f64> {
    Ok(numerical_radius(a, tol::RADIUS)?.value)
}

fn dense_to_matrix(d: nalgebra::DMatrix<num_complex::Complex64>) -> CMatrix {
    CMatrix::from_dense_unchecked(d)
}

fn rotated_norms(a: &CMatrix) -> (f64, f64) {
    let p = cartesian(a);
    (op_norm(&(&p.re + &p.im)), op_norm(&(&p.re - &p.im)))
}

fn gram_pair_norm(a: &CMatrix) -> f64 {
    let d = a.dense();
    op_norm(&dense_to_matrix(d.adjoint() * d + d * d.adjoint()))
}

fn validate(cfg: &CertConfig) -> Result<()> {
    if cfg.sizes.iter().any(|&n| n == 0) {
        return Err(Error::InvalidArgument("matrix sizes must be >= 1".into()));
    }
    if cfg.r_values.iter().any(|&r| !(r.is_finite() && r >= 1.0)) {
        return Err(Error::InvalidArgument(
            "r values must be finite and >= 1".into(),
        ));
    }
    if cfg.alpha_grid < 16 {
        return Err(Error::InvalidArgument(
            "alpha grid must have at least 16 points".into(),
        ));
    }
    if !(cfg.tol.is_finite() && cfg.tol > 0.0) {
        return Err(Error::InvalidArgument(
            "tolerance must be positive".into(),
        ));
    }
    Ok(())
}

/// Runs the full certification suite for `cfg`.
///
/// Deterministic: identical configurations produce bit-identical reports.
/// Any internal-consistency failure aborts with the offending matrix
/// serialized into the error message.
pub fn run_certification(cfg: &CertConfig) -> Result<CertReport> {
    validate(cfg)?;
    let mut plans = Vec::new();
    for (fi, &family) in cfg.families.iter().enumerate() {
        for (si, &n) in cfg.sizes.iter().enumerate() {
            for k in 0..cfg.count {
                plans.push(CasePlan {
                    index: plans.len(),
                    family,
                    n,
                    seed: case_seed(cfg.seed, fi, si, k),
                });
            }
        }
    }

    let outputs: Vec<CaseOutput> = plans
        .par_iter()
        .map(|plan| evaluate_case(cfg, plan))
        .collect::<Result<Vec<_>>>()?;

    let reg = registry(cfg);
    let mut matrices = Vec::with_capacity(outputs.len());
    let mut records = Vec::new();
    for out in outputs {
        for &(id, tol_row) in &reg {
            if let Some(row) = out.rows.get(id) {
                records.push(CheckRecord {
                    check: id.to_string(),
                    case: out.case.index,
                    family: out.case.family,
                    n: out.case.n,
                    seed: out.case.seed,
                    lhs: row.lhs,
                    rhs: row.rhs,
                    slack: row.slack,
                    tolerance: tol_row,
                    pass: row.slack >= -tol_row,
                });
            }
        }
        matrices.push(out.case);
    }
    records.sort_by(|a, b| a.check.cmp(&b.check).then(a.case.cmp(&b.case)));

    let mut summary = Vec::with_capacity(reg.len());
    for &(id, tol_row) in &reg {
        let rows: Vec<&CheckRecord> = records.iter().filter(|r| r.check == id).collect();
        let worst = rows
            .iter()
            .min_by(|a, b| a.slack.partial_cmp(&b.slack).unwrap());
        let pass = rows.iter().all(|r| r.pass);
        let counterexample = match worst {
            Some(w) if !pass => Some(matrices[w.case].matrix.clone()),
            _ => None,
        };
        summary.push(CheckSummary {
            check: id.to_string(),
            tolerance: tol_row,
            applied: rows.len(),
            worst_slack: worst.map(|r| r.slack),
            worst_case: worst.map(|r| r.case),
            pass,
            counterexample,
        });
    }

    let violations = records.iter().filter(|r| !r.pass).count();
    Ok(CertReport {
        suite: "numrad-certification-v1".to_string(),
        config: cfg.clone(),
        matrices,
        records,
        summary,
        violations,
        pass: violations == 0,
    })
}

fn evaluate_case(cfg: &CertConfig, plan: &CasePlan) -> Result<CaseOutput> {
    let mut rng = ChaCha12Rng::seed_from_u64(plan.seed);
    let a = corpus::random_matrix(plan.family, plan.n, &mut rng)?;
    let b = corpus::random_matrix(Family::Ginibre, plan.n, &mut rng)?;
    let x = corpus::random_matrix(Family::Ginibre, plan.n, &mut rng)?;
    let y = corpus::random_matrix(Family::Ginibre, plan.n, &mut rng)?;
    let rows = eval_checks(cfg, plan, &a, &b, &x, &y, &mut rng)
        .map_err(|e| abort_with_matrix(plan, &a, e))?;
    Ok(CaseOutput {
        case: CaseRecord {
            index: plan.index,
            family: plan.family,
            n: plan.n,
            seed: plan.seed,
            matrix: MatrixFile::from_matrix(&a),
            second: MatrixFile::from_matrix(&b),
            x: MatrixFile::from_matrix(&x),
            y: MatrixFile::from_matrix(&y),
        },
        rows,
    })
}

fn abort_with_matrix(plan: &CasePlan, a: &CMatrix, e: Error) -> Error {
    let json = serde_json::to_string(&MatrixFile::from_matrix(a))
        .unwrap_or_else(|_| "<unserializable>".into());
    Error::Inconsistent(format!(
        "certification aborted at case {} (family {}, n {}, seed {}): {e}; matrix = {json}",
        plan.index, plan.family, plan.n, plan.seed
    ))
}

#[allow(clippy::too_many_arguments)]
fn eval_checks(
    cfg: &CertConfig,
    plan: &CasePlan,
    a: &CMatrix,
    b: &CMatrix,
    x: &CMatrix,
    y: &CMatrix,
    rng: &mut ChaCha12Rng,
) -> Result<BTreeMap<&'static str, Row>> {
    let mut rows = Rows::new();
    let w = wrad(a)?;
    let w2 = w * w;
    let na = op_norm(a);

    // single-matrix bounds against w / w^2
    rows.push_lower("bound:lower_half_norm", bounds::lower_half_norm(a)?.value, w);
    let upper_norm_value = bounds::upper_norm(a)?.value;
    rows.push_upper("bound:upper_norm", w, upper_norm_value);
    if cfg.self_test_fail {
        rows.push_upper("bound:upper_norm", w, upper_norm_value - 1.0);
    }
    let (kit_lo, kit_hi) = bounds::kittaneh_pair(a)?;
    rows.push_lower("bound:lower_kittaneh", kit_lo.value, w2);
    rows.push_upper("bound:upper_kittaneh", w2, kit_hi.value);
    let kp = bounds::upper_kittaneh_power(a)?.value;
    rows.push_upper("bound:upper_kittaneh_power", w, kp);
    let yam = bounds::upper_yamazaki(a)?.value;
    rows.push_upper("bound:upper_yamazaki", w, yam);
    let rot = bounds::lower_rotated_cartesian(a)?.value;
    rows.push_lower("bound:lower_rotated_cartesian", rot, w);
    rows.push_lower(
        "bound:lower_cartesian_parts",
        bounds::lower_cartesian_parts(a)?.value,
        w,
    );
    let sq_rot = bounds::lower_sq_rotated_cartesian(a)?.value;
    rows.push_lower("bound:lower_sq_rotated_cartesian", sq_rot, w2);
    rows.push_lower(
        "bound:lower_sq_cartesian_parts",
        bounds::lower_sq_cartesian_parts(a)?.value,
        w2,
    );
    let alu = bounds::upper_aluthge_refined(a)?.value;
    rows.push_upper("bound:upper_aluthge_refined", w, alu);

    // alpha family: every sample is a bound; the minimum feeds chain (b)
    let curve = bounds::upper_alpha_moduli_min(a, cfg.alpha_grid, CERT_ALPHA_REFINE)?;
    for &(_, v) in &curve.samples {
        rows.push_upper("bound:upper_alpha_moduli", w2, v);
    }
    rows.push_upper("bound:upper_alpha_moduli_min", w2, curve.min_value);
    let half_value = if cfg.alpha_grid % 2 == 1 {
        curve.samples[(cfg.alpha_grid - 1) / 2].1
    } else {
        bounds::upper_alpha_moduli(a, 0.5)?.value
    };
    rows.push_lower("chain:alpha_min_le_alpha_half", curve.min_value, half_value);

    // ordering chains on the single-matrix uppers / lowers
    rows.push_lower("chain:aluthge_refined_le_yamazaki", alu, yam);
    rows.push_lower("chain:yamazaki_le_kittaneh_power", yam, kp);
    rows.push_lower(
        "chain:lower_rotated_ge_half_norm",
        bounds::lower_half_norm(a)?.value,
        rot,
    );
    rows.push_lower("chain:lower_sq_rotated_ge_kittaneh_lower", kit_lo.value, sq_rot);

    // product bounds target w^{2r}(B*A); the raw Dragomir form targets w^r
    let bsa = dense_to_matrix(b.dense().adjoint() * a.dense());
    let w_bta = wrad(&bsa)?;
    for &r in &cfg.r_values {
        let target_r = w_bta.powf(r);
        let target_2r = w_bta.powf(2.0 * r);
        let raw = bounds::prod_upper_dragomir_half_norm(a, b, r)?;
        rows.push_upper("bound:prod_upper_dragomir_half_norm", target_r, raw);
        rows.push_upper("bound:prod_upper_dragomir", target_2r, raw * raw);
        let hey = bounds::prod_upper_heydarbeygi(a, b, r)?.value;
        rows.push_upper("bound:prod_upper_heydarbeygi", target_2r, hey);
        let cm = bounds::prod_upper_complex_moduli(a, b, r)?.value;
        rows.push_upper("bound:prod_upper_complex_moduli", target_2r, cm);
        let anti = bounds::prod_upper_anticommutator(a, b, r)?.value;
        rows.push_upper("bound:prod_upper_anticommutator", target_2r, anti);
        rows.push_lower("chain:anticommutator_le_heydarbeygi", anti, hey);
        if r >= 2.0 {
            let wide = bounds::prod_upper_dragomir_half_norm(a, b, 2.0 * r)?;
            rows.push_lower("chain:complex_moduli_le_dragomir_2r", cm, wide);
        }
    }

    // commutator-style expressions
    let ad = a.dense();
    let bd = b.dense();
    let xd = x.dense();
    let yd = y.dense();
    let ab = ad * bd;
    let ba = bd * ad;
    let w_plus = wrad(&dense_to_matrix(&ab + &ba))?;
    let w_minus = wrad(&dense_to_matrix(&ab - &ba))?;
    let axb = ad * xd * bd;
    let bya = bd * yd * ad;
    let w_gen_plus = wrad(&dense_to_matrix(&axb + &bya))?;
    let w_gen_minus = wrad(&dense_to_matrix(&axb - &bya))?;

    let gen = bounds::comm_upper_generalized(a, b, x, y, Sign::Plus)?.value;
    rows.push_upper("bound:comm_upper_generalized", w_gen_plus, gen);
    rows.push_upper("bound:comm_upper_generalized", w_gen_minus, gen);
    let refined = bounds::comm_upper_refined(a, b, Sign::Plus)?.value;
    rows.push_upper("bound:comm_upper_refined", w_plus, refined);
    rows.push_upper("bound:comm_upper_refined", w_minus, refined);
    let fong = bounds::comm_upper_fong_holbrook(a, b)?.value;
    rows.push_upper("bound:comm_upper_fong_holbrook", w_plus, fong);
    let hk = bounds::comm_upper_hirzallah_kittaneh(a, b, Sign::Plus)?.value;
    rows.push_upper("bound:comm_upper_hirzallah_kittaneh", w_plus, hk);
    rows.push_upper("bound:comm_upper_hirzallah_kittaneh", w_minus, hk);
    rows.push_lower("chain:comm_refined_le_fong_holbrook", refined, fong);

    let w_axxa = wrad(&dense_to_matrix(ad.adjoint() * xd + xd * ad))?;
    rows.push_upper(
        "bound:upper_axxa_fong",
        w_axxa,
        bounds::upper_axxa_fong(a, x)?.value,
    );

    // sharpness families certify the equality cases
    match plan.family {
        Family::NilpotentSquareZero => {
            rows.push("sharp:nilpotent_half_norm", (w - na / 2.0).abs(), 0.0, na);
        }
        Family::Normal | Family::Hermitian | Family::Unitary => {
            rows.push("sharp:normal_norm", (w - na).abs(), 0.0, na);
        }
        _ => {}
    }

    // equality-necessity implications (forward direction only)
    let (np, nm) = rotated_norms(a);
    if w <= na / 2.0 + cfg.tol * (1.0 + na) {
        rows.push(
            "eq:half_norm_implies_rotated_parts",
            (np - nm).abs(),
            0.0,
            na,
        );
    }
    let gram = gram_pair_norm(a);
    if w2 <= gram / 4.0 + cfg.tol * (1.0 + gram) {
        rows.push(
            "eq:kittaneh_implies_sq_rotated_parts",
            (np * np - nm * nm).abs(),
            0.0,
            gram,
        );
    }

    // vector-level lemma spot checks
    let xv = corpus::random_unit_vector(rng, plan.n);
    let yv = corpus::random_unit_vector(rng, plan.n);
    let ev = corpus::random_unit_vector(rng, plan.n);
    let res = lemmas::polarization_residual(a, &xv, &yv)?;
    rows.push("lemma:polarization", res, 0.0, na);
    let alpha = match plan.index % 4 {
        0 => 0.0,
        1 => 1.0,
        _ => rng.gen::<f64>(),
    };
    let s = lemmas::heinz(a, &xv, &yv, alpha)?;
    rows.push("lemma:heinz", s.lhs, s.rhs, s.lhs.abs().max(s.rhs.abs()));
    let s = lemmas::buzano(&xv, &yv, &ev)?;
    rows.push("lemma:buzano", s.lhs, s.rhs, s.lhs.abs().max(s.rhs.abs()));
    let r = cfg.r_values[plan.index % cfg.r_values.len()];
    let p = corpus::random_psd(rng, plan.n)?;
    let s = lemmas::power_mean(&p, &xv, r)?;
    rows.push("lemma:power_mean", s.lhs, s.rhs, s.lhs.abs().max(s.rhs.abs()));
    let sa: f64 = rng.sample::<f64, _>(StandardNormal) * 3.0;
    let sb: f64 = rng.sample::<f64, _>(StandardNormal) * 3.0;
    let s = lemmas::scalar_rotation(sa, sb);
    rows.push(
        "lemma:scalar_rotation",
        s.lhs,
        s.rhs,
        s.lhs.abs().max(s.rhs.abs()),
    );
    let q = corpus::random_psd(rng, plan.n)?;
    let s = lemmas::convex_norm(&p, &q, r)?;
    rows.push("lemma:convex_norm", s.lhs, s.rhs, s.lhs.abs().max(s.rhs.abs()));

    Ok(rows.map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> CertConfig {
        CertConfig {
            families: vec![Family::Ginibre, Family::Hermitian],
            sizes: vec![2, 3],
            count: 1,
            seed: 11,
            r_values: vec![1.0, 2.0],
            alpha_grid: 16,
            tol: tol::CHECK,
            self_test_fail: false,
        }
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let cfg = small_config();
        let r1 = run_certification(&cfg).unwrap();
        assert!(r1.pass, "violations: {:?}", r1.violations);
        assert_eq!(r1.matrices.len(), 4);
        let r2 = run_certification(&cfg).unwrap();
        assert_eq!(
            serde_json::to_string(&r1).unwrap(),
            serde_json::to_string(&r2).unwrap()
        );
    }

    #[test]
    fn records_are_sorted_and_tolerances_recorded() {
        let report = run_certification(&small_config()).unwrap();
        for pair in report.records.windows(2) {
            let key = (&pair[0].check, pair[0].case);
            let next = (&pair[1].check, pair[1].case);
            assert!(key <= next);
        }
        assert!(report
            .records
            .iter()
            .all(|r| r.tolerance > 0.0 && r.slack.is_finite()));
        // every bound row relates lhs and rhs in the declared direction
        for r in &report.records {
            assert!(r.pass, "{} case {} slack {}", r.check, r.case, r.slack);
        }
    }

    #[test]
    fn self_test_flag_forces_failure() {
        let mut cfg = small_config();
        cfg.families = vec![Family::Unitary];
        cfg.self_test_fail = true;
        let report = run_certification(&cfg).unwrap();
        assert!(!report.pass);
        assert!(report.violations > 0);
        let summary = report
            .summary
            .iter()
            .find(|s| s.check == "bound:upper_norm")
            .unwrap();
        assert!(!summary.pass);
        assert!(summary.counterexample.is_some());
        // all other checks are untouched
        assert!(report
            .summary
            .iter()
            .filter(|s| s.check != "bound:upper_norm")
            .all(|s| s.pass));
    }

    #[test]
    fn empty_config_yields_empty_passing_report() {
        let mut cfg = small_config();
        cfg.count = 0;
        let report = run_certification(&cfg).unwrap();
        assert!(report.pass);
        assert!(report.matrices.is_empty());
        assert!(report.records.is_empty());
        assert!(report.summary.iter().all(|s| s.applied == 0 && s.pass));
    }

    #[test]
    fn sharpness_checks_are_family_gated() {
        let mut cfg = small_config();
        cfg.families = vec![Family::NilpotentSquareZero];
        cfg.count = 2;
        let report = run_certification(&cfg).unwrap();
        let sharp_nil = report
            .summary
            .iter()
            .find(|s| s.check == "sharp:nilpotent_half_norm")
            .unwrap();
        assert_eq!(sharp_nil.applied, 4);
        assert!(sharp_nil.pass);
        let sharp_norm = report
            .summary
            .iter()
            .find(|s| s.check == "sharp:normal_norm")
            .unwrap();
        assert_eq!(sharp_norm.applied, 0);
        // nilpotent cases trigger the half-norm equality implication
        let eq = report
            .summary
            .iter()
            .find(|s| s.check == "eq:half_norm_implies_rotated_parts")
            .unwrap();
        assert_eq!(eq.applied, 4);
        assert!(eq.pass);
    }

    #[test]
    fn reports_store_the_corpus() {
        let report = run_certification(&small_config()).unwrap();
        for case in &report.matrices {
            assert_eq!(case.matrix.n, case.n);
            assert_eq!(case.second.n, case.n);
            let a = case.matrix.to_matrix().unwrap();
            assert_eq!(a.dim(), case.n);
        }
        // distinct seeds produce distinct matrices
        assert_ne!(
            report.matrices[0].matrix.entries,
            report.matrices[1].matrix.entries
        );
    }

    #[test]
    fn rejects_invalid_configs() {
        let mut cfg = small_config();
        cfg.alpha_grid = 8;
        assert!(matches!(
            run_certification(&cfg),
            Err(Error::InvalidArgument(_))
        ));
        let mut cfg = small_config();
        cfg.r_values = vec![0.5];
        assert!(matches!(
            run_certification(&cfg),
            Err(Error::InvalidArgument(_))
        ));
        let mut cfg = small_config();
        cfg.sizes = vec![0];
        assert!(matches!(
            run_certification(&cfg),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn csv_summary_has_header_and_rows() {
        let report = run_certification(&small_config()).unwrap();
        let csv = report.summary_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "check,tolerance,applied,worst_slack,worst_case,pass"
        );
        assert_eq!(csv.lines().count(), 1 + report.summary.len());
        assert!(csv.contains("bound:lower_half_norm,"));
    }
}
