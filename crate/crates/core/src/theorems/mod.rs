//! Falsification-style checks of continuity theorems.
//!
//! Each check measures the theorem's hypotheses with the probes and, when
//! they hold, probes the conclusion. Unmet hypotheses give `inconclusive`.
//! A `fail` therefore means the conclusion broke while every measured
//! hypothesis held: an alarm pointing at a defect in the probes, never an
//! expected outcome.

mod cases;

pub use cases::{load_cases, run_case, run_published_examples, select_cases, TheoremCase, CASE_IDS, FIXTURE_DIR_ENV};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::func::{FuncFamilySpec, FuncSpec};
use crate::norm::{TwoNormSpace, Vector};
use crate::probes::{
    probe_sequential, probe_u_continuity, probe_uniform_continuity, probe_ward, probe_ward_compact_image, ward_images,
    DomainBox, Parameters, ProbeReport, Status, Witness,
};
use crate::sampling::Sampler;
use crate::seq::{
    classify_cauchy, classify_convergent, classify_quasi_cauchy, delta_values, extract_quasi_cauchy_subsequence,
    interleave, SeqSpec, SeqVerdict, ToleranceSchedule,
};

/// Members `f_n` whose hypotheses are measured in the uniform-limit checks,
/// together with the window start.
pub const FAMILY_SAMPLE: [u64; 5] = [1, 2, 5, 10, 50];

fn family_indices(sched: &ToleranceSchedule) -> Vec<u64> {
    let mut ns = FAMILY_SAMPLE.to_vec();
    if !ns.contains(&sched.start()) {
        ns.push(sched.start());
    }
    ns
}

/// `max ||f_n(x) - f(x), e_i||` over the samples, the basis and `n` in the
/// window, against `ε`.
pub fn check_uniform_convergence(
    space: &TwoNormSpace,
    family: &FuncFamilySpec,
    f: &FuncSpec,
    domain_samples: &[Vector],
    sched: &ToleranceSchedule,
) -> Result<ProbeReport> {
    if family.dim_in() != f.dim_in() || family.dim_out() != f.dim_out() || f.dim_out() != space.dim() {
        return Err(Error::InvalidFunction("family and limit must both map the space into itself".into()));
    }
    let mut report = ProbeReport::new(
        "uniform-convergence",
        Parameters { epsilon: Some(sched.epsilon()), window: Some((sched.start(), sched.end())), ..Parameters::default() },
    );
    let mut worst: Option<Witness> = None;
    let mut buf = vec![0.0; space.dim()];
    for x in domain_samples {
        let fx = f.apply(x.as_slice())?;
        let mut finite = true;
        for n in sched.start()..=sched.end() {
            let fnx = family.apply(n, x.as_slice())?;
            for ((d, a), b) in buf.iter_mut().zip(&fnx).zip(&fx) {
                *d = a - b;
            }
            if buf.iter().any(|c| !c.is_finite()) {
                finite = false;
                break;
            }
            for e in space.basis() {
                let value = space.norm_of(&buf, e.as_slice())?;
                if worst.as_ref().is_none_or(|w| value > w.value) {
                    worst = Some(Witness {
                        subject: "f_n - f".into(),
                        index: Some(n),
                        input: Some(x.as_slice().to_vec()),
                        partner: None,
                        direction: e.as_slice().to_vec(),
                        value,
                        delta: None,
                    });
                }
            }
        }
        if finite {
            report.counts.checked += 1;
        } else {
            report.counts.inconclusive += 1;
        }
    }
    let failed = worst.as_ref().is_some_and(|w| w.value >= sched.epsilon());
    if let Some(w) = worst {
        report.notes.push(format!("worst deviation {} at n = {}", w.value, w.index.unwrap_or(0)));
        if failed {
            report.push_witness(w);
        }
    }
    report.settle(failed);
    Ok(report)
}

fn theorem_report(id: &str, parameters: Parameters) -> ProbeReport {
    let mut r = ProbeReport::new(id, parameters);
    r.case_id = Some(id.to_string());
    r
}

/// Notes a hypothesis report and tells whether it holds.
fn hypothesis(report: &mut ProbeReport, label: &str, pre: &ProbeReport) -> bool {
    report.notes.push(format!(
        "hypothesis {label}: {:?} ({} checked, {} skipped)",
        pre.status, pre.counts.checked, pre.counts.skipped
    ));
    pre.status == Status::Pass
}

fn unmet(mut report: ProbeReport) -> ProbeReport {
    report.status = Status::Inconclusive;
    report
}

fn conclude(mut report: ProbeReport, label: &str, conclusion: ProbeReport) -> ProbeReport {
    report.notes.push(format!("conclusion {label}: {:?}", conclusion.status));
    report.notes.extend(conclusion.notes);
    report.status = conclusion.status;
    report.witnesses = conclusion.witnesses;
    report.counts = conclusion.counts;
    report
}

/// Ward continuity implies sequential continuity.
///
/// Hypothesis: `f` is ward on the quasi-Cauchy battery and on the
/// interleavings `(x_1, L, x_2, L, ...)` of the convergent inputs.
/// Conclusion: the images of the convergent inputs converge to `f(L)`.
pub fn verify_ward_implies_sequential(
    space: &TwoNormSpace,
    f: &FuncSpec,
    quasi_cauchy: &[SeqSpec],
    convergent: &[(SeqSpec, Vector)],
    sched: &ToleranceSchedule,
    image_epsilon: f64,
) -> Result<ProbeReport> {
    let mut report = theorem_report("thm-ward-implies-sequential", window_params(sched, image_epsilon));
    let interleaved = convergent.iter().map(|(s, l)| interleave(s, l)).collect::<Result<Vec<_>>>()?;
    let plain = probe_ward(space, f, quasi_cauchy, sched, image_epsilon)?;
    let woven = probe_ward(space, f, &interleaved, &sched.interleaved(), image_epsilon)?;
    let plain_ok = plain.status != Status::Fail;
    report.notes.push(format!("hypothesis ward on quasi-Cauchy battery: {:?}", plain.status));
    if !(hypothesis(&mut report, "ward on interleavings", &woven) && plain_ok) {
        return Ok(unmet(report));
    }
    let conclusion = probe_sequential(space, f, convergent, sched, image_epsilon)?;
    Ok(conclude(report, "sequential", conclusion))
}

fn window_params(sched: &ToleranceSchedule, image_epsilon: f64) -> Parameters {
    Parameters {
        epsilon: Some(sched.epsilon()),
        image_epsilon: Some(image_epsilon),
        window: Some((sched.start(), sched.end())),
        ..Parameters::default()
    }
}

fn in_box(seq: &SeqSpec, domain: &DomainBox, sched: &ToleranceSchedule) -> Result<bool> {
    Ok(seq.window_terms(sched.start(), sched.end())?.iter().all(|t| domain.contains(t)))
}

/// u-continuity implies ward continuity.
///
/// Hypothesis: the u-continuity probe passes on the box with some δ.
/// Conclusion: inputs inside the box whose window differences are below δ
/// in every basis direction have ε-quasi-Cauchy images.
#[allow(clippy::too_many_arguments)]
pub fn verify_u_implies_ward(
    space: &TwoNormSpace,
    f: &FuncSpec,
    domain: &DomainBox,
    epsilon: f64,
    delta_grid: &[f64],
    pair_samples: usize,
    seed: u64,
    battery: &[SeqSpec],
    sched: &ToleranceSchedule,
) -> Result<ProbeReport> {
    let mut report = theorem_report("thm-u-implies-ward", window_params(sched, epsilon));
    let pre = probe_u_continuity(space, f, domain, epsilon, delta_grid, pair_samples, seed)?;
    if !hypothesis(&mut report, "u-continuity", &pre) {
        return Ok(unmet(report));
    }
    let delta = pre.parameters.delta.expect("a passing u-continuity report carries δ");
    report.parameters.delta = Some(delta);
    let input_sched = sched.with_epsilon(delta)?;
    let mut qualifying = Vec::new();
    for seq in battery {
        if in_box(seq, domain, sched)? && classify_quasi_cauchy(space, seq, &input_sched)?.status == Status::Pass {
            qualifying.push(seq);
        } else {
            report.counts.skipped += 1;
            report.notes.push(format!("skipped {}: leaves the box or has a difference ≥ δ = {delta}", seq.name()));
        }
    }
    let skipped = report.counts.skipped;
    let mut conclusion = ProbeReport::new("ward", window_params(sched, epsilon));
    let failed = ward_images(space, f, &qualifying, &sched.with_epsilon(epsilon)?, &mut conclusion)?;
    conclusion.settle(failed);
    conclusion.counts.skipped = skipped;
    Ok(conclude(report, "ward", conclusion))
}

/// Uniform continuity (with a certificate `(z_k, δ_k)`) implies ward
/// continuity.
///
/// Hypothesis: the certificate passes for every basis vector as `w`.
/// Conclusion: inputs inside the box whose window differences satisfy every
/// `||Δx_n, z_k|| < δ_k` have ε-quasi-Cauchy images.
#[allow(clippy::too_many_arguments)]
pub fn verify_uniform_implies_ward(
    space: &TwoNormSpace,
    f: &FuncSpec,
    domain: &DomainBox,
    epsilon: f64,
    certificate: &[(Vector, f64)],
    pair_samples: usize,
    seed: u64,
    battery: &[SeqSpec],
    sched: &ToleranceSchedule,
) -> Result<ProbeReport> {
    let mut report = theorem_report("thm-uniform-implies-ward", window_params(sched, epsilon));
    for (i, w) in space.basis().iter().enumerate() {
        let pre = probe_uniform_continuity(space, f, domain, epsilon, w, certificate, pair_samples, seed.wrapping_add(i as u64))?;
        if !hypothesis(&mut report, &format!("uniform continuity against e{}", i + 1), &pre) {
            return Ok(unmet(report));
        }
    }
    let mut qualifying = Vec::new();
    'seqs: for seq in battery {
        if !in_box(seq, domain, sched)? {
            report.counts.skipped += 1;
            report.notes.push(format!("skipped {}: leaves the box", seq.name()));
            continue;
        }
        for (z, delta) in certificate {
            let values = delta_values(space, seq, z, sched)?;
            if values.iter().any(|(_, v)| !(*v < *delta)) {
                report.counts.skipped += 1;
                report.notes.push(format!("skipped {}: a difference breaks the constraint along {z}", seq.name()));
                continue 'seqs;
            }
        }
        qualifying.push(seq);
    }
    let skipped = report.counts.skipped;
    let mut conclusion = ProbeReport::new("ward", window_params(sched, epsilon));
    let failed = ward_images(space, f, &qualifying, &sched.with_epsilon(epsilon)?, &mut conclusion)?;
    conclusion.settle(failed);
    conclusion.counts.skipped = skipped;
    Ok(conclude(report, "ward", conclusion))
}

/// A ward continuous image of a ward compact set is ward compact.
///
/// For each input: extraction finds an ε-quasi-Cauchy subsequence (the set
/// is ward compact) and the image of that subsequence is quasi-Cauchy at
/// the image tolerance (f is ward on it). Conclusion: extraction succeeds
/// on the image sequence itself.
pub fn verify_ward_compact_image(
    space: &TwoNormSpace,
    f: &FuncSpec,
    seqs: &[SeqSpec],
    sched: &ToleranceSchedule,
    bound: f64,
    image_epsilon: f64,
) -> Result<ProbeReport> {
    let mut report = theorem_report("thm-ward-compact-image", window_params(sched, image_epsilon));
    report.parameters.bound = Some(bound);
    let mut qualifying = Vec::new();
    for seq in seqs {
        let picked = match extract_quasi_cauchy_subsequence(space, seq, sched, bound) {
            Ok(Some(p)) => p,
            Ok(None) => {
                report.notes.push(format!("skipped {}: no quasi-Cauchy subsequence in the window", seq.name()));
                continue;
            }
            Err(Error::BoundViolation { index, .. }) => {
                report.notes.push(format!("skipped {}: term {index} exceeds the bound", seq.name()));
                continue;
            }
            Err(e) => return Err(e),
        };
        let terms = picked.iter().map(|&n| Vector::new(seq.term(n)?)).collect::<Result<Vec<_>>>()?;
        let sub = SeqSpec::from_terms(terms)?.named(format!("{}[extracted]", seq.name()));
        let sub_sched = ToleranceSchedule::new(1, picked.len() as u64, image_epsilon)?;
        let image = classify_quasi_cauchy(space, &sub.image(f)?, &sub_sched)?;
        if image.status == Status::Pass {
            qualifying.push(seq.clone());
        } else {
            report.notes.push(format!("skipped {}: image of the extracted subsequence is {:?}", seq.name(), image.status));
        }
    }
    let skipped = seqs.len() - qualifying.len();
    if qualifying.is_empty() {
        report.counts.skipped = skipped;
        return Ok(unmet(report));
    }
    let mut conclusion = probe_ward_compact_image(space, f, &qualifying, &sched.with_epsilon(image_epsilon)?, f64::INFINITY)?;
    conclusion.counts.skipped = skipped;
    Ok(conclude(report, "image extraction", conclusion))
}

/// The three terms of `||Δf(x_k), e_i|| <= ||f(x_{k+1}) - f_n(x_{k+1})|| +
/// ||Δf_n(x_k)|| + ||f_n(x_k) - f(x_k)||`, each maximized over the inputs,
/// window and basis, at a fixed `n`.
pub fn epsilon_thirds(
    space: &TwoNormSpace,
    family: &FuncFamilySpec,
    f: &FuncSpec,
    seqs: &[&SeqSpec],
    sched: &ToleranceSchedule,
    n: u64,
) -> Result<[f64; 3]> {
    let mut out = [0.0f64; 3];
    let sub = |a: &[f64], b: &[f64]| -> Vec<f64> { a.iter().zip(b).map(|(p, q)| p - q).collect() };
    for seq in seqs {
        let terms = seq.window_terms(sched.start(), sched.end())?;
        let fx = terms.iter().map(|t| f.apply(t)).collect::<Result<Vec<_>>>()?;
        let fnx = terms.iter().map(|t| family.apply(n, t)).collect::<Result<Vec<_>>>()?;
        for k in 0..terms.len() - 1 {
            let parts = [sub(&fx[k + 1], &fnx[k + 1]), sub(&fnx[k + 1], &fnx[k]), sub(&fnx[k], &fx[k])];
            for e in space.basis() {
                for (slot, d) in out.iter_mut().zip(&parts) {
                    *slot = slot.max(space.norm_of(d, e.as_slice())?);
                }
            }
        }
    }
    Ok(out)
}

/// A uniform limit of ward continuous functions is ward continuous.
///
/// Hypotheses at `ε/3` (with `ε` the image tolerance): `f_n -> f` uniformly
/// on the samples plus every window term of the battery, and each sampled
/// `f_n` is ward on the battery. Conclusion: `f` is ward at `ε`. The report
/// also carries the measured three-term split at `n = N`.
pub fn verify_uniform_limit_ward(
    space: &TwoNormSpace,
    family: &FuncFamilySpec,
    f: &FuncSpec,
    battery: &[SeqSpec],
    sched: &ToleranceSchedule,
    image_epsilon: f64,
    extra_samples: &[Vector],
) -> Result<ProbeReport> {
    let mut report = theorem_report("thm-uniform-limit-ward", window_params(sched, image_epsilon));
    let third = image_epsilon / 3.0;
    let mut samples = extra_samples.to_vec();
    for seq in battery {
        for t in seq.window_terms(sched.start(), sched.end())? {
            if let Ok(v) = Vector::new(t) {
                samples.push(v);
            }
        }
    }
    let uc = check_uniform_convergence(space, family, f, &samples, &sched.with_epsilon(third)?)?;
    if !hypothesis(&mut report, "uniform convergence at ε/3", &uc) {
        return Ok(unmet(report));
    }
    for n in family_indices(sched) {
        let pre = probe_ward(space, &family.member(n), battery, sched, third)?;
        if !hypothesis(&mut report, &format!("f_{n} ward at ε/3"), &pre) {
            return Ok(unmet(report));
        }
    }
    let conclusion = probe_ward(space, f, battery, sched, image_epsilon)?;
    let qualifying: Vec<&SeqSpec> = battery
        .iter()
        .filter(|s| classify_quasi_cauchy(space, s, sched).is_ok_and(|v| v.status == Status::Pass))
        .collect();
    let split = epsilon_thirds(space, family, f, &qualifying, sched, sched.start())?;
    let mut report = conclude(report, "ward at ε", conclusion);
    report.notes.push(format!("three-term split at n = {}: {:?} against ε/3 = {third}", sched.start(), split));
    if split.iter().any(|v| *v >= third) && report.status != Status::Inconclusive {
        report.status = Status::Fail;
        report.notes.push("a term of the split reached ε/3 although every hypothesis held".into());
    }
    Ok(report)
}

/// A uniform limit of u-continuous functions is u-continuous.
///
/// Hypotheses at `ε/3`: uniform convergence on box samples, and the
/// u-continuity probe passes for each sampled `f_n`. Conclusion: the probe
/// passes for `f` at `ε` with a δ at least the one found for `f_N`.
#[allow(clippy::too_many_arguments)]
pub fn verify_uniform_limit_u(
    space: &TwoNormSpace,
    family: &FuncFamilySpec,
    f: &FuncSpec,
    domain: &DomainBox,
    epsilon: f64,
    delta_grid: &[f64],
    pair_samples: usize,
    domain_samples: usize,
    seed: u64,
    sched: &ToleranceSchedule,
) -> Result<ProbeReport> {
    let mut report = theorem_report("thm-uniform-limit-u", Parameters {
        epsilon: Some(epsilon),
        delta_grid: delta_grid.to_vec(),
        window: Some((sched.start(), sched.end())),
        seed: Some(seed),
        ..Parameters::default()
    });
    let third = epsilon / 3.0;
    let (lo, hi) = domain.bounds();
    let mut sampler = Sampler::new(seed);
    let samples = (0..domain_samples)
        .map(|_| Vector::new(sampler.in_box(lo, hi)))
        .collect::<Result<Vec<_>>>()?;
    let uc = check_uniform_convergence(space, family, f, &samples, &sched.with_epsilon(third)?)?;
    if !hypothesis(&mut report, "uniform convergence at ε/3", &uc) {
        return Ok(unmet(report));
    }
    let mut delta_n = None;
    for n in family_indices(sched) {
        let pre = probe_u_continuity(space, &family.member(n), domain, third, delta_grid, pair_samples, seed)?;
        if !hypothesis(&mut report, &format!("f_{n} u-continuous at ε/3"), &pre) {
            return Ok(unmet(report));
        }
        if n == sched.start() {
            delta_n = pre.parameters.delta;
        }
    }
    let delta_n = delta_n.expect("the window start is always sampled");
    let conclusion = probe_u_continuity(space, f, domain, epsilon, delta_grid, pair_samples, seed)?;
    let found = conclusion.parameters.delta;
    let mut report = conclude(report, "u-continuity at ε", conclusion);
    report.parameters.delta = found;
    report.notes.push(format!("δ for f_{}: {delta_n}; δ for f: {found:?}", sched.start()));
    if report.status == Status::Pass && found.is_some_and(|d| d < delta_n) {
        report.status = Status::Fail;
        report.notes.push("the limit needs a smaller δ than f_N".into());
    }
    Ok(report)
}

/// Inputs for the implication matrix.
#[derive(Debug, Clone, Default)]
pub struct Battery {
    pub quasi_cauchy: Vec<SeqSpec>,
    pub convergent: Vec<(SeqSpec, Vector)>,
}

/// Verdicts of the four continuity properties on a battery:
///
/// 1. quasi-Cauchy inputs have quasi-Cauchy images (ward);
/// 2. quasi-Cauchy inputs have convergent (here: Cauchy) images;
/// 3. convergent inputs have images converging to `f(L)` (sequential);
/// 4. convergent inputs have quasi-Cauchy images.
///
/// Properties 1 and 2 also run on the interleavings of the convergent
/// inputs. Properties 1 to 3 use the image tolerance `ε'`, property 4 uses
/// `2ε'`, so that 2 ⇒ 1 ⇒ 4, 2 ⇒ 3 and 3 ⇒ 4 hold on every finite run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ImplicationMatrix {
    pub verdicts: [Status; 4],
    pub consistent: bool,
    /// Broken implications `(a, b)`, 1-based.
    pub violations: Vec<(usize, usize)>,
    /// First failure witness of each property.
    pub failures: [Option<Witness>; 4],
}

/// The implications checked by [`ImplicationMatrix`], 1-based.
pub const LATTICE: [(usize, usize); 4] = [(2, 1), (1, 4), (2, 3), (3, 4)];

#[derive(Default)]
struct Tally {
    checked: usize,
    failed: bool,
    inconclusive: bool,
    witness: Option<Witness>,
}

impl Tally {
    fn add(&mut self, subject: &str, v: &SeqVerdict) {
        match v.status {
            Status::Pass => self.checked += 1,
            Status::Fail => {
                self.checked += 1;
                self.failed = true;
                self.witness.get_or_insert_with(|| Witness::from_verdict(subject, v));
            }
            Status::Inconclusive => self.inconclusive = true,
        }
    }

    fn status(&self) -> Status {
        if self.failed {
            Status::Fail
        } else if self.checked == 0 || self.inconclusive {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }
}

pub fn run_implication_matrix(
    space: &TwoNormSpace,
    f: &FuncSpec,
    battery: &Battery,
    sched: &ToleranceSchedule,
    image_epsilon: f64,
) -> Result<ImplicationMatrix> {
    let image_sched = sched.with_epsilon(image_epsilon)?;
    let woven_sched = sched.interleaved();
    let mut inputs: Vec<(SeqSpec, ToleranceSchedule)> = Vec::new();
    for s in &battery.quasi_cauchy {
        if classify_quasi_cauchy(space, s, sched)?.status == Status::Pass {
            inputs.push((s.clone(), image_sched));
        }
    }
    for (s, l) in &battery.convergent {
        let xi = interleave(s, l)?;
        if classify_quasi_cauchy(space, &xi, &woven_sched)?.status == Status::Pass {
            inputs.push((xi, woven_sched.with_epsilon(image_epsilon)?));
        }
    }
    let (mut t1, mut t2, mut t3, mut t4) = (Tally::default(), Tally::default(), Tally::default(), Tally::default());
    for (s, sch) in &inputs {
        let image = s.image(f)?;
        t1.add(s.name(), &classify_quasi_cauchy(space, &image, sch)?);
        t2.add(s.name(), &classify_cauchy(space, &image, sch)?);
    }
    let doubled = sched.with_epsilon(2.0 * image_epsilon)?;
    for (s, l) in &battery.convergent {
        if classify_convergent(space, s, l, sched)?.status != Status::Pass {
            continue;
        }
        let image = s.image(f)?;
        match Vector::new(f.apply(l.as_slice())?) {
            Ok(fl) => t3.add(s.name(), &classify_convergent(space, &image, &fl, &image_sched)?),
            Err(_) => t3.inconclusive = true,
        }
        t4.add(s.name(), &classify_quasi_cauchy(space, &image, &doubled)?);
    }
    let verdicts = [t1.status(), t2.status(), t3.status(), t4.status()];
    let violations: Vec<(usize, usize)> = LATTICE
        .iter()
        .copied()
        .filter(|&(a, b)| verdicts[a - 1] == Status::Pass && verdicts[b - 1] == Status::Fail)
        .collect();
    Ok(ImplicationMatrix {
        verdicts,
        consistent: violations.is_empty(),
        violations,
        failures: [t1.witness, t2.witness, t3.witness, t4.witness],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det2() -> TwoNormSpace {
        TwoNormSpace::det2()
    }

    fn seq(text: &str) -> SeqSpec {
        SeqSpec::parse(text).unwrap()
    }

    fn func(text: &str) -> FuncSpec {
        FuncSpec::parse(text, 2).unwrap()
    }

    fn sched(n: u64, m: u64, eps: f64) -> ToleranceSchedule {
        ToleranceSchedule::new(n, m, eps).unwrap()
    }

    fn box_samples(b: f64, count: usize) -> Vec<Vector> {
        let mut s = Sampler::new(9);
        (0..count).map(|_| Vector::new(s.in_box(&[-b, -b], &[b, b])).unwrap()).collect()
    }

    #[test]
    fn uniform_convergence_examples() {
        let f = func("(x1^2, x2)");
        let samples = box_samples(5.0, 100);
        let s = sched(200, 400, 0.02);
        let shifted = FuncFamilySpec::parse("(x1^2 + 1/n, x2 + 1/n)", 2).unwrap();
        let r = check_uniform_convergence(&det2(), &shifted, &f, &samples, &s).unwrap();
        assert_eq!(r.status, Status::Pass);
        let constant = FuncFamilySpec::constant(f.clone());
        let r = check_uniform_convergence(&det2(), &constant, &f, &samples, &s).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.notes[0].starts_with("worst deviation 0 "));
        let scaled = FuncFamilySpec::parse("(x1^2 + x1/n, x2 + x2/n)", 2).unwrap();
        let r = check_uniform_convergence(&det2(), &scaled, &f, &samples, &sched(200, 400, 0.001)).unwrap();
        assert_eq!(r.status, Status::Fail);
        // oracle: |x_k| / n at the worst sample and n = 200
        let w = &r.witnesses[0];
        assert_eq!(w.index, Some(200));
        let x = w.input.as_ref().unwrap();
        let k = if w.direction == [1.0, 0.0] { 1 } else { 0 };
        assert!((w.value - x[k].abs() / 200.0).abs() < 1e-15);
        assert!(w.value <= 5.0 / 200.0);
    }

    #[test]
    fn ward_implies_sequential_on_affine_and_square() {
        let s = sched(200, 400, 0.01);
        let qc = [seq("(sqrt(n), sqrt(n))")];
        let conv = [(seq("(1/n, 2 + 1/n)"), Vector::from([0.0, 2.0])), (seq("(1 + 1/n, 1 - 1/n)"), Vector::from([1.0, 1.0]))];
        let affine = func("(x1 + x2, 2*x2 - 1)");
        let r = verify_ward_implies_sequential(&det2(), &affine, &[seq("(sqrt(n)/20, 0)")], &conv, &s, 0.04).unwrap();
        assert_eq!(r.status, Status::Pass, "{:#?}", r.notes);
        let square = func("(x1^2, x2^2)");
        let r = verify_ward_implies_sequential(&det2(), &square, &qc, &conv, &sched(200, 400, 0.1), 0.1).unwrap();
        assert_eq!(r.status, Status::Inconclusive);
    }

    #[test]
    fn u_implies_ward_on_a_lipschitz_map() {
        let f = func("(2*x1 + 1, x1 - x2)");
        let domain = DomainBox::symmetric(2, 2.0).unwrap();
        let battery = [seq("(sin(sqrt(n)), cos(sqrt(n)))"), seq("(1/n, 1 - 1/n)"), seq("(n, n)")];
        let r = verify_u_implies_ward(&det2(), &f, &domain, 0.1, &[0.1, 0.03, 0.01], 3000, 5, &battery, &sched(2000, 3000, 0.1)).unwrap();
        assert_eq!(r.status, Status::Pass, "{:#?}", r.notes);
        assert_eq!(r.counts.skipped, 1);
    }

    #[test]
    fn uniform_implies_ward_with_a_certificate() {
        let f = func("(x1^2, x2^2)");
        let domain = DomainBox::symmetric(2, 2.0).unwrap();
        let cert = [(Vector::unit(2, 0), 0.02), (Vector::unit(2, 1), 0.02)];
        let battery = [seq("(sin(sqrt(n)), cos(sqrt(n)))"), seq("(1/n, 1)")];
        let r = verify_uniform_implies_ward(&det2(), &f, &domain, 0.1, &cert, 3000, 5, &battery, &sched(2000, 3000, 0.1)).unwrap();
        assert_eq!(r.status, Status::Pass, "{:#?}", r.notes);
    }

    #[test]
    fn compact_image_of_bounded_sequences() {
        let f = func("(x1^2, x2^2)");
        let seqs = [seq("(cos(n), sin(n))"), seq("(sin(n), sin(2*n))")];
        let r = verify_ward_compact_image(&det2(), &f, &seqs, &sched(1, 3000, 0.25), 2.0, 0.25).unwrap();
        assert_eq!(r.status, Status::Pass, "{:#?}", r.notes);
    }

    #[test]
    fn uniform_limit_ward_with_split() {
        let f = func("(x1 + 1, x2 - 2)");
        let family = FuncFamilySpec::parse("(x1 + 1 + 1/n, x2 - 2 + 1/n)", 2).unwrap();
        let battery = [seq("(sqrt(n), sqrt(n))"), seq("(1/n, sin(sqrt(n)))")];
        let s = sched(2501, 5000, 0.01);
        let r = verify_uniform_limit_ward(&det2(), &family, &f, &battery, &s, 0.05, &box_samples(5.0, 50)).unwrap();
        assert_eq!(r.status, Status::Pass, "{:#?}", r.notes);
        let split = epsilon_thirds(&det2(), &family, &f, &battery.iter().collect::<Vec<_>>(), &s, 2501).unwrap();
        // f_n - f is the constant (1/n, 1/n) up to rounding
        assert!((split[0] - 1.0 / 2501.0).abs() < 1e-12);
        assert!((split[2] - 1.0 / 2501.0).abs() < 1e-12);
        assert!((split[1] - (2502f64.sqrt() - 2501f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn uniform_limit_u_on_scaled_quadratics() {
        let f = func("(x1^2, x2^2)");
        let family = FuncFamilySpec::parse("((1 + 1/n) * x1^2, (1 + 1/n) * x2^2)", 2).unwrap();
        let domain = DomainBox::symmetric(2, 1.0).unwrap();
        let grid = [0.1, 0.03, 0.01, 0.003, 0.001];
        let r = verify_uniform_limit_u(&det2(), &family, &f, &domain, 0.3, &grid, 2000, 100, 4, &sched(200, 400, 0.1)).unwrap();
        assert_eq!(r.status, Status::Pass, "{:#?}", r.notes);
    }

    #[test]
    fn implication_matrix_examples() {
        let s = sched(200, 400, 0.02);
        let convergent_only = Battery {
            quasi_cauchy: vec![seq("(1/n, 1/n)")],
            convergent: vec![(seq("(1/n, 1/n)"), Vector::zero(2)), (seq("(2 - 1/n, 3)"), Vector::from([2.0, 3.0]))],
        };
        let m = run_implication_matrix(&det2(), &FuncFamilySpec::constant(FuncSpec::identity(2)).member(1), &convergent_only, &s, 0.02).unwrap();
        assert_eq!(m.verdicts, [Status::Pass; 4]);
        let m = run_implication_matrix(&det2(), &func("(3*x1 - x2, x2 + 5)"), &convergent_only, &s, 0.1).unwrap();
        assert_eq!(m.verdicts, [Status::Pass; 4]);

        let mut full = convergent_only.clone();
        full.quasi_cauchy.push(seq("(sqrt(n), sqrt(n))"));
        let m = run_implication_matrix(&det2(), &func("(x1^2, x2^2)"), &full, &sched(200, 400, 0.04), 0.04).unwrap();
        assert_eq!(m.verdicts[0], Status::Fail);
        assert_eq!(m.verdicts[2], Status::Pass);
        assert!(m.consistent);
    }

    #[test]
    fn every_builtin_case_runs_without_alarm() {
        let cases = load_cases(None, &crate::config::Overrides::default()).unwrap();
        assert_eq!(cases.len(), CASE_IDS.len());
        for case in &cases {
            for r in run_case(case).unwrap() {
                assert!(r.as_expected(), "{} / {:?}: {:?} {:#?}", case.id, r.subject, r.status, r.notes);
            }
        }
    }
}
