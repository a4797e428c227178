//! Sampling probes for continuity notions on a 2-normed space.
//!
//! Every probe returns a [`ProbeReport`]. A pass is evidence gathered on a
//! finite window or sample, never a proof. Direction quantifiers ("for every
//! z", "for any w") are checked on the space basis only.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::func::FuncSpec;
use crate::norm::{TwoNormSpace, Vector};
use crate::sampling::Sampler;
use crate::seq::{
    classify_convergent, classify_quasi_cauchy, delta_values, extract_quasi_cauchy_subsequence, SeqSpec, SeqVerdict,
    ToleranceSchedule,
};

pub use crate::seq::Status;

/// Failure witnesses kept per report.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// Sequence name, or the probe's domain label for pair probes.
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<Vec<f64>>,
    pub direction: Vec<f64>,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
}

impl Witness {
    pub(crate) fn from_verdict(subject: &str, v: &SeqVerdict) -> Self {
        Self {
            subject: subject.to_string(),
            index: Some(v.witness_index),
            input: None,
            partner: None,
            direction: v.witness_direction.clone(),
            value: v.worst_value,
            delta: None,
        }
    }
}

/// Parameters echoed into the report so a run can be replayed.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<(u64, u64)>,
    /// The largest passing δ for u-continuity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub delta_grid: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<(Vec<f64>, Vec<f64>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    /// Inputs or pairs that met the probe's precondition and were checked.
    pub checked: usize,
    /// Inputs that did not qualify.
    pub skipped: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub probe_name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_id: Option<String>,
    /// What was probed, e.g. a function or sequence name.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Status>,
    pub witnesses: Vec<Witness>,
    pub parameters: Parameters,
    pub counts: Counts,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ProbeReport {
    pub fn new(probe_name: impl Into<String>, parameters: Parameters) -> Self {
        Self {
            probe_name: probe_name.into(),
            case_id: None,
            subject: None,
            status: Status::Inconclusive,
            expected: None,
            witnesses: Vec::new(),
            parameters,
            counts: Counts::default(),
            notes: Vec::new(),
        }
    }

    /// The status matches the attached expectation; without one, anything
    /// but `fail` is acceptable.
    pub fn as_expected(&self) -> bool {
        self.expected.map_or(self.status != Status::Fail, |e| e == self.status)
    }

    pub(crate) fn push_witness(&mut self, w: Witness) {
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// fail if anything failed, else inconclusive if nothing was checked or
    /// something could not be evaluated, else pass.
    pub(crate) fn settle(&mut self, failed: bool) {
        self.status = if failed {
            Status::Fail
        } else if self.counts.checked == 0 || self.counts.inconclusive > 0 {
            Status::Inconclusive
        } else {
            Status::Pass
        };
    }
}

fn window_params(sched: &ToleranceSchedule, image_epsilon: f64) -> Parameters {
    Parameters {
        epsilon: Some(sched.epsilon()),
        image_epsilon: Some(image_epsilon),
        window: Some((sched.start(), sched.end())),
        ..Parameters::default()
    }
}

fn check_func(space: &TwoNormSpace, f: &FuncSpec) -> Result<()> {
    if f.dim_in() != space.dim() || f.dim_out() != space.dim() {
        return Err(Error::InvalidFunction(format!(
            "function maps R^{} to R^{}, space has dimension {}",
            f.dim_in(),
            f.dim_out(),
            space.dim()
        )));
    }
    Ok(())
}

/// Ward continuity: quasi-Cauchy inputs must have quasi-Cauchy images.
///
/// Inputs that are not ε-quasi-Cauchy on the window are skipped and noted.
/// Images are checked on the same window at `image_epsilon`.
pub fn probe_ward(
    space: &TwoNormSpace,
    f: &FuncSpec,
    seqs: &[SeqSpec],
    sched: &ToleranceSchedule,
    image_epsilon: f64,
) -> Result<ProbeReport> {
    check_func(space, f)?;
    let mut report = ProbeReport::new("ward", window_params(sched, image_epsilon));
    let mut qualifying = Vec::new();
    for seq in seqs {
        let input = classify_quasi_cauchy(space, seq, sched)?;
        if input.status == Status::Pass {
            qualifying.push(seq);
        } else {
            report.counts.skipped += 1;
            report.notes.push(format!("skipped {}: input is {:?} as quasi-Cauchy", seq.name(), input.status));
        }
    }
    let failed = ward_images(space, f, &qualifying, &sched.with_epsilon(image_epsilon)?, &mut report)?;
    report.settle(failed);
    Ok(report)
}

/// Checks that the images of already qualified inputs are quasi-Cauchy
/// under `image_sched`, recording into `report`. Returns whether any failed.
pub(crate) fn ward_images(
    space: &TwoNormSpace,
    f: &FuncSpec,
    seqs: &[&SeqSpec],
    image_sched: &ToleranceSchedule,
    report: &mut ProbeReport,
) -> Result<bool> {
    let mut failed = false;
    for seq in seqs {
        let image = classify_quasi_cauchy(space, &seq.image(f)?, image_sched)?;
        match image.status {
            Status::Pass => report.counts.checked += 1,
            Status::Fail => {
                report.counts.checked += 1;
                failed = true;
                report.push_witness(Witness::from_verdict(seq.name(), &image));
            }
            Status::Inconclusive => {
                report.counts.inconclusive += 1;
                report.notes.push(format!("image of {} is not finite at n = {}", seq.name(), image.witness_index));
            }
        }
    }
    Ok(failed)
}

/// Measures `||Δf(x_n), w||` over the window for each sequence; passes iff
/// every value is within `tolerance` of `target`. The witness is the
/// largest deviation.
pub fn probe_image_delta(
    space: &TwoNormSpace,
    f: &FuncSpec,
    seqs: &[SeqSpec],
    w: &Vector,
    sched: &ToleranceSchedule,
    target: f64,
    tolerance: f64,
) -> Result<ProbeReport> {
    check_func(space, f)?;
    let mut report = ProbeReport::new(
        "image-delta",
        Parameters { epsilon: Some(tolerance), window: Some((sched.start(), sched.end())), ..Parameters::default() },
    );
    let mut failed = false;
    for seq in seqs {
        let values = delta_values(space, &seq.image(f)?, w, sched)?;
        if values.iter().any(|(_, v)| !v.is_finite()) {
            report.counts.inconclusive += 1;
            continue;
        }
        report.counts.checked += values.len();
        let (index, value) = values
            .iter()
            .copied()
            .fold((sched.start(), target), |best, cur| if (cur.1 - target).abs() > (best.1 - target).abs() { cur } else { best });
        report.notes.push(format!("{}: max |value - {target}| = {:e} at n = {index}", seq.name(), (value - target).abs()));
        let witness = Witness {
            subject: seq.name().to_string(),
            index: Some(index),
            input: None,
            partner: None,
            direction: w.as_slice().to_vec(),
            value,
            delta: None,
        };
        if (value - target).abs() > tolerance {
            failed = true;
        }
        report.push_witness(witness);
    }
    report.settle(failed);
    Ok(report)
}

/// Sequential continuity: inputs converging to `limit` must have images
/// converging to `f(limit)`.
pub fn probe_sequential(
    space: &TwoNormSpace,
    f: &FuncSpec,
    seqs: &[(SeqSpec, Vector)],
    sched: &ToleranceSchedule,
    image_epsilon: f64,
) -> Result<ProbeReport> {
    check_func(space, f)?;
    let image_sched = sched.with_epsilon(image_epsilon)?;
    let mut report = ProbeReport::new("sequential", window_params(sched, image_epsilon));
    let mut failed = false;
    for (seq, limit) in seqs {
        let input = classify_convergent(space, seq, limit, sched)?;
        if input.status != Status::Pass {
            report.counts.skipped += 1;
            report.notes.push(format!("skipped {}: input is {:?} as convergent to {limit}", seq.name(), input.status));
            continue;
        }
        let image_limit = match Vector::new(f.apply(limit.as_slice())?) {
            Ok(v) => v,
            Err(_) => {
                report.counts.inconclusive += 1;
                report.notes.push(format!("f is not finite at the limit {limit}"));
                continue;
            }
        };
        let image = classify_convergent(space, &seq.image(f)?, &image_limit, &image_sched)?;
        match image.status {
            Status::Pass => report.counts.checked += 1,
            Status::Fail => {
                report.counts.checked += 1;
                failed = true;
                report.push_witness(Witness::from_verdict(seq.name(), &image));
            }
            Status::Inconclusive => {
                report.counts.inconclusive += 1;
                report.notes.push(format!("image of {} is not finite at n = {}", seq.name(), image.witness_index));
            }
        }
    }
    report.settle(failed);
    Ok(report)
}

/// An axis-aligned sampling box.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainBox {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl DomainBox {
    pub fn new(lo: Vector, hi: Vector) -> Result<Self> {
        if lo.dim() != hi.dim() {
            return Err(Error::Dimension { expected: lo.dim(), got: hi.dim() });
        }
        if lo.as_slice().iter().zip(hi.as_slice()).any(|(a, b)| !(a < b)) {
            return Err(Error::Probe(format!("empty domain box {lo} .. {hi}")));
        }
        Ok(Self { lo: lo.into_inner(), hi: hi.into_inner() })
    }

    /// `[-b, b]^dim`.
    pub fn symmetric(dim: usize, b: f64) -> Result<Self> {
        Self::new(Vector::new(vec![-b; dim])?, Vector::new(vec![b; dim])?)
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.iter().zip(&self.lo).zip(&self.hi).all(|((v, a), b)| a <= v && v <= b)
    }

    pub fn bounds(&self) -> (&[f64], &[f64]) {
        (&self.lo, &self.hi)
    }

    fn params(&self) -> (Vec<f64>, Vec<f64>) {
        (self.lo.clone(), self.hi.clone())
    }
}

fn diff(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(p, q)| p - q).collect()
}

/// Pairs `(x, y)` in the box with `y = x + t·u`, where `t` is drawn below
/// `reach(u)`. The caller still verifies its own constraints.
fn sample_pair(sampler: &mut Sampler, domain: &DomainBox, reach: impl Fn(&[f64]) -> Result<f64>) -> Result<Option<(Vec<f64>, Vec<f64>)>> {
    let x = sampler.in_box(&domain.lo, &domain.hi);
    let u = sampler.direction(domain.dim());
    let r = reach(&u)?;
    if !(r > 0.0) {
        return Ok(None);
    }
    let t = sampler.unit_interval() * r;
    let y: Vec<f64> = x.iter().zip(&u).map(|(a, b)| a + t * b).collect();
    Ok(domain.contains(&y).then_some((x, y)))
}

struct PairOutcome {
    qualifying: usize,
    worst: Option<Witness>,
}

/// u-continuity with a δ grid: for each δ, pairs with `||x - y, e_i|| < δ`
/// for every basis vector must satisfy `||f(x) - f(y), e_i|| < ε` for every
/// basis vector. Reports the largest δ that passed.
#[allow(clippy::too_many_arguments)]
pub fn probe_u_continuity(
    space: &TwoNormSpace,
    f: &FuncSpec,
    domain: &DomainBox,
    epsilon: f64,
    delta_grid: &[f64],
    pair_samples: usize,
    seed: u64,
) -> Result<ProbeReport> {
    check_func(space, f)?;
    if domain.dim() != space.dim() {
        return Err(Error::Dimension { expected: space.dim(), got: domain.dim() });
    }
    if !(epsilon > 0.0) {
        return Err(Error::InvalidTolerance(epsilon));
    }
    if pair_samples < 1 {
        return Err(Error::Probe("pair_samples must be at least 1".into()));
    }
    if delta_grid.is_empty() || delta_grid.iter().any(|d| !(*d > 0.0) || !d.is_finite()) {
        return Err(Error::Probe("δ grid must be non-empty and positive".into()));
    }
    if delta_grid.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Probe("δ grid must be strictly descending".into()));
    }
    let mut report = ProbeReport::new(
        "u-continuity",
        Parameters {
            epsilon: Some(epsilon),
            delta_grid: delta_grid.to_vec(),
            domain: Some(domain.params()),
            pair_samples: Some(pair_samples),
            seed: Some(seed),
            ..Parameters::default()
        },
    );
    let basis = space.basis();
    let mut failed_any = false;
    for (k, &delta) in delta_grid.iter().enumerate() {
        let mut sampler = Sampler::new(seed.wrapping_add(k as u64));
        let outcome = pair_sweep(space, f, domain, epsilon, pair_samples, &mut sampler, basis, |u| {
            let (m, _) = space.max_over_basis(u)?;
            Ok(delta / m)
        }, |d| {
            for e in basis {
                if space.norm_of(d, e.as_slice())? >= delta {
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        match (outcome.qualifying, outcome.worst) {
            (0, _) => {
                report.counts.inconclusive += 1;
                report.notes.push(format!("δ = {delta}: no sampled pair qualified"));
            }
            (n, None) => {
                report.counts.checked += n;
                if report.parameters.delta.is_none() {
                    report.parameters.delta = Some(delta);
                }
            }
            (n, Some(mut w)) => {
                report.counts.checked += n;
                failed_any = true;
                w.delta = Some(delta);
                report.push_witness(w);
            }
        }
    }
    report.status = if report.parameters.delta.is_some() {
        Status::Pass
    } else if failed_any {
        Status::Fail
    } else {
        Status::Inconclusive
    };
    Ok(report)
}

/// Runs the pair loop shared by the u- and uniform continuity probes. The
/// image is measured against every vector in `directions`.
#[allow(clippy::too_many_arguments)]
fn pair_sweep(
    space: &TwoNormSpace,
    f: &FuncSpec,
    domain: &DomainBox,
    epsilon: f64,
    pair_samples: usize,
    sampler: &mut Sampler,
    directions: &[Vector],
    reach: impl Fn(&[f64]) -> Result<f64>,
    qualifies: impl Fn(&[f64]) -> Result<bool>,
) -> Result<PairOutcome> {
    let mut out = PairOutcome { qualifying: 0, worst: None };
    for _ in 0..pair_samples {
        let Some((x, y)) = sample_pair(sampler, domain, &reach)? else {
            continue;
        };
        if !qualifies(&diff(&x, &y))? {
            continue;
        }
        let (fx, fy) = (f.apply(&x)?, f.apply(&y)?);
        let d = diff(&fx, &fy);
        if d.iter().any(|c| !c.is_finite()) {
            continue;
        }
        out.qualifying += 1;
        for w in directions {
            let value = space.norm_of(&d, w.as_slice())?;
            if value >= epsilon && out.worst.as_ref().is_none_or(|b| value > b.value) {
                out.worst = Some(Witness {
                    subject: "pair".into(),
                    index: None,
                    input: Some(x.clone()),
                    partner: Some(y.clone()),
                    direction: w.as_slice().to_vec(),
                    value,
                    delta: None,
                });
            }
        }
    }
    Ok(out)
}

/// Largest passing δ of [`probe_u_continuity`] on `[-b, b]^dim` for each
/// bound `b`. A shrinking sequence shows the probe's δ depends on the box.
#[allow(clippy::too_many_arguments)]
pub fn escalate_u_continuity(
    space: &TwoNormSpace,
    f: &FuncSpec,
    bounds: &[f64],
    epsilon: f64,
    delta_grid: &[f64],
    pair_samples: usize,
    seed: u64,
) -> Result<Vec<(f64, Option<f64>)>> {
    bounds
        .iter()
        .map(|&b| {
            let domain = DomainBox::symmetric(space.dim(), b)?;
            let r = probe_u_continuity(space, f, &domain, epsilon, delta_grid, pair_samples, seed)?;
            Ok((b, r.parameters.delta))
        })
        .collect()
}

/// Checks a uniform-continuity certificate: pairs in the box with
/// `||x - y, z_k|| < δ_k` for every `k` must satisfy `||f(x) - f(y), w|| < ε`.
#[allow(clippy::too_many_arguments)]
pub fn probe_uniform_continuity(
    space: &TwoNormSpace,
    f: &FuncSpec,
    domain: &DomainBox,
    epsilon: f64,
    w: &Vector,
    certificate: &[(Vector, f64)],
    pair_samples: usize,
    seed: u64,
) -> Result<ProbeReport> {
    check_func(space, f)?;
    if domain.dim() != space.dim() || w.dim() != space.dim() {
        return Err(Error::Dimension { expected: space.dim(), got: domain.dim().min(w.dim()) });
    }
    if certificate.is_empty() {
        return Err(Error::EmptyConstraints);
    }
    if let Some((_, d)) = certificate.iter().find(|(_, d)| !(*d > 0.0)) {
        return Err(Error::InvalidTolerance(*d));
    }
    if !(epsilon > 0.0) {
        return Err(Error::InvalidTolerance(epsilon));
    }
    let diameter = domain.lo.iter().zip(&domain.hi).map(|(a, b)| b - a).fold(0.0, f64::max);
    let mut report = ProbeReport::new(
        "uniform-continuity",
        Parameters {
            epsilon: Some(epsilon),
            domain: Some(domain.params()),
            pair_samples: Some(pair_samples),
            seed: Some(seed),
            ..Parameters::default()
        },
    );
    let mut sampler = Sampler::new(seed);
    let outcome = pair_sweep(
        space,
        f,
        domain,
        epsilon,
        pair_samples,
        &mut sampler,
        std::slice::from_ref(w),
        |u| {
            let mut reach = diameter;
            for (z, d) in certificate {
                let m = space.norm_of(u, z.as_slice())?;
                if m > 0.0 {
                    reach = reach.min(d / m);
                }
            }
            Ok(reach)
        },
        |d| {
            for (z, delta) in certificate {
                if space.norm_of(d, z.as_slice())? >= *delta {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    )?;
    report.counts.checked = outcome.qualifying;
    let failed = outcome.worst.is_some();
    if let Some(wit) = outcome.worst {
        report.push_witness(wit);
    }
    report.settle(failed);
    Ok(report)
}

/// Image of a ward compact set: every image sequence must admit an
/// ε-quasi-Cauchy subsequence inside the window.
pub fn probe_ward_compact_image(
    space: &TwoNormSpace,
    f: &FuncSpec,
    seqs: &[SeqSpec],
    sched: &ToleranceSchedule,
    bound: f64,
) -> Result<ProbeReport> {
    check_func(space, f)?;
    let mut params = window_params(sched, sched.epsilon());
    params.image_epsilon = None;
    params.bound = Some(bound);
    let mut report = ProbeReport::new("ward-compact-image", params);
    let mut failed = false;
    for seq in seqs {
        let image = seq.image(f)?;
        match extract_quasi_cauchy_subsequence(space, &image, sched, bound)? {
            Some(indices) => {
                report.counts.checked += 1;
                report.notes.push(format!("{}: kept {} of {} indices", image.name(), indices.len(), sched.end() - sched.start() + 1));
            }
            None => {
                report.counts.checked += 1;
                failed = true;
                let v = classify_quasi_cauchy(space, &image, sched)?;
                report.push_witness(Witness::from_verdict(image.name(), &v));
            }
        }
    }
    report.settle(failed);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::interleave;

    fn det2() -> TwoNormSpace {
        TwoNormSpace::det2()
    }

    fn square() -> FuncSpec {
        FuncSpec::parse("(x1^2, x2^2)", 2).unwrap()
    }

    fn seq(text: &str) -> SeqSpec {
        SeqSpec::parse(text).unwrap()
    }

    fn sched(n: u64, m: u64, eps: f64) -> ToleranceSchedule {
        ToleranceSchedule::new(n, m, eps).unwrap()
    }

    #[test]
    fn square_map_breaks_ward_continuity() {
        let s = sched(1000, 2000, 0.02);
        let r = probe_ward(&det2(), &square(), &[seq("(sqrt(n), sqrt(n))")], &s, 0.02).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses.len(), 1);
        assert!((r.witnesses[0].value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn golden_image_delta_is_one() {
        let r = probe_image_delta(
            &det2(),
            &square(),
            &[seq("(sqrt(n), sqrt(n))")],
            &Vector::from([1.0, 2.0]),
            &sched(1000, 2000, 0.02),
            1.0,
            1e-12,
        )
        .unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.counts.checked, 1000);
    }

    #[test]
    fn identity_preserves_quasi_cauchy() {
        let seqs = [seq("(sqrt(n), sqrt(n))"), seq("(1/n, 2)"), seq("(sin(sqrt(n)), cos(sqrt(n)))")];
        let r = probe_ward(&det2(), &FuncSpec::identity(2), &seqs, &sched(2501, 5000, 0.01), 0.01).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.counts.checked, 3);
    }

    #[test]
    fn affine_map_needs_a_scaled_image_tolerance() {
        let f = FuncSpec::parse("(2*x1 + 1, 2*x2 - 3)", 2).unwrap();
        let s = sched(2501, 5000, 0.01);
        let root = [seq("(sqrt(n), sqrt(n))")];
        assert_eq!(probe_ward(&det2(), &f, &root, &s, 0.021).unwrap().status, Status::Pass);
        // the oracle: image differences are exactly twice the input ones
        let worst = 2.0 * (2502f64.sqrt() - 2501f64.sqrt());
        assert!(worst > 0.01 && worst < 0.021);
        assert_eq!(probe_ward(&det2(), &f, &root, &s, 0.01).unwrap().status, Status::Fail);
    }

    #[test]
    fn non_qualifying_inputs_are_skipped() {
        let r = probe_ward(&det2(), &square(), &[seq("(n, n)")], &sched(1, 20, 0.1), 0.1).unwrap();
        assert_eq!(r.status, Status::Inconclusive);
        assert_eq!(r.counts.skipped, 1);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn sequential_probe_examples() {
        let s = sched(200, 400, 0.02);
        let one = Vector::from([1.0, 1.0]);
        let r = probe_sequential(&det2(), &square(), &[(seq("(1 + 1/n, 1 + 1/n)"), one.clone())], &s, 0.02).unwrap();
        assert_eq!(r.status, Status::Pass);
        let r = probe_sequential(&det2(), &FuncSpec::identity(2), &[(seq("(1/n, 0-1/n)"), Vector::zero(2))], &s, 0.02).unwrap();
        assert_eq!(r.status, Status::Pass);

        // jumps by 1 across the first coordinate's zero
        let step = FuncSpec::parse("(sign(x1), x2)", 2).unwrap();
        let r = probe_sequential(&det2(), &step, &[(seq("(1/n, 0)"), Vector::zero(2))], &s, 0.02).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = &r.witnesses[0];
        assert_eq!((w.index, w.value), (Some(200), 1.0));
    }

    #[test]
    fn interleaved_battery_supports_sequential_conclusion() {
        let s = sched(200, 400, 0.01);
        let h = seq("(1/n, 1/n)");
        let xi = interleave(&h, &Vector::zero(2)).unwrap();
        let f = FuncSpec::parse("(x1 + 1, 3*x2)", 2).unwrap();
        let ward = probe_ward(&det2(), &f, &[xi], &s.interleaved().with_epsilon(0.02).unwrap(), 0.06).unwrap();
        assert_eq!(ward.status, Status::Pass);
        let seqv = probe_sequential(&det2(), &f, &[(h, Vector::zero(2))], &s, 0.03).unwrap();
        assert_eq!(seqv.status, Status::Pass);
    }

    #[test]
    fn u_continuity_of_identity() {
        let domain = DomainBox::symmetric(2, 5.0).unwrap();
        let r = probe_u_continuity(&det2(), &FuncSpec::identity(2), &domain, 0.1, &[0.1], 500, 3).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.parameters.delta, Some(0.1));
    }

    #[test]
    fn u_continuity_of_square_map_on_a_box() {
        let domain = DomainBox::symmetric(2, 10.0).unwrap();
        let r = probe_u_continuity(&det2(), &square(), &domain, 0.1, &[0.1, 0.01, 0.001], 5000, 7).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.parameters.delta, Some(0.001));
        assert_eq!(r.witnesses.len(), 2);
        // oracle: |a² - b²| = |a - b||a + b|
        for w in &r.witnesses {
            let (x, y) = (w.input.as_ref().unwrap(), w.partner.as_ref().unwrap());
            let k = if w.direction == [1.0, 0.0] { 1 } else { 0 };
            let direct = ((x[k] - y[k]) * (x[k] + y[k])).abs();
            assert!((direct - w.value).abs() <= 1e-12 * direct.max(1.0));
        }
    }

    #[test]
    fn u_continuity_delta_shrinks_with_the_box() {
        let grid: Vec<f64> = (1..=7).map(|k| 10f64.powi(-k)).collect();
        let out = escalate_u_continuity(&det2(), &square(), &[10.0, 100.0, 1000.0], 0.1, &grid, 4000, 11).unwrap();
        let deltas: Vec<f64> = out.iter().map(|(_, d)| d.unwrap()).collect();
        assert!(deltas.windows(2).all(|w| w[1] < w[0]), "{deltas:?}");
        for (b, d) in &out {
            assert!(d.unwrap() * 2.0 * b < 0.1);
        }
    }

    #[test]
    fn u_continuity_validation() {
        let domain = DomainBox::symmetric(2, 1.0).unwrap();
        let id = FuncSpec::identity(2);
        assert!(probe_u_continuity(&det2(), &id, &domain, 0.1, &[0.01, 0.1], 10, 0).is_err());
        assert!(probe_u_continuity(&det2(), &id, &domain, 0.1, &[], 10, 0).is_err());
        assert!(probe_u_continuity(&det2(), &id, &domain, 0.1, &[0.1], 0, 0).is_err());
    }

    #[test]
    fn uniform_certificates() {
        let domain = DomainBox::symmetric(2, 10.0).unwrap();
        let (e1, e2) = (Vector::unit(2, 0), Vector::unit(2, 1));
        let eps = 0.1;
        let id = FuncSpec::identity(2);
        let cert = [(e1.clone(), eps), (e2.clone(), eps)];
        let r = probe_uniform_continuity(&det2(), &id, &domain, eps, &e1, &cert, 2000, 1).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.counts.checked > 1000);

        // A = [[3, 1], [0, -2]]; ||Ax, w|| with w = e1 is |(Ax)_2| = 2|x2|
        let affine = FuncSpec::parse("(3*x1 + x2 + 1, 0-2*x2)", 2).unwrap();
        let cert = [(e1.clone(), eps / 2.0)];
        let r = probe_uniform_continuity(&det2(), &affine, &domain, eps, &e1, &cert, 2000, 2).unwrap();
        assert_eq!(r.status, Status::Pass);
        let loose = [(e1.clone(), eps)];
        let r = probe_uniform_continuity(&det2(), &affine, &domain, eps, &e1, &loose, 2000, 2).unwrap();
        assert_eq!(r.status, Status::Fail);

        // |2(a1² - b1²) - (a2² - b2²)| <= 40|Δ1| + 20|Δ2| on [-10, 10]²
        let w = Vector::from([1.0, 2.0]);
        let cert = [(e1, eps / 60.0), (e2, eps / 60.0)];
        let r = probe_uniform_continuity(&det2(), &square(), &domain, eps, &w, &cert, 2000, 3).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn compact_image_probe() {
        let alternating = SeqSpec::from_terms(
            (0..40).map(|k| if k % 2 == 0 { Vector::zero(2) } else { Vector::from([1.0, -1.0]) }).collect(),
        )
        .unwrap();
        let s = sched(1, 40, 0.01);
        let r = probe_ward_compact_image(&det2(), &FuncSpec::identity(2), std::slice::from_ref(&alternating), &s, 2.0).unwrap();
        assert_eq!(r.status, Status::Pass);
        let r = probe_ward_compact_image(&det2(), &square(), &[alternating], &s, 2.0).unwrap();
        assert_eq!(r.status, Status::Pass);
        let r = probe_ward_compact_image(&det2(), &square(), &[seq("(cos(n), sin(n))")], &sched(1, 1000, 0.1), 2.0).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        let err = probe_ward_compact_image(&det2(), &square(), &[seq("(n, 1)")], &sched(1, 40, 0.1), 100.0).unwrap_err();
        assert!(matches!(err, Error::BoundViolation { index: 11, .. }));
    }

    #[test]
    fn probes_are_deterministic() {
        let domain = DomainBox::symmetric(2, 10.0).unwrap();
        let a = probe_u_continuity(&det2(), &square(), &domain, 0.1, &[0.1, 0.01], 300, 5).unwrap();
        let b = probe_u_continuity(&det2(), &square(), &domain, 0.1, &[0.1, 0.01], 300, 5).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
