//! Executes the checks described by a [`RunConfig`].

use serde::Serialize;

use crate::config::{FunctionEntry, ProbeKind, RunConfig, SeqCheck, SequenceEntry};
use crate::error::{Error, Result};
use crate::func::{FuncFamilySpec, FuncSpec};
use crate::norm::Vector;
use crate::probes::{
    escalate_u_continuity, probe_image_delta, probe_sequential, probe_u_continuity, probe_uniform_continuity,
    probe_ward, probe_ward_compact_image, Parameters, ProbeReport, Status, Witness,
};
use crate::sampling::Sampler;
use crate::seq::{classify_cauchy, classify_convergent, classify_quasi_cauchy, delta_values, SeqSpec};
use crate::theorems::{check_uniform_convergence, run_implication_matrix, Battery};

fn missing(field: &str, why: &str) -> Error {
    Error::Config { field: field.into(), message: why.into() }
}

/// One report per (sequence, check) pair.
pub fn classify(cfg: &RunConfig) -> Result<Vec<ProbeReport>> {
    let mut out = Vec::new();
    for entry in &cfg.sequences {
        let sched = entry.schedule.unwrap_or(cfg.schedule);
        for &check in &entry.checks {
            let v = match check {
                SeqCheck::QuasiCauchy => classify_quasi_cauchy(&cfg.space, &entry.spec, &sched)?,
                SeqCheck::Cauchy => classify_cauchy(&cfg.space, &entry.spec, &sched)?,
                SeqCheck::Convergent => {
                    let limit = entry.limit.as_ref().expect("validated: convergent checks carry a limit");
                    classify_convergent(&cfg.space, &entry.spec, limit, &sched)?
                }
            };
            let mut r = ProbeReport::new(
                check.name(),
                Parameters { epsilon: Some(v.epsilon), window: Some(v.window), ..Parameters::default() },
            );
            r.subject = Some(entry.name.clone());
            r.status = v.status;
            r.expected = entry.expect.get(&check).copied();
            r.counts.checked = 1;
            let mut w = Witness::from_verdict(&entry.name, &v);
            if let Some(p) = v.witness_partner {
                r.notes.push(format!("worst pair ({}, {p})", v.witness_index));
            }
            if v.status == Status::Inconclusive {
                r.counts = Default::default();
                r.counts.inconclusive = 1;
                r.notes.push(format!("term {} is not finite", v.witness_index));
                w.value = 0.0;
            } else {
                r.push_witness(w);
            }
            out.push(r);
        }
    }
    Ok(out)
}

fn specs(entries: &[&SequenceEntry]) -> Vec<SeqSpec> {
    entries.iter().map(|e| e.spec.clone()).collect()
}

fn convergent(entries: &[&SequenceEntry]) -> Vec<(SeqSpec, Vector)> {
    entries.iter().filter_map(|e| e.limit.clone().map(|l| (e.spec.clone(), l))).collect()
}

fn family<'a>(cfg: &'a RunConfig, name: &str) -> Result<(&'a FuncFamilySpec, &'a FuncSpec, &'a str)> {
    match cfg.functions.get(name) {
        Some(FunctionEntry::Family { family, limit }) => Ok((family, cfg.map(limit)?, limit.as_str())),
        _ => Err(missing("probes.family", "names no family")),
    }
}

/// Box samples for uniform-convergence checks.
pub(crate) fn box_samples(cfg: &RunConfig, seed: u64) -> Result<Vec<Vector>> {
    let domain = cfg.probes.domain.as_ref().ok_or_else(|| missing("probes.domain", "required by this probe"))?;
    let (lo, hi) = domain.bounds();
    let mut sampler = Sampler::new(seed);
    (0..cfg.probes.domain_samples).map(|_| Vector::new(sampler.in_box(lo, hi))).collect()
}

/// One report per entry of `probes.run`.
pub fn probe(cfg: &RunConfig) -> Result<Vec<ProbeReport>> {
    let p = &cfg.probes;
    let space = &cfg.space;
    let sched = &cfg.schedule;
    let mut out = Vec::new();
    for &kind in &p.run {
        let seqs = cfg.sequences_for(kind);
        let mut report = if kind == ProbeKind::UniformConvergence {
            let name = p.family.as_deref().ok_or_else(|| missing("probes.family", "required by uniform-convergence"))?;
            let (fam, limit, limit_name) = family(cfg, name)?;
            let mut r = check_uniform_convergence(space, fam, limit, &box_samples(cfg, cfg.seed)?, sched)?;
            r.subject = Some(format!("{name} -> {limit_name}"));
            r
        } else {
            let (fname, f) = cfg.probe_function()?;
            let mut r = match kind {
                ProbeKind::Ward => probe_ward(space, f, &specs(&seqs), sched, cfg.image_epsilon)?,
                ProbeKind::Sequential => probe_sequential(space, f, &convergent(&seqs), sched, cfg.image_epsilon)?,
                ProbeKind::UContinuity => {
                    let domain = p.domain.as_ref().ok_or_else(|| missing("probes.domain", "required by u-continuity"))?;
                    let mut r = probe_u_continuity(space, f, domain, cfg.image_epsilon, &p.delta_grid, p.pair_samples, cfg.seed)?;
                    if !p.escalate.is_empty() {
                        for (b, d) in escalate_u_continuity(space, f, &p.escalate, cfg.image_epsilon, &p.delta_grid, p.pair_samples, cfg.seed)? {
                            r.notes.push(match d {
                                Some(d) => format!("box [-{b}, {b}]: largest passing δ = {d}"),
                                None => format!("box [-{b}, {b}]: no δ in the grid passes"),
                            });
                        }
                    }
                    r
                }
                ProbeKind::UniformContinuity => {
                    let domain = p.domain.as_ref().ok_or_else(|| missing("probes.domain", "required by uniform-continuity"))?;
                    let w = p.w.as_ref().ok_or_else(|| missing("probes.w", "required by uniform-continuity"))?;
                    if p.certificate.is_empty() {
                        return Err(missing("probes.certificate", "required by uniform-continuity"));
                    }
                    probe_uniform_continuity(space, f, domain, cfg.image_epsilon, w, &p.certificate, p.pair_samples, cfg.seed)?
                }
                ProbeKind::WardCompactImage => {
                    let bound = p.bound.ok_or_else(|| missing("probes.bound", "required by ward-compact-image"))?;
                    probe_ward_compact_image(space, f, &specs(&seqs), sched, bound)?
                }
                ProbeKind::ImageDelta => {
                    let w = p.w.as_ref().ok_or_else(|| missing("probes.w", "required by image-delta"))?;
                    let target = p.target.ok_or_else(|| missing("probes.target", "required by image-delta"))?;
                    probe_image_delta(space, f, &specs(&seqs), w, sched, target, p.target_tolerance)?
                }
                ProbeKind::ImplicationMatrix => {
                    let battery = Battery { quasi_cauchy: specs(&seqs), convergent: convergent(&seqs) };
                    matrix_report(&run_implication_matrix(space, f, &battery, sched, cfg.image_epsilon)?, sched, cfg.image_epsilon)
                }
                ProbeKind::UniformConvergence => unreachable!(),
            };
            r.subject = Some(fname.to_string());
            r
        };
        report.expected = p.expect.get(&kind).copied();
        out.push(report);
    }
    Ok(out)
}

pub(crate) fn matrix_report(
    m: &crate::theorems::ImplicationMatrix,
    sched: &crate::seq::ToleranceSchedule,
    image_epsilon: f64,
) -> ProbeReport {
    let mut r = ProbeReport::new(
        "implication-matrix",
        Parameters {
            epsilon: Some(sched.epsilon()),
            image_epsilon: Some(image_epsilon),
            window: Some((sched.start(), sched.end())),
            ..Parameters::default()
        },
    );
    let names = ["qc -> qc", "qc -> convergent", "convergent -> convergent", "convergent -> qc"];
    for (i, (name, v)) in names.iter().zip(m.verdicts).enumerate() {
        r.notes.push(format!("({}) {name}: {v:?}", i + 1));
    }
    r.counts.checked = 4;
    r.status = if m.consistent { Status::Pass } else { Status::Fail };
    for &(a, b) in &m.violations {
        r.notes.push(format!("({a}) passed but ({b}) failed"));
        if let Some(w) = &m.failures[b - 1] {
            r.push_witness(w.clone());
        }
    }
    r
}

/// A row of the `--trace` CSV.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceRow {
    pub sequence: String,
    pub n: u64,
    pub direction: String,
    pub value: f64,
}

/// `||Δx_n, e_i||` for every sequence and basis vector over its window, and
/// the same for the image under the probe function when one is set.
pub fn trace(cfg: &RunConfig) -> Result<Vec<TraceRow>> {
    let image = cfg.probe_function().ok();
    let mut rows = Vec::new();
    for entry in &cfg.sequences {
        let sched = entry.schedule.unwrap_or(cfg.schedule);
        let mut subjects = vec![(entry.name.clone(), entry.spec.clone())];
        if let Some((fname, f)) = image {
            subjects.push((format!("{fname}({})", entry.name), entry.spec.image(f)?));
        }
        for (name, spec) in subjects {
            for (i, e) in cfg.space.basis().iter().enumerate() {
                for (n, value) in delta_values(&cfg.space, &spec, e, &sched)? {
                    rows.push(TraceRow { sequence: name.clone(), n, direction: format!("e{}", i + 1), value });
                }
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Overrides;

    fn cfg(text: &str) -> RunConfig {
        RunConfig::from_toml(text, &Overrides::default()).unwrap()
    }

    #[test]
    fn classify_reports_follow_expectations() {
        let c = cfg(r#"
            [schedule]
            window = [2501, 5000]
            epsilon = 0.01
            [sequence.root]
            expr = "(sqrt(n), sqrt(n))"
            expect = { quasi-cauchy = "pass" }
            [sequence.squares]
            expr = "(sqrt(n), sqrt(n))"
            index_map = "n^2"
            epsilon = 0.5
            window = [1, 100]
            expect = { quasi-cauchy = "fail" }
        "#);
        let r = classify(&c).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(ProbeReport::as_expected));
        assert_eq!(r[1].witnesses[0].value, 1.0);
        assert_eq!(r[1].parameters.window, Some((1, 100)));
    }

    #[test]
    fn probe_reports_and_trace() {
        let c = cfg(r#"
            [schedule]
            window = [1000, 2000]
            epsilon = 0.02
            [sequence.root]
            expr = "(sqrt(n), sqrt(n))"
            [sequence.near-one]
            expr = "(1 + 1/n, 1 + 1/n)"
            limit = [1, 1]
            [function.square]
            expr = "(x1^2, x2^2)"
            [probes]
            run = ["ward", "sequential", "image-delta"]
            select = { image-delta = ["root"] }
            w = [1, 2]
            target = 1.0
            expect = { ward = "fail", sequential = "pass", image-delta = "pass" }
        "#);
        let r = probe(&c).unwrap();
        assert_eq!(r.iter().map(|r| r.status).collect::<Vec<_>>(), vec![Status::Fail, Status::Pass, Status::Pass]);
        assert!(r.iter().all(ProbeReport::as_expected));
        let rows = trace(&c).unwrap();
        assert_eq!(rows.len(), 2 * 2 * 2 * 1000);
        assert!(rows.iter().filter(|t| t.sequence == "square(root)").all(|t| (t.value - 1.0).abs() < 1e-12));
    }

    #[test]
    fn probe_needs_its_inputs() {
        let c = cfg("[function.f]\nexpr = \"(x1, x2)\"\n[probes]\nrun = [\"u-continuity\"]\n");
        assert!(matches!(probe(&c), Err(Error::Config { field, .. }) if field == "probes.domain"));
        let c = cfg("[probes]\nrun = [\"ward\"]\n");
        assert!(matches!(probe(&c), Err(Error::Config { field, .. }) if field == "probes.function"));
    }
}
