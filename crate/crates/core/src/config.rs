//! Run configuration in TOML.
//!
//! ```toml
//! seed = 42
//!
//! [space]
//! kind = "det2"            # or "gram" with dim, or "dsl" with dim and norm
//!
//! [schedule]
//! window = [1000, 2000]
//! epsilon = 0.02
//!
//! [sequence.root]
//! expr = "(sqrt(n), sqrt(n))"
//!
//! [function.square]
//! expr = "(x1^2, x2^2)"
//!
//! [probes]
//! function = "square"
//! run = ["ward"]
//! expect = { ward = "fail" }
//! ```
//!
//! Validation happens before anything runs; every error names the field.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::func::{FuncFamilySpec, FuncSpec};
use crate::norm::{TwoNormSpace, Vector};
use crate::probes::DomainBox;
use crate::seq::{interleave, SeqSpec, Status, ToleranceSchedule};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    seed: Option<u64>,
    out: Option<PathBuf>,
    case: Option<RawCase>,
    space: Option<RawSpace>,
    schedule: Option<RawSchedule>,
    #[serde(default)]
    sequence: BTreeMap<String, RawSeq>,
    #[serde(default)]
    function: BTreeMap<String, RawFunc>,
    probes: Option<RawProbes>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    id: String,
    origin: String,
    summary: String,
    #[serde(default)]
    functions: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    kind: String,
    dim: Option<usize>,
    norm: Option<String>,
    basis: Option<Vec<Vec<f64>>>,
    samples: Option<usize>,
    tolerance: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSchedule {
    window: Option<(u64, u64)>,
    epsilon: Option<f64>,
    image_epsilon: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeq {
    expr: Option<String>,
    terms: Option<Vec<Vec<f64>>>,
    index_map: Option<String>,
    interleave: Option<Vec<f64>>,
    limit: Option<Vec<f64>>,
    window: Option<(u64, u64)>,
    epsilon: Option<f64>,
    checks: Option<Vec<SeqCheck>>,
    #[serde(default)]
    expect: BTreeMap<SeqCheck, Status>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFunc {
    expr: Option<String>,
    family: Option<String>,
    limit: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBox {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCert {
    z: Vec<f64>,
    delta: f64,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProbes {
    function: Option<String>,
    family: Option<String>,
    run: Option<Vec<ProbeKind>>,
    sequences: Option<Vec<String>>,
    #[serde(default)]
    select: BTreeMap<ProbeKind, Vec<String>>,
    domain: Option<RawBox>,
    delta_grid: Option<Vec<f64>>,
    pair_samples: Option<usize>,
    domain_samples: Option<usize>,
    w: Option<Vec<f64>>,
    target: Option<f64>,
    target_tolerance: Option<f64>,
    #[serde(default)]
    certificate: Vec<RawCert>,
    bound: Option<f64>,
    #[serde(default)]
    escalate: Vec<f64>,
    #[serde(default)]
    expect: BTreeMap<ProbeKind, Status>,
}

/// Window checks available to `classify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeqCheck {
    QuasiCauchy,
    Cauchy,
    Convergent,
}

impl SeqCheck {
    pub fn name(self) -> &'static str {
        match self {
            SeqCheck::QuasiCauchy => "quasi-cauchy",
            SeqCheck::Cauchy => "cauchy",
            SeqCheck::Convergent => "convergent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeKind {
    Ward,
    Sequential,
    UContinuity,
    UniformContinuity,
    WardCompactImage,
    UniformConvergence,
    ImplicationMatrix,
    ImageDelta,
}

impl ProbeKind {
    pub fn name(self) -> &'static str {
        match self {
            ProbeKind::Ward => "ward",
            ProbeKind::Sequential => "sequential",
            ProbeKind::UContinuity => "u-continuity",
            ProbeKind::UniformContinuity => "uniform-continuity",
            ProbeKind::WardCompactImage => "ward-compact-image",
            ProbeKind::UniformConvergence => "uniform-convergence",
            ProbeKind::ImplicationMatrix => "implication-matrix",
            ProbeKind::ImageDelta => "image-delta",
        }
    }
}

/// Metadata of a theorem fixture.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseMeta {
    pub id: String,
    /// Where the fixture values come from, e.g. `published-example`.
    pub origin: String,
    pub summary: String,
    pub functions: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SequenceEntry {
    pub name: String,
    pub spec: SeqSpec,
    pub limit: Option<Vector>,
    /// Replaces the global schedule for this sequence's checks.
    pub schedule: Option<ToleranceSchedule>,
    pub checks: Vec<SeqCheck>,
    pub expect: BTreeMap<SeqCheck, Status>,
}

#[derive(Debug, Clone)]
pub enum FunctionEntry {
    Map(FuncSpec),
    Family { family: FuncFamilySpec, limit: String },
}

#[derive(Debug, Clone)]
pub struct ProbeSettings {
    pub function: Option<String>,
    pub family: Option<String>,
    pub run: Vec<ProbeKind>,
    pub sequences: Option<Vec<String>>,
    pub select: BTreeMap<ProbeKind, Vec<String>>,
    pub domain: Option<DomainBox>,
    pub delta_grid: Vec<f64>,
    pub pair_samples: usize,
    pub domain_samples: usize,
    pub w: Option<Vector>,
    pub target: Option<f64>,
    pub target_tolerance: f64,
    pub certificate: Vec<(Vector, f64)>,
    pub bound: Option<f64>,
    pub escalate: Vec<f64>,
    pub expect: BTreeMap<ProbeKind, Status>,
}

/// Command-line values that replace config values.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub epsilon: Option<f64>,
    pub window: Option<(u64, u64)>,
}

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_AXIOM_SAMPLES: usize = 10_000;
pub const DEFAULT_AXIOM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub case: Option<CaseMeta>,
    pub space: TwoNormSpace,
    pub axiom_samples: usize,
    pub axiom_tolerance: f64,
    pub schedule: ToleranceSchedule,
    pub image_epsilon: f64,
    pub sequences: Vec<SequenceEntry>,
    pub functions: BTreeMap<String, FunctionEntry>,
    pub probes: ProbeSettings,
}

fn field_err(field: impl Into<String>, e: impl std::fmt::Display) -> Error {
    Error::Config { field: field.into(), message: e.to_string() }
}

fn vector(field: &str, v: Vec<f64>, dim: usize) -> Result<Vector> {
    let v = Vector::new(v).map_err(|e| field_err(field, e))?;
    if v.dim() != dim {
        return Err(field_err(field, format!("expected {dim} components, got {}", v.dim())));
    }
    Ok(v)
}

impl RunConfig {
    pub fn from_toml(text: &str, overrides: &Overrides) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| field_err(e.span().map_or("<document>".to_string(), |s| format!("bytes {}..{}", s.start, s.end)), e.message()))?;
        Self::validate(raw, overrides)
    }

    fn validate(raw: RawConfig, ov: &Overrides) -> Result<Self> {
        let (space, axiom_samples, axiom_tolerance) = match raw.space {
            None => (TwoNormSpace::det2(), DEFAULT_AXIOM_SAMPLES, DEFAULT_AXIOM_TOLERANCE),
            Some(s) => {
                let space = match (s.kind.as_str(), s.dim, &s.norm) {
                    ("det2", None | Some(2), None) => TwoNormSpace::det2(),
                    ("det2", Some(d), _) => return Err(field_err("space.dim", format!("det2 is only defined for dim 2, got {d}"))),
                    ("gram", Some(d), None) => TwoNormSpace::gram(d).map_err(|e| field_err("space.dim", e))?,
                    ("gram", None, _) => return Err(field_err("space.dim", "gram needs a dimension")),
                    ("dsl", Some(d), Some(norm)) => TwoNormSpace::dsl(d, norm).map_err(|e| field_err("space.norm", e))?,
                    ("dsl", _, None) => return Err(field_err("space.norm", "dsl space needs a norm expression")),
                    ("dsl", None, _) => return Err(field_err("space.dim", "dsl space needs a dimension")),
                    (_, _, Some(_)) if s.kind != "dsl" => return Err(field_err("space.norm", "only dsl spaces take a norm expression")),
                    (k, _, _) => return Err(field_err("space.kind", format!("unknown kind `{k}` (expected det2, gram or dsl)"))),
                };
                let space = match s.basis {
                    None => space,
                    Some(b) => {
                        let dim = space.dim();
                        let basis = b
                            .into_iter()
                            .enumerate()
                            .map(|(i, v)| vector(&format!("space.basis[{i}]"), v, dim))
                            .collect::<Result<Vec<_>>>()?;
                        space.with_basis(basis).map_err(|e| field_err("space.basis", e))?
                    }
                };
                let samples = s.samples.unwrap_or(DEFAULT_AXIOM_SAMPLES);
                if samples == 0 {
                    return Err(field_err("space.samples", "must be at least 1"));
                }
                let tol = s.tolerance.unwrap_or(DEFAULT_AXIOM_TOLERANCE);
                if !(tol > 0.0) {
                    return Err(field_err("space.tolerance", "must be positive"));
                }
                (space, samples, tol)
            }
        };
        let dim = space.dim();

        let sched_raw = raw.schedule.unwrap_or_default();
        let defaults = ToleranceSchedule::default();
        let (start, end) = ov.window.or(sched_raw.window).unwrap_or((defaults.start(), defaults.end()));
        let epsilon = ov.epsilon.or(sched_raw.epsilon).unwrap_or(defaults.epsilon());
        let schedule = ToleranceSchedule::new(start, end, epsilon).map_err(|e| field_err("schedule", e))?;
        let image_epsilon = match (ov.epsilon, sched_raw.image_epsilon) {
            (None, Some(ie)) => ie,
            _ => epsilon,
        };
        if !(image_epsilon > 0.0) || !image_epsilon.is_finite() {
            return Err(field_err("schedule.image_epsilon", "must be positive"));
        }

        let mut sequences = Vec::new();
        for (name, s) in raw.sequence {
            let field = format!("sequence.{name}");
            let spec = match (s.expr, s.terms) {
                (Some(e), None) => SeqSpec::parse(&e).map_err(|e| field_err(format!("{field}.expr"), e))?,
                (None, Some(t)) => {
                    let terms = t
                        .into_iter()
                        .enumerate()
                        .map(|(i, v)| vector(&format!("{field}.terms[{i}]"), v, dim))
                        .collect::<Result<Vec<_>>>()?;
                    SeqSpec::from_terms(terms).map_err(|e| field_err(format!("{field}.terms"), e))?
                }
                _ => return Err(field_err(&field, "exactly one of `expr` and `terms` is required")),
            };
            if spec.dim() != dim {
                return Err(field_err(&field, format!("sequence has {} components, space has dimension {dim}", spec.dim())));
            }
            let spec = match s.index_map {
                Some(m) => spec.with_index_map(&m).map_err(|e| field_err(format!("{field}.index_map"), e))?,
                None => spec,
            };
            let spec = match s.interleave {
                Some(x0) => interleave(&spec, &vector(&format!("{field}.interleave"), x0, dim)?)?,
                None => spec,
            };
            let spec = spec.named(name.clone());
            let limit = s.limit.map(|l| vector(&format!("{field}.limit"), l, dim)).transpose()?;
            let seq_schedule = match (s.window, s.epsilon) {
                (None, None) => None,
                (w, e) => {
                    let (a, b) = w.unwrap_or((schedule.start(), schedule.end()));
                    Some(ToleranceSchedule::new(a, b, e.unwrap_or(schedule.epsilon())).map_err(|e| field_err(&field, e))?)
                }
            };
            let checks = s.checks.unwrap_or_else(|| {
                let mut c = vec![SeqCheck::QuasiCauchy];
                if limit.is_some() {
                    c.push(SeqCheck::Convergent);
                }
                c
            });
            if checks.contains(&SeqCheck::Convergent) && limit.is_none() {
                return Err(field_err(format!("{field}.limit"), "the convergent check needs a limit"));
            }
            if let Some(k) = s.expect.keys().find(|k| !checks.contains(k)) {
                return Err(field_err(format!("{field}.expect"), format!("`{}` is not among the checks", k.name())));
            }
            sequences.push(SequenceEntry { name, spec, limit, schedule: seq_schedule, checks, expect: s.expect });
        }

        let mut functions = BTreeMap::new();
        for (name, f) in &raw.function {
            let field = format!("function.{name}");
            let entry = match (&f.expr, &f.family, &f.limit) {
                (Some(e), None, None) => {
                    let spec = FuncSpec::parse(e, dim).map_err(|e| field_err(format!("{field}.expr"), e))?;
                    if spec.dim_out() != dim {
                        return Err(field_err(format!("{field}.expr"), format!("has {} components, space has dimension {dim}", spec.dim_out())));
                    }
                    FunctionEntry::Map(spec)
                }
                (None, Some(e), Some(limit)) => {
                    let family = FuncFamilySpec::parse(e, dim).map_err(|e| field_err(format!("{field}.family"), e))?;
                    if family.dim_out() != dim {
                        return Err(field_err(format!("{field}.family"), format!("has {} components, space has dimension {dim}", family.dim_out())));
                    }
                    match raw.function.get(limit) {
                        Some(RawFunc { expr: Some(_), family: None, .. }) => {}
                        _ => return Err(field_err(format!("{field}.limit"), format!("`{limit}` is not a plain function entry"))),
                    }
                    FunctionEntry::Family { family, limit: limit.clone() }
                }
                (None, Some(_), None) => return Err(field_err(format!("{field}.limit"), "a family needs the name of its limit function")),
                _ => return Err(field_err(&field, "give either `expr`, or `family` with `limit`")),
            };
            functions.insert(name.clone(), entry);
        }

        let p = raw.probes.unwrap_or_default();
        if let Some(f) = &p.function {
            if !functions.contains_key(f) {
                return Err(field_err("probes.function", format!("no function named `{f}`")));
            }
        }
        if let Some(f) = &p.family {
            if !matches!(functions.get(f), Some(FunctionEntry::Family { .. })) {
                return Err(field_err("probes.family", format!("no family named `{f}`")));
            }
        }
        let selections = p.sequences.iter().map(|n| ("probes.sequences".to_string(), n)).chain(p.select.iter().map(|(k, n)| (format!("probes.select.{}", k.name()), n)));
        for (field, names) in selections {
            for n in names {
                if !sequences.iter().any(|s| &s.name == n) {
                    return Err(field_err(field, format!("no sequence named `{n}`")));
                }
            }
        }
        let domain = p
            .domain
            .map(|b| DomainBox::new(vector("probes.domain.lo", b.lo, dim)?, vector("probes.domain.hi", b.hi, dim)?).map_err(|e| field_err("probes.domain", e)))
            .transpose()?;
        let delta_grid = p.delta_grid.unwrap_or_else(|| vec![0.1, 0.01, 0.001]);
        if delta_grid.is_empty() || delta_grid.iter().any(|d| !(*d > 0.0)) || delta_grid.windows(2).any(|w| w[1] >= w[0]) {
            return Err(field_err("probes.delta_grid", "must be non-empty, positive and strictly descending"));
        }
        let pair_samples = p.pair_samples.unwrap_or(2000);
        if pair_samples == 0 {
            return Err(field_err("probes.pair_samples", "must be at least 1"));
        }
        let domain_samples = p.domain_samples.unwrap_or(200);
        let w = p.w.map(|w| vector("probes.w", w, dim)).transpose()?;
        let target_tolerance = p.target_tolerance.unwrap_or(1e-12);
        if !(target_tolerance >= 0.0) {
            return Err(field_err("probes.target_tolerance", "must be non-negative"));
        }
        let certificate = p
            .certificate
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                if !(c.delta > 0.0) {
                    return Err(field_err(format!("probes.certificate[{i}].delta"), "must be positive"));
                }
                Ok((vector(&format!("probes.certificate[{i}].z"), c.z, dim)?, c.delta))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(b) = p.bound {
            if !(b > 0.0) {
                return Err(field_err("probes.bound", "must be positive"));
            }
        }
        if p.escalate.iter().any(|b| !(*b > 0.0)) {
            return Err(field_err("probes.escalate", "bounds must be positive"));
        }
        let run = p.run.unwrap_or_else(|| vec![ProbeKind::Ward, ProbeKind::Sequential]);
        if let Some(k) = p.expect.keys().find(|k| !run.contains(k)) {
            return Err(field_err("probes.expect", format!("`{}` is not in probes.run", k.name())));
        }

        let case = raw.case.map(|c| CaseMeta { id: c.id, origin: c.origin, summary: c.summary, functions: c.functions });
        if let Some(c) = &case {
            for f in &c.functions {
                if !functions.contains_key(f) {
                    return Err(field_err("case.functions", format!("no function named `{f}`")));
                }
            }
        }

        Ok(Self {
            seed: ov.seed.or(raw.seed).unwrap_or(DEFAULT_SEED),
            out: raw.out,
            case,
            space,
            axiom_samples,
            axiom_tolerance,
            schedule,
            image_epsilon,
            sequences,
            functions,
            probes: ProbeSettings {
                function: p.function,
                family: p.family,
                run,
                sequences: p.sequences,
                select: p.select,
                domain,
                delta_grid,
                pair_samples,
                domain_samples,
                w,
                target: p.target,
                target_tolerance,
                certificate,
                bound: p.bound,
                escalate: p.escalate,
                expect: p.expect,
            },
        })
    }

    /// A plain function entry by name.
    pub fn map(&self, name: &str) -> Result<&FuncSpec> {
        match self.functions.get(name) {
            Some(FunctionEntry::Map(f)) => Ok(f),
            Some(FunctionEntry::Family { .. }) => Err(field_err(format!("function.{name}"), "is a family, not a function")),
            None => Err(field_err("function", format!("no function named `{name}`"))),
        }
    }

    /// The function the probes run on: `probes.function`, or the only entry.
    pub fn probe_function(&self) -> Result<(&str, &FuncSpec)> {
        let name = match &self.probes.function {
            Some(n) => n.as_str(),
            None => {
                let mut maps = self.functions.iter().filter(|(_, f)| matches!(f, FunctionEntry::Map(_)));
                match (maps.next(), maps.next()) {
                    (Some((n, _)), None) => n.as_str(),
                    (None, _) => return Err(field_err("probes.function", "no function defined")),
                    _ => return Err(field_err("probes.function", "several functions defined; name one")),
                }
            }
        };
        Ok((name, self.map(name)?))
    }

    /// Sequences for one probe: `probes.select.<kind>`, else
    /// `probes.sequences`, else all.
    pub fn sequences_for(&self, kind: ProbeKind) -> Vec<&SequenceEntry> {
        match self.probes.select.get(&kind).or(self.probes.sequences.as_ref()) {
            Some(names) => names.iter().filter_map(|n| self.sequences.iter().find(|s| &s.name == n)).collect(),
            None => self.sequences.iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<RunConfig> {
        RunConfig::from_toml(text, &Overrides::default())
    }

    fn field_of(r: Result<RunConfig>) -> String {
        match r {
            Err(Error::Config { field, .. }) => field,
            other => panic!("expected a config error, got {other:?}"),
        }
    }

    #[test]
    fn minimal_config_uses_defaults() {
        let c = parse("").unwrap();
        assert_eq!(c.space.dim(), 2);
        assert_eq!(c.schedule, ToleranceSchedule::default());
        assert_eq!(c.seed, DEFAULT_SEED);
        assert_eq!(c.probes.run, vec![ProbeKind::Ward, ProbeKind::Sequential]);
    }

    #[test]
    fn full_config() {
        let c = parse(
            r#"
            seed = 7
            [space]
            kind = "gram"
            dim = 3
            [schedule]
            window = [10, 40]
            epsilon = 0.5
            image_epsilon = 1.5
            [sequence.h]
            expr = "(1/n, 0, 1)"
            limit = [0, 0, 1]
            expect = { convergent = "pass" }
            [function.f]
            expr = "(x1, x2, x3^2)"
            [function.g]
            family = "(x1 + 1/n, x2, x3^2)"
            limit = "f"
            [probes]
            function = "f"
            run = ["ward", "u-continuity"]
            domain = { lo = [-1, -1, -1], hi = [1, 1, 1] }
            certificate = [{ z = [1, 0, 0], delta = 0.1 }]
            expect = { ward = "pass" }
            "#,
        )
        .unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!((c.schedule.start(), c.schedule.end(), c.image_epsilon), (10, 40, 1.5));
        assert_eq!(c.sequences[0].checks, vec![SeqCheck::QuasiCauchy, SeqCheck::Convergent]);
        assert!(matches!(c.functions["g"], FunctionEntry::Family { .. }));
        assert_eq!(c.probe_function().unwrap().0, "f");
    }

    #[test]
    fn overrides_win() {
        let ov = Overrides { seed: Some(1), epsilon: Some(0.3), window: Some((5, 50)) };
        let c = RunConfig::from_toml("seed = 9\n[schedule]\nwindow = [1, 20]\nepsilon = 0.1\nimage_epsilon = 0.2\n", &ov).unwrap();
        assert_eq!(c.seed, 1);
        assert_eq!((c.schedule.start(), c.schedule.end(), c.schedule.epsilon()), (5, 50, 0.3));
        assert_eq!(c.image_epsilon, 0.3);
    }

    #[test]
    fn errors_name_the_field() {
        assert_eq!(field_of(parse("[space]\nkind = \"det2\"\ndim = 3\n")), "space.dim");
        assert_eq!(field_of(parse("[space]\nkind = \"hilbert\"\n")), "space.kind");
        assert_eq!(field_of(parse("[schedule]\nwindow = [5, 5]\n")), "schedule");
        assert_eq!(field_of(parse("[sequence.a]\nexpr = \"(n, \"\n")), "sequence.a.expr");
        assert_eq!(field_of(parse("[sequence.a]\nexpr = \"(n, n, n)\"\n")), "sequence.a");
        assert_eq!(field_of(parse("[sequence.a]\nterms = [[1, 2], [3]]\n")), "sequence.a.terms[1]");
        assert_eq!(field_of(parse("[sequence.a]\nexpr = \"(n, n)\"\nexpect = { cauchy = \"pass\" }\n")), "sequence.a.expect");
        assert_eq!(field_of(parse("[function.f]\nexpr = \"(x3, x1)\"\n")), "function.f.expr");
        assert_eq!(field_of(parse("[function.f]\nfamily = \"(x1 + 1/n, x2)\"\nlimit = \"nope\"\n")), "function.f.limit");
        assert_eq!(field_of(parse("[probes]\nfunction = \"missing\"\n")), "probes.function");
        assert_eq!(field_of(parse("[probes]\ndelta_grid = [0.01, 0.1]\n")), "probes.delta_grid");
        assert_eq!(field_of(parse("[probes]\nrun = [\"ward\"]\nexpect = { sequential = \"pass\" }\n")), "probes.expect");
        assert_eq!(field_of(parse("[probes]\nselect = { ward = [\"x\"] }\n")), "probes.select.ward");
        assert_eq!(field_of(parse("[sequence.a]\nexpr = \"(n, n)\"\nwindow = [3, 4]\n")), "sequence.a");
    }

    #[test]
    fn toml_errors_carry_a_location() {
        let err = parse("[space]\nkind = \"det2\"\ncolour = 1\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bytes") && msg.contains("colour"), "{msg}");
        assert!(parse("[probes]\nrun = [\"teleport\"]\n").is_err());
    }

    #[test]
    fn probe_function_needs_a_choice() {
        assert_eq!(field_of(parse("").and_then(|c| c.probe_function().map(|_| c.clone()))), "probes.function");
        let two = parse("[function.a]\nexpr = \"(x1, x2)\"\n[function.b]\nexpr = \"(x2, x1)\"\n").unwrap();
        assert!(two.probe_function().is_err());
    }
}
