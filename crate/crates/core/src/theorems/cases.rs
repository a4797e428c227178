//! Named, replayable theorem cases backed by TOML fixtures.
//!
//! The fixtures under `fixtures/` are compiled in. Setting
//! [`FIXTURE_DIR_ENV`] (or passing a directory) loads every `*.toml` there
//! instead. A fixture's `case.id` is one of [`CASE_IDS`], optionally with a
//! `/variant` suffix.

use std::path::{Path, PathBuf};

use crate::config::{FunctionEntry, Overrides, RunConfig};
use crate::error::{Error, Result};
use crate::probes::ProbeReport;
use crate::run;
use crate::theorems::{
    run_implication_matrix, verify_u_implies_ward, verify_uniform_implies_ward, verify_uniform_limit_u,
    verify_uniform_limit_ward, verify_ward_compact_image, verify_ward_implies_sequential, Battery,
};

pub const FIXTURE_DIR_ENV: &str = "TWONORM_FIXTURES";

pub const CASE_IDS: [&str; 9] = [
    "example-3-2",
    "example-square-map",
    "thm-ward-implies-sequential",
    "thm-ward-compact-image",
    "thm-u-implies-ward",
    "thm-uniform-implies-ward",
    "thm-uniform-limit-ward",
    "thm-uniform-limit-u",
    "implication-lattice",
];

const EMBEDDED: [(&str, &str); 9] = [
    ("example-3-2.toml", include_str!("../../fixtures/example-3-2.toml")),
    ("example-square-map.toml", include_str!("../../fixtures/example-square-map.toml")),
    ("thm-ward-implies-sequential.toml", include_str!("../../fixtures/thm-ward-implies-sequential.toml")),
    ("thm-ward-compact-image.toml", include_str!("../../fixtures/thm-ward-compact-image.toml")),
    ("thm-u-implies-ward.toml", include_str!("../../fixtures/thm-u-implies-ward.toml")),
    ("thm-uniform-implies-ward.toml", include_str!("../../fixtures/thm-uniform-implies-ward.toml")),
    ("thm-uniform-limit-ward.toml", include_str!("../../fixtures/thm-uniform-limit-ward.toml")),
    ("thm-uniform-limit-u.toml", include_str!("../../fixtures/thm-uniform-limit-u.toml")),
    ("implication-lattice.toml", include_str!("../../fixtures/implication-lattice.toml")),
];

#[derive(Debug, Clone)]
pub struct TheoremCase {
    pub id: String,
    /// File the fixture came from (the embedded file name for built-ins).
    pub source: PathBuf,
    pub text: String,
    pub config: RunConfig,
}

impl TheoremCase {
    /// The theorem this case exercises: the id without its variant.
    pub fn kind(&self) -> &str {
        self.id.split('/').next().unwrap_or(&self.id)
    }

    fn parse(source: PathBuf, text: String, overrides: &Overrides) -> Result<Self> {
        let config = RunConfig::from_toml(&text, overrides).map_err(|e| match e {
            Error::Config { field, message } => Error::Config { field: format!("{}: {field}", source.display()), message },
            other => Error::Config { field: source.display().to_string(), message: other.to_string() },
        })?;
        let meta = config.case.as_ref().ok_or_else(|| Error::Config {
            field: format!("{}: case", source.display()),
            message: "a theorem fixture needs a [case] table".into(),
        })?;
        let id = meta.id.clone();
        let kind = id.split('/').next().unwrap_or(&id);
        if !CASE_IDS.contains(&kind) && !kind.starts_with("example-") {
            return Err(Error::Config {
                field: format!("{}: case.id", source.display()),
                message: format!("unknown case `{id}`; use a theorem id or an `example-` prefix"),
            });
        }
        Ok(Self { id, source, text, config })
    }
}

/// Built-in fixtures, or every `*.toml` in `dir` (sorted by file name).
pub fn load_cases(dir: Option<&Path>, overrides: &Overrides) -> Result<Vec<TheoremCase>> {
    let Some(dir) = dir else {
        return EMBEDDED
            .iter()
            .map(|(name, text)| TheoremCase::parse(PathBuf::from(name), text.to_string(), overrides))
            .collect();
    };
    let pattern = dir.join("*.toml");
    let paths = glob::glob(&pattern.to_string_lossy()).map_err(|e| Error::Config {
        field: "fixtures".into(),
        message: e.to_string(),
    })?;
    let mut paths: Vec<PathBuf> = paths.filter_map(|p| p.ok()).collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Error::Config { field: "fixtures".into(), message: format!("no *.toml files in {}", dir.display()) });
    }
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(|e| Error::Config {
                field: p.display().to_string(),
                message: e.to_string(),
            })?;
            TheoremCase::parse(p, text, overrides)
        })
        .collect()
}

/// Cases whose id matches the glob `selector`.
pub fn select_cases<'a>(cases: &'a [TheoremCase], selector: &str) -> Result<Vec<&'a TheoremCase>> {
    let pattern = glob::Pattern::new(selector).map_err(|e| Error::Config { field: "selector".into(), message: e.to_string() })?;
    let picked: Vec<&TheoremCase> = cases.iter().filter(|c| pattern.matches(&c.id)).collect();
    if picked.is_empty() {
        return Err(Error::Config { field: "selector".into(), message: format!("no case matches `{selector}`") });
    }
    Ok(picked)
}

fn need<T: Clone>(v: &Option<T>, field: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Config { field: field.into(), message: "required by this case".into() })
}

/// Runs one case. Theorem checks give one report per listed function or
/// family; example cases give their classify and probe reports.
pub fn run_case(case: &TheoremCase) -> Result<Vec<ProbeReport>> {
    let cfg = &case.config;
    let meta = cfg.case.as_ref().expect("checked on load");
    let mut reports = if case.kind().starts_with("example-") {
        let mut r = run::classify(cfg)?;
        if !cfg.functions.is_empty() {
            r.extend(run::probe(cfg)?);
        }
        r
    } else {
        let names: Vec<String> = if meta.functions.is_empty() {
            cfg.functions.keys().cloned().collect()
        } else {
            meta.functions.clone()
        };
        let seqs: Vec<_> = cfg.sequences.iter().map(|e| e.spec.clone()).collect();
        let convergent: Vec<_> = cfg.sequences.iter().filter_map(|e| e.limit.clone().map(|l| (e.spec.clone(), l))).collect();
        let p = &cfg.probes;
        let (space, sched, eps) = (&cfg.space, &cfg.schedule, cfg.image_epsilon);
        let mut out = Vec::new();
        for name in &names {
            let mut r = match case.kind() {
                "thm-ward-implies-sequential" => verify_ward_implies_sequential(space, cfg.map(name)?, &seqs, &convergent, sched, eps)?,
                "thm-ward-compact-image" => {
                    verify_ward_compact_image(space, cfg.map(name)?, &seqs, sched, need(&p.bound, "probes.bound")?, eps)?
                }
                "thm-u-implies-ward" => verify_u_implies_ward(
                    space,
                    cfg.map(name)?,
                    &need(&p.domain, "probes.domain")?,
                    eps,
                    &p.delta_grid,
                    p.pair_samples,
                    cfg.seed,
                    &seqs,
                    sched,
                )?,
                "thm-uniform-implies-ward" => verify_uniform_implies_ward(
                    space,
                    cfg.map(name)?,
                    &need(&p.domain, "probes.domain")?,
                    eps,
                    &p.certificate,
                    p.pair_samples,
                    cfg.seed,
                    &seqs,
                    sched,
                )?,
                "thm-uniform-limit-ward" => {
                    let (family, limit) = family_of(cfg, name)?;
                    let extra = if p.domain.is_some() { run::box_samples(cfg, cfg.seed)? } else { Vec::new() };
                    verify_uniform_limit_ward(space, family, limit, &seqs, sched, eps, &extra)?
                }
                "thm-uniform-limit-u" => {
                    let (family, limit) = family_of(cfg, name)?;
                    verify_uniform_limit_u(
                        space,
                        family,
                        limit,
                        &need(&p.domain, "probes.domain")?,
                        eps,
                        &p.delta_grid,
                        p.pair_samples,
                        p.domain_samples,
                        cfg.seed,
                        sched,
                    )?
                }
                "implication-lattice" => {
                    let battery = Battery { quasi_cauchy: seqs.clone(), convergent: convergent.clone() };
                    let m = run_implication_matrix(space, cfg.map(name)?, &battery, sched, eps)?;
                    run::matrix_report(&m, sched, eps)
                }
                other => unreachable!("unknown kind {other}"),
            };
            r.subject = Some(name.clone());
            out.push(r);
        }
        out
    };
    for r in &mut reports {
        r.case_id = Some(case.id.clone());
    }
    Ok(reports)
}

fn family_of<'a>(cfg: &'a RunConfig, name: &str) -> Result<(&'a crate::func::FuncFamilySpec, &'a crate::func::FuncSpec)> {
    match cfg.functions.get(name) {
        Some(FunctionEntry::Family { family, limit }) => Ok((family, cfg.map(limit)?)),
        _ => Err(Error::Config { field: "case.functions".into(), message: format!("`{name}` is not a family") }),
    }
}

/// The two published examples: the quasi-Cauchy sequence with a
/// non-quasi-Cauchy subsequence, and the square map that is sequentially
/// but not ward continuous.
pub fn run_published_examples() -> Result<Vec<ProbeReport>> {
    let cases = load_cases(None, &Overrides::default())?;
    let mut out = Vec::new();
    for case in cases.iter().filter(|c| c.kind().starts_with("example-")) {
        out.extend(run_case(case)?);
    }
    Ok(out)
}
