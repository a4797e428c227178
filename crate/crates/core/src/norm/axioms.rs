//! Sampled check of the four 2-norm axioms.
//!
//! 1. `||x, y|| = 0` iff `x` and `y` are linearly dependent,
//! 2. `||x, y|| = ||y, x||`,
//! 3. `||a x, y|| = |a| ||x, y||`,
//! 4. `||x, y + z|| <= ||x, y|| + ||x, z||`.
//!
//! Violations are relative: each is divided by `1 + max` of the magnitudes
//! entering the (in)equality, where the input magnitude of a pair is
//! `max|x_i| * max|y_i|` since a 2-norm is degree one in each slot.

use serde::Serialize;

use super::{dependent, max_abs, normalized_singular_values, TwoNormSpace};
use crate::error::{Error, Result};
use crate::sampling::Sampler;

pub const AXIOM_NAMES: [&str; 4] = ["dependence", "symmetry", "homogeneity", "triangle"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomWitness {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// The 2-norm value that broke the axiom.
    pub value: f64,
    pub violation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: u8,
    pub name: &'static str,
    pub passed: bool,
    pub worst_violation: f64,
    /// First sample whose violation exceeded the tolerance.
    pub witness: Option<AxiomWitness>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub space: &'static str,
    pub dim: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub samples_tested: usize,
    pub axioms: [AxiomVerdict; 4],
    pub worst_violation: f64,
    pub witness: Option<AxiomWitness>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }
}

struct Tracker {
    tol: f64,
    worst: [f64; 4],
    witness: [Option<AxiomWitness>; 4],
}

impl Tracker {
    fn record(&mut self, axiom: usize, violation: f64, witness: impl FnOnce() -> AxiomWitness) {
        self.worst[axiom] = self.worst[axiom].max(violation);
        if violation > self.tol && self.witness[axiom].is_none() {
            self.witness[axiom] = Some(AxiomWitness {
                violation,
                ..witness()
            });
        }
    }
}

struct Sample {
    x: Vec<f64>,
    y: Vec<f64>,
    z: Vec<f64>,
    alpha: f64,
}

fn canonical_samples(dim: usize) -> Vec<Sample> {
    let unit = |i: usize| {
        let mut v = vec![0.0; dim];
        v[i] = 1.0;
        v
    };
    let ones = vec![1.0; dim];
    let zero = vec![0.0; dim];
    let mut out = vec![
        Sample { x: zero.clone(), y: unit(0), z: ones.clone(), alpha: 0.0 },
        Sample { x: ones.clone(), y: ones.clone(), z: unit(0), alpha: -1.0 },
    ];
    for i in 0..dim {
        for j in (i + 1)..dim {
            out.push(Sample { x: unit(i), y: unit(j), z: ones.clone(), alpha: 2.0 });
        }
    }
    out.push(Sample { x: ones.clone(), y: unit(0), z: unit(dim - 1), alpha: -0.5 });
    out.push(Sample { x: unit(0), y: zero, z: unit(dim - 1), alpha: 1.0 });
    out
}

/// Checks the four axioms on a fixed set of canonical inputs followed by
/// `num_samples` seeded random draws. An axiom fails when its worst relative
/// violation exceeds `tol`.
pub fn check_axioms(space: &TwoNormSpace, num_samples: usize, seed: u64, tol: f64) -> Result<AxiomReport> {
    if num_samples == 0 {
        return Err(Error::Probe("axiom check needs at least one sample".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let dim = space.dim();
    let mut tracker = Tracker {
        tol,
        worst: [0.0; 4],
        witness: Default::default(),
    };
    let canonical = canonical_samples(dim);
    let samples_tested = canonical.len() + num_samples;
    let mut sampler = Sampler::new(seed);
    let random = (0..num_samples).map(|_| Sample {
        x: sampler.vector(dim),
        y: sampler.vector(dim),
        z: sampler.vector(dim),
        alpha: sampler.scalar(),
    });
    let random: Vec<Sample> = random.collect();
    for s in canonical.iter().chain(&random) {
        check_sample(space, s, &mut tracker)?;
    }

    let axioms: [AxiomVerdict; 4] = std::array::from_fn(|k| AxiomVerdict {
        axiom: k as u8 + 1,
        name: AXIOM_NAMES[k],
        passed: tracker.worst[k] <= tol,
        worst_violation: tracker.worst[k],
        witness: tracker.witness[k].clone(),
    });
    let worst_violation = tracker.worst.iter().copied().fold(0.0, f64::max);
    let witness = axioms.iter().find(|a| !a.passed).and_then(|a| a.witness.clone());
    Ok(AxiomReport {
        space: space.kind().name(),
        dim,
        seed,
        tolerance: tol,
        samples_tested,
        axioms,
        worst_violation,
        witness,
    })
}

fn check_sample(space: &TwoNormSpace, s: &Sample, t: &mut Tracker) -> Result<()> {
    let norm = |a: &[f64], b: &[f64]| space.norm_of(a, b);
    let scaled: Vec<f64> = s.x.iter().map(|c| s.alpha * c).collect();
    let pair_mag = |a: &[f64], b: &[f64]| max_abs(a) * max_abs(b);

    // axiom 1 on a generic pair and on an exactly dependent pair
    for y in [&s.y, &scaled] {
        let value = norm(&s.x, y)?;
        let relative = value / (1.0 + pair_mag(&s.x, y));
        let violation = if dependent(&s.x, y) {
            relative
        } else if relative <= t.tol {
            normalized_singular_values(&s.x, y).map_or(0.0, |(smallest, largest)| smallest / (largest + 1.0))
        } else {
            0.0
        };
        t.record(0, violation, || AxiomWitness {
            x: s.x.clone(),
            y: y.clone(),
            z: None,
            alpha: None,
            value,
            violation,
        });
    }

    let xy = norm(&s.x, &s.y)?;
    let yx = norm(&s.y, &s.x)?;
    let mag = pair_mag(&s.x, &s.y);
    let violation = (xy - yx).abs() / (1.0 + xy.max(yx).max(mag));
    t.record(1, violation, || AxiomWitness {
        x: s.x.clone(),
        y: s.y.clone(),
        z: None,
        alpha: None,
        value: yx,
        violation,
    });

    let lhs = norm(&scaled, &s.y)?;
    let rhs = s.alpha.abs() * xy;
    let violation = (lhs - rhs).abs() / (1.0 + lhs.max(rhs).max(s.alpha.abs() * mag));
    t.record(2, violation, || AxiomWitness {
        x: s.x.clone(),
        y: s.y.clone(),
        z: None,
        alpha: Some(s.alpha),
        value: lhs,
        violation,
    });

    let yz: Vec<f64> = s.y.iter().zip(&s.z).map(|(a, b)| a + b).collect();
    let lhs = norm(&s.x, &yz)?;
    let rhs = xy + norm(&s.x, &s.z)?;
    let input = max_abs(&s.x) * (max_abs(&s.y) + max_abs(&s.z));
    let violation = (lhs - rhs).max(0.0) / (1.0 + lhs.max(rhs).max(input));
    t.record(3, violation, || AxiomWitness {
        x: s.x.clone(),
        y: s.y.clone(),
        z: Some(s.z.clone()),
        alpha: None,
        value: lhs,
        violation,
    });
    Ok(())
}
