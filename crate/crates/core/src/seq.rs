//! Vector sequences and window verdicts.
//!
//! A limit statement such as "`||Δx_n, z|| -> 0` for every `z`" is replaced by
//! a window check: every measured value for `n` in `[N, M]` and every basis
//! direction must be below `ε`. The quasi-Cauchy and Cauchy checks only pair
//! terms that both lie in the window, so on a fixed window
//! `convergent(ε) => Cauchy(2ε) => quasi-Cauchy(2ε)`.

use serde::{Deserialize, Serialize};

use crate::dsl::{self, Ast};
use crate::error::{Error, Result};
use crate::func::FuncSpec;
use crate::norm::{TwoNormSpace, Vector};

/// Smallest allowed `M - N`.
pub const MIN_WINDOW_SPAN: u64 = 10;
/// Bisection depth cap of the subsequence extraction.
pub const MAX_SPLITS: usize = 64;
/// An extracted subsequence shorter than this counts as exhausted.
pub const MIN_SUBSEQUENCE_LEN: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

/// Index window `[N, M]` and tolerance `ε`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ToleranceSchedule {
    start: u64,
    end: u64,
    epsilon: f64,
}

impl Default for ToleranceSchedule {
    fn default() -> Self {
        Self {
            start: 1000,
            end: 2000,
            epsilon: 1e-2,
        }
    }
}

impl ToleranceSchedule {
    pub fn new(start: u64, end: u64, epsilon: f64) -> Result<Self> {
        if start < 1 {
            return Err(Error::Schedule(format!("window must start at 1 or later, got {start}")));
        }
        if end < start || end - start < MIN_WINDOW_SPAN {
            return Err(Error::Schedule(format!(
                "window [{start}, {end}] spans fewer than {MIN_WINDOW_SPAN} indices"
            )));
        }
        if !(epsilon > 0.0) || !epsilon.is_finite() {
            return Err(Error::InvalidTolerance(epsilon));
        }
        Ok(Self { start, end, epsilon })
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn end(&self) -> u64 {
        self.end
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn with_epsilon(self, epsilon: f64) -> Result<Self> {
        Self::new(self.start, self.end, epsilon)
    }

    /// The window covering the same terms after `interleave`: odd positions
    /// `2N-1 ..= 2M-1` and the anchors between them.
    pub fn interleaved(&self) -> Self {
        Self {
            start: 2 * self.start - 1,
            end: 2 * self.end,
            epsilon: self.epsilon,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Source {
    Expr(Ast),
    Terms(Vec<Vector>),
    Interleave { inner: Box<SeqSpec>, anchor: Vector },
    Image { inner: Box<SeqSpec>, func: FuncSpec },
}

/// A sequence `(x_n)`, `n >= 1`, optionally read through a subsequence
/// selector `n -> k(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeqSpec {
    name: String,
    dim: usize,
    source: Source,
    index_map: Option<Ast>,
}

impl SeqSpec {
    /// A closed form in `n`, e.g. `(sqrt(n), sqrt(n))`.
    pub fn parse(text: &str) -> Result<Self> {
        let ast = Ast::parse(text)?;
        if ast.arity() < 2 {
            return Err(Error::InvalidVector(format!("sequence `{text}` must be a tuple of at least 2 components")));
        }
        if let Some(var) = ast.variables().into_iter().find(|v| v != "n") {
            return Err(dsl::DslError::Unbound(var).into());
        }
        Ok(Self {
            name: text.to_string(),
            dim: ast.arity(),
            source: Source::Expr(ast),
            index_map: None,
        })
    }

    /// An explicit finite list, indexed from 1.
    pub fn from_terms(terms: Vec<Vector>) -> Result<Self> {
        let dim = terms.first().map(Vector::dim).ok_or_else(|| Error::InvalidVector("empty term list".into()))?;
        if let Some(bad) = terms.iter().find(|t| t.dim() != dim) {
            return Err(Error::Dimension { expected: dim, got: bad.dim() });
        }
        Ok(Self {
            name: format!("list[{}]", terms.len()),
            dim,
            source: Source::Terms(terms),
            index_map: None,
        })
    }

    /// Reads the sequence at `k(n)` instead of `n`; `k` must be strictly
    /// increasing over every window it is used on.
    pub fn with_index_map(mut self, map: &str) -> Result<Self> {
        let ast = Ast::parse(map)?;
        if ast.arity() != 1 {
            return Err(Error::Schedule("index map must be scalar".into()));
        }
        if let Some(var) = ast.variables().into_iter().find(|v| v != "n") {
            return Err(dsl::DslError::Unbound(var).into());
        }
        self.name = format!("{}[n -> {ast}]", self.name);
        self.index_map = Some(ast);
        Ok(self)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `(f(x_n))`.
    pub fn image(&self, func: &FuncSpec) -> Result<Self> {
        if func.dim_in() != self.dim {
            return Err(Error::Dimension { expected: func.dim_in(), got: self.dim });
        }
        Ok(Self {
            name: format!("f({})", self.name),
            dim: func.dim_out(),
            source: Source::Image { inner: Box::new(self.clone()), func: func.clone() },
            index_map: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The index actually read at position `n`.
    pub fn mapped_index(&self, n: u64) -> Result<u64> {
        let Some(map) = &self.index_map else {
            return Ok(n);
        };
        let value = dsl::eval(map, &[("n", n as f64)])?.as_scalar()?;
        let rounded = value.round();
        if !value.is_finite() || rounded < 1.0 || (value - rounded).abs() > 1e-9 * rounded.max(1.0) || rounded >= 2f64.powi(53) {
            return Err(Error::SequenceIndex {
                index: n,
                reason: format!("index map gives {value}, not a positive integer"),
            });
        }
        Ok(rounded as u64)
    }

    /// `x_n` (through the index map). Components may be non-finite.
    pub fn term(&self, n: u64) -> Result<Vec<f64>> {
        if n < 1 {
            return Err(Error::SequenceIndex { index: n, reason: "indices start at 1".into() });
        }
        let k = self.mapped_index(n)?;
        match &self.source {
            Source::Expr(ast) => Ok(dsl::eval(ast, &[("n", k as f64)])?.into_vector()?),
            Source::Terms(terms) => terms
                .get(k as usize - 1)
                .map(|v| v.as_slice().to_vec())
                .ok_or_else(|| Error::SequenceIndex {
                    index: k,
                    reason: format!("list has {} terms", terms.len()),
                }),
            Source::Interleave { inner, anchor } => {
                if k % 2 == 1 {
                    inner.term(k.div_ceil(2))
                } else {
                    Ok(anchor.as_slice().to_vec())
                }
            }
            Source::Image { inner, func } => {
                let x = inner.term(k)?;
                if x.iter().any(|c| !c.is_finite()) {
                    return Ok(vec![f64::NAN; func.dim_out()]);
                }
                func.apply(&x)
            }
        }
    }

    /// Terms `x_start ..= x_end`, checking that the index map is strictly
    /// increasing on the range.
    pub fn window_terms(&self, start: u64, end: u64) -> Result<Vec<Vec<f64>>> {
        if self.index_map.is_some() {
            let mut previous = self.mapped_index(start)?;
            for n in start + 1..=end {
                let k = self.mapped_index(n)?;
                if k <= previous {
                    return Err(Error::IndexMap { n: n - 1, at: previous, at_next: k });
                }
                previous = k;
            }
        }
        (start..=end).map(|n| self.term(n)).collect()
    }
}

/// `ξ` with `ξ_{2k-1} = x_k` and `ξ_{2k} = x0`.
pub fn interleave(seq: &SeqSpec, x0: &Vector) -> Result<SeqSpec> {
    if x0.dim() != seq.dim {
        return Err(Error::Dimension { expected: seq.dim, got: x0.dim() });
    }
    Ok(SeqSpec {
        name: format!("interleave({}, {x0})", seq.name),
        dim: seq.dim,
        source: Source::Interleave { inner: Box::new(seq.clone()), anchor: x0.clone() },
        index_map: None,
    })
}

/// `Δx_n = x_{n+1} - x_n`.
pub fn delta(seq: &SeqSpec, n: u64) -> Result<Vector> {
    let (a, b) = (seq.term(n)?, seq.term(n + 1)?);
    Vector::new(b.iter().zip(&a).map(|(p, q)| p - q).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeqVerdict {
    pub status: Status,
    pub worst_value: f64,
    pub witness_index: u64,
    /// Second index of the worst pair for the Cauchy check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_partner: Option<u64>,
    pub witness_direction: Vec<f64>,
    pub epsilon: f64,
    pub window: (u64, u64),
}

struct Worst {
    value: f64,
    index: u64,
    partner: Option<u64>,
    direction: usize,
}

impl Worst {
    fn new(start: u64) -> Self {
        Self { value: 0.0, index: start, partner: None, direction: 0 }
    }

    fn offer(&mut self, value: f64, index: u64, partner: Option<u64>, direction: usize) {
        if value > self.value {
            *self = Self { value, index, partner, direction };
        }
    }

    fn verdict(self, space: &TwoNormSpace, sched: &ToleranceSchedule) -> SeqVerdict {
        SeqVerdict {
            status: if self.value < sched.epsilon { Status::Pass } else { Status::Fail },
            worst_value: self.value,
            witness_index: self.index,
            witness_partner: self.partner,
            witness_direction: space.basis()[self.direction].as_slice().to_vec(),
            epsilon: sched.epsilon,
            window: (sched.start, sched.end),
        }
    }
}

fn check_dims(space: &TwoNormSpace, seq: &SeqSpec) -> Result<()> {
    if space.dim() != seq.dim {
        return Err(Error::Dimension { expected: space.dim(), got: seq.dim });
    }
    Ok(())
}

/// Window terms, or an inconclusive verdict at the first non-finite term.
fn finite_window(
    space: &TwoNormSpace,
    seq: &SeqSpec,
    sched: &ToleranceSchedule,
) -> Result<std::result::Result<Vec<Vec<f64>>, SeqVerdict>> {
    check_dims(space, seq)?;
    let terms = seq.window_terms(sched.start, sched.end)?;
    if let Some(pos) = terms.iter().position(|t| t.iter().any(|c| !c.is_finite())) {
        return Ok(Err(SeqVerdict {
            status: Status::Inconclusive,
            worst_value: f64::NAN,
            witness_index: sched.start + pos as u64,
            witness_partner: None,
            witness_direction: space.basis()[0].as_slice().to_vec(),
            epsilon: sched.epsilon,
            window: (sched.start, sched.end),
        }));
    }
    Ok(Ok(terms))
}

fn diff_into(buf: &mut [f64], a: &[f64], b: &[f64]) {
    for ((d, p), q) in buf.iter_mut().zip(a).zip(b) {
        *d = p - q;
    }
}

/// ε-quasi-Cauchy on the window: `||x_{n+1} - x_n, e_i|| < ε` for every
/// consecutive pair inside `[N, M]` and every basis vector.
pub fn classify_quasi_cauchy(space: &TwoNormSpace, seq: &SeqSpec, sched: &ToleranceSchedule) -> Result<SeqVerdict> {
    let terms = match finite_window(space, seq, sched)? {
        Ok(t) => t,
        Err(v) => return Ok(v),
    };
    let mut worst = Worst::new(sched.start);
    let mut buf = vec![0.0; space.dim()];
    for (offset, pair) in terms.windows(2).enumerate() {
        diff_into(&mut buf, &pair[1], &pair[0]);
        for (i, e) in space.basis().iter().enumerate() {
            let value = space.norm_of(&buf, e.as_slice())?;
            worst.offer(value, sched.start + offset as u64, None, i);
        }
    }
    Ok(worst.verdict(space, sched))
}

/// ε-Cauchy on the window: `||x_n - x_m, e_i|| < ε` for all `n < m` in
/// `[N, M]`.
pub fn classify_cauchy(space: &TwoNormSpace, seq: &SeqSpec, sched: &ToleranceSchedule) -> Result<SeqVerdict> {
    let terms = match finite_window(space, seq, sched)? {
        Ok(t) => t,
        Err(v) => return Ok(v),
    };
    let mut worst = Worst::new(sched.start);
    let mut buf = vec![0.0; space.dim()];
    for (a, x) in terms.iter().enumerate() {
        for (b, y) in terms.iter().enumerate().skip(a + 1) {
            diff_into(&mut buf, y, x);
            for (i, e) in space.basis().iter().enumerate() {
                let value = space.norm_of(&buf, e.as_slice())?;
                worst.offer(value, sched.start + a as u64, Some(sched.start + b as u64), i);
            }
        }
    }
    Ok(worst.verdict(space, sched))
}

/// `||x_n - limit, e_i|| < ε` on the window. The limit is supplied.
pub fn classify_convergent(
    space: &TwoNormSpace,
    seq: &SeqSpec,
    limit: &Vector,
    sched: &ToleranceSchedule,
) -> Result<SeqVerdict> {
    if limit.dim() != space.dim() {
        return Err(Error::Dimension { expected: space.dim(), got: limit.dim() });
    }
    let terms = match finite_window(space, seq, sched)? {
        Ok(t) => t,
        Err(v) => return Ok(v),
    };
    let mut worst = Worst::new(sched.start);
    let mut buf = vec![0.0; space.dim()];
    for (offset, x) in terms.iter().enumerate() {
        diff_into(&mut buf, x, limit.as_slice());
        for (i, e) in space.basis().iter().enumerate() {
            let value = space.norm_of(&buf, e.as_slice())?;
            worst.offer(value, sched.start + offset as u64, None, i);
        }
    }
    Ok(worst.verdict(space, sched))
}

/// `(n, ||Δx_n, w||)` for the consecutive pairs of the window.
pub fn delta_values(
    space: &TwoNormSpace,
    seq: &SeqSpec,
    direction: &Vector,
    sched: &ToleranceSchedule,
) -> Result<Vec<(u64, f64)>> {
    check_dims(space, seq)?;
    let terms = seq.window_terms(sched.start, sched.end)?;
    let mut buf = vec![0.0; space.dim()];
    terms
        .windows(2)
        .enumerate()
        .map(|(offset, pair)| {
            diff_into(&mut buf, &pair[1], &pair[0]);
            Ok((sched.start + offset as u64, space.norm_of(&buf, direction.as_slice())?))
        })
        .collect()
}

/// Bolzano-Weierstrass style extraction of an ε-quasi-Cauchy subsequence
/// from the window terms.
///
/// The bounding box of the terms is bisected one coordinate at a time
/// (round robin, skipping flat coordinates), keeping the half that holds
/// the majority of the currently selected indices, ties to the lower half.
/// Stops as soon as the selected terms, in index order, are ε-quasi-Cauchy.
/// Returns `None` once fewer than `MIN_SUBSEQUENCE_LEN` indices remain or
/// after `MAX_SPLITS` splits.
pub fn extract_quasi_cauchy_subsequence(
    space: &TwoNormSpace,
    seq: &SeqSpec,
    sched: &ToleranceSchedule,
    bound: f64,
) -> Result<Option<Vec<u64>>> {
    check_dims(space, seq)?;
    let terms = seq.window_terms(sched.start, sched.end)?;
    for (offset, t) in terms.iter().enumerate() {
        let index = sched.start + offset as u64;
        if t.iter().any(|c| !c.is_finite()) {
            return Err(Error::BoundViolation { index, norm: f64::INFINITY, bound });
        }
        let (norm, _) = space.max_over_basis(t)?;
        if norm > bound {
            return Err(Error::BoundViolation { index, norm, bound });
        }
    }

    let dim = space.dim();
    let mut lo: Vec<f64> = (0..dim).map(|c| terms.iter().map(|t| t[c]).fold(f64::INFINITY, f64::min)).collect();
    let mut hi: Vec<f64> = (0..dim).map(|c| terms.iter().map(|t| t[c]).fold(f64::NEG_INFINITY, f64::max)).collect();
    let mut selected: Vec<usize> = (0..terms.len()).collect();
    let mut axis = 0;
    let mut buf = vec![0.0; dim];

    for split in 0..=MAX_SPLITS {
        if selected.len() < MIN_SUBSEQUENCE_LEN {
            return Ok(None);
        }
        let mut consecutive_ok = true;
        'pairs: for pair in selected.windows(2) {
            diff_into(&mut buf, &terms[pair[1]], &terms[pair[0]]);
            for e in space.basis() {
                if space.norm_of(&buf, e.as_slice())? >= sched.epsilon {
                    consecutive_ok = false;
                    break 'pairs;
                }
            }
        }
        if consecutive_ok {
            return Ok(Some(selected.iter().map(|&i| sched.start + i as u64).collect()));
        }
        if split == MAX_SPLITS {
            break;
        }
        let Some(a) = (0..dim).map(|k| (axis + k) % dim).find(|&a| hi[a] > lo[a]) else {
            break;
        };
        let mid = 0.5 * (lo[a] + hi[a]);
        let (lower, upper): (Vec<usize>, Vec<usize>) = selected.iter().partition(|&&i| terms[i][a] < mid);
        if lower.len() >= upper.len() {
            selected = lower;
            hi[a] = mid;
        } else {
            selected = upper;
            lo[a] = mid;
        }
        axis = (a + 1) % dim;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det2() -> TwoNormSpace {
        TwoNormSpace::det2()
    }

    fn sched(n: u64, m: u64, eps: f64) -> ToleranceSchedule {
        ToleranceSchedule::new(n, m, eps).unwrap()
    }

    #[test]
    fn schedule_validation() {
        assert!(ToleranceSchedule::new(0, 20, 0.1).is_err());
        assert!(ToleranceSchedule::new(5, 14, 0.1).is_err());
        assert!(ToleranceSchedule::new(5, 15, 0.1).is_ok());
        assert!(ToleranceSchedule::new(5, 15, 0.0).is_err());
        assert!(ToleranceSchedule::new(5, 15, f64::NAN).is_err());
        let d = ToleranceSchedule::default();
        assert_eq!((d.start(), d.end(), d.epsilon()), (1000, 2000, 0.01));
    }

    #[test]
    fn delta_examples() {
        let s = SeqSpec::parse("(sqrt(n), sqrt(n))").unwrap();
        let d = delta(&s, 4).unwrap();
        let expected = 5f64.sqrt() - 2.0;
        assert_eq!(d.as_slice(), &[expected, expected]);
        assert!((expected - 0.23607).abs() < 1e-5);
        assert_eq!(delta(&SeqSpec::parse("(n, n)").unwrap(), 7).unwrap().as_slice(), &[1.0, 1.0]);
        assert_eq!(delta(&SeqSpec::parse("(3, 0-2)").unwrap(), 11).unwrap().as_slice(), &[0.0, 0.0]);
    }

    #[test]
    fn delta_through_index_map_matches_direct_terms() {
        let s = SeqSpec::parse("(sqrt(n), 1/n)").unwrap().with_index_map("n^2 + 1").unwrap();
        let base = SeqSpec::parse("(sqrt(n), 1/n)").unwrap();
        for n in 1..30u64 {
            let direct: Vec<f64> = base
                .term((n + 1) * (n + 1) + 1)
                .unwrap()
                .iter()
                .zip(base.term(n * n + 1).unwrap())
                .map(|(a, b)| a - b)
                .collect();
            assert_eq!(delta(&s, n).unwrap().as_slice(), direct.as_slice());
        }
    }

    #[test]
    fn root_sequence_is_quasi_cauchy_late() {
        let v = classify_quasi_cauchy(&det2(), &SeqSpec::parse("(sqrt(n), sqrt(n))").unwrap(), &sched(2501, 5000, 0.01)).unwrap();
        assert_eq!(v.status, Status::Pass);
        // √2502 - √2501 is the largest difference in the window
        assert_eq!(v.witness_index, 2501);
        assert!((v.worst_value - (2502f64.sqrt() - 2501f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn squared_index_subsequence_is_not_quasi_cauchy() {
        let sub = SeqSpec::parse("(sqrt(n), sqrt(n))").unwrap().with_index_map("n^2").unwrap();
        for (n, m) in [(1, 11), (1000, 2000), (40_000, 40_100)] {
            let v = classify_quasi_cauchy(&det2(), &sub, &sched(n, m, 0.5)).unwrap();
            assert_eq!(v.status, Status::Fail);
            assert_eq!(v.worst_value, 1.0);
            assert_eq!(v.witness_direction, vec![1.0, 0.0]);
        }
        let plain = SeqSpec::parse("(n, n)").unwrap();
        assert_eq!(classify_quasi_cauchy(&det2(), &plain, &sched(3, 30, 0.5)).unwrap().worst_value, 1.0);
    }

    #[test]
    fn constant_sequence_passes_everything() {
        let c = SeqSpec::parse("(2, 0-7)").unwrap();
        let s = sched(1, 50, 1e-300);
        assert_eq!(classify_quasi_cauchy(&det2(), &c, &s).unwrap().status, Status::Pass);
        assert_eq!(classify_cauchy(&det2(), &c, &s).unwrap().status, Status::Pass);
        let v = classify_convergent(&det2(), &c, &Vector::from([2.0, -7.0]), &s).unwrap();
        assert_eq!((v.status, v.worst_value), (Status::Pass, 0.0));
    }

    #[test]
    fn cauchy_examples() {
        let harmonic = SeqSpec::parse("(1/n, 1/n)").unwrap();
        assert_eq!(classify_cauchy(&det2(), &harmonic, &sched(100, 200, 0.02)).unwrap().status, Status::Pass);
        let root = SeqSpec::parse("(sqrt(n), sqrt(n))").unwrap();
        let v = classify_cauchy(&det2(), &root, &sched(100, 10_000, 0.5)).unwrap();
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.worst_value, 90.0);
        assert_eq!((v.witness_index, v.witness_partner), (100, Some(10_000)));
    }

    #[test]
    fn convergent_examples() {
        let harmonic = SeqSpec::parse("(1/n, 1/n)").unwrap();
        let origin = Vector::zero(2);
        let v = classify_convergent(&det2(), &harmonic, &origin, &sched(200, 400, 0.01)).unwrap();
        assert_eq!(v.status, Status::Pass);
        assert_eq!(v.worst_value, 1.0 / 200.0);
        let v = classify_convergent(&det2(), &SeqSpec::parse("(n, n)").unwrap(), &origin, &sched(1, 20, 1.0)).unwrap();
        assert_eq!(v.status, Status::Fail);
    }

    #[test]
    fn non_finite_terms_are_inconclusive() {
        let s = SeqSpec::parse("(1/(n - 5), 1)").unwrap();
        let v = classify_quasi_cauchy(&det2(), &s, &sched(1, 20, 0.1)).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.witness_index, 5);
    }

    #[test]
    fn domain_errors_propagate() {
        let s = SeqSpec::parse("(sqrt(n - 5), 1)").unwrap();
        assert!(matches!(classify_quasi_cauchy(&det2(), &s, &sched(1, 20, 0.1)), Err(Error::Dsl(_))));
    }

    #[test]
    fn index_map_must_increase() {
        let s = SeqSpec::parse("(n, n)").unwrap().with_index_map("(n - 10)^2 + 1").unwrap();
        assert!(matches!(classify_quasi_cauchy(&det2(), &s, &sched(1, 20, 0.1)), Err(Error::IndexMap { .. })));
        let s = SeqSpec::parse("(n, n)").unwrap().with_index_map("n/2").unwrap();
        assert!(matches!(s.term(3), Err(Error::SequenceIndex { .. })));
    }

    #[test]
    fn interleave_examples() {
        let h = SeqSpec::parse("(1/n, 1/n)").unwrap();
        let xi = interleave(&h, &Vector::zero(2)).unwrap();
        let firsts: Vec<Vec<f64>> = (1..=4).map(|n| xi.term(n).unwrap()).collect();
        assert_eq!(firsts, vec![vec![1.0, 1.0], vec![0.0, 0.0], vec![0.5, 0.5], vec![0.0, 0.0]]);
        let lin = interleave(&SeqSpec::parse("(n, n)").unwrap(), &Vector::from([9.0, 9.0])).unwrap();
        assert_eq!(lin.term(5).unwrap(), vec![3.0, 3.0]);
        let c = SeqSpec::parse("(4, 5)").unwrap();
        let cc = interleave(&c, &Vector::from([4.0, 5.0])).unwrap();
        assert!((1..40).all(|n| cc.term(n).unwrap() == vec![4.0, 5.0]));
    }

    #[test]
    fn list_sequences() {
        let s = SeqSpec::from_terms(vec![Vector::from([0.0, 1.0]), Vector::from([2.0, 3.0])]).unwrap();
        assert_eq!(s.term(2).unwrap(), vec![2.0, 3.0]);
        assert!(s.term(3).is_err());
        assert!(SeqSpec::from_terms(vec![]).is_err());
    }

    #[test]
    fn extraction_from_alternating_list() {
        let terms: Vec<Vector> = (0..22)
            .map(|k| if k % 2 == 0 { Vector::zero(2) } else { Vector::from([1.0, 1.0]) })
            .collect();
        let s = SeqSpec::from_terms(terms).unwrap();
        let picked = extract_quasi_cauchy_subsequence(&det2(), &s, &sched(1, 22, 0.01), 10.0).unwrap().unwrap();
        assert_eq!(picked, (1..=21).step_by(2).collect::<Vec<u64>>());
        assert!(picked.iter().all(|&n| s.term(n).unwrap() == vec![0.0, 0.0]));
    }

    #[test]
    fn extraction_keeps_already_quasi_cauchy_windows() {
        let root = SeqSpec::parse("(sqrt(n), sqrt(n))").unwrap();
        let picked = extract_quasi_cauchy_subsequence(&det2(), &root, &sched(2501, 5000, 0.01), 100.0).unwrap().unwrap();
        assert_eq!(picked, (2501..=5000).collect::<Vec<u64>>());
        let c = SeqSpec::parse("(1, 1)").unwrap();
        assert_eq!(extract_quasi_cauchy_subsequence(&det2(), &c, &sched(1, 11, 0.01), 2.0).unwrap().unwrap().len(), 11);
    }

    #[test]
    fn extraction_rejects_unbounded_terms() {
        let s = SeqSpec::parse("(n, 0)").unwrap();
        let err = extract_quasi_cauchy_subsequence(&det2(), &s, &sched(1, 20, 0.01), 10.0).unwrap_err();
        assert!(matches!(err, Error::BoundViolation { index: 11, .. }), "{err:?}");
    }

    #[test]
    fn extraction_gives_up_on_spread_out_points() {
        // 21 evenly spaced points, far apart relative to ε
        let s = SeqSpec::parse("(n/21, 0)").unwrap();
        assert_eq!(extract_quasi_cauchy_subsequence(&det2(), &s, &sched(1, 21, 1e-6), 2.0).unwrap(), None);
    }
}
