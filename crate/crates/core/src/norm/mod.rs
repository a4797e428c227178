//! 2-normed spaces over `R^m`.
//!
//! Three evaluators are available:
//!
//! * `det2`: the parallelogram area `|x1*y2 - x2*y1|` on `R^2`, correctly
//!   rounded.
//! * `gram`: `sqrt(<x,x><y,y> - <x,y>^2)` on `R^m`, evaluated through the
//!   Lagrange identity as the root of the sum of squared 2x2 minors. On
//!   `R^2` it coincides with `det2`.
//! * `dsl`: any expression in `x1..xm, y1..ym`.
//!
//! Every space also carries a basis. Limits "for every direction z" are
//! checked on the basis only: by homogeneity and the triangle inequality,
//! `||x, sum c_i e_i|| <= sum |c_i| ||x, e_i||`.

mod axioms;
mod derived;
pub(crate) mod exact;

pub use axioms::{check_axioms, AxiomReport, AxiomVerdict, AxiomWitness};
pub use derived::{eval_max_basis_norm, eval_seminorm, eval_sum_norm, in_neighborhood};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dsl::{self, Ast, Env};
use crate::error::{Error, Result};

/// Relative threshold of the numerical linear dependence test.
pub const DEPENDENCE_TOLERANCE: f64 = 1e-9;

/// A point of `R^m`, `m >= 2`, with finite components.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::InvalidVector(format!(
                "dimension must be at least 2, got {}",
                components.len()
            )));
        }
        if let Some(bad) = components.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidVector(format!("non-finite component {bad}")));
        }
        Ok(Self(components))
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0.0; dim.max(2)])
    }

    /// The `i`-th standard unit vector of `R^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0.0; dim.max(2)];
        v[i] = 1.0;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, alpha: f64) -> Vector {
        Vector(self.0.iter().map(|a| alpha * a).collect())
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        max_abs(&self.0)
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Vector::new(v)
    }
}

impl From<Vector> for Vec<f64> {
    fn from(v: Vector) -> Self {
        v.0
    }
}

impl<const N: usize> From<[f64; N]> for Vector {
    /// Panics on fewer than two or non-finite components.
    fn from(v: [f64; N]) -> Self {
        Vector::new(v.to_vec()).expect("vector literal")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, c| m.max(c.abs()))
}

#[derive(Debug, Clone, PartialEq)]
pub enum NormKind {
    Det2,
    Gram,
    /// Expression in `x1..xm` and `y1..ym`.
    Dsl(Ast),
}

impl NormKind {
    pub fn name(&self) -> &'static str {
        match self {
            NormKind::Det2 => "det2",
            NormKind::Gram => "gram",
            NormKind::Dsl(_) => "dsl",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoNormSpace {
    dim: usize,
    kind: NormKind,
    basis: Vec<Vector>,
}

impl TwoNormSpace {
    /// `R^2` with the parallelogram area and the standard basis.
    pub fn det2() -> Self {
        Self {
            dim: 2,
            kind: NormKind::Det2,
            basis: standard_basis(2),
        }
    }

    pub fn gram(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            kind: NormKind::Gram,
            basis: standard_basis(dim),
        })
    }

    /// A space whose 2-norm is the expression `norm` over `x1..xm, y1..ym`.
    pub fn dsl(dim: usize, norm: &str) -> Result<Self> {
        check_dim(dim)?;
        let ast = Ast::parse(norm)?;
        if ast.arity() != 1 {
            return Err(Error::InvalidSpace("2-norm expression must be scalar".into()));
        }
        for var in ast.variables() {
            if slot(&var, dim).is_none() {
                return Err(Error::InvalidSpace(format!(
                    "unknown variable `{var}` in 2-norm expression (expected x1..x{dim}, y1..y{dim})"
                )));
            }
        }
        Ok(Self {
            dim,
            kind: NormKind::Dsl(ast),
            basis: standard_basis(dim),
        })
    }

    /// Replaces the standard basis. The vectors must number `dim` and be
    /// numerically independent.
    pub fn with_basis(mut self, basis: Vec<Vector>) -> Result<Self> {
        if basis.len() != self.dim {
            return Err(Error::InvalidSpace(format!(
                "basis has {} vectors, dimension is {}",
                basis.len(),
                self.dim
            )));
        }
        for b in &basis {
            self.check_dim_of(b.as_slice())?;
        }
        if !independent(&basis) {
            return Err(Error::InvalidSpace("basis vectors are linearly dependent".into()));
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &NormKind {
        &self.kind
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn check_dim_of(&self, v: &[f64]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `||x, y||` on raw component slices.
    pub fn norm_of(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        self.check_dim_of(x)?;
        self.check_dim_of(y)?;
        let value = match &self.kind {
            NormKind::Det2 => exact::det2(x[0], x[1], y[0], y[1]).abs(),
            NormKind::Gram => gram_area(x, y),
            NormKind::Dsl(ast) => dsl::eval(ast, &PairEnv { x, y })?.as_scalar()?,
        };
        if !(value >= 0.0) {
            return Err(Error::InvalidNorm {
                x: x.to_vec(),
                y: y.to_vec(),
                value,
            });
        }
        Ok(value)
    }

    /// Largest of `||v, e_i||` over the basis, with the index attaining it.
    pub(crate) fn max_over_basis(&self, v: &[f64]) -> Result<(f64, usize)> {
        let mut best = (0.0, 0);
        for (i, e) in self.basis.iter().enumerate() {
            let value = self.norm_of(v, e.as_slice())?;
            if value > best.0 {
                best = (value, i);
            }
        }
        Ok(best)
    }
}

/// `||x, y||`.
pub fn eval_two_norm(space: &TwoNormSpace, x: &Vector, y: &Vector) -> Result<f64> {
    space.norm_of(x.as_slice(), y.as_slice())
}

fn check_dim(dim: usize) -> Result<()> {
    if dim < 2 {
        return Err(Error::InvalidSpace(format!("dimension must be at least 2, got {dim}")));
    }
    Ok(())
}

pub(crate) fn standard_basis(dim: usize) -> Vec<Vector> {
    (0..dim).map(|i| Vector::unit(dim, i)).collect()
}

fn slot(name: &str, dim: usize) -> Option<(bool, usize)> {
    let first = name.chars().next()?;
    let index: usize = name[1..].parse().ok()?;
    if !(1..=dim).contains(&index) || name[1..].starts_with('0') {
        return None;
    }
    match first {
        'x' => Some((true, index - 1)),
        'y' => Some((false, index - 1)),
        _ => None,
    }
}

struct PairEnv<'a> {
    x: &'a [f64],
    y: &'a [f64],
}

impl Env for PairEnv<'_> {
    fn get(&self, name: &str) -> Option<f64> {
        match slot(name, self.x.len())? {
            (true, i) => Some(self.x[i]),
            (false, i) => Some(self.y[i]),
        }
    }
}

/// `sqrt` of the sum of squared minors `x_i y_j - x_j y_i`, scaled to avoid
/// overflow.
fn gram_area(x: &[f64], y: &[f64]) -> f64 {
    let m = x.len();
    let mut minors = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            minors.push(exact::det2(x[i], x[j], y[i], y[j]));
        }
    }
    let largest = max_abs(&minors);
    if largest == 0.0 || !largest.is_finite() {
        return largest;
    }
    let sum: f64 = minors.iter().map(|d| (d / largest) * (d / largest)).sum();
    largest * sum.sqrt()
}

/// Singular values `(smallest, largest)` of the `m x 2` matrix `[x y]`.
pub(crate) fn pair_singular_values(x: &[f64], y: &[f64]) -> (f64, f64) {
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(p, q)| p * q).sum::<f64>();
    let (a, b, c) = (dot(x, x), dot(x, y), dot(y, y));
    let half_gap = 0.5 * (a - c);
    let largest_sq = 0.5 * (a + c) + (half_gap * half_gap + b * b).sqrt();
    if largest_sq <= 0.0 {
        return (0.0, 0.0);
    }
    let largest = largest_sq.sqrt();
    // smallest * largest is the area, which the minors give accurately
    let smallest = gram_area(x, y) / largest;
    (smallest, largest)
}

/// Singular values of `[x/|x| y/|y|]`; `None` when either column is zero.
pub(crate) fn normalized_singular_values(x: &[f64], y: &[f64]) -> Option<(f64, f64)> {
    let length = |v: &[f64]| {
        let m = max_abs(v);
        if m == 0.0 {
            return 0.0;
        }
        m * v.iter().map(|c| (c / m) * (c / m)).sum::<f64>().sqrt()
    };
    let (lx, ly) = (length(x), length(y));
    if lx == 0.0 || ly == 0.0 {
        return None;
    }
    let ux: Vec<f64> = x.iter().map(|c| c / lx).collect();
    let uy: Vec<f64> = y.iter().map(|c| c / ly).collect();
    Some(pair_singular_values(&ux, &uy))
}

/// Numerical linear dependence of a pair: the smaller singular value of the
/// column-normalized matrix `[x/|x| y/|y|]` is below
/// `DEPENDENCE_TOLERANCE * (largest + 1)`. A zero vector is dependent with
/// everything.
pub fn dependent(x: &[f64], y: &[f64]) -> bool {
    match normalized_singular_values(x, y) {
        None => true,
        Some((smallest, largest)) => smallest < DEPENDENCE_TOLERANCE * (largest + 1.0),
    }
}

/// Modified Gram-Schmidt rank test on a family of vectors.
fn independent(family: &[Vector]) -> bool {
    let scale = family.iter().map(|v| v.as_slice().iter().map(|c| c * c).sum::<f64>().sqrt()).fold(0.0, f64::max);
    let mut done: Vec<Vec<f64>> = Vec::new();
    for v in family {
        let mut r = v.as_slice().to_vec();
        for q in &done {
            let proj: f64 = r.iter().zip(q).map(|(a, b)| a * b).sum();
            r.iter_mut().zip(q).for_each(|(a, b)| *a -= proj * b);
        }
        let len = r.iter().map(|c| c * c).sum::<f64>().sqrt();
        if len < DEPENDENCE_TOLERANCE * (scale + 1.0) {
            return false;
        }
        done.push(r.into_iter().map(|c| c / len).collect());
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn det2_examples() {
        let s = TwoNormSpace::det2();
        assert_eq!(eval_two_norm(&s, &v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap(), 1.0);
        assert_eq!(eval_two_norm(&s, &v(&[2.0, 3.0]), &v(&[4.0, 6.0])).unwrap(), 0.0);
        assert_eq!(eval_two_norm(&s, &v(&[1.0, 1.0]), &v(&[1.0, 2.0])).unwrap(), 1.0);
    }

    #[test]
    fn gram_dim3_axis_pair() {
        // independent route: Gram matrix [[1, 0], [0, 4]] has determinant 4
        let s = TwoNormSpace::gram(3).unwrap();
        assert_eq!(eval_two_norm(&s, &v(&[1.0, 0.0, 0.0]), &v(&[0.0, 2.0, 0.0])).unwrap(), 2.0);
    }

    #[test]
    fn dimension_mismatch() {
        let s = TwoNormSpace::det2();
        let err = eval_two_norm(&s, &v(&[1.0, 0.0, 0.0]), &v(&[0.0, 1.0])).unwrap_err();
        assert!(matches!(err, Error::Dimension { expected: 2, got: 3 }));
    }

    #[test]
    fn negative_dsl_norm_is_rejected() {
        let s = TwoNormSpace::dsl(2, "x1*y2 - x2*y1").unwrap();
        let err = eval_two_norm(&s, &v(&[0.0, 1.0]), &v(&[1.0, 0.0])).unwrap_err();
        assert!(matches!(err, Error::InvalidNorm { value, .. } if value == -1.0));
    }

    #[test]
    fn dsl_variables_are_checked() {
        assert!(TwoNormSpace::dsl(2, "abs(x1*y3)").is_err());
        assert!(TwoNormSpace::dsl(2, "abs(z1)").is_err());
        assert!(TwoNormSpace::dsl(2, "(x1, y1)").is_err());
        assert!(TwoNormSpace::dsl(2, "abs(x1*y2 - x2*y1)").is_ok());
    }

    #[test]
    fn vector_invariants() {
        assert!(Vector::new(vec![1.0]).is_err());
        assert!(Vector::new(vec![1.0, f64::NAN]).is_err());
        assert!(Vector::new(vec![1.0, f64::INFINITY]).is_err());
        let json: std::result::Result<Vector, _> = serde_json::from_str("[1.0]");
        assert!(json.is_err());
    }

    #[test]
    fn basis_validation() {
        let s = TwoNormSpace::det2();
        assert!(s.clone().with_basis(vec![v(&[1.0, 1.0]), v(&[1.0, -1.0])]).is_ok());
        assert!(s.clone().with_basis(vec![v(&[1.0, 2.0]), v(&[2.0, 4.0])]).is_err());
        assert!(s.with_basis(vec![v(&[1.0, 0.0])]).is_err());
    }

    #[test]
    fn dependence_test() {
        assert!(dependent(&[1.0, 1.0], &[2.0, 2.0]));
        assert!(dependent(&[0.0, 0.0, 0.0], &[1.0, 2.0, 3.0]));
        assert!(!dependent(&[1.0, 0.0], &[0.0, 1.0]));
        assert!(!dependent(&[1.0, 0.0], &[1.0, 1e-6]));
        assert!(dependent(&[1.0, 0.0], &[1.0, 1e-12]));
        // magnitude mismatch alone does not make a pair dependent
        assert!(!dependent(&[0.02865500037034357, 0.0], &[549.9246826132656, -0.010023212412521756]));
        assert!(dependent(&[1e-3, 1e-3], &[1e3, 1e3]));
    }

    #[test]
    fn singular_values_of_orthogonal_pair() {
        let (lo, hi) = pair_singular_values(&[3.0, 0.0, 0.0], &[0.0, 2.0, 0.0]);
        assert!((lo - 2.0).abs() < 1e-15 && (hi - 3.0).abs() < 1e-15);
    }
}
