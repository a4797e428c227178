//! Oracles shared by the integration tests. Nothing here calls into the
//! crate's own arithmetic.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

/// Exact `|x1*y2 - x2*y1|`.
pub fn det2_exact(x: [f64; 2], y: [f64; 2]) -> BigRational {
    (rational(x[0]) * rational(y[1]) - rational(x[1]) * rational(y[0])).abs()
}

/// Exact Gram determinant `<x,x><y,y> - <x,y>^2`.
pub fn gram_det_exact(x: &[f64], y: &[f64]) -> BigRational {
    let dot = |a: &[f64], b: &[f64]| {
        a.iter().zip(b).fold(BigRational::zero(), |acc, (p, q)| acc + rational(*p) * rational(*q))
    };
    let xy = dot(x, y);
    dot(x, x) * dot(y, y) - xy.clone() * xy
}

fn bits(n: &BigInt) -> i64 {
    n.bits() as i64
}

/// Round to nearest, ties to even. Normal range only.
pub fn round_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();
    let quotient = |e: i64| -> (BigInt, BigInt, BigInt) {
        let (n, d) = if e >= 0 { (num.clone(), &den << e as usize) } else { (&num << (-e) as usize, den.clone()) };
        (&n / &d, &n % &d, d)
    };
    let mut e = bits(&num) - bits(&den) - 53;
    let (q, rem, d) = loop {
        let (q, rem, d) = quotient(e);
        if bits(&q) > 53 {
            e += 1;
        } else if bits(&q) < 53 {
            e -= 1;
        } else {
            break (q, rem, d);
        }
    };
    assert!(e > -1074 + 53 && e < 1023 - 53, "outside the normal range");
    let twice: BigInt = &rem << 1usize;
    let odd = q.bit(0);
    let q = if twice > d || (twice == d && odd) { q + 1 } else { q };
    let (_, digits) = q.to_u64_digits();
    let mantissa = digits[0] as f64;
    let v = mantissa * 2f64.powi(e as i32);
    if negative {
        -v
    } else {
        v
    }
}

/// Correctly rounded square root of a non-negative rational, through
/// integer square root of a scaled value.
pub fn sqrt_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    assert!(!r.is_negative());
    // floor(sqrt(r * 4^k)) has about 120 bits; more than enough for a
    // faithful then nearest rounding.
    let num = r.numer();
    let den = r.denom();
    let k = ((240 - (bits(num) - bits(den))) / 2).max(0) as usize;
    let scaled: BigInt = (num << (2 * k)) / den;
    let root = scaled.sqrt();
    // A sticky bit keeps an inexact root off the rounding midpoints.
    let exact = &root * &root == scaled && &scaled * den == num << (2 * k);
    let (root, k) = if exact { (root, k) } else { ((root << 1usize) + 1, k + 1) };
    round_to_f64(&BigRational::new(root, BigInt::from(1) << k))
}

/// Brute-force 2-norm on `R^m`: Gram-Schmidt in exact arithmetic is not
/// possible with roots, so compute the Gram determinant exactly and take one
/// rounded square root.
pub fn gram_norm_oracle(x: &[f64], y: &[f64]) -> f64 {
    sqrt_to_f64(&gram_det_exact(x, y))
}

/// Rational-valued inputs `p / q` with small integers, plus some plain
/// doubles.
pub fn rational_inputs(seed: u64, count: usize) -> Vec<([f64; 2], [f64; 2])> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = |rng: &mut ChaCha8Rng| -> f64 {
        if rng.gen_bool(0.8) {
            let p: i64 = rng.gen_range(-10_000..=10_000);
            let q: i64 = rng.gen_range(1..=997);
            p as f64 / q as f64
        } else {
            rng.gen_range(-1e3..1e3)
        }
    };
    (0..count)
        .map(|_| ([one(&mut rng), one(&mut rng)], [one(&mut rng), one(&mut rng)]))
        .collect()
}

/// Every DSL string in the shipped TOML files: `(file, key, source)`.
pub fn shipped_dsl_strings() -> Vec<(String, String, String)> {
    let mut out = Vec::new();
    for path in shipped_tomls() {
        let text = std::fs::read_to_string(&path).unwrap();
        let value: toml::Value = toml::from_str(&text).unwrap();
        walk(&path, &value, &mut out);
    }
    out
}

pub fn shipped_tomls() -> Vec<PathBuf> {
    let mut files = Vec::new();
    for dir in ["fixtures", "configs"] {
        for entry in std::fs::read_dir(crate_dir().join(dir)).unwrap() {
            let p = entry.unwrap().path();
            if p.extension().is_some_and(|e| e == "toml") {
                files.push(p);
            }
        }
    }
    files.sort();
    files
}

fn walk(path: &Path, v: &toml::Value, out: &mut Vec<(String, String, String)>) {
    if let toml::Value::Table(t) = v {
        for (k, child) in t {
            match (k.as_str(), child) {
                ("expr" | "family" | "index_map" | "norm", toml::Value::String(s)) => {
                    out.push((path.file_name().unwrap().to_string_lossy().into_owned(), k.clone(), s.clone()))
                }
                _ => walk(path, child, out),
            }
        }
    }
}

