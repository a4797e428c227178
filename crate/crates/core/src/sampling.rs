//! Seeded, reproducible sampling of vectors and scalars.
//!
//! Components are drawn log-uniformly in magnitude over `[1e-3, 1e3]` with a
//! random sign, except that one draw in four is a special value from
//! `{0, 1, -1}`. The generator is ChaCha8, so a seed yields the same stream
//! on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MIN_MAGNITUDE: f64 = 1e-3;
pub const MAX_MAGNITUDE: f64 = 1e3;
const SPECIALS: [f64; 3] = [0.0, 1.0, -1.0];

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn component(&mut self) -> f64 {
        if self.rng.gen_ratio(1, 4) {
            return SPECIALS[self.rng.gen_range(0..SPECIALS.len())];
        }
        let exponent = self
            .rng
            .gen_range(MIN_MAGNITUDE.log10()..=MAX_MAGNITUDE.log10());
        let magnitude = 10f64.powf(exponent);
        if self.rng.gen() {
            magnitude
        } else {
            -magnitude
        }
    }

    /// Scalars use the same distribution as components, so 0 and negative
    /// values appear regularly.
    pub fn scalar(&mut self) -> f64 {
        self.component()
    }

    pub fn vector(&mut self, dim: usize) -> Vec<f64> {
        (0..dim).map(|_| self.component()).collect()
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        if lo == hi {
            return lo;
        }
        self.rng.gen_range(lo..hi)
    }

    pub fn in_box(&mut self, lo: &[f64], hi: &[f64]) -> Vec<f64> {
        lo.iter().zip(hi).map(|(&l, &h)| self.uniform(l, h)).collect()
    }

    /// A point whose components are each uniform in `[-1, 1]`.
    pub fn direction(&mut self, dim: usize) -> Vec<f64> {
        (0..dim).map(|_| self.rng.gen_range(-1.0..=1.0)).collect()
    }

    pub fn unit_interval(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..100 {
            assert_eq!(a.vector(3), b.vector(3));
        }
    }

    #[test]
    fn magnitudes_in_range_and_specials_present() {
        let mut s = Sampler::new(1);
        let draws: Vec<f64> = (0..4000).map(|_| s.component()).collect();
        for &v in &draws {
            assert!(v == 0.0 || (MIN_MAGNITUDE..=MAX_MAGNITUDE).contains(&v.abs()), "{v}");
        }
        for special in SPECIALS {
            assert!(draws.contains(&special));
        }
        assert!(draws.iter().any(|&v| v < -1.0));
        assert!(draws.iter().any(|&v| v.abs() < 0.01 && v != 0.0));
    }
}
