//! Correctly rounded evaluation of 2x2 determinants.

/// Sum of `terms`, correctly rounded to nearest-even.
///
/// Shewchuk's partials followed by the round-half-even correction used by
/// Python's `math.fsum`. Terms must be finite and the sum must not overflow.
pub(crate) fn exact_sum(terms: &[f64]) -> f64 {
    let mut partials: Vec<f64> = Vec::with_capacity(terms.len());
    for &term in terms {
        let mut x = term;
        let mut kept = 0;
        for j in 0..partials.len() {
            let mut y = partials[j];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                partials[kept] = lo;
                kept += 1;
            }
            x = hi;
        }
        partials.truncate(kept);
        partials.push(x);
    }

    let mut n = partials.len();
    if n == 0 {
        return 0.0;
    }
    n -= 1;
    let mut hi = partials[n];
    let mut lo = 0.0;
    while n > 0 {
        let x = hi;
        let y = partials[n - 1];
        n -= 1;
        hi = x + y;
        let yr = hi - x;
        lo = y - yr;
        if lo != 0.0 {
            break;
        }
    }
    if n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) || (lo > 0.0 && partials[n - 1] > 0.0)) {
        let y = lo * 2.0;
        let x = hi + y;
        if y == x - hi {
            hi = x;
        }
    }
    hi
}

/// `a*d - b*c`, correctly rounded.
pub(crate) fn det2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    // a single nonzero product is already correctly rounded
    if a == 0.0 || d == 0.0 {
        return -(b * c);
    }
    if b == 0.0 || c == 0.0 {
        return a * d;
    }
    let p = a * d;
    let q = b * c;
    let p_err = a.mul_add(d, -p);
    let q_err = b.mul_add(c, -q);
    if !p.is_finite() || !q.is_finite() {
        return p - q;
    }
    exact_sum(&[p, -q, p_err, -q_err])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_cancels_exactly() {
        assert_eq!(exact_sum(&[1e100, 1.0, -1e100]), 1.0);
        assert_eq!(exact_sum(&[0.1; 10]), 1.0);
        assert_eq!(exact_sum(&[]), 0.0);
    }

    #[test]
    fn half_even_tie_is_resolved_by_tail() {
        // 1 + 2^-53 is a tie; the tiny positive tail pushes it up
        let tie = 2f64.powi(-53);
        assert_eq!(exact_sum(&[1.0, tie]), 1.0);
        assert_eq!(exact_sum(&[1.0, tie, 1e-300]), 1.0 + f64::EPSILON);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det2(1.0, 0.0, 0.0, 1.0), 1.0);
        assert_eq!(det2(2.0, 3.0, 4.0, 6.0), 0.0);
        assert_eq!(det2(1.0, 1.0, 1.0, 2.0), 1.0);
        // naive evaluation loses everything here
        let a = 1.0 + f64::EPSILON;
        let naive = a * a - 1.0 * (1.0 + 2.0 * f64::EPSILON);
        assert_eq!(naive, 0.0);
        assert_eq!(det2(a, 1.0, 1.0 + 2.0 * f64::EPSILON, a), f64::EPSILON * f64::EPSILON);
    }
}
