//! Bounded sequences have quasi-Cauchy subsequences. The extractor bisects
//! the bounding box and follows the fuller half.

use twonorm::seq::{classify_quasi_cauchy, extract_quasi_cauchy_subsequence};
use twonorm::{SeqSpec, ToleranceSchedule, TwoNormSpace, Vector};

fn main() -> twonorm::Result<()> {
    let space = TwoNormSpace::det2();
    let jump = SeqSpec::parse("(cos(n), sin(2*n))")?.named("jump");
    let sched = ToleranceSchedule::new(1, 3000, 0.25)?;

    println!("jump itself: {:?}", classify_quasi_cauchy(&space, &jump, &sched)?.status);
    let Some(idx) = extract_quasi_cauchy_subsequence(&space, &jump, &sched, 2.0)? else {
        println!("no subsequence found");
        return Ok(());
    };
    println!("kept {} of {} indices, first {:?}", idx.len(), sched.end() - sched.start() + 1, &idx[..idx.len().min(8)]);

    let terms = idx.iter().map(|&n| Vector::new(jump.term(n).unwrap())).collect::<Result<Vec<_>, _>>()?;
    let sub = SeqSpec::from_terms(terms)?.named("extracted");
    let check = ToleranceSchedule::new(1, idx.len() as u64, 0.25)?;
    let v = classify_quasi_cauchy(&space, &sub, &check)?;
    println!("extracted: {:?}, worst step {:.4}", v.status, v.worst_value);

    // A tight tolerance may be out of reach for a finite window.
    let tight = sched.with_epsilon(1e-6)?;
    println!("at 1e-6: {:?}", extract_quasi_cauchy_subsequence(&space, &jump, &tight, 2.0)?.map(|v| v.len()));
    Ok(())
}
