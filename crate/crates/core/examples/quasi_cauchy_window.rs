//! `(√n, √n)` creeps: consecutive terms get arbitrarily close although
//! the sequence diverges. Its subsequence at the squares, `(n, n)`, keeps
//! unit steps and is not quasi-Cauchy.

use twonorm::seq::{classify_cauchy, classify_quasi_cauchy};
use twonorm::{SeqSpec, ToleranceSchedule, TwoNormSpace};

fn main() -> twonorm::Result<()> {
    let space = TwoNormSpace::det2();
    let root = SeqSpec::parse("(sqrt(n), sqrt(n))")?.named("root");
    let squares = root.clone().with_index_map("n^2")?.named("root at squares");

    let sched = ToleranceSchedule::new(2501, 5000, 0.01)?;
    let qc = classify_quasi_cauchy(&space, &root, &sched)?;
    let cauchy = classify_cauchy(&space, &root, &sched)?;
    println!("root  quasi-Cauchy {:?} worst {:.6}", qc.status, qc.worst_value);
    println!("root  Cauchy       {:?} worst {:.3} at ({}, {:?})", cauchy.status, cauchy.worst_value, cauchy.witness_index, cauchy.witness_partner);

    let coarse = ToleranceSchedule::new(1, 200, 0.5)?;
    let sub = classify_quasi_cauchy(&space, &squares, &coarse)?;
    println!(
        "squares quasi-Cauchy {:?} worst {} at n={} direction {:?}",
        sub.status, sub.worst_value, sub.witness_index, sub.witness_direction
    );
    Ok(())
}
