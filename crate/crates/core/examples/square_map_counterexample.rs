//! `f(x, y) = (x², y²)` maps convergent sequences to convergent ones but
//! sends the creeping `(√n, √n)` to `(n, n)`. Against `w = (1, 2)` every
//! image step measures exactly `||(1,1),(1,2)|| = 1`.

use std::time::Instant;

use twonorm::probes::{probe_image_delta, probe_sequential, probe_ward};
use twonorm::{FuncSpec, SeqSpec, ToleranceSchedule, TwoNormSpace, Vector};

fn main() -> twonorm::Result<()> {
    let t0 = Instant::now();
    let space = TwoNormSpace::det2();
    let f = FuncSpec::parse("(x1^2, x2^2)", 2)?;
    let sched = ToleranceSchedule::new(1000, 2000, 0.02)?;
    let root = SeqSpec::parse("(sqrt(n), sqrt(n))")?.named("root");

    let ward = probe_ward(&space, &f, std::slice::from_ref(&root), &sched, 0.02)?;
    println!("ward: {:?}", ward.status);
    if let Some(w) = ward.witnesses.first() {
        println!("  image step {} at n={:?} along {:?}", w.value, w.index, w.direction);
    }

    let w = Vector::new(vec![1.0, 2.0])?;
    let exact = probe_image_delta(&space, &f, &[root], &w, &sched, 1.0, 1e-12)?;
    println!("every ||Δf(x_n), (1,2)|| = 1 within 1e-12: {:?}", exact.status);

    let toward = SeqSpec::parse("(1 + 1/n, 1 - 1/n)")?.named("toward-one");
    let seq = probe_sequential(&space, &f, &[(toward, Vector::new(vec![1.0, 1.0])?)], &sched, 0.02)?;
    println!("sequential: {:?}", seq.status);
    println!("{:.1?}", t0.elapsed());
    Ok(())
}
