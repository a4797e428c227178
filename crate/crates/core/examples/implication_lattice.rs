//! Four continuity properties on a battery of inputs:
//!
//! 1. quasi-Cauchy to quasi-Cauchy
//! 2. quasi-Cauchy to convergent
//! 3. convergent to convergent, with the right limit
//! 4. convergent to quasi-Cauchy
//!
//! The verdict vector must respect 2 ⇒ 1 ⇒ 4 and 2 ⇒ 3 ⇒ 4.

use twonorm::theorems::{run_implication_matrix, Battery};
use twonorm::{FuncSpec, SeqSpec, ToleranceSchedule, TwoNormSpace, Vector};

fn main() -> twonorm::Result<()> {
    let space = TwoNormSpace::det2();
    let sched = ToleranceSchedule::new(1000, 2000, 0.02)?;
    let battery = Battery {
        quasi_cauchy: vec![
            SeqSpec::parse("(sqrt(n), sqrt(n))")?.named("root"),
            SeqSpec::parse("(cos(sqrt(n)), sin(sqrt(n)))")?.named("circle"),
            SeqSpec::parse("(1/n, 1/n^2)")?.named("settle"),
        ],
        convergent: vec![
            (SeqSpec::parse("(1 + 1/n, 1 - 1/n)")?.named("toward-one"), Vector::new(vec![1.0, 1.0])?),
            (SeqSpec::parse("((-1)^n/n, 0)")?.named("wobble"), Vector::zero(2)),
        ],
    };
    for text in ["(x1, x2)", "(0*x1 + 3, 0*x2)", "(x1^2, x2^2)", "(sign(x1), x2)", "(sin(x1), cos(x2))"] {
        let f = FuncSpec::parse(text, 2)?;
        let m = run_implication_matrix(&space, &f, &battery, &sched, 0.04)?;
        let v: Vec<_> = m.verdicts.iter().map(|s| format!("{s:?}")).collect();
        println!("{text:<20} [{}] consistent={}", v.join(", "), m.consistent);
    }
    Ok(())
}
