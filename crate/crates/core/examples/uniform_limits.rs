// f_n -> f uniformly carries ward continuity over to f. When a hypothesis
// is not met (the last family has f_1 = (x1 + x1*x2, x2), which is not ward
// on the creeping input) the theorem is reported inconclusive, not failed.

use twonorm::theorems::{check_uniform_convergence, verify_uniform_limit_ward};
use twonorm::{FuncFamilySpec, FuncSpec, SeqSpec, ToleranceSchedule, TwoNormSpace, Vector};

fn main() -> twonorm::Result<()> {
    let space = TwoNormSpace::det2();
    let sched = ToleranceSchedule::new(2501, 2600, 0.01)?;
    let battery = [
        SeqSpec::parse("(sqrt(n), 1/n)")?.named("creep"),
        SeqSpec::parse("(sin(sqrt(n)), cos(sqrt(n)))")?.named("turn"),
    ];
    let mut samples = Vec::new();
    for s in &battery {
        for n in (sched.start()..=sched.end()).step_by(10) {
            samples.push(Vector::new(s.term(n)?)?);
        }
    }

    let cases = [
        ("(x1 + 1/n, x2)", "(x1, x2)"),
        ("(sin(x1) + 1/n, x2*(1 + 1/n^2))", "(sin(x1), x2)"),
        ("(x1 + x2*x1/n, x2)", "(x1, x2)"),
    ];
    for (family, limit) in cases {
        let fam = FuncFamilySpec::parse(family, 2)?;
        let f = FuncSpec::parse(limit, 2)?;
        let u = check_uniform_convergence(&space, &fam, &f, &samples, &sched.with_epsilon(0.05 / 3.0)?)?;
        let r = verify_uniform_limit_ward(&space, &fam, &f, &battery, &sched, 0.05, &[])?;
        println!("{family:<34} uniform {:?}  theorem {:?}", u.status, r.status);
        for note in &r.notes {
            println!("    {note}");
        }
    }
    Ok(())
}
