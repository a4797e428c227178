// Ward continuity forces sequential continuity: if x_n -> L, the woven
// sequence x_1, L, x_2, L, ... is quasi-Cauchy, so its image is too, and
// the image steps f(x_k) - f(L) must shrink.

use twonorm::seq::{classify_quasi_cauchy, interleave};
use twonorm::theorems::verify_ward_implies_sequential;
use twonorm::{FuncSpec, SeqSpec, ToleranceSchedule, TwoNormSpace, Vector};

fn main() -> twonorm::Result<()> {
    let space = TwoNormSpace::det2();
    let sched = ToleranceSchedule::new(500, 1500, 0.01)?;
    let x = SeqSpec::parse("(2 + 1/n, sin(1/n))")?.named("x");
    let limit = Vector::new(vec![2.0, 0.0])?;

    let woven = interleave(&x, &limit)?;
    for n in 1..=4 {
        println!("xi_{n} = {:?}", woven.term(n)?);
    }
    let v = classify_quasi_cauchy(&space, &woven, &sched.interleaved())?;
    println!("woven quasi-Cauchy on {:?}: {:?}", v.window, v.status);

    let qc = [SeqSpec::parse("(cos(sqrt(n)/10), sin(sqrt(n)/10))")?.named("circle")];
    for text in ["(x1 + x2, x1 - x2)", "(sin(x1), x1*x2)", "(sign(x1 - 2), x2)"] {
        let f = FuncSpec::parse(text, 2)?;
        let r = verify_ward_implies_sequential(&space, &f, &qc, &[(x.clone(), limit.clone())], &sched, 0.05)?;
        println!("{text:<22} {:?}", r.status);
        for note in &r.notes {
            println!("    {note}");
        }
    }
    Ok(())
}
