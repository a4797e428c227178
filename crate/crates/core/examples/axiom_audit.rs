use twonorm::norm::check_axioms;
use twonorm::TwoNormSpace;

fn report(label: &str, space: &TwoNormSpace) -> twonorm::Result<()> {
    let r = check_axioms(space, 10_000, 42, 1e-9)?;
    println!("{label}: {} samples", r.samples_tested);
    for a in &r.axioms {
        println!("  {} {:<12} worst {:.3e}", if a.passed { "ok  " } else { "FAIL" }, a.name, a.worst_violation);
        if let Some(w) = &a.witness {
            println!("       witness x={:?} y={:?} value={}", w.x, w.y, w.value);
        }
    }
    Ok(())
}

fn main() -> twonorm::Result<()> {
    report("det2", &TwoNormSpace::det2())?;
    for dim in 2..=5 {
        report(&format!("gram({dim})"), &TwoNormSpace::gram(dim)?)?;
    }
    // symmetric and homogeneous, yet ||(1,1),(1,1)|| = 2
    report("planted", &TwoNormSpace::dsl(2, "abs(x1*y2 + x2*y1)")?)?;
    Ok(())
}
