use twonorm::probes::{escalate_u_continuity, probe_u_continuity, DomainBox};
use twonorm::{FuncSpec, TwoNormSpace};

fn main() -> twonorm::Result<()> {
    let space = TwoNormSpace::det2();
    let domain = DomainBox::symmetric(2, 2.0)?;
    let grid = [0.1, 0.03, 0.01, 0.003, 0.001];

    for text in ["(x1, x2)", "(2*x1 + 1, x1 - x2)", "(x1^2, x2^2)", "(sign(x1), x2)"] {
        let f = FuncSpec::parse(text, 2)?;
        let r = probe_u_continuity(&space, &f, &domain, 0.05, &grid, 2000, 42)?;
        println!("{text:<22} {:?} largest δ {:?}", r.status, r.parameters.delta);
    }

    // A pass means no counterexample turned up. Pairs straddling the jump of
    // sign get rarer as δ shrinks, so sparse sampling can miss it.
    let step = FuncSpec::parse("(sign(x1), x2)", 2)?;
    for samples in [2000, 20_000, 200_000] {
        let r = probe_u_continuity(&space, &step, &domain, 0.05, &grid, samples, 42)?;
        println!("sign, {samples:>6} pairs: {:?} largest δ {:?}", r.status, r.parameters.delta);
    }

    // The square map needs ever smaller δ as the box grows.
    let square = FuncSpec::parse("(x1^2, x2^2)", 2)?;
    for (b, d) in escalate_u_continuity(&space, &square, &[1.0, 4.0, 16.0, 64.0], 0.05, &grid, 2000, 42)? {
        println!("box ±{b:<4} δ {d:?}");
    }
    Ok(())
}
