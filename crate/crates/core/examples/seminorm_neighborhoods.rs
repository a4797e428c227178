//! Semi-norms `p_z(x) = ||x, z||` vanish along `z`, so a single `U_{z,ε}` is
//! an infinite strip. Intersections over independent directions are bounded.

use twonorm::norm::{eval_seminorm, in_neighborhood};
use twonorm::{TwoNormSpace, Vector};

fn main() -> twonorm::Result<()> {
    let space = TwoNormSpace::det2();
    let z = Vector::new(vec![1.0, 1.0])?;
    let origin = Vector::zero(2);

    for t in [0.0, 1.0, 1e6] {
        let x = z.scale(t);
        println!("p_z({t} z) = {}", eval_seminorm(&space, &z, &x)?);
    }

    let strip = [(z.clone(), 0.5)];
    let boxed = [(Vector::unit(2, 0), 0.5), (Vector::unit(2, 1), 0.5)];
    for x in [vec![0.2, 0.1], vec![100.0, 100.2], vec![0.7, 0.0]] {
        let x = Vector::new(x)?;
        println!(
            "{:?}: strip {} box {}",
            x.as_slice(),
            in_neighborhood(&space, &x, &origin, &strip)?,
            in_neighborhood(&space, &x, &origin, &boxed)?
        );
    }
    Ok(())
}
