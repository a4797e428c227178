//! The two built-in 2-norms and the norms derived from them.
//!
//! `det2` is the area of the parallelogram spanned by two vectors of the
//! plane. `gram` extends it to `R^m` as the root of the Gram determinant.

use twonorm::norm::{eval_max_basis_norm, eval_sum_norm, eval_two_norm};
use twonorm::{TwoNormSpace, Vector};

fn v(c: &[f64]) -> Vector {
    Vector::new(c.to_vec()).unwrap()
}

fn main() -> twonorm::Result<()> {
    let plane = TwoNormSpace::det2();
    for (x, y) in [([1.0, 0.0], [0.0, 1.0]), ([2.0, 3.0], [4.0, 6.0]), ([1.0, 1.0], [1.0, 2.0])] {
        println!("det2 {x:?} {y:?} = {}", eval_two_norm(&plane, &v(&x), &v(&y))?);
    }

    let space = TwoNormSpace::gram(3)?;
    let a = eval_two_norm(&space, &v(&[1.0, 0.0, 0.0]), &v(&[0.0, 2.0, 0.0]))?;
    println!("gram(3) e1, 2e2 = {a}");

    // Sum of two anchored norms, then the max over the basis.
    let (y0, z0) = (v(&[1.0, 0.0]), v(&[0.0, 1.0]));
    let x = v(&[3.0, 4.0]);
    println!("||x||_(y0,z0) = {}", eval_sum_norm(&plane, &y0, &z0, &x)?);
    println!("||x||_inf     = {}", eval_max_basis_norm(&plane, &x)?);

    // Anchors that span nothing are refused.
    match eval_sum_norm(&plane, &y0, &v(&[2.0, 0.0]), &x) {
        Err(e) => println!("dependent anchors: {e}"),
        Ok(n) => println!("unexpected: {n}"),
    }
    Ok(())
}
