//! Explicit nonnegative decompositions of effective classes.

use schubert_cones::blowup::{BlowupClass, BlowupCtx};
use schubert_cones::chow::GrassCtx;
use schubert_cones::cones;

fn main() -> Result<(), schubert_cones::Error> {
    println!("{}", cones::lemma41_decompose(3, 5, 2, 2)?);

    let b = BlowupCtx::new(GrassCtx::new(2, 5)?, 3);
    println!("{}", cones::lemma42_decompose(&BlowupClass::curve(b, 5, &[2, 2, 1])?)?);

    // curves on a quadric surface blown up at seven points
    println!("{}", cones::quadric_curve_decompose(6, &[2, 1, 1, 1, 1, 1, 0])?);
    match cones::quadric_curve_decompose(6, &[2, 2, 2, 1, 1, 1, 1]) {
        Ok(d) => println!("{d}"),
        Err(e) => println!("rejected: {e}"),
    }

    println!("{}", cones::g25_threecycle_decompose(2, 1, &[3, 1])?);
    Ok(())
}
