//! Intersection numbers on `G(2,4)` blown up at three points.

use schubert_cones::blowup::{self, BlowupClass, BlowupCtx, Grading};
use schubert_cones::chow::{ChowClass, GrassCtx};

fn main() -> Result<(), schubert_cones::Error> {
    let ctx = GrassCtx::new(2, 4)?;
    let b = BlowupCtx::new(ctx, 3);

    // a curve of degree 5 through the points with multiplicities 2, 1, 1
    let curve = BlowupClass::curve(b, 5, &[2, 1, 1])?;
    let divisor = BlowupClass::divisor(b, 2, &[1, 1, 0])?;
    println!("({curve}) . ({divisor}) = {}", blowup::pair_blowup(&curve, &divisor)?);

    let e = BlowupClass::exceptional(b, Grading::Codimension(1), 1, 1)?;
    let whole = BlowupClass::dim(b, ChowClass::unit(ctx), vec![0.into(); 3])?;
    println!("E_1^4 = {}", blowup::divisor_power_pair(&e, 4, &whole)?);

    let h = BlowupClass::hyperplane(b)?;
    println!("(H - E_1)^2 = {}", blowup::divisor_power(&h.checked_add(&e.scaled(&(-1).into()))?, 2)?);
    Ok(())
}
