//! Products in `A*(G(2,5))`: the full Littlewood-Richardson product, Pieri,
//! and the Giambelli expansion of a class in special classes.

use schubert_cones::chow::{self, ChowClass, GrassCtx};

fn main() -> Result<(), schubert_cones::Error> {
    let ctx = GrassCtx::new(2, 5)?;
    let s = |p: &[usize]| ChowClass::schubert(ctx, &ctx.partition(p).unwrap());

    let square = chow::multiply(&s(&[2, 1])?, &s(&[1])?)?;
    println!("sigma_21 * sigma_1 = {square}");

    let mu = ctx.partition(&[1])?;
    println!("sigma_2 * sigma_1 = {}", chow::pieri(ctx, 2, &mu)?);

    let lambda = ctx.partition(&[2, 1])?;
    let poly = chow::giambelli(&lambda);
    println!("sigma_21 = {poly} = {}", poly.evaluate(ctx)?);

    let dual = lambda.dual();
    println!("sigma_{lambda} . sigma_{dual} = {}", chow::pair(&s(lambda.parts())?, &s(dual.parts())?)?);
    Ok(())
}
