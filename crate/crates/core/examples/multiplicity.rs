//! Multiplicities of Schubert varieties along Schubert cells.

use schubert_cones::chow::GrassCtx;
use schubert_cones::multiplicity::{max_point_multiplicity, rz_multiplicity};

fn main() -> Result<(), schubert_cones::Error> {
    let ctx = GrassCtx::new(2, 5)?;
    let lambda = ctx.partition(&[2, 1])?;
    for mu in ctx.partitions(3).into_iter().chain(ctx.partitions(4)).chain(ctx.partitions(5)).chain(ctx.partitions(6)) {
        if let Ok(m) = rz_multiplicity(ctx, &lambda, &mu) {
            println!("mult of Sigma_{lambda} along the cell {mu}: {m}");
        }
    }
    for k in 2..=4 {
        let ctx = GrassCtx::new(k, 2 * k)?;
        println!("G({k},{}): divisor at the point has multiplicity {}", 2 * k, max_point_multiplicity(ctx, &ctx.partition(&[1])?)?);
    }
    Ok(())
}
