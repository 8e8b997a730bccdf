//! Plucker degrees of small Grassmannians, by the hook-length formula and by
//! repeated Pieri multiplication by `sigma_1`.

use schubert_cones::chow::{self, GrassCtx};

fn main() -> Result<(), schubert_cones::Error> {
    for n in 2..=8 {
        let row: Vec<String> = (1..n)
            .map(|k| {
                let ctx = GrassCtx::new(k, n).unwrap();
                assert_eq!(chow::degree_closed_form(ctx), chow::degree_by_pieri(ctx).unwrap());
                chow::degree(ctx).unwrap().to_string()
            })
            .collect();
        println!("n = {n}: {}", row.join(" "));
    }
    Ok(())
}
