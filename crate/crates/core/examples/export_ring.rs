//! Writes the multiplication table of `A*(G(2,4))` to a temporary file and
//! reads it back into a product cache.

use schubert_cones::chow::GrassCtx;
use schubert_cones::cli::ring;

fn main() -> Result<(), schubert_cones::Error> {
    let ctx = GrassCtx::new(2, 4)?;
    let path = std::env::temp_dir().join(format!("G2_4_{}.json", std::process::id()));
    let table = ring::write_ring(ctx, ring::DEFAULT_CAP, &path)?;
    println!("{} classes, {} products -> {}", table["classes"], table["products"].as_array().map_or(0, Vec::len), path.display());
    let cache = ring::read_ring(&path)?;
    println!("re-imported {} entries; round trip ok: {}", cache.len(), ring::round_trip_matches(&table)?);
    std::fs::remove_file(&path).ok();
    Ok(())
}
