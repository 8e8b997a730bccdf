//! Export and re-import of full multiplication tables.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use super::json::{self as enc, parse_partition, parse_terms};
use crate::chow::{GrassCtx, ProductCache};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 16;

/// Environment variable naming a directory of exported tables.
pub const CACHE_DIR_VAR: &str = "SCHUBERT_CACHE_DIR";

pub fn check_cap(ctx: GrassCtx, cap: usize) -> Result<()> {
    if ctx.dim() > cap {
        return Err(Error::OutOfRange(format!("dim G({},{}) = {} exceeds the export cap {cap}", ctx.k(), ctx.n(), ctx.dim())));
    }
    Ok(())
}

/// The table of every product `sigma_a * sigma_b` with `a <= b` in basis
/// order, read through `cache` (which fills any missing entry).
pub fn ring_table(cache: &ProductCache) -> Result<Value> {
    let ctx = cache.ctx();
    let basis: Vec<_> = (0..=ctx.dim()).map(|m| ctx.partitions(m)).collect();
    let flat: Vec<_> = basis.iter().flatten().cloned().collect();
    let mut products = Vec::new();
    for (i, a) in flat.iter().enumerate() {
        for b in &flat[i..] {
            if a.size() + b.size() > ctx.dim() {
                continue;
            }
            let p = cache.schubert_product(a, b)?;
            products.push(json!({"a": enc::partition(a), "b": enc::partition(b), "product": enc::class(&p)["terms"]}));
        }
    }
    Ok(json!({
        "k": ctx.k(),
        "n": ctx.n(),
        "basis": basis.iter().map(|g| g.iter().map(enc::partition).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "classes": flat.len(),
        "products": products,
    }))
}

pub fn export_ring(ctx: GrassCtx, cap: usize) -> Result<Value> {
    check_cap(ctx, cap)?;
    ring_table(&ProductCache::new(ctx))
}

pub fn write_ring(ctx: GrassCtx, cap: usize, path: &Path) -> Result<Value> {
    let table = export_ring(ctx, cap)?;
    std::fs::write(path, enc::to_canonical_string(&table))
        .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
    Ok(table)
}

/// Seeds a [`ProductCache`] from an exported table.
pub fn import_ring(v: &Value) -> Result<ProductCache> {
    let get = |name: &str| v.get(name).and_then(Value::as_u64).ok_or_else(|| Error::Input(format!("ring: missing integer field {name:?}")));
    let ctx = GrassCtx::new(get("k")? as usize, get("n")? as usize)?;
    let cache = ProductCache::new(ctx);
    let products = v.get("products").and_then(Value::as_array).ok_or_else(|| Error::Input("ring: missing array field \"products\"".into()))?;
    for (i, entry) in products.iter().enumerate() {
        let at = format!("products[{i}]");
        let part = |name: &str| {
            let x = entry.get(name).ok_or_else(|| Error::Input(format!("{at}: missing field {name:?}")))?;
            parse_partition(x, ctx.k(), ctx.width(), &format!("{at}.{name}"))
        };
        let (a, b) = (part("a")?, part("b")?);
        let terms = entry.get("product").ok_or_else(|| Error::Input(format!("{at}: missing field \"product\"")))?;
        let product = parse_terms(terms, ctx, a.size() + b.size(), &format!("{at}.product"))?;
        cache.insert(a, b, product);
    }
    Ok(cache)
}

pub fn read_ring(path: &Path) -> Result<ProductCache> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    import_ring(&v)
}

/// `<dir>/G<k>_<n>.json` under [`CACHE_DIR_VAR`], if the variable is set.
pub fn cache_path(ctx: GrassCtx) -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_VAR).map(|d| PathBuf::from(d).join(format!("G{}_{}.json", ctx.k(), ctx.n())))
}

/// A cache seeded from the cache directory when a table for `ctx` exists.
pub fn load_cache(ctx: GrassCtx) -> Result<ProductCache> {
    match cache_path(ctx) {
        Some(p) if p.is_file() => read_ring(&p),
        _ => Ok(ProductCache::new(ctx)),
    }
}

/// Re-imports `table` and checks that re-exporting reproduces it byte for byte.
pub fn round_trip_matches(table: &Value) -> Result<bool> {
    let cache = import_ring(table)?;
    let before = cache.len();
    let again = ring_table(&cache)?;
    if cache.len() != before {
        return Ok(false);
    }
    Ok(enc::to_canonical_string(&again) == enc::to_canonical_string(table))
}
