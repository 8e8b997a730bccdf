//! Multiplicities of Schubert varieties along Schubert cells.
//!
//! The multiplicity of `Sigma_lambda` along the cell `Sigma_mu°` (`mu >= lambda`)
//! is `(-1)^{s_1 + ... + s_k} det [ C(t_i, rho - s_i) ]` with rows
//! `rho = 0..k-1`, columns `i = 1..k`, where `t_i = n - k + i - lambda_i`
//! and `s_i = #{ j : mu_j - j < lambda_i - i }`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chow::GrassCtx;
use crate::error::{Error, Result};
use crate::linalg::bareiss_determinant;
use crate::partitions::BoxedPartition;

/// `C(t, m)` with `C(t, m) = 0` for `m < 0`.
fn binomial(t: i64, m: i64) -> BigInt {
    if m < 0 || t < 0 || m > t {
        return BigInt::zero();
    }
    let m = m.min(t - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * BigInt::from(t - i) / BigInt::from(i + 1);
    }
    acc
}

/// The `s_i` and `t_i` vectors, 1-indexed in the formula, 0-indexed here.
fn shift_data(ctx: GrassCtx, lambda: &BoxedPartition, mu: &BoxedPartition) -> (Vec<i64>, Vec<i64>) {
    let w = ctx.width() as i64;
    let lam: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
    let mu: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
    let t = (0..lam.len()).map(|i| w + (i as i64 + 1) - lam[i]).collect();
    let s = (0..lam.len())
        .map(|i| {
            let threshold = lam[i] - (i as i64 + 1);
            mu.iter()
                .enumerate()
                .filter(|&(j, &m)| m - (j as i64 + 1) < threshold)
                .count() as i64
        })
        .collect();
    (t, s)
}

/// The Rosenthal–Zelevinsky binomial matrix (before the sign factor).
pub fn rz_matrix(ctx: GrassCtx, lambda: &BoxedPartition, mu: &BoxedPartition) -> Vec<Vec<BigInt>> {
    let (t, s) = shift_data(ctx, lambda, mu);
    let k = ctx.k() as i64;
    (0..k)
        .map(|rho| (0..t.len()).map(|i| binomial(t[i], rho - s[i])).collect())
        .collect()
}

/// Multiplicity of `Sigma_lambda` along `Sigma_mu°`.
pub fn rz_multiplicity(ctx: GrassCtx, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<BigInt> {
    for p in [lambda, mu] {
        if !ctx.fits(p) {
            return Err(Error::InvalidPartition { parts: p.parts().to_vec(), k: ctx.k(), w: ctx.width() });
        }
    }
    if !mu.dominates(lambda) {
        return Err(Error::CellNotContained { lambda: lambda.to_string(), mu: mu.to_string() });
    }
    let (_, s) = shift_data(ctx, lambda, mu);
    let det = bareiss_determinant(&rz_matrix(ctx, lambda, mu));
    let value = if s.iter().sum::<i64>() % 2 == 0 { det } else { -det };
    if value.is_negative() {
        return Err(Error::Internal(format!(
            "negative multiplicity {value} for lambda = {lambda}, mu = {mu} in {ctx}"
        )));
    }
    Ok(value)
}

/// `d_lambda`: the multiplicity at the most singular point (the full box).
pub fn max_point_multiplicity(ctx: GrassCtx, lambda: &BoxedPartition) -> Result<BigInt> {
    rz_multiplicity(ctx, lambda, &ctx.point())
}

/// A pair `(lambda, mu)` where the multiplicity along `mu` exceeds the one at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityViolation {
    pub lambda: BoxedPartition,
    pub mu: BoxedPartition,
    pub along_mu: BigInt,
    pub at_point: BigInt,
}

/// Compares the multiplicity at the point with the one along every
/// intermediate cell. Nothing here is assumed; violations are returned.
pub fn monotonicity_survey(ctx: GrassCtx) -> Result<Vec<MonotonicityViolation>> {
    let mut out = Vec::new();
    let all: Vec<BoxedPartition> = (0..=ctx.dim()).flat_map(|m| ctx.partitions(m)).collect();
    for lambda in &all {
        let at_point = max_point_multiplicity(ctx, lambda)?;
        for mu in all.iter().filter(|mu| mu.dominates(lambda)) {
            let along_mu = rz_multiplicity(ctx, lambda, mu)?;
            if along_mu > at_point {
                out.push(MonotonicityViolation {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    along_mu,
                    at_point: at_point.clone(),
                });
            }
        }
    }
    Ok(out)
}
