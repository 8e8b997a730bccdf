//! Numerical cycle classes on `X_r`, the blow-up of `G(k, n)` at `r` points.
//!
//! A codimension-`m` class is written `sum a_lambda sigma_lambda - sum b_i E_i^[m]`
//! and a dimension-`m` class `sum a_lambda sigma_lambda^dim - sum b_i E_{i,[m]}`,
//! where `E_i^[m]` and `E_{i,[m]}` are linear cycles inside the exceptional
//! divisor `E_i`. The stored `exc` vector holds the `b_i`.
//!
//! Intersection rules, with `N = k(n - k)`:
//!
//! * `H . E_i = 0`, `E_i . E_j = 0` for `i != j`;
//! * `E_{i,[m]} . E_i^[m] = -1` for `0 < m < N` (a line in `E_i` meets `E_i` in degree `-1`);
//! * `E_i^N = (-1)^(N + 1)`.
//!
//! With this sign `(a l - sum b_i l_i) . (H - sum E_i) = a - sum b_i`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::chow::{self, ChowClass, GrassCtx};
use crate::error::{Error, Result};
use crate::partitions::BoxedPartition;

/// Metadata about how the blown-up points sit; never used in arithmetic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Configuration {
    #[default]
    VeryGeneral,
    General,
    Special,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlowupCtx {
    ctx: GrassCtx,
    r: usize,
    config: Configuration,
}

impl BlowupCtx {
    pub fn new(ctx: GrassCtx, r: usize) -> Self {
        Self { ctx, r, config: Configuration::default() }
    }

    pub fn with_configuration(mut self, config: Configuration) -> Self {
        self.config = config;
        self
    }

    pub fn ctx(&self) -> GrassCtx {
        self.ctx
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn configuration(&self) -> Configuration {
        self.config
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    /// `E_i^[m]` and `E_{i,[m]}` are independent of the Schubert part only for `0 < m < N`.
    pub fn has_exceptional_part(&self, m: usize) -> bool {
        m > 0 && m < self.dim()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "m", rename_all = "snake_case")]
pub enum Grading {
    Dimension(usize),
    Codimension(usize),
}

impl Grading {
    pub fn value(&self) -> usize {
        match *self {
            Grading::Dimension(m) | Grading::Codimension(m) => m,
        }
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grading::Dimension(m) => write!(f, "dimension {m}"),
            Grading::Codimension(m) => write!(f, "codimension {m}"),
        }
    }
}

/// A class on `X_r`. The ambient part is always stored as a Chow class of
/// codimension `N - m` for dimension-`m` classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupClass {
    bctx: BlowupCtx,
    grading: Grading,
    ambient: ChowClass,
    exc: Vec<BigInt>,
}

impl BlowupClass {
    pub fn new(bctx: BlowupCtx, grading: Grading, ambient: ChowClass, exc: Vec<BigInt>) -> Result<Self> {
        if ambient.ctx() != bctx.ctx() {
            let (a, b) = (ambient.ctx(), bctx.ctx());
            return Err(Error::ContextMismatch { left: (a.k(), a.n()), right: (b.k(), b.n()) });
        }
        let n = bctx.dim();
        if grading.value() > n {
            return Err(Error::OutOfRange(format!("{grading} exceeds dim {n}")));
        }
        let expected = match grading {
            Grading::Codimension(m) => m,
            Grading::Dimension(m) => n - m,
        };
        if ambient.codim() != expected {
            return Err(Error::GradingMismatch(format!(
                "{grading} class needs an ambient part of codimension {expected}, got {}",
                ambient.codim()
            )));
        }
        if exc.len() != bctx.r() {
            return Err(Error::DimensionMismatch { expected: bctx.r(), found: exc.len() });
        }
        let m = match grading {
            Grading::Codimension(m) => m,
            Grading::Dimension(m) => m,
        };
        if !bctx.has_exceptional_part(m) && exc.iter().any(|b| !b.is_zero()) {
            return Err(Error::GradingMismatch(format!("no exceptional classes in {grading}")));
        }
        Ok(Self { bctx, grading, ambient, exc })
    }

    pub fn zero(bctx: BlowupCtx, grading: Grading) -> Result<Self> {
        let codim = match grading {
            Grading::Codimension(m) => m,
            Grading::Dimension(m) => bctx.dim().checked_sub(m).ok_or_else(|| {
                Error::OutOfRange(format!("{grading} exceeds dim {}", bctx.dim()))
            })?,
        };
        Self::new(bctx, grading, ChowClass::zero(bctx.ctx(), codim), vec![BigInt::zero(); bctx.r()])
    }

    /// `sum a_lambda sigma_lambda - sum b_i E_i^[m]` with `m = codim(ambient)`.
    pub fn codim(bctx: BlowupCtx, ambient: ChowClass, exc: Vec<BigInt>) -> Result<Self> {
        let m = ambient.codim();
        Self::new(bctx, Grading::Codimension(m), ambient, exc)
    }

    /// Dimension-`m` class whose Schubert part is `ambient` (codimension `N - m`).
    pub fn dim(bctx: BlowupCtx, ambient: ChowClass, exc: Vec<BigInt>) -> Result<Self> {
        let m = bctx.dim() - ambient.codim().min(bctx.dim());
        Self::new(bctx, Grading::Dimension(m), ambient, exc)
    }

    /// Pullback of the hyperplane class `H = sigma_1`.
    pub fn hyperplane(bctx: BlowupCtx) -> Result<Self> {
        Self::codim(bctx, ChowClass::special(bctx.ctx(), 1)?, vec![BigInt::zero(); bctx.r()])
    }

    /// The divisor `a H - sum c_i E_i`.
    pub fn divisor(bctx: BlowupCtx, a: impl Into<BigInt>, c: &[i64]) -> Result<Self> {
        let ambient = ChowClass::special(bctx.ctx(), 1)?.scaled(&a.into());
        Self::codim(bctx, ambient, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// The class `l` of the strict transform of a general line.
    pub fn line(bctx: BlowupCtx) -> Result<Self> {
        let ctx = bctx.ctx();
        let lambda = BoxedPartition::special(1, ctx.k(), ctx.width())?.dual();
        Self::dim(bctx, ChowClass::schubert(ctx, &lambda)?, vec![BigInt::zero(); bctx.r()])
    }

    /// The curve class `a l - sum b_i l_i`.
    pub fn curve(bctx: BlowupCtx, a: impl Into<BigInt>, b: &[i64]) -> Result<Self> {
        let line = Self::line(bctx)?;
        let ambient = line.ambient.scaled(&a.into());
        Self::dim(bctx, ambient, b.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `sigma_lambda^*`: the dimension-`|lambda|` Schubert class dual to `sigma_lambda`.
    pub fn dual_schubert(bctx: BlowupCtx, lambda: &BoxedPartition) -> Result<Self> {
        let ctx = bctx.ctx();
        Self::dim(bctx, ChowClass::schubert(ctx, &lambda.dual())?, vec![BigInt::zero(); bctx.r()])
    }

    /// `coeff` times the exceptional linear cycle `E_i` of the given grading (`i` is 1-based).
    pub fn exceptional(bctx: BlowupCtx, grading: Grading, i: usize, coeff: impl Into<BigInt>) -> Result<Self> {
        if i == 0 || i > bctx.r() {
            return Err(Error::OutOfRange(format!("exceptional index {i} not in 1..={}", bctx.r())));
        }
        let mut c = Self::zero(bctx, grading)?;
        if !bctx.has_exceptional_part(grading.value()) {
            return Err(Error::GradingMismatch(format!("no exceptional classes in {grading}")));
        }
        c.exc[i - 1] = -coeff.into();
        Ok(c)
    }

    pub fn bctx(&self) -> BlowupCtx {
        self.bctx
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn ambient(&self) -> &ChowClass {
        &self.ambient
    }

    /// The `b_i` in `... - sum b_i E_i`.
    pub fn exc(&self) -> &[BigInt] {
        &self.exc
    }

    pub fn is_zero(&self) -> bool {
        self.ambient.is_zero() && self.exc.iter().all(Zero::is_zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let exc = self.exc.iter().zip(&other.exc).map(|(a, b)| a + b).collect();
        Ok(Self { ambient: self.ambient.checked_add(&other.ambient)?, exc, ..self.clone() })
    }

    pub fn scaled(&self, s: &BigInt) -> Self {
        Self {
            ambient: self.ambient.scaled(s),
            exc: self.exc.iter().map(|b| b * s).collect(),
            ..self.clone()
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.bctx != other.bctx {
            return Err(Error::GradingMismatch("classes live on different blow-ups".into()));
        }
        if self.grading != other.grading {
            return Err(Error::GradingMismatch(format!("{} vs {}", self.grading, other.grading)));
        }
        Ok(())
    }
}

impl fmt::Display for BlowupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if matches!(self.grading, Grading::Dimension(_)) { "E_{i}" } else { "E^{i}" };
        let mut out = if self.ambient.is_zero() { String::new() } else { self.ambient.to_string() };
        for (i, b) in self.exc.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let name = star.replace("{i}", &(i + 1).to_string());
            let mag = b.abs();
            let term = if mag.is_one() { name } else { format!("{mag}*{name}") };
            let sign = if b.is_positive() { "-" } else { "+" };
            out = match (out.is_empty(), sign) {
                (true, "-") => format!("-{term}"),
                (true, _) => term,
                (false, s) => format!("{out} {s} {term}"),
            };
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// `alpha . beta` for `alpha` of dimension `m` and `beta` of codimension `m`.
pub fn pair_blowup(a: &BlowupClass, b: &BlowupClass) -> Result<BigInt> {
    if a.bctx != b.bctx {
        return Err(Error::GradingMismatch("classes live on different blow-ups".into()));
    }
    let (Grading::Dimension(m), Grading::Codimension(m2)) = (a.grading, b.grading) else {
        return Err(Error::GradingMismatch(format!(
            "need a dimension-m and a codimension-m class, got {} and {}",
            a.grading, b.grading
        )));
    };
    if m != m2 {
        return Err(Error::GradingMismatch(format!("dimension {m} against codimension {m2}")));
    }
    let mut total = chow::pair(&a.ambient, &b.ambient)?;
    for (x, y) in a.exc.iter().zip(&b.exc) {
        total -= x * y;
    }
    Ok(total)
}

/// `D^p . beta` for a divisor `D = a H - sum c_i E_i` and `beta` of dimension `p`.
///
/// Expands `D^p = a^p sigma_1^p - sum c_i^p E_i^[p]` (for `p = N` the last
/// term is `c_i^N` times a point, matching `E_i^N = (-1)^(N+1)`).
pub fn divisor_power_pair(d: &BlowupClass, p: usize, beta: &BlowupClass) -> Result<BigInt> {
    if d.bctx != beta.bctx {
        return Err(Error::GradingMismatch("classes live on different blow-ups".into()));
    }
    if d.grading != Grading::Codimension(1) {
        return Err(Error::GradingMismatch(format!("expected a divisor, got {}", d.grading)));
    }
    if beta.grading != Grading::Dimension(p) {
        return Err(Error::GradingMismatch(format!("expected a dimension-{p} class, got {}", beta.grading)));
    }
    let power = divisor_power(d, p)?;
    if p == d.bctx.dim() {
        // both parts of D^N are multiples of a point; beta is a multiple of [X]
        let unit = beta.ambient.coefficient(&BoxedPartition::empty(d.bctx.ctx().k(), d.bctx.ctx().width()));
        let point = d.bctx.ctx().point();
        let mut deg = power.ambient.coefficient(&point);
        for c in &d.exc {
            deg -= num_traits::pow(c.clone(), p);
        }
        return Ok(deg * unit);
    }
    pair_blowup(beta, &power)
}

/// `D^p` as a codimension-`p` class, for `p < N`.
pub fn divisor_power(d: &BlowupClass, p: usize) -> Result<BlowupClass> {
    if d.grading != Grading::Codimension(1) {
        return Err(Error::GradingMismatch(format!("expected a divisor, got {}", d.grading)));
    }
    let ctx = d.bctx.ctx();
    let a = d.ambient.coefficient(&BoxedPartition::special(1, ctx.k(), ctx.width())?);
    let mut ambient = ChowClass::unit(ctx);
    for _ in 0..p {
        ambient = chow::pieri_class(1, &ambient)?;
    }
    let ambient = ambient.scaled(&num_traits::pow(a, p));
    let exc = if d.bctx.has_exceptional_part(p) {
        d.exc.iter().map(|c| num_traits::pow(c.clone(), p)).collect()
    } else {
        vec![BigInt::zero(); d.bctx.r()]
    };
    BlowupClass::new(d.bctx, Grading::Codimension(p), ambient, exc)
}

/// How a class compares with the sign pattern of an irreducible effective cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EffectiveShape {
    /// A positive multiple of a single exceptional linear cycle.
    ExceptionalSupported,
    /// `sum a sigma - sum b E` with every `a, b >= 0`.
    StandardForm,
    Indeterminate,
}

pub fn effective_representation_check(c: &BlowupClass) -> EffectiveShape {
    let nonzero: Vec<&BigInt> = c.exc.iter().filter(|b| !b.is_zero()).collect();
    if c.ambient.is_zero() && nonzero.len() == 1 && nonzero[0].is_negative() {
        return EffectiveShape::ExceptionalSupported;
    }
    let ambient_ok = c.ambient.terms().all(|(_, a)| !a.is_negative());
    let exc_ok = c.exc.iter().all(|b| !b.is_negative());
    if !c.ambient.is_zero() && ambient_ok && exc_ok {
        EffectiveShape::StandardForm
    } else {
        EffectiveShape::Indeterminate
    }
}
