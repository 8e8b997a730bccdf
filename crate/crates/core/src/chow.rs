//! The Chow ring of the Grassmannian `G(k, n)`.
//!
//! Products are computed by writing one factor as a polynomial in the
//! special classes `sigma_m` (Giambelli) and folding Pieri's rule over the
//! other factor. All coefficients are arbitrary precision.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{self, BoxedPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassCtx {
    k: usize,
    n: usize,
}

impl GrassCtx {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || n <= k {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n - k`, the width of the partition box.
    pub fn width(&self) -> usize {
        self.n - self.k
    }

    /// `k (n - k)`.
    pub fn dim(&self) -> usize {
        self.k * self.width()
    }

    /// Whether `k >= 2` and `n - k >= 2`. Most blow-up statements assume it.
    pub fn standing_assumption_holds(&self) -> bool {
        self.k >= 2 && self.width() >= 2
    }

    /// Warning text when the standing assumption fails.
    pub fn standing_assumption_warning(&self) -> Option<String> {
        (!self.standing_assumption_holds())
            .then(|| format!("G({},{}) has k < 2 or n - k < 2; blow-up results assume both are >= 2", self.k, self.n))
    }

    pub fn partitions(&self, codim: usize) -> Vec<BoxedPartition> {
        partitions::enumerate(self.k, self.width(), codim)
    }

    pub fn partition(&self, parts: &[usize]) -> Result<BoxedPartition> {
        BoxedPartition::new(parts, self.k, self.width())
    }

    pub fn point(&self) -> BoxedPartition {
        BoxedPartition::full(self.k, self.width())
    }

    pub fn fits(&self, lambda: &BoxedPartition) -> bool {
        lambda.k() == self.k && lambda.width() == self.width()
    }

    fn check_fits(&self, lambda: &BoxedPartition) -> Result<()> {
        if self.fits(lambda) {
            Ok(())
        } else {
            Err(Error::InvalidPartition { parts: lambda.parts().to_vec(), k: self.k, w: self.width() })
        }
    }
}

impl fmt::Display for GrassCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

/// A homogeneous integer combination of Schubert classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    ctx: GrassCtx,
    codim: usize,
    terms: BTreeMap<BoxedPartition, BigInt>,
}

impl ChowClass {
    pub fn zero(ctx: GrassCtx, codim: usize) -> Self {
        Self { ctx, codim, terms: BTreeMap::new() }
    }

    /// The class `sigma_lambda`.
    pub fn schubert(ctx: GrassCtx, lambda: &BoxedPartition) -> Result<Self> {
        ctx.check_fits(lambda)?;
        let mut c = Self::zero(ctx, lambda.size());
        c.terms.insert(lambda.clone(), BigInt::one());
        Ok(c)
    }

    /// `sigma_m`; errors if `m > n - k`.
    pub fn special(ctx: GrassCtx, m: usize) -> Result<Self> {
        let lambda = BoxedPartition::special(m, ctx.k(), ctx.width())?;
        Self::schubert(ctx, &lambda)
    }

    pub fn unit(ctx: GrassCtx) -> Self {
        let mut c = Self::zero(ctx, 0);
        c.terms.insert(BoxedPartition::empty(ctx.k(), ctx.width()), BigInt::one());
        c
    }

    /// Builds a class from `(partition, coefficient)` pairs; zero coefficients are dropped.
    pub fn from_terms<I, C>(ctx: GrassCtx, codim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BoxedPartition, C)>,
        C: Into<BigInt>,
    {
        if codim > ctx.dim() {
            return Err(Error::OutOfRange(format!("codimension {codim} exceeds dim {}", ctx.dim())));
        }
        let mut c = Self::zero(ctx, codim);
        for (lambda, coeff) in terms {
            ctx.check_fits(&lambda)?;
            if lambda.size() != codim {
                return Err(Error::DegreeMismatch { expected: codim, found: lambda.size() });
            }
            c.add_term(lambda, coeff.into());
        }
        Ok(c)
    }

    pub fn ctx(&self) -> GrassCtx {
        self.ctx
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BoxedPartition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &BoxedPartition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: BoxedPartition, coeff: BigInt) {
        debug_assert_eq!(lambda.size(), self.codim);
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                if !coeff.is_zero() {
                    v.insert(coeff);
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &ChowClass, scale: &BigInt) {
        debug_assert_eq!(self.codim, other.codim);
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: &BigInt) -> Self {
        let mut out = Self::zero(self.ctx, self.codim);
        out.add_assign_scaled(self, scale);
        out
    }

    pub fn checked_add(&self, other: &ChowClass) -> Result<Self> {
        same_ctx(self, other)?;
        if self.codim != other.codim {
            return Err(Error::DegreeMismatch { expected: self.codim, found: other.codim });
        }
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one());
        Ok(out)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, c) in &self.terms {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "s[{lambda}]")?;
            first = false;
        }
        Ok(())
    }
}

fn same_ctx(a: &ChowClass, b: &ChowClass) -> Result<()> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch {
            left: (a.ctx.k, a.ctx.n),
            right: (b.ctx.k, b.ctx.n),
        });
    }
    Ok(())
}

/// Pieri's rule: `sigma_p * sigma_mu` as a sum over `nu` with
/// `mu_i <= nu_i <= mu_{i-1}` (`mu_0 = n - k`) and `|nu| = p + |mu|`.
pub fn pieri(ctx: GrassCtx, p: usize, mu: &BoxedPartition) -> Result<ChowClass> {
    ctx.check_fits(mu)?;
    if p > ctx.width() {
        return Err(Error::NotSpecial { size: p, width: ctx.width() });
    }
    let mut out = ChowClass::zero(ctx, mu.size() + p);
    if mu.size() + p > ctx.dim() {
        return Ok(out);
    }
    let mut nu = Vec::with_capacity(ctx.k());
    pieri_fill(ctx, mu.parts(), p, &mut nu, &mut out);
    Ok(out)
}

fn pieri_fill(ctx: GrassCtx, mu: &[usize], remaining: usize, nu: &mut Vec<usize>, out: &mut ChowClass) {
    let i = nu.len();
    if i == mu.len() {
        if remaining == 0 {
            let lambda = BoxedPartition::new(nu, ctx.k(), ctx.width()).expect("interlacing keeps nu in the box");
            out.add_term(lambda, BigInt::one());
        }
        return;
    }
    let upper = if i == 0 { ctx.width() } else { mu[i - 1] };
    // the remaining rows can add at most sum(mu_{j-1} - mu_j)
    let room: usize = (i + 1..mu.len()).map(|j| mu[j - 1] - mu[j]).sum();
    for v in mu[i]..=upper {
        let add = v - mu[i];
        if add > remaining {
            break;
        }
        if remaining - add > room {
            continue;
        }
        nu.push(v);
        pieri_fill(ctx, mu, remaining - add, nu, out);
        nu.pop();
    }
}

/// Linear extension of [`pieri`] to a whole class.
pub fn pieri_class(p: usize, class: &ChowClass) -> Result<ChowClass> {
    let ctx = class.ctx;
    let mut out = ChowClass::zero(ctx, class.codim + p);
    for (mu, c) in &class.terms {
        out.add_assign_scaled(&pieri(ctx, p, mu)?, c);
    }
    Ok(out)
}

/// A polynomial in the special classes: each monomial is a weakly
/// decreasing list of special sizes (`sigma_0 = 1` is omitted).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecialPolynomial {
    monomials: BTreeMap<Vec<usize>, BigInt>,
}

impl SpecialPolynomial {
    pub fn one() -> Self {
        let mut p = Self::default();
        p.monomials.insert(Vec::new(), BigInt::one());
        p
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Vec<usize>, &BigInt)> {
        self.monomials.iter()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    fn add_monomial(&mut self, mono: Vec<usize>, c: BigInt) {
        let e = self.monomials.entry(mono).or_default();
        *e += c;
        if e.is_zero() {
            self.monomials.retain(|_, v| !v.is_zero());
        }
    }

    /// Multiplies by `sign * sigma_size`.
    fn times_special(&self, size: usize, negate: bool) -> Self {
        let mut out = Self::default();
        for (mono, c) in &self.monomials {
            let mut m = mono.clone();
            if size > 0 {
                let pos = m.iter().position(|&x| x < size).unwrap_or(m.len());
                m.insert(pos, size);
            }
            out.add_monomial(m, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.monomials {
            self.add_monomial(m.clone(), c.clone());
        }
    }

    /// Evaluates the polynomial in `A*(G(k,n))` by folding Pieri over `base`.
    pub fn apply_to(&self, base: &ChowClass) -> Result<ChowClass> {
        let degree = self.monomials.keys().next().map_or(0, |m| m.iter().sum::<usize>());
        let mut out = ChowClass::zero(base.ctx, base.codim + degree);
        if base.codim + degree > base.ctx.dim() {
            return Ok(out);
        }
        for (mono, c) in &self.monomials {
            let mut acc = base.clone();
            for &s in mono {
                acc = pieri_class(s, &acc)?;
                if acc.is_zero() {
                    break;
                }
            }
            if !acc.is_zero() {
                out.add_assign_scaled(&acc, c);
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, ctx: GrassCtx) -> Result<ChowClass> {
        self.apply_to(&ChowClass::unit(ctx))
    }
}

impl fmt::Display for SpecialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.monomials.iter().enumerate() {
            let sign = if c < &BigInt::zero() { "-" } else { "+" };
            if i > 0 || sign == "-" {
                write!(f, "{}{} ", if i > 0 { " " } else { "" }, sign)?;
            }
            let mag = if c < &BigInt::zero() { -c.clone() } else { c.clone() };
            let factors: Vec<String> = mono.iter().map(|s| format!("s{s}")).collect();
            match (mag.is_one(), factors.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", factors.join("*"))?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Giambelli's determinant `det(sigma_{lambda_i + j - i})` expanded into
/// monomials in the special classes.
///
/// Entries with index `< 0` or `> n - k` are zero. Only the leading
/// `length(lambda)` rows matter: the rest of the matrix is block
/// unitriangular.
pub fn giambelli(lambda: &BoxedPartition) -> SpecialPolynomial {
    let len = lambda.length();
    let parts = &lambda.parts()[..len];
    let mut memo: HashMap<u64, SpecialPolynomial> = HashMap::new();
    giambelli_rows(parts, lambda.width(), 0, &mut memo)
}

fn giambelli_rows(parts: &[usize], width: usize, used: u64, memo: &mut HashMap<u64, SpecialPolynomial>) -> SpecialPolynomial {
    let row = used.count_ones() as usize;
    if row == parts.len() {
        return SpecialPolynomial::one();
    }
    if let Some(p) = memo.get(&used) {
        return p.clone();
    }
    let mut out = SpecialPolynomial::default();
    for col in 0..parts.len() {
        if used & (1 << col) != 0 {
            continue;
        }
        let index = parts[row] as i64 + col as i64 - row as i64;
        if index < 0 || index > width as i64 {
            continue;
        }
        let rest = giambelli_rows(parts, width, used | (1 << col), memo);
        if rest.is_empty() {
            continue;
        }
        // columns already taken to the right of `col` are inversions
        let inversions = (used >> (col + 1)).count_ones();
        out.add_assign(&rest.times_special(index as usize, inversions % 2 == 1));
    }
    memo.insert(used, out.clone());
    out
}

/// The intersection product.
pub fn multiply(a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
    same_ctx(a, b)?;
    let ctx = a.ctx;
    if a.codim + b.codim > ctx.dim() {
        return Err(Error::OutOfRange(format!(
            "codimensions {} + {} exceed dim {}",
            a.codim,
            b.codim,
            ctx.dim()
        )));
    }
    let mut out = ChowClass::zero(ctx, a.codim + b.codim);
    for (lambda, c) in &a.terms {
        out.add_assign_scaled(&giambelli(lambda).apply_to(b)?, c);
    }
    Ok(out)
}

/// Degree of `a * b` when the codimensions are complementary.
pub fn pair(a: &ChowClass, b: &ChowClass) -> Result<BigInt> {
    same_ctx(a, b)?;
    let ctx = a.ctx;
    if a.codim + b.codim != ctx.dim() {
        return Err(Error::DegreeMismatch { expected: ctx.dim() - a.codim.min(ctx.dim()), found: b.codim });
    }
    Ok(multiply(a, b)?.coefficient(&ctx.point()))
}

/// Plücker degree from `(k(n-k))! * prod_{i=1..k} (i-1)! / (n-k+i-1)!`.
pub fn degree_closed_form(ctx: GrassCtx) -> BigInt {
    let fact = |m: usize| -> BigInt { (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)) };
    let w = ctx.width();
    let mut num = fact(ctx.dim());
    let mut den = BigInt::one();
    for i in 1..=ctx.k() {
        num *= fact(i - 1);
        den *= fact(w + i - 1);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Plücker degree as the point coefficient of `sigma_1^{k(n-k)}`.
pub fn degree_by_pieri(ctx: GrassCtx) -> Result<BigInt> {
    let mut acc = ChowClass::unit(ctx);
    for _ in 0..ctx.dim() {
        acc = pieri_class(1, &acc)?;
    }
    Ok(acc.coefficient(&ctx.point()))
}

/// Plücker degree, computed both ways; disagreement is an internal error.
pub fn degree(ctx: GrassCtx) -> Result<BigInt> {
    let closed = degree_closed_form(ctx);
    let iterated = degree_by_pieri(ctx)?;
    if closed != iterated {
        return Err(Error::Internal(format!(
            "degree of {ctx}: closed form {closed} != iterated Pieri {iterated}"
        )));
    }
    Ok(closed)
}

/// Memo table of Schubert-by-Schubert products for one Grassmannian.
///
/// Reads take a shared lock; a miss computes outside the lock and inserts
/// under the write lock, so concurrent callers see identical results.
#[derive(Debug)]
pub struct ProductCache {
    ctx: GrassCtx,
    table: RwLock<HashMap<(BoxedPartition, BoxedPartition), ChowClass>>,
}

impl ProductCache {
    pub fn new(ctx: GrassCtx) -> Self {
        Self { ctx, table: RwLock::new(HashMap::new()) }
    }

    pub fn ctx(&self) -> GrassCtx {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("product cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Seeds an entry, e.g. from an exported ring table.
    pub fn insert(&self, a: BoxedPartition, b: BoxedPartition, product: ChowClass) {
        self.table.write().expect("product cache poisoned").insert(key(a, b), product);
    }

    pub fn schubert_product(&self, a: &BoxedPartition, b: &BoxedPartition) -> Result<ChowClass> {
        let k = key(a.clone(), b.clone());
        if let Some(c) = self.table.read().expect("product cache poisoned").get(&k) {
            return Ok(c.clone());
        }
        let product = multiply(&ChowClass::schubert(self.ctx, a)?, &ChowClass::schubert(self.ctx, b)?)?;
        self.table
            .write()
            .expect("product cache poisoned")
            .entry(k)
            .or_insert_with(|| product.clone());
        Ok(product)
    }

    pub fn multiply(&self, a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
        same_ctx(a, b)?;
        if a.ctx != self.ctx {
            return Err(Error::ContextMismatch { left: (self.ctx.k, self.ctx.n), right: (a.ctx.k, a.ctx.n) });
        }
        if a.codim + b.codim > self.ctx.dim() {
            return multiply(a, b);
        }
        let mut out = ChowClass::zero(self.ctx, a.codim + b.codim);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                out.add_assign_scaled(&self.schubert_product(la, lb)?, &(ca * cb));
            }
        }
        Ok(out)
    }
}

fn key(a: BoxedPartition, b: BoxedPartition) -> (BoxedPartition, BoxedPartition) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: usize, n: usize) -> GrassCtx {
        GrassCtx::new(k, n).unwrap()
    }

    fn s(ctx: GrassCtx, parts: &[usize]) -> ChowClass {
        ChowClass::schubert(ctx, &ctx.partition(parts).unwrap()).unwrap()
    }

    #[test]
    fn pieri_examples() {
        let c = g(2, 4);
        let sq = pieri(c, 1, &c.partition(&[1]).unwrap()).unwrap();
        assert_eq!(sq, s(c, &[2]).checked_add(&s(c, &[1, 1])).unwrap());
        let mu = c.partition(&[2, 1]).unwrap();
        assert_eq!(pieri(c, 0, &mu).unwrap(), s(c, &[2, 1]));
        assert_eq!(pieri(c, 1, &mu).unwrap(), s(c, &[2, 2]));
        assert!(matches!(pieri(c, 3, &mu), Err(Error::NotSpecial { .. })));
    }

    #[test]
    fn giambelli_examples() {
        let c = g(2, 4);
        let p = giambelli(&c.partition(&[2]).unwrap());
        assert_eq!(p.monomials().collect::<Vec<_>>(), vec![(&vec![2], &BigInt::one())]);
        let p11 = giambelli(&c.partition(&[1, 1]).unwrap());
        let expected: Vec<(Vec<usize>, BigInt)> = vec![(vec![1, 1], BigInt::one()), (vec![2], BigInt::from(-1))];
        let got: Vec<(Vec<usize>, BigInt)> = p11.monomials().map(|(m, c)| (m.clone(), c.clone())).collect();
        assert_eq!(got, expected);
        assert_eq!(p11.evaluate(c).unwrap(), s(c, &[1, 1]));
        assert_eq!(giambelli(&c.partition(&[2, 1]).unwrap()).evaluate(c).unwrap(), s(c, &[2, 1]));
    }

    #[test]
    fn multiply_and_pair_examples() {
        let c = g(2, 4);
        assert_eq!(multiply(&s(c, &[1]), &s(c, &[2, 1])).unwrap(), s(c, &[2, 2]));
        assert_eq!(multiply(&ChowClass::unit(c), &s(c, &[1, 1])).unwrap(), s(c, &[1, 1]));
        assert!(multiply(&s(c, &[2]), &s(c, &[1, 1])).unwrap().is_zero());
        assert_eq!(pair(&s(c, &[2]), &s(c, &[2])).unwrap(), BigInt::one());
        assert_eq!(pair(&s(c, &[2]), &s(c, &[1, 1])).unwrap(), BigInt::zero());
        let c5 = g(2, 5);
        assert_eq!(pair(&s(c5, &[2, 1]), &s(c5, &[2, 1])).unwrap(), BigInt::one());
        assert_eq!(pair(&s(c5, &[2, 2]), &s(c5, &[1, 1])).unwrap(), BigInt::one());
        assert!(matches!(pair(&s(c5, &[2, 1]), &s(c5, &[2, 2])), Err(Error::DegreeMismatch { .. })));
        assert!(pair(&s(c, &[2]), &s(c, &[1])).is_err());
        assert!(matches!(multiply(&s(c, &[1]), &s(c5, &[1])), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(g(2, 4)).unwrap(), BigInt::from(2));
        assert_eq!(degree(g(2, 5)).unwrap(), BigInt::from(5));
        assert_eq!(degree(g(3, 6)).unwrap(), BigInt::from(42));
        assert_eq!(degree(g(1, 5)).unwrap(), BigInt::one());
    }

    #[test]
    fn standing_assumption_flag() {
        assert!(g(2, 4).standing_assumption_warning().is_none());
        assert!(g(1, 4).standing_assumption_warning().is_some());
        assert!(GrassCtx::new(3, 3).is_err());
    }

    #[test]
    fn cache_agrees_with_direct_product() {
        let c = g(2, 5);
        let cache = ProductCache::new(c);
        let a = s(c, &[1]).checked_add(&s(c, &[1])).unwrap();
        let b = s(c, &[2, 1]);
        assert_eq!(cache.multiply(&a, &b).unwrap(), multiply(&a, &b).unwrap());
        assert_eq!(cache.len(), 1);
        std::thread::scope(|scope| {
            for _ in 0..4 {
                scope.spawn(|| {
                    for l in c.partitions(2) {
                        cache.schubert_product(&l, &c.partition(&[1]).unwrap()).unwrap();
                    }
                });
            }
        });
        assert_eq!(cache.len(), 3);
    }
}
