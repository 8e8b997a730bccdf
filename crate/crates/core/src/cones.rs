//! Exact polyhedral cones and the constructive decompositions of effective
//! classes on blow-ups.
//!
//! Membership is decided by a phase-one simplex over `BigRational` with
//! Bland's rule. A feasible basis yields the nonnegative combination; an
//! infeasible one yields a Farkas functional read off the reduced costs of
//! the artificial columns. Both are re-verified by substitution before they
//! are returned.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::blowup::{BlowupClass, BlowupCtx, Grading};
use crate::chow::{self, ChowClass, GrassCtx};
use crate::error::{Error, Result};
use crate::linalg::{combinations, dot, nullspace, primitive, rank};
use crate::multiplicity::max_point_multiplicity;
use crate::partitions::BoxedPartition;

fn q(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn qvec(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

/// A finitely generated cone in `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSpec {
    dim: usize,
    basis_labels: Vec<String>,
    generator_labels: Vec<String>,
    generators: Vec<Vec<BigRational>>,
}

impl ConeSpec {
    /// Duplicate generators are dropped, keeping the first label.
    pub fn new(basis_labels: Vec<String>, generators: Vec<(String, Vec<BigRational>)>) -> Result<Self> {
        let dim = basis_labels.len();
        let mut labels = Vec::new();
        let mut gens: Vec<Vec<BigRational>> = Vec::new();
        for (label, g) in generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.len() });
            }
            if !gens.contains(&g) {
                labels.push(label);
                gens.push(g);
            }
        }
        Ok(Self { dim, basis_labels, generator_labels: labels, generators: gens })
    }

    /// Integer-vector convenience constructor.
    pub fn from_integers(basis_labels: &[&str], generators: &[(&str, Vec<i64>)]) -> Result<Self> {
        Self::new(
            basis_labels.iter().map(|s| s.to_string()).collect(),
            generators
                .iter()
                .map(|(l, g)| (l.to_string(), g.iter().map(|&x| q(x)).collect()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn generator_labels(&self) -> &[String] {
        &self.generator_labels
    }

    pub fn generators(&self) -> &[Vec<BigRational>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Outcome of [`cone_membership`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `v = sum x_i g_i` with every `x_i >= 0`.
    InSpan { coefficients: Vec<BigRational> },
    /// `phi . g_i >= 0` for every generator and `phi . v < 0`.
    NotInSpan { functional: Vec<BigInt> },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::InSpan { .. })
    }

    /// Re-checks the witness or certificate by substitution.
    pub fn verify(&self, cone: &ConeSpec, v: &[BigRational]) -> bool {
        match self {
            Membership::InSpan { coefficients } => {
                if coefficients.len() != cone.len() || coefficients.iter().any(Signed::is_negative) {
                    return false;
                }
                (0..cone.dim).all(|j| {
                    let s: BigRational = cone.generators.iter().zip(coefficients).map(|(g, x)| &g[j] * x).sum();
                    s == v[j]
                })
            }
            Membership::NotInSpan { functional } => {
                let phi = qvec(functional);
                cone.generators.iter().all(|g| !dot(&phi, g).is_negative()) && dot(&phi, v).is_negative()
            }
        }
    }
}

/// Decides whether `v` lies in the cone.
pub fn cone_membership(cone: &ConeSpec, v: &[BigRational]) -> Result<Membership> {
    if v.len() != cone.dim {
        return Err(Error::DimensionMismatch { expected: cone.dim, found: v.len() });
    }
    let m = cone.dim;
    let n = cone.generators.len();
    let width = n + m;
    let flip: Vec<bool> = v.iter().map(Signed::is_negative).collect();

    // rows: s_j * (sum_i g_i[j] x_i) + a_j = |v_j|
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|j| {
            let s = if flip[j] { -BigRational::one() } else { BigRational::one() };
            let mut row: Vec<BigRational> = cone.generators.iter().map(|g| &g[j] * &s).collect();
            row.extend((0..m).map(|i| if i == j { BigRational::one() } else { BigRational::zero() }));
            row.push(&v[j] * &s);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..width).collect();
    // reduced costs of sum(a_j); the last entry is minus the objective
    let mut z: Vec<BigRational> = (0..=width)
        .map(|c| {
            let cost = if (n..width).contains(&c) { BigRational::one() } else { BigRational::zero() };
            cost - t.iter().map(|row| &row[c]).sum::<BigRational>()
        })
        .collect();

    while let Some(enter) = (0..width).find(|&c| z[c].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (j, row) in t.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width] / &row[enter];
            let better = match &leave {
                None => true,
                Some((lj, best)) => ratio < *best || (ratio == *best && basis[j] < basis[*lj]),
            };
            if better {
                leave = Some((j, ratio));
            }
        }
        let Some((pr, _)) = leave else {
            return Err(Error::Internal("phase-one simplex reported an unbounded ray".into()));
        };
        let pivot = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x /= &pivot;
        }
        let prow = t[pr].clone();
        for (j, row) in t.iter_mut().enumerate() {
            if j == pr || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        let f = z[enter].clone();
        for (x, p) in z.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
        basis[pr] = enter;
    }

    let result = if z[width].is_zero() {
        let mut x = vec![BigRational::zero(); n];
        for (j, &b) in basis.iter().enumerate() {
            if b < n {
                x[b] = t[j][width].clone();
            }
        }
        Membership::InSpan { coefficients: x }
    } else {
        let phi: Vec<BigRational> = (0..m)
            .map(|j| {
                let y = BigRational::one() - &z[n + j];
                if flip[j] { y } else { -y }
            })
            .collect();
        Membership::NotInSpan { functional: primitive(&phi) }
    };
    if !result.verify(cone, v) {
        return Err(Error::Internal("simplex produced an unverifiable membership answer".into()));
    }
    Ok(result)
}

/// Facet normals of a full-dimensional cone, as primitive integer vectors
/// `phi` with `phi . x >= 0` on the cone. Sorted and deduplicated.
pub fn facets(cone: &ConeSpec) -> Result<Vec<Vec<BigInt>>> {
    let d = cone.dim;
    if rank(&cone.generators) != d {
        return Err(Error::OutOfRange("facet enumeration needs a full-dimensional cone".into()));
    }
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for subset in combinations(cone.len(), d - 1) {
        let rows: Vec<Vec<BigRational>> = subset.iter().map(|&i| cone.generators[i].clone()).collect();
        let ns = nullspace(&rows, d);
        if ns.len() != 1 {
            continue;
        }
        let normal = &ns[0];
        let values: Vec<BigRational> = cone.generators.iter().map(|g| dot(normal, g)).collect();
        let candidate = if values.iter().all(|x| !x.is_negative()) {
            primitive(normal)
        } else if values.iter().all(|x| !x.is_positive()) {
            primitive(&normal.iter().map(|x| -x).collect::<Vec<_>>())
        } else {
            continue;
        };
        if !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    out.sort();
    Ok(out)
}

/// One entry of a [`Decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub label: String,
    pub multiplicity: BigInt,
    pub vector: Vec<BigInt>,
}

/// A nonnegative integer combination of labelled generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub basis: Vec<String>,
    pub target: Vec<BigInt>,
    pub terms: Vec<DecompositionTerm>,
}

impl Decomposition {
    fn new(basis: Vec<String>, target: Vec<BigInt>) -> Self {
        Self { basis, target, terms: Vec::new() }
    }

    /// Adds `mult` copies of a generator, merging with an earlier entry of the same label.
    fn add(&mut self, label: String, vector: Vec<BigInt>, mult: impl Into<BigInt>) {
        let mult = mult.into();
        if mult.is_zero() {
            return;
        }
        debug_assert!(mult.is_positive());
        match self.terms.iter_mut().find(|t| t.label == label) {
            Some(t) => t.multiplicity += mult,
            None => self.terms.push(DecompositionTerm { label, multiplicity: mult, vector }),
        }
    }

    pub fn sum(&self) -> Vec<BigInt> {
        let mut s = vec![BigInt::zero(); self.basis.len()];
        for t in &self.terms {
            for (acc, x) in s.iter_mut().zip(&t.vector) {
                *acc += &t.multiplicity * x;
            }
        }
        s
    }

    /// All multiplicities are positive and the terms add up to the target.
    pub fn reproduces_target(&self) -> bool {
        self.terms.iter().all(|t| t.multiplicity.is_positive()) && self.sum() == self.target
    }

    pub fn multiplicity_of(&self, label: &str) -> BigInt {
        self.terms.iter().find(|t| t.label == label).map(|t| t.multiplicity.clone()).unwrap_or_default()
    }

    fn checked(self) -> Result<Self> {
        if self.reproduces_target() {
            Ok(self)
        } else {
            Err(Error::Internal(format!("decomposition does not reproduce its target: {self}")))
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| if t.multiplicity.is_one() { format!("({})", t.label) } else { format!("{}*({})", t.multiplicity, t.label) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn unit(len: usize, i: usize, value: i64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); len];
    v[i] = BigInt::from(value);
    v
}

fn two_point_basis() -> Vec<String> {
    vec!["H".into(), "E_1".into(), "E_2".into()]
}

fn beta_label(m: usize, k: usize) -> String {
    format!("H - {m}E_1 - {}E_2", k - m)
}

fn beta(m: usize, k: usize) -> Vec<BigInt> {
    vec![BigInt::one(), -BigInt::from(m), -BigInt::from(k - m)]
}

/// Generators of the divisor cone of `G(k, 2k)` blown up at two points,
/// in coordinates `(a, -b_1, -b_2)` for `a H - b_1 E_1 - b_2 E_2`.
pub fn thm44_generators(k: usize) -> Result<ConeSpec> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("k = {k}; need k >= 2")));
    }
    let mut gens = vec![
        ("E_1".to_string(), qvec(&unit(3, 1, 1))),
        ("E_2".to_string(), qvec(&unit(3, 2, 1))),
    ];
    for m in 0..=k {
        gens.push((beta_label(m, k), qvec(&beta(m, k))));
    }
    ConeSpec::new(two_point_basis(), gens)
}

/// Expected facet normals of [`thm44_generators`]: `a >= 0`, `k a >= b_1`,
/// `k a >= b_2`, `k a >= b_1 + b_2`.
pub fn thm44_expected_facets(k: usize) -> Vec<Vec<BigInt>> {
    let k = BigInt::from(k);
    let (o, z) = (BigInt::one(), BigInt::zero());
    let mut v = vec![
        vec![o.clone(), z.clone(), z.clone()],
        vec![k.clone(), o.clone(), z.clone()],
        vec![k.clone(), z.clone(), o.clone()],
        vec![k, o.clone(), o],
    ];
    v.sort();
    v
}

/// Writes `a H - b_1 E_1 - b_2 E_2` with `k a >= b_1 + b_2` as a combination of
/// `H`, `E_1`, `E_2` and `beta_m = H - m E_1 - (k - m) E_2`.
///
/// Surplus `k a - b_1 - b_2` is spent on whole copies of `H` and the
/// remainder on `E_2`; then `beta_m` with `m = min(k, b_1)` is peeled off
/// until nothing is left.
pub fn lemma41_decompose(k: usize, a: i64, b1: i64, b2: i64) -> Result<Decomposition> {
    if k < 1 {
        return Err(Error::OutOfRange("k must be positive".into()));
    }
    if a < 0 || b1 < 0 || b2 < 0 {
        return Err(Error::OutsideDualCone(format!("need a, b_1, b_2 >= 0, got ({a}, {b1}, {b2})")));
    }
    let ki = k as i64;
    let excess = ki * a - b1 - b2;
    if excess < 0 {
        return Err(Error::OutsideDualCone(format!("{k}*{a} < {b1} + {b2}")));
    }
    let target = vec![BigInt::from(a), BigInt::from(-b1), BigInt::from(-b2)];
    let mut out = Decomposition::new(two_point_basis(), target);
    let (copies, rem) = excess.div_rem(&ki);
    out.add("H".into(), unit(3, 0, 1), copies);
    out.add("E_2".into(), unit(3, 2, 1), rem);
    let (mut a, mut b1, mut b2) = (a - copies, b1, b2 + rem);
    while a > 0 {
        let m = b1.min(ki);
        out.add(beta_label(m as usize, k), beta(m as usize, k), 1);
        a -= 1;
        b1 -= m;
        b2 -= ki - m;
    }
    if b1 != 0 || b2 != 0 {
        return Err(Error::Internal(format!("beta peeling left ({b1}, {b2})")));
    }
    out.checked()
}

/// Basis labels and coordinates `(a_lambda ..., -b_1, ..., -b_r)` of a blow-up class.
pub fn blowup_coordinates(c: &BlowupClass) -> (Vec<BoxedPartition>, Vec<String>, Vec<BigInt>) {
    let ctx = c.bctx().ctx();
    let parts = ctx.partitions(c.ambient().codim());
    let exc_name = |i: usize| match c.grading() {
        Grading::Dimension(_) => format!("E_{i}"),
        Grading::Codimension(_) => format!("E^{i}"),
    };
    let mut labels: Vec<String> = parts.iter().map(|p| format!("s[{p}]")).collect();
    let mut coords: Vec<BigInt> = parts.iter().map(|p| c.ambient().coefficient(p)).collect();
    for (i, b) in c.exc().iter().enumerate() {
        labels.push(exc_name(i + 1));
        coords.push(-b);
    }
    (parts, labels, coords)
}

/// Rebuilds a blow-up class from [`blowup_coordinates`].
pub fn blowup_from_coordinates(bctx: BlowupCtx, grading: Grading, coords: &[BigInt]) -> Result<BlowupClass> {
    let ctx = bctx.ctx();
    let codim = match grading {
        Grading::Codimension(m) => m,
        Grading::Dimension(m) => ctx.dim() - m.min(ctx.dim()),
    };
    let parts = ctx.partitions(codim);
    if coords.len() != parts.len() + bctx.r() {
        return Err(Error::DimensionMismatch { expected: parts.len() + bctx.r(), found: coords.len() });
    }
    let ambient = ChowClass::from_terms(ctx, codim, parts.into_iter().zip(coords.iter().cloned()))?;
    let exc = coords[coords.len() - bctx.r()..].iter().map(|x| -x).collect();
    BlowupClass::new(bctx, grading, ambient, exc)
}

/// Peels `sum a_lambda sigma_lambda - sum b_i E_i` into `sigma_lambda - E_i`
/// and leftover `sigma_lambda`, for point `i = r` down to `1`. Each point
/// takes its `b_i` greedily from the largest remaining `a_lambda`
/// (ties in basis order).
fn peel_points(
    a: &mut [BigInt],
    b: &[BigInt],
    mut emit: impl FnMut(usize, usize, BigInt),
) -> Result<()> {
    let total_a: BigInt = a.iter().sum();
    let total_b: BigInt = b.iter().sum();
    if total_a < total_b {
        let deficit = (&total_b - &total_a).to_i64().unwrap_or(i64::MAX);
        return Err(Error::Deficit { deficit });
    }
    for i in (0..b.len()).rev() {
        let mut need = b[i].clone();
        while need.is_positive() {
            let (l, _) = a
                .iter()
                .enumerate()
                .max_by(|(i1, x), (i2, y)| x.cmp(y).then(i2.cmp(i1)))
                .expect("nonempty basis");
            let take = need.clone().min(a[l].clone());
            if !take.is_positive() {
                return Err(Error::Internal("ran out of Schubert coefficients while peeling".into()));
            }
            a[l] -= &take;
            need -= &take;
            emit(l, i, take);
        }
    }
    Ok(())
}

/// Writes a class `sum a_lambda sigma_lambda - sum b_i E_i` with all
/// `a_lambda, b_i >= 0` and `sum a >= sum b` as a combination of
/// `sigma_lambda - E_i` and `sigma_lambda`.
pub fn lemma42_decompose(c: &BlowupClass) -> Result<Decomposition> {
    let (_, labels, coords) = blowup_coordinates(c);
    let np = labels.len() - c.exc().len();
    let mut a: Vec<BigInt> = coords[..np].to_vec();
    let b: Vec<BigInt> = c.exc().to_vec();
    if a.iter().any(Signed::is_negative) || b.iter().any(Signed::is_negative) {
        return Err(Error::InequalityViolated("a_lambda >= 0 and b_i >= 0".into()));
    }
    let mut out = Decomposition::new(labels.clone(), coords.clone());
    let len = labels.len();
    peel_points(&mut a, &b, |l, i, take| {
        let mut v = unit(len, l, 1);
        v[np + i] = -BigInt::one();
        out.add(format!("{} - {}", labels[l], labels[np + i]), v, take);
    })?;
    for (l, x) in a.iter().enumerate() {
        out.add(labels[l].clone(), unit(len, l, 1), x.clone());
    }
    out.checked()
}

fn curve_basis(r: usize) -> Vec<String> {
    std::iter::once("l".to_string()).chain((1..=r).map(|i| format!("l_{i}"))).collect()
}

/// The first inequality of the applicable family that `a l - sum b_i l_i` violates.
pub fn quadric_inequality_violation(a: i64, b: &[i64]) -> Option<String> {
    let r = b.len();
    match r {
        0..=2 => {
            let s: i64 = b.iter().sum();
            (a < s).then(|| format!("a >= b_1 + ... + b_{r} fails: {a} < {s}"))
        }
        3..=6 => {
            let total: i64 = b.iter().sum();
            for i in 0..r {
                for j in i + 1..r {
                    let rhs = total + b[i] + b[j];
                    if 2 * a < rhs {
                        return Some(format!(
                            "2a >= 2b_{} + 2b_{} + sum_(k != {},{}) b_k fails: {} < {rhs}",
                            i + 1,
                            j + 1,
                            i + 1,
                            j + 1,
                            2 * a
                        ));
                    }
                }
            }
            None
        }
        _ => {
            for subset in combinations(r, 5) {
                let s: i64 = subset.iter().map(|&i| b[i]).sum();
                if a < s {
                    let names: Vec<String> = subset.iter().map(|i| format!("b_{}", i + 1)).collect();
                    return Some(format!("a >= {} fails: {a} < {s}", names.join(" + ")));
                }
            }
            None
        }
    }
}

/// Exhaustive search: is `a l - sum b_i l_i` a nonnegative integer
/// combination of `l`, `l_i`, `l - l_i` and `2l - l_i - l_j - l_k`?
///
/// Independent of [`quadric_curve_decompose`]; `l_i` absorbs any surplus so
/// only the positive parts of `b` need covering. Memoized on sorted `b`.
pub fn quadric_oracle(a: i64, b: &[i64]) -> bool {
    fn go(a: i64, b: Vec<i64>, memo: &mut std::collections::HashMap<(i64, Vec<i64>), bool>) -> bool {
        if a < 0 {
            return false;
        }
        if b.iter().all(|&x| x <= 0) {
            return true;
        }
        if a == 0 {
            return false;
        }
        let key = (a, b.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let step = |mut c: Vec<i64>, idx: &[usize]| {
            for &i in idx {
                c[i] = (c[i] - 1).max(0);
            }
            c.sort_unstable_by(|x, y| y.cmp(x));
            c
        };
        let r = b.len();
        let mut found = (0..r).filter(|&i| b[i] > 0).any(|i| go(a - 1, step(b.clone(), &[i]), memo));
        if !found && r >= 3 {
            found = combinations(r, 3)
                .iter()
                .filter(|t| t.iter().any(|&i| b[i] > 0))
                .any(|t| go(a - 2, step(b.clone(), t), memo));
        }
        memo.insert(key, found);
        found
    }
    let mut start: Vec<i64> = b.iter().map(|&x| x.max(0)).collect();
    start.sort_unstable_by(|x, y| y.cmp(x));
    go(a, start, &mut std::collections::HashMap::new())
}

/// Decomposes a curve class `a l - sum b_i l_i` on `G(2,4)` blown up at
/// `r <= 7` points into lines `l`, `l - l_i`, exceptional lines `l_i` and
/// conics `2l - l_i - l_j - l_k`.
///
/// Conics are subtracted one at a time on the three largest current `b_i`
/// (ties to the lower index), at most `floor(a/2)` times and only while
/// those three are positive. Each such conic raises `a - sum max(b_i, 0)`
/// by one; the residual must then satisfy `a' >= sum max(b'_i, 0)`.
pub fn quadric_curve_decompose(a: i64, b: &[i64]) -> Result<Decomposition> {
    let r = b.len();
    if r > 7 {
        return Err(Error::OutOfRange(format!("r = {r}; the quadric reduction covers r <= 7")));
    }
    if a < 0 {
        return Err(Error::InequalityViolated(format!("a >= 0 fails: a = {a}")));
    }
    let basis = curve_basis(r);
    let len = r + 1;
    let target: Vec<BigInt> = std::iter::once(BigInt::from(a)).chain(b.iter().map(|&x| BigInt::from(-x))).collect();
    let mut out = Decomposition::new(basis.clone(), target);
    let fits = |a: i64, b: &[i64]| a >= b.iter().map(|&x| x.max(0)).sum::<i64>();

    let (mut a_res, mut b_res) = (a, b.to_vec());
    if r >= 3 {
        for _ in 0..a / 2 {
            let mut order: Vec<usize> = (0..r).collect();
            order.sort_by(|&i, &j| b_res[j].cmp(&b_res[i]).then(i.cmp(&j)));
            if b_res[order[2]] <= 0 {
                break;
            }
            let mut tri = order[..3].to_vec();
            tri.sort_unstable();
            let mut v = unit(len, 0, 2);
            for &i in &tri {
                v[i + 1] = BigInt::from(-1);
                b_res[i] -= 1;
            }
            a_res -= 2;
            out.add(format!("2l - l_{} - l_{} - l_{}", tri[0] + 1, tri[1] + 1, tri[2] + 1), v, 1);
        }
    }
    if !fits(a_res, &b_res) {
        return Err(match quadric_inequality_violation(a, b) {
            Some(msg) => Error::InequalityViolated(msg),
            None => Error::Internal(format!("greedy conic peeling failed on a = {a}, b = {b:?}")),
        });
    }
    for (i, &x) in b_res.iter().enumerate() {
        if x < 0 {
            out.add(basis[i + 1].clone(), unit(len, i + 1, 1), -x);
        }
    }
    let mut la = vec![BigInt::from(a_res)];
    let lb: Vec<BigInt> = b_res.iter().map(|&x| BigInt::from(x.max(0))).collect();
    peel_points(&mut la, &lb, |_, i, take| {
        let mut v = unit(len, 0, 1);
        v[i + 1] = BigInt::from(-1);
        out.add(format!("l - l_{}", i + 1), v, take);
    })?;
    out.add("l".into(), unit(len, 0, 1), la[0].clone());
    out.checked()
}

/// Decomposes `a_21 sigma_{2,1} + a_3 sigma_3 - sum b_i E_i^[3]` on
/// `G(2,5)` blown up at `r <= 4` points, assuming `2 a_21 + a_3 >= sum b_i`.
pub fn g25_threecycle_decompose(a21: i64, a3: i64, b: &[i64]) -> Result<Decomposition> {
    let r = b.len();
    if r > 4 {
        return Err(Error::OutOfRange(format!("r = {r}; the reduction covers r <= 4")));
    }
    if a21 < 0 || a3 < 0 || b.iter().any(|&x| x < 0) {
        return Err(Error::InequalityViolated("a_21, a_3, b_i >= 0".into()));
    }
    let total: i64 = b.iter().sum();
    if 2 * a21 + a3 < total {
        return Err(Error::InequalityViolated(format!(
            "2a_21 + a_3 >= sum b_i fails: {} < {total}",
            2 * a21 + a3
        )));
    }
    let len = 2 + r;
    let mut basis = vec!["s[2,1]".to_string(), "s[3]".to_string()];
    basis.extend((1..=r).map(|i| format!("E^{i}")));
    let target: Vec<BigInt> = [a21, a3].into_iter().chain(b.iter().map(|&x| -x)).map(BigInt::from).collect();
    let mut out = Decomposition::new(basis, target);
    let e = |i: usize| i + 2;
    let s21_minus = |pts: &[usize]| {
        let mut v = unit(len, 0, 1);
        for &i in pts {
            v[e(i)] -= 1;
        }
        v
    };

    let (mut a21, mut a3, mut b) = (a21, a3, b.to_vec());
    loop {
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by(|&i, &j| b[j].cmp(&b[i]).then(i.cmp(&j)));
        let Some(&i) = order.first().filter(|&&i| b[i] > 0) else { break };
        if 2 * a21 >= b[i] {
            let half = b[i] / 2;
            out.add(format!("s[2,1] - 2E^{}", i + 1), s21_minus(&[i, i]), half);
            a21 -= half;
            if b[i] % 2 == 1 {
                // 2 a_21 >= b_i odd leaves at least one sigma_{2,1}
                a21 -= 1;
                match order.get(1) {
                    Some(&j) => {
                        let (lo, hi) = (i.min(j), i.max(j));
                        out.add(format!("s[2,1] - E^{} - E^{}", lo + 1, hi + 1), s21_minus(&[lo, hi]), 1);
                        b[j] -= 1;
                        if b[j] < 0 {
                            out.add(format!("E^{}", j + 1), unit(len, e(j), 1), -b[j]);
                            b[j] = 0;
                        }
                    }
                    None => {
                        out.add(format!("s[2,1] - 2E^{}", i + 1), s21_minus(&[i, i]), 1);
                        out.add(format!("E^{}", i + 1), unit(len, e(i), 1), 1);
                    }
                }
            }
            b[i] = 0;
        } else {
            out.add(format!("s[2,1] - 2E^{}", i + 1), s21_minus(&[i, i]), a21);
            b[i] -= 2 * a21;
            a21 = 0;
            for j in 0..r {
                if b[j] > 0 {
                    let mut v = unit(len, 1, 1);
                    v[e(j)] = BigInt::from(-1);
                    out.add(format!("s[3] - E^{}", j + 1), v, b[j]);
                    a3 -= b[j];
                    b[j] = 0;
                }
            }
            if a3 < 0 {
                return Err(Error::Internal("sigma_3 budget exhausted".into()));
            }
        }
    }
    out.add("s[2,1]".into(), unit(len, 0, 1), a21);
    out.add("s[3]".into(), unit(len, 1, 1), a3);
    out.checked()
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Largest `r` for which the hyperplane argument shows `Eff_1` or `Eff_2`
/// S-generated: `C(n,k) - k(n-k)`, plus one for curves when the degree is
/// at least that plus one.
pub fn sgen_bound(ctx: GrassCtx, cycle_dim: usize) -> Result<BigInt> {
    let base = binomial(ctx.n(), ctx.k()) - BigInt::from(ctx.dim());
    match cycle_dim {
        1 => {
            let bump = chow::degree(ctx)? >= &base + 1;
            Ok(if bump { base + 1 } else { base })
        }
        2 => Ok(base),
        _ => Err(Error::OutOfRange(format!("cycle dimension {cycle_dim}; bound covers 1 and 2"))),
    }
}

/// `Eff_1` of `r` very general points is S-generated exactly for `r <= deg G(k,n)`.
pub fn very_general_curve_bound(ctx: GrassCtx) -> Result<BigInt> {
    chow::degree(ctx)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SGenVerdict {
    InSpan,
    NotInSpan,
    UndecidedNeedsGeometry,
}

#[derive(Clone, Debug)]
pub struct SGenerationReport {
    pub class: BlowupClass,
    pub verdict: SGenVerdict,
    pub generators: ConeSpec,
    pub membership: Membership,
}

/// Generators `sigma_lambda`, `sigma_lambda - d_lambda E_i` and `E_i` in the
/// coordinates of [`blowup_coordinates`], where `d_lambda` is the
/// multiplicity of `Sigma_lambda` at its most singular point.
pub fn sgen_generators(bctx: BlowupCtx, grading: Grading) -> Result<ConeSpec> {
    let ctx = bctx.ctx();
    let zero = BlowupClass::zero(bctx, grading)?;
    let (parts, labels, _) = blowup_coordinates(&zero);
    let np = parts.len();
    let len = labels.len();
    let exceptional = bctx.has_exceptional_part(grading.value());
    let mut gens = Vec::new();
    for (l, lambda) in parts.iter().enumerate() {
        gens.push((labels[l].clone(), qvec(&unit(len, l, 1))));
        if !exceptional {
            continue;
        }
        let d = max_point_multiplicity(ctx, lambda)?;
        for i in 0..bctx.r() {
            let mut v = qvec(&unit(len, l, 1));
            v[np + i] = -q(d.clone());
            let coeff = if d.is_one() { String::new() } else { d.to_string() };
            gens.push((format!("{} - {coeff}{}", labels[l], labels[np + i]), v));
        }
    }
    if exceptional {
        for i in 0..bctx.r() {
            gens.push((labels[np + i].clone(), qvec(&unit(len, np + i, 1))));
        }
    }
    ConeSpec::new(labels, gens)
}

/// Whether a negative membership answer against [`sgen_generators`] settles
/// S-generation. It does for curves (no line meets two general points) and
/// for surfaces on `G(2,4)` (rigid Schubert surfaces meet one general point).
pub fn sgen_is_definitive(bctx: BlowupCtx, grading: Grading) -> bool {
    let ctx = bctx.ctx();
    let g24 = ctx.k() == 2 && ctx.n() == 4;
    match grading {
        Grading::Dimension(1) => ctx.standing_assumption_holds(),
        Grading::Dimension(2) | Grading::Codimension(2) => g24,
        Grading::Codimension(m) => ctx.dim() >= 1 && m + 1 == ctx.dim() && ctx.standing_assumption_holds(),
        _ => false,
    }
}

pub fn sgen_check(class: &BlowupClass) -> Result<SGenerationReport> {
    let generators = sgen_generators(class.bctx(), class.grading())?;
    let (_, _, coords) = blowup_coordinates(class);
    let membership = cone_membership(&generators, &qvec(&coords))?;
    let verdict = match (&membership, sgen_is_definitive(class.bctx(), class.grading())) {
        (Membership::InSpan { .. }, _) => SGenVerdict::InSpan,
        (Membership::NotInSpan { .. }, true) => SGenVerdict::NotInSpan,
        (Membership::NotInSpan { .. }, false) => SGenVerdict::UndecidedNeedsGeometry,
    };
    Ok(SGenerationReport { class: class.clone(), verdict, generators, membership })
}

/// The surface class `sigma_2 + sigma_{1,1} - E_{1,[2]} - E_{2,[2]} - E_{3,[2]}`
/// on `G(2,4)` blown up at three points, with its separating functional.
pub fn g24_nonspan_witness() -> Result<SGenerationReport> {
    g24_quadric_surface(3)
}

/// The same quadric-surface class on `r` points.
pub fn g24_quadric_surface(r: usize) -> Result<SGenerationReport> {
    let ctx = GrassCtx::new(2, 4)?;
    let bctx = BlowupCtx::new(ctx, r);
    let ambient = ChowClass::from_terms(ctx, 2, [(ctx.partition(&[2])?, 1), (ctx.partition(&[1, 1])?, 1)])?;
    let class = BlowupClass::new(bctx, Grading::Dimension(2), ambient, vec![BigInt::one(); r])?;
    sgen_check(&class)
}

/// Counts generator evaluations by sign, used in reports.
pub fn functional_profile(cone: &ConeSpec, phi: &[BigInt]) -> BTreeMap<String, BigInt> {
    let phi = qvec(phi);
    cone.generator_labels
        .iter()
        .zip(&cone.generators)
        .map(|(l, g)| (l.clone(), dot(&phi, g).to_integer()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn membership_small_cases() {
        let c = ConeSpec::from_integers(&["x", "y"], &[("e1", vec![1, 0]), ("e2", vec![0, 1])]).unwrap();
        assert_eq!(cone_membership(&c, &qv(&[1, 1])).unwrap(), Membership::InSpan { coefficients: qv(&[1, 1]) });
        let c = ConeSpec::from_integers(&["x", "y"], &[("e1", vec![1, 0])]).unwrap();
        let m = cone_membership(&c, &qv(&[0, 1])).unwrap();
        assert_eq!(m, Membership::NotInSpan { functional: bi(&[0, -1]) });
        assert!(m.verify(&c, &qv(&[0, 1])));
        assert!(cone_membership(&c, &qv(&[1])).is_err());
    }

    #[test]
    fn two_point_membership_and_facets() {
        let c = thm44_generators(2).unwrap();
        assert_eq!(c.len(), 5);
        assert!(cone_membership(&c, &qv(&[2, -1, -2])).unwrap().is_member());
        assert!(cone_membership(&c, &qv(&[1, -2, 0])).unwrap().is_member());
        assert!(!cone_membership(&c, &qv(&[1, -3, 0])).unwrap().is_member());
        for k in 2..=5 {
            assert_eq!(facets(&thm44_generators(k).unwrap()).unwrap(), thm44_expected_facets(k));
        }
    }

    #[test]
    fn two_point_decompositions() {
        let d = lemma41_decompose(2, 2, 1, 2).unwrap();
        assert_eq!(d.to_string(), "(E_2) + (H - 1E_1 - 1E_2) + (H - 0E_1 - 2E_2)");
        let d = lemma41_decompose(4, 1, 3, 1).unwrap();
        assert_eq!(d.to_string(), "(H - 3E_1 - 1E_2)");
        assert_eq!(lemma41_decompose(3, 1, 0, 0).unwrap().to_string(), "(H)");
        let err = lemma41_decompose(2, 1, 2, 1).unwrap_err();
        assert!(err.to_string().contains("outside dual-cone region"));
    }

    #[test]
    fn schubert_line_decompositions() {
        let ctx = GrassCtx::new(2, 4).unwrap();
        let c = BlowupClass::curve(BlowupCtx::new(ctx, 3), 3, &[1, 1, 1]).unwrap();
        let d = lemma42_decompose(&c).unwrap();
        assert_eq!(d.terms.len(), 3);
        assert!(d.terms.iter().all(|t| t.multiplicity.is_one()));

        let bctx = BlowupCtx::new(ctx, 1);
        let amb = ChowClass::from_terms(ctx, 2, [(ctx.partition(&[2]).unwrap(), 1), (ctx.partition(&[1, 1]).unwrap(), 1)]).unwrap();
        let d = lemma42_decompose(&BlowupClass::codim(bctx, amb, bi(&[2])).unwrap()).unwrap();
        assert_eq!(d.to_string(), "(s[2] - E^1) + (s[1,1] - E^1)");

        let ctx5 = GrassCtx::new(2, 5).unwrap();
        let amb = ChowClass::from_terms(ctx5, 3, [(ctx5.partition(&[2, 1]).unwrap(), 2), (ctx5.partition(&[3]).unwrap(), 1)]).unwrap();
        let d = lemma42_decompose(&BlowupClass::codim(BlowupCtx::new(ctx5, 2), amb, bi(&[2, 1])).unwrap()).unwrap();
        assert_eq!(d.multiplicity_of("s[2,1] - E^2"), BigInt::one());
        assert_eq!(d.multiplicity_of("s[2,1] - E^1"), BigInt::one());
        assert_eq!(d.multiplicity_of("s[3] - E^1"), BigInt::one());

        let c = BlowupClass::curve(BlowupCtx::new(ctx, 2), 1, &[1, 1]).unwrap();
        assert_eq!(lemma42_decompose(&c).unwrap_err(), Error::Deficit { deficit: 1 });
    }

    #[test]
    fn quadric_examples() {
        assert_eq!(quadric_curve_decompose(2, &[1, 1, 1]).unwrap().to_string(), "(2l - l_1 - l_2 - l_3)");
        assert_eq!(
            quadric_curve_decompose(5, &[2, 2, 1, 1]).unwrap().to_string(),
            "(2l - l_1 - l_2 - l_3) + (2l - l_1 - l_2 - l_4) + (l)"
        );
        let d = quadric_curve_decompose(5, &[1; 7]).unwrap();
        assert_eq!(d.multiplicity_of("l - l_7"), BigInt::one());
        let err = quadric_curve_decompose(3, &[1, 1, 1, 1, 1, 0, 0]).unwrap_err();
        assert!(err.to_string().contains("b_1 + b_2 + b_3 + b_4 + b_5"));
        assert!(quadric_curve_decompose(1, &[-2, 1]).unwrap().reproduces_target());
    }

    #[test]
    fn g25_examples() {
        assert_eq!(g25_threecycle_decompose(1, 0, &[2]).unwrap().to_string(), "(s[2,1] - 2E^1)");
        assert_eq!(g25_threecycle_decompose(0, 1, &[1]).unwrap().to_string(), "(s[3] - E^1)");
        assert_eq!(
            g25_threecycle_decompose(1, 1, &[3, 0, 0, 0]).unwrap().to_string(),
            "(s[2,1] - 2E^1) + (s[3] - E^1)"
        );
        assert!(g25_threecycle_decompose(1, 0, &[3]).is_err());
        assert!(g25_threecycle_decompose(2, 0, &[3]).unwrap().reproduces_target());
    }

    #[test]
    fn bounds() {
        let g = |k, n| GrassCtx::new(k, n).unwrap();
        assert_eq!(sgen_bound(g(2, 4), 1).unwrap(), BigInt::from(2));
        assert_eq!(sgen_bound(g(2, 5), 1).unwrap(), BigInt::from(5));
        assert_eq!(sgen_bound(g(2, 5), 2).unwrap(), BigInt::from(4));
        assert_eq!(very_general_curve_bound(g(3, 6)).unwrap(), BigInt::from(42));
    }

    #[test]
    fn g24_counterexample() {
        let rep = g24_nonspan_witness().unwrap();
        assert_eq!(rep.verdict, SGenVerdict::NotInSpan);
        let Membership::NotInSpan { functional } = &rep.membership else { panic!() };
        let (_, _, coords) = blowup_coordinates(&rep.class);
        assert!(dot(&qvec(functional), &qvec(&coords)).is_negative());
        assert_eq!(g24_quadric_surface(2).unwrap().verdict, SGenVerdict::InSpan);
    }
}
