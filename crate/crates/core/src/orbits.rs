//! Orbits of the block Borel group `B = B_1 x B_2` on `G(k, 2k)`.
//!
//! The basis is `f_1..f_k, g_1..g_k` with flags `F_i = <f_1..f_i>` and
//! `G_j = <g_1..g_j>`. A subspace `W` is labelled by its incidence matrix
//! `I_W[i][j] = dim W ∩ (F_i + G_j)`, `0 <= i, j <= k`; orbits are exactly
//! the fibres of this labelling. Representatives are spanned by vectors
//! `f_i + g_j` using each nonzero index at most once, where index `0`
//! drops the summand.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank};

pub mod finite_field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IncidenceMatrix {
    k: usize,
    entries: Vec<Vec<usize>>,
}

impl IncidenceMatrix {
    /// Validates shape, `entry(0,0) = 0`, monotonicity and unit steps.
    pub fn new(k: usize, entries: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidIncidence(m.to_string()));
        if entries.len() != k + 1 || entries.iter().any(|r| r.len() != k + 1) {
            return bad("matrix must be (k+1) x (k+1)");
        }
        if entries[0][0] != 0 {
            return bad("entry(0,0) must be 0");
        }
        if entries[k][k] > k {
            return bad("entry(k,k) exceeds k");
        }
        for i in 0..=k {
            for j in 0..=k {
                let e = entries[i][j];
                if i > 0 && !(e == entries[i - 1][j] || e == entries[i - 1][j] + 1) {
                    return bad("column steps must be 0 or 1");
                }
                if j > 0 && !(e == entries[i][j - 1] || e == entries[i][j - 1] + 1) {
                    return bad("row steps must be 0 or 1");
                }
            }
        }
        Ok(Self { k, entries })
    }

    pub fn zero(k: usize) -> Self {
        Self { k, entries: vec![vec![0; k + 1]; k + 1] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// `dim W`.
    pub fn dim(&self) -> usize {
        self.entries[self.k][self.k]
    }

    /// Componentwise `self <= other`; a heuristic for closure containment.
    pub fn le_componentwise(&self, other: &Self) -> bool {
        self.k == other.k
            && self.entries.iter().flatten().zip(other.entries.iter().flatten()).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Pairs `(i, j)` standing for `f_i + g_j`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitRepresentative {
    pairs: Vec<(usize, usize)>,
}

impl OrbitRepresentative {
    pub fn new(mut pairs: Vec<(usize, usize)>, k: usize) -> Result<Self> {
        let mut f_used = vec![false; k + 1];
        let mut g_used = vec![false; k + 1];
        for &(i, j) in &pairs {
            if i > k || j > k {
                return Err(Error::InvalidIncidence(format!("pair ({i},{j}) outside 0..={k}")));
            }
            if (i, j) == (0, 0) {
                return Err(Error::InvalidIncidence("pair (0,0) is the zero vector".into()));
            }
            if (i > 0 && std::mem::replace(&mut f_used[i], true)) || (j > 0 && std::mem::replace(&mut g_used[j], true)) {
                return Err(Error::InvalidIncidence(format!("index reused at ({i},{j})")));
            }
        }
        pairs.sort_unstable();
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    /// Basis vectors in coordinates `(f_1..f_k, g_1..g_k, extra_1..extra_s)`.
    pub fn vectors(&self, k: usize, s: usize) -> Vec<Vec<BigRational>> {
        self.pairs
            .iter()
            .map(|&(i, j)| {
                let mut v = vec![BigRational::zero(); 2 * k + s];
                if i > 0 {
                    v[i - 1] = BigRational::one();
                }
                if j > 0 {
                    v[k + j - 1] = BigRational::one();
                }
                v
            })
            .collect()
    }
}

impl fmt::Display for OrbitRepresentative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self
            .pairs
            .iter()
            .map(|&(i, j)| match (i, j) {
                (0, j) => format!("g{j}"),
                (i, 0) => format!("f{i}"),
                (i, j) => format!("f{i}+g{j}"),
            })
            .collect();
        write!(f, "<{}>", v.join(", "))
    }
}

/// `entry(i,j) = #{l : i_l <= i, j_l <= j}`.
pub fn incidence_of_representative(rep: &OrbitRepresentative, k: usize) -> IncidenceMatrix {
    let mut m = IncidenceMatrix::zero(k);
    for i in 0..=k {
        for j in 0..=k {
            m.entries[i][j] = rep.pairs.iter().filter(|&&(a, b)| a <= i && b <= j).count();
        }
    }
    m
}

/// Greedy peeling: repeatedly take the lexicographically first nonzero entry
/// `(i, j)` of the residual and remove the rectangle of ones it spans.
pub fn representative_from_incidence(m: &IncidenceMatrix) -> Result<OrbitRepresentative> {
    let k = m.k;
    let mut residual: Vec<Vec<i64>> = m.entries.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let mut pairs = Vec::new();
    while let Some((i, j)) = (0..=k).flat_map(|i| (0..=k).map(move |j| (i, j))).find(|&(i, j)| residual[i][j] != 0) {
        if pairs.len() == k {
            return Err(Error::InvalidIncidence("more than k peeling steps".into()));
        }
        for row in residual.iter_mut().skip(i) {
            for x in row.iter_mut().skip(j) {
                *x -= 1;
            }
        }
        if residual.iter().flatten().any(|&x| x < 0) {
            return Err(Error::InvalidIncidence(format!("peeling at ({i},{j}) went negative")));
        }
        pairs.push((i, j));
    }
    let rep = OrbitRepresentative::new(pairs, k)?;
    if incidence_of_representative(&rep, k) != *m {
        return Err(Error::InvalidIncidence("peeled representative does not reproduce the matrix".into()));
    }
    Ok(rep)
}

/// All orbits of `B` on `G(dim, 2k)`, one canonical representative each,
/// sorted by incidence matrix.
pub fn enumerate_orbits(k: usize, dim: usize) -> Vec<OrbitRepresentative> {
    fn go(
        k: usize,
        dim: usize,
        start: usize,
        cells: &[(usize, usize)],
        f_used: &mut Vec<bool>,
        g_used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == dim {
            out.push(cur.clone());
            return;
        }
        for c in start..cells.len() {
            let (i, j) = cells[c];
            if (i > 0 && f_used[i]) || (j > 0 && g_used[j]) {
                continue;
            }
            if i > 0 {
                f_used[i] = true;
            }
            if j > 0 {
                g_used[j] = true;
            }
            cur.push((i, j));
            go(k, dim, c + 1, cells, f_used, g_used, cur, out);
            cur.pop();
            if i > 0 {
                f_used[i] = false;
            }
            if j > 0 {
                g_used[j] = false;
            }
        }
    }
    if dim > k {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> =
        (0..=k).flat_map(|i| (0..=k).map(move |j| (i, j))).filter(|&c| c != (0, 0)).collect();
    let mut raw = Vec::new();
    go(k, dim, 0, &cells, &mut vec![false; k + 1], &mut vec![false; k + 1], &mut Vec::new(), &mut raw);
    let mut keyed: Vec<(IncidenceMatrix, OrbitRepresentative)> = raw
        .into_iter()
        .map(|pairs| {
            let rep = OrbitRepresentative::new(pairs, k).expect("enumeration respects index rules");
            let m = incidence_of_representative(&rep, k);
            let canonical = representative_from_incidence(&m).expect("realized matrices peel");
            (m, canonical)
        })
        .collect();
    keyed.sort();
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, r)| r).collect()
}

/// Whether `(r, c)` is a free entry of the group in `GL_{2k+s}`: upper
/// triangular blocks on `F` and `G`, arbitrary rows above the extra `s`
/// columns and an upper-triangular `s x s` corner.
fn in_group_shape(k: usize, r: usize, c: usize) -> bool {
    let block = |x: usize| if x < k { 0 } else if x < 2 * k { 1 } else { 2 };
    match (block(r), block(c)) {
        (0, 0) | (1, 1) | (2, 2) => r <= c,
        (0, 2) | (1, 2) => true,
        _ => false,
    }
}

/// `dim B - dim Stab_B(W)` for `W` spanned by the representative in
/// `F^(2k+s)`, as the rank of `X -> A X W` on the Lie algebra, where the
/// rows of `A` cut out `W`.
pub fn orbit_dimension(rep: &OrbitRepresentative, k: usize, s: usize) -> usize {
    let n = 2 * k + s;
    let w = rep.vectors(k, s);
    if w.is_empty() {
        return 0;
    }
    // rows of `ann` span the annihilator of W
    let ann = nullspace(&w, n);
    let mut images: Vec<Vec<BigRational>> = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if !in_group_shape(k, r, c) {
                continue;
            }
            // A E_rc W has entries ann[a][r] * w[b][c]
            let mut v = Vec::with_capacity(ann.len() * w.len());
            for a in &ann {
                for b in &w {
                    v.push(&a[r] * &b[c]);
                }
            }
            images.push(v);
        }
    }
    rank(&images)
}

/// Dimension of the group of `k x k` block upper-triangular matrices with `d` blocks.
pub fn block_borel_dimension(k: usize, d: usize) -> usize {
    d * k * (k + 1) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DenseOrbitVerdict {
    /// `dim B < dim G(k, dk)`: no dense orbit.
    Obstruction,
    /// Equal dimensions: the count alone decides nothing.
    Boundary,
    NoObstruction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DenseOrbitReport {
    pub k: usize,
    pub d: usize,
    pub group_dim: usize,
    pub grassmannian_dim: usize,
    pub verdict: DenseOrbitVerdict,
}

pub fn dense_orbit_dimension_check(k: usize, d: usize) -> Result<DenseOrbitReport> {
    if k < 1 || d < 2 {
        return Err(Error::OutOfRange(format!("need k >= 1 and d >= 2, got k = {k}, d = {d}")));
    }
    let group_dim = block_borel_dimension(k, d);
    let grassmannian_dim = (d - 1) * k * k;
    let verdict = match group_dim.cmp(&grassmannian_dim) {
        std::cmp::Ordering::Less => DenseOrbitVerdict::Obstruction,
        std::cmp::Ordering::Equal => DenseOrbitVerdict::Boundary,
        std::cmp::Ordering::Greater => DenseOrbitVerdict::NoObstruction,
    };
    Ok(DenseOrbitReport { k, d, group_dim, grassmannian_dim, verdict })
}
