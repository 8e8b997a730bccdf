//! Brute-force orbit computation over a prime field `F_p`.
//!
//! Enumerates every `d`-dimensional subspace of `F_p^(2k)` in reduced row
//! echelon form, computes incidence matrices by rank, and partitions the
//! subspaces into orbits by applying every element of `B(F_p)`. Used as an
//! independent check on the combinatorial enumeration.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::IncidenceMatrix;
use crate::error::{Error, Result};
use crate::linalg::combinations;

/// A subspace, stored as its RREF basis (canonical).
pub type Subspace = Vec<Vec<u32>>;

fn inv(x: u32, p: u32) -> u32 {
    // Fermat: x^(p-2)
    let mut acc = 1u64;
    let (mut b, mut e, m) = (x as u64, p - 2, p as u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u32
}

/// RREF over `F_p`, dropping zero rows.
pub fn rref(mut rows: Vec<Vec<u32>>, p: u32) -> Subspace {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let s = inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

pub fn rank(rows: &[Vec<u32>], p: u32) -> usize {
    rref(rows.to_vec(), p).len()
}

/// All `d`-dimensional subspaces of `F_p^n`.
pub fn subspaces(p: u32, n: usize, d: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    for pivots in combinations(n, d) {
        // free positions: row r, column c > pivots[r], c not a pivot
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| (pivots[r] + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = (p as u64).pow(free.len() as u32);
        for code in 0..total {
            let mut m = vec![vec![0u32; n]; d];
            for (r, &c) in pivots.iter().enumerate() {
                m[r][c] = 1;
            }
            let mut x = code;
            for &(r, c) in &free {
                m[r][c] = (x % p as u64) as u32;
                x /= p as u64;
            }
            out.push(m);
        }
    }
    out
}

/// `dim W ∩ (F_i + G_j)` with `f_a = e_(a-1)` and `g_b = e_(k+b-1)`.
pub fn incidence(p: u32, k: usize, w: &Subspace) -> Result<IncidenceMatrix> {
    let n = 2 * k;
    let mut entries = vec![vec![0; k + 1]; k + 1];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let mut all = w.clone();
            for a in 0..i {
                all.push((0..n).map(|c| u32::from(c == a)).collect());
            }
            for b in 0..j {
                all.push((0..n).map(|c| u32::from(c == k + b)).collect());
            }
            *e = w.len() + i + j - rank(&all, p);
        }
    }
    IncidenceMatrix::new(k, entries)
}

/// Every element of `B(F_p)`: pairs of invertible upper-triangular `k x k` blocks.
pub fn borel_group(p: u32, k: usize) -> Vec<Vec<Vec<u32>>> {
    let cells: Vec<(usize, usize)> = (0..k).flat_map(|r| (r..k).map(move |c| (r, c))).collect();
    let mut blocks = Vec::new();
    let total = (p as u64).pow(cells.len() as u32);
    for code in 0..total {
        let mut m = vec![vec![0u32; k]; k];
        let mut x = code;
        for &(r, c) in &cells {
            m[r][c] = (x % p as u64) as u32;
            x /= p as u64;
        }
        if (0..k).all(|i| m[i][i] != 0) {
            blocks.push(m);
        }
    }
    let mut out = Vec::new();
    for b1 in &blocks {
        for b2 in &blocks {
            let mut m = vec![vec![0u32; 2 * k]; 2 * k];
            for r in 0..k {
                for c in 0..k {
                    m[r][c] = b1[r][c];
                    m[k + r][k + c] = b2[r][c];
                }
            }
            out.push(m);
        }
    }
    out
}

fn apply(g: &[Vec<u32>], w: &Subspace, p: u32) -> Subspace {
    let n = g.len();
    let moved = w
        .iter()
        .map(|v| (0..n).map(|r| (0..n).map(|c| g[r][c] * v[c]).sum::<u32>() % p).collect())
        .collect();
    rref(moved, p)
}

/// Gaussian binomial `[n choose d]_p`.
pub fn gaussian_binomial(n: usize, d: usize, p: u64) -> u64 {
    if d > n {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..d {
        num *= p.pow((n - i) as u32) - 1;
        den *= p.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Orbits of `B(F_p)` on `d`-subspaces of `F_p^(2k)`, with their incidence matrices.
#[derive(Clone, Debug)]
pub struct OrbitCensus {
    pub p: u32,
    pub k: usize,
    pub d: usize,
    pub subspace_count: usize,
    /// Orbit sizes keyed by the common incidence matrix of their members.
    pub orbit_sizes: BTreeMap<IncidenceMatrix, usize>,
}

impl OrbitCensus {
    pub fn orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }

    pub fn matrices(&self) -> BTreeSet<IncidenceMatrix> {
        self.orbit_sizes.keys().cloned().collect()
    }

    pub fn total_points(&self) -> usize {
        self.orbit_sizes.values().sum()
    }
}

/// Computes the orbit partition by group action, then checks that each orbit
/// has a single incidence matrix and that distinct orbits have distinct ones.
pub fn census(p: u32, k: usize, d: usize) -> Result<OrbitCensus> {
    if !matches!(p, 2 | 3 | 5 | 7) {
        return Err(Error::OutOfRange(format!("p = {p}; supported primes are 2, 3, 5, 7")));
    }
    let spaces = subspaces(p, 2 * k, d);
    let index: HashMap<Subspace, usize> = spaces.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let group = borel_group(p, k);
    let mut orbit_of = vec![usize::MAX; spaces.len()];
    let mut orbit_sizes = BTreeMap::new();
    let mut orbit_id = 0;
    for start in 0..spaces.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let label = incidence(p, k, &spaces[start])?;
        let mut size = 0;
        for g in &group {
            let img = index[&apply(g, &spaces[start], p)];
            if orbit_of[img] == usize::MAX {
                orbit_of[img] = orbit_id;
                size += 1;
                if incidence(p, k, &spaces[img])? != label {
                    return Err(Error::Internal(format!("orbit of {:?} mixes incidence matrices", spaces[start])));
                }
            }
        }
        if orbit_sizes.insert(label.clone(), size).is_some() {
            return Err(Error::Internal(format!("two orbits share the incidence matrix {label}")));
        }
        orbit_id += 1;
    }
    Ok(OrbitCensus { p, k, d, subspace_count: spaces.len(), orbit_sizes })
}
