use std::collections::BTreeSet;

use proptest::prelude::*;

use schubert_cones::orbits::{self, finite_field, DenseOrbitVerdict, IncidenceMatrix, OrbitRepresentative};
use schubert_cones::Error;

/// Keeps the first occurrence of each nonzero index on either side.
fn admissible(k: usize, raw: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let (mut f, mut g) = (vec![false; k + 1], vec![false; k + 1]);
    let mut out = Vec::new();
    for &(i, j) in raw {
        let (i, j) = (i % (k + 1), j % (k + 1));
        if (i, j) == (0, 0) || (i > 0 && f[i]) || (j > 0 && g[j]) {
            continue;
        }
        f[i] |= i > 0;
        g[j] |= j > 0;
        out.push((i, j));
    }
    out.truncate(k);
    out
}

#[test]
fn rejects_malformed_input() {
    assert!(matches!(OrbitRepresentative::new(vec![(1, 1), (1, 2)], 2), Err(Error::InvalidIncidence(_))));
    assert!(matches!(OrbitRepresentative::new(vec![(0, 0)], 2), Err(Error::InvalidIncidence(_))));
    assert!(IncidenceMatrix::new(1, vec![vec![0, 2], vec![1, 1]]).is_err());
    assert!(IncidenceMatrix::new(1, vec![vec![1, 1], vec![1, 1]]).is_err());
}

#[test]
fn orbit_counts_match_the_census() {
    for (p, k) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)] {
        for d in 0..=k {
            let c = finite_field::census(p, k, d).unwrap();
            let expected: BTreeSet<IncidenceMatrix> =
                orbits::enumerate_orbits(k, d).iter().map(|r| orbits::incidence_of_representative(r, k)).collect();
            assert_eq!(c.matrices(), expected, "p = {p}, k = {k}, d = {d}");
            assert_eq!(c.total_points() as u64, finite_field::gaussian_binomial(2 * k, d, p as u64));
            assert_eq!(c.subspace_count, c.total_points());
        }
    }
}

#[test]
fn dense_orbit_obstruction() {
    let r = orbits::dense_orbit_dimension_check(3, 3).unwrap();
    assert_eq!((r.group_dim, r.grassmannian_dim, r.verdict), (18, 18, DenseOrbitVerdict::Boundary));
    assert_eq!(orbits::dense_orbit_dimension_check(4, 3).unwrap().verdict, DenseOrbitVerdict::Obstruction);
    assert_eq!(orbits::dense_orbit_dimension_check(2, 2).unwrap().verdict, DenseOrbitVerdict::NoObstruction);
    assert!(orbits::dense_orbit_dimension_check(2, 1).is_err());
}

proptest! {
    #[test]
    fn incidence_round_trip(k in 1usize..=5, raw in proptest::collection::vec((0usize..6, 0usize..6), 0..8)) {
        let rep = OrbitRepresentative::new(admissible(k, &raw), k).unwrap();
        let m = orbits::incidence_of_representative(&rep, k);
        prop_assert_eq!(m.dim(), rep.dim());
        prop_assert_eq!(m.entry(k, k), rep.dim());
        let back = orbits::representative_from_incidence(&m).unwrap();
        prop_assert_eq!(orbits::incidence_of_representative(&back, k), m.clone());
        prop_assert_eq!(IncidenceMatrix::new(k, m.entries().to_vec()).unwrap(), m);
    }

    /// Orbit dimensions are bounded by `dim G(d, 2k) = d(2k - d) <= k^2`.
    #[test]
    fn orbit_dimension_is_bounded(k in 1usize..=3, raw in proptest::collection::vec((0usize..4, 0usize..4), 0..4)) {
        let rep = OrbitRepresentative::new(admissible(k, &raw), k).unwrap();
        let d = rep.dim();
        let od = orbits::orbit_dimension(&rep, k, 0);
        prop_assert!(od <= d * (2 * k - d));
        prop_assert!(od <= k * k);
    }
}
