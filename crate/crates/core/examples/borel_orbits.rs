//! Borel orbits on `G(d, 2k)` labelled by incidence matrices, checked against
//! a brute-force orbit computation over `F_2`.

use std::collections::BTreeSet;

use schubert_cones::orbits::{self, finite_field};

fn main() -> Result<(), schubert_cones::Error> {
    let (k, d) = (2, 2);
    let reps = orbits::enumerate_orbits(k, d);
    for rep in &reps {
        println!("{rep}  orbit dimension {}", orbits::orbit_dimension(rep, k, 0));
        println!("{}", orbits::incidence_of_representative(rep, k));
    }
    let census = finite_field::census(2, k, d)?;
    let ours: BTreeSet<_> = reps.iter().map(|r| orbits::incidence_of_representative(r, k)).collect();
    println!("{} orbits over F_2 covering {} subspaces; labels agree: {}", census.orbit_count(), census.total_points(), census.matrices() == ours);

    for (k, d) in [(2, 3), (3, 3), (4, 3)] {
        let r = orbits::dense_orbit_dimension_check(k, d)?;
        println!("k = {k}, d = {d}: dim B = {}, dim G = {}, {:?}", r.group_dim, r.grassmannian_dim, r.verdict);
    }
    Ok(())
}
