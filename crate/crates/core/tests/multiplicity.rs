use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use schubert_cones::chow::GrassCtx;
use schubert_cones::multiplicity::{max_point_multiplicity, rz_multiplicity};
use schubert_cones::partitions::{self, BoxedPartition};
use schubert_cones::Error;

/// The transpose in the conjugate box, realising `G(k,n) = G(n-k,n)`.
fn conjugate(p: &BoxedPartition) -> BoxedPartition {
    let parts: Vec<usize> = (1..=p.width()).map(|j| p.parts().iter().filter(|&&x| x >= j).count()).collect();
    BoxedPartition::new(&parts, p.width(), p.k()).unwrap()
}

fn contains(lambda: &BoxedPartition, mu: &BoxedPartition) -> bool {
    lambda.parts().iter().zip(mu.parts()).all(|(l, m)| l <= m)
}

#[test]
fn published_values() {
    let c = GrassCtx::new(2, 4).unwrap();
    assert_eq!(rz_multiplicity(c, &c.partition(&[1]).unwrap(), &c.point()).unwrap(), BigInt::from(2));
    let c = GrassCtx::new(2, 5).unwrap();
    assert_eq!(rz_multiplicity(c, &c.partition(&[2, 1]).unwrap(), &c.partition(&[3, 3]).unwrap()).unwrap(), BigInt::from(2));
    for k in 2..=5 {
        let c = GrassCtx::new(k, 2 * k).unwrap();
        assert_eq!(max_point_multiplicity(c, &c.partition(&[1]).unwrap()).unwrap(), BigInt::from(k));
    }
}

#[test]
fn cell_outside_is_rejected() {
    let c = GrassCtx::new(2, 4).unwrap();
    let r = rz_multiplicity(c, &c.partition(&[2]).unwrap(), &c.partition(&[1, 1]).unwrap());
    assert!(matches!(r, Err(Error::CellNotContained { .. })));
}

#[test]
fn projective_space_is_smooth() {
    for n in 2..=7 {
        let c = GrassCtx::new(1, n).unwrap();
        for l in partitions::enumerate_box(1, n - 1) {
            for m in partitions::enumerate_box(1, n - 1).into_iter().filter(|m| contains(&l, m)) {
                assert!(rz_multiplicity(c, &l, &m).unwrap().is_one());
            }
        }
    }
}

/// The Schubert divisor is cut out near the point by a `min(k, n-k)` minor.
#[test]
fn divisor_at_the_point() {
    for k in 1..=4 {
        for n in k + 1..=k + 5 {
            let c = GrassCtx::new(k, n).unwrap();
            assert_eq!(max_point_multiplicity(c, &c.partition(&[1]).unwrap()).unwrap(), BigInt::from(k.min(n - k)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn invariant_under_duality(k in 1usize..=4, w in 1usize..=4, s1 in 0usize..1000, s2 in 0usize..1000) {
        let all = partitions::enumerate_box(k, w);
        let l = &all[s1 % all.len()];
        let above: Vec<_> = all.iter().filter(|m| contains(l, m)).collect();
        let m = above[s2 % above.len()];
        let c = GrassCtx::new(k, k + w).unwrap();
        let d = GrassCtx::new(w, k + w).unwrap();
        let here = rz_multiplicity(c, l, m).unwrap();
        prop_assert!(here.is_positive());
        prop_assert_eq!(here, rz_multiplicity(d, &conjugate(l), &conjugate(m)).unwrap());
    }
}
