use proptest::prelude::*;
use schubert_cones::partitions::{self, BoxedPartition};
use schubert_cones::Error;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Partitions of `m` into at most `k` parts, each at most `w`, by recursion
/// on the largest part.
fn count(k: usize, w: usize, m: usize) -> usize {
    if m == 0 {
        return 1;
    }
    if k == 0 || w == 0 {
        return 0;
    }
    (1..=w.min(m)).map(|first| count(k - 1, first, m - first)).sum()
}

#[test]
fn codimension_two_on_g24() {
    let got = partitions::enumerate(2, 2, 2);
    assert_eq!(got.iter().map(|p| p.nonzero_parts().to_vec()).collect::<Vec<_>>(), vec![vec![2], vec![1, 1]]);
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(BoxedPartition::new(&[1, 2], 2, 3), Err(Error::InvalidPartition { .. })));
    assert!(matches!(BoxedPartition::new(&[4], 2, 3), Err(Error::InvalidPartition { .. })));
    assert!(matches!(BoxedPartition::new(&[1, 1, 1], 2, 3), Err(Error::InvalidPartition { .. })));
    assert!(BoxedPartition::parse("2,x", 2, 3).is_err());
    assert_eq!(BoxedPartition::parse("2,1,0", 2, 3).unwrap(), BoxedPartition::new(&[2, 1], 2, 3).unwrap());
    assert_eq!(BoxedPartition::parse("", 2, 3).unwrap(), BoxedPartition::empty(2, 3));
}

proptest! {
    #[test]
    fn enumeration_counts(k in 1usize..5, w in 1usize..5) {
        let mut total = 0;
        for m in 0..=k * w {
            let ps = partitions::enumerate(k, w, m);
            prop_assert_eq!(ps.len(), count(k, w, m));
            prop_assert!(ps.windows(2).all(|p| p[0] < p[1]));
            for p in &ps {
                prop_assert_eq!(p.size(), m);
                prop_assert!(p.parts().windows(2).all(|x| x[0] >= x[1]));
                prop_assert!(p.parts().iter().all(|&x| x <= w));
            }
            total += ps.len();
        }
        prop_assert_eq!(total, binomial(k + w, k));
        prop_assert_eq!(partitions::enumerate_box(k, w).len(), total);
    }

    #[test]
    fn dual_is_an_involution(k in 1usize..5, w in 1usize..5, seed in 0usize..1000) {
        let all = partitions::enumerate_box(k, w);
        let p = &all[seed % all.len()];
        prop_assert_eq!(&p.dual().dual(), p);
        prop_assert_eq!(p.size() + p.dual().size(), k * w);
    }

    #[test]
    fn display_parse_round_trip(k in 1usize..5, w in 1usize..5, seed in 0usize..1000) {
        let all = partitions::enumerate_box(k, w);
        let p = &all[seed % all.len()];
        prop_assert_eq!(&BoxedPartition::parse(&p.to_string(), k, w).unwrap(), p);
    }
}
