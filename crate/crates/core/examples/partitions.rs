//! Partitions in a `k x (n-k)` box: enumeration by size and complements.

use schubert_cones::partitions;

fn main() {
    let (k, w) = (2, 3);
    for m in 0..=k * w {
        let grade: Vec<String> = partitions::enumerate(k, w, m).iter().map(|p| p.to_string()).collect();
        println!("size {m}: {}", grade.join("  "));
    }
    let p = partitions::BoxedPartition::parse("3,1", k, w).unwrap();
    println!("dual of {p} in the {k}x{w} box is {}", p.dual());
}
