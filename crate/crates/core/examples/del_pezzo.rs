//! The family `D_delta` on `P^2` blown up at ten points, checked exactly in
//! `Q(sqrt q, sqrt q')`.

use num_rational::BigRational;
use schubert_cones::delpezzo;

fn main() -> Result<(), schubert_cones::Error> {
    let case = delpezzo::fano_case("grass25")?;
    let (lo, hi) = delpezzo::q_interval(case.n)?;
    println!("{}: N = {}, {lo} < q < {hi}", case.description, case.n);

    let q = BigRational::new(1.into(), 10.into());
    let d = delpezzo::build_d_delta(case.n, &q)?;
    println!("D = {d}\nD^2 = {}", d.self_intersection()?);

    let report = delpezzo::verify_case(&case, &q)?;
    for c in &report.checks {
        println!("  {:?} {} ({})", c.status, c.name, c.value);
    }
    for g in &report.gated {
        println!("  assumes {}: {}", g.assumption, g.statement);
    }
    let edge = delpezzo::verify_nef_conditions(case.n, &hi)?;
    println!("at q = {hi}: failing {:?}", edge.failures());
    Ok(())
}
