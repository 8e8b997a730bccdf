//! Acceptance criteria 1-9, one PASS/FAIL line each.
//!
//! Every comparison is exact (tolerance 0); the only numeric thresholds are
//! the wall-clock budgets below and the interval precision used as a
//! secondary cross-check of exact surd signs.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use schubert_cones::blowup::{BlowupClass, BlowupCtx, Grading};
use schubert_cones::chow::{self, ChowClass, GrassCtx, ProductCache};
use schubert_cones::cones::{self, ConeSpec, Membership, SGenVerdict};
use schubert_cones::delpezzo::{self, interval, CheckStatus};
use schubert_cones::multiplicity;
use schubert_cones::orbits::{self, finite_field, IncidenceMatrix};
use schubert_cones::partitions;
use schubert_cones::cli::verify;

/// Exact arithmetic throughout: the allowed absolute error on every value.
const TOLERANCE: i64 = 0;
const BUDGET_DEGREES: Duration = Duration::from_secs(10);
const BUDGET_RING: Duration = Duration::from_secs(60);
const BUDGET_THM44: Duration = Duration::from_secs(60);
/// Fixed-point precision of the interval cross-check for surd signs.
const INTERVAL_BITS: u32 = 256;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Written to the process stdout directly so the line survives test-output capture.
fn report(n: u32, title: &str, o: &Outcome) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{} criterion {n} ({title}): {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
}

fn rq(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn boxes(max_dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 1..=max_dim {
        for n in k + 1..=k + max_dim {
            if k * (n - k) <= max_dim {
                out.push((k, n));
            }
        }
    }
    out
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// An explicit separating functional: nonnegative on every generator and
/// negative on `v`. Checked here by substitution, not by the library.
fn certificate_separates(m: &Membership, cone: &ConeSpec, v: &[BigRational]) -> bool {
    match m {
        Membership::InSpan { .. } => false,
        Membership::NotInSpan { functional } => {
            let phi: Vec<BigRational> = functional.iter().cloned().map(BigRational::from_integer).collect();
            cone.generators().iter().all(|g| !dot(&phi, g).is_negative()) && dot(&phi, v).is_negative()
        }
    }
}

/// Coefficients are nonnegative and reproduce `v`.
fn combination_reproduces(m: &Membership, cone: &ConeSpec, v: &[BigRational]) -> bool {
    match m {
        Membership::NotInSpan { .. } => false,
        Membership::InSpan { coefficients } => {
            if coefficients.iter().any(|c| c.is_negative()) {
                return false;
            }
            (0..v.len()).all(|i| coefficients.iter().zip(cone.generators()).map(|(c, g)| c * &g[i]).sum::<BigRational>() == v[i])
        }
    }
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (k, n, want) in [(2, 4, 2), (2, 5, 5), (3, 6, 42)] {
        let c = GrassCtx::new(k, n).unwrap();
        let closed = chow::degree_closed_form(c);
        let pieri = chow::degree_by_pieri(c).unwrap();
        if closed != BigInt::from(want) || pieri != BigInt::from(want) {
            bad.push(format!("G({k},{n}): closed {closed}, pieri {pieri}, want {want}"));
        }
    }
    let t = start.elapsed();
    outcome(bad.is_empty() && t < BUDGET_DEGREES, format!("mismatches {bad:?}, tolerance {TOLERANCE}, {t:?} < {BUDGET_DEGREES:?}"))
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let (mut pairs, mut bad) = (0usize, Vec::new());
    for (k, n) in boxes(12) {
        let c = GrassCtx::new(k, n).unwrap();
        let cache = ProductCache::new(c);
        let all = partitions::enumerate_box(k, n - k);
        for l in &all {
            for m in c.partitions(c.dim() - l.size()) {
                pairs += 1;
                let p = chow::pair(&ChowClass::schubert(c, l).unwrap(), &ChowClass::schubert(c, &m).unwrap()).unwrap();
                let cached = cache.schubert_product(l, &m).unwrap().coefficient(&c.point());
                let want = BigInt::from(u8::from(m == l.dual()));
                if p != want || cached != want {
                    bad.push(format!("G({k},{n}) {l}.{m}"));
                }
            }
            if chow::giambelli(l).evaluate(c).unwrap() != ChowClass::schubert(c, l).unwrap() {
                bad.push(format!("giambelli G({k},{n}) {l}"));
            }
        }
    }
    let t = start.elapsed();
    outcome(bad.is_empty() && t < BUDGET_RING, format!("{pairs} complementary pairs, failures {bad:?}, tolerance {TOLERANCE}, {t:?} < {BUDGET_RING:?}"))
}

fn criterion3() -> Outcome {
    let mut bad = Vec::new();
    for k in 2..=5 {
        let c = GrassCtx::new(k, 2 * k).unwrap();
        let m = multiplicity::max_point_multiplicity(c, &c.partition(&[1]).unwrap()).unwrap();
        let direct = multiplicity::rz_multiplicity(c, &c.partition(&[1]).unwrap(), &c.point()).unwrap();
        if m != BigInt::from(k) || direct != m {
            bad.push(format!("sigma_1 on G({k},{}) -> {m}", 2 * k));
        }
    }
    let c = GrassCtx::new(2, 5).unwrap();
    let m21 = multiplicity::rz_multiplicity(c, &c.partition(&[2, 1]).unwrap(), &c.partition(&[3, 3]).unwrap()).unwrap();
    if m21 != BigInt::from(2) {
        bad.push(format!("sigma_21 on G(2,5) -> {m21}"));
    }
    let mut diag = 0;
    for (k, n) in boxes(12) {
        let c = GrassCtx::new(k, n).unwrap();
        for l in partitions::enumerate_box(k, n - k) {
            diag += 1;
            if !multiplicity::rz_multiplicity(c, &l, &l).unwrap().is_one() {
                bad.push(format!("diagonal G({k},{n}) {l}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{diag} diagonal cells, failures {bad:?}, tolerance {TOLERANCE}"))
}

fn criterion4() -> Outcome {
    let start = Instant::now();
    let (mut inside, mut outside, mut bad) = (0usize, 0usize, Vec::new());
    for k in 2..=6usize {
        let cone = cones::thm44_generators(k).unwrap();
        let ki = k as i64;
        for a in 0..=6i64 {
            for b1 in 0..=6 * ki {
                for b2 in 0..=6 * ki {
                    let v = vec![rq(a), rq(-b1), rq(-b2)];
                    let m = cones::cone_membership(&cone, &v).unwrap();
                    if ki * a >= b1 + b2 {
                        inside += 1;
                        let d = cones::lemma41_decompose(k, a, b1, b2);
                        if !(d.is_ok_and(|d| d.reproduces_target()) && combination_reproduces(&m, &cone, &v)) {
                            bad.push((k, a, b1, b2));
                        }
                    } else {
                        outside += 1;
                        if !certificate_separates(&m, &cone, &v) {
                            bad.push((k, a, b1, b2));
                        }
                    }
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && t < BUDGET_THM44,
        format!("{inside} members decomposed, {outside} certificates re-verified, failures {bad:?}, {t:?} < {BUDGET_THM44:?}"),
    )
}

/// Nonincreasing tuples of length `r` with entries in `lo..=hi`.
fn sorted_tuples(r: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (lo..=hi).rev() {
        for mut rest in sorted_tuples(r - 1, lo, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All tuples of length `r` with entries in `lo..=hi`.
fn all_tuples(r: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out.into_iter().flat_map(|t: Vec<i64>| (lo..=hi).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

fn criterion5() -> Outcome {
    let (mut admissible, mut effective, mut bad) = (0usize, 0usize, Vec::new());
    for r in 0..=7usize {
        for a in 0..=6i64 {
            // every ordering for r <= 4; for larger r the problem is symmetric
            // and nonincreasing tuples cover each orbit once
            let tuples = if r <= 4 { all_tuples(r, -1, a) } else { sorted_tuples(r, -1, a) };
            for b in tuples {
                if cones::quadric_inequality_violation(a, &b).is_some() {
                    continue;
                }
                admissible += 1;
                let oracle = cones::quadric_oracle(a, &b);
                let d = cones::quadric_curve_decompose(a, &b);
                effective += usize::from(oracle);
                let resums = d.as_ref().map_or(true, |d| d.reproduces_target());
                if d.is_ok() != oracle || !resums {
                    bad.push((a, b));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{admissible} classes satisfy the inequalities, {effective} decompose, exhaustive search agrees on all; failures {bad:?}, tolerance {TOLERANCE}"),
    )
}

fn criterion6() -> Outcome {
    let w = cones::g24_nonspan_witness().unwrap();
    let coords: Vec<BigRational> = cones::blowup_coordinates(&w.class).2.into_iter().map(BigRational::from_integer).collect();
    let c = w.class.ambient().ctx();
    let expected_ambient = ChowClass::from_terms(c, 2, [(c.partition(&[2]).unwrap(), 1), (c.partition(&[1, 1]).unwrap(), 1)]).unwrap();
    let witness_ok = w.verdict == SGenVerdict::NotInSpan
        && w.class.ambient() == &expected_ambient
        && w.class.exc().iter().all(|x| x.is_one())
        && w.class.exc().len() == 3
        && certificate_separates(&w.membership, &w.generators, &coords);

    let two = cones::g24_quadric_surface(2).unwrap();
    let coords2: Vec<BigRational> = cones::blowup_coordinates(&two.class).2.into_iter().map(BigRational::from_integer).collect();
    let lp_ok = two.verdict == SGenVerdict::InSpan && combination_reproduces(&two.membership, &two.generators, &coords2);
    let constructive = cones::lemma42_decompose(&two.class).is_ok_and(|d| d.reproduces_target());
    outcome(witness_ok && lp_ok && constructive, format!("r = 3 certificate {witness_ok}, r = 2 LP combination {lp_ok}, r = 2 constructive decomposition {constructive}"))
}

fn criterion7() -> Outcome {
    let mut bad = Vec::new();
    let mut reps = 0;
    for k in 1..=4 {
        for d in 0..=k {
            for rep in orbits::enumerate_orbits(k, d) {
                reps += 1;
                let m = orbits::incidence_of_representative(&rep, k);
                if orbits::representative_from_incidence(&m).ok().as_ref() != Some(&rep) {
                    bad.push(format!("round trip {rep}"));
                }
            }
        }
    }
    for p in [2u32, 3] {
        for k in 1..=2 {
            for d in 0..=k {
                let census = finite_field::census(p, k, d).unwrap();
                let ours: BTreeSet<IncidenceMatrix> = orbits::enumerate_orbits(k, d).iter().map(|r| orbits::incidence_of_representative(r, k)).collect();
                let points = finite_field::gaussian_binomial(2 * k, d, p as u64) as usize;
                if census.matrices() != ours || census.total_points() != points || census.subspace_count != points {
                    bad.push(format!("census p = {p}, k = {k}, d = {d}"));
                }
            }
        }
    }
    let g24 = finite_field::census(2, 2, 2).unwrap();
    let sizes: Vec<usize> = g24.orbit_sizes.values().copied().collect();
    if g24.total_points() != 35 {
        bad.push(format!("|G(2,4)(F_2)| partition {sizes:?}"));
    }
    for k in 1..=3 {
        let max = orbits::enumerate_orbits(k, k).iter().map(|r| orbits::orbit_dimension(r, k, 0)).max();
        if max != Some(k * k) {
            bad.push(format!("max orbit dimension k = {k}: {max:?}"));
        }
    }
    let mut grid = 0;
    for k in 1..=6 {
        for d in 2..=6 {
            grid += 1;
            let r = orbits::dense_orbit_dimension_check(k, d).unwrap();
            if r.group_dim != d * k * (k + 1) / 2 || r.grassmannian_dim != (d - 1) * k * k {
                bad.push(format!("dense orbit ({k},{d})"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{reps} representatives, G(2,4)(F_2) orbit sizes {sizes:?}, {grid} (k,d) pairs, failures {bad:?}"))
}

fn criterion8() -> Outcome {
    let mut bad = Vec::new();
    let mut samples = 0;
    for case in delpezzo::fano_cases().unwrap() {
        let qs = delpezzo::sample_q(case.n).unwrap();
        if qs.len() != 5 {
            bad.push(format!("{}: {} samples", case.name, qs.len()));
        }
        for q in qs {
            samples += 1;
            let d = delpezzo::build_d_delta(case.n, &q).unwrap();
            let qp = delpezzo::q_prime(case.n, &q);
            let nine = rq(9);
            let mut exact = vec![
                d.self_intersection().unwrap().is_zero(),
                (&nine * &q) < BigRational::one(),
                (&nine * &qp) < BigRational::one(),
            ];
            let mut values = vec![d.self_intersection().unwrap()];
            for g in &case.kernel_generators {
                let x = delpezzo::intersect(&d, g).unwrap();
                exact.push(x.is_zero());
                values.push(x);
            }
            for g in &case.gamma_generators {
                let x = delpezzo::intersect(&d, g).unwrap();
                exact.push(x.is_positive());
                values.push(x);
            }
            let intervals = values.iter().all(|x| interval::agrees(x, INTERVAL_BITS));
            let rep = delpezzo::verify_case(&case, &q).unwrap();
            let gated = rep.assumptions == [delpezzo::SHGH]
                && !rep.gated.is_empty()
                && rep.gated.iter().all(|g| g.assumption == delpezzo::SHGH)
                && rep.checks.iter().all(|c| !c.name.contains(delpezzo::SHGH))
                && rep.checks.iter().all(|c| c.status == CheckStatus::Pass);
            if !(exact.iter().all(|&b| b) && intervals && gated) {
                bad.push(format!("{} q = {q}", case.name));
            }
        }
    }
    for n in 1..=8 {
        let (c, s) = delpezzo::symbolic_self_intersection(n).unwrap();
        if !c.is_zero() || !s.is_zero() {
            bad.push(format!("symbolic N = {n}: {c} + {s} q"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("8 rows x 5 samples = {samples} exact checks, symbolic D^2 = 0 for N = 1..8, interval cross-check at {INTERVAL_BITS} bits, failures {bad:?}"),
    )
}

fn criterion9() -> Outcome {
    let report = verify::verify_paper(None);
    let covered = report.covered();
    let missing: Vec<&str> = verify::OPERATIONS.iter().copied().filter(|o| !covered.contains(o)).collect();
    // out-of-scope statements are never computed: they carry an assumption
    let scoped = report
        .records
        .iter()
        .filter(|r| r.id.starts_with("cones.very-general") || r.id.starts_with("delpezzo.table") || r.id.starts_with("cones.g24.witness"))
        .all(|r| !r.assumptions.is_empty());
    // decomposition/oracle equivalence and exact certificates on a fresh sample
    let bctx = BlowupCtx::new(GrassCtx::new(2, 4).unwrap(), 2);
    let sample = BlowupClass::curve(bctx, 3, &[1, 2]).unwrap();
    let sample_ok = cones::lemma42_decompose(&sample).is_ok_and(|d| d.reproduces_target())
        && cones::sgen_check(&BlowupClass::zero(bctx, Grading::Dimension(1)).unwrap()).is_ok();
    outcome(
        report.all_passed() && missing.is_empty() && scoped && sample_ok,
        format!("{} report records, {} failed, uncovered operations {missing:?}, gated statements carry assumptions {scoped}", report.records.len(), report.failed()),
    )
}

#[test]
fn acceptance() {
    let results = [
        (1, "degree table", criterion1()),
        (2, "ring soundness", criterion2()),
        (3, "multiplicity", criterion3()),
        (4, "two-point divisor cone", criterion4()),
        (5, "quadric decompositions", criterion5()),
        (6, "G(2,4) counterexample", criterion6()),
        (7, "orbits", criterion7()),
        (8, "del Pezzo extremality", criterion8()),
        (9, "out-of-scope statements and property suites", criterion9()),
    ];
    for (n, title, o) in &results {
        report(*n, title, o);
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.2.ok).map(|r| r.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
