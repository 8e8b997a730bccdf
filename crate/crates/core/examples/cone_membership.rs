//! Exact cone membership with certificates, and the facets of a generated cone.

use num_rational::BigRational;
use schubert_cones::cones::{self, ConeSpec, Membership};

fn main() -> Result<(), schubert_cones::Error> {
    let cone = ConeSpec::from_integers(&["x", "y", "z"], &[("a", vec![1, 0, 0]), ("b", vec![1, 1, 0]), ("c", vec![1, 1, 1])])?;
    for raw in [[3, 2, 1], [1, 2, 0]] {
        let v: Vec<BigRational> = raw.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        match cones::cone_membership(&cone, &v)? {
            Membership::InSpan { coefficients } => {
                let c: Vec<String> = coefficients.iter().map(ToString::to_string).collect();
                println!("{raw:?}: member, coefficients [{}]", c.join(", "));
            }
            Membership::NotInSpan { functional } => println!("{raw:?}: not a member, separating functional {functional:?}"),
        }
    }
    println!("facet normals: {:?}", cones::facets(&cone)?);

    let k = 3;
    let g = cones::thm44_generators(k)?;
    println!("{} generators in dimension {}, facets {:?}", g.len(), g.dim(), cones::facets(&g)?);
    Ok(())
}
