//! S-generation: is a class in the span of Schubert classes, their
//! corrections by the exceptional classes, and the exceptional classes?

use schubert_cones::blowup::{BlowupClass, BlowupCtx};
use schubert_cones::chow::GrassCtx;
use schubert_cones::cones::{self, Membership};

fn main() -> Result<(), schubert_cones::Error> {
    let g25 = GrassCtx::new(2, 5)?;
    let b = BlowupCtx::new(g25, 3);
    for (a, mults) in [(4, [2, 1, 1]), (3, [2, 1, 1]), (2, [1, 1, 1])] {
        let c = BlowupClass::curve(b, a, &mults)?;
        let r = cones::sgen_check(&c)?;
        println!("{c}: {:?}", r.verdict);
    }
    println!("curve bound on G(2,5): {}", cones::sgen_bound(g25, 1)?);

    let w = cones::g24_nonspan_witness()?;
    println!("{}: {:?}", w.class, w.verdict);
    if let Membership::NotInSpan { functional } = &w.membership {
        for (label, value) in cones::functional_profile(&w.generators, functional) {
            println!("  phi({label}) = {value}");
        }
    }
    Ok(())
}
