//! Monomial charts of maximal torus closures and their boundary.

use wonderkit::torus::{boundary_components, exponent_matrix, monomial, normality_check_a, torus_orbit_poset};
use wonderkit::RootSystem;

fn main() -> wonderkit::Result<()> {
    let a3 = RootSystem::new("A3")?;
    let em = exponent_matrix(&a3, &[0, 1, 0])?;
    let monos: Vec<String> = em.rows.iter().map(|r| monomial(r)).collect();
    println!("A3, lambda_2 chart: ({})", monos.join(", "));

    let poset = torus_orbit_poset(&em, a3.rank);
    println!("{} torus orbits, {} covering relations", poset.orbits.len(), poset.covers.len());
    for k in 0..3 {
        let b = boundary_components(&a3, k)?;
        println!("  lambda_{}: boundary components along end nodes {:?}", k + 1, b.components);
    }

    for l in 1..=4 {
        let rs = RootSystem::new(&format!("A{l}"))?;
        let ok: Vec<bool> = (0..l).map(|k| normality_check_a(&rs, k, 8).map(|r| r.ok())).collect::<wonderkit::Result<_>>()?;
        println!("A{l}: monoid saturated up to height 8 for each lambda_k: {ok:?}");
    }
    Ok(())
}
