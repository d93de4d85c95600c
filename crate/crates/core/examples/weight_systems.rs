//! Weight multiplicities, dimensions and exterior-power characters.

use wonderkit::reps::{char_sum, dim_weyl, exterior_power, WeightSystem};
use wonderkit::RootSystem;

fn main() -> wonderkit::Result<()> {
    let a2 = RootSystem::new("A2")?;
    let adj = WeightSystem::new(&a2, &[1, 1])?;
    println!("A2 adjoint, dim {}:", adj.dim);
    for e in &adj.entries {
        println!("  {:?} mult {} depth {:?}", e.weight, e.mult, e.depth_coords);
    }

    for t in ["B3", "C3", "D4", "F4", "G2"] {
        let rs = RootSystem::new(t)?;
        let dims: Vec<String> = (0..rs.rank)
            .map(|k| dim_weyl(&rs, &rs.fundamental_weight(k)).map(|d| d.to_string()))
            .collect::<wonderkit::Result<_>>()?;
        println!("{t} fundamental dimensions: {}", dims.join(", "));
    }

    let g2 = RootSystem::new("G2")?;
    let v1 = WeightSystem::fundamental(&g2, 0)?.character();
    let v2 = WeightSystem::fundamental(&g2, 1)?.character();
    println!("\nG2: wedge^2 V1 = V1 + V2 as weight multisets: {}", exterior_power(&v1, 2) == char_sum(&[v1, v2]));

    let c3 = RootSystem::new("C3")?;
    let v = WeightSystem::fundamental(&c3, 0)?.character();
    for k in 2..=3 {
        let vk = WeightSystem::fundamental(&c3, k - 1)?.character();
        let ok = exterior_power(&v, k) == char_sum(&[exterior_power(&v, k - 2), vk]);
        println!("C3: wedge^{k} V1 = wedge^{} V1 + V{k}: {ok}", k - 2);
    }
    Ok(())
}
