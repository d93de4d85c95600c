//! Root data, Weyl group enumeration and parabolic coset representatives.

use wonderkit::{NodeSet, RootSystem, Weyl};

fn main() -> wonderkit::Result<()> {
    for t in ["A3", "B3", "G2", "B2xA1"] {
        let rs = RootSystem::new(t)?;
        println!(
            "{t}: rank {}, {} positive roots, dim G = {}, |W| = {}, det C = {}",
            rs.rank,
            rs.num_positive(),
            rs.dim_g(),
            rs.weyl_order(),
            rs.det_cartan()
        );
        println!("  highest root {:?}, rho {:?}", rs.highest_root(), rs.rho());
    }

    let g2 = RootSystem::new("G2")?;
    let weyl = Weyl::new(&g2);
    let names: Vec<String> = weyl.enumerate_group(100)?.iter().map(|w| weyl.label(w)).collect();
    println!("\nW(G2) in length order: {}", names.join(" "));
    for i in [1, 2] {
        let reps = weyl.min_double_coset_reps(NodeSet::from_labels([i]), 100)?;
        let names: Vec<String> = reps.iter().map(|w| weyl.label(w)).collect();
        println!("W_{i} \\ W / W_{i} minimal representatives: {}", names.join(", "));
    }

    let w = weyl.from_labels(&[1, 2, 1])?;
    println!(
        "\nw = {}: length {}, inverse {}, w(alpha_2) = {:?}, support {:?}",
        weyl.label(&w),
        w.length(),
        weyl.label(&weyl.inverse(&w)),
        w.column(1),
        weyl.support(&w)
    );
    Ok(())
}
