//! Diagonal orbits in the minuscule boundary orbits of G2, and a two-root case in A3.

use wonderkit::diagorbits::{g2_table, two_root_classify};
use wonderkit::{NodeSet, RootSystem, Weyl};

fn main() -> wonderkit::Result<()> {
    println!("{:>2} {:>12} {:>14} {:>8}  families", "i", "w", "kind", "regular");
    for r in g2_table() {
        let fams: Vec<String> = r.families.iter().map(|f| format!("{:?}={}", f.tag, f.dim)).collect();
        println!("{:>2} {:>12} {:>14} {:>8}  {}", r.i, r.w, format!("{:?}", r.kind), r.regular, fams.join(" "));
    }

    let a3 = RootSystem::new("A3")?;
    let weyl = Weyl::new(&a3);
    println!("\nA3, Levi nodes 1 and 3:");
    for w in weyl.min_double_coset_reps(NodeSet::from_labels([1, 3]), 100)? {
        let c = two_root_classify(&a3, 0, 2, &w)?;
        println!("  {:>10}  {:?}  base dim {}", weyl.label(&w), c.kind, c.base_dim);
    }
    Ok(())
}
