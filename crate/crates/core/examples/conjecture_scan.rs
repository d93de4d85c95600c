//! Randomized adjoint conjugacy checks, center actions and the trace lemmas.

use wonderkit::reps::WeightSystem;
use wonderkit::traces::conjecture::{conjecture_scan, weight_list};
use wonderkit::traces::lemmas::lemma_suite;
use wonderkit::traces::{center_elements, eigenvalue_multiset, family_section_eval, TorusElement};
use wonderkit::RootSystem;

fn main() -> wonderkit::Result<()> {
    for t in ["A2", "B2", "C3", "G2", "D4"] {
        let rs = RootSystem::new(t)?;
        let r = conjecture_scan(&rs, 200, 7, 1_000_000)?;
        println!(
            "{t}: {} counterexamples in {} samples, positives ok {}, related {}, unrelated {}{}",
            r.counterexamples.len(),
            r.samples,
            r.positives_ok,
            r.related_pairs,
            r.unrelated_pairs,
            if r.exploratory { " (exploratory)" } else { "" }
        );
    }

    let b3 = RootSystem::new("B3")?;
    let omega = center_elements(&b3).into_iter().find(|z| *z != TorusElement::identity(3)).expect("order 2");
    for k in 0..3 {
        let ms = eigenvalue_multiset(&weight_list(&WeightSystem::fundamental(&b3, k)?), &omega);
        println!("B3: center on V(lambda_{}) acts by {:?}", k + 1, ms[0]);
    }

    let t = TorusElement::new(vec![0.into(); 2], vec![1, -2]);
    let g2 = RootSystem::new("G2")?;
    let f = family_section_eval(&g2, 0, &t, &t, 1, 3)?;
    println!("G2: f at the diagonal point vanishes: {}", f.is_zero());

    for row in lemma_suite(1) {
        println!("{}: {}/{}", row.lemma, row.agreed, row.cases);
    }
    Ok(())
}
