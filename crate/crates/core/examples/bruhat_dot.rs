//! Hasse diagram of the Bruhat order as Graphviz DOT.
//!
//! `cargo run --example bruhat_dot -- B2 | dot -Tsvg > b2.svg`

use wonderkit::dot::digraph;
use wonderkit::{RootSystem, Weyl};

fn main() -> wonderkit::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "B2".into());
    let rs = RootSystem::new(&t)?;
    let weyl = Weyl::new(&rs);
    let elems = weyl.enumerate_group(5000)?;
    let labels: Vec<String> = elems.iter().map(|w| weyl.label(w)).collect();
    print!("{}", digraph(&format!("bruhat {t}"), &labels, &weyl.bruhat_covers(&elems)));
    Ok(())
}
