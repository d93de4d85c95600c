//! Stable pieces in the degenerate Steinberg fiber of type A_l.

use wonderkit::pieces::Pieces;
use wonderkit::RootSystem;

fn main() -> wonderkit::Result<()> {
    println!("{:>4} {:>6} {:>5} {:>9}", "type", "i_G", "m_G", "#maximal");
    for l in 1..=8 {
        let rs = RootSystem::new(&format!("A{l}"))?;
        let p = Pieces::new(&rs);
        let (m, maximal) = p.maximal_pieces();
        println!("{:>4} {:>6} {:>5} {:>9}", rs.name(), p.i_g(), m, maximal.len());
    }

    let rs = RootSystem::new("A3")?;
    let p = Pieces::new(&rs);
    println!("\nclosure-maximal pieces of the A3 central fiber:");
    for q in p.closure_maximal_central_pieces(1000)? {
        let row = p.row(&q);
        println!("  J={:?} w={:?} dim={}", row.j, row.w_word, row.dim);
    }
    Ok(())
}
