//! The defining sections of the family of diagonal orbit closures, on torus points.

use super::laurent::LaurentSeriesZ;
use super::scalar::TorusElement;
use crate::error::{Error, Result};
use crate::reps::{negate_system, WeightSystem};
use crate::rootsys::RootSystem;

fn lcm(a: u32, b: u32) -> u32 {
    a / num::integer::gcd(a, b) * b
}

/// `sum_j (prod_u z_u^{<lambda_u, mu_j + lambda_k>})^e` over the weights of the dual module.
pub fn z_side_sum(rs: &RootSystem, ws: &WeightSystem, z: &TorusElement, e: u32) -> LaurentSeriesZ {
    let c: Vec<i64> = z.simple_root_values(rs).iter().map(|v| v.free).collect();
    let mut s = LaurentSeriesZ::zero();
    for entry in &ws.entries {
        let exp: i64 = entry.depth_coords.iter().zip(&c).map(|(n, cu)| n * cu).sum();
        s.add_term(e as i64 * exp, entry.mult.into());
    }
    s
}

/// `tr_H(rho(t)^e)` for the dual module `H`.
pub fn dual_trace(ws: &WeightSystem, t: &TorusElement, e: u32) -> LaurentSeriesZ {
    let mut s = LaurentSeriesZ::zero();
    for (mu, m) in negate_system(ws) {
        s.add_term(e as i64 * t.eigenvalue(&mu).free, m.into());
    }
    s
}

/// `f_{z,e1,e2,k}` evaluated at the torus point `t`.
pub fn family_section_eval(
    rs: &RootSystem,
    k: usize,
    z: &TorusElement,
    t: &TorusElement,
    e1: u32,
    e2: u32,
) -> Result<LaurentSeriesZ> {
    rs.check_node(k)?;
    if !z.is_torsion_free() || !t.is_torsion_free() {
        return Err(Error::Precondition("torsion parts must vanish".into()));
    }
    let ws = WeightSystem::fundamental(rs, k)?;
    if !(1 <= e1 && e1 < e2 && (e2 as u64) <= ws.dim) {
        return Err(Error::Precondition(format!("need 1 <= e1 < e2 <= {}", ws.dim)));
    }
    let l = lcm(e1, e2);
    let a = &z_side_sum(rs, &ws, z, e1).pow(l / e1) * &dual_trace(&ws, t, e2).pow(l / e2);
    let b = &z_side_sum(rs, &ws, z, e2).pow(l / e2) * &dual_trace(&ws, t, e1).pow(l / e1);
    Ok(&a - &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn vanishes_on_diagonal() {
        let rs = RootSystem::new("B2").unwrap();
        let t = TorusElement::new(vec![Zero::zero(); 2], vec![2, -3]);
        for k in 0..2 {
            for (e1, e2) in [(1, 2), (2, 3), (1, 4)] {
                assert!(family_section_eval(&rs, k, &t, &t, e1, e2).unwrap().is_zero());
            }
        }
        let z = TorusElement::new(vec![Zero::zero(); 2], vec![1, 1]);
        assert!(!family_section_eval(&rs, 0, &z, &t, 1, 2).unwrap().is_zero());
        assert!(family_section_eval(&rs, 0, &t, &t, 2, 2).is_err());
    }
}
