//! Monomial charts of the closure of a maximal torus in `P(End V(lambda))`.

use crate::error::{Error, Result};
use crate::linalg;
use crate::nodeset::NodeSet;
use crate::reps::WeightSystem;
use crate::rootsys::{Family, RootSystem, Weight};
use serde::Serialize;
use std::collections::HashSet;

#[derive(Clone, Debug, Serialize)]
pub struct ExponentMatrix {
    pub weights: Vec<Weight>,
    pub mults: Vec<u64>,
    /// Row `r` holds the simple-root coordinates of `lambda - weights[r]`.
    pub rows: Vec<Vec<i64>>,
}

impl ExponentMatrix {
    pub fn new(ws: &WeightSystem) -> Self {
        ExponentMatrix {
            weights: ws.entries.iter().map(|e| e.weight.clone()).collect(),
            mults: ws.entries.iter().map(|e| e.mult).collect(),
            rows: ws.entries.iter().map(|e| e.depth_coords.clone()).collect(),
        }
    }

    /// Row indices whose monomial does not vanish on `Z_J°`.
    pub fn surviving(&self, j: NodeSet) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| j.iter().all(|i| self.rows[r][i] == 0))
            .collect()
    }
}

/// Monomial `z1^a z2^b ...` for an exponent row; `1` for the zero row.
pub fn monomial(row: &[i64]) -> String {
    let parts: Vec<String> = row
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn exponent_matrix(rs: &RootSystem, lambda: &[i64]) -> Result<ExponentMatrix> {
    Ok(ExponentMatrix::new(&WeightSystem::new(rs, lambda)?))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BoundaryReport {
    pub k: usize,
    /// End nodes `i` whose strata give boundary components.
    pub components: Vec<usize>,
    pub end_nodes: usize,
    /// The count `a_Γ - 1` asserted for both cases.
    pub stated_count: usize,
    pub k_is_end: bool,
    pub consistent: bool,
}

/// Boundary components of the torus closure for a fundamental weight `lambda_k`,
/// read on the simple component containing `k`.
pub fn boundary_components(rs: &RootSystem, k: usize) -> Result<BoundaryReport> {
    rs.check_node(k)?;
    let comp = rs
        .component_sets()
        .into_iter()
        .find(|c| c.contains(k))
        .expect("every node lies in a component");
    let ends = rs.dynkin_end_nodes().intersect(comp);
    let k_is_end = ends.contains(k);
    let components: Vec<usize> = ends.iter().filter(|&i| i != k).map(|i| i + 1).collect();
    let stated = ends.len().saturating_sub(1);
    Ok(BoundaryReport {
        k: k + 1,
        consistent: components.len() == stated,
        components,
        end_nodes: ends.len(),
        stated_count: stated,
        k_is_end,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TorusOrbit {
    /// Subsets `J` (1-based) sharing this zero pattern.
    pub subsets: Vec<Vec<usize>>,
    /// Surviving row indices.
    pub surviving: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitPoset {
    pub orbits: Vec<TorusOrbit>,
    /// `(a, b)`: orbit `a` lies in the closure of orbit `b`, covering relations only.
    pub covers: Vec<(usize, usize)>,
}

/// Torus orbits of the chart image, identified by monomial zero patterns.
pub fn torus_orbit_poset(em: &ExponentMatrix, rank: usize) -> OrbitPoset {
    let mut orbits: Vec<TorusOrbit> = Vec::new();
    for j in NodeSet::all_subsets(rank) {
        let s = em.surviving(j);
        match orbits.iter_mut().find(|o| o.surviving == s) {
            Some(o) => o.subsets.push(j.labels()),
            None => orbits.push(TorusOrbit { subsets: vec![j.labels()], surviving: s }),
        }
    }
    let sets: Vec<HashSet<usize>> = orbits.iter().map(|o| o.surviving.iter().copied().collect()).collect();
    let below = |a: usize, b: usize| a != b && sets[a].is_subset(&sets[b]);
    let n = orbits.len();
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if below(a, b) && !(0..n).any(|c| below(a, c) && below(c, b)) {
                covers.push((a, b));
            }
        }
    }
    OrbitPoset { orbits, covers }
}

/// Boundary strata maximal under closure, as node sets; an independent reading
/// of the boundary components from the zero patterns.
pub fn maximal_boundary_strata(em: &ExponentMatrix, rank: usize) -> Vec<Vec<Vec<usize>>> {
    let poset = torus_orbit_poset(em, rank);
    let full = em.rows.len();
    let boundary: Vec<usize> = (0..poset.orbits.len()).filter(|&o| poset.orbits[o].surviving.len() < full).collect();
    boundary
        .iter()
        .filter(|&&o| {
            let s: HashSet<_> = poset.orbits[o].surviving.iter().collect();
            !boundary.iter().any(|&p| {
                let t: HashSet<_> = poset.orbits[p].surviving.iter().collect();
                p != o && s.is_subset(&t) && s != t
            })
        })
        .map(|&o| poset.orbits[o].subsets.clone())
        .collect()
}

/// Distinct nonzero generators `lambda - mu` in root coordinates.
pub fn cone_of_weights(rs: &RootSystem, lambda: &[i64]) -> Result<Vec<Vec<i64>>> {
    let em = exponent_matrix(rs, lambda)?;
    let mut gens: Vec<Vec<i64>> = em.rows.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
    gens.sort();
    gens.dedup();
    Ok(gens)
}

/// Rational cone membership by Carathéodory: `v` lies in the cone iff it lies in
/// the cone over some basis drawn from the generators.
pub fn cone_contains(gens: &[Vec<i64>], v: &[i64]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let r = linalg::rank(gens);
    fn rec(gens: &[Vec<i64>], v: &[i64], r: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == r {
            let cols: Vec<&Vec<i64>> = chosen.iter().map(|&i| &gens[i]).collect();
            return matches!(linalg::solve_independent(&cols, v), Some(x) if x.iter().all(|c| *c >= 0.into()));
        }
        for i in start..gens.len() {
            let mut trial: Vec<Vec<i64>> = chosen.iter().map(|&c| gens[c].clone()).collect();
            trial.push(gens[i].clone());
            if linalg::rank(&trial) < trial.len() {
                continue;
            }
            chosen.push(i);
            if rec(gens, v, r, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(gens, v, r, 0, &mut Vec::new())
}

pub fn cones_equal(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Result<bool> {
    let a = cone_of_weights(rs, lambda)?;
    let b = cone_of_weights(rs, mu)?;
    Ok(a.iter().all(|g| cone_contains(&b, g)) && b.iter().all(|g| cone_contains(&a, g)))
}

/// `a_k >= a_{k+1} >= ... >= a_l >= 0` and `a_k >= a_{k-1} >= ... >= a_1 >= 0`
/// (0-based `k`).
pub fn unimodal(a: &[i64], k: usize) -> bool {
    a.iter().all(|&x| x >= 0) && (k + 1..a.len()).all(|i| a[i - 1] >= a[i]) && (0..k).all(|i| a[i] <= a[i + 1])
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityReport {
    pub rank: usize,
    pub k: usize,
    pub height_bound: i64,
    pub points_checked: usize,
    pub mismatches: Vec<Vec<i64>>,
}

impl NormalityReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Points of height at most `bound` in the monoid generated by `gens`.
pub fn monoid_points(gens: &[Vec<i64>], rank: usize, bound: i64) -> HashSet<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::from([vec![0; rank]]);
    let mut frontier = vec![vec![0; rank]];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| a + b).collect();
            if RootSystem::height(&q) <= bound && seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen
}

fn lattice_points(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                let used: i64 = p.iter().sum();
                (0..=bound - used).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Compare the monoid generated by `{lambda_k - mu}` with the unimodal cone at
/// every lattice point of height at most `bound`, in type `A_l`.
pub fn normality_check_a(rs: &RootSystem, k: usize, bound: i64) -> Result<NormalityReport> {
    if rs.components.len() != 1 || rs.components[0].family != Family::A {
        return Err(Error::Unsupported(format!("normality check needs type A, got {}", rs.name())));
    }
    rs.check_node(k)?;
    let gens = cone_of_weights(rs, &rs.fundamental_weight(k))?;
    let mon = monoid_points(&gens, rs.rank, bound);
    let pts = lattice_points(rs.rank, bound);
    let mismatches = pts.iter().filter(|p| mon.contains(*p) != unimodal(p, k)).cloned().collect();
    Ok(NormalityReport { rank: rs.rank, k: k + 1, height_bound: bound, points_checked: pts.len(), mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_lambda2_chart() {
        let rs = RootSystem::new("A3").unwrap();
        let em = exponent_matrix(&rs, &[0, 1, 0]).unwrap();
        let mut mons: Vec<_> = em.rows.iter().filter(|r| r.iter().any(|&x| x > 0)).cloned().collect();
        mons.sort();
        assert_eq!(mons, vec![vec![0, 1, 0], vec![0, 1, 1], vec![1, 1, 0], vec![1, 1, 1], vec![1, 2, 1]]);
        assert_eq!(em.rows[0], vec![0, 0, 0]);
        assert_eq!(monomial(&[1, 2, 1]), "z1*z2^2*z3");
        let surv: Vec<_> = em.surviving(NodeSet::from_labels([1])).iter().map(|&r| monomial(&em.rows[r])).collect();
        assert_eq!(surv, ["1", "z2", "z2*z3"]);
        assert_eq!(em.surviving(NodeSet::EMPTY).len(), 6);
        assert_eq!(em.surviving(rs.full_set()), vec![0]);
    }

    #[test]
    fn a2_rows() {
        let rs = RootSystem::new("A2").unwrap();
        assert_eq!(exponent_matrix(&rs, &[1, 0]).unwrap().rows, vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn boundary_cases() {
        let a3 = RootSystem::new("A3").unwrap();
        let b = boundary_components(&a3, 1).unwrap();
        assert_eq!((b.components.clone(), b.stated_count, b.consistent), (vec![1, 3], 1, false));
        assert_eq!(boundary_components(&a3, 0).unwrap().components, vec![3]);
        let a2 = RootSystem::new("A2").unwrap();
        assert_eq!(boundary_components(&a2, 0).unwrap().components, vec![2]);
    }

    #[test]
    fn cones() {
        let rs = RootSystem::new("A2").unwrap();
        assert!(cones_equal(&rs, &[1, 1], &[2, 1]).unwrap());
        assert!(cones_equal(&rs, &[1, 0], &[1, 0]).unwrap());
        assert!(!cones_equal(&rs, &[1, 0], &[1, 1]).unwrap());
    }

    #[test]
    fn normality() {
        let rs = RootSystem::new("A3").unwrap();
        assert!(normality_check_a(&rs, 1, 6).unwrap().ok());
        assert!(!unimodal(&[0, 1], 0));
        assert!(unimodal(&[0, 0], 0));
        let b2 = RootSystem::new("B2").unwrap();
        assert!(normality_check_a(&b2, 0, 3).is_err());
    }
}
