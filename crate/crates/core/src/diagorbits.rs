//! Diagonal orbits in boundary orbits of the wonderful compactification.
//!
//! Node-set arguments here name the Levi nodes; the complementary set `J` of
//! the parabolic `P_J` is formed internally.

use crate::error::{Error, Result};
use crate::linalg;
use crate::nodeset::NodeSet;
use crate::rootsys::RootSystem;
use crate::weyl::{Weyl, WeylElement};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrbitKind {
    DiagonalImage,
    BorelImage,
    DiagDiag,
    DiagBorel,
    SwapDiag,
    SwapBorel,
    BorelBorel { rank: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyTag {
    #[serde(rename = "A_w(lambda)")]
    A,
    #[serde(rename = "U_w")]
    U,
    #[serde(rename = "I_w")]
    I,
    #[serde(rename = "M_w")]
    M,
    #[serde(rename = "N_w")]
    N,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Family {
    pub tag: FamilyTag,
    pub dim: usize,
    pub regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    pub kind: OrbitKind,
    pub base_dim: usize,
    pub families: Vec<Family>,
}

impl OrbitClass {
    pub fn has_regular(&self) -> bool {
        self.families.iter().any(|f| f.regular)
    }
}

pub fn regular_orbit_dim(rs: &RootSystem) -> usize {
    rs.dim_g() - rs.rank
}

fn supported_on(r: &[i64], nodes: NodeSet) -> bool {
    RootSystem::support_of_root(r).is_subset(nodes)
}

/// Root count for `dim G x_{P_J} P_J w P_J^- / P_J^-` with Levi nodes `levi`.
pub fn base_orbit_dim(rs: &RootSystem, levi: NodeSet, w: &WeylElement) -> Result<usize> {
    let weyl = Weyl::new(rs);
    if !weyl.is_min_double_coset_rep(w, levi) {
        return Err(Error::Precondition(format!(
            "{} is not a minimal double coset representative for {:?}",
            weyl.label(w),
            levi
        )));
    }
    let winv = weyl.inverse(w);
    let mut count = 0;
    for b in &rs.positive_roots {
        if supported_on(b, levi) {
            continue;
        }
        // alpha = -b lies in Phi^- \ Phi^-(J)
        count += 1;
        let img: Vec<i64> = winv.act_on_root(b).iter().map(|x| -x).collect();
        if !RootSystem::is_positive(&img) || supported_on(&img, levi) {
            count += 1;
        }
    }
    Ok(count)
}

/// Classification for a minuscule boundary orbit (Levi node `i`).
pub fn minuscule_classify(rs: &RootSystem, i: usize, w: &WeylElement) -> Result<OrbitClass> {
    rs.check_node(i)?;
    let base = base_orbit_dim(rs, NodeSet::single(i), w)?;
    let reg = regular_orbit_dim(rs);
    let fam = |tag, fiber: usize| Family { tag, dim: base + fiber, regular: base + fiber == reg };
    let fixed = w.column(i) == rs.simple_root(i);
    let (kind, families) = if fixed {
        (OrbitKind::DiagonalImage, vec![fam(FamilyTag::A, 2), fam(FamilyTag::U, 2), fam(FamilyTag::I, 0)])
    } else {
        (OrbitKind::BorelImage, vec![fam(FamilyTag::M, 3), fam(FamilyTag::N, 2)])
    };
    Ok(OrbitClass { kind, base_dim: base, families })
}

/// Classification for a boundary orbit whose Levi is two orthogonal `sl_2` factors.
pub fn two_root_classify(rs: &RootSystem, i: usize, j: usize, w: &WeylElement) -> Result<OrbitClass> {
    rs.check_node(i)?;
    rs.check_node(j)?;
    if i == j || rs.adjacent(i, j) {
        return Err(Error::Unsupported(format!(
            "nodes {} and {} do not span two orthogonal sl2 factors",
            i + 1,
            j + 1
        )));
    }
    let levi = NodeSet::from_nodes([i, j]);
    let base = base_orbit_dim(rs, levi, w)?;
    let (ai, aj) = (rs.simple_root(i), rs.simple_root(j));
    let (wi, wj) = (w.column(i), w.column(j));
    let kind = match (wi == ai, wi == aj, wj == aj, wj == ai) {
        (true, _, true, _) => OrbitKind::DiagDiag,
        (true, _, false, _) | (false, false, true, _) => OrbitKind::DiagBorel,
        (_, true, _, true) => OrbitKind::SwapDiag,
        (_, true, _, false) | (false, false, false, true) => OrbitKind::SwapBorel,
        _ => {
            let winv = Weyl::new(rs).inverse(w);
            let span = vec![ai.clone(), aj.clone(), winv.act_on_root(&ai), winv.act_on_root(&aj)];
            OrbitKind::BorelBorel { rank: linalg::rank(&span) }
        }
    };
    Ok(OrbitClass { kind, base_dim: base, families: Vec::new() })
}

#[derive(Clone, Debug, Serialize)]
pub struct G2Row {
    pub i: usize,
    pub w: String,
    pub w_word: Vec<usize>,
    pub length: usize,
    pub kind: OrbitKind,
    pub families: Vec<Family>,
    pub regular: bool,
}

/// The eight minuscule cases of G2.
pub fn g2_table() -> Vec<G2Row> {
    let rs = RootSystem::new("G2").expect("G2");
    let weyl = Weyl::new(&rs);
    let mut rows = Vec::new();
    for i in 0..2 {
        for w in weyl.min_double_coset_reps(NodeSet::single(i), 12).expect("small group") {
            let c = minuscule_classify(&rs, i, &w).expect("valid representative");
            rows.push(G2Row {
                i: i + 1,
                w: weyl.label(&w),
                w_word: weyl.reduced_labels(&w),
                length: w.length(),
                kind: c.kind,
                regular: c.has_regular(),
                families: c.families,
            });
        }
    }
    rows
}
