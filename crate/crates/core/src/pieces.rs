//! Stable pieces `S_J^w` of the wonderful compactification.
//!
//! Every `J` here follows the convention `W_J = <s_i : i not in J>`, so `W^J`
//! consists of the `w` with `w(alpha_i) > 0` for `i` outside `J`.

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::RootSystem;
use crate::weyl::{Weyl, WeylElement};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StablePiece {
    pub j: NodeSet,
    pub w: WeylElement,
    pub dim: usize,
}

/// Serialized form of a piece.
#[derive(Clone, Debug, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct PieceRow {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub w_word: Vec<usize>,
    pub length: usize,
    pub dim: usize,
    #[serde(rename = "in_A")]
    pub in_a: bool,
    #[serde(rename = "in_A_circ")]
    pub in_a_circ: bool,
}

pub struct Pieces<'a> {
    pub rs: &'a RootSystem,
    pub weyl: Weyl<'a>,
}

impl<'a> Pieces<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Pieces { rs, weyl: Weyl::new(rs) }
    }

    fn all(&self) -> NodeSet {
        self.rs.full_set()
    }

    /// Generators of `W_J`.
    pub fn w_j_generators(&self, j: NodeSet) -> NodeSet {
        j.complement(self.rs.rank)
    }

    pub fn in_w_upper(&self, j: NodeSet, w: &WeylElement) -> bool {
        self.weyl.is_min_coset_rep(w, self.w_j_generators(j))
    }

    fn require_w_upper(&self, j: NodeSet, w: &WeylElement) -> Result<()> {
        if self.in_w_upper(j, w) {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{} is not in W^J for J = {:?}", self.weyl.label(w), j)))
        }
    }

    /// `W^J` as a list.
    pub fn w_upper(&self, j: NodeSet, cap: u128) -> Result<Vec<WeylElement>> {
        self.weyl.min_coset_reps(self.w_j_generators(j), cap)
    }

    pub fn moves_fundamental(&self, w: &WeylElement, k: usize) -> bool {
        !self.weyl.fixes_weight(w, &self.rs.fundamental_weight(k))
    }

    pub fn fixes_simple(&self, w: &WeylElement, k: usize) -> bool {
        w.column(k) == self.rs.simple_root(k)
    }

    /// `ht(w alpha_k) > ht(alpha_k)` or `w lambda_k != lambda_k`.
    fn condition(&self, w: &WeylElement, k: usize) -> bool {
        RootSystem::height(&w.column(k)) > 1 || self.moves_fundamental(w, k)
    }

    /// Nodes `k` that may lie outside `J` for a piece `(J, w)` in the central fiber.
    pub fn good_nodes(&self, w: &WeylElement) -> NodeSet {
        NodeSet::from_nodes((0..self.rs.rank).filter(|&k| w.maps_simple_positive(k) && self.condition(w, k)))
    }

    pub fn in_a(&self, j: NodeSet, w: &WeylElement) -> Result<bool> {
        self.require_w_upper(j, w)?;
        Ok(j.complement(self.rs.rank).iter().all(|k| self.condition(w, k)))
    }

    pub fn in_a_circ(&self, j: NodeSet, w: &WeylElement) -> Result<bool> {
        Ok(self.in_a(j, w)? && w.length() == self.rs.rank - j.len())
    }

    pub fn piece_dim(&self, j: NodeSet, w: &WeylElement) -> Result<usize> {
        self.require_w_upper(j, w)?;
        Ok(self.rs.dim_g() - w.length() - j.len())
    }

    pub fn piece(&self, j: NodeSet, w: WeylElement) -> Result<StablePiece> {
        let dim = self.piece_dim(j, &w)?;
        Ok(StablePiece { j, w, dim })
    }

    pub fn row(&self, p: &StablePiece) -> PieceRow {
        PieceRow {
            j: p.j.labels(),
            w_word: self.weyl.reduced_labels(&p.w),
            length: p.w.length(),
            dim: p.dim,
            in_a: self.in_a(p.j, &p.w).unwrap_or(false),
            in_a_circ: self.in_a_circ(p.j, &p.w).unwrap_or(false),
        }
    }

    fn elements(&self, max_length: Option<usize>, cap: u128) -> Result<Vec<WeylElement>> {
        match max_length {
            Some(l) => Ok(self.weyl.enumerate_up_to_length(l)),
            None => self.weyl.enumerate_group(cap),
        }
    }

    /// Every piece `(J, w)` with `w` in `W^J`, ordered by `J` then `w`.
    pub fn all_pieces(&self, max_length: Option<usize>, cap: u128) -> Result<Vec<StablePiece>> {
        let elems = self.elements(max_length, cap)?;
        let mut out = Vec::new();
        for j in NodeSet::all_subsets(self.rs.rank) {
            for w in &elems {
                if self.in_w_upper(j, w) {
                    out.push(self.piece(j, w.clone())?);
                }
            }
        }
        Ok(out)
    }

    /// Pieces in the degenerate Steinberg fiber: all `(J, w)` with `w` in `A_J`.
    pub fn central_fiber_pieces(&self, max_length: Option<usize>, cap: u128) -> Result<Vec<StablePiece>> {
        Ok(self
            .all_pieces(max_length, cap)?
            .into_iter()
            .filter(|p| self.in_a(p.j, &p.w).unwrap_or(false))
            .collect())
    }

    /// `i_G = sum_J |A_J°|`, scanning only elements of length at most the rank.
    pub fn i_g(&self) -> u128 {
        self.weyl
            .enumerate_up_to_length(self.rs.rank)
            .iter()
            .map(|w| binomial(self.good_nodes(w).len(), w.length()))
            .sum()
    }

    /// `i_G` by a direct scan over all `(J, w)`.
    pub fn i_g_full_scan(&self, cap: u128) -> Result<u128> {
        let elems = self.weyl.enumerate_group(cap)?;
        let mut n = 0;
        for j in NodeSet::all_subsets(self.rs.rank) {
            for w in &elems {
                if self.in_w_upper(j, w) && self.in_a_circ(j, w)? {
                    n += 1;
                }
            }
        }
        Ok(n)
    }

    /// Maximal dimension `m_G` of a piece in the central fiber and all pieces
    /// attaining it. Dimension is `dim G - (l(w) + |J|)` and `(I, e)` has cost
    /// equal to the rank, so only `l(w) <= rank` matters; for fixed `w` the
    /// cheapest admissible `J` is the complement of `good_nodes(w)`.
    pub fn maximal_pieces(&self) -> (usize, Vec<StablePiece>) {
        let l = self.rs.rank;
        let mut best = usize::MAX;
        let mut arg = Vec::new();
        for w in self.weyl.enumerate_up_to_length(l) {
            let j = self.good_nodes(&w).complement(l);
            let cost = w.length() + j.len();
            if cost < best {
                best = cost;
                arg.clear();
            }
            if cost == best {
                arg.push((j, w));
            }
        }
        arg.sort_by_key(|(j, _)| *j);
        let pieces = arg.into_iter().map(|(j, w)| self.piece(j, w).expect("in W^J by construction")).collect();
        (self.rs.dim_g() - best, pieces)
    }

    pub fn m_g(&self) -> usize {
        self.maximal_pieces().0
    }

    /// Membership of `(J, w)` in `B_J^K`.
    pub fn in_b(&self, j: NodeSet, k_set: NodeSet, w: &WeylElement) -> Result<bool> {
        self.require_w_upper(j, w)?;
        let moved = |k| self.moves_fundamental(w, k);
        if !k_set.minus(j).iter().all(|k| moved(k) || !self.fixes_simple(w, k)) {
            return Ok(false);
        }
        if !j.minus(k_set).iter().all(moved) {
            return Ok(false);
        }
        for k in self.all().minus(j.union(k_set)).iter() {
            let comp = self.rs.comp_without(k_set, k)?;
            if !j.intersect(comp).is_empty() {
                if !moved(k) {
                    return Ok(false);
                }
            } else if !moved(k) {
                if !comp.iter().all(|i| self.fixes_simple(w, i)) {
                    return Ok(false);
                }
                let touching = k_set.minus(j).iter().filter(|&x| comp.iter().any(|c| self.rs.adjacent(x, c)));
                if !touching.into_iter().all(|x| !self.fixes_simple(w, x)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Pieces with `supp(lambda) ∩ supp(w)` nonempty.
    pub fn nilpotent_cone_pieces(&self, lambda: &[i64], cap: u128) -> Result<Vec<StablePiece>> {
        let s = crate::reps::support(lambda);
        Ok(self
            .all_pieces(None, cap)?
            .into_iter()
            .filter(|p| !self.weyl.support(&p.w).intersect(s).is_empty())
            .collect())
    }

    /// Pieces with `supp(w) = I`.
    pub fn steinberg_boundary_pieces(&self, cap: u128) -> Result<Vec<StablePiece>> {
        let all = self.all();
        Ok(self.all_pieces(None, cap)?.into_iter().filter(|p| self.weyl.support(&p.w) == all).collect())
    }

    /// The pieces `(J, e)`.
    pub fn semistable_pieces(&self) -> Vec<StablePiece> {
        NodeSet::all_subsets(self.rs.rank)
            .map(|j| self.piece(j, self.weyl.identity()).expect("e lies in every W^J"))
            .collect()
    }

    /// `p1` lies in the closure of `p2`.
    pub fn closure_leq(&self, p1: &StablePiece, p2: &StablePiece, z_cap: u128) -> Result<bool> {
        if !p2.j.is_subset(p1.j) {
            return Ok(false);
        }
        for z in self.weyl.enumerate_parabolic(self.w_j_generators(p2.j), z_cap)? {
            let c = self.weyl.multiply(&self.weyl.inverse(&z), &self.weyl.multiply(&p2.w, &z));
            if self.weyl.bruhat_leq(&c, &p1.w) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Bruhat-minimal elements of `A_{{k}}` for each node `k`.
    pub fn prop10_witnesses(&self, cap: u128) -> Result<Vec<Witness>> {
        let elems = self.weyl.enumerate_group(cap)?;
        let mut out = Vec::new();
        for k in 0..self.rs.rank {
            let j = NodeSet::single(k);
            let a: Vec<&WeylElement> = elems
                .iter()
                .filter(|w| self.in_w_upper(j, w) && self.in_a(j, w).unwrap_or(false))
                .collect();
            for w in &a {
                let minimal = !a.iter().any(|u| u.length() < w.length() && self.weyl.bruhat_leq(u, w));
                if minimal {
                    out.push(Witness { k: k + 1, w_word: self.weyl.reduced_labels(w), dim: self.piece_dim(j, w)? });
                }
            }
        }
        Ok(out)
    }

    /// Central-fiber pieces not contained in the closure of another one.
    pub fn closure_maximal_central_pieces(&self, cap: u128) -> Result<Vec<StablePiece>> {
        let ps = self.central_fiber_pieces(None, cap)?;
        let mut out = Vec::new();
        'outer: for p in &ps {
            for q in &ps {
                if q != p && self.closure_leq(p, q, cap)? {
                    continue 'outer;
                }
            }
            out.push(p.clone());
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub k: usize,
    pub w_word: Vec<usize>,
    pub dim: usize,
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> NodeSet {
        NodeSet::from_labels(v.iter().copied())
    }

    #[test]
    fn membership_examples() {
        let a2 = RootSystem::new("A2").unwrap();
        let p = Pieces::new(&a2);
        assert!(p.in_a(set(&[1]), &p.weyl.from_labels(&[1]).unwrap()).unwrap());
        assert!(p.in_a(a2.full_set(), &p.weyl.identity()).unwrap());
        assert!(p.in_a(set(&[1]), &p.weyl.from_labels(&[2]).unwrap()).is_err());
        let a1a1 = RootSystem::new("A1xA1").unwrap();
        let p = Pieces::new(&a1a1);
        assert!(!p.in_a(set(&[1]), &p.weyl.from_labels(&[1]).unwrap()).unwrap());
    }

    #[test]
    fn w_upper_translation() {
        let a2 = RootSystem::new("A2").unwrap();
        let p = Pieces::new(&a2);
        let labels: Vec<_> = p.w_upper(set(&[1]), 100).unwrap().iter().map(|w| p.weyl.label(w)).collect();
        assert_eq!(labels, ["e", "s1", "s2s1"]);
        assert_eq!(p.w_upper(NodeSet::EMPTY, 100).unwrap().len(), 1);
        assert_eq!(p.w_upper(a2.full_set(), 100).unwrap().len(), 6);
    }

    #[test]
    fn a1_central_fiber() {
        let a1 = RootSystem::new("A1").unwrap();
        let p = Pieces::new(&a1);
        let rows: Vec<_> = p.central_fiber_pieces(None, 10).unwrap().iter().map(|x| (x.j.labels(), x.w.length())).collect();
        assert_eq!(rows, vec![(vec![1], 0), (vec![1], 1)]);
    }

    #[test]
    fn dims() {
        let a6 = RootSystem::new("A6").unwrap();
        let p = Pieces::new(&a6);
        assert_eq!(p.piece_dim(set(&[2, 5]), &p.weyl.from_labels(&[2, 5]).unwrap()).unwrap(), 44);
        assert_eq!(p.piece_dim(NodeSet::EMPTY, &p.weyl.identity()).unwrap(), a6.dim_g());
        assert_eq!(p.piece_dim(a6.full_set(), &p.weyl.identity()).unwrap(), a6.dim_g() - 6);
    }

    #[test]
    fn small_invariants() {
        for (t, i) in [("A2", 3), ("B2", 3), ("G2", 3), ("A1xA1", 1)] {
            let rs = RootSystem::new(t).unwrap();
            let p = Pieces::new(&rs);
            assert_eq!(p.i_g(), i, "{t}");
            assert_eq!(p.i_g_full_scan(1000).unwrap(), i, "{t}");
        }
    }

    #[test]
    fn maximal_census_small() {
        let a6 = RootSystem::new("A6").unwrap();
        let (m, ps) = Pieces::new(&a6).maximal_pieces();
        assert_eq!((m, ps.len()), (44, 1));
        assert_eq!(ps[0].j, set(&[2, 5]));
    }

    #[test]
    fn in_b_cases() {
        let a3 = RootSystem::new("A3").unwrap();
        let p = Pieces::new(&a3);
        let s2 = p.weyl.from_labels(&[2]).unwrap();
        assert!(!p.in_b(set(&[2]), set(&[1]), &s2).unwrap());
        for w in p.weyl.enumerate_group(100).unwrap() {
            assert!(p.in_b(a3.full_set(), a3.full_set(), &w).unwrap());
        }
    }

    #[test]
    fn closure_examples() {
        let a2 = RootSystem::new("A2").unwrap();
        let p = Pieces::new(&a2);
        let open = p.piece(NodeSet::EMPTY, p.weyl.identity()).unwrap();
        let big = p.piece(a2.full_set(), p.weyl.from_labels(&[1, 2, 1]).unwrap()).unwrap();
        let small = p.piece(a2.full_set(), p.weyl.from_labels(&[1]).unwrap()).unwrap();
        assert!(p.closure_leq(&big, &small, 100).unwrap());
        assert!(!p.closure_leq(&small, &big, 100).unwrap());
        for q in p.all_pieces(None, 100).unwrap() {
            assert!(p.closure_leq(&q, &open, 100).unwrap());
            assert!(p.closure_leq(&q, &q, 100).unwrap());
        }
    }

    #[test]
    fn a3_witness() {
        let a3 = RootSystem::new("A3").unwrap();
        let p = Pieces::new(&a3);
        let ws = p.prop10_witnesses(100).unwrap();
        assert!(ws.iter().any(|w| w.k == 2 && w.w_word == vec![2]));
        for k in 1..=3 {
            assert!(ws.iter().any(|w| w.k == k));
        }
    }
}
