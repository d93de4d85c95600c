//! Weyl group elements as integer matrices acting on simple-root coordinates.

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::{Root, RootSystem, Weight};
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// `matrix[j * rank + i]` is the coefficient of `alpha_i` in `w(alpha_j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    matrix: Box<[i8]>,
    rank: u8,
    length: u32,
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of `alpha_j` in root coordinates.
    pub fn column(&self, j: usize) -> Root {
        let l = self.rank();
        self.matrix[j * l..(j + 1) * l].iter().map(|&x| x as i64).collect()
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        (0..l).map(|i| (0..l).map(|j| self.matrix[j * l + i] as i64).collect()).collect()
    }

    /// `w(alpha_j)` is a positive root.
    pub fn maps_simple_positive(&self, j: usize) -> bool {
        let l = self.rank();
        self.matrix[j * l..(j + 1) * l].iter().any(|&x| x > 0)
    }

    pub fn act_on_root(&self, v: &[i64]) -> Root {
        let l = self.rank();
        let mut out = vec![0i64; l];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                for i in 0..l {
                    out[i] += c * self.matrix[j * l + i] as i64;
                }
            }
        }
        out
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}(len {})", self.matrix_rows(), self.length)
    }
}

/// Weyl group of a root system.
#[derive(Clone, Copy)]
pub struct Weyl<'a> {
    pub rs: &'a RootSystem,
}

impl<'a> Weyl<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Weyl { rs }
    }

    fn l(&self) -> usize {
        self.rs.rank
    }

    fn raw(&self, cols: Vec<i64>, length: u32) -> WeylElement {
        WeylElement {
            matrix: cols.into_iter().map(|x| x as i8).collect(),
            rank: self.l() as u8,
            length,
        }
    }

    fn from_cols(&self, cols: Vec<i64>) -> WeylElement {
        let mut w = self.raw(cols, 0);
        w.length = self.count_inversions(&w);
        w
    }

    fn count_inversions(&self, w: &WeylElement) -> u32 {
        self.rs
            .positive_roots
            .iter()
            .filter(|b| w.act_on_root(b).iter().any(|&x| x < 0))
            .count() as u32
    }

    pub fn identity(&self) -> WeylElement {
        let l = self.l();
        let cols = (0..l * l).map(|k| (k / l == k % l) as i64).collect();
        self.raw(cols, 0)
    }

    pub fn generator(&self, i: usize) -> Result<WeylElement> {
        self.rs.check_node(i)?;
        Ok(self.right_mul_simple(&self.identity(), i))
    }

    /// Product of simple reflections, 0-based indices.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word {
            self.rs.check_node(i)?;
            w = self.right_mul_simple(&w, i);
        }
        Ok(w)
    }

    /// Same as `from_word` with 1-based labels.
    pub fn from_labels(&self, word: &[usize]) -> Result<WeylElement> {
        if word.iter().any(|&i| i == 0) {
            return Err(Error::NodeOutOfRange(0, self.l()));
        }
        self.from_word(&word.iter().map(|i| i - 1).collect::<Vec<_>>())
    }

    /// `w s_i`; length moves by one according to the sign of `w(alpha_i)`.
    pub fn right_mul_simple(&self, w: &WeylElement, s: usize) -> WeylElement {
        let l = self.l();
        let up = w.maps_simple_positive(s);
        let mut cols: Vec<i64> = w.matrix.iter().map(|&x| x as i64).collect();
        for k in 0..l {
            let c = self.rs.cartan[s][k];
            if k != s && c != 0 {
                for i in 0..l {
                    cols[k * l + i] -= c * w.matrix[s * l + i] as i64;
                }
            }
        }
        for i in 0..l {
            cols[s * l + i] = -cols[s * l + i];
        }
        let length = if up { w.length + 1 } else { w.length - 1 };
        self.raw(cols, length)
    }

    /// `s_i w`.
    pub fn left_mul_simple(&self, w: &WeylElement, s: usize) -> WeylElement {
        let l = self.l();
        let up = !self.left_descents(w).contains(s);
        let mut cols: Vec<i64> = w.matrix.iter().map(|&x| x as i64).collect();
        for j in 0..l {
            let p: i64 = (0..l).map(|k| self.rs.cartan[s][k] * cols[j * l + k]).sum();
            cols[j * l + s] -= p;
        }
        let length = if up { w.length + 1 } else { w.length - 1 };
        self.raw(cols, length)
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let l = self.l();
        let mut cols = Vec::with_capacity(l * l);
        for j in 0..l {
            cols.extend(u.act_on_root(&v.column(j)));
        }
        self.from_cols(cols)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.from_word(&word).expect("valid word")
    }

    /// `w(rho)` in weight coordinates, scaled by 2.
    fn two_w_rho(&self, w: &WeylElement) -> Weight {
        self.rs.root_to_weight(&w.act_on_root(&self.rs.two_rho_root()))
    }

    /// Nodes `i` with `l(s_i w) < l(w)`.
    pub fn left_descents(&self, w: &WeylElement) -> NodeSet {
        NodeSet::from_nodes(self.two_w_rho(w).iter().enumerate().filter(|(_, &x)| x < 0).map(|(i, _)| i))
    }

    /// Nodes `i` with `l(w s_i) < l(w)`.
    pub fn right_descents(&self, w: &WeylElement) -> NodeSet {
        NodeSet::from_nodes((0..self.l()).filter(|&i| !w.maps_simple_positive(i)))
    }

    /// Lexicographically minimal reduced word, 0-based.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while !cur.is_identity() {
            let s = self.left_descents(&cur).iter().next().expect("nontrivial element has a descent");
            word.push(s);
            cur = self.left_mul_simple(&cur, s);
        }
        word
    }

    pub fn reduced_labels(&self, w: &WeylElement) -> Vec<usize> {
        self.reduced_word(w).into_iter().map(|i| i + 1).collect()
    }

    pub fn support(&self, w: &WeylElement) -> NodeSet {
        NodeSet::from_nodes(self.reduced_word(w))
    }

    /// Action on weight coordinates, conjugated through the root basis.
    pub fn act_on_weight(&self, w: &WeylElement, m: &[i64]) -> Weight {
        let r = w.act_on_root(&self.rs.weight_to_root_scaled(m));
        let det = self.rs.det_cartan();
        self.rs.root_to_weight(&r).into_iter().map(|x| x / det).collect()
    }

    pub fn fixes_weight(&self, w: &WeylElement, m: &[i64]) -> bool {
        self.act_on_weight(w, m) == m
    }

    /// Breadth-first enumeration of elements of length at most `max_len`,
    /// ordered by length and then by lexicographically minimal reduced word.
    pub fn enumerate_up_to_length(&self, max_len: usize) -> Vec<WeylElement> {
        let mut all = vec![self.identity()];
        let mut layer = vec![self.identity()];
        for _ in 0..max_len {
            let mut seen: HashSet<Box<[i8]>> = HashSet::new();
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.l() {
                    if w.maps_simple_positive(s) {
                        let v = self.right_mul_simple(w, s);
                        if seen.insert(v.matrix.clone()) {
                            next.push(v);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    pub fn enumerate_group(&self, cap: u128) -> Result<Vec<WeylElement>> {
        let order = self.rs.weyl_order();
        if order > cap {
            return Err(Error::CapExceeded { what: format!("|W({})|", self.rs.name()), estimate: order, cap });
        }
        Ok(self.enumerate_up_to_length(self.rs.num_positive()))
    }

    /// Elements of the subgroup generated by `{s_i : i in gens}`.
    pub fn enumerate_parabolic(&self, gens: NodeSet, cap: u128) -> Result<Vec<WeylElement>> {
        let mut seen: HashSet<Box<[i8]>> = HashSet::new();
        let e = self.identity();
        seen.insert(e.matrix.clone());
        let mut out = vec![e.clone()];
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            for s in gens.iter() {
                let v = self.right_mul_simple(&w, s);
                if seen.insert(v.matrix.clone()) {
                    if out.len() as u128 >= cap {
                        return Err(Error::CapExceeded { what: "parabolic subgroup".into(), estimate: out.len() as u128 + 1, cap });
                    }
                    out.push(v.clone());
                    queue.push_back(v);
                }
            }
        }
        out.sort_by_key(|w| (w.length(), self.reduced_word(w)));
        Ok(out)
    }

    /// `w(alpha_i) > 0` for all `i` in `gens`: minimal in its coset `w <s_gens>`.
    pub fn is_min_coset_rep(&self, w: &WeylElement, gens: NodeSet) -> bool {
        gens.iter().all(|i| w.maps_simple_positive(i))
    }

    /// `w(alpha_i) > 0` and `w^{-1}(alpha_i) > 0` for all `i` in `gens`.
    pub fn is_min_double_coset_rep(&self, w: &WeylElement, gens: NodeSet) -> bool {
        self.is_min_coset_rep(w, gens) && self.left_descents(w).intersect(gens).is_empty()
    }

    pub fn min_coset_reps(&self, gens: NodeSet, cap: u128) -> Result<Vec<WeylElement>> {
        Ok(self.enumerate_group(cap)?.into_iter().filter(|w| self.is_min_coset_rep(w, gens)).collect())
    }

    pub fn min_double_coset_reps(&self, gens: NodeSet, cap: u128) -> Result<Vec<WeylElement>> {
        Ok(self
            .enumerate_group(cap)?
            .into_iter()
            .filter(|w| self.is_min_double_coset_rep(w, gens))
            .collect())
    }

    /// Bruhat order by the descent recursion.
    pub fn bruhat_leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let (mut u, mut v) = (u.clone(), v.clone());
        loop {
            if u.length > v.length {
                return false;
            }
            if v.is_identity() {
                return u.is_identity();
            }
            if u.is_identity() {
                return true;
            }
            let s = self.left_descents(&v).iter().next().expect("descent");
            if self.left_descents(&u).contains(s) {
                u = self.left_mul_simple(&u, s);
            }
            v = self.left_mul_simple(&v, s);
        }
    }

    /// Cover relations `(u, v)` of the Bruhat order restricted to `elems`.
    pub fn bruhat_covers(&self, elems: &[WeylElement]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, u) in elems.iter().enumerate() {
            for (b, v) in elems.iter().enumerate() {
                if v.length == u.length + 1 && self.bruhat_leq(u, v) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Human label such as `s2s1s2`, or `e`.
    pub fn label(&self, w: &WeylElement) -> String {
        let word = self.reduced_labels(w);
        if word.is_empty() {
            "e".into()
        } else {
            word.iter().map(|i| format!("s{i}")).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_reflections() {
        let rs = RootSystem::new("G2").unwrap();
        let w = Weyl::new(&rs);
        assert_eq!(w.generator(1).unwrap().act_on_root(&[1, 0]), vec![1, 1]);
        assert_eq!(w.generator(0).unwrap().act_on_root(&[0, 1]), vec![3, 1]);
        for i in 0..2 {
            assert_eq!(w.generator(i).unwrap().act_on_root(&rs.simple_root(i)), {
                let mut r = vec![0, 0];
                r[i] = -1;
                r
            });
        }
    }

    #[test]
    fn orders() {
        for (t, n) in [("G2", 12), ("A2", 6), ("B3", 48), ("A1xA1", 4)] {
            let rs = RootSystem::new(t).unwrap();
            assert_eq!(Weyl::new(&rs).enumerate_group(1_000).unwrap().len(), n);
        }
        let rs = RootSystem::new("E8").unwrap();
        assert!(matches!(Weyl::new(&rs).enumerate_group(10_000_000), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn bad_word_rejected() {
        let rs = RootSystem::new("A2").unwrap();
        assert!(Weyl::new(&rs).from_word(&[0, 2]).is_err());
        assert!(Weyl::new(&rs).from_labels(&[0]).is_err());
    }

    #[test]
    fn enumeration_order() {
        let rs = RootSystem::new("A2").unwrap();
        let w = Weyl::new(&rs);
        let labels: Vec<_> = w.enumerate_group(100).unwrap().iter().map(|x| w.label(x)).collect();
        assert_eq!(labels, ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]);
    }

    #[test]
    fn support_examples() {
        let rs = RootSystem::new("A2").unwrap();
        let w = Weyl::new(&rs);
        assert!(w.support(&w.identity()).is_empty());
        assert_eq!(w.support(&w.from_labels(&[2, 1]).unwrap()).labels(), vec![1, 2]);
    }

    #[test]
    fn coset_reps() {
        let rs = RootSystem::new("A2").unwrap();
        let w = Weyl::new(&rs);
        let reps: Vec<_> = w.min_coset_reps(NodeSet::from_labels([2]), 100).unwrap().iter().map(|x| w.label(x)).collect();
        assert_eq!(reps, ["e", "s1", "s2s1"]);
        assert_eq!(w.min_coset_reps(NodeSet::EMPTY, 100).unwrap().len(), 6);
        assert_eq!(w.min_coset_reps(rs.full_set(), 100).unwrap().len(), 1);
    }

    #[test]
    fn g2_double_cosets() {
        let rs = RootSystem::new("G2").unwrap();
        let w = Weyl::new(&rs);
        let lab = |k| -> Vec<String> {
            w.min_double_coset_reps(NodeSet::from_labels([k]), 100).unwrap().iter().map(|x| w.label(x)).collect()
        };
        assert_eq!(lab(1), ["e", "s2", "s2s1s2", "s2s1s2s1s2"]);
        assert_eq!(lab(2), ["e", "s1", "s1s2s1", "s1s2s1s2s1"]);
        assert_eq!(w.min_double_coset_reps(NodeSet::EMPTY, 100).unwrap().len(), 12);
    }

    #[test]
    fn bruhat_examples() {
        let rs = RootSystem::new("G2").unwrap();
        let w = Weyl::new(&rs);
        assert!(w.bruhat_leq(&w.from_labels(&[1]).unwrap(), &w.from_labels(&[2, 1]).unwrap()));
        let a2 = RootSystem::new("A2").unwrap();
        let w = Weyl::new(&a2);
        assert!(!w.bruhat_leq(&w.from_labels(&[1]).unwrap(), &w.from_labels(&[2]).unwrap()));
        for x in w.enumerate_group(10).unwrap() {
            assert!(w.bruhat_leq(&w.identity(), &x));
        }
    }

    #[test]
    fn inverse_and_weights() {
        let rs = RootSystem::new("B3").unwrap();
        let w = Weyl::new(&rs);
        let x = w.from_labels(&[1, 2, 3, 2]).unwrap();
        assert_eq!(w.multiply(&x, &w.inverse(&x)), w.identity());
        assert_eq!(w.act_on_weight(&w.generator(0).unwrap(), &[1, 0, 0]), vec![-1, 1, 0]);
    }
}
