//! Finite crystallographic root systems with integer data.
//!
//! Roots are stored in simple-root coordinates and weights in fundamental-weight
//! coordinates. Nodes are 0-based internally and 1-based in every label shown to a
//! user. Numbering is Bourbaki per family, except that G2 takes node 1 short.

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use num::rational::Ratio;
use num::Zero;
use std::collections::{HashMap, VecDeque};
use std::fmt;

pub type Q = Ratio<i64>;
/// Integer vector in simple-root coordinates.
pub type Root = Vec<i64>;
/// Integer vector in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn valid_rank(self, l: usize) -> bool {
        match self {
            Family::A => l >= 1,
            Family::B | Family::C => l >= 2,
            Family::D => l >= 4,
            Family::E => (6..=8).contains(&l),
            Family::F => l == 4,
            Family::G => l == 2,
        }
    }
}

/// One simple block of a (possibly reducible) type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Parse `"A3"`, `"B2xA1"`, `"A1×A1"` and similar.
pub fn parse_type(spec: &str) -> Result<Vec<Component>> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Parse("empty type".into()));
    }
    let mut out = Vec::new();
    for part in spec.split(|c| c == 'x' || c == 'X' || c == '×' || c == '*') {
        let part = part.trim();
        let mut chars = part.chars();
        let fam = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("unknown family in '{part}'")))?;
        let rank: usize = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in '{part}'")))?;
        if !fam.valid_rank(rank) {
            return Err(Error::InvalidType(format!("{}{rank} is not a valid type", fam.letter())));
        }
        out.push(Component { family: fam, rank });
    }
    Ok(out)
}

/// Cartan block with `c[i][j] = <alpha_j, alpha_i^vee>`.
fn cartan_block(c: Component) -> Vec<Vec<i64>> {
    let l = c.rank;
    let mut m = vec![vec![0i64; l]; l];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match c.family {
        Family::A | Family::B | Family::C => (0..l - 1).for_each(|i| link(i, i + 1)),
        Family::D => {
            (0..l - 2).for_each(|i| link(i, i + 1));
            link(l - 3, l - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            (2..l - 1).for_each(|i| link(i, i + 1));
        }
        Family::F => (0..3).for_each(|i| link(i, i + 1)),
        Family::G => link(0, 1),
    }
    match c.family {
        // alpha_l short
        Family::B => m[l - 1][l - 2] = -2,
        // alpha_l long
        Family::C => m[l - 2][l - 1] = -2,
        // alpha_3, alpha_4 short
        Family::F => m[2][1] = -2,
        // alpha_1 short: s_1(alpha_2) = alpha_2 + 3 alpha_1
        Family::G => m[0][1] = -3,
        _ => {}
    }
    m
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub components: Vec<Component>,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots sorted by height, then lexicographically.
    pub positive_roots: Vec<Root>,
    /// `(alpha_i, alpha_i) / 2`, equal to 1 on short roots of each component.
    pub half_norms: Vec<i64>,
    /// Dynkin edges `(i, j, bond)` with `i < j`.
    pub edges: Vec<(usize, usize, u8)>,
    det: i64,
    adj: Vec<Vec<i64>>,
    root_index: HashMap<Root, usize>,
    block_of: Vec<usize>,
}

impl RootSystem {
    pub fn new(spec: &str) -> Result<Self> {
        Ok(Self::from_components(&parse_type(spec)?))
    }

    pub fn from_components(comps: &[Component]) -> Self {
        let rank: usize = comps.iter().map(|c| c.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut block_of = Vec::with_capacity(rank);
        let mut off = 0;
        for (b, c) in comps.iter().enumerate() {
            let m = cartan_block(*c);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[off + i][off + j] = m[i][j];
                }
                block_of.push(b);
            }
            off += c.rank;
        }
        let half_norms = symmetrizer(&cartan);
        let mut edges = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                if cartan[i][j] != 0 {
                    edges.push((i, j, (cartan[i][j] * cartan[j][i]) as u8));
                }
            }
        }
        let positive_roots = close_roots(&cartan);
        let mut root_index = HashMap::new();
        for (k, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.clone(), k);
            root_index.insert(r.iter().map(|x| -x).collect(), positive_roots.len() + k);
        }
        let (det, adj) = det_adj(&cartan);
        RootSystem {
            components: comps.to_vec(),
            rank,
            cartan,
            positive_roots,
            half_norms,
            edges,
            det,
            adj,
            root_index,
            block_of,
        }
    }

    pub fn name(&self) -> String {
        self.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("x")
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// All roots: positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Root> {
        let mut v = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(|r| r.iter().map(|x| -x).collect()));
        v
    }

    /// dim G = |roots| + rank.
    pub fn dim_g(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_index.contains_key(v)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = vec![0; self.rank];
        r[i] = 1;
        r
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut r = vec![0; self.rank];
        r[i] = 1;
        r
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange(i + 1, self.rank))
        }
    }

    pub fn full_set(&self) -> NodeSet {
        NodeSet::full(self.rank)
    }

    /// Weyl vector in weight coordinates: all ones.
    pub fn rho(&self) -> Weight {
        vec![1; self.rank]
    }

    /// Sum of positive roots (= 2 rho) in root coordinates.
    pub fn two_rho_root(&self) -> Root {
        let mut s = vec![0; self.rank];
        for r in &self.positive_roots {
            for (a, b) in s.iter_mut().zip(r) {
                *a += b;
            }
        }
        s
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty")
    }

    pub fn det_cartan(&self) -> i64 {
        self.det
    }

    /// `<v, alpha_i^vee>` for `v` in root coordinates.
    pub fn coroot_pairing_root(&self, v: &[i64], i: usize) -> i64 {
        self.cartan[i].iter().zip(v).map(|(c, x)| c * x).sum()
    }

    /// Root coordinates to weight coordinates.
    pub fn root_to_weight(&self, v: &[i64]) -> Weight {
        (0..self.rank).map(|i| self.coroot_pairing_root(v, i)).collect()
    }

    /// Weight coordinates to root coordinates, times `det(cartan)`.
    pub fn weight_to_root_scaled(&self, m: &[i64]) -> Vec<i64> {
        self.adj.iter().map(|row| row.iter().zip(m).map(|(a, x)| a * x).sum()).collect()
    }

    /// Weight coordinates to rational root coordinates.
    pub fn weight_to_root(&self, m: &[i64]) -> Vec<Q> {
        self.weight_to_root_scaled(m).into_iter().map(|x| Q::new(x, self.det)).collect()
    }

    /// Integral root coordinates of a root-lattice weight, if it is one.
    pub fn weight_to_root_int(&self, m: &[i64]) -> Option<Root> {
        self.weight_to_root_scaled(m)
            .into_iter()
            .map(|x| if x % self.det == 0 { Some(x / self.det) } else { None })
            .collect()
    }

    /// Normalized invariant form on weight coordinates.
    pub fn form_weights(&self, m: &[i64], n: &[i64]) -> Q {
        let nr = self.weight_to_root_scaled(n);
        let s: i64 = (0..self.rank).map(|j| m[j] * self.half_norms[j] * nr[j]).sum();
        Q::new(s, self.det)
    }

    /// `(beta, beta)` for `beta` in root coordinates.
    pub fn root_norm(&self, b: &[i64]) -> i64 {
        let w = self.root_to_weight(b);
        (0..self.rank).map(|j| w[j] * self.half_norms[j] * b[j]).sum()
    }

    /// `<mu, beta^vee>` for a weight `mu` and root `beta` (root coordinates).
    pub fn coroot_pairing(&self, mu: &[i64], beta: &[i64]) -> i64 {
        let num: i64 = (0..self.rank).map(|j| mu[j] * self.half_norms[j] * beta[j]).sum();
        2 * num / self.root_norm(beta)
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    pub fn is_positive(r: &[i64]) -> bool {
        r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0)
    }

    pub fn support_of_root(r: &[i64]) -> NodeSet {
        NodeSet::from_nodes(r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i))
    }

    /// Negative roots generated by `{-alpha_i : i not in J}`.
    pub fn phi_minus_of(&self, j: NodeSet) -> Vec<Root> {
        self.phi_plus_of(j).into_iter().map(|r| r.iter().map(|x| -x).collect()).collect()
    }

    /// Positive roots generated by `{alpha_i : i not in J}`.
    pub fn phi_plus_of(&self, j: NodeSet) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| Self::support_of_root(r).intersect(j).is_empty())
            .cloned()
            .collect()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| self.adjacent(i, j))
    }

    /// Nodes of degree at most one.
    pub fn dynkin_end_nodes(&self) -> NodeSet {
        NodeSet::from_nodes((0..self.rank).filter(|&i| self.neighbours(i).count() <= 1))
    }

    /// Connected component of `k` in the Dynkin subgraph induced on `I \ K`.
    pub fn comp_without(&self, k_set: NodeSet, k: usize) -> Result<NodeSet> {
        self.check_node(k)?;
        if k_set.contains(k) {
            return Err(Error::Precondition(format!("node {} lies in K", k + 1)));
        }
        let allowed = k_set.complement(self.rank);
        let mut seen = NodeSet::single(k);
        let mut queue = VecDeque::from([k]);
        while let Some(i) = queue.pop_front() {
            for j in self.neighbours(i) {
                if allowed.contains(j) && !seen.contains(j) {
                    seen.insert(j);
                    queue.push_back(j);
                }
            }
        }
        Ok(seen)
    }

    /// Node sets of the simple components.
    pub fn component_sets(&self) -> Vec<NodeSet> {
        (0..self.components.len())
            .map(|b| NodeSet::from_nodes((0..self.rank).filter(|&i| self.block_of[i] == b)))
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    /// |W| as a product over components.
    pub fn weyl_order(&self) -> u128 {
        self.components
            .iter()
            .map(|c| {
                let l = c.rank as u128;
                let fact = |n: u128| (1..=n).product::<u128>();
                match c.family {
                    Family::A => fact(l + 1),
                    Family::B | Family::C => (1u128 << l) * fact(l),
                    Family::D => (1u128 << (l - 1)) * fact(l),
                    Family::E => match l {
                        6 => 51_840,
                        7 => 2_903_040,
                        _ => 696_729_600,
                    },
                    Family::F => 1152,
                    Family::G => 12,
                }
            })
            .product()
    }
}

/// Half squared lengths, normalized so the short roots of each component have 1.
fn symmetrizer(c: &[Vec<i64>]) -> Vec<i64> {
    let l = c.len();
    let mut d: Vec<Option<Q>> = vec![None; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q::from_integer(1));
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..l {
                if i != j && c[i][j] != 0 && d[j].is_none() {
                    // d_i c_ij = d_j c_ji
                    d[j] = Some(d[i].unwrap() * Q::new(c[i][j], c[j][i]));
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        let min = comp.iter().map(|&i| d[i].unwrap()).min().unwrap();
        for &i in &comp {
            d[i] = Some(d[i].unwrap() / min);
        }
    }
    d.into_iter().map(|x| x.unwrap().to_integer()).collect()
}

fn close_roots(c: &[Vec<i64>]) -> Vec<Root> {
    let l = c.len();
    let mut seen: std::collections::HashSet<Root> = Default::default();
    let mut queue = VecDeque::new();
    for i in 0..l {
        let mut r = vec![0; l];
        r[i] = 1;
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..l {
            let p: i64 = c[i].iter().zip(&r).map(|(a, x)| a * x).sum();
            let mut s = r.clone();
            s[i] -= p;
            if RootSystem::is_positive(&s) && seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    let mut v: Vec<Root> = seen.into_iter().collect();
    v.sort_by(|a, b| RootSystem::height(a).cmp(&RootSystem::height(b)).then(a.cmp(b)));
    v
}

/// Determinant and adjugate (`m * adj = det * I`) via exact rational elimination.
fn det_adj(m: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let l = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let mut inv: Vec<Vec<Q>> = (0..l)
        .map(|i| (0..l).map(|j| Q::from_integer((i == j) as i64)).collect())
        .collect();
    let mut det = Q::from_integer(1);
    for col in 0..l {
        let piv = (col..l).find(|&r| !a[r][col].is_zero()).expect("cartan matrices are invertible");
        if piv != col {
            a.swap(piv, col);
            inv.swap(piv, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for j in 0..l {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..l {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..l {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    let det = det.to_integer();
    let adj = inv
        .iter()
        .map(|r| r.iter().map(|x| (*x * Q::from_integer(det)).to_integer()).collect())
        .collect();
    (det, adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for (t, n) in [("A1", 2), ("A3", 12), ("B3", 18), ("C4", 32), ("D4", 24), ("G2", 12), ("F4", 48), ("E6", 72), ("E8", 240), ("B2xA1", 10)] {
            assert_eq!(RootSystem::new(t).unwrap().roots().len(), n, "{t}");
        }
    }

    #[test]
    fn g2_labels() {
        let rs = RootSystem::new("G2").unwrap();
        assert_eq!(rs.highest_root(), &vec![3, 2]);
        assert_eq!(RootSystem::height(rs.highest_root()), 5);
        assert_eq!(rs.half_norms, vec![1, 3]);
    }

    #[test]
    fn bad_types_rejected() {
        for t in ["", "H3", "B1", "D3", "E9", "G3", "A0", "Ax"] {
            assert!(RootSystem::new(t).is_err(), "{t}");
        }
    }

    #[test]
    fn phi_minus_examples() {
        let rs = RootSystem::new("A2").unwrap();
        assert_eq!(rs.phi_minus_of(NodeSet::from_labels([2])), vec![vec![-1, 0]]);
        assert_eq!(rs.phi_minus_of(NodeSet::EMPTY).len(), 3);
        assert!(rs.phi_minus_of(rs.full_set()).is_empty());
    }

    #[test]
    fn end_nodes_and_components() {
        let a3 = RootSystem::new("A3").unwrap();
        assert_eq!(a3.dynkin_end_nodes().labels(), vec![1, 3]);
        assert_eq!(RootSystem::new("D4").unwrap().dynkin_end_nodes().len(), 3);
        let a5 = RootSystem::new("A5").unwrap();
        assert_eq!(a5.comp_without(NodeSet::from_labels([3]), 0).unwrap().labels(), vec![1, 2]);
        assert!(a5.comp_without(NodeSet::from_labels([1]), 0).is_err());
    }

    #[test]
    fn conversions_round_trip() {
        let rs = RootSystem::new("B3").unwrap();
        for r in rs.roots() {
            let w = rs.root_to_weight(&r);
            assert_eq!(rs.weight_to_root_int(&w).unwrap(), r);
        }
        assert_eq!(rs.root_to_weight(&rs.two_rho_root()), vec![2; 3]);
    }
}
