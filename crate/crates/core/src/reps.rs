//! Weight systems of irreducible highest-weight representations.

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::{Q, RootSystem, Weight};
use num::{BigInt, ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

/// Weight multiset keyed by weight coordinates.
pub type Character = BTreeMap<Weight, u64>;

pub const DEFAULT_DIM_CAP: u128 = 1_000_000;

#[derive(Clone, Debug)]
pub struct WeightEntry {
    pub weight: Weight,
    pub mult: u64,
    /// Simple-root coordinates of `lambda - weight`.
    pub depth_coords: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct WeightSystem {
    pub highest: Weight,
    /// Ordered by height of `lambda - mu`, then lexicographically on its coordinates.
    pub entries: Vec<WeightEntry>,
    pub dim: u64,
    index: HashMap<Weight, usize>,
}

pub fn is_dominant(m: &[i64]) -> bool {
    m.iter().all(|&x| x >= 0)
}

pub fn support(m: &[i64]) -> NodeSet {
    NodeSet::from_nodes(m.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i))
}

pub fn is_regular(rs: &RootSystem, m: &[i64]) -> bool {
    support(m) == rs.full_set()
}

fn check_weight(rs: &RootSystem, m: &[i64]) -> Result<()> {
    if m.len() != rs.rank {
        return Err(Error::Precondition(format!("weight has {} coordinates, rank is {}", m.len(), rs.rank)));
    }
    if !is_dominant(m) {
        return Err(Error::Precondition(format!("{m:?} is not dominant")));
    }
    Ok(())
}

/// Weyl dimension formula.
pub fn dim_weyl(rs: &RootSystem, lambda: &[i64]) -> Result<u128> {
    check_weight(rs, lambda)?;
    let lr: Weight = lambda.iter().map(|x| x + 1).collect();
    let rho = rs.rho();
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for a in &rs.positive_roots {
        num *= rs.coroot_pairing(&lr, a);
        den *= rs.coroot_pairing(&rho, a);
    }
    debug_assert!((&num % &den).is_zero());
    Ok((num / den).to_u128().unwrap_or(u128::MAX))
}

/// Image of `m` in the dominant chamber.
pub fn dominant_rep(rs: &RootSystem, m: &[i64]) -> Weight {
    let mut v = m.to_vec();
    while let Some(i) = v.iter().position(|&x| x < 0) {
        let c = v[i];
        for (j, row) in rs.cartan.iter().enumerate() {
            v[j] -= c * row[i];
        }
    }
    v
}

/// W-orbit of a weight.
pub fn weyl_orbit(rs: &RootSystem, m: &[i64]) -> Vec<Weight> {
    let start = dominant_rep(rs, m);
    let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for i in 0..rs.rank {
            if v[i] > 0 {
                let mut u = v.clone();
                let c = v[i];
                for (j, row) in rs.cartan.iter().enumerate() {
                    u[j] -= c * row[i];
                }
                if seen.insert(u.clone()) {
                    out.push(u.clone());
                    queue.push_back(u);
                }
            }
        }
    }
    out
}

fn add(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl WeightSystem {
    pub fn new(rs: &RootSystem, lambda: &[i64]) -> Result<Self> {
        Self::with_cap(rs, lambda, DEFAULT_DIM_CAP)
    }

    pub fn fundamental(rs: &RootSystem, k: usize) -> Result<Self> {
        rs.check_node(k)?;
        Self::new(rs, &rs.fundamental_weight(k))
    }

    pub fn with_cap(rs: &RootSystem, lambda: &[i64], cap: u128) -> Result<Self> {
        let projected = dim_weyl(rs, lambda)?;
        if projected > cap {
            return Err(Error::CapExceeded { what: format!("dim V({lambda:?})"), estimate: projected, cap });
        }
        let root_w: Vec<Weight> = rs.positive_roots.iter().map(|a| rs.root_to_weight(a)).collect();

        // Dominant weights below lambda: every such weight is reached through
        // dominant weights by subtracting positive roots.
        let mut dominant = vec![lambda.to_vec()];
        let mut seen: HashSet<Weight> = HashSet::from([lambda.to_vec()]);
        let mut queue = VecDeque::from([lambda.to_vec()]);
        while let Some(mu) = queue.pop_front() {
            for a in &root_w {
                let nu = sub(&mu, a);
                if is_dominant(&nu) && seen.insert(nu.clone()) {
                    dominant.push(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        let depth = |mu: &[i64]| -> Vec<i64> {
            rs.weight_to_root_int(&sub(lambda, mu)).expect("lambda - mu lies in the root lattice")
        };
        dominant.sort_by_cached_key(|mu| {
            let d = depth(mu);
            (RootSystem::height(&d), d)
        });

        // Freudenthal recursion.
        let lr: Weight = lambda.iter().map(|x| x + 1).collect();
        let top = rs.form_weights(&lr, &lr);
        let mut mult: HashMap<Weight, u64> = HashMap::new();
        mult.insert(lambda.to_vec(), 1);
        for mu in dominant.iter().skip(1) {
            let mut acc = Q::zero();
            for a in &root_w {
                let mut nu = add(mu, a);
                loop {
                    let m = mult.get(&dominant_rep(rs, &nu)).copied().unwrap_or(0);
                    if m == 0 {
                        break;
                    }
                    acc += rs.form_weights(&nu, a) * Q::from_integer(m as i64);
                    nu = add(&nu, a);
                }
            }
            let mr: Weight = mu.iter().map(|x| x + 1).collect();
            let denom = top - rs.form_weights(&mr, &mr);
            let m = acc * Q::from_integer(2) / denom;
            debug_assert!(m.is_integer());
            mult.insert(mu.clone(), m.to_integer() as u64);
        }

        let mut entries = Vec::new();
        for mu in &dominant {
            let m = mult[mu];
            for nu in weyl_orbit(rs, mu) {
                let d = depth(&nu);
                entries.push(WeightEntry { weight: nu, mult: m, depth_coords: d });
            }
        }
        entries.sort_by(|x, y| {
            (RootSystem::height(&x.depth_coords), &x.depth_coords).cmp(&(RootSystem::height(&y.depth_coords), &y.depth_coords))
        });
        let index = entries.iter().enumerate().map(|(k, e)| (e.weight.clone(), k)).collect();
        let dim = entries.iter().map(|e| e.mult).sum();
        Ok(WeightSystem { highest: lambda.to_vec(), entries, dim, index })
    }

    pub fn mult(&self, mu: &[i64]) -> u64 {
        self.index.get(mu).map(|&k| self.entries[k].mult).unwrap_or(0)
    }

    pub fn contains(&self, mu: &[i64]) -> bool {
        self.index.contains_key(mu)
    }

    pub fn position(&self, mu: &[i64]) -> Option<usize> {
        self.index.get(mu).copied()
    }

    pub fn character(&self) -> Character {
        self.entries.iter().map(|e| (e.weight.clone(), e.mult)).collect()
    }

    /// Simple-root coordinates of `lambda - mu`.
    pub fn lambda_minus_mu_coords(&self, mu: &[i64]) -> Result<Vec<i64>> {
        self.index
            .get(mu)
            .map(|&k| self.entries[k].depth_coords.clone())
            .ok_or_else(|| Error::Precondition(format!("{mu:?} is not a weight of V({:?})", self.highest)))
    }

    /// Cover relations `(lower, upper)` of the order `mu <= nu` iff `nu - mu` is a
    /// nonnegative combination of simple roots, by transitive reduction.
    pub fn weight_poset(&self) -> Vec<(usize, usize)> {
        let n = self.entries.len();
        let below = |a: usize, b: usize| -> bool {
            a != b && self.entries[a].depth_coords.iter().zip(&self.entries[b].depth_coords).all(|(x, y)| x >= y)
        };
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if below(a, b) && !(0..n).any(|c| below(a, c) && below(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Weights of the dual module, the single place where signs flip.
pub fn negate_system(ws: &WeightSystem) -> Vec<(Weight, u64)> {
    ws.entries.iter().map(|e| (e.weight.iter().map(|x| -x).collect(), e.mult)).collect()
}

/// Basis weights with multiplicity, as a flat list.
pub fn basis_weights(ch: &Character) -> Vec<Weight> {
    ch.iter().flat_map(|(w, &m)| std::iter::repeat(w.clone()).take(m as usize)).collect()
}

/// Character of the k-th exterior power.
pub fn exterior_power(ch: &Character, k: usize) -> Character {
    let rank = ch.keys().next().map(|w| w.len()).unwrap_or(0);
    let mut dp: Vec<Character> = vec![Character::new(); k + 1];
    dp[0].insert(vec![0; rank], 1);
    for v in basis_weights(ch) {
        for j in (1..=k).rev() {
            let prev: Vec<(Weight, u64)> = dp[j - 1].iter().map(|(w, &c)| (w.clone(), c)).collect();
            for (w, c) in prev {
                *dp[j].entry(add(&w, &v)).or_insert(0) += c;
            }
        }
    }
    dp.swap_remove(k)
}

pub fn char_sum(parts: &[Character]) -> Character {
    let mut out = Character::new();
    for p in parts {
        for (w, &m) in p {
            *out.entry(w.clone()).or_insert(0) += m;
        }
    }
    out.retain(|_, m| *m > 0);
    out
}

/// Compare two formal sums of characters as weight multisets.
pub fn decompose_check(lhs: &[Character], rhs: &[Character]) -> Result<bool> {
    let ranks: HashSet<usize> = lhs.iter().chain(rhs).flat_map(|c| c.keys().map(|w| w.len())).collect();
    if ranks.len() > 1 {
        return Err(Error::Precondition("characters over different root systems".into()));
    }
    Ok(char_sum(lhs) == char_sum(rhs))
}
