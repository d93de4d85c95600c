//! Exact eigenvalues `zeta^torsion q^free` and torus elements.

use crate::rootsys::{RootSystem, Q};
use crate::weyl::{Weyl, WeylElement};
use num::{Integer, One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

/// Reduce a rational into `[0, 1)`.
pub fn frac(x: Q) -> Q {
    let f = x - x.floor();
    if f.is_negative() {
        f + Q::one()
    } else {
        f
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar {
    pub torsion: Q,
    pub free: i64,
}

impl ExactScalar {
    pub fn new(torsion: Q, free: i64) -> Self {
        ExactScalar { torsion: frac(torsion), free }
    }

    pub fn one() -> Self {
        ExactScalar { torsion: Q::zero(), free: 0 }
    }

    /// Group law (multiplication of the represented numbers).
    pub fn mul(self, o: Self) -> Self {
        Self::new(self.torsion + o.torsion, self.free + o.free)
    }

    pub fn div(self, o: Self) -> Self {
        Self::new(self.torsion - o.torsion, self.free - o.free)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.torsion, self.free)
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.torsion.to_string(), self.free).serialize(s)
    }
}

/// `lambda_i(t) = zeta^{a_i} q^{b_i}` on the simply connected torus.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusElement {
    pub a: Vec<Q>,
    pub b: Vec<i64>,
}

impl TorusElement {
    pub fn new(a: Vec<Q>, b: Vec<i64>) -> Self {
        TorusElement { a: a.into_iter().map(frac).collect(), b }
    }

    pub fn identity(rank: usize) -> Self {
        TorusElement { a: vec![Q::zero(); rank], b: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.b.len()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    /// Eigenvalue of the weight `mu` (fundamental-weight coordinates).
    pub fn eigenvalue(&self, mu: &[i64]) -> ExactScalar {
        let t = mu.iter().zip(&self.a).fold(Q::zero(), |s, (&m, a)| s + *a * Q::from_integer(m));
        let f = mu.iter().zip(&self.b).map(|(m, b)| m * b).sum();
        ExactScalar::new(t, f)
    }

    pub fn mul(&self, o: &Self) -> Self {
        TorusElement::new(
            self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
            self.b.iter().zip(&o.b).map(|(x, y)| x + y).collect(),
        )
    }

    pub fn inverse(&self) -> Self {
        TorusElement::new(self.a.iter().map(|x| -x).collect(), self.b.iter().map(|x| -x).collect())
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inverse())
    }

    /// `w . t`, defined by `mu(w . t) = (w^{-1} mu)(t)`.
    pub fn act(&self, weyl: &Weyl, w: &WeylElement) -> Self {
        let winv = weyl.inverse(w);
        self.act_by_inverse(weyl, &winv)
    }

    /// `w . t` given `w^{-1}`.
    pub fn act_by_inverse(&self, weyl: &Weyl, winv: &WeylElement) -> Self {
        let l = self.rank();
        let (mut a, mut b) = (Vec::with_capacity(l), Vec::with_capacity(l));
        for i in 0..l {
            let e = self.eigenvalue(&weyl.act_on_weight(winv, &weyl.rs.fundamental_weight(i)));
            a.push(e.torsion);
            b.push(e.free);
        }
        TorusElement { a, b }
    }

    /// Values `alpha_u(t)` on the simple roots.
    pub fn simple_root_values(&self, rs: &RootSystem) -> Vec<ExactScalar> {
        (0..rs.rank).map(|u| self.eigenvalue(&rs.root_to_weight(&rs.simple_root(u)))).collect()
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "t(a={a:?}, b={:?})", self.b)
    }
}

impl Serialize for TorusElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            a: Vec<String>,
            b: Vec<i64>,
        }
        Repr { a: self.a.iter().map(|x| x.to_string()).collect(), b: self.b.clone() }.serialize(s)
    }
}

/// Sorted eigenvalue multiset of `t` on a weight list with multiplicities.
pub fn eigenvalue_multiset(weights: &[(Vec<i64>, u64)], t: &TorusElement) -> Vec<ExactScalar> {
    let mut out: Vec<ExactScalar> = weights
        .iter()
        .flat_map(|(mu, m)| std::iter::repeat(t.eigenvalue(mu)).take(*m as usize))
        .collect();
    out.sort();
    out
}

/// Diagonalize an integer matrix by unimodular row and column operations.
/// Returns the diagonal and the column transform `Q` with `P A Q = D`.
pub fn smith_diagonal(m: &[Vec<i64>]) -> (Vec<i64>, Vec<Vec<i64>>) {
    let n = m.len();
    let mut a = m.to_vec();
    let mut q: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for t in 0..n {
        loop {
            let Some((pr, pc)) = (t..n)
                .flat_map(|r| (t..n).map(move |c| (r, c)))
                .filter(|&(r, c)| a[r][c] != 0)
                .min_by_key(|&(r, c)| a[r][c].abs())
            else {
                break;
            };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            for row in q.iter_mut() {
                row.swap(t, pc);
            }
            let p = a[t][t];
            let mut clean = true;
            for r in t + 1..n {
                let f = Integer::div_floor(&a[r][t], &p);
                if f != 0 {
                    for c in 0..n {
                        a[r][c] -= f * a[t][c];
                    }
                }
                clean &= a[r][t] == 0;
            }
            for c in t + 1..n {
                let f = Integer::div_floor(&a[t][c], &p);
                if f != 0 {
                    for r in 0..n {
                        a[r][c] -= f * a[r][t];
                    }
                    for row in q.iter_mut() {
                        row[c] -= f * row[t];
                    }
                }
                clean &= a[t][c] == 0;
            }
            if clean {
                break;
            }
        }
    }
    ((0..n).map(|i| a[i][i]).collect(), q)
}

/// Elements of the center of the simply connected group: `alpha_i(t) = 1` for all `i`.
pub fn center_elements(rs: &RootSystem) -> Vec<TorusElement> {
    let l = rs.rank;
    let ct: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| rs.cartan[j][i]).collect()).collect();
    let (d, q) = smith_diagonal(&ct);
    let mut out = vec![TorusElement::identity(l)];
    for (i, &di) in d.iter().enumerate() {
        let di = di.abs();
        let mut next = Vec::new();
        for t in &out {
            for k in 0..di {
                let shift: Vec<Q> = (0..l).map(|r| Q::new(q[r][i] * k, di)).collect();
                next.push(TorusElement::new(t.a.iter().zip(&shift).map(|(x, y)| x + y).collect(), vec![0; l]));
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_eigenvalues() {
        let rs = RootSystem::new("A1").unwrap();
        let ws = crate::reps::WeightSystem::fundamental(&rs, 0).unwrap();
        let t = TorusElement::new(vec![Q::zero()], vec![1]);
        let ms = eigenvalue_multiset(&ws.character().into_iter().collect::<Vec<_>>(), &t);
        assert_eq!(ms, vec![ExactScalar::new(Q::zero(), -1), ExactScalar::new(Q::zero(), 1)]);
    }

    #[test]
    fn center_orders() {
        for (t, n) in [("B3", 2), ("G2", 1), ("A2", 3), ("A3", 4), ("D4", 4), ("E6", 3), ("A1xA1", 4)] {
            let rs = RootSystem::new(t).unwrap();
            let z = center_elements(&rs);
            assert_eq!(z.len() as i64, rs.det_cartan(), "{t}");
            assert_eq!(z.len(), n, "{t}");
            for c in &z {
                assert!(c.simple_root_values(&rs).iter().all(|v| *v == ExactScalar::one()));
            }
        }
    }

    #[test]
    fn frac_wraps() {
        assert_eq!(frac(Q::new(-1, 3)), Q::new(2, 3));
        assert_eq!(frac(Q::new(7, 3)), Q::new(1, 3));
    }
}
