//! Vanishing of integer combinations of roots of unity.

use super::scalar::ExactScalar;
use num::Integer;
use std::collections::BTreeMap;

type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Remainder of `p` modulo a monic `m`.
fn rem_monic(p: &[i64], m: &[i64]) -> Poly {
    let mut r = p.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, mi) in m.iter().enumerate() {
            r[shift + i] -= c * mi;
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

/// Exact quotient of `p` by a monic `m`.
fn div_monic(p: &[i64], m: &[i64]) -> Poly {
    let mut r = p.to_vec();
    let dm = m.len() - 1;
    let mut q = vec![0; r.len().saturating_sub(dm)];
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        q[shift] = c;
        for (i, mi) in m.iter().enumerate() {
            r[shift + i] -= c * mi;
        }
        r.pop();
    }
    q
}

pub fn cyclotomic(n: u64) -> Poly {
    let mut p = vec![0; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = div_monic(&p, &cyclotomic(d));
        }
    }
    p
}

/// Whether `sum_j c_j zeta^{r_j}` vanishes for exponents `r_j` in `Q/Z`.
pub fn root_of_unity_sum_vanishes(terms: &[(num::rational::Ratio<i64>, i64)]) -> bool {
    let n = terms.iter().fold(1i64, |acc, (r, _)| acc.lcm(r.denom()));
    let mut p = vec![0i64; n as usize];
    for (r, c) in terms {
        let e = (r.numer() * (n / r.denom())).rem_euclid(n);
        p[e as usize] += c;
    }
    rem_monic(&trim(p), &cyclotomic(n as u64)).is_empty()
}

/// Whether a multiset of eigenvalues sums to zero as a Laurent polynomial over the cyclotomics.
pub fn scalar_sum_vanishes(values: &[ExactScalar]) -> bool {
    let mut groups: BTreeMap<i64, Vec<(num::rational::Ratio<i64>, i64)>> = BTreeMap::new();
    for v in values {
        groups.entry(v.free).or_default().push((v.torsion, 1));
    }
    groups.values().all(|g| root_of_unity_sum_vanishes(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Ratio;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn vanishing() {
        let r = |a, b| Ratio::new(a, b);
        assert!(root_of_unity_sum_vanishes(&[(r(0, 1), 1), (r(1, 2), 1)]));
        assert!(root_of_unity_sum_vanishes(&[(r(0, 1), 1), (r(1, 3), 1), (r(2, 3), 1)]));
        assert!(!root_of_unity_sum_vanishes(&[(r(0, 1), 1), (r(1, 3), 1)]));
        assert!(root_of_unity_sum_vanishes(&[(r(1, 6), 1), (r(5, 6), 1), (r(1, 2), 1)]));
        assert!(!root_of_unity_sum_vanishes(&[(r(0, 1), 1)]));
    }
}
