//! Power sums, elementary symmetric functions and the trace lemmas.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

pub type R = BigRational;

pub fn rat(n: i64, d: i64) -> R {
    R::new(BigInt::from(n), BigInt::from(d))
}

pub fn power_sum(x: &[R], k: u32) -> R {
    x.iter().fold(R::zero(), |s, v| s + num::pow(v.clone(), k as usize))
}

/// All elementary symmetric functions `e_0..e_n` from the expansion of `prod (1 + x_i t)`.
pub fn elem_syms(x: &[R]) -> Vec<R> {
    let mut e = vec![R::zero(); x.len() + 1];
    e[0] = R::one();
    for (n, v) in x.iter().enumerate() {
        for k in (1..=n + 1).rev() {
            let add = &e[k - 1] * v;
            e[k] += add;
        }
    }
    e
}

pub fn elem_sym(x: &[R], k: usize) -> R {
    if k > x.len() {
        return R::zero();
    }
    elem_syms(x)[k].clone()
}

/// `k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i` for `1 <= k <= n`.
pub fn newton_check(x: &[R]) -> bool {
    let e = elem_syms(x);
    let p: Vec<R> = (0..=x.len()).map(|k| power_sum(x, k as u32)).collect();
    (1..=x.len()).all(|k| {
        let mut s = R::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        s == R::from_integer(BigInt::from(k)) * &e[k]
    })
}

/// Pairwise products `x_i x_j`, `i < j`.
pub fn wedge2(x: &[R]) -> Vec<R> {
    let mut out = Vec::with_capacity(x.len() * x.len().saturating_sub(1) / 2);
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            out.push(&x[i] * &x[j]);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Lambda2Verdict {
    /// A hypothesis is false; the lemma says nothing.
    HypothesisFails(String),
    /// Hypotheses, both proof steps and the conclusion hold.
    Holds,
    StepFails(String),
    ConclusionFails(u32),
}

/// Checks `p_odd(a) = p_odd(b) = 0` and `e_k(wedge2 a) = e_k(wedge2 b)` for all `k`, then the
/// two proof steps and `p_k(a) = p_k(b)` for `k <= n`.
pub fn lambda2_lemma_check(a: &[R], b: &[R]) -> Lambda2Verdict {
    if a.len() != b.len() {
        return Lambda2Verdict::HypothesisFails("lengths differ".into());
    }
    let n = a.len() as u32;
    for k in (1..=n).step_by(2) {
        if !power_sum(a, k).is_zero() || !power_sum(b, k).is_zero() {
            return Lambda2Verdict::HypothesisFails(format!("p_{k} nonzero"));
        }
    }
    let (wa, wb) = (wedge2(a), wedge2(b));
    if elem_syms(&wa) != elem_syms(&wb) {
        return Lambda2Verdict::HypothesisFails("e_k of wedge squares differ".into());
    }
    for x in [a, b] {
        let p1 = power_sum(x, 1);
        if power_sum(x, 2) != &p1 * &p1 - rat(2, 1) * elem_sym(&wedge2(x), 1) {
            return Lambda2Verdict::StepFails("p_2 = p_1^2 - 2 e_1(wedge2)".into());
        }
        let w = wedge2(x);
        for k in (2..=2 * n).step_by(2) {
            let h = power_sum(x, k / 2);
            if power_sum(x, k) != &h * &h - rat(2, 1) * power_sum(&w, k / 2) {
                return Lambda2Verdict::StepFails(format!("p_{k} = p_{}^2 - 2 p_{}(wedge2)", k / 2, k / 2));
            }
        }
    }
    match (1..=n).find(|&k| power_sum(a, k) != power_sum(b, k)) {
        Some(k) => Lambda2Verdict::ConclusionFails(k),
        None => Lambda2Verdict::Holds,
    }
}

/// The variant of the squaring step with coefficient 1 on `p_{k/2}(wedge2)`.
pub fn squaring_step_unit_coefficient(x: &[R], k: u32) -> bool {
    let h = power_sum(x, k / 2);
    power_sum(x, k) == &h * &h - power_sum(&wedge2(x), k / 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TraceVerdict {
    NotConjugate { first_failing_e: usize },
    Conjugate { scalar: String, multiset_match: bool },
}

fn sorted(mut v: Vec<R>) -> Vec<R> {
    v.sort();
    v
}

/// Diagonal matrices `A1`, `A2` with `tr(A1^e) tr(A2)^e = tr(A1)^e tr(A2^e)` for `e = 1..m`.
pub fn trace_identity_lemma_check(a1: &[R], a2: &[R]) -> Result<TraceVerdict> {
    if a1.iter().all(|x| x.is_zero()) || a2.iter().all(|x| x.is_zero()) {
        return Err(Error::Precondition("zero matrix".into()));
    }
    if a1.len() != a2.len() {
        return Err(Error::Precondition("matrices of different size".into()));
    }
    let t1 = power_sum(a1, 1);
    if t1.is_zero() {
        return Err(Error::Precondition("tr(A1) = 0".into()));
    }
    let t2 = power_sum(a2, 1);
    for e in 1..=a1.len() {
        let lhs = power_sum(a1, e as u32) * num::pow(t2.clone(), e);
        let rhs = num::pow(t1.clone(), e) * power_sum(a2, e as u32);
        if lhs != rhs {
            return Ok(TraceVerdict::NotConjugate { first_failing_e: e });
        }
    }
    if t2.is_zero() {
        return Ok(TraceVerdict::NotConjugate { first_failing_e: 1 });
    }
    let t = &t1 / &t2;
    let scaled = sorted(a2.iter().map(|x| x * &t).collect());
    Ok(TraceVerdict::Conjugate { scalar: t.to_string(), multiset_match: scaled == sorted(a1.to_vec()) })
}

/// Brute force: is there a permutation `s` and a scalar `t` with `A1_i = t A2_s(i)`?
pub fn brute_force_scalar_match(a1: &[R], a2: &[R]) -> bool {
    if a1.len() != a2.len() {
        return false;
    }
    let candidates: Vec<R> = a1
        .iter()
        .flat_map(|x| a2.iter().filter(|y| !y.is_zero()).map(move |y| x / y))
        .filter(|t| !t.is_zero())
        .collect();
    candidates.iter().any(|t| sorted(a2.iter().map(|y| y * t).collect()) == sorted(a1.to_vec()))
}

fn lcm(a: usize, b: usize) -> usize {
    a / num::integer::gcd(a, b) * b
}

/// `tr(A^j)^{L/j} = tr(A^k)^{L/k}` for all `1 <= j < k <= dim`.
pub fn central_fiber_condition(a: &[R]) -> bool {
    let n = a.len();
    let p: Vec<R> = (0..=n).map(|k| power_sum(a, k as u32)).collect();
    (1..=n).all(|j| {
        (j + 1..=n).all(|k| {
            let l = lcm(j, k);
            num::pow(p[j].clone(), l / j) == num::pow(p[k].clone(), l / k)
        })
    })
}

pub fn nonzero_count(a: &[R]) -> usize {
    a.iter().filter(|x| !x.is_zero()).count()
}

pub fn abs_max(a: &[R]) -> R {
    a.iter().map(|x| x.abs()).max().unwrap_or_else(R::zero)
}
