//! Randomized suites for the trace and symmetric-function lemmas.

use super::symfun::{
    brute_force_scalar_match, central_fiber_condition, lambda2_lemma_check, newton_check, nonzero_count, rat,
    trace_identity_lemma_check, Lambda2Verdict, TraceVerdict, R,
};
use num::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub lemma: String,
    pub cases: usize,
    pub agreed: usize,
    pub first_failure: Option<String>,
}

impl LemmaRow {
    pub fn ok(&self) -> bool {
        self.cases == self.agreed
    }
}

struct Tally {
    row: LemmaRow,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally { row: LemmaRow { lemma: name.into(), cases: 0, agreed: 0, first_failure: None } }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.row.cases += 1;
        if ok {
            self.row.agreed += 1;
        } else if self.row.first_failure.is_none() {
            self.row.first_failure = Some(case());
        }
    }
}

fn random_rational(rng: &mut impl Rng) -> R {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn random_nonzero(rng: &mut impl Rng) -> R {
    loop {
        let x = random_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<R> {
    (0..n).map(|_| random_rational(rng)).collect()
}

fn show(v: &[R]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", s.join(", "))
}

/// A pair of diagonal matrices meeting the lemma's preconditions; a third are
/// scalar multiples up to permutation, a third are perturbed multiples.
fn trace_pair(rng: &mut impl Rng, i: usize) -> (Vec<R>, Vec<R>) {
    loop {
        let n = rng.gen_range(1..=6);
        let a2 = random_vector(rng, n);
        let a1 = match i % 3 {
            0 => {
                let t = random_nonzero(rng);
                let mut v: Vec<R> = a2.iter().map(|x| x * &t).collect();
                v.shuffle(rng);
                v
            }
            1 => {
                let t = random_nonzero(rng);
                let mut v: Vec<R> = a2.iter().map(|x| x * &t).collect();
                let k = rng.gen_range(0..n);
                v[k] += random_rational(rng);
                v.shuffle(rng);
                v
            }
            _ => random_vector(rng, n),
        };
        let nonzero = |v: &[R]| v.iter().any(|x| !x.is_zero());
        if nonzero(&a1) && nonzero(&a2) && !a1.iter().fold(R::zero(), |s, x| s + x).is_zero() {
            return (a1, a2);
        }
    }
}

pub fn trace_lemma_suite(seed: u64, cases: usize) -> LemmaRow {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("trace identity vs permutation matching");
    for i in 0..cases {
        let (a1, a2) = trace_pair(&mut rng, i);
        let verdict = trace_identity_lemma_check(&a1, &a2);
        let ok = match &verdict {
            Ok(TraceVerdict::Conjugate { multiset_match, .. }) => *multiset_match && brute_force_scalar_match(&a1, &a2),
            Ok(TraceVerdict::NotConjugate { .. }) => !brute_force_scalar_match(&a1, &a2),
            Err(_) => false,
        };
        tally.record(ok, || format!("A1={} A2={} -> {verdict:?}", show(&a1), show(&a2)));
    }
    tally.row
}

pub fn newton_suite(seed: u64, cases: usize) -> LemmaRow {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("Newton identities");
    for _ in 0..cases {
        let n = rng.gen_range(1..=6);
        let x = random_vector(&mut rng, n);
        tally.record(newton_check(&x), || show(&x));
    }
    tally.row
}

/// Pairs satisfying the hypotheses: `a` is closed under negation, `b` a shuffle of `a`.
pub fn lambda2_pair(rng: &mut impl Rng) -> (Vec<R>, Vec<R>) {
    let pairs = rng.gen_range(1..=3);
    let mut a = Vec::new();
    for _ in 0..pairs {
        let x = random_rational(rng);
        a.push(-x.clone());
        a.push(x);
    }
    if rng.gen_bool(0.3) {
        a.push(R::zero());
    }
    a.shuffle(rng);
    let mut b = a.clone();
    b.shuffle(rng);
    (a, b)
}

pub fn lambda2_suite(seed: u64, cases: usize) -> LemmaRow {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("wedge-square power sums");
    for _ in 0..cases {
        let (a, b) = lambda2_pair(&mut rng);
        let v = lambda2_lemma_check(&a, &b);
        tally.record(v == Lambda2Verdict::Holds, || format!("a={} b={} -> {v:?}", show(&a), show(&b)));
    }
    tally.row
}

/// Random pairs: the checker must never report a failed step or conclusion.
pub fn lambda2_random_suite(seed: u64, cases: usize) -> LemmaRow {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("wedge-square lemma on unconstrained pairs");
    for _ in 0..cases {
        let n = rng.gen_range(1..=6);
        let (a, b) = (random_vector(&mut rng, n), random_vector(&mut rng, n));
        let v = lambda2_lemma_check(&a, &b);
        let ok = matches!(v, Lambda2Verdict::Holds | Lambda2Verdict::HypothesisFails(_));
        tally.record(ok, || format!("a={} b={} -> {v:?}", show(&a), show(&b)));
    }
    tally.row
}

/// Diagonal matrices of size at most 4 with at most two nonzero entries.
pub fn central_fiber_suite(seed: u64, cases: usize) -> LemmaRow {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new("central fiber: trace powers force one nonzero eigenvalue");
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let mut a = vec![R::zero(); n];
        for _ in 0..rng.gen_range(0..=2usize.min(n)) {
            let k = rng.gen_range(0..n);
            a[k] = random_nonzero(&mut rng);
        }
        let ok = central_fiber_condition(&a) == (nonzero_count(&a) <= 1);
        tally.record(ok, || show(&a));
    }
    tally.row
}

pub fn lemma_suite(seed: u64) -> Vec<LemmaRow> {
    vec![
        trace_lemma_suite(seed, 1000),
        newton_suite(seed.wrapping_add(1), 1000),
        lambda2_suite(seed.wrapping_add(2), 500),
        lambda2_random_suite(seed.wrapping_add(3), 500),
        central_fiber_suite(seed.wrapping_add(4), 500),
    ]
}
