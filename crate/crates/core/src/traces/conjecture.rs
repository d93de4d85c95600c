//! Randomized check of adjoint conjugacy up to the center.

use super::cyclotomic::scalar_sum_vanishes;
use super::scalar::{center_elements, eigenvalue_multiset, ExactScalar, TorusElement};
use crate::error::Result;
use crate::reps::WeightSystem;
use crate::rootsys::{Family, RootSystem, Q};
use crate::weyl::{Weyl, WeylElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Weight list with multiplicities, as consumed by `eigenvalue_multiset`.
pub type WeightList = Vec<(Vec<i64>, u64)>;

pub fn weight_list(ws: &WeightSystem) -> WeightList {
    ws.character().into_iter().collect()
}

/// The scalar `c` with `multiset(t1) = c * multiset(t2)`, if any.
pub fn conjugate_up_to_constant(weights: &[(Vec<i64>, u64)], t1: &TorusElement, t2: &TorusElement) -> Option<ExactScalar> {
    let m1 = eigenvalue_multiset(weights, t1);
    let m2 = eigenvalue_multiset(weights, t2);
    if m1.len() != m2.len() {
        return None;
    }
    let Some(x0) = m1.first() else {
        return Some(ExactScalar::one());
    };
    let mut tried: Vec<ExactScalar> = Vec::new();
    for y in &m2 {
        let c = x0.div(*y);
        if tried.contains(&c) {
            continue;
        }
        tried.push(c);
        let mut shifted: Vec<ExactScalar> = m2.iter().map(|v| v.mul(c)).collect();
        shifted.sort();
        if shifted == m1 {
            return Some(c);
        }
    }
    None
}

fn is_central(rs: &RootSystem, t: &TorusElement) -> bool {
    t.simple_root_values(rs).iter().all(|v| *v == ExactScalar::one())
}

/// `t2 = z (w . t1)` for some `w` in `W` and central `z`.
pub fn weyl_conjugate_up_to_center(rs: &RootSystem, group: &[WeylElement], t1: &TorusElement, t2: &TorusElement) -> bool {
    let weyl = Weyl::new(rs);
    group.iter().any(|w| is_central(rs, &t2.div(&t1.act_by_inverse(&weyl, w))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    Positive,
    Random,
    TorsionTwist,
    Inverse,
}

impl SampleKind {
    fn of(i: u64) -> Self {
        match i % 4 {
            0 => SampleKind::Positive,
            1 => SampleKind::Random,
            2 => SampleKind::TorsionTwist,
            _ => SampleKind::Inverse,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleOutcome {
    pub index: u64,
    pub kind: SampleKind,
    pub t1: TorusElement,
    pub t2: TorusElement,
    pub per_rep_scalars: Vec<Option<ExactScalar>>,
    pub weyl_related: bool,
    pub character_vanishes: bool,
}

impl SampleOutcome {
    pub fn all_reps_conjugate(&self) -> bool {
        self.per_rep_scalars.iter().all(|c| c.is_some())
    }

    pub fn is_counterexample(&self) -> bool {
        self.all_reps_conjugate() != self.weyl_related
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub t1: TorusElement,
    pub t2: TorusElement,
    pub per_rep_scalars: Vec<Option<ExactScalar>>,
    pub weyl_related: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub samples: u64,
    pub seed: u64,
    pub counterexamples: Vec<Counterexample>,
    pub positives_ok: bool,
    pub positives: u64,
    pub related_pairs: u64,
    pub unrelated_pairs: u64,
    /// Samples where some fundamental character vanishes at `t1`.
    pub vanishing_character_samples: u64,
    /// True for types outside A, B, C, G2.
    pub exploratory: bool,
}

/// Everything needed to evaluate samples for one type.
pub struct ScanContext<'a> {
    pub rs: &'a RootSystem,
    pub group: Vec<WeylElement>,
    pub center: Vec<TorusElement>,
    pub fundamentals: Vec<WeightList>,
}

impl<'a> ScanContext<'a> {
    pub fn new(rs: &'a RootSystem, cap: u128) -> Result<Self> {
        let group = Weyl::new(rs).enumerate_group(cap)?;
        let fundamentals = (0..rs.rank)
            .map(|k| WeightSystem::with_cap(rs, &rs.fundamental_weight(k), cap).map(|ws| weight_list(&ws)))
            .collect::<Result<_>>()?;
        Ok(ScanContext { rs, group, center: center_elements(rs), fundamentals })
    }

    /// Uniform torus element with torsion denominators `|Z| r`, `r` in 1..=6, and free parts in [-5, 5].
    pub fn random_element(&self, rng: &mut impl Rng) -> TorusElement {
        let z = self.center.len() as i64;
        let a = (0..self.rs.rank)
            .map(|_| {
                let d = z * rng.gen_range(1..=6);
                Q::new(rng.gen_range(0..d), d)
            })
            .collect();
        let b = (0..self.rs.rank).map(|_| rng.gen_range(-5..=5)).collect();
        TorusElement::new(a, b)
    }

    fn random_weyl(&self, rng: &mut impl Rng) -> &WeylElement {
        &self.group[rng.gen_range(0..self.group.len())]
    }

    pub fn sample_pair(&self, seed: u64, i: u64) -> (SampleKind, TorusElement, TorusElement) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i);
        let weyl = Weyl::new(self.rs);
        let kind = SampleKind::of(i);
        let t1 = self.random_element(&mut rng);
        let t2 = match kind {
            SampleKind::Positive => {
                let w = self.random_weyl(&mut rng);
                let z = &self.center[rng.gen_range(0..self.center.len())];
                z.mul(&t1.act(&weyl, w))
            }
            SampleKind::Random => self.random_element(&mut rng),
            SampleKind::TorsionTwist => {
                let w = self.random_weyl(&mut rng);
                let mut tau = self.random_element(&mut rng);
                tau.b.iter_mut().for_each(|x| *x = 0);
                tau.mul(&t1.act(&weyl, w))
            }
            SampleKind::Inverse => t1.inverse(),
        };
        (kind, t1, t2)
    }

    pub fn evaluate(&self, index: u64, kind: SampleKind, t1: TorusElement, t2: TorusElement) -> SampleOutcome {
        let per_rep_scalars = self.fundamentals.iter().map(|wl| conjugate_up_to_constant(wl, &t1, &t2)).collect();
        let weyl_related = weyl_conjugate_up_to_center(self.rs, &self.group, &t1, &t2);
        let character_vanishes =
            self.fundamentals.iter().any(|wl| scalar_sum_vanishes(&eigenvalue_multiset(wl, &t1)));
        SampleOutcome { index, kind, t1, t2, per_rep_scalars, weyl_related, character_vanishes }
    }
}

pub fn is_proven_type(rs: &RootSystem) -> bool {
    rs.components.iter().all(|c| matches!(c.family, Family::A | Family::B | Family::C | Family::G))
}

/// Per-sample outcomes in sample order.
pub fn scan_samples(ctx: &ScanContext, samples: u64, seed: u64) -> Vec<SampleOutcome> {
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let (kind, t1, t2) = ctx.sample_pair(seed, i);
            ctx.evaluate(i, kind, t1, t2)
        })
        .collect()
}

pub fn conjecture_scan(rs: &RootSystem, samples: u64, seed: u64, cap: u128) -> Result<ScanReport> {
    let ctx = ScanContext::new(rs, cap)?;
    let outcomes = scan_samples(&ctx, samples, seed);
    let positives: Vec<&SampleOutcome> = outcomes.iter().filter(|o| o.kind == SampleKind::Positive).collect();
    Ok(ScanReport {
        type_name: rs.name(),
        samples,
        seed,
        counterexamples: outcomes
            .iter()
            .filter(|o| o.is_counterexample())
            .map(|o| Counterexample {
                t1: o.t1.clone(),
                t2: o.t2.clone(),
                per_rep_scalars: o.per_rep_scalars.clone(),
                weyl_related: o.weyl_related,
            })
            .collect(),
        positives_ok: positives.iter().all(|o| o.weyl_related && o.all_reps_conjugate()),
        positives: positives.len() as u64,
        related_pairs: outcomes.iter().filter(|o| o.weyl_related).count() as u64,
        unrelated_pairs: outcomes.iter().filter(|o| !o.weyl_related).count() as u64,
        vanishing_character_samples: outcomes.iter().filter(|o| o.character_vanishes).count() as u64,
        exploratory: !is_proven_type(rs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_shift_mismatch() {
        let rs = RootSystem::new("A1").unwrap();
        let wl = weight_list(&WeightSystem::fundamental(&rs, 0).unwrap());
        let t1 = TorusElement::new(vec![Q::from_integer(0)], vec![1]);
        let t3 = TorusElement::new(vec![Q::from_integer(0)], vec![3]);
        assert_eq!(conjugate_up_to_constant(&wl, &t1, &t1), Some(ExactScalar::one()));
        assert_eq!(conjugate_up_to_constant(&wl, &t1, &t3), None);
    }

    #[test]
    fn b2_center_twist() {
        let rs = RootSystem::new("B2").unwrap();
        let ctx = ScanContext::new(&rs, 1_000_000).unwrap();
        let weyl = Weyl::new(&rs);
        let t1 = TorusElement::new(vec![Q::new(1, 3), Q::new(1, 4)], vec![2, -1]);
        let omega = ctx.center.iter().find(|z| **z != TorusElement::identity(2)).unwrap();
        let t2 = omega.mul(&t1.act(&weyl, &weyl.generator(0).unwrap()));
        assert!(weyl_conjugate_up_to_center(&rs, &ctx.group, &t1, &t1));
        assert!(weyl_conjugate_up_to_center(&rs, &ctx.group, &t1, &t2));
    }

    #[test]
    fn a2_unrelated() {
        let rs = RootSystem::new("A2").unwrap();
        let ctx = ScanContext::new(&rs, 1_000_000).unwrap();
        let t1 = TorusElement::new(vec![Q::new(0, 1), Q::new(0, 1)], vec![1, 2]);
        let t2 = TorusElement::new(vec![Q::new(0, 1), Q::new(0, 1)], vec![3, -1]);
        assert!(!weyl_conjugate_up_to_center(&rs, &ctx.group, &t1, &t2));
    }

    #[test]
    fn small_scan() {
        let rs = RootSystem::new("B2").unwrap();
        let r = conjecture_scan(&rs, 40, 42, 1_000_000).unwrap();
        assert!(r.counterexamples.is_empty());
        assert!(r.positives_ok);
    }
}
