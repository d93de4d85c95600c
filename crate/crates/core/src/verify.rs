//! The acceptance criteria as executable checks, with golden tables from `fixtures/`.

use crate::diagorbits::{base_orbit_dim, g2_table, minuscule_classify, OrbitKind};
use crate::nodeset::NodeSet;
use crate::pieces::{binomial, Pieces};
use crate::reps::{char_sum, dim_weyl, exterior_power, Character, WeightSystem};
use crate::rootsys::RootSystem;
use crate::torus::{exponent_matrix, normality_check_a};
use crate::traces::conjecture::{conjecture_scan, weight_list};
use crate::traces::lemmas::lemma_suite;
use crate::traces::scalar::{center_elements, eigenvalue_multiset, ExactScalar, TorusElement};
use crate::weyl::{Weyl, WeylElement};
use crate::Result;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub const I_SEQUENCE: &str = include_str!("../fixtures/i_sequence.json");
pub const SMALL_I: &str = include_str!("../fixtures/small_i.json");
pub const MAXIMAL_COUNTS: &str = include_str!("../fixtures/maximal_counts.json");
pub const G2_TABLE: &str = include_str!("../fixtures/g2_table.json");
pub const A3_CHART: &str = include_str!("../fixtures/a3_lambda2_chart.json");

const CAP: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

fn fixture(s: &str) -> Value {
    serde_json::from_str(s).expect("fixtures are valid JSON")
}

fn a_type(l: usize) -> RootSystem {
    RootSystem::new(&format!("A{l}")).expect("A_l is valid")
}

fn rs(t: &str) -> RootSystem {
    RootSystem::new(t).expect("built-in type")
}

fn result(id: &str, title: &str, passed: bool, detail: String) -> CriterionResult {
    CriterionResult { id: id.into(), title: title.into(), passed, detail }
}

fn guarded(id: &str, title: &str, f: impl FnOnce() -> Result<(bool, String)>) -> CriterionResult {
    match f() {
        Ok((p, d)) => result(id, title, p, d),
        Err(e) => result(id, title, false, format!("error: {e}")),
    }
}

/// `i_G`, `m_G` and the number of maximal pieces for `A_1..A_8`.
#[derive(Clone, Debug)]
pub struct ASeries {
    pub i: Vec<u128>,
    pub m: Vec<usize>,
    pub maximal: Vec<usize>,
}

pub fn a_series(max_rank: usize) -> ASeries {
    let mut s = ASeries { i: Vec::new(), m: Vec::new(), maximal: Vec::new() };
    for l in 1..=max_rank {
        let r = a_type(l);
        let p = Pieces::new(&r);
        let (m, pieces) = p.maximal_pieces();
        s.i.push(p.i_g());
        s.m.push(m);
        s.maximal.push(pieces.len());
    }
    s
}

pub fn criterion_1(series: &ASeries) -> CriterionResult {
    guarded("1", "i-sequence of A_1..A_8", || {
        let expected: Vec<u128> = serde_json::from_value(fixture(I_SEQUENCE)["values"].clone()).expect("fixture");
        let mut scans_agree = true;
        for l in 1..=5 {
            scans_agree &= Pieces::new(&a_type(l)).i_g_full_scan(CAP)? == series.i[l - 1];
        }
        Ok((series.i == expected && scans_agree, format!("{:?}; full scan agrees up to A5: {scans_agree}", series.i)))
    })
}

pub fn criterion_2() -> CriterionResult {
    guarded("2", "i_G of A2, B2, G2, A1xA1", || {
        let expected: BTreeMap<String, u128> = serde_json::from_value(fixture(SMALL_I)).expect("fixture");
        let mut got = BTreeMap::new();
        let mut ok = true;
        for t in expected.keys() {
            let r = rs(t);
            let p = Pieces::new(&r);
            let i = p.i_g();
            ok &= i == p.i_g_full_scan(CAP)?;
            got.insert(t.clone(), i);
        }
        Ok((ok && got == expected, format!("{got:?}")))
    })
}

pub fn criterion_3(series: &ASeries) -> CriterionResult {
    let expected: Vec<usize> = (1..=series.m.len()).map(|l| l * (l + 1) + l / 3).collect();
    result("3", "m_{A_l} = l(l+1) + floor(l/3)", series.m == expected, format!("{:?} vs {expected:?}", series.m))
}

/// One line per group of the maximal-piece census.
pub fn criterion_4(series: &ASeries) -> Vec<CriterionResult> {
    let groups: BTreeMap<String, BTreeMap<String, usize>> =
        serde_json::from_value(fixture(MAXIMAL_COUNTS)).expect("fixture");
    let titles = [
        ("4a", "one maximal piece for A3, A6"),
        ("4b", "l maximal pieces for A4, A7"),
        ("4c", "C(floor(l/3)+3, 2) maximal pieces for A5, A8"),
    ];
    titles
        .iter()
        .map(|(id, title)| {
            let want = &groups[*id];
            let mut ok = true;
            let mut parts = Vec::new();
            for (t, &n) in want {
                let l: usize = t[1..].parse().expect("A<rank>");
                let got = series.maximal[l - 1];
                let formula = match *id {
                    "4a" => 1,
                    "4b" => l,
                    _ => binomial(l / 3 + 3, 2) as usize,
                };
                ok &= got == n && n == formula;
                parts.push(format!("{t}: {got} (expected {n})"));
            }
            result(id, title, ok, parts.join(", "))
        })
        .collect()
}

pub fn criterion_5() -> CriterionResult {
    guarded("5", "G2 double cosets, classification and regular flags", || {
        let fx = fixture(G2_TABLE);
        let g2 = rs("G2");
        let weyl = Weyl::new(&g2);
        let mut cosets = serde_json::Map::new();
        for i in 0..2 {
            let labels: Vec<String> =
                weyl.min_double_coset_reps(NodeSet::single(i), CAP)?.iter().map(|w| weyl.label(w)).collect();
            cosets.insert((i + 1).to_string(), json!(labels));
        }
        let rows: Vec<Value> = g2_table()
            .into_iter()
            .map(|r| json!({"i": r.i, "w": r.w, "kind": r.kind, "regular": r.regular}))
            .collect();
        let got = json!({"double_cosets": cosets, "rows": rows});
        let ok = got == fx;
        Ok((ok, if ok { "8 rows match".into() } else { format!("got {got}") }))
    })
}

/// `dim G - dim(P ∩ w P^- w^{-1})` by enumerating all roots.
pub fn stabilizer_oracle_dim(r: &RootSystem, levi: NodeSet, w: &WeylElement) -> usize {
    let winv = Weyl::new(r).inverse(w);
    let in_levi = |a: &[i64]| RootSystem::support_of_root(a).is_subset(levi);
    let in_p = |a: &[i64]| RootSystem::is_positive(a) || in_levi(a);
    let in_p_minus = |a: &[i64]| !RootSystem::is_positive(a) || in_levi(a);
    let common = r.roots().iter().filter(|a| in_p(a) && in_p_minus(&winv.act_on_root(a))).count();
    r.dim_g() - (r.rank + common)
}

pub fn criterion_6() -> CriterionResult {
    guarded("6", "minuscule dimension formulas vs root count and stabilizer oracle", || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for t in ["A2", "A3", "B2", "G2"] {
            let r = rs(t);
            let weyl = Weyl::new(&r);
            let (g, l) = (r.dim_g(), r.rank);
            for i in 0..l {
                for w in weyl.min_double_coset_reps(NodeSet::single(i), CAP)? {
                    let lw = w.length();
                    let base = base_orbit_dim(&r, NodeSet::single(i), &w)?;
                    let oracle = stabilizer_oracle_dim(&r, NodeSet::single(i), &w);
                    let c = minuscule_classify(&r, i, &w)?;
                    let dims: Vec<usize> = c.families.iter().map(|f| f.dim).collect();
                    let closed = match c.kind {
                        OrbitKind::DiagonalImage => vec![g - l - lw, g - l - lw, g - l - 2 - lw],
                        _ => vec![g - l + 1 - lw, g - l - lw],
                    };
                    let fixed = w.column(i) == r.simple_root(i);
                    let kind_ok = fixed == (c.kind == OrbitKind::DiagonalImage);
                    checked += 1;
                    if base != oracle || base + l + 2 + lw != g || dims != closed || !kind_ok {
                        bad.push(format!("{t} i={} w={}", i + 1, weyl.label(&w)));
                    }
                }
            }
        }
        Ok((bad.is_empty(), format!("{checked} representatives checked; mismatches: {bad:?}")))
    })
}

fn fundamental_char(r: &RootSystem, k: usize) -> Result<Character> {
    if k >= r.rank {
        return Ok(Character::new());
    }
    Ok(WeightSystem::fundamental(r, k)?.character())
}

pub fn criterion_7() -> CriterionResult {
    guarded("7", "exterior power decompositions for G2, C2, C3", || {
        let mut lines = Vec::new();
        let mut ok = true;
        let g2 = rs("G2");
        let v1 = fundamental_char(&g2, 0)?;
        let g = exterior_power(&v1, 2) == char_sum(&[v1.clone(), fundamental_char(&g2, 1)?]);
        lines.push(format!("G2 k=2: {g}"));
        ok &= g;
        for t in ["C2", "C3"] {
            let r = rs(t);
            let v1 = fundamental_char(&r, 0)?;
            for k in 2..=3 {
                let lhs = exterior_power(&v1, k);
                let rhs = char_sum(&[exterior_power(&v1, k - 2), fundamental_char(&r, k - 1)?]);
                lines.push(format!("{t} k={k}: {}", lhs == rhs));
                ok &= lhs == rhs;
            }
        }
        Ok((ok, lines.join(", ")))
    })
}

/// The single value taken by the nontrivial central element on every weight of `V(lambda_k)`.
pub fn center_action(r: &RootSystem, k: usize) -> Result<Option<ExactScalar>> {
    let z = center_elements(r);
    let omega = z.iter().find(|t| **t != TorusElement::identity(r.rank)).expect("nontrivial center");
    let wl = weight_list(&WeightSystem::fundamental(r, k)?);
    let ms = eigenvalue_multiset(&wl, omega);
    Ok(if ms.iter().all(|x| *x == ms[0]) { Some(ms[0]) } else { None })
}

pub fn criterion_8() -> CriterionResult {
    guarded("8", "center acts by the spin sign for B and by (-1)^k for C", || {
        let half = ExactScalar::new(crate::rootsys::Q::new(1, 2), 0);
        let mut ok = true;
        let mut lines = Vec::new();
        for t in ["B2", "B3", "C2", "C3"] {
            let r = rs(t);
            ok &= center_elements(&r).len() == 2;
            for k in 0..r.rank {
                let want = match (t.starts_with('B'), k + 1 == r.rank, (k + 1) % 2 == 1) {
                    (true, true, _) => half,
                    (true, false, _) => ExactScalar::one(),
                    (false, _, true) => half,
                    (false, _, false) => ExactScalar::one(),
                };
                let got = center_action(&r, k)?;
                ok &= got == Some(want);
                lines.push(format!("{t} k={}: {got:?}", k + 1));
            }
        }
        Ok((ok, lines.join(", ")))
    })
}

pub const SCAN_TYPES: [&str; 7] = ["A2", "A3", "B2", "B3", "C2", "C3", "G2"];

pub fn criterion_9(seed: u64, samples: u64) -> CriterionResult {
    guarded("9", "adjoint conjugacy scans", || {
        let mut ok = true;
        let mut lines = Vec::new();
        for t in SCAN_TYPES {
            let rep = conjecture_scan(&rs(t), samples, seed, CAP)?;
            ok &= rep.counterexamples.is_empty() && rep.positives_ok;
            lines.push(format!(
                "{t}: {} counterexamples, positives {}",
                rep.counterexamples.len(),
                if rep.positives_ok { "ok" } else { "missed" }
            ));
        }
        Ok((ok, lines.join(", ")))
    })
}

pub fn criterion_10(seed: u64) -> CriterionResult {
    let rows = lemma_suite(seed);
    let ok = rows.iter().all(|r| r.ok());
    let detail: Vec<String> = rows.iter().map(|r| format!("{}: {}/{}", r.lemma, r.agreed, r.cases)).collect();
    result("10", "trace, Newton and wedge-square lemma suites", ok, detail.join(", "))
}

fn parse_monomial(s: &str, rank: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    for f in s.split('*') {
        let (var, e) = f.split_once('^').unwrap_or((f, "1"));
        let i: usize = var.trim_start_matches('z').parse().expect("z<i>");
        v[i - 1] += e.parse::<i64>().expect("exponent");
    }
    v
}

pub fn criterion_11() -> CriterionResult {
    guarded("11", "A3 lambda_2 chart and normality of type A charts", || {
        let fx = fixture(A3_CHART);
        let r = rs(fx["type"].as_str().expect("type"));
        let k = fx["node"].as_u64().expect("node") as usize - 1;
        let mut want: Vec<Vec<i64>> = fx["monomials"]
            .as_array()
            .expect("list")
            .iter()
            .map(|m| parse_monomial(m.as_str().expect("string"), r.rank))
            .collect();
        want.sort();
        let em = exponent_matrix(&r, &r.fundamental_weight(k))?;
        let mut got: Vec<Vec<i64>> = em.rows.iter().filter(|row| row.iter().any(|&x| x != 0)).cloned().collect();
        got.sort();
        let chart_ok = got == want;
        let mut normal = true;
        let mut count = 0;
        for l in 1..=4 {
            let a = a_type(l);
            for k in 0..l {
                normal &= normality_check_a(&a, k, 8)?.ok();
                count += 1;
            }
        }
        Ok((chart_ok && normal, format!("chart matches: {chart_ok}; {count} normality checks pass: {normal}")))
    })
}

fn support_lemma(types: &[&str]) -> Result<bool> {
    for t in types {
        let r = rs(t);
        let weyl = Weyl::new(&r);
        for w in weyl.enumerate_group(CAP)? {
            let s = weyl.support(&w);
            for i in 0..r.rank {
                if s.contains(i) != !weyl.fixes_weight(&w, &r.fundamental_weight(i)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn root_strings_and_invariance(types: &[&str]) -> Result<(bool, bool)> {
    let (mut strings, mut invariant) = (true, true);
    for t in types {
        let r = rs(t);
        let weyl = Weyl::new(&r);
        let mut highest: Vec<Vec<i64>> = (0..r.rank).map(|k| r.fundamental_weight(k)).collect();
        highest.push(r.root_to_weight(r.highest_root()));
        for lam in highest {
            let ws = WeightSystem::new(&r, &lam)?;
            for e in &ws.entries {
                let mu = &e.weight;
                for a in &r.positive_roots {
                    let aw = r.root_to_weight(a);
                    let step = |n: i64| -> Vec<i64> { mu.iter().zip(&aw).map(|(m, x)| m + n * x).collect() };
                    let down = (1..).take_while(|&n| ws.contains(&step(-n))).count() as i64;
                    let up = (1..).take_while(|&n| ws.contains(&step(n))).count() as i64;
                    strings &= down - up == r.coroot_pairing(mu, a);
                }
                for i in 0..r.rank {
                    let s = weyl.generator(i)?;
                    invariant &= ws.mult(&weyl.act_on_weight(&s, mu)) == e.mult;
                }
            }
        }
    }
    Ok((strings, invariant))
}

pub const RANK4_TYPES: [&str; 20] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2", "A1xA1", "A2xA1", "A1xA1xA1",
    "B2xA1", "A3xA1", "A2xA2", "G2xA2",
];

fn freudenthal_vs_weyl() -> Result<bool> {
    for t in RANK4_TYPES {
        let r = rs(t);
        for k in 0..r.rank {
            let ws = WeightSystem::fundamental(&r, k)?;
            if ws.dim as u128 != dim_weyl(&r, &r.fundamental_weight(k))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn b_full_equals_a(types: &[&str]) -> Result<bool> {
    for t in types {
        let r = rs(t);
        let p = Pieces::new(&r);
        for piece in p.all_pieces(None, CAP)? {
            if p.in_b(piece.j, r.full_set(), &piece.w)? != p.in_a(piece.j, &piece.w)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn semistable_count(types: &[&str]) -> bool {
    types.iter().all(|t| {
        let r = rs(t);
        let ps = Pieces::new(&r).semistable_pieces();
        ps.len() == 1 << r.rank && ps.iter().all(|p| p.w.is_identity())
    })
}

fn closure_monotone(types: &[&str]) -> Result<bool> {
    for t in types {
        let r = rs(t);
        let p = Pieces::new(&r);
        let all = p.all_pieces(None, CAP)?;
        for a in &all {
            for b in &all {
                if a != b && p.closure_leq(a, b, CAP)? && a.dim >= b.dim {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn criterion_12() -> CriterionResult {
    guarded("12", "property suites", || {
        let small = ["A2", "A3", "B2", "B3", "C3", "G2", "A2xA1", "D4"];
        let support = support_lemma(&small)?;
        let (strings, invariant) = root_strings_and_invariance(&["A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"])?;
        let dims = freudenthal_vs_weyl()?;
        let b_eq_a = b_full_equals_a(&["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"])?;
        let semi = semistable_count(&small);
        let mono = closure_monotone(&["A2", "B2", "G2"])?;
        let ok = support && strings && invariant && dims && b_eq_a && semi && mono;
        Ok((
            ok,
            format!(
                "support {support}, root strings {strings}, W-invariance {invariant}, Freudenthal=Weyl {dims}, \
                 B_J^I=A_J {b_eq_a}, semistable 2^l {semi}, closure monotone {mono}"
            ),
        ))
    })
}

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: u64 = 500;

/// Every criterion, in order.
pub fn run_all(seed: u64, samples: u64) -> Vec<CriterionResult> {
    let series = a_series(8);
    let mut out = vec![criterion_1(&series), criterion_2(), criterion_3(&series)];
    out.extend(criterion_4(&series));
    out.extend([
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(seed, samples),
        criterion_10(seed),
        criterion_11(),
        criterion_12(),
    ]);
    out
}

pub fn format_line(c: &CriterionResult) -> String {
    format!("[{}] {:>3}  {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.title, c.detail)
}
