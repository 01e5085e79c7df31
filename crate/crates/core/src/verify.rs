//! Named verification checks and the versioned manifest runner.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::braid::{BraidWord, SimplePartition, Template};
use crate::engine::{
    expand_template, expansion_sum, relative_coefficients, simple_base_value, EvalOptions,
    Evaluator, InvariantValue,
};
use crate::error::{Error, Result};
use crate::families::{
    classify_specializations, d_gamma, d_gamma_has_stated_shape, d_gamma_leading_pattern,
    d_gamma_table, d_two_strand, degree_laws_check, gamma_word, homfly_gamma_recurrence_check,
    independence_probe, nabla_gamma_closed, nabla_two_strand, rational_exponent_pairs, support,
    two_strand_degree_check, CheckReport, DegreeLawParams,
};
use crate::genfun::build_genfun;
use crate::laurent::{LaurentPoly, TwoVarLaurent};
use crate::oracles::{burau_alexander, equal_up_to_unit, hecke_homfly, kauffman_jones};
use crate::rewrite::{is_simple, SimpleVerdict};
use crate::spec::Specialization;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub const CHECK_NAMES: &[&str] = &[
    "reference-tables",
    "closed-forms",
    "d-gamma-shape",
    "simple-braids",
    "oracle-agreement",
    "invariance",
    "skein-axiom",
    "gamma-recurrences",
    "degree-laws",
    "classifier",
    "genfun",
    "ekt-coefficients",
    "d-properties",
    "independence",
];

fn lp(text: &str) -> LaurentPoly {
    LaurentPoly::parse(text).expect("literal polynomial")
}

fn param_u64(params: &Value, key: &str, default: u64) -> u64 {
    params.get(key).and_then(Value::as_u64).unwrap_or(default)
}

/// Runs one named check. `params` may override its defaults (`seed`, `count`, …).
pub fn run_check(name: &str, params: &Value) -> Result<CheckReport> {
    let seed = param_u64(params, "seed", DEFAULT_SEED);
    match name {
        "reference-tables" => reference_tables(),
        "closed-forms" => closed_forms(param_u64(params, "max_j", 30) as usize),
        "d-gamma-shape" => d_gamma_shape(7, param_u64(params, "max_j", 31) as usize),
        "simple-braids" => simple_braids(
            param_u64(params, "max_total", 7) as usize,
            param_u64(params, "max_strands", 9) as usize,
        ),
        "oracle-agreement" => oracle_agreement(
            param_u64(params, "max_len", 4) as usize,
            4,
            params
                .get("dedupe")
                .and_then(Value::as_bool)
                .unwrap_or(false),
        ),
        "invariance" => invariance(seed, param_u64(params, "count", 1000) as usize),
        "skein-axiom" => skein_axiom(seed, param_u64(params, "count", 1000) as usize),
        "gamma-recurrences" => {
            homfly_gamma_recurrence_check(param_u64(params, "k_max", 4) as usize)
        }
        "degree-laws" => degree_laws_check(&DegreeLawParams {
            seed,
            samples: param_u64(params, "samples", 200) as usize,
            ..DegreeLawParams::default()
        }),
        "classifier" => classifier(
            param_u64(params, "range", 9) as i32,
            param_u64(params, "max_range", 15) as i32,
        ),
        "genfun" => genfun(param_u64(params, "max_a", 6) as i32),
        "ekt-coefficients" => ekt_coefficients(),
        "d-properties" => d_properties(seed, param_u64(params, "count", 200) as usize),
        "independence" => independence(),
        other => Err(Error::Parse(format!("unknown check `{other}`"))),
    }
}

fn eval_one(spec: &Specialization) -> Result<Evaluator<LaurentPoly>> {
    Evaluator::for_spec(spec, EvalOptions::default())
}

/// `∇(γ_j)` for `j ≤ 5` and `D(γ_j)` for `j ≤ 6` against the engine.
pub fn reference_tables() -> Result<CheckReport> {
    let mut report = CheckReport::new("reference-tables");
    let nabla_table = [
        "0",
        "0",
        "1",
        "s^-1 - s",
        "s^-2 - 1 + s^2",
        "s^-3 - s^-1 + s - s^3",
    ];
    let mut nabla = eval_one(&Specialization::alexander())?;
    for (j, text) in nabla_table.iter().enumerate() {
        let got = nabla.eval(&gamma_word(j))?;
        report.assert(got == lp(text), || {
            format!("∇(γ_{j}) = {got}, table {text}")
        });
    }
    let mut d = eval_one(&Specialization::degenerate())?;
    for j in 0..=6 {
        let want = d_gamma_table(j).expect("table entry");
        let got = d.eval(&gamma_word(j))?;
        report.assert(got == want, || format!("D(γ_{j}) = {got}, table {want}"));
    }
    report.note("D(γ_6) is compared as (−s⁸ − 6s⁶ + 11s⁴)/4");
    Ok(report)
}

/// Two-strand closed forms, residue-class forms and the `D(γ_j)` recurrences.
pub fn closed_forms(max_j: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("closed-forms");
    let mut nabla = eval_one(&Specialization::alexander())?;
    let mut d = eval_one(&Specialization::degenerate())?;
    for a in -10..=10 {
        let w = BraidWord::new(
            2,
            if a >= 0 {
                vec![1; a as usize]
            } else {
                vec![-1; (-a) as usize]
            },
        )?;
        let got = nabla.eval(&w)?;
        report.assert(got == nabla_two_strand(a), || format!("∇₂(x₁^{a}) = {got}"));
        let got = d.eval(&w)?;
        report.assert(got == d_two_strand(a), || format!("D₂(x₁^{a}) = {got}"));
    }
    for j in 4..=max_j {
        let got = nabla.eval(&gamma_word(j))?;
        let closed = nabla_gamma_closed(j)?;
        report.assert(got == closed, || {
            format!("∇(γ_{j}) = {got}, closed form {closed}")
        });
    }
    for j in 0..=max_j {
        let got = d.eval(&gamma_word(j))?;
        let rec = d_gamma(j);
        report.assert(got == rec, || format!("D(γ_{j}) = {got}, recurrence {rec}"));
    }
    for j in 7..=max_j.max(31) {
        let got = d.eval(&gamma_word(j))?;
        let a = d_gamma_leading_pattern(j);
        let lead = crate::coeff::GaussianRational::ratio(-a, 4);
        report.assert(
            got.degree() == Some(j as i32 + 2) && got.coeff(j as i32 + 2) == lead,
            || {
                format!(
                    "D(γ_{j}) leads with {:?} at s^{:?}, pattern gives −{a}/4 at s^{}",
                    got.leading_coeff(),
                    got.degree(),
                    j + 2
                )
            },
        );
    }
    Ok(report)
}

/// The three-term shape `¼(−a s^{j+2} + b s^{j+1} + c s^j)` for `D(γ_j)`.
pub fn d_gamma_shape(lo: usize, hi: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("d-gamma-shape");
    let mut d = eval_one(&Specialization::degenerate())?;
    for j in lo..=hi {
        let got = d.eval(&gamma_word(j))?;
        let a = d_gamma_leading_pattern(j);
        report.assert(d_gamma_has_stated_shape(j, &got, a), || {
            format!(
                "D(γ_{j}) = {got} has exponents {:?}, not within {}..={}",
                support(&got),
                j,
                j + 2
            )
        });
    }
    Ok(report)
}

/// Simple-braid base values and recognition for `s_r ≤ max_total`, `n ≤ max_strands`.
pub fn simple_braids(max_total: usize, max_strands: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("simple-braids");
    let mut homfly = Evaluator::homfly(EvalOptions::default());
    let mut evs: Vec<(Specialization, Evaluator<LaurentPoly>)> = Specialization::builtins()
        .into_iter()
        .map(|s| Ok((s.clone(), eval_one(&s)?)))
        .collect::<Result<_>>()?;
    for n in 1..=max_strands {
        for a in SimplePartition::enumerate(n, max_total) {
            let w = a.canonical_word();
            let e = a.components() as i32 - 1;
            let expect = simple_base_value(&a, &Specialization::homfly())?;
            let got = InvariantValue::Homfly(homfly.eval(&w)?);
            report.assert(got == expect, || {
                format!("HOMFLY of β{a} on {n} strands = {got}")
            });
            for (spec, ev) in evs.iter_mut() {
                let got = ev.eval(&w)?;
                let corollary = match spec.name() {
                    "alexander" => {
                        if e == 0 {
                            LaurentPoly::one()
                        } else {
                            LaurentPoly::zero()
                        }
                    }
                    "jones" => lp("-s^-1 - s").pow(e).expect("power"),
                    _ => lp("1/2*s^-1 + 1/2*s").pow(e).expect("power"),
                };
                report.assert(got == corollary, || {
                    format!(
                        "{} of β{a} on {n} strands = {got}, expected {corollary}",
                        spec.name()
                    )
                });
            }
            let verdict = is_simple(&w, 10_000)?;
            report.assert(verdict == SimpleVerdict::Simple(a.clone()), || {
                format!("is_simple(β{a}) = {verdict:?}")
            });
        }
    }
    Ok(report)
}

/// Every word of length `≤ max_len` on `B₂…B_{max_strands}`; with `dedupe`,
/// one word per rotation/flip class of its cyclic reduction.
pub fn corpus(max_len: usize, max_strands: usize, dedupe: bool) -> Vec<BraidWord> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in 2..=max_strands {
        let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
        let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for letters in &layer {
                let w = BraidWord::new(n, letters.clone()).expect("valid letters");
                let r = w.cyclically_reduced();
                let a = BraidWord::min_rotation(r.letters());
                let b = BraidWord::min_rotation(r.flip().letters());
                if !dedupe || seen.insert((n, a.min(b))) {
                    out.push(w);
                }
                if letters.len() < max_len {
                    for &e in &alphabet {
                        let mut l = letters.clone();
                        l.push(e);
                        next.push(l);
                    }
                }
            }
            layer = next;
        }
    }
    out
}

/// A few named links beyond the exhaustive corpus.
pub fn named_examples() -> Vec<(&'static str, BraidWord)> {
    [
        ("trefoil", "B2: 1 1 1"),
        ("figure-eight", "B3: 1 -2 1 -2"),
        ("cinquefoil", "B2: 1 1 1 1 1"),
        ("three-twist", "B3: 1 1 1 2 -1 2"),
        ("borromean", "B3: 1 -2 1 -2 1 -2"),
        ("whitehead", "B3: 1 1 -2 1 1 -2"),
        ("torus-3-4", "B3: 1 2 1 2 1 2 1 2"),
        ("torus-3-5", "B3: 1 2 1 2 1 2 1 2 1 2"),
        ("granny", "B3: 1 1 1 2 2 2"),
        ("square", "B3: 1 1 1 -2 -2 -2"),
        ("stevedore", "B4: 1 1 2 -1 -3 2 -3"),
        ("full-twist-4", "B4: 1 2 3 1 2 1 1 2 3 1 2 1"),
        ("pretzel-ish", "B4: 1 2 3 1 2 3 1 2 3"),
        ("five-strand", "B5: 1 -2 3 -4 1 -2 3 -4"),
    ]
    .into_iter()
    .map(|(name, text)| (name, text.parse().expect("named word")))
    .collect()
}

struct OracleLane {
    homfly: Evaluator<TwoVarLaurent>,
    specs: Vec<(Specialization, Evaluator<LaurentPoly>)>,
}

impl OracleLane {
    fn new() -> Self {
        Self {
            homfly: Evaluator::homfly(EvalOptions::default()),
            specs: Specialization::builtins()
                .into_iter()
                .map(|s| {
                    let ev = Evaluator::for_spec(&s, EvalOptions::default()).expect("built-in");
                    (s, ev)
                })
                .collect(),
        }
    }

    fn check(&mut self, w: &BraidWord) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        let reference = hecke_homfly(w)?;
        let engine = self.homfly.eval(w)?;
        if engine != reference {
            bad.push(format!("{w}: HOMFLY engine {engine} vs Hecke {reference}"));
        }
        for (spec, ev) in self.specs.iter_mut() {
            let got = ev.eval(w)?;
            let via_hecke = spec.specialize(&reference)?;
            if got != via_hecke {
                bad.push(format!(
                    "{w}: {} engine {got} vs specialized Hecke {via_hecke}",
                    spec.name()
                ));
            }
            match spec.name() {
                "jones" => {
                    let k = kauffman_jones(w)?;
                    if k != got {
                        bad.push(format!("{w}: Jones engine {got} vs bracket {k}"));
                    }
                }
                "alexander" => {
                    let b = burau_alexander(w);
                    if equal_up_to_unit(&b.representative, &got).is_none() {
                        bad.push(format!("{w}: Conway {got} vs Burau {b}"));
                    }
                }
                _ => {}
            }
        }
        Ok(bad)
    }
}

/// Engine against the Hecke, bracket and Burau oracles over the corpus.
pub fn oracle_agreement(max_len: usize, max_strands: usize, dedupe: bool) -> Result<CheckReport> {
    let mut words = corpus(max_len, max_strands, dedupe);
    words.extend(named_examples().into_iter().map(|(_, w)| w));
    words.extend((0..=12).map(gamma_word));
    let results: Vec<Result<Vec<String>>> = words
        .par_iter()
        .map_init(OracleLane::new, |lane, w| lane.check(w))
        .collect();
    let mut report = CheckReport::new("oracle-agreement");
    for r in results {
        let bad = r?;
        report.assert(bad.is_empty(), || bad.join("; "));
    }
    report.note(format!("{} words checked", words.len()));
    Ok(report)
}

pub fn random_word(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::trivial(strands);
    }
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("valid letters")
}

/// HOMFLY plus the three one-variable evaluators.
struct AllInvariants {
    homfly: Evaluator<TwoVarLaurent>,
    specs: Vec<Evaluator<LaurentPoly>>,
}

impl AllInvariants {
    fn new() -> Result<Self> {
        Ok(Self {
            homfly: Evaluator::homfly(EvalOptions::default()),
            specs: Specialization::builtins()
                .iter()
                .map(eval_one)
                .collect::<Result<_>>()?,
        })
    }

    fn values(&mut self, w: &BraidWord) -> Result<(TwoVarLaurent, Vec<LaurentPoly>)> {
        let h = self.homfly.eval(w)?;
        let v = self
            .specs
            .iter_mut()
            .map(|e| e.eval(w))
            .collect::<Result<_>>()?;
        Ok((h, v))
    }
}

/// The five move kinds used by the invariance suite.
pub fn random_move(rng: &mut ChaCha8Rng, kind: usize) -> (BraidWord, BraidWord, &'static str) {
    let n = rng.gen_range(2..=4);
    let len = rng.gen_range(0..=6);
    let w = random_word(rng, n, len);
    let l = w.letters().to_vec();
    let pos = rng.gen_range(0..=l.len());
    let splice = |mid: &[i32]| -> Vec<i32> {
        let mut v = l[..pos].to_vec();
        v.extend_from_slice(mid);
        v.extend_from_slice(&l[pos..]);
        v
    };
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    match kind % 5 {
        0 => {
            let mut r = l.clone();
            if !r.is_empty() {
                let k = rng.gen_range(0..r.len());
                r.rotate_left(k);
            }
            (w.clone(), BraidWord::from_parts(n, r), "rotation")
        }
        1 if n >= 4 => {
            let i = rng.gen_range(1..=n as i32 - 3);
            let j = rng.gen_range(i + 2..n as i32);
            let (a, b) = (sign * i, if rng.gen_bool(0.5) { j } else { -j });
            (
                BraidWord::from_parts(n, splice(&[a, b])),
                BraidWord::from_parts(n, splice(&[b, a])),
                "far-commutation",
            )
        }
        1 | 2 if n >= 3 => {
            let i = rng.gen_range(1..=n as i32 - 2);
            let (a, b) = (sign * i, sign * (i + 1));
            (
                BraidWord::from_parts(n, splice(&[a, b, a])),
                BraidWord::from_parts(n, splice(&[b, a, b])),
                "braid-relation",
            )
        }
        1..=3 => {
            let i = rng.gen_range(1..n as i32) * sign;
            (
                w.clone(),
                BraidWord::from_parts(n, splice(&[i, -i])),
                "free-insertion",
            )
        }
        _ => (w.clone(), w.stabilize(sign > 0), "stabilization"),
    }
}

pub fn invariance(seed: u64, count: usize) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inv = AllInvariants::new()?;
    let mut report = CheckReport::new("invariance");
    for k in 0..count {
        let (a, b, kind) = random_move(&mut rng, k);
        let (ha, va) = inv.values(&a)?;
        let (hb, vb) = inv.values(&b)?;
        report.assert(ha == hb && va == vb, || {
            format!("{kind}: {a} and {b} differ")
        });
    }
    Ok(report)
}

/// `value(a+2) = c₁·value(a+1) + c₂·value(a)` at a random slot of a random word.
pub fn skein_axiom(seed: u64, count: usize) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inv = AllInvariants::new()?;
    let pairs: Vec<(LaurentPoly, LaurentPoly)> = Specialization::builtins()
        .iter()
        .map(|s| s.recurrence_pair())
        .collect::<Result<_>>()?;
    let (l, m) = (TwoVarLaurent::l(), TwoVarLaurent::m());
    let (h1, h2) = (-(&(&m * &l)), -(&(&l * &l)));
    let mut report = CheckReport::new("skein-axiom");
    for _ in 0..count {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=5);
        let base = random_word(&mut rng, n, len);
        let i = rng.gen_range(1..n as i32);
        let pos = rng.gen_range(0..=base.len());
        let a = rng.gen_range(-3..=1);
        let word = |e: i32| {
            let mut v = base.letters()[..pos].to_vec();
            v.extend(std::iter::repeat_n(
                if e < 0 { -i } else { i },
                e.unsigned_abs() as usize,
            ));
            v.extend_from_slice(&base.letters()[pos..]);
            BraidWord::from_parts(n, v)
        };
        let (p0, v0) = inv.values(&word(a))?;
        let (p1, v1) = inv.values(&word(a + 1))?;
        let (p2, v2) = inv.values(&word(a + 2))?;
        report.assert(p2 == &(&h1 * &p1) + &(&h2 * &p0), || {
            format!("HOMFLY at {} slot {pos} a={a}", base)
        });
        for (k, (c1, c2)) in pairs.iter().enumerate() {
            report.assert(v2[k] == &(c1 * &v1[k]) + &(c2 * &v0[k]), || {
                format!("spec {k} at {} slot {pos} a={a}", base)
            });
        }
    }
    Ok(report)
}

pub fn classifier(range: i32, max_range: i32) -> Result<CheckReport> {
    let mut report = CheckReport::new("classifier");
    let expect = vec![(1, -1, 0), (1, 3, 2), (1, 1, 1)];
    for r in range..=max_range {
        let got: Vec<_> = classify_specializations(r)
            .iter()
            .map(|c| (c.n, c.k, c.q))
            .collect();
        report.assert(got == expect, || format!("range {r}: {got:?}"));
    }
    report.assert(!rational_exponent_pairs(range).contains(&(1, 5)), || {
        "(1, 5) accepted".into()
    });
    for (cand, spec) in classify_specializations(range)
        .iter()
        .zip(Specialization::builtins())
    {
        let got = cand.to_specialization()?;
        report.assert(got.substitution() == spec.substitution(), || {
            format!("{cand} does not reproduce {}", spec.name())
        });
    }
    Ok(report)
}

/// Templates with `k ≤ 2` slots on at most three strands.
pub fn small_templates() -> Vec<Template> {
    let mut out = Vec::new();
    for n in 2..=3usize {
        let idx: Vec<usize> = (1..n).collect();
        for &i in &idx {
            out.push(Template::new(n, vec![i], vec![0]).expect("valid"));
            for &j in &idx {
                out.push(Template::new(n, vec![i, j], vec![0, 0]).expect("valid"));
            }
        }
    }
    out
}

pub fn genfun(max_a: i32) -> Result<CheckReport> {
    let mut report = CheckReport::new("genfun");
    for spec in [Specialization::alexander(), Specialization::degenerate()] {
        let mut ev = eval_one(&spec)?;
        let (c1, c2) = spec.recurrence_pair()?;
        for t in small_templates() {
            let g = build_genfun(&t, &spec, &mut ev)?;
            let points: Vec<Vec<i32>> = if t.slots() == 1 {
                (0..=max_a).map(|a| vec![a]).collect()
            } else {
                (0..=max_a)
                    .flat_map(|a| (0..=max_a).map(move |b| vec![a, b]))
                    .collect()
            };
            let mut stream = BTreeMap::new();
            for a in points {
                let coef = g.coefficient(&a)?;
                let direct = ev.eval(&t.with_exponents(a.clone()).to_word())?;
                report.assert(coef == direct, || {
                    format!(
                        "{} {:?} at {a:?}: series {coef}, engine {direct}",
                        spec.name(),
                        t.indices
                    )
                });
                stream.insert(a, coef);
            }
            for (a, v) in &stream {
                if a[0] < 2 {
                    continue;
                }
                let mut a1 = a.clone();
                a1[0] -= 1;
                let mut a2 = a.clone();
                a2[0] -= 2;
                let rhs = &(&c1 * &stream[&a1]) + &(&c2 * &stream[&a2]);
                report.assert(*v == rhs, || format!("stream recurrence fails at {a:?}"));
            }
        }
    }
    let t = Template::new(2, vec![1], vec![0])?;
    let spec = Specialization::degenerate();
    let g = build_genfun(&t, &spec, &mut eval_one(&spec)?)?;
    for a in 0..=12 {
        report.assert(g.coefficient(&[a])? == d_two_strand(a), || {
            format!("degenerate series with E₀ = 1 − 2sτ misses D₂(x₁^{a})")
        });
    }
    Ok(report)
}

pub fn ekt_coefficients() -> Result<CheckReport> {
    let mut report = CheckReport::new("ekt-coefficients");
    let got = relative_coefficients(&Specialization::degenerate(), &[-5, 6])?;
    let expect = ["-30*s", "36", "25", "-30*s^-1"];
    for ((corner, coef), want) in got.iter().zip(expect) {
        report.assert(*coef == lp(want), || {
            format!("corner {corner:?}: {coef}, expected {want}")
        });
    }
    Ok(report)
}

/// Distant union: `a` followed by `b` on disjoint strands.
pub fn distant_union(a: &BraidWord, b: &BraidWord) -> BraidWord {
    let shift = a.strands() as i32;
    let mut letters = a.letters().to_vec();
    letters.extend(b.letters().iter().map(|&e| e.signum() * (e.abs() + shift)));
    BraidWord::from_parts(a.strands() + b.strands(), letters)
}

pub fn d_properties(seed: u64, count: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("d-properties");
    let mut d = eval_one(&Specialization::degenerate())?;
    let one = crate::coeff::GaussianRational::from_int(1);
    let factor = lp("1/2*s^-1 + 1/2*s");
    for w in corpus(4, 3, true)
        .into_iter()
        .chain(named_examples().into_iter().map(|(_, w)| w))
    {
        let v = d.eval(&w)?;
        report.assert(v.eval_at_one() == one, || {
            format!("D({w})(1) = {}", v.eval_at_one())
        });
        report.assert(v.is_dyadic() && v.is_real(), || {
            format!("D({w}) = {v} has a non-dyadic coefficient")
        });
        let mirror = d.eval(&w.mirror())?;
        report.assert(mirror == v.bar(), || {
            format!("D(mirror {w}) = {mirror}, bar gives {}", v.bar())
        });
        let rev = d.eval(&w.reverse())?;
        report.assert(rev == v, || format!("D(reverse {w}) = {rev}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let (na, la) = (rng.gen_range(1..=3), rng.gen_range(0..=4));
        let a = random_word(&mut rng, na, la);
        let (nb, lb) = (rng.gen_range(1..=3), rng.gen_range(0..=4));
        let b = random_word(&mut rng, nb, lb);
        let (da, db) = (d.eval(&a)?, d.eval(&b)?);
        let sum = d.eval(&a.concat(&b))?;
        report.assert(sum == &da * &db, || format!("D({a} # {b}) = {sum}"));
        let union = d.eval(&distant_union(&a, &b))?;
        report.assert(union == &(&factor * &da) * &db, || {
            format!("D({a} ⊔ {b}) = {union}")
        });
        // γ = α·x_n^k·β on n+1 strands
        let n = a.strands().max(2);
        let (l1, l2) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let alpha = random_word(&mut rng, n, l1);
        let beta = random_word(&mut rng, n, l2);
        let k: i32 = rng.gen_range(-4..=4);
        let mut letters = alpha.letters().to_vec();
        letters.extend(std::iter::repeat_n(
            if k < 0 { -(n as i32) } else { n as i32 },
            k.unsigned_abs() as usize,
        ));
        letters.extend_from_slice(beta.letters());
        let gamma = BraidWord::from_parts(n + 1, letters);
        let mut ab = alpha.letters().to_vec();
        ab.extend_from_slice(beta.letters());
        let lhs = d.eval(&gamma)?;
        let rhs = &d.eval(&BraidWord::from_parts(n, ab))? * &d_two_strand(k);
        report.assert(lhs == rhs, || {
            format!("D({gamma}) = {lhs}, factorization gives {rhs}")
        });
    }
    Ok(report)
}

pub fn independence() -> Result<CheckReport> {
    let mut report = CheckReport::new("independence");
    for (p, n) in [(2, 2), (3, 2)] {
        let r = independence_probe(p, n, &EvalOptions::default())?;
        report.absorb(r.check);
    }
    report.absorb(two_strand_degree_check(2, 12)?);
    Ok(report)
}

/// Consistency of the expansion and recurrence paths on small templates.
pub fn expansion_paths(max_abs: i32) -> Result<CheckReport> {
    let mut report = CheckReport::new("expansion-paths");
    for spec in Specialization::builtins() {
        let mut ev = eval_one(&spec)?;
        for t in small_templates() {
            let k = t.slots() as u32;
            let span = (2 * max_abs + 1) as usize;
            for code in 0..span.pow(k) {
                let exps: Vec<i32> = (0..k)
                    .map(|i| (code / span.pow(i) % span) as i32 - max_abs)
                    .collect();
                let t = t.with_exponents(exps.clone());
                let terms = expand_template(&t, &spec, &mut ev)?;
                let direct = ev.eval(&t.to_word())?;
                report.assert(expansion_sum(&terms) == direct, || {
                    format!("{} {:?}{exps:?}", spec.name(), t.indices)
                });
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Manifest {
    pub version: String,
    pub entries: Vec<ManifestEntry>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ManifestEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<String>,
    /// Expected value in the polynomial JSON schema.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Value>,
    /// Expected value as polynomial text.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect_text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub params: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CheckReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub version: String,
    pub passed: bool,
    pub entries: Vec<EntryReport>,
}

impl Manifest {
    pub fn from_json(text: &str) -> Result<Self> {
        let m: Manifest = serde_json::from_str(text)?;
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.version != "v1" {
            return Err(Error::Parse(format!(
                "unsupported manifest version `{}`",
                self.version
            )));
        }
        let mut ids = HashSet::new();
        for e in &self.entries {
            if !ids.insert(&e.id) {
                return Err(Error::Parse(format!("duplicate entry id `{}`", e.id)));
            }
            match (&e.check, &e.word) {
                (Some(c), None) => {
                    if !CHECK_NAMES.contains(&c.as_str()) {
                        return Err(Error::Parse(format!(
                            "entry `{}`: unknown check `{c}`",
                            e.id
                        )));
                    }
                }
                (None, Some(w)) => {
                    w.parse::<BraidWord>()?;
                    e.spec
                        .as_deref()
                        .unwrap_or("homfly")
                        .parse::<Specialization>()?;
                    if e.expect.is_none() && e.expect_text.is_none() {
                        return Err(Error::Parse(format!(
                            "entry `{}` has no expected value",
                            e.id
                        )));
                    }
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "entry `{}` needs exactly one of `word` or `check`",
                        e.id
                    )))
                }
            }
        }
        Ok(())
    }
}

fn expected_value(e: &ManifestEntry, spec: &Specialization) -> Result<InvariantValue> {
    if spec.is_homfly() {
        let v = match (&e.expect, &e.expect_text) {
            (Some(js), _) => serde_json::from_value::<TwoVarLaurent>(js.clone())?,
            (None, Some(t)) => TwoVarLaurent::parse(t)?,
            (None, None) => unreachable!("validated"),
        };
        Ok(InvariantValue::Homfly(v))
    } else {
        let v = match (&e.expect, &e.expect_text) {
            (Some(js), _) => serde_json::from_value::<LaurentPoly>(js.clone())?,
            (None, Some(t)) => LaurentPoly::parse(t)?,
            (None, None) => unreachable!("validated"),
        };
        Ok(InvariantValue::Poly(v))
    }
}

fn run_entry(e: &ManifestEntry, seed: Option<u64>, opts: &EvalOptions) -> EntryReport {
    let outcome = (|| -> Result<(bool, Option<String>, Option<CheckReport>)> {
        if let Some(check) = &e.check {
            let mut params = if e.params.is_null() {
                Value::Object(Default::default())
            } else {
                e.params.clone()
            };
            if let (Some(seed), Some(obj)) = (seed, params.as_object_mut()) {
                obj.entry("seed").or_insert(Value::from(seed));
            }
            let report = run_check(check, &params)?;
            return Ok((report.ok(), None, Some(report)));
        }
        let word: BraidWord = e.word.as_deref().expect("validated").parse()?;
        let spec: Specialization = e.spec.as_deref().unwrap_or("homfly").parse()?;
        let want = expected_value(e, &spec)?;
        let got = crate::engine::eval_invariant(&word, &spec, opts)?;
        let ok = got == want;
        Ok((
            ok,
            (!ok).then(|| format!("got {got}, expected {want}")),
            None,
        ))
    })();
    match outcome {
        Ok((ok, detail, report)) => EntryReport {
            id: e.id.clone(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
            report,
        },
        Err(err) => EntryReport {
            id: e.id.clone(),
            status: Status::Error,
            detail: Some(err.to_string()),
            report: None,
        },
    }
}

/// Runs all entries in parallel; the report is sorted by entry id.
pub fn run_manifest(m: &Manifest, seed: Option<u64>, opts: &EvalOptions) -> VerifyReport {
    let mut entries: Vec<EntryReport> = m
        .entries
        .par_iter()
        .map(|e| run_entry(e, seed, opts))
        .collect();
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    VerifyReport {
        version: m.version.clone(),
        passed: entries.iter().all(|e| e.status == Status::Pass),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes_are_stable() {
        let c = corpus(2, 3, true);
        assert!(c.iter().all(|w| w.len() <= 2));
        // dedup keeps one representative per canonical closure word
        let again = corpus(2, 3, true);
        assert!(corpus(2, 3, false).len() > c.len());
        assert_eq!(c, again);
    }

    #[test]
    fn manifest_validation() {
        let ok = r#"{"version":"v1","entries":[
            {"id":"a","word":"B2: 1 1 1","spec":"alexander","expect_text":"s^-2 - 1 + s^2"},
            {"id":"b","check":"ekt-coefficients"}]}"#;
        let m = Manifest::from_json(ok).unwrap();
        let r = run_manifest(&m, None, &EvalOptions::default());
        assert!(r.passed, "{r:?}");
        let bad = r#"{"version":"v1","entries":[{"id":"x","check":"nope"}]}"#;
        assert!(Manifest::from_json(bad).is_err());
        let bad = r#"{"version":"v2","entries":[]}"#;
        assert!(Manifest::from_json(bad).is_err());
    }

    #[test]
    fn small_checks_pass() {
        assert!(ekt_coefficients().unwrap().ok());
        let r = skein_axiom(1, 40).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        let r = invariance(2, 40).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        let r = oracle_agreement(3, 3, true).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
    }
}
