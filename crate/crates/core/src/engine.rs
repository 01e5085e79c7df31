//! Skein evaluation of closed braids.
//!
//! Every run `x_i^a` with `a ∉ {0, 1}` is rewritten as `A_a·(a = 0) + B_a·(a = 1)`
//! where `(A_a, B_a)` follow the two-term recurrence. Positive square-free
//! words go through the class search until they split, destabilize, expose a
//! square or become distinct-lettered (an unlink).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::braid::{BraidWord, SimplePartition, Template};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Ring, TwoVarLaurent};
use crate::oracles::hecke::{hecke_homfly, HECKE_MAX_STRANDS};
use crate::rewrite::{class_search, split_at_gap, RewriteOutcome, DEFAULT_BUDGET};
use crate::spec::{expansion_coefficient, Specialization};

#[derive(Clone, Debug)]
pub struct EvalOptions {
    /// Distinct words the class search may visit per call.
    pub budget: usize,
    /// Use the Hecke-algebra oracle when the class search gives up.
    pub oracle_fallback: bool,
    /// Upper bound on memo entries; `None` is unbounded.
    pub memo_cap: Option<usize>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            oracle_fallback: true,
            memo_cap: None,
        }
    }
}

impl EvalOptions {
    /// Defaults with the memo cap taken from `HOMFLY_MEMO_CAP` when set.
    pub fn from_env() -> Self {
        let memo_cap = std::env::var("HOMFLY_MEMO_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok());
        Self {
            memo_cap,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvalStats {
    pub memo_hits: usize,
    pub recurrence_steps: usize,
    pub class_searches: usize,
    pub oracle_fallbacks: usize,
}

type Fallback<R> = Box<dyn Fn(&BraidWord) -> Result<R> + Send + Sync>;

/// Memoizing skein evaluator over a coefficient ring `R`.
pub struct Evaluator<R: Ring> {
    c1: R,
    c2: R,
    c2_inv: R,
    delta: R,
    opts: EvalOptions,
    fallback: Fallback<R>,
    memo: HashMap<(usize, Vec<i32>), R>,
    pairs: HashMap<i32, (R, R)>,
    stats: EvalStats,
}

impl Evaluator<TwoVarLaurent> {
    pub fn homfly(opts: EvalOptions) -> Self {
        let l = TwoVarLaurent::l();
        let m = TwoVarLaurent::m();
        let c2 = -(&(&l * &l));
        let c2_inv = c2.unit_inverse().expect("−l² is a unit");
        Self::with_parts(
            -(&(&m * &l)),
            c2,
            c2_inv,
            Specialization::homfly_unlink_factor(),
            opts,
            Box::new(hecke_homfly),
        )
    }
}

impl Evaluator<LaurentPoly> {
    pub fn for_spec(spec: &Specialization, opts: EvalOptions) -> Result<Self> {
        let (c1, c2) = spec.recurrence_pair()?;
        let c2_inv = c2
            .unit_inverse()
            .ok_or_else(|| Error::NotLaurent(format!("c₂ = {c2} is not a unit")))?;
        let delta = spec.unlink_factor_one_var()?;
        let spec = spec.clone();
        Ok(Self::with_parts(
            c1,
            c2,
            c2_inv,
            delta,
            opts,
            Box::new(move |w| spec.specialize(&hecke_homfly(w)?)),
        ))
    }
}

impl<R: Ring> Evaluator<R> {
    fn with_parts(
        c1: R,
        c2: R,
        c2_inv: R,
        delta: R,
        opts: EvalOptions,
        fallback: Fallback<R>,
    ) -> Self {
        Self {
            c1,
            c2,
            c2_inv,
            delta,
            opts,
            fallback,
            memo: HashMap::new(),
            pairs: HashMap::new(),
            stats: EvalStats::default(),
        }
    }

    pub fn stats(&self) -> &EvalStats {
        &self.stats
    }

    pub fn options(&self) -> &EvalOptions {
        &self.opts
    }

    pub fn unlink_factor(&self) -> &R {
        &self.delta
    }

    pub fn clear_memo(&mut self) {
        self.memo.clear();
    }

    /// `δ^e`, the value of the `e + 1` component unlink.
    pub fn unlink(&self, e: usize) -> R {
        let mut acc = R::one();
        for _ in 0..e {
            acc = acc.times(&self.delta);
        }
        acc
    }

    /// `(A_a, B_a)` with `value(a) = A_a·value(0) + B_a·value(1)`.
    pub fn coefficient_pair(&mut self, a: i32) -> (R, R) {
        if let Some(p) = self.pairs.get(&a) {
            return p.clone();
        }
        let pair = match a {
            0 => (R::one(), R::zero()),
            1 => (R::zero(), R::one()),
            a if a >= 2 => {
                let (x1, y1) = self.coefficient_pair(a - 1);
                let (x0, y0) = self.coefficient_pair(a - 2);
                (
                    self.c1.times(&x1).plus(&self.c2.times(&x0)),
                    self.c1.times(&y1).plus(&self.c2.times(&y0)),
                )
            }
            a => {
                let (x2, y2) = self.coefficient_pair(a + 2);
                let (x1, y1) = self.coefficient_pair(a + 1);
                (
                    x2.minus(&self.c1.times(&x1)).times(&self.c2_inv),
                    y2.minus(&self.c1.times(&y1)).times(&self.c2_inv),
                )
            }
        };
        self.pairs.insert(a, pair.clone());
        pair
    }

    fn memo_key(w: &BraidWord) -> (usize, Vec<i32>) {
        let a = BraidWord::min_rotation(w.letters());
        let b = BraidWord::min_rotation(w.flip().letters());
        (w.strands(), a.min(b))
    }

    pub fn eval(&mut self, w: &BraidWord) -> Result<R> {
        let w = w.cyclically_reduced();
        if w.is_empty() {
            return Ok(self.unlink(w.strands() - 1));
        }
        let key = Self::memo_key(&w);
        if let Some(v) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            return Ok(v.clone());
        }
        let v = self.eval_reduced(&w)?;
        if self.opts.memo_cap.is_none_or(|cap| self.memo.len() < cap) {
            self.memo.insert(key, v.clone());
        }
        Ok(v)
    }

    fn eval_split(&mut self, left: &BraidWord, right: &BraidWord) -> Result<R> {
        if self.delta.is_zero() {
            return Ok(R::zero());
        }
        let a = self.eval(left)?;
        if a.is_zero() {
            return Ok(a);
        }
        let b = self.eval(right)?;
        Ok(self.delta.times(&a).times(&b))
    }

    fn eval_reduced(&mut self, w: &BraidWord) -> Result<R> {
        if let Some((left, right, _)) = split_at_gap(w) {
            return self.eval_split(&left, &right);
        }
        if let Some(smaller) = w.destabilize_any() {
            return self.eval(&smaller);
        }
        let runs = w.cyclic_runs();
        if let Some(pos) = runs.iter().position(|r| r.1 < 0 || r.1 > 1) {
            self.stats.recurrence_steps += 1;
            let (ca, cb) = self.coefficient_pair(runs[pos].1);
            let mut acc = R::zero();
            for (coef, exp) in [(ca, 0), (cb, 1)] {
                if coef.is_zero() {
                    continue;
                }
                let mut corner = runs.clone();
                corner[pos].1 = exp;
                let v = self.eval(&BraidWord::from_runs(w.strands(), &corner))?;
                acc = acc.plus(&coef.times(&v));
            }
            return Ok(acc);
        }
        self.stats.class_searches += 1;
        match class_search(w, self.opts.budget)? {
            RewriteOutcome::Splittable { left, right, .. } => self.eval_split(&left, &right),
            RewriteOutcome::Destabilizable { witness } => {
                let smaller = witness.destabilize_any().expect("witness destabilizes");
                self.eval(&smaller)
            }
            RewriteOutcome::SquareFound { witness, .. } => self.eval(&witness),
            RewriteOutcome::DistinctLetters { witness } => {
                Ok(self.unlink(witness.strands() - witness.len() - 1))
            }
            RewriteOutcome::Exhausted { explored, reason } => {
                if !self.opts.oracle_fallback {
                    return Err(Error::Indeterminate(format!(
                        "class search on {w} stopped after {explored} words ({reason:?}) and oracles are disabled"
                    )));
                }
                if w.strands() > HECKE_MAX_STRANDS {
                    return Err(Error::Indeterminate(format!(
                        "class search on {w} stopped after {explored} words and the Hecke oracle is limited to {HECKE_MAX_STRANDS} strands"
                    )));
                }
                log::warn!(
                    "class search on {w} stopped after {explored} words; using the Hecke oracle"
                );
                self.stats.oracle_fallbacks += 1;
                (self.fallback)(w)
            }
        }
    }
}

/// Result of an evaluation: two-variable for HOMFLY, one-variable otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Homfly(TwoVarLaurent),
    Poly(LaurentPoly),
}

impl InvariantValue {
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        match self {
            Self::Poly(p) => Some(p),
            Self::Homfly(_) => None,
        }
    }

    pub fn as_homfly(&self) -> Option<&TwoVarLaurent> {
        match self {
            Self::Homfly(p) => Some(p),
            Self::Poly(_) => None,
        }
    }

    pub fn into_poly(self) -> Result<LaurentPoly> {
        match self {
            Self::Poly(p) => Ok(p),
            Self::Homfly(_) => Err(Error::Unsupported("value is two-variable".into())),
        }
    }

    pub fn into_homfly(self) -> Result<TwoVarLaurent> {
        match self {
            Self::Homfly(p) => Ok(p),
            Self::Poly(_) => Err(Error::Unsupported("value is one-variable".into())),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Homfly(p) => p.fmt(f),
            Self::Poly(p) => p.fmt(f),
        }
    }
}

impl Serialize for InvariantValue {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Homfly(p) => p.serialize(ser),
            Self::Poly(p) => p.serialize(ser),
        }
    }
}

/// Either kind of evaluator, chosen by specialization.
pub enum AnyEvaluator {
    Homfly(Evaluator<TwoVarLaurent>),
    Poly(Evaluator<LaurentPoly>),
}

impl AnyEvaluator {
    pub fn new(spec: &Specialization, opts: EvalOptions) -> Result<Self> {
        if spec.is_homfly() {
            Ok(Self::Homfly(Evaluator::homfly(opts)))
        } else {
            Ok(Self::Poly(Evaluator::for_spec(spec, opts)?))
        }
    }

    pub fn eval(&mut self, w: &BraidWord) -> Result<InvariantValue> {
        match self {
            Self::Homfly(e) => e.eval(w).map(InvariantValue::Homfly),
            Self::Poly(e) => e.eval(w).map(InvariantValue::Poly),
        }
    }

    pub fn stats(&self) -> &EvalStats {
        match self {
            Self::Homfly(e) => e.stats(),
            Self::Poly(e) => e.stats(),
        }
    }
}

/// The invariant of the closure of `w` under `spec`, with a fresh memo.
pub fn eval_invariant(
    w: &BraidWord,
    spec: &Specialization,
    opts: &EvalOptions,
) -> Result<InvariantValue> {
    AnyEvaluator::new(spec, opts.clone())?.eval(w)
}

/// Convenience for one-variable specializations with default options.
pub fn eval_poly(w: &BraidWord, spec: &Specialization) -> Result<LaurentPoly> {
    Evaluator::for_spec(spec, EvalOptions::default())?.eval(w)
}

/// Convenience for HOMFLY with default options.
pub fn eval_homfly(w: &BraidWord) -> Result<TwoVarLaurent> {
    Evaluator::homfly(EvalOptions::default()).eval(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionTerm {
    pub corner: Vec<u8>,
    pub coefficient: LaurentPoly,
    pub value: LaurentPoly,
}

/// All `{0,1}^k` corners in lexicographic order.
pub fn corners(k: usize) -> Vec<Vec<u8>> {
    (0..1usize << k)
        .map(|bits| (0..k).map(|i| ((bits >> (k - 1 - i)) & 1) as u8).collect())
        .collect()
}

/// Per-corner products `Π expansion_coefficient(spec, k_i, j_i)`.
pub fn relative_coefficients(
    spec: &Specialization,
    ks: &[i32],
) -> Result<Vec<(Vec<u8>, LaurentPoly)>> {
    let per_slot: Vec<[LaurentPoly; 2]> = ks
        .iter()
        .map(|&a| {
            Ok([
                expansion_coefficient(spec, a, 0)?,
                expansion_coefficient(spec, a, 1)?,
            ])
        })
        .collect::<Result<_>>()?;
    Ok(corners(ks.len())
        .into_iter()
        .map(|c| {
            let coef = c
                .iter()
                .zip(&per_slot)
                .fold(LaurentPoly::one(), |acc, (&j, pair)| {
                    &acc * &pair[j as usize]
                });
            (c, coef)
        })
        .collect())
}

/// `Σ_j Π coefficient(k_i, j_i) · corners[j]` over all corners.
pub fn relative_expand(
    spec: &Specialization,
    corner_values: &BTreeMap<Vec<u8>, LaurentPoly>,
    ks: &[i32],
) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for (corner, coef) in relative_coefficients(spec, ks)? {
        let v = corner_values
            .get(&corner)
            .ok_or_else(|| Error::MissingCorner(corner.clone()))?;
        acc = &acc + &(&coef * v);
    }
    Ok(acc)
}

/// Expands a template into its `2^k` corner terms, evaluating each corner.
pub fn expand_template(
    t: &Template,
    spec: &Specialization,
    evaluator: &mut Evaluator<LaurentPoly>,
) -> Result<Vec<ExpansionTerm>> {
    let coefs = relative_coefficients(spec, &t.exponents)?;
    coefs
        .into_iter()
        .map(|(corner, coefficient)| {
            let exps = corner.iter().map(|&j| j as i32).collect();
            let value = evaluator.eval(&t.with_exponents(exps).to_word())?;
            Ok(ExpansionTerm {
                corner,
                coefficient,
                value,
            })
        })
        .collect()
}

pub fn expansion_sum(terms: &[ExpansionTerm]) -> LaurentPoly {
    terms.iter().fold(LaurentPoly::zero(), |acc, t| {
        &acc + &(&t.coefficient * &t.value)
    })
}

/// Value of the closure of `β_A`: the unlink with `n − deg β_A` components.
pub fn simple_base_value(a: &SimplePartition, spec: &Specialization) -> Result<InvariantValue> {
    let e = a.components() - 1;
    if spec.is_homfly() {
        let delta = Specialization::homfly_unlink_factor();
        let v = (0..e).fold(TwoVarLaurent::one(), |acc, _| &acc * &delta);
        return Ok(InvariantValue::Homfly(v));
    }
    let delta = spec.unlink_factor_one_var()?;
    let v = (0..e).fold(LaurentPoly::one(), |acc, _| &acc * &delta);
    Ok(InvariantValue::Poly(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn trefoil_homfly() {
        let v = eval_homfly(&w("B2: 1 1 1")).unwrap();
        assert_eq!(v.to_string(), "-2*l^2 + l^2*m^2 - l^4");
    }

    #[test]
    fn worked_values() {
        assert_eq!(
            eval_poly(&w("B3: 1 2 1 2 1"), &Specialization::alexander()).unwrap(),
            p("s^-3 - s^-1 + s - s^3")
        );
        assert_eq!(
            eval_poly(&w("B2: 1 1 1"), &Specialization::degenerate()).unwrap(),
            p("2*s^2 - s^4")
        );
        assert_eq!(
            eval_poly(&w("B2: 1 1 1"), &Specialization::jones()).unwrap(),
            p("s^2 + s^6 - s^8")
        );
        assert_eq!(
            eval_poly(&w("B2: 1 1"), &Specialization::jones()).unwrap(),
            p("-s - s^5")
        );
    }

    #[test]
    fn unknot_and_unlinks() {
        for spec in Specialization::builtins() {
            assert!(eval_poly(&w("B2: 1"), &spec).unwrap().is_one());
            assert!(eval_poly(&w("B1:"), &spec).unwrap().is_one());
            assert!(eval_poly(&w("B3: 1 -2"), &spec).unwrap().is_one());
        }
        assert_eq!(
            eval_poly(&w("B2:"), &Specialization::jones()).unwrap(),
            p("-s^-1 - s")
        );
    }

    #[test]
    fn coefficient_pairs_agree_with_closed_forms() {
        for spec in Specialization::builtins() {
            let mut ev = Evaluator::for_spec(&spec, EvalOptions::default()).unwrap();
            for a in -10..=10 {
                let (x, y) = ev.coefficient_pair(a);
                assert_eq!(
                    x,
                    expansion_coefficient(&spec, a, 0).unwrap(),
                    "{} a={a}",
                    spec.name()
                );
                assert_eq!(
                    y,
                    expansion_coefficient(&spec, a, 1).unwrap(),
                    "{} a={a}",
                    spec.name()
                );
            }
        }
    }

    #[test]
    fn ekt_coefficients() {
        let got = relative_coefficients(&Specialization::degenerate(), &[-5, 6]).unwrap();
        let expect = [p("-30*s"), p("36"), p("25"), p("-30*s^-1")];
        for ((corner, coef), e) in got.iter().zip(expect) {
            assert_eq!(coef, &e, "corner {corner:?}");
        }
    }

    #[test]
    fn relative_expand_reports_missing_corners() {
        let mut c = BTreeMap::new();
        c.insert(vec![0], p("1/2*s^-1 + 1/2*s"));
        let err = relative_expand(&Specialization::degenerate(), &c, &[3]).unwrap_err();
        assert!(matches!(err, Error::MissingCorner(ref k) if k == &vec![1]));
        c.insert(vec![1], p("1"));
        assert_eq!(
            relative_expand(&Specialization::degenerate(), &c, &[3]).unwrap(),
            p("2*s^2 - s^4")
        );
    }

    #[test]
    fn simple_base_values() {
        let a = SimplePartition::new(vec![4, 3, 2, 2], 13).unwrap();
        let delta = Specialization::homfly_unlink_factor();
        let expect = (0..5).fold(TwoVarLaurent::one(), |acc, _| &acc * &delta);
        assert_eq!(
            simple_base_value(&a, &Specialization::homfly()).unwrap(),
            InvariantValue::Homfly(expect)
        );
        let empty = SimplePartition::new(vec![], 3).unwrap();
        assert_eq!(
            simple_base_value(&empty, &Specialization::degenerate()).unwrap(),
            InvariantValue::Poly(p("1/4*s^-2 + 1/2 + 1/4*s^2"))
        );
        let knot = SimplePartition::new(vec![2], 2).unwrap();
        for spec in Specialization::builtins() {
            assert_eq!(
                simple_base_value(&knot, &spec).unwrap(),
                InvariantValue::Poly(LaurentPoly::one())
            );
        }
    }

    #[test]
    fn indeterminate_without_oracle() {
        let opts = EvalOptions {
            budget: 1,
            oracle_fallback: false,
            memo_cap: None,
        };
        // square-free positive word with no gap and no single-use boundary index
        let word = w("B4: 1 2 3 1 2 3 1 2 3");
        let out = eval_invariant(&word, &Specialization::jones(), &opts);
        assert!(matches!(out, Err(Error::Indeterminate(_))), "{out:?}");
    }
}
