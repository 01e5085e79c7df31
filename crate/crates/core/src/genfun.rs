//! Rational generating functions `Σ_{a ≥ 0} value(a) t^a` over a template.
//!
//! Each slot contributes the denominator `1 − c₁τ − c₂τ²` (that is
//! `(1 − r₁τ)(1 − r₂τ)`), and each corner `j` contributes
//! `Π Q_{j_i}(t_i)·value(j)` to the numerator with `Q₀ = 1 − c₁τ`, `Q₁ = τ`.
//! For the double root `r = s` this gives `E₀ = 1 − 2sτ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::braid::Template;
use crate::engine::{corners, Evaluator};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::spec::Specialization;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalGF {
    pub template: Template,
    pub spec: String,
    pub c1: LaurentPoly,
    pub c2: LaurentPoly,
    /// Coefficients of `τ⁰, τ¹, τ²` in each slot's denominator.
    pub denominator: [LaurentPoly; 3],
    /// Numerator keyed by the `{0,1}` exponent vector of `t₁…t_k`.
    #[serde(serialize_with = "numerator_terms")]
    pub numerator: BTreeMap<Vec<u8>, LaurentPoly>,
}

fn numerator_terms<S: serde::Serializer>(
    map: &BTreeMap<Vec<u8>, LaurentPoly>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Term<'a> {
        t: &'a [u8],
        coefficient: &'a LaurentPoly,
    }
    ser.collect_seq(map.iter().map(|(t, coefficient)| Term { t, coefficient }))
}

pub fn build_genfun(
    t: &Template,
    spec: &Specialization,
    evaluator: &mut Evaluator<LaurentPoly>,
) -> Result<RationalGF> {
    let (c1, c2) = spec.recurrence_pair()?;
    let k = t.slots();
    let mut numerator: BTreeMap<Vec<u8>, LaurentPoly> = BTreeMap::new();
    let neg_c1 = -&c1;
    for corner in corners(k) {
        let exps = corner.iter().map(|&j| j as i32).collect();
        let value = evaluator.eval(&t.with_exponents(exps).to_word())?;
        if value.is_zero() {
            continue;
        }
        // expand Π Q_{j_i}(t_i): Q₀ = 1 − c₁t, Q₁ = t
        let mut partial: Vec<(Vec<u8>, LaurentPoly)> = vec![(Vec::new(), value)];
        for &j in &corner {
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (mono, coef) in partial {
                if j == 1 {
                    let mut m = mono.clone();
                    m.push(1);
                    next.push((m, coef));
                } else {
                    let mut m0 = mono.clone();
                    m0.push(0);
                    let mut m1 = mono;
                    m1.push(1);
                    next.push((m1, &coef * &neg_c1));
                    next.push((m0, coef));
                }
            }
            partial = next;
        }
        for (mono, coef) in partial {
            let entry = numerator.entry(mono).or_default();
            *entry = &*entry + &coef;
        }
    }
    numerator.retain(|_, v| !v.is_zero());
    Ok(RationalGF {
        template: t.clone(),
        spec: spec.to_string(),
        denominator: [LaurentPoly::one(), -&c1, -&c2],
        c1,
        c2,
        numerator,
    })
}

impl RationalGF {
    /// Power-series coefficients of `1/(1 − c₁τ − c₂τ²)` up to `τ^n`.
    fn inverse_series(&self, n: usize) -> Vec<LaurentPoly> {
        let mut h = vec![LaurentPoly::one()];
        if n >= 1 {
            h.push(self.c1.clone());
        }
        for i in 2..=n {
            let next = &(&self.c1 * &h[i - 1]) + &(&self.c2 * &h[i - 2]);
            h.push(next);
        }
        h
    }

    /// Coefficient of `t₁^{a₁}⋯t_k^{a_k}`.
    pub fn coefficient(&self, a: &[i32]) -> Result<LaurentPoly> {
        if a.len() != self.template.slots() {
            return Err(Error::Contract(format!(
                "expected {} exponents, got {}",
                self.template.slots(),
                a.len()
            )));
        }
        if let Some(bad) = a.iter().find(|&&x| x < 0) {
            return Err(Error::Refused(format!(
                "negative exponent {bad}: only the a ≥ 0 region has a power-series reading"
            )));
        }
        let top = a.iter().copied().max().unwrap_or(0) as usize;
        let h = self.inverse_series(top);
        let mut acc = LaurentPoly::zero();
        for (mono, coef) in &self.numerator {
            if mono.iter().zip(a).any(|(&e, &ai)| e as i32 > ai) {
                continue;
            }
            let term = mono.iter().zip(a).fold(coef.clone(), |acc, (&e, &ai)| {
                &acc * &h[(ai - e as i32) as usize]
            });
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn render_numerator(&self) -> String {
        if self.numerator.is_empty() {
            return "0".into();
        }
        self.numerator
            .iter()
            .map(|(mono, coef)| {
                let vars: Vec<String> = mono
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e == 1)
                    .map(|(i, _)| format!("t{}", i + 1))
                    .collect();
                if vars.is_empty() {
                    format!("({coef})")
                } else {
                    format!("({coef})*{}", vars.join("*"))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn render_denominator(&self) -> String {
        let [_, d1, d2] = &self.denominator;
        (1..=self.template.slots())
            .map(|i| format!("(1 + ({d1})*t{i} + ({d2})*t{i}^2)"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] / [{}]",
            self.render_numerator(),
            self.render_denominator()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GaussianRational;
    use crate::engine::EvalOptions;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    fn gf(spec: &Specialization) -> RationalGF {
        let t = Template::new(2, vec![1], vec![1]).unwrap();
        let mut ev = Evaluator::for_spec(spec, EvalOptions::default()).unwrap();
        build_genfun(&t, spec, &mut ev).unwrap()
    }

    #[test]
    fn alexander_two_strand() {
        let g = gf(&Specialization::alexander());
        assert_eq!(g.denominator, [p("1"), p("-s^-1 + s"), p("-1")]);
        // ∇(◯◯) = 0 leaves only the t term
        assert_eq!(g.numerator.len(), 1);
        assert_eq!(g.numerator[&vec![1]], p("1"));
        assert_eq!(g.coefficient(&[3]).unwrap(), p("s^-2 - 1 + s^2"));
        assert!(g.coefficient(&[-1]).is_err());
    }

    #[test]
    fn degenerate_two_strand() {
        let g = gf(&Specialization::degenerate());
        assert_eq!(g.denominator, [p("1"), p("-2*s"), p("s^2")]);
        // ½(s+s⁻¹)(1 − 2st) + t
        assert_eq!(g.numerator[&vec![0]], p("1/2*s^-1 + 1/2*s"));
        assert_eq!(g.numerator[&vec![1]], p("-s^2"));
        assert_eq!(g.coefficient(&[0]).unwrap(), p("1/2*s^-1 + 1/2*s"));
        for n in 0..=8 {
            let closed = &LaurentPoly::monomial(GaussianRational::ratio(1 - n as i64, 2), n + 1)
                + &LaurentPoly::monomial(GaussianRational::ratio(1 + n as i64, 2), n - 1);
            assert_eq!(g.coefficient(&[n]).unwrap(), closed, "n = {n}");
        }
    }
}
