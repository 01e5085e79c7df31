//! Specializations `l = l(s), m = m(s)` of the HOMFLY polynomial.

use std::fmt;
use std::str::FromStr;

use crate::coeff::GaussianRational;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, TwoVarLaurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecKind {
    Homfly,
    Alexander,
    Jones,
    Degenerate,
    Custom,
}

/// A named substitution together with the roots of `r² + m·l·r + l² = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    kind: SpecKind,
    subst: Option<(LaurentPoly, LaurentPoly)>,
    roots: Option<(LaurentPoly, LaurentPoly)>,
}

/// `(c₁, c₂)` in `P(a+2) = c₁·P(a+1) + c₂·P(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecurrenceCoefficients {
    TwoVar(TwoVarLaurent, TwoVarLaurent),
    OneVar(LaurentPoly, LaurentPoly),
}

fn lp(text: &str) -> LaurentPoly {
    LaurentPoly::parse(text).expect("built-in polynomial")
}

impl Specialization {
    pub fn homfly() -> Self {
        Self {
            kind: SpecKind::Homfly,
            subst: None,
            roots: None,
        }
    }

    pub fn alexander() -> Self {
        Self {
            kind: SpecKind::Alexander,
            subst: Some((lp("i"), lp("i*s^-1 - i*s"))),
            roots: Some((lp("-s"), lp("s^-1"))),
        }
    }

    pub fn jones() -> Self {
        Self {
            kind: SpecKind::Jones,
            subst: Some((lp("i*s^2"), lp("i*s - i*s^-1"))),
            roots: Some((lp("-s"), lp("s^3"))),
        }
    }

    pub fn degenerate() -> Self {
        Self {
            kind: SpecKind::Degenerate,
            subst: Some((lp("s"), lp("-2"))),
            roots: Some((lp("s"), lp("s"))),
        }
    }

    /// Builds the specialization with characteristic roots `r₁, r₂` and
    /// `l` satisfying `l² = r₁r₂`; then `m = −(r₁ + r₂)/l`.
    pub fn custom(r1: LaurentPoly, r2: LaurentPoly, l: LaurentPoly) -> Result<Self> {
        for (name, v) in [("r1", &r1), ("r2", &r2), ("l", &l)] {
            if v.as_monomial().is_none() {
                return Err(Error::NotLaurent(format!(
                    "{name} = {v} is not a unit monomial"
                )));
            }
        }
        if &l * &l != &r1 * &r2 {
            return Err(Error::Contract(format!(
                "l² = {} differs from r1·r2",
                &l * &l
            )));
        }
        let m = -(&(&r1 + &r2) * &l.unit_inverse().expect("unit"));
        if m.is_zero() {
            return Err(Error::NotLaurent("r1 = −r2 makes m vanish".into()));
        }
        let spec = Self {
            kind: SpecKind::Custom,
            subst: Some((l, m)),
            roots: Some((r1, r2)),
        };
        spec.unlink_factor_one_var()?;
        Ok(spec)
    }

    pub fn builtins() -> [Self; 3] {
        [Self::alexander(), Self::jones(), Self::degenerate()]
    }

    pub fn kind(&self) -> SpecKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            SpecKind::Homfly => "homfly",
            SpecKind::Alexander => "alexander",
            SpecKind::Jones => "jones",
            SpecKind::Degenerate => "degenerate",
            SpecKind::Custom => "custom",
        }
    }

    pub fn is_homfly(&self) -> bool {
        self.kind == SpecKind::Homfly
    }

    /// `(l(s), m(s))`; `None` for HOMFLY itself.
    pub fn substitution(&self) -> Option<(&LaurentPoly, &LaurentPoly)> {
        self.subst.as_ref().map(|(l, m)| (l, m))
    }

    pub fn roots(&self) -> Option<(&LaurentPoly, &LaurentPoly)> {
        self.roots.as_ref().map(|(a, b)| (a, b))
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(&self.roots, Some((a, b)) if a == b)
    }

    pub fn recurrence_coefficients(&self) -> RecurrenceCoefficients {
        match &self.subst {
            None => {
                let l = TwoVarLaurent::l();
                let m = TwoVarLaurent::m();
                RecurrenceCoefficients::TwoVar(-(&(&m * &l)), -(&(&l * &l)))
            }
            Some((l, m)) => RecurrenceCoefficients::OneVar(-(&(m * l)), -(&(l * l))),
        }
    }

    /// One-variable `(c₁, c₂)`; errors for HOMFLY.
    pub fn recurrence_pair(&self) -> Result<(LaurentPoly, LaurentPoly)> {
        match self.recurrence_coefficients() {
            RecurrenceCoefficients::OneVar(c1, c2) => Ok((c1, c2)),
            RecurrenceCoefficients::TwoVar(..) => Err(Error::Unsupported(
                "HOMFLY has no one-variable recurrence".into(),
            )),
        }
    }

    /// HOMFLY value of the two-component unlink, `−(l + l⁻¹)/m`.
    pub fn homfly_unlink_factor() -> TwoVarLaurent {
        let l = TwoVarLaurent::l();
        let l_inv = l.unit_inverse().expect("unit");
        let m_inv = TwoVarLaurent::m().unit_inverse().expect("unit");
        -(&(&(&l + &l_inv) * &m_inv))
    }

    /// The unlink factor `δ` after substitution.
    pub fn unlink_factor_one_var(&self) -> Result<LaurentPoly> {
        let (l, m) = self
            .substitution()
            .ok_or_else(|| Error::Unsupported("HOMFLY is two-variable".into()))?;
        let num = -(l + &l.unit_inverse().expect("unit"));
        num.div_exact(m)
            .ok_or_else(|| Error::NotLaurent(format!("−(l + l⁻¹)/m is not Laurent for m = {m}")))
    }

    /// Applies the substitution to a HOMFLY value.
    pub fn specialize(&self, p: &TwoVarLaurent) -> Result<LaurentPoly> {
        let (l, m) = self
            .substitution()
            .ok_or_else(|| Error::Unsupported("nothing to substitute for HOMFLY".into()))?;
        p.specialize(l, m)
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.subst, &self.roots) {
            (SpecKind::Custom, Some((l, _)), Some((r1, r2))) => {
                write!(f, "custom:r1={r1},r2={r2},l={l}")
            }
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for Specialization {
    type Err = Error;

    /// Built-in names, or `custom:r1=<poly>,r2=<poly>,l=<poly>`.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        match t.to_ascii_lowercase().as_str() {
            "homfly" => return Ok(Self::homfly()),
            "alexander" | "conway" => return Ok(Self::alexander()),
            "jones" => return Ok(Self::jones()),
            "degenerate" | "d" => return Ok(Self::degenerate()),
            _ => {}
        }
        let Some(body) = t.strip_prefix("custom:") else {
            return Err(Error::Parse(format!("unknown specialization `{t}`")));
        };
        let (mut r1, mut r2, mut l) = (None, None, None);
        for part in body.split(',') {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let val = LaurentPoly::parse(val)?;
            match key.trim() {
                "r1" => r1 = Some(val),
                "r2" => r2 = Some(val),
                "l" => l = Some(val),
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        let missing = |k: &str| Error::Parse(format!("custom specialization lacks `{k}`"));
        Self::custom(
            r1.ok_or_else(|| missing("r1"))?,
            r2.ok_or_else(|| missing("r2"))?,
            l.ok_or_else(|| missing("l"))?,
        )
    }
}

/// `r^a` for a unit monomial `r`.
fn unit_pow(r: &LaurentPoly, a: i32) -> LaurentPoly {
    r.pow(a).expect("roots are units")
}

/// Per-slot coefficient of corner `j` in the closed-form expansion of
/// exponent `a`: `S_j/Δ` for distinct roots, `R_j` for a double root.
pub fn expansion_coefficient(spec: &Specialization, a: i32, j: u8) -> Result<LaurentPoly> {
    let (r1, r2) = spec
        .roots()
        .ok_or_else(|| Error::Unsupported("HOMFLY roots are not rational in l, m".into()))?;
    if j > 1 {
        return Err(Error::Contract(format!("corner index {j} is not 0 or 1")));
    }
    if spec.is_degenerate() {
        let r = r1;
        return Ok(if j == 0 {
            unit_pow(r, a).scale(&GaussianRational::from_int(1 - a as i64))
        } else {
            unit_pow(r, a - 1).scale(&GaussianRational::from_int(a as i64))
        });
    }
    let delta = r2 - r1;
    let numer = if j == 0 {
        &(&unit_pow(r1, a) * r2) - &(r1 * &unit_pow(r2, a))
    } else {
        &unit_pow(r2, a) - &unit_pow(r1, a)
    };
    numer
        .div_exact(&delta)
        .ok_or_else(|| Error::NotLaurent(format!("{numer} is not divisible by {delta}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn recurrence_pairs() {
        assert_eq!(
            Specialization::alexander().recurrence_pair().unwrap(),
            (p("s^-1 - s"), p("1"))
        );
        assert_eq!(
            Specialization::jones().recurrence_pair().unwrap(),
            (p("s^3 - s"), p("s^4"))
        );
        assert_eq!(
            Specialization::degenerate().recurrence_pair().unwrap(),
            (p("2*s"), p("-s^2"))
        );
        let RecurrenceCoefficients::TwoVar(c1, c2) =
            Specialization::homfly().recurrence_coefficients()
        else {
            panic!()
        };
        assert_eq!(c1.to_string(), "-l*m");
        assert_eq!(c2.to_string(), "-l^2");
    }

    #[test]
    fn roots_solve_characteristic_equation() {
        for spec in Specialization::builtins() {
            let (l, m) = spec.substitution().unwrap();
            let (r1, r2) = spec.roots().unwrap();
            for r in [r1, r2] {
                let lhs = &(&(r * r) + &(&(m * l) * r)) + &(l * l);
                assert!(lhs.is_zero(), "{}", spec.name());
            }
        }
    }

    #[test]
    fn unlink_factors() {
        assert!(Specialization::alexander()
            .unlink_factor_one_var()
            .unwrap()
            .is_zero());
        assert_eq!(
            Specialization::jones().unlink_factor_one_var().unwrap(),
            p("-s - s^-1")
        );
        assert_eq!(
            Specialization::degenerate()
                .unlink_factor_one_var()
                .unwrap(),
            p("1/2*s^-1 + 1/2*s")
        );
    }

    #[test]
    fn expansion_coefficients_match_worked_values() {
        let alex = Specialization::alexander();
        assert!(expansion_coefficient(&alex, 1, 0).unwrap().is_zero());
        assert_eq!(expansion_coefficient(&alex, 2, 0).unwrap(), p("1"));
        let deg = Specialization::degenerate();
        assert_eq!(expansion_coefficient(&deg, -5, 0).unwrap(), p("6*s^-5"));
        assert_eq!(expansion_coefficient(&deg, -5, 1).unwrap(), p("-5*s^-6"));
        assert!(expansion_coefficient(&Specialization::homfly(), 2, 0).is_err());
    }

    #[test]
    fn alexander_coefficients_are_conway_c() {
        // C^a = (−1)^a s^(a−1) + s^(1−a); slot coefficients are C^a·s/(s²+1), C^(a+1)·s/(s²+1)
        let alex = Specialization::alexander();
        let c = |a: i32| {
            let sign = if a.rem_euclid(2) == 0 { 1 } else { -1 };
            &LaurentPoly::term(sign, a - 1) + &LaurentPoly::term(1, 1 - a)
        };
        let denom = p("s^-1 + s");
        for a in -8..=8 {
            assert_eq!(
                expansion_coefficient(&alex, a, 0).unwrap(),
                c(a).div_exact(&denom).unwrap()
            );
            assert_eq!(
                expansion_coefficient(&alex, a, 1).unwrap(),
                c(a + 1).div_exact(&denom).unwrap()
            );
        }
    }

    #[test]
    fn parse_names_and_custom() {
        assert_eq!(
            "jones".parse::<Specialization>().unwrap(),
            Specialization::jones()
        );
        let custom: Specialization = "custom:r1=-s,r2=s^-1,l=i".parse().unwrap();
        assert_eq!(
            custom.substitution(),
            Specialization::alexander().substitution()
        );
        assert!("custom:r1=s,r2=s^3,l=s".parse::<Specialization>().is_err());
        assert!("bogus".parse::<Specialization>().is_err());
    }
}
