//! Sparse exact Laurent polynomials over the Gaussian rationals.
//!
//! [`LaurentPoly`] is the one-variable ring `Q(i)[s, s⁻¹]` that carries the
//! Alexander-Conway, Jones and D values. [`TwoVarLaurent`] is
//! `Q(i)[l^±1, m^±1]` and carries generic HOMFLY values. Both are the same
//! generic container keyed by an [`Exponent`]; zero coefficients are never
//! stored, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::GaussianRational;
use crate::error::{Error, Result};

/// Exponent key of a monomial.
pub trait Exponent: Copy + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn neg(self) -> Self;
    /// Exponent of `name^pow`, or `None` for a foreign variable.
    fn var(name: &str, pow: i32) -> Option<Self>;
    /// Monomial text without coefficient; empty for the constant monomial.
    fn render(self) -> String;
}

impl Exponent for i32 {
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn neg(self) -> Self {
        -self
    }
    fn var(name: &str, pow: i32) -> Option<Self> {
        (name == "s").then_some(pow)
    }
    fn render(self) -> String {
        render_power("s", self)
    }
}

impl Exponent for (i32, i32) {
    fn zero() -> Self {
        (0, 0)
    }
    fn add(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn neg(self) -> Self {
        (-self.0, -self.1)
    }
    fn var(name: &str, pow: i32) -> Option<Self> {
        match name {
            "l" => Some((pow, 0)),
            "m" => Some((0, pow)),
            _ => None,
        }
    }
    fn render(self) -> String {
        let l = render_power("l", self.0);
        let m = render_power("m", self.1);
        match (l.is_empty(), m.is_empty()) {
            (true, _) => m,
            (_, true) => l,
            _ => format!("{l}*{m}"),
        }
    }
}

fn render_power(var: &str, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

/// Sparse Laurent polynomial with exponent key `K`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<K: Exponent> {
    terms: BTreeMap<K, GaussianRational>,
}

/// One-variable Laurent polynomial in `s`.
pub type LaurentPoly = Laurent<i32>;
/// Two-variable Laurent polynomial in `l, m`; keys are `(exp_l, exp_m)`.
pub type TwoVarLaurent = Laurent<(i32, i32)>;

impl<K: Exponent> Default for Laurent<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Exponent> Laurent<K> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, K::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn monomial(c: GaussianRational, k: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (K, GaussianRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, k: K, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&K::zero())
                .is_some_and(|c| *c == GaussianRational::one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (K, &GaussianRational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: K) -> GaussianRational {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial with exponent `k`.
    pub fn shift(&self, k: K) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.add(k), v.clone()))
                .collect(),
        }
    }

    /// The single term of a monomial.
    pub fn as_monomial(&self) -> Option<(K, &GaussianRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    /// Inverse in the Laurent ring; exists exactly for nonzero monomials.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (k, c) = self.as_monomial()?;
        Some(Self::monomial(c.inv()?, k.neg()))
    }

    /// Integer power; negative exponents only for units.
    pub fn pow(&self, e: i32) -> Option<Self> {
        let base = if e < 0 {
            self.unit_inverse()?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        let mut sq = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    pub fn map_coeffs(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    /// Every coefficient has power-of-two denominators.
    pub fn is_dyadic(&self) -> bool {
        self.terms.values().all(GaussianRational::is_dyadic)
    }

    /// Parses the canonical text form, e.g. `"1/4*s^-2 - 1 + s^2"` or
    /// `"-2*l^2 + l^2*m^2 - l^4"`. Coefficients may be parenthesized
    /// Gaussian rationals such as `(1/2-i)*s`.
    pub fn parse(text: &str) -> Result<Self> {
        let src: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = Self::zero();
        for (sign, body) in split_terms(&src)? {
            let mut coeff = GaussianRational::from_int(sign);
            let mut key = K::zero();
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{text}`")));
                }
                if let Some(inner) = factor.strip_prefix('(').and_then(|f| f.strip_suffix(')')) {
                    coeff = &coeff * &inner.parse::<GaussianRational>()?;
                } else if factor.starts_with(|c: char| c.is_ascii_digit()) || factor == "i" {
                    coeff = &coeff * &factor.parse::<GaussianRational>()?;
                } else {
                    let (name, pow) = match factor.split_once('^') {
                        Some((n, p)) => (
                            n,
                            p.parse::<i32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                        ),
                        None => (factor, 1),
                    };
                    let k = K::var(name, pow)
                        .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                    key = key.add(k);
                }
            }
            poly.add_term(key, &coeff);
        }
        Ok(poly)
    }
}

/// Splits at top-level `+`/`-`, returning `(sign, term body)` pairs.
fn split_terms(src: &str) -> Result<Vec<(i64, &str)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut sign = 1i64;
    for (k, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                // exponent signs (`s^-2`) belong to the term
                if k > 0 && bytes[k - 1] == b'^' {
                    continue;
                }
                if k > start {
                    out.push((sign, &src[start..k]));
                } else if k > 0 {
                    return Err(Error::Parse(format!("dangling sign in `{src}`")));
                }
                sign = if b == b'-' { -1 } else { 1 };
                start = k + 1;
            }
            _ => {}
        }
    }
    if start >= src.len() {
        return Err(Error::Parse(format!("dangling sign in `{src}`")));
    }
    out.push((sign, &src[start..]));
    Ok(out)
}

impl<'a, K: Exponent> Add<&'a Laurent<K>> for &'a Laurent<K> {
    type Output = Laurent<K>;
    fn add(self, o: &Laurent<K>) -> Laurent<K> {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c);
        }
        r
    }
}

impl<'a, K: Exponent> Sub<&'a Laurent<K>> for &'a Laurent<K> {
    type Output = Laurent<K>;
    fn sub(self, o: &Laurent<K>) -> Laurent<K> {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, &-c);
        }
        r
    }
}

impl<'a, K: Exponent> Mul<&'a Laurent<K>> for &'a Laurent<K> {
    type Output = Laurent<K>;
    fn mul(self, o: &Laurent<K>) -> Laurent<K> {
        let mut r = Laurent::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                r.add_term(a.add(*b), &(ca * cb));
            }
        }
        r
    }
}

impl<K: Exponent> Neg for &Laurent<K> {
    type Output = Laurent<K>;
    fn neg(self) -> Laurent<K> {
        Laurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl<K: Exponent> Neg for Laurent<K> {
    type Output = Laurent<K>;
    fn neg(self) -> Laurent<K> {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<K: Exponent> $tr for Laurent<K> {
            type Output = Laurent<K>;
            fn $m(self, o: Laurent<K>) -> Laurent<K> {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<K: Exponent> fmt::Display for Laurent<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let mono = k.render();
            let (negative, body) = if c.is_real() {
                let mag = GaussianRational::real(c.re.abs());
                let body = match (mono.is_empty(), mag.is_one()) {
                    (true, _) => mag.to_string(),
                    (false, true) => mono,
                    (false, false) => format!("{mag}*{mono}"),
                };
                (c.re.is_negative(), body)
            } else if mono.is_empty() {
                (false, format!("({c})"))
            } else {
                (false, format!("({c})*{mono}"))
            };
            match (idx == 0, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => f.write_str(&body)?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl<K: Exponent> fmt::Debug for Laurent<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<K: Exponent> FromStr for Laurent<K> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// `(degree, order, breadth)`; `None` is the bottom element used for the
/// zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degree: Option<i32>,
    pub order: Option<i32>,
    pub breadth: u32,
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<i32>| v.map_or("-inf".to_string(), |d| d.to_string());
        write!(
            f,
            "(deg {}, ord {}, br {})",
            show(self.degree),
            show(self.order),
            self.breadth
        )
    }
}

impl LaurentPoly {
    /// The variable `s`.
    pub fn s() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    /// `c·s^e` with an integer coefficient.
    pub fn term(c: i64, e: i32) -> Self {
        Self::monomial(GaussianRational::from_int(c), e)
    }

    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn order(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn profile(&self) -> DegreeProfile {
        match (self.degree(), self.order()) {
            (Some(d), Some(o)) => DegreeProfile {
                degree: Some(d),
                order: Some(o),
                breadth: (d - o + 1) as u32,
            },
            _ => DegreeProfile {
                degree: None,
                order: None,
                breadth: 0,
            },
        }
    }

    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.terms.values().next_back()
    }

    /// The substitution `s ↦ s⁻¹`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Value at `s = 1`.
    pub fn eval_at_one(&self) -> GaussianRational {
        self.terms
            .values()
            .fold(GaussianRational::zero(), |acc, c| &acc + c)
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when the
    /// divisor is zero or does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dord = divisor.order()?;
        let Some(nord) = self.order() else {
            return Some(Self::zero());
        };
        if let Some((k, c)) = divisor.as_monomial() {
            return Some(self.scale(&c.inv()?).shift(-k));
        }
        // Normalize both to polynomials with nonzero constant term and run
        // long division from the top degree.
        let mut rem: BTreeMap<i32, GaussianRational> = self
            .terms
            .iter()
            .map(|(k, c)| (k - nord, c.clone()))
            .collect();
        let div: Vec<(i32, GaussianRational)> = divisor
            .terms
            .iter()
            .map(|(k, c)| (k - dord, c.clone()))
            .collect();
        let (ddeg, dlead) = div.last().cloned()?;
        let dlead_inv = dlead.inv()?;
        let mut quot = Self::zero();
        while let Some((&top, c)) = rem.iter().next_back() {
            if top < ddeg {
                return None;
            }
            let qc = c * &dlead_inv;
            let qe = top - ddeg;
            for (e, dc) in &div {
                let key = e + qe;
                let entry = rem.entry(key).or_default();
                *entry -= &(&qc * dc);
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.add_term(qe, &qc);
        }
        Some(quot.shift(nord - dord))
    }
}

impl TwoVarLaurent {
    pub fn l() -> Self {
        Self::monomial(GaussianRational::one(), (1, 0))
    }

    pub fn m() -> Self {
        Self::monomial(GaussianRational::one(), (0, 1))
    }

    /// Substitutes `l ↦ l_val`, `m ↦ m_val` and expands.
    ///
    /// `l_val` must be a unit. `m_val` may be a non-unit as long as every
    /// negative power of `m` cancels exactly after expansion; otherwise the
    /// result is not a Laurent polynomial and an error is returned.
    pub fn specialize(&self, l_val: &LaurentPoly, m_val: &LaurentPoly) -> Result<LaurentPoly> {
        if l_val.as_monomial().is_none() {
            return Err(Error::NotLaurent(format!("l = {l_val} is not a unit")));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let m_floor = self.terms.keys().map(|k| k.1).min().unwrap_or(0).min(0);
        let mut l_pows: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        let mut m_pows: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        let mut acc = LaurentPoly::zero();
        for (&(el, em), c) in &self.terms {
            let lp = l_pows
                .entry(el)
                .or_insert_with(|| l_val.pow(el).expect("unit power"))
                .clone();
            let shifted = em - m_floor;
            let mp = m_pows
                .entry(shifted)
                .or_insert_with(|| m_val.pow(shifted).expect("nonnegative power"))
                .clone();
            acc = &acc + &(&lp * &mp).scale(c);
        }
        if m_floor == 0 {
            return Ok(acc);
        }
        let denom = m_val.pow(-m_floor).expect("nonnegative power");
        acc.div_exact(&denom).ok_or_else(|| {
            Error::NotLaurent(format!(
                "m = {m_val} does not divide the expanded numerator {acc}"
            ))
        })
    }
}

/// Minimal ring interface used by the generic skein evaluator.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
}

impl<K: Exponent> Ring for Laurent<K> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
}

#[derive(Serialize, Deserialize)]
struct OneVarJson {
    var: String,
    terms: Vec<OneVarTermJson>,
}

#[derive(Serialize, Deserialize)]
struct OneVarTermJson {
    exp: i32,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct TwoVarJson {
    vars: Vec<String>,
    terms: Vec<TwoVarTermJson>,
}

#[derive(Serialize, Deserialize)]
struct TwoVarTermJson {
    el: i32,
    em: i32,
    re: String,
    im: String,
}

fn parse_coeff(re: &str, im: &str) -> std::result::Result<GaussianRational, Error> {
    Ok(GaussianRational::new(
        GaussianRational::parse_rational(re)?,
        GaussianRational::parse_rational(im)?,
    ))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        OneVarJson {
            var: "s".into(),
            terms: self
                .terms()
                .map(|(exp, c)| OneVarTermJson {
                    exp,
                    re: GaussianRational::fmt_rational(&c.re),
                    im: GaussianRational::fmt_rational(&c.im),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = OneVarJson::deserialize(de)?;
        if j.var != "s" {
            return Err(D::Error::custom(format!(
                "expected var \"s\", got {:?}",
                j.var
            )));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            terms.push((t.exp, parse_coeff(&t.re, &t.im).map_err(D::Error::custom)?));
        }
        Ok(Self::from_terms(terms))
    }
}

impl Serialize for TwoVarLaurent {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        TwoVarJson {
            vars: vec!["l".into(), "m".into()],
            terms: self
                .terms()
                .map(|((el, em), c)| TwoVarTermJson {
                    el,
                    em,
                    re: GaussianRational::fmt_rational(&c.re),
                    im: GaussianRational::fmt_rational(&c.im),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for TwoVarLaurent {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = TwoVarJson::deserialize(de)?;
        if j.vars != ["l", "m"] {
            return Err(D::Error::custom(format!(
                "expected vars [\"l\",\"m\"], got {:?}",
                j.vars
            )));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            terms.push((
                (t.el, t.em),
                parse_coeff(&t.re, &t.im).map_err(D::Error::custom)?,
            ));
        }
        Ok(Self::from_terms(terms))
    }
}
