//! HOMFLY polynomial through the Hecke algebra `H_n` and its Markov trace.
//!
//! Generators satisfy `g² = α·g + β` with `α = −ml`, `β = −l²`, so a word in
//! the `g_i` obeys the skein recurrence by construction. The trace is fixed by
//! `tr(1_n) = δ^{n−1}`, `tr(a·g_{n−1}·b) = tr(ab)` for `a, b ∈ H_{n−1}`, with
//! `δ = −(l + l⁻¹)/m`; this makes it invariant under both stabilizations.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::TwoVarLaurent;
use crate::spec::Specialization;

pub const HECKE_MAX_STRANDS: usize = 7;

type Perm = Vec<u8>;

/// Element of `H_n` in the standard basis `T_w`, `w` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    strands: usize,
    coeffs: HashMap<Perm, TwoVarLaurent>,
}

struct Params {
    alpha: TwoVarLaurent,
    beta: TwoVarLaurent,
    beta_inv: TwoVarLaurent,
    delta: TwoVarLaurent,
}

impl Params {
    fn new() -> Self {
        let l = TwoVarLaurent::l();
        let m = TwoVarLaurent::m();
        let beta = -(&(&l * &l));
        Self {
            alpha: -(&(&m * &l)),
            beta_inv: beta.unit_inverse().expect("unit"),
            beta,
            delta: Specialization::homfly_unlink_factor(),
        }
    }
}

thread_local! {
    static PARAMS: Params = Params::new();
    static TRACES: RefCell<HashMap<Perm, TwoVarLaurent>> = RefCell::new(HashMap::new());
}

impl HeckeElement {
    pub fn identity(strands: usize) -> Self {
        let mut coeffs = HashMap::new();
        coeffs.insert((1..=strands as u8).collect(), TwoVarLaurent::one());
        Self { strands, coeffs }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(map: &mut HashMap<Perm, TwoVarLaurent>, w: Perm, c: TwoVarLaurent) {
        if c.is_zero() {
            return;
        }
        match map.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Right multiplication by `g_i` (1-based).
    pub fn mul_generator(&self, i: usize) -> Self {
        PARAMS.with(|p| {
            let mut out = HashMap::with_capacity(self.coeffs.len() * 2);
            for (w, c) in &self.coeffs {
                let mut ws = w.clone();
                ws.swap(i - 1, i);
                if w[i - 1] < w[i] {
                    Self::add(&mut out, ws, c.clone());
                } else {
                    Self::add(&mut out, w.clone(), c * &p.alpha);
                    Self::add(&mut out, ws, c * &p.beta);
                }
            }
            Self {
                strands: self.strands,
                coeffs: out,
            }
        })
    }

    /// Right multiplication by `g_i⁻¹ = β⁻¹·g_i − α·β⁻¹`.
    pub fn mul_generator_inverse(&self, i: usize) -> Self {
        PARAMS.with(|p| {
            let g = self.mul_generator(i);
            let mut out = HashMap::with_capacity(g.coeffs.len() + self.coeffs.len());
            for (w, c) in g.coeffs {
                Self::add(&mut out, w, &c * &p.beta_inv);
            }
            let shift = -(&(&p.alpha * &p.beta_inv));
            for (w, c) in &self.coeffs {
                Self::add(&mut out, w.clone(), c * &shift);
            }
            Self {
                strands: self.strands,
                coeffs: out,
            }
        })
    }

    pub fn from_word(w: &BraidWord) -> Self {
        w.letters()
            .iter()
            .fold(Self::identity(w.strands()), |acc, &e| {
                let i = e.unsigned_abs() as usize;
                if e > 0 {
                    acc.mul_generator(i)
                } else {
                    acc.mul_generator_inverse(i)
                }
            })
    }

    pub fn trace(&self) -> TwoVarLaurent {
        let mut keys: Vec<&Perm> = self.coeffs.keys().collect();
        keys.sort();
        keys.into_iter().fold(TwoVarLaurent::zero(), |acc, w| {
            &acc + &(&self.coeffs[w] * &basis_trace(w))
        })
    }
}

/// Trace of a single basis element `T_w`.
fn basis_trace(w: &[u8]) -> TwoVarLaurent {
    if let Some(v) = TRACES.with(|t| t.borrow().get(w).cloned()) {
        return v;
    }
    let n = w.len();
    let value = if n <= 1 {
        TwoVarLaurent::one()
    } else if w[n - 1] as usize == n {
        let inner = basis_trace(&w[..n - 1]);
        PARAMS.with(|p| &p.delta * &inner)
    } else {
        // T_w = T_{w'}·g_{n−1}·g_{n−2}⋯g_p where n sits at position p of w
        let p = w
            .iter()
            .position(|&x| x as usize == n)
            .expect("permutation")
            + 1;
        let reduced: Perm = w.iter().copied().filter(|&x| x as usize != n).collect();
        let mut elem = HeckeElement {
            strands: n - 1,
            coeffs: HashMap::from([(reduced, TwoVarLaurent::one())]),
        };
        for i in (p..=n - 2).rev() {
            elem = elem.mul_generator(i);
        }
        elem.trace()
    };
    TRACES.with(|t| t.borrow_mut().insert(w.to_vec(), value.clone()));
    value
}

/// HOMFLY polynomial of the closure of `w`, for at most seven strands.
pub fn hecke_homfly(w: &BraidWord) -> Result<TwoVarLaurent> {
    if w.strands() > HECKE_MAX_STRANDS {
        return Err(Error::Refused(format!(
            "the Hecke oracle handles at most {HECKE_MAX_STRANDS} strands, got {}",
            w.strands()
        )));
    }
    Ok(HeckeElement::from_word(w).trace())
}
