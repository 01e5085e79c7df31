//! Jones polynomial from the Kauffman bracket state sum of the closed braid
//! diagram.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::coeff::GaussianRational;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub const KAUFFMAN_DEFAULT_CAP: usize = 24;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

pub fn kauffman_jones(w: &BraidWord) -> Result<LaurentPoly> {
    kauffman_jones_capped(w, KAUFFMAN_DEFAULT_CAP)
}

/// Arc `(position, level)`; level `c` is identified with level 0 by the closure.
fn arc(n: usize, c: usize, pos: usize, level: usize) -> usize {
    (level % c.max(1)) * n + pos
}

pub fn kauffman_jones_capped(w: &BraidWord, cap: usize) -> Result<LaurentPoly> {
    let n = w.strands();
    let c = w.len();
    if c > cap {
        return Err(Error::Refused(format!(
            "{c} crossings exceed the state-sum cap of {cap}"
        )));
    }
    let levels = c.max(1);
    // Count states by (A-exponent, loop count).
    let mut tally: HashMap<(i32, usize), i64> = HashMap::new();
    for state in 0u64..(1u64 << c) {
        let mut uf = UnionFind::new(n * levels);
        let mut merges = 0usize;
        let mut a_exp = 0i32;
        for (t, &e) in w.letters().iter().enumerate() {
            let i = e.unsigned_abs() as usize - 1;
            let vertical = state >> t & 1 == 0;
            // A-smoothing is horizontal for letter +i and vertical for −i.
            let a_smoothing = (e > 0) != vertical;
            a_exp += if a_smoothing { 1 } else { -1 };
            for p in 0..n {
                if p != i && p != i + 1 {
                    merges += uf.union(arc(n, c, p, t), arc(n, c, p, t + 1)) as usize;
                }
            }
            let (tl, tr) = (arc(n, c, i, t), arc(n, c, i + 1, t));
            let (bl, br) = (arc(n, c, i, t + 1), arc(n, c, i + 1, t + 1));
            if vertical {
                merges += uf.union(tl, bl) as usize;
                merges += uf.union(tr, br) as usize;
            } else {
                merges += uf.union(tl, tr) as usize;
                merges += uf.union(bl, br) as usize;
            }
        }
        let loops = if c == 0 { n } else { n * levels - merges };
        *tally.entry((a_exp, loops)).or_default() += 1;
    }
    // Bracket in the variable A, loop value −A² − A⁻².
    let loop_value = &LaurentPoly::term(-1, 2) + &LaurentPoly::term(-1, -2);
    let mut bracket = LaurentPoly::zero();
    let mut keys: Vec<_> = tally.into_iter().collect();
    keys.sort();
    for ((a_exp, loops), count) in keys {
        let d = loop_value.pow(loops as i32 - 1).expect("nonnegative power");
        bracket = &bracket + &d.shift(a_exp).scale(&GaussianRational::from_int(count));
    }
    // Letter +i has writhe −1.
    let writhe = -w.writhe() as i32;
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalized = bracket
        .shift(-3 * writhe)
        .scale(&GaussianRational::from_int(sign));
    // A = s^(1/2)
    let mut out = LaurentPoly::zero();
    for (e, coef) in normalized.terms() {
        if e % 2 != 0 {
            return Err(Error::Contract(format!(
                "odd A-exponent {e} in the normalized bracket"
            )));
        }
        out = &out + &LaurentPoly::monomial(coef.clone(), e / 2);
    }
    Ok(out)
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
    fn calibration_values() {
        assert_eq!(kauffman_jones(&w("B1:")).unwrap(), p("1"));
        assert_eq!(kauffman_jones(&w("B2: 1")).unwrap(), p("1"));
        assert_eq!(kauffman_jones(&w("B2: -1")).unwrap(), p("1"));
        assert_eq!(kauffman_jones(&w("B2:")).unwrap(), p("-s^-1 - s"));
        assert_eq!(kauffman_jones(&w("B2: 1 1")).unwrap(), p("-s - s^5"));
        assert_eq!(
            kauffman_jones(&w("B2: 1 1 1")).unwrap(),
            p("s^2 + s^6 - s^8")
        );
    }

    #[test]
    fn satisfies_jones_skein_relation() {
        // t V(L−) − (t^(−1/2) − t^(1/2)) V(L0) − t^(−1) V(L+) = 0 with t = s⁻²,
        // where letter +1 is L−.
        let t = p("s^-2");
        let t_inv = p("s^2");
        let mid = p("s - s^-1");
        for a in -3..=3 {
            let word = |k: i32| {
                let mut letters = vec![2, -1, 2];
                let e = if k < 0 { -1 } else { 1 };
                letters.extend(std::iter::repeat_n(e, k.unsigned_abs() as usize));
                BraidWord::new(3, letters).unwrap()
            };
            let minus = kauffman_jones(&word(a + 1)).unwrap();
            let zero = kauffman_jones(&word(a)).unwrap();
            let plus = kauffman_jones(&word(a - 1)).unwrap();
            let lhs = &(&(&t * &minus) - &(&mid * &zero)) - &(&t_inv * &plus);
            assert!(lhs.is_zero(), "a = {a}: {lhs}");
        }
    }

    #[test]
    fn refuses_beyond_cap() {
        let long = BraidWord::new(2, vec![1; 30]).unwrap();
        assert!(matches!(kauffman_jones(&long), Err(Error::Refused(_))));
    }
}
