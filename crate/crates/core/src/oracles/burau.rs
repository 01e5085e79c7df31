//! Alexander polynomial (up to units) from the reduced Burau representation.

use crate::braid::BraidWord;
use crate::laurent::LaurentPoly;
use crate::oracles::unit::UnitClass;

type Matrix = Vec<Vec<LaurentPoly>>;

fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    if r == c {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau image of `x_i^{±1}` on `n` strands, with `t = s⁻²`.
fn generator(n: usize, i: usize, inverse: bool) -> Matrix {
    let k = n - 1;
    let t = LaurentPoly::term(1, -2);
    let t_inv = LaurentPoly::term(1, 2);
    let one = LaurentPoly::one();
    let mut m = identity(k);
    let r = i - 1;
    if !inverse {
        m[r][r] = -&t;
        if r > 0 {
            m[r - 1][r] = t.clone();
        }
        if r + 1 < k {
            m[r + 1][r] = one;
        }
    } else {
        m[r][r] = -&t_inv;
        if r > 0 {
            m[r - 1][r] = one;
        }
        if r + 1 < k {
            m[r + 1][r] = t_inv;
        }
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = a.len();
    (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    (0..k).fold(LaurentPoly::zero(), |acc, j| {
                        if a[r][j].is_zero() || b[j][c].is_zero() {
                            acc
                        } else {
                            &acc + &(&a[r][j] * &b[j][c])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination; every division is exact.
fn determinant(mut m: Matrix) -> LaurentPoly {
    let k = m.len();
    if k == 0 {
        return LaurentPoly::one();
    }
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for p in 0..k {
        if m[p][p].is_zero() {
            let Some(swap) = (p + 1..k).find(|&r| !m[r][p].is_zero()) else {
                return LaurentPoly::zero();
            };
            m.swap(p, swap);
            sign = !sign;
        }
        for r in p + 1..k {
            for c in p + 1..k {
                let num = &(&m[r][c] * &m[p][p]) - &(&m[r][p] * &m[p][c]);
                m[r][c] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[r][p] = LaurentPoly::zero();
        }
        prev = m[p][p].clone();
    }
    let det = m[k - 1][k - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// `det(I − B(w)) / (1 + t + … + t^{n−1})` at `t = s⁻²`.
pub fn burau_alexander(w: &BraidWord) -> UnitClass {
    let n = w.strands();
    if n == 1 {
        return UnitClass::new(LaurentPoly::one());
    }
    let mut acc = identity(n - 1);
    for &e in w.letters() {
        acc = mat_mul(&acc, &generator(n, e.unsigned_abs() as usize, e < 0));
    }
    let mut diff = identity(n - 1);
    for (r, row) in diff.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x = &*x - &acc[r][c];
        }
    }
    let det = determinant(diff);
    let cyclo = (0..n as i32).fold(LaurentPoly::zero(), |acc, j| {
        &acc + &LaurentPoly::term(1, -2 * j)
    });
    UnitClass::new(
        det.div_exact(&cyclo)
            .expect("Burau determinant is divisible by [n]_t"),
    )
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
        assert_eq!(
            burau_alexander(&w("B2: 1 1 1")),
            UnitClass::new(p("s^-2 - 1 + s^2"))
        );
        assert_eq!(burau_alexander(&w("B2: 1")), UnitClass::new(p("1")));
        assert_eq!(
            burau_alexander(&w("B3: 1 2 1 2")),
            UnitClass::new(p("s^-2 - 1 + s^2"))
        );
        assert!(burau_alexander(&w("B3: 1")).representative.is_zero());
        assert!(
            burau_alexander(&w("B3: 1 -2")).representative.is_one()
                || burau_alexander(&w("B3: 1 -2")) == UnitClass::new(p("1"))
        );
    }

    #[test]
    fn generators_are_inverse_pairs() {
        for n in 2..=5 {
            for i in 1..n {
                let prod = mat_mul(&generator(n, i, false), &generator(n, i, true));
                assert_eq!(prod, identity(n - 1), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn braid_relation_holds() {
        for n in 3..=5 {
            for i in 1..n - 1 {
                let a = generator(n, i, false);
                let b = generator(n, i + 1, false);
                assert_eq!(mat_mul(&mat_mul(&a, &b), &a), mat_mul(&mat_mul(&b, &a), &b));
            }
        }
    }
}
