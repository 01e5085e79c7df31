use std::fmt;

use crate::coeff::GaussianRational;
use crate::laurent::LaurentPoly;

/// A Laurent polynomial up to multiplication by `±s^j`.
#[derive(Clone, Debug)]
pub struct UnitClass {
    pub representative: LaurentPoly,
}

impl UnitClass {
    pub fn new(representative: LaurentPoly) -> Self {
        Self { representative }
    }
}

impl PartialEq for UnitClass {
    fn eq(&self, other: &Self) -> bool {
        equal_up_to_unit(&self.representative, &other.representative).is_some()
    }
}

impl fmt::Display for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// `a = sign · s^shift · b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitWitness {
    pub sign: i8,
    pub shift: i32,
}

pub fn equal_up_to_unit(a: &LaurentPoly, b: &LaurentPoly) -> Option<UnitWitness> {
    let (Some(oa), Some(ob)) = (a.order(), b.order()) else {
        return (a.is_zero() && b.is_zero()).then_some(UnitWitness { sign: 1, shift: 0 });
    };
    if a.len() != b.len() {
        return None;
    }
    let shift = oa - ob;
    let one = GaussianRational::from_int(1);
    let ratio = &a.coeff(oa) / &b.coeff(ob);
    let sign = if ratio == one {
        1
    } else if ratio == -one.clone() {
        -1
    } else {
        return None;
    };
    let candidate = b
        .shift(shift)
        .scale(&GaussianRational::from_int(sign as i64));
    (candidate == *a).then_some(UnitWitness { sign, shift })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn witnesses() {
        let a = p("s^-2 - 1 + s^2");
        let b = &a * &p("s^2");
        assert_eq!(
            equal_up_to_unit(&a, &b),
            Some(UnitWitness { sign: 1, shift: -2 })
        );
        assert_eq!(
            equal_up_to_unit(&p("1"), &p("-1")),
            Some(UnitWitness { sign: -1, shift: 0 })
        );
        assert_eq!(equal_up_to_unit(&p("s + 1"), &p("s - 1")), None);
        assert!(equal_up_to_unit(&p("0"), &p("0")).is_some());
        assert!(equal_up_to_unit(&p("0"), &p("1")).is_none());
        assert_eq!(UnitClass::new(a.clone()), UnitClass::new(-b));
    }
}
