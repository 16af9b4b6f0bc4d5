use num_traits::Zero;

use crate::ratcore::Rational;

/// Ramification index at `([1:0],[0:1])` of the projection of the curve
/// `u(x^5 + a1 x^4 y + a2 x^3 y^2 + a3 x^2 y^3) = v(...)` to the first factor.
pub fn ramification_index(a1: &Rational, a2: &Rational, a3: &Rational) -> u8 {
    if !a3.is_zero() {
        2
    } else if !a2.is_zero() {
        3
    } else if !a1.is_zero() {
        4
    } else {
        5
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::{int, rat};

    #[test]
    fn case_split() {
        let z = int(0);
        assert_eq!(ramification_index(&z, &z, &int(1)), 2);
        assert_eq!(ramification_index(&int(7), &rat(1, 2), &int(1)), 2);
        assert_eq!(ramification_index(&int(3), &int(-1), &z), 3);
        assert_eq!(ramification_index(&int(1), &z, &z), 4);
        assert_eq!(ramification_index(&z, &z, &z), 5);
    }
}
