//! Root structure of binary cubic forms over the algebraic closure.

use num_traits::Zero;

use crate::polynomial::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryCubicShape {
    ThreeDistinctFactors,
    DoubleFactor,
    TripleFactor,
    Zero,
}

/// Shape of the degree-three part of a germ in two variables.
///
/// Distinct roots iff the discriminant is nonzero; a repeated root is a
/// triple one iff the Hessian covariant `f_xx f_yy - f_xy^2` vanishes.
pub fn binary_cubic_shape(f: &Polynomial) -> BinaryCubicShape {
    assert_eq!(f.num_vars(), 2, "binary forms only");
    let cubic = f.homogeneous_part(3);
    if cubic.is_zero() {
        return BinaryCubicShape::Zero;
    }
    let coef = |i: u32| cubic.coefficient(&Monomial::new(alloc::vec![3 - i, i]));
    let (a, b, c, d) = (coef(0), coef(1), coef(2), coef(3));
    let disc = &b * &b * &c * &c
        - Rational::from_integer(4.into()) * &a * &c * &c * &c
        - Rational::from_integer(4.into()) * &b * &b * &b * &d
        - Rational::from_integer(27.into()) * &a * &a * &d * &d
        + Rational::from_integer(18.into()) * &a * &b * &c * &d;
    if !disc.is_zero() {
        return BinaryCubicShape::ThreeDistinctFactors;
    }
    let d2 = |i: usize, j: usize| {
        cubic
            .partial_derivative(i)
            .and_then(|g| g.partial_derivative(j))
            .expect("two variables")
    };
    let dxy = d2(0, 1);
    let hessian = &d2(0, 0) * &d2(1, 1) - &dxy * &dxy;
    if hessian.is_zero() {
        BinaryCubicShape::TripleFactor
    } else {
        BinaryCubicShape::DoubleFactor
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    fn shape(s: &str) -> BinaryCubicShape {
        binary_cubic_shape(&parse_polynomial(s, &["x", "y"]).unwrap())
    }

    #[test]
    fn shapes() {
        assert_eq!(shape("x^3 + x*y^2"), BinaryCubicShape::ThreeDistinctFactors);
        assert_eq!(shape("x*y*(x-y)"), BinaryCubicShape::ThreeDistinctFactors);
        assert_eq!(shape("x^2*y + y^5"), BinaryCubicShape::DoubleFactor);
        assert_eq!(shape("(x - 2*y)^2*(x+y)"), BinaryCubicShape::DoubleFactor);
        assert_eq!(shape("y^3 - x^6"), BinaryCubicShape::TripleFactor);
        assert_eq!(shape("(3*x - y)^3 + x^4"), BinaryCubicShape::TripleFactor);
        assert_eq!(shape("x^4 + y^4"), BinaryCubicShape::Zero);
    }
}
