use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use super::{canonical_cmp, Monomial, Polynomial, Rational};

/// Canonical printer: terms by ascending total degree, then descending
/// exponent vector; coefficients as `p/q` with `q` omitted when 1.
pub struct PolynomialDisplay<'a, S> {
    poly: &'a Polynomial,
    names: &'a [S],
}

impl Polynomial {
    /// Prints with the given variable names. Panics on a length mismatch.
    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> PolynomialDisplay<'a, S> {
        assert_eq!(names.len(), self.num_vars(), "one name per variable");
        PolynomialDisplay { poly: self, names }
    }

    pub(crate) fn canonical_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| canonical_cmp(a.0, b.0));
        terms
    }
}

fn write_monomial<S: AsRef<str>>(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    names: &[S],
) -> fmt::Result {
    let mut first = true;
    for (name, &e) in names.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name.as_ref())?;
        if e > 1 {
            write!(f, "^{}", e)?;
        }
    }
    Ok(())
}

impl<S: AsRef<str>> fmt::Display for PolynomialDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.canonical_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write_monomial(f, m, self.names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    /// Uses `x1, x2, ...` as variable names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<alloc::string::String> = (1..=self.num_vars())
            .map(|i| alloc::format!("x{}", i))
            .collect();
        fmt::Display::fmt(&self.display(&names), f)
    }
}
