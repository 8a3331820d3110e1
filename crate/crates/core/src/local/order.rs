use core::cmp::Ordering;

use crate::polynomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalOrderKind {
    /// Negative degree reverse lexicographic order: lower total degree is
    /// larger, ties broken reverse-lexicographically.
    AntiGradedRevLex,
}

/// A local monomial order on `num_vars` variables: `1` is the largest
/// monomial and multiplying by a nonconstant monomial makes it smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalOrder {
    pub kind: LocalOrderKind,
    pub num_vars: usize,
}

impl LocalOrder {
    pub fn anti_graded_revlex(num_vars: usize) -> Self {
        LocalOrder {
            kind: LocalOrderKind::AntiGradedRevLex,
            num_vars,
        }
    }

    /// `Greater` means `a` is the larger (more leading) monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            LocalOrderKind::AntiGradedRevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return db.cmp(&da);
                }
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}
