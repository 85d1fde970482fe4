use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A named graded generator of a free graded-commutative algebra.
///
/// Generators are ordered by `(degree, name)`; that order is the canonical
/// order used for monomials everywhere in the engine. Degrees may be zero or
/// negative for the intermediate generators of section-space models, but
/// every algebra handed to the homology engine must be positively graded.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    name: Arc<str>,
    degree: i32,
}

impl Generator {
    pub fn new(name: impl AsRef<str>, degree: i32) -> Self {
        Generator {
            name: Arc::from(name.as_ref()),
            degree,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.name.cmp(&other.name))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name, self.degree)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
