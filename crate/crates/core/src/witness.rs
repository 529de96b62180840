use std::fmt;

/// A tuple of element indices at which a law fails.
///
/// Checkers quantify over tuples in lexicographic order and report the first
/// failing one, so a witness is reproducible from the inputs alone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness(pub Vec<usize>);

impl Witness {
    pub fn of(items: &[usize]) -> Self {
        Witness(items.to_vec())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<usize>> for Witness {
    fn from(v: Vec<usize>) -> Self {
        Witness(v)
    }
}
