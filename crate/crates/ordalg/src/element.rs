//! Backend-tagged exact element representations.

use std::cmp::Ordering;
use std::fmt;

/// One element of a monoid instance. The payload variant must match the
/// instance backend; mixing variants across backends is a `BackendMismatch`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    /// Natural number (NaturalAdd, NumericalSemigroup).
    Nat(u64),
    /// Exponent vector of naturals (FreeCommutative).
    Vector(Vec<u32>),
    /// Zero-sum multiset of residues, kept sorted (BlockMonoid).
    Multiset(Vec<u32>),
    /// Positive integer under multiplication; 1 is the identity.
    PosInt(u64),
    /// Index into an ideal-monoid adapter enumeration.
    Ideal(usize),
    /// Index into a table backend.
    Table(usize),
}

impl Element {
    fn variant_rank(&self) -> u8 {
        match self {
            Element::Nat(_) => 0,
            Element::Vector(_) => 1,
            Element::Multiset(_) => 2,
            Element::PosInt(_) => 3,
            Element::Ideal(_) => 4,
            Element::Table(_) => 5,
        }
    }
}

/// Canonical order: numeric ascending; exponent vectors by (L1 norm,
/// lexicographic); multisets by (length, lexicographic residue sequence);
/// adapter and table elements by enumeration index.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        use Element::*;
        match (self, other) {
            (Nat(a), Nat(b)) => a.cmp(b),
            (PosInt(a), PosInt(b)) => a.cmp(b),
            (Vector(a), Vector(b)) => {
                let la: u64 = a.iter().map(|&v| v as u64).sum();
                let lb: u64 = b.iter().map(|&v| v as u64).sum();
                la.cmp(&lb).then_with(|| a.cmp(b))
            }
            (Multiset(a), Multiset(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Ideal(a), Ideal(b)) => a.cmp(b),
            (Table(a), Table(b)) => a.cmp(b),
            _ => self.variant_rank().cmp(&other.variant_rank()),
        }
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(n) => write!(f, "{n}"),
            Element::PosInt(n) => write!(f, "{n}"),
            Element::Vector(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Element::Multiset(v) => {
                write!(f, "[")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
            Element::Ideal(i) => write!(f, "#{i}"),
            Element::Table(i) => write!(f, "#{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_order_is_l1_then_lex() {
        let a = Element::Vector(vec![0, 1]);
        let b = Element::Vector(vec![1, 0]);
        let c = Element::Vector(vec![0, 2]);
        assert!(a < b);
        assert!(b < c);
    }

    #[test]
    fn multiset_order_is_length_then_lex() {
        let a = Element::Multiset(vec![0, 0]);
        let b = Element::Multiset(vec![1, 2]);
        let c = Element::Multiset(vec![0, 0, 0]);
        assert!(a < b);
        assert!(b < c);
    }
}
