//! Window-bounded check outcomes.

use crate::element::Element;

/// Outcome of a window-bounded property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status<W = Element> {
    Holds,
    /// The property fails; the witness re-verifies against the defining
    /// predicate.
    FailsWith(Vec<W>),
    /// A required sum or bound left the enumeration window, so the check
    /// could not be decided.
    WindowInconclusive(String),
}

/// A verdict together with how much of the quantifier space was covered.
/// `unchecked` counts tuples skipped because a required sum left the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W = Element> {
    pub status: Status<W>,
    pub checked: u64,
    pub unchecked: u64,
}

impl<W> Verdict<W> {
    pub fn holds(checked: u64, unchecked: u64) -> Self {
        Verdict { status: Status::Holds, checked, unchecked }
    }

    pub fn fails(witness: Vec<W>, checked: u64, unchecked: u64) -> Self {
        Verdict { status: Status::FailsWith(witness), checked, unchecked }
    }

    pub fn inconclusive(reason: impl Into<String>) -> Self {
        Verdict { status: Status::WindowInconclusive(reason.into()), checked: 0, unchecked: 0 }
    }

    pub fn holds_true(&self) -> bool {
        matches!(self.status, Status::Holds)
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::FailsWith(_))
    }

    pub fn witness(&self) -> Option<&[W]> {
        match &self.status {
            Status::FailsWith(w) => Some(w),
            _ => None,
        }
    }
}
