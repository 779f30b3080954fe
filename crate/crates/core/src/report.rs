use crate::family::{SetFamily, SignedFamily};

/// The extremal object a verifier found while evaluating a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Sets(SetFamily),
    SetPair(SetFamily, SetFamily),
    Signed(SignedFamily),
}

/// Evaluated left and right sides of a checked inequality plus the witness
/// achieving the left side.
///
/// `satisfied` means lhs <= rhs for bound checks ([`BoundReport::le`]) and
/// lhs == rhs for identity checks ([`BoundReport::eq`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub lhs: u64,
    pub rhs: u64,
    /// Which expression inside the right-hand max attained it, or a short
    /// note for checks without a max.
    pub rhs_argmax: String,
    pub witness: Option<Witness>,
    pub satisfied: bool,
}

impl BoundReport {
    pub fn le(lhs: u64, rhs: u64, rhs_argmax: impl Into<String>, witness: Option<Witness>) -> Self {
        BoundReport { lhs, rhs, rhs_argmax: rhs_argmax.into(), witness, satisfied: lhs <= rhs }
    }

    pub fn eq(lhs: u64, rhs: u64, rhs_argmax: impl Into<String>, witness: Option<Witness>) -> Self {
        BoundReport { lhs, rhs, rhs_argmax: rhs_argmax.into(), witness, satisfied: lhs == rhs }
    }
}
