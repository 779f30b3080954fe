//! Left compression of signed vectors and families.
//!
//! The (i,j)-shift with i < j swaps coordinates i and j of a vector when
//! the value at i is smaller (under +1 > 0 > -1), so ones migrate to the
//! front and minus-ones to the back. On families the shift replaces each
//! member by its shifted image unless that image is already present.
//! Shifting preserves family size and never decreases the minimum pairwise
//! scalar product, so it maps intersecting families to intersecting ones.

use crate::error::{param_err, Result};
use crate::family::SignedFamily;
use crate::mask::{self, Mask};
use crate::signed::SignedSet;

/// An ordered coordinate pair 1 <= i < j <= n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftPair {
    i: u32,
    j: u32,
}

impl ShiftPair {
    pub fn new(i: u32, j: u32) -> Result<Self> {
        if i == 0 || i >= j {
            return param_err(format!("shift pair requires 1 <= i < j, got ({i}, {j})"));
        }
        Ok(ShiftPair { i, j })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// All pairs i < j over [n], in lexicographic order.
    pub fn all(n: u32) -> Vec<ShiftPair> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(ShiftPair { i, j });
            }
        }
        out
    }
}

/// Swap coordinates i and j of `v` if the value at i is smaller; otherwise
/// return `v` unchanged.
pub fn shift_vector(v: &SignedSet, s: ShiftPair) -> Result<SignedSet> {
    let n = v.ambient().n();
    if s.j > n {
        return param_err(format!("shift pair ({}, {}) exceeds n = {n}", s.i, s.j));
    }
    if v.value_at(s.i) >= v.value_at(s.j) {
        return Ok(*v);
    }
    let swap = |m: Mask| -> Mask {
        let bi = mask::singleton(s.i);
        let bj = mask::singleton(s.j);
        let has_i = m & bi != 0;
        let has_j = m & bj != 0;
        let mut out = m & !(bi | bj);
        if has_i {
            out |= bj;
        }
        if has_j {
            out |= bi;
        }
        out
    };
    SignedSet::new(v.ambient(), swap(v.plus()), swap(v.minus()))
}

/// The (i,j)-shift of a family: each member maps to its shifted image
/// unless the image is already present, in which case the member stays.
pub fn shift_family(fam: &SignedFamily, s: ShiftPair) -> Result<SignedFamily> {
    let mut members = Vec::with_capacity(fam.len());
    for v in fam.members() {
        let image = shift_vector(v, s)?;
        if image != *v && fam.contains(&image) {
            members.push(*v);
        } else {
            members.push(image);
        }
    }
    let out = SignedFamily::new(fam.ambient(), members)?;
    debug_assert_eq!(out.len(), fam.len());
    Ok(out)
}

/// Is `fam` a fixed point of every (i,j)-shift?
pub fn is_shifted(fam: &SignedFamily) -> bool {
    ShiftPair::all(fam.ambient().n())
        .into_iter()
        .all(|s| shift_family(fam, s).map_or(false, |g| g == *fam))
}

/// Apply lexicographic sweeps of all (i,j)-shifts until a full pass leaves
/// the family unchanged. The fixed point depends on the sweep order; this
/// canonical sweep makes the output reproducible.
pub fn fully_shift(fam: &SignedFamily) -> Result<SignedFamily> {
    let pairs = ShiftPair::all(fam.ambient().n());
    let mut cur = fam.clone();
    loop {
        let mut changed = false;
        for &s in &pairs {
            let next = shift_family(&cur, s)?;
            if next != cur {
                changed = true;
                cur = next;
            }
        }
        if !changed {
            return Ok(cur);
        }
    }
}

/// Potential that strictly decreases whenever a shift changes a family;
/// witnesses termination of [`fully_shift`].
pub fn shift_potential(fam: &SignedFamily) -> u64 {
    let n = fam.ambient().n() as u64;
    fam.members()
        .iter()
        .map(|v| {
            let plus: u64 = mask::to_elems(v.plus()).iter().map(|&e| e as u64).sum();
            let minus: u64 = mask::to_elems(v.minus()).iter().map(|&e| e as u64 + n).sum();
            plus + minus
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::star_family;
    use crate::params::Params;

    fn sp(i: u32, j: u32) -> ShiftPair {
        ShiftPair::new(i, j).unwrap()
    }

    fn vset(p: Params, plus: &[u32], minus: &[u32]) -> SignedSet {
        SignedSet::from_elems(p, plus, minus).unwrap()
    }

    #[test]
    fn vector_shift_cases() {
        let p = Params::new(3, 1, 1).unwrap();
        // 0 at i, +1 at j: swap
        let v = vset(p, &[2], &[3]);
        assert_eq!(shift_vector(&v, sp(1, 2)).unwrap(), vset(p, &[1], &[3]));
        // 0 at i, -1 at j: keep
        let v = vset(p, &[1], &[3]);
        assert_eq!(shift_vector(&v, sp(2, 3)).unwrap(), v);
        // +1 at i, -1 at j: keep
        let v = vset(p, &[1], &[2]);
        assert_eq!(shift_vector(&v, sp(1, 2)).unwrap(), v);
        // -1 at i, +1 at j: swap both masks
        let v = vset(p, &[2], &[1]);
        assert_eq!(shift_vector(&v, sp(1, 2)).unwrap(), vset(p, &[1], &[2]));
    }

    #[test]
    fn family_shift_respects_presence() {
        let p = Params::new(3, 1, 1).unwrap();
        let moved = SignedFamily::new(p, vec![vset(p, &[2], &[1])]).unwrap();
        let shifted = shift_family(&moved, sp(1, 2)).unwrap();
        assert_eq!(shifted.members(), &[vset(p, &[1], &[2])]);

        let both = SignedFamily::new(p, vec![vset(p, &[1], &[2]), vset(p, &[2], &[1])]).unwrap();
        assert_eq!(shift_family(&both, sp(1, 2)).unwrap(), both);

        let empty = SignedFamily::empty(p);
        assert_eq!(shift_family(&empty, sp(1, 2)).unwrap(), empty);
    }

    #[test]
    fn canonical_sweep_fixed_point() {
        let p = Params::new(3, 1, 1).unwrap();
        let fam = SignedFamily::new(p, vec![vset(p, &[3], &[2])]).unwrap();
        let fixed = fully_shift(&fam).unwrap();
        // the only shifted singleton reachable: ones, then zeros, then -1s
        assert_eq!(fixed.members(), &[vset(p, &[1], &[3])]);
        assert!(is_shifted(&fixed));
    }

    #[test]
    fn star_family_is_already_shifted() {
        let fam = star_family(Params::new(4, 2, 1).unwrap()).unwrap();
        assert!(is_shifted(&fam));
        assert_eq!(fully_shift(&fam).unwrap(), fam);
    }

    #[test]
    fn shifting_preserves_the_intersecting_property() {
        let p = Params::new(5, 2, 1).unwrap();
        let fam = SignedFamily::new(
            p,
            vec![vset(p, &[2, 3], &[4]), vset(p, &[3, 5], &[2]), vset(p, &[2, 5], &[3])],
        )
        .unwrap();
        assert!(fam.is_intersecting());
        let fixed = fully_shift(&fam).unwrap();
        assert_eq!(fixed.len(), fam.len());
        assert!(fixed.is_intersecting());
        assert!(fixed.min_pairwise_product() >= fam.min_pairwise_product());
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(ShiftPair::new(0, 2).is_err());
        assert!(ShiftPair::new(2, 2).is_err());
        let p = Params::new(3, 1, 1).unwrap();
        let v = vset(p, &[1], &[2]);
        assert!(shift_vector(&v, sp(2, 7)).is_err());
    }
}
