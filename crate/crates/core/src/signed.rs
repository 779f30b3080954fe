use crate::error::{param_err, Result};
use crate::mask::{self, Mask};
use crate::params::Params;

/// A {0,+1,-1}-vector stored as a (plus-set, minus-set) pair of bit masks.
///
/// Invariants: plus and minus are disjoint subsets of [n], |plus| = k,
/// |minus| = l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedSet {
    plus: Mask,
    minus: Mask,
    ambient: Params,
}

impl SignedSet {
    pub fn new(ambient: Params, plus: Mask, minus: Mask) -> Result<Self> {
        let ground = mask::full_mask(ambient.n());
        if plus & !ground != 0 || minus & !ground != 0 {
            return param_err("signed set has elements outside the ground set");
        }
        if plus & minus != 0 {
            return param_err("plus and minus sets overlap");
        }
        if plus.count_ones() != ambient.k() {
            return param_err(format!(
                "plus set has {} elements, expected k = {}",
                plus.count_ones(),
                ambient.k()
            ));
        }
        if minus.count_ones() != ambient.l() {
            return param_err(format!(
                "minus set has {} elements, expected l = {}",
                minus.count_ones(),
                ambient.l()
            ));
        }
        Ok(SignedSet { plus, minus, ambient })
    }

    pub fn from_elems(ambient: Params, plus: &[u32], minus: &[u32]) -> Result<Self> {
        Self::new(ambient, mask::from_elems(plus), mask::from_elems(minus))
    }

    pub fn plus(&self) -> Mask {
        self.plus
    }

    pub fn minus(&self) -> Mask {
        self.minus
    }

    pub fn ambient(&self) -> Params {
        self.ambient
    }

    /// Coordinate value at 1-based position i: +1, -1 or 0.
    pub fn value_at(&self, i: u32) -> i8 {
        if mask::contains(self.plus, i) {
            1
        } else if mask::contains(self.minus, i) {
            -1
        } else {
            0
        }
    }

    /// Sort key realizing the canonical member order.
    pub(crate) fn key(&self) -> (Mask, Mask) {
        (self.plus, self.minus)
    }
}

/// Scalar product of two vectors from the same ambient space.
pub fn scalar_product(v: &SignedSet, w: &SignedSet) -> Result<i32> {
    if v.ambient() != w.ambient() {
        return param_err(format!(
            "ambient mismatch: {} vs {}",
            v.ambient(),
            w.ambient()
        ));
    }
    Ok(scalar_product_unchecked(v, w))
}

/// Scalar product without the ambient check; used in search inner loops.
#[inline]
pub fn scalar_product_unchecked(v: &SignedSet, w: &SignedSet) -> i32 {
    let agree = (v.plus & w.plus).count_ones() + (v.minus & w.minus).count_ones();
    let clash = (v.plus & w.minus).count_ones() + (v.minus & w.plus).count_ones();
    agree as i32 - clash as i32
}
