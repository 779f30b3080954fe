use crate::binom::try_binomial;
use crate::error::{param_err, size_err, Result};
use crate::mask::{self, Mask};
use crate::params::Params;
use crate::signed::{scalar_product_unchecked, SignedSet};

/// An ordered, duplicate-free family of k-subsets of [n], stored as bit
/// masks in ascending numeric order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ambient_n: u32,
    member_size: u32,
    members: Vec<Mask>,
}

impl SetFamily {
    pub fn new(ambient_n: u32, member_size: u32, mut members: Vec<Mask>) -> Result<Self> {
        if ambient_n > mask::MAX_GROUND {
            return size_err(format!("n = {ambient_n} exceeds the ground-set cap"));
        }
        let ground = mask::full_mask(ambient_n);
        for &m in &members {
            if m & !ground != 0 {
                return param_err("family member has elements outside the ground set");
            }
            if m.count_ones() != member_size {
                return param_err(format!(
                    "family member has {} elements, expected {member_size}",
                    m.count_ones()
                ));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { ambient_n, member_size, members })
    }

    pub fn empty(ambient_n: u32, member_size: u32) -> Self {
        SetFamily { ambient_n, member_size, members: Vec::new() }
    }

    /// Every k-subset of [n].
    pub fn complete(ambient_n: u32, member_size: u32) -> Result<Self> {
        if member_size > ambient_n {
            return param_err(format!(
                "member size {member_size} exceeds ground-set size {ambient_n}"
            ));
        }
        Ok(SetFamily {
            ambient_n,
            member_size,
            members: mask::k_subsets(ambient_n, member_size),
        })
    }

    pub fn ambient_n(&self) -> u32 {
        self.ambient_n
    }

    pub fn member_size(&self) -> u32 {
        self.member_size
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    /// Is this a subfamily of `other`?
    pub fn subset_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Every two members share an element.
    pub fn is_intersecting(&self) -> bool {
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                if a & b == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Maximum degree: the largest number of members covering one element.
    pub fn max_degree(&self) -> usize {
        (1..=self.ambient_n)
            .map(|e| self.members.iter().filter(|&&m| mask::contains(m, e)).count())
            .max()
            .unwrap_or(0)
    }
}

/// An ordered, duplicate-free family of signed sets sharing one ambient
/// space, kept in the canonical (plus-mask, minus-mask) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedFamily {
    ambient: Params,
    members: Vec<SignedSet>,
}

impl SignedFamily {
    pub fn new(ambient: Params, mut members: Vec<SignedSet>) -> Result<Self> {
        for m in &members {
            if m.ambient() != ambient {
                return param_err(format!(
                    "member ambient {} differs from family ambient {}",
                    m.ambient(),
                    ambient
                ));
            }
        }
        members.sort_unstable_by_key(|m| m.key());
        members.dedup();
        Ok(SignedFamily { ambient, members })
    }

    pub fn empty(ambient: Params) -> Self {
        SignedFamily { ambient, members: Vec::new() }
    }

    pub fn ambient(&self) -> Params {
        self.ambient
    }

    pub fn members(&self) -> &[SignedSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &SignedSet) -> bool {
        self.members.binary_search_by_key(&v.key(), |m| m.key()).is_ok()
    }

    /// No two distinct members attain the minimum scalar product -2l.
    ///
    /// The -2l threshold is used unconditionally; it is the true minimum
    /// over the ambient space only when n >= 2k, and callers verifying
    /// theorems must enforce that range themselves.
    pub fn is_intersecting(&self) -> bool {
        let floor = self.ambient.min_product();
        for (i, v) in self.members.iter().enumerate() {
            for w in &self.members[i + 1..] {
                if scalar_product_unchecked(v, w) == floor {
                    return false;
                }
            }
        }
        true
    }

    /// Minimum pairwise scalar product over unordered distinct pairs, or
    /// `None` for families with fewer than two members.
    pub fn min_pairwise_product(&self) -> Option<i32> {
        let mut best: Option<i32> = None;
        for (i, v) in self.members.iter().enumerate() {
            for w in &self.members[i + 1..] {
                let p = scalar_product_unchecked(v, w);
                best = Some(best.map_or(p, |b| b.min(p)));
            }
        }
        best
    }
}

/// The number of vectors in the full space for `p`, checked for overflow.
pub fn space_size(p: Params) -> Result<u64> {
    let c1 = try_binomial(p.n() as u64, p.k() as u64);
    let c2 = try_binomial((p.n() - p.k()) as u64, p.l() as u64);
    match (c1, c2) {
        (Some(a), Some(b)) => a
            .checked_mul(b)
            .ok_or_else(|| crate::error::Error::Size(format!("|V{p}| overflows u64"))),
        _ => size_err(format!("|V{p}| overflows u64")),
    }
}

/// All vectors with the signature given by `p`, in canonical order.
pub fn all_vectors(p: Params) -> Result<SignedFamily> {
    let count = space_size(p)?;
    if count > (1u64 << 40) {
        return size_err(format!("|V{p}| = {count} is too large to materialize"));
    }
    let ground = mask::full_mask(p.n());
    let mut members = Vec::with_capacity(count as usize);
    for plus in mask::k_subsets(p.n(), p.k()) {
        for minus in mask::k_subsets_of(ground & !plus, p.l()) {
            members.push(SignedSet::new(p, plus, minus)?);
        }
    }
    debug_assert_eq!(members.len() as u64, count);
    // plus masks ascend in the outer loop and minus masks in the inner one,
    // so the result is already in canonical order
    Ok(SignedFamily { ambient: p, members })
}
