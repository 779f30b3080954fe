//! Lexicographic order machinery, shadows, cyclic intervals, and the
//! structure of maximal cross-intersecting pairs.
//!
//! The order on sets: A < B iff B is a subset of A or the minimal element
//! of A \ B is smaller than the minimal element of B \ A. On equal-size
//! sets this is the element-wise lexicographic order; `L(m, k)` denotes the
//! initial segment of the first m k-sets, and `L(S, t)` all t-sets T with
//! T < S. Supersets precede subsets, so in particular A < A.

use crate::binom::binom;
use crate::error::{param_err, Result};
use crate::family::SetFamily;
use crate::mask::{self, Mask};
use crate::report::{BoundReport, Witness};

/// A < B in the set order above. Works across different sizes.
pub fn lex_less(a: Mask, b: Mask) -> bool {
    if b & !a == 0 {
        return true; // B subset of A, including A = B
    }
    let only_a = a & !b;
    if only_a == 0 {
        return false;
    }
    mask::min_elem(only_a) < mask::min_elem(b & !a)
}

/// An initial segment of the k-subsets of [n]: the `count` earliest sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexSegment {
    pub ambient_n: u32,
    pub member_size: u32,
    pub count: u64,
}

impl LexSegment {
    pub fn new(ambient_n: u32, member_size: u32, count: u64) -> Result<Self> {
        let total = binom(ambient_n as i64, member_size as i64);
        if count > total {
            return param_err(format!(
                "segment of {count} sets exceeds C({ambient_n},{member_size}) = {total}"
            ));
        }
        Ok(LexSegment { ambient_n, member_size, count })
    }

    pub fn expand(&self) -> SetFamily {
        let members: Vec<Mask> = mask::k_subsets_lex(self.ambient_n, self.member_size)
            .into_iter()
            .take(self.count as usize)
            .collect();
        SetFamily::new(self.ambient_n, self.member_size, members).expect("segment members are valid")
    }
}

/// The first m k-subsets of [n].
pub fn lex_segment(n: u32, k: u32, m: u64) -> Result<SetFamily> {
    Ok(LexSegment::new(n, k, m)?.expand())
}

/// All t-subsets T of [n] with T < S.
pub fn lex_segment_of(n: u32, s: Mask, t: u32) -> Result<SetFamily> {
    if s == 0 {
        return param_err("generator set must be nonempty");
    }
    if mask::max_elem(s) > n {
        return param_err("generator set exceeds the ground set");
    }
    let members: Vec<Mask> = mask::k_subsets(n, t).into_iter().filter(|&m| lex_less(m, s)).collect();
    SetFamily::new(n, t, members)
}

/// Number of t-sets T with T < S; the size of [`lex_segment_of`].
pub fn lex_segment_of_len(n: u32, s: Mask, t: u32) -> u64 {
    mask::k_subsets(n, t).into_iter().filter(|&m| lex_less(m, s)).count() as u64
}

/// The sets obtained by deleting `depth` elements in every possible way
/// from members of `fam`, deduplicated.
pub fn shadow(fam: &SetFamily, depth: u32) -> Result<SetFamily> {
    if depth >= fam.member_size() && !(depth == 0 && fam.member_size() == 0) {
        return param_err(format!(
            "shadow depth {depth} must be smaller than member size {}",
            fam.member_size()
        ));
    }
    let mut cur = fam.clone();
    for _ in 0..depth {
        let mut next: Vec<Mask> = Vec::new();
        for &m in cur.members() {
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                next.push(m & !bit);
                rest &= rest - 1;
            }
        }
        cur = SetFamily::new(fam.ambient_n(), cur.member_size() - 1, next)?;
    }
    Ok(cur)
}

/// A permutation of [n] read cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPermutation {
    order: Vec<u32>,
}

impl CyclicPermutation {
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let n = order.len() as u32;
        if n == 0 || n > mask::MAX_GROUND {
            return param_err("permutation length out of range");
        }
        let seen = order.iter().fold(0u64, |m, &e| {
            if e >= 1 && e <= n {
                m | mask::singleton(e)
            } else {
                m
            }
        });
        if seen != mask::full_mask(n) {
            return param_err("not a permutation of [n]");
        }
        Ok(CyclicPermutation { order })
    }

    pub fn identity(n: u32) -> Self {
        CyclicPermutation { order: (1..=n).collect() }
    }

    pub fn n(&self) -> u32 {
        self.order.len() as u32
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// The cyclic window of `k` consecutive entries starting at `start`.
    fn window(&self, start: usize, k: u32) -> Mask {
        let n = self.order.len();
        (0..k as usize).fold(0, |m, d| m | mask::singleton(self.order[(start + d) % n]))
    }
}

/// The n cyclically consecutive k-windows of the permutation. Requires
/// k < n; at k = n the windows coincide and the count degenerates.
pub fn cyclic_intervals(pi: &CyclicPermutation, k: u32) -> Result<SetFamily> {
    if k == 0 || k >= pi.n() {
        return param_err(format!("interval length {k} must satisfy 0 < k < n = {}", pi.n()));
    }
    let members: Vec<Mask> = (0..pi.n() as usize).map(|s| pi.window(s, k)).collect();
    let fam = SetFamily::new(pi.n(), k, members)?;
    debug_assert_eq!(fam.len() as u32, pi.n());
    Ok(fam)
}

/// Check the interval-shadow inequality for a subfamily of the cyclic
/// k-windows: the depth-l shadow meets the (k-l)-windows in at least
/// min(|sub| + l, n) sets. The empty subfamily satisfies it vacuously.
pub fn interval_shadow_check(
    sub: &SetFamily,
    pi: &CyclicPermutation,
    depth: u32,
) -> Result<BoundReport> {
    let k = sub.member_size();
    let intervals = cyclic_intervals(pi, k)?;
    if !sub.subset_of(&intervals) {
        return param_err("subfamily is not contained in the cyclic intervals");
    }
    if sub.is_empty() {
        return Ok(BoundReport::le(0, 0, "empty-subfamily", None));
    }
    let lower_intervals = cyclic_intervals(pi, k - depth)?;
    let shade = shadow(sub, depth)?;
    let hit: Vec<Mask> = shade
        .members()
        .iter()
        .filter(|&&m| lower_intervals.contains(m))
        .copied()
        .collect();
    let lhs = hit.len() as u64;
    let rhs = (sub.len() as u64 + depth as u64).min(pi.n() as u64);
    let witness = SetFamily::new(pi.n(), k - depth, hit)?;
    // the inequality has the >= orientation, so report sides swapped
    Ok(BoundReport::le(rhs, lhs, "interval-shadow", Some(Witness::Sets(witness))))
}

/// Do S and T intersect strongly: for some j, S and T share exactly j
/// among [j] and jointly cover [j]?
pub fn strongly_intersect(s: Mask, t: Mask) -> bool {
    let common = s & t;
    if common == 0 {
        return false;
    }
    let j = mask::min_elem(common);
    let prefix = mask::full_mask(j);
    (s | t) & prefix == prefix
}

/// Does every member of `a` meet every member of `b`? Vacuously true when
/// either family is empty.
pub fn cross_intersecting(a: &SetFamily, b: &SetFamily) -> bool {
    a.members().iter().all(|&x| b.members().iter().all(|&y| x & y != 0))
}

/// Are the segments generated by P (at size a) and Q (at size b)
/// cross-intersecting? Equivalent to `strongly_intersect(P, Q)`, which is a
/// tested property.
pub fn lex_pair_cross(n: u32, p: Mask, a: u32, q: Mask, b: u32) -> Result<bool> {
    if p.count_ones() > a || q.count_ones() > b {
        return param_err("generator sets larger than the segment sizes");
    }
    if a + b > n {
        return param_err(format!("requires a + b <= n, got {a} + {b} > {n}"));
    }
    Ok(cross_intersecting(&lex_segment_of(n, p, a)?, &lex_segment_of(n, q, b)?))
}

/// Generator pairs of all maximal cross-intersecting segment pairs: all
/// (P, Q) sharing exactly their last element j and partitioning [j-1],
/// with |P| <= a, |Q| <= b. Ordered by (j, P-mask).
pub fn maximal_lex_pairs(n: u32, a: u32, b: u32) -> Result<Vec<(Mask, Mask)>> {
    if a == 0 || b == 0 {
        return param_err("segment sizes must be positive");
    }
    if a + b > n {
        return param_err(format!("requires a + b <= n, got {a} + {b} > {n}"));
    }
    let mut out = Vec::new();
    let jmax = (a + b - 1).min(n);
    for j in 1..=jmax {
        let below = mask::full_mask(j - 1);
        let pivot = mask::singleton(j);
        // P = P' + {j}, Q = ([j-1] \ P') + {j}; |P'| <= a-1 and |Q'| <= b-1
        let lo = (j as i32 - b as i32).max(0) as u32;
        let hi = (a - 1).min(j - 1);
        for size in lo..=hi {
            for p_rest in mask::k_subsets_of(below, size) {
                out.push((p_rest | pivot, (below & !p_rest) | pivot));
            }
        }
    }
    out.sort_by_key(|&(p, q)| (mask::max_elem(p), p, q));
    Ok(out)
}

/// F(X, not Y): members containing X and avoiding Y, with X removed.
pub fn restrict(fam: &SetFamily, x: Mask, y: Mask) -> Result<SetFamily> {
    if x & y != 0 {
        return param_err("restriction sets overlap");
    }
    let members: Vec<Mask> = fam
        .members()
        .iter()
        .filter(|&&m| x & !m == 0 && m & y == 0)
        .map(|&m| m & !x)
        .collect();
    SetFamily::new(fam.ambient_n(), fam.member_size() - x.count_ones(), members)
}

/// The 0/1 prefix of a generator set up to its pivot element: bit h is set
/// iff h+1 lies in the set. For generators of maximal pairs the last bit
/// is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncVec {
    bits: Vec<bool>,
}

impl TruncVec {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return param_err("truncated vector must be nonempty");
        }
        Ok(TruncVec { bits })
    }

    /// Prefix encoding of a nonempty set: length = max element.
    pub fn from_set(s: Mask) -> Result<Self> {
        if s == 0 {
            return param_err("cannot encode the empty set");
        }
        let len = mask::max_elem(s);
        Ok(TruncVec { bits: (1..=len).map(|e| mask::contains(s, e)).collect() })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The set of 1-positions.
    pub fn as_set(&self) -> Mask {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0, |m, (h, _)| m | mask::singleton(h as u32 + 1))
    }
}

/// Reduction at a 1,0 descent of v: given truncated vectors (w, v) with
/// (v_j, v_{j+1}) = (1, 0), produce the two candidate pairs
/// ((w_1..w_{j-1}, 1), (v_1..v_j)) and ((w_1..w_j, 1), (v_1..v_j, 1)).
/// The weighted segment sum of (w, v) never exceeds the larger of the two
/// reduced sums, for every positive weight.
pub fn descent_reduction(
    w: &TruncVec,
    v: &TruncVec,
    j: usize,
) -> Result<((TruncVec, TruncVec), (TruncVec, TruncVec))> {
    if j == 0 || j + 1 > v.len() || j > w.len() {
        return param_err(format!("position {j} out of range"));
    }
    if !(v.bits[j - 1] && !v.bits[j]) {
        return param_err(format!("expected pattern (1,0) at positions ({j}, {})", j + 1));
    }
    let v1 = TruncVec::new(v.bits[..j].to_vec())?;
    let mut w1_bits = w.bits[..j - 1].to_vec();
    w1_bits.push(true);
    let w1 = TruncVec::new(w1_bits)?;

    let mut v2_bits = v.bits[..j].to_vec();
    v2_bits.push(true);
    let v2 = TruncVec::new(v2_bits)?;
    let mut w2_bits = w.bits[..j].to_vec();
    w2_bits.push(true);
    let w2 = TruncVec::new(w2_bits)?;
    Ok(((w1, v1), (w2, v2)))
}

/// Reduction at a 1,1 plateau of v: given (w, v) with (v_j, v_{j+1}) =
/// (1, 1), produce the single candidate pair ((w_1..w_{j-1}, 1),
/// (v_1..v_j)). The weighted segment sum of (w, v) never exceeds
/// max(reduced sum, C(n, a)).
pub fn plateau_reduction(w: &TruncVec, v: &TruncVec, j: usize) -> Result<(TruncVec, TruncVec)> {
    if j == 0 || j + 1 > v.len() || j > w.len() {
        return param_err(format!("position {j} out of range"));
    }
    if !(v.bits[j - 1] && v.bits[j]) {
        return param_err(format!("expected pattern (1,1) at positions ({j}, {})", j + 1));
    }
    let v1 = TruncVec::new(v.bits[..j].to_vec())?;
    let mut w1_bits = w.bits[..j - 1].to_vec();
    w1_bits.push(true);
    let w1 = TruncVec::new(w1_bits)?;
    Ok((w1, v1))
}

/// Replace a cross-intersecting pair by the initial segments of the same
/// sizes; the output pair is cross-intersecting as well (tested, not
/// re-proved here).
pub fn hilton_compress(a: &SetFamily, b: &SetFamily) -> Result<(LexSegment, LexSegment)> {
    if !cross_intersecting(a, b) {
        return param_err("input families are not cross-intersecting");
    }
    if a.ambient_n() != b.ambient_n() {
        return param_err("families live on different ground sets");
    }
    Ok((
        LexSegment::new(a.ambient_n(), a.member_size(), a.len() as u64)?,
        LexSegment::new(b.ambient_n(), b.member_size(), b.len() as u64)?,
    ))
}
