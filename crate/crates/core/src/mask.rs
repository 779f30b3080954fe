//! Fixed-width bit masks over the ground set [n] = {1, ..., n}.
//!
//! Element i (1-based) corresponds to bit i-1, so the numeric order of masks
//! is the colex order of the underlying sets. The ground set is capped at
//! [`MAX_GROUND`] elements so every set fits one machine word.

/// A subset of [n] as a bit mask; element i <-> bit i-1.
pub type Mask = u64;

/// Largest supported ground-set size (one mask per word).
pub const MAX_GROUND: u32 = 64;

/// Mask of the full ground set [n].
pub fn full_mask(n: u32) -> Mask {
    debug_assert!(n <= MAX_GROUND);
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Mask with the single element `e` (1-based).
pub fn singleton(e: u32) -> Mask {
    1u64 << (e - 1)
}

/// Does `mask` contain element `e` (1-based)?
pub fn contains(mask: Mask, e: u32) -> bool {
    mask & singleton(e) != 0
}

/// Build a mask from 1-based elements.
pub fn from_elems(elems: &[u32]) -> Mask {
    elems.iter().fold(0, |m, &e| m | singleton(e))
}

/// 1-based elements of `mask` in ascending order.
pub fn to_elems(mask: Mask) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() + 1);
        m &= m - 1;
    }
    out
}

/// Smallest element of a nonempty mask (1-based).
pub fn min_elem(mask: Mask) -> u32 {
    debug_assert!(mask != 0);
    mask.trailing_zeros() + 1
}

/// Largest element of a nonempty mask (1-based).
pub fn max_elem(mask: Mask) -> u32 {
    debug_assert!(mask != 0);
    64 - mask.leading_zeros()
}

/// All k-element subsets of [n] in ascending numeric (colex) order.
pub fn k_subsets(n: u32, k: u32) -> Vec<Mask> {
    debug_assert!(n <= MAX_GROUND);
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut cur: Mask = (1u64 << k) - 1;
    let top = full_mask(n);
    loop {
        out.push(cur);
        // Gosper's hack: next mask with the same popcount.
        let low = cur & cur.wrapping_neg();
        let Some(carry) = cur.checked_add(low) else { break };
        let next = (((cur ^ carry) >> 2) / low) | carry;
        if next > top {
            break;
        }
        cur = next;
    }
    out
}

/// All k-subsets of the set given by `support`, ascending by mask value.
pub fn k_subsets_of(support: Mask, k: u32) -> Vec<Mask> {
    let elems = to_elems(support);
    let w = elems.len() as u32;
    k_subsets(w, k)
        .into_iter()
        .map(|idx| to_elems(idx).iter().map(|&i| singleton(elems[i as usize - 1])).fold(0, |a, b| a | b))
        .collect()
}

/// All k-subsets of [n] in the element-wise lexicographic order
/// ({1,2,..,k}, {1,..,k-1,k+1}, ...), i.e. ordered by smallest differing
/// element.
pub fn k_subsets_lex(n: u32, k: u32) -> Vec<Mask> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let k = k as usize;
    let mut out = Vec::new();
    let mut c: Vec<u32> = (1..=k as u32).collect();
    loop {
        out.push(from_elems(&c));
        // advance to the next combination in lex order
        let mut i = k;
        while i > 0 && c[i - 1] == n - (k - i) as u32 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        c[i - 1] += 1;
        for j in i..k {
            c[j] = c[j - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom::binom;

    #[test]
    fn elems_roundtrip() {
        let m = from_elems(&[1, 3, 7]);
        assert_eq!(m, 0b100_0101);
        assert_eq!(to_elems(m), vec![1, 3, 7]);
        assert_eq!(min_elem(m), 1);
        assert_eq!(max_elem(m), 7);
    }

    #[test]
    fn subset_counts() {
        for n in 0..=10u32 {
            for k in 0..=n {
                let colex = k_subsets(n, k);
                let lex = k_subsets_lex(n, k);
                assert_eq!(colex.len() as u64, binom(n as i64, k as i64));
                assert_eq!(lex.len(), colex.len());
                let mut sorted = lex.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, colex, "same sets in both orders (n={n},k={k})");
            }
        }
    }

    #[test]
    fn colex_order_is_ascending() {
        let masks = k_subsets(8, 3);
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn lex_order_first_blocks() {
        assert_eq!(
            k_subsets_lex(4, 2),
            vec![
                from_elems(&[1, 2]),
                from_elems(&[1, 3]),
                from_elems(&[1, 4]),
                from_elems(&[2, 3]),
                from_elems(&[2, 4]),
                from_elems(&[3, 4]),
            ]
        );
    }

    #[test]
    fn subsets_of_support_stay_inside() {
        let support = from_elems(&[2, 4, 5, 9]);
        let subs = k_subsets_of(support, 2);
        assert_eq!(subs.len(), 6);
        assert!(subs.iter().all(|&s| s & !support == 0 && s.count_ones() == 2));
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }
}
