//! The three intersecting-family constructions for l = 1 and the lift
//! operation connecting them.

use crate::binom::binom;
use crate::error::{param_err, Result};
use crate::family::{all_vectors, SignedFamily};
use crate::mask::{self, Mask};
use crate::params::Params;
use crate::signed::SignedSet;

fn require_l1_range(p: Params) -> Result<()> {
    if p.l() != 1 {
        return param_err(format!("construction requires l = 1, got {p}"));
    }
    if p.n() < 2 * p.k() {
        return param_err(format!("construction requires n >= 2k, got {p}"));
    }
    Ok(())
}

/// The star-type family: all vectors with +1 on the first coordinate.
/// Size k * C(n-1, k).
pub fn star_family(p: Params) -> Result<SignedFamily> {
    require_l1_range(p)?;
    let members = all_vectors(p)?
        .members()
        .iter()
        .filter(|v| mask::contains(v.plus(), 1))
        .copied()
        .collect();
    SignedFamily::new(p, members)
}

/// The family of all vectors whose last nonzero coordinate is -1, i.e. the
/// single minus element exceeds every plus element. Size C(n, k+1).
pub fn trailing_minus_family(p: Params) -> Result<SignedFamily> {
    require_l1_range(p)?;
    let members = all_vectors(p)?
        .members()
        .iter()
        .filter(|v| mask::min_elem(v.minus()) > mask::max_elem(v.plus()))
        .copied()
        .collect();
    SignedFamily::new(p, members)
}

/// Extend a family over [n] to one over [n+1]: keep every member with a 0
/// appended, and add every vector with -1 on coordinate n+1. Adds exactly
/// C(n, k) members and preserves the intersecting property.
pub fn lift_family(fam: &SignedFamily) -> Result<SignedFamily> {
    let p = fam.ambient();
    if p.l() != 1 {
        return param_err(format!("lift requires l = 1, got {p}"));
    }
    let q = Params::new(p.n() + 1, p.k(), 1)?;
    let mut members: Vec<SignedSet> = Vec::with_capacity(fam.len() + binom(p.n() as i64, p.k() as i64) as usize);
    for v in fam.members() {
        members.push(SignedSet::new(q, v.plus(), v.minus())?);
    }
    let tail: Mask = mask::singleton(q.n());
    for plus in mask::k_subsets(p.n(), p.k()) {
        members.push(SignedSet::new(q, plus, tail)?);
    }
    SignedFamily::new(q, members)
}

/// Which ground-set size the composite construction starts lifting from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LiftPivot {
    /// Lift from n = k^2 (the canonical choice).
    #[default]
    KSquared,
    /// Lift from n = k^2 + 1; yields a different family of the same size.
    KSquaredPlusOne,
}

impl LiftPivot {
    fn threshold(self, k: u32) -> u32 {
        match self {
            LiftPivot::KSquared => k * k,
            LiftPivot::KSquaredPlusOne => k * k + 1,
        }
    }
}

/// The composite construction: the star family up to the pivot ground-set
/// size, then repeated lifts beyond it.
pub fn composite_family(p: Params, pivot: LiftPivot) -> Result<SignedFamily> {
    require_l1_range(p)?;
    let threshold = pivot.threshold(p.k());
    if p.n() <= threshold {
        return star_family(p);
    }
    let mut fam = star_family(Params::new(threshold, p.k(), 1)?)?;
    for _ in threshold..p.n() {
        fam = lift_family(&fam)?;
    }
    Ok(fam)
}

/// Size of the composite family, by the closed formula.
pub fn composite_size(n: u32, k: u32) -> u64 {
    let (n, k) = (n as i64, k as i64);
    let kk = k * k;
    if n <= kk {
        k as u64 * binom(n - 1, k)
    } else {
        // e(k^2) - p(k^2) + p(n) with e(m) = k*C(m-1,k), p(m) = C(m,k+1)
        k as u64 * binom(kk - 1, k) - binom(kk, k + 1) + binom(n, k + 1)
    }
}

/// Per-step growth of the two base constructions when n grows by one:
/// (k*C(n-1,k-1), C(n,k)). The first dominates iff n <= k^2, with equality
/// exactly at n = k^2.
pub fn growth_deltas(k: u32, n: u32) -> (u64, u64) {
    let (n, k) = (n as i64, k as i64);
    (k as u64 * binom(n - 1, k - 1), binom(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, k: u32) -> Params {
        Params::new(n, k, 1).unwrap()
    }

    #[test]
    fn star_sizes() {
        assert_eq!(star_family(p(4, 2)).unwrap().len(), 6);
        assert_eq!(star_family(p(5, 2)).unwrap().len(), 12);
        assert_eq!(star_family(p(6, 3)).unwrap().len(), 30);
    }

    #[test]
    fn star_members_and_intersection() {
        let fam = star_family(p(5, 2)).unwrap();
        assert!(fam.members().iter().all(|v| mask::contains(v.plus(), 1)));
        assert!(fam.is_intersecting());
    }

    #[test]
    fn trailing_minus_sizes() {
        assert_eq!(trailing_minus_family(p(4, 2)).unwrap().len(), 4);
        assert_eq!(trailing_minus_family(p(5, 2)).unwrap().len(), 10);
        assert_eq!(trailing_minus_family(p(6, 3)).unwrap().len(), 15);
        assert!(trailing_minus_family(p(6, 3)).unwrap().is_intersecting());
    }

    #[test]
    fn lift_adds_choose_n_k() {
        let base = star_family(p(4, 2)).unwrap();
        let lifted = lift_family(&base).unwrap();
        assert_eq!(lifted.ambient(), p(5, 2));
        assert_eq!(lifted.len(), 6 + 6);
        assert!(lifted.is_intersecting());

        let twice = lift_family(&lifted).unwrap();
        assert_eq!(twice.len(), 12 + 10);
        assert!(twice.is_intersecting());

        let from_empty = lift_family(&SignedFamily::empty(p(4, 2))).unwrap();
        assert_eq!(from_empty.len(), 6);
    }

    #[test]
    fn composite_matches_star_below_threshold_and_lifts_above() {
        assert_eq!(
            composite_family(p(4, 2), LiftPivot::KSquared).unwrap(),
            star_family(p(4, 2)).unwrap()
        );
        assert_eq!(composite_family(p(5, 2), LiftPivot::KSquared).unwrap().len(), 12);
        assert_eq!(composite_family(p(6, 2), LiftPivot::KSquared).unwrap().len(), 22);
    }

    #[test]
    fn composite_sizes_follow_the_closed_formula() {
        for (n, k) in [(4, 2), (5, 2), (6, 2), (7, 2), (8, 2), (6, 3), (7, 3), (8, 3), (9, 3), (10, 3), (11, 3)] {
            let fam = composite_family(p(n, k), LiftPivot::KSquared).unwrap();
            assert_eq!(fam.len() as u64, composite_size(n, k), "c({n},{k},1)");
            assert!(fam.is_intersecting(), "c({n},{k},1) intersecting");
        }
    }

    #[test]
    fn pivot_variants_have_equal_cardinality() {
        for (n, k) in [(5, 2), (6, 2), (7, 2), (8, 2), (10, 3), (11, 3)] {
            let a = composite_family(p(n, k), LiftPivot::KSquared).unwrap();
            let b = composite_family(p(n, k), LiftPivot::KSquaredPlusOne).unwrap();
            assert_eq!(a.len(), b.len(), "variants at ({n},{k})");
            assert!(b.is_intersecting());
        }
        // Distinct families once the lift actually starts at different sizes.
        let a = composite_family(p(6, 2), LiftPivot::KSquared).unwrap();
        let b = composite_family(p(6, 2), LiftPivot::KSquaredPlusOne).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn composite_growth_above_threshold() {
        for n in [5u32, 6, 7, 8] {
            let big = composite_size(n, 2);
            let small = composite_size(n - 1, 2);
            assert_eq!(big - small, binom(n as i64 - 1, 2), "delta at n={n}");
        }
    }

    #[test]
    fn growth_delta_comparison_flips_at_k_squared() {
        assert_eq!(growth_deltas(2, 4), (6, 6));
        assert_eq!(growth_deltas(2, 3), (4, 3));
        assert_eq!(growth_deltas(2, 5), (8, 10));
        for k in [2u32, 3, 4] {
            for n in 2 * k..=k * k + 2 {
                let (e_delta, p_delta) = growth_deltas(k, n);
                assert_eq!(e_delta >= p_delta, n <= k * k, "k={k} n={n}");
                assert_eq!(e_delta == p_delta, n == k * k, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn preconditions_are_enforced() {
        assert!(star_family(Params::new(3, 2, 1).unwrap()).is_err());
        assert!(star_family(Params::new(4, 2, 0).unwrap()).is_err());
        assert!(trailing_minus_family(Params::new(3, 2, 1).unwrap()).is_err());
    }
}
