//! Deterministic random family generation for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::family::{SetFamily, SignedFamily};
use crate::mask;
use crate::signed::scalar_product_unchecked;

/// A seeded RNG; the same seed always yields the same stream.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random subfamily of `space` with at most `max_size` members.
pub fn random_subfamily(space: &SignedFamily, max_size: usize, rng: &mut impl Rng) -> SignedFamily {
    let size = rng.gen_range(0..=max_size.min(space.len()));
    let mut idx: Vec<usize> = (0..space.len()).collect();
    idx.shuffle(rng);
    let members = idx[..size].iter().map(|&i| space.members()[i]).collect();
    SignedFamily::new(space.ambient(), members).expect("members share the space ambient")
}

/// A random intersecting subfamily: members are tried in shuffled order and
/// kept while the family stays intersecting.
pub fn random_intersecting_subfamily(
    space: &SignedFamily,
    max_size: usize,
    rng: &mut impl Rng,
) -> SignedFamily {
    let floor = space.ambient().min_product();
    let mut idx: Vec<usize> = (0..space.len()).collect();
    idx.shuffle(rng);
    let mut members = Vec::new();
    for i in idx {
        if members.len() >= max_size {
            break;
        }
        let cand = space.members()[i];
        if members.iter().all(|m| scalar_product_unchecked(m, &cand) != floor) {
            members.push(cand);
        }
    }
    SignedFamily::new(space.ambient(), members).expect("members share the space ambient")
}

/// A random cross-intersecting pair on [n] with member sizes a and b:
/// a random a-family plus a random b-family repaired by dropping members
/// that fail the cross condition.
pub fn random_cross_pair(
    n: u32,
    a: u32,
    b: u32,
    max_size: usize,
    rng: &mut impl Rng,
) -> (SetFamily, SetFamily) {
    let pick = |k: u32, rng: &mut dyn rand::RngCore| -> Vec<mask::Mask> {
        let mut all = mask::k_subsets(n, k);
        all.shuffle(rng);
        let size = rng.gen_range(0..=max_size.min(all.len()));
        all.truncate(size);
        all
    };
    let a_members = pick(a, rng);
    let b_members: Vec<mask::Mask> = pick(b, rng)
        .into_iter()
        .filter(|&bm| a_members.iter().all(|&am| am & bm != 0))
        .collect();
    (
        SetFamily::new(n, a, a_members).expect("valid a-sets"),
        SetFamily::new(n, b, b_members).expect("valid b-sets"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::all_vectors;
    use crate::lexshadow::cross_intersecting;
    use crate::params::Params;

    #[test]
    fn seeded_generation_is_reproducible() {
        let p = Params::new(5, 2, 1).unwrap();
        let space = all_vectors(p).unwrap();
        let a = random_subfamily(&space, 10, &mut rng(7));
        let b = random_subfamily(&space, 10, &mut rng(7));
        assert_eq!(a, b);
    }

    #[test]
    fn intersecting_sampler_output_is_intersecting() {
        let p = Params::new(6, 2, 1).unwrap();
        let space = all_vectors(p).unwrap();
        let mut r = rng(11);
        for _ in 0..50 {
            assert!(random_intersecting_subfamily(&space, 12, &mut r).is_intersecting());
        }
    }

    #[test]
    fn cross_pair_sampler_output_is_cross_intersecting() {
        let mut r = rng(13);
        for _ in 0..50 {
            let (a, b) = random_cross_pair(7, 3, 3, 15, &mut r);
            assert!(cross_intersecting(&a, &b));
        }
    }
}
