use crate::error::{param_err, size_err, Result};
use crate::mask::MAX_GROUND;

/// Ambient parameters of a signed-set space: ground-set size `n`, number of
/// +1 coordinates `k`, number of -1 coordinates `l`.
///
/// Valid parameters satisfy n >= k + l, k >= l >= 0, k >= 1, n <= 64.
/// k = 1 is accepted here; the theorem verifiers reject it themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    n: u32,
    k: u32,
    l: u32,
}

impl Params {
    pub fn new(n: u32, k: u32, l: u32) -> Result<Self> {
        if n > MAX_GROUND {
            return size_err(format!("n = {n} exceeds the ground-set cap {MAX_GROUND}"));
        }
        if k == 0 {
            return param_err("k must be at least 1");
        }
        if l > k {
            return param_err(format!("l = {l} exceeds k = {k}"));
        }
        if k + l > n {
            return param_err(format!("n = {n} is smaller than k + l = {}", k + l));
        }
        Ok(Params { n, k, l })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// The minimum scalar product attainable in this space when n >= 2k.
    pub fn min_product(&self) -> i32 {
        -2 * self.l as i32
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.k, self.l)
    }
}
