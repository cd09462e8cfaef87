use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Construction parameters for the topology D_{k,n}: recursion depth `k`
/// (k = 0 is the degenerate complete graph K_n) and `n` servers per smallest
/// unit (n >= 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub k: u32,
    pub n: u32,
}

impl Params {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::parameter(format!("n must be at least 2, got {n}")));
        }
        Ok(Params { k, n })
    }

    /// Vertex counts t_0 .. t_k, where t_0 = n and t_j = t_{j-1} * (t_{j-1} + 1).
    /// Unbounded integers: t grows doubly exponentially (t_6 at n = 2 already
    /// exceeds u64).
    pub fn level_sizes(&self) -> Vec<BigUint> {
        let mut sizes = Vec::with_capacity(self.k as usize + 1);
        let mut t = BigUint::from(self.n);
        sizes.push(t.clone());
        for _ in 0..self.k {
            t = &t * (&t + BigUint::one());
            sizes.push(t.clone());
        }
        sizes
    }

    /// t_{k,n}, the number of vertices of D_{k,n}.
    pub fn vertex_count(&self) -> BigUint {
        self.level_sizes().pop().expect("level_sizes is never empty")
    }

    /// Every vertex of D_{k,n} has degree (n - 1) + k.
    pub fn degree(&self) -> u32 {
        self.n - 1 + self.k
    }
}

/// Convenience for test literals.
#[cfg(test)]
pub(crate) fn big(v: u64) -> BigUint {
    BigUint::from(v)
}
