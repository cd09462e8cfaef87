use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::Params;

/// A vertex of D_{k,n}, written most-significant-first: (a_k, ..., a_1, a_0).
/// a_0 picks the server inside the smallest unit (0 <= a_0 < n); a_j for
/// j >= 1 picks the level-j copy (0 <= a_j <= t_{j-1}, upper bound inclusive
/// because level j joins t_{j-1} + 1 copies).
///
/// The text form is comma-separated decimal with no spaces, e.g. `3,1,1`.
/// Lexicographic order on coordinates coincides with uid order, so the
/// derived `Ord` sorts labels exactly as their uids do.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel {
    coords: Vec<BigUint>,
}

impl VertexLabel {
    /// Wraps raw coordinates. Use [`VertexLabel::validate`] to check them
    /// against concrete parameters.
    pub fn new(coords: Vec<BigUint>) -> Self {
        VertexLabel { coords }
    }

    /// Builds a label from small coordinates, most significant first.
    pub fn from_u64s(coords: &[u64]) -> Self {
        VertexLabel { coords: coords.iter().map(|&c| BigUint::from(c)).collect() }
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.coords
    }

    /// Number of coordinates minus one; a label of D_{k,n} has level k.
    pub fn level(&self) -> usize {
        self.coords.len().saturating_sub(1)
    }

    /// Coordinate a_j (level-indexed, so j = 0 is the least significant).
    pub fn coord_at_level(&self, j: usize) -> &BigUint {
        &self.coords[self.coords.len() - 1 - j]
    }

    /// Checks shape and per-coordinate bounds against `params`. The reported
    /// position counts from the most significant coordinate, matching the
    /// printed order.
    pub fn validate(&self, params: &Params) -> Result<()> {
        let want = params.k as usize + 1;
        if self.coords.len() != want {
            return Err(Error::parameter(format!(
                "label has {} coordinates, D_{{{},{}}} needs {}",
                self.coords.len(),
                params.k,
                params.n,
                want
            )));
        }
        let sizes = params.level_sizes();
        for (pos, coord) in self.coords.iter().enumerate() {
            let j = params.k as usize - pos;
            if j == 0 {
                if *coord >= BigUint::from(params.n) {
                    return Err(Error::label(
                        pos,
                        format!("is {}, server index must be below n = {}", coord, params.n),
                    ));
                }
            } else if *coord > sizes[j - 1] {
                return Err(Error::label(
                    pos,
                    format!("is {}, level-{} copy index must not exceed {}", coord, j, sizes[j - 1]),
                ));
            }
        }
        Ok(())
    }

    /// uid of the level-j suffix (a_j, ..., a_0): a_0 + sum of a_l * t_{l-1}
    /// for l in 1..=j. Numbers vertices inside one level-j unit 0..t_j.
    pub fn uid(&self, j: u32, params: &Params) -> Result<BigUint> {
        if j > params.k || self.coords.len() != params.k as usize + 1 {
            return Err(Error::parameter(format!(
                "uid level {} out of range for a {}-coordinate label of D_{{{},{}}}",
                j,
                self.coords.len(),
                params.k,
                params.n
            )));
        }
        let sizes = params.level_sizes();
        let mut acc = self.coord_at_level(0).clone();
        for l in 1..=j as usize {
            acc += self.coord_at_level(l) * &sizes[l - 1];
        }
        Ok(acc)
    }

    /// uid of the whole label, i.e. its index in 0..t_k.
    pub fn uid_full(&self, params: &Params) -> Result<BigUint> {
        self.uid(params.k, params)
    }

    /// Inverse of [`VertexLabel::uid`]: the unique level-j label with the
    /// given uid, by mixed-radix decomposition (divide by t_{l-1} from the
    /// most significant digit down). Requires m < t_j.
    pub fn suffix_of_uid(m: &BigUint, j: u32, params: &Params) -> Result<VertexLabel> {
        if j > params.k {
            return Err(Error::parameter(format!(
                "suffix level {} exceeds k = {}",
                j, params.k
            )));
        }
        let sizes = params.level_sizes();
        if *m >= sizes[j as usize] {
            return Err(Error::parameter(format!(
                "uid {} out of range, level-{} units hold {} vertices",
                m, j, sizes[j as usize]
            )));
        }
        let mut rest = m.clone();
        let mut coords = Vec::with_capacity(j as usize + 1);
        for l in (1..=j as usize).rev() {
            let (q, r) = (&rest / &sizes[l - 1], &rest % &sizes[l - 1]);
            coords.push(q);
            rest = r;
        }
        coords.push(rest);
        Ok(VertexLabel { coords })
    }

    /// The unique vertex of D_{k,n} with uid m, for m < t_k.
    pub fn from_uid(m: &BigUint, params: &Params) -> Result<VertexLabel> {
        Self::suffix_of_uid(m, params.k, params)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    /// Parses the text form. Every comma-separated token must be a bare
    /// decimal integer: no spaces, signs, or empty tokens.
    fn from_str(s: &str) -> Result<VertexLabel> {
        if s.is_empty() {
            return Err(Error::parameter("empty label".to_string()));
        }
        let mut coords = Vec::new();
        for (pos, token) in s.split(',').enumerate() {
            if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::label(
                    pos,
                    format!("token {token:?} is not a decimal integer"),
                ));
            }
            let value = BigUint::from_str(token)
                .map_err(|e| Error::label(pos, format!("unparseable token {token:?}: {e}")))?;
            coords.push(value);
        }
        Ok(VertexLabel { coords })
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// True when every coordinate is zero; the all-zero label is a convenient
/// canonical vertex in several witness constructions.
pub fn is_all_zero(label: &VertexLabel) -> bool {
    label.coords().iter().all(Zero::is_zero)
}
