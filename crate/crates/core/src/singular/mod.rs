//! Singular points: ADE types, local invariants at explicit points, and the
//! global census.

pub mod census;
pub mod local;
mod root;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hompoly::LinearChange;
use crate::scalar::{rational, Rational};

/// Simple singularity types plus a catch-all for everything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AdeType {
    A(u32),
    D(u32),
    E(u32),
    NotSimple,
}

impl AdeType {
    pub fn is_simple(&self) -> bool {
        !matches!(self, AdeType::NotSimple)
    }

    /// The subscript, which equals the Milnor and Tjurina numbers for ADE types.
    pub fn index(&self) -> Option<u32> {
        match *self {
            AdeType::A(k) | AdeType::D(k) | AdeType::E(k) => Some(k),
            AdeType::NotSimple => None,
        }
    }

    pub fn multiplicity(&self) -> Option<u32> {
        match self {
            AdeType::A(_) => Some(2),
            AdeType::D(_) | AdeType::E(_) => Some(3),
            AdeType::NotSimple => None,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(k) => write!(f, "A{k}"),
            AdeType::D(k) => write!(f, "D{k}"),
            AdeType::E(k) => write!(f, "E{k}"),
            AdeType::NotSimple => f.write_str("NotSimple"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown singularity type `{s}`"));
        if s == "NotSimple" {
            return Ok(AdeType::NotSimple);
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        let k: u32 = tail.parse().map_err(|_| bad())?;
        match head {
            "A" if k >= 1 => Ok(AdeType::A(k)),
            "D" if k >= 4 => Ok(AdeType::D(k)),
            "E" if (6..=8).contains(&k) => Ok(AdeType::E(k)),
            _ => Err(bad()),
        }
    }
}

/// Arnold exponent `c0 = w1 + w2` of a simple singularity.
pub fn arnold_c0(t: AdeType) -> Result<Rational> {
    let r = |a: i64, b: i64| rational(a, b).expect("nonzero denominator");
    match t {
        AdeType::A(k) => Ok(r(1, 2) + r(1, k as i64 + 1)),
        AdeType::D(k) => Ok(r(k as i64, 2 * (k as i64 - 1))),
        AdeType::E(6) => Ok(r(7, 12)),
        AdeType::E(7) => Ok(r(5, 9)),
        AdeType::E(8) => Ok(r(8, 15)),
        _ => Err(Error::NotSimple),
    }
}

/// Deterministic stream of coordinate changes with entries in `[-3, 3]`.
pub(crate) fn generic_changes(seed: u64) -> impl Iterator<Item = LinearChange> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::from_fn(move || loop {
        let m: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-3..=3)));
        if let Ok(lc) = LinearChange::from_ints(m) {
            return Some(lc);
        }
    })
}

/// Deterministic stream of invertible `2 x 2` integer matrices.
pub(crate) fn generic_plane_changes(seed: u64) -> impl Iterator<Item = [[i64; 2]; 2]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::from_fn(move || loop {
        let m: [[i64; 2]; 2] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-3..=3)));
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0 {
            return Some(m);
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arnold_exponents() {
        assert_eq!(arnold_c0(AdeType::E(6)).unwrap(), rational(7, 12).unwrap());
        assert_eq!(arnold_c0(AdeType::A(1)).unwrap(), rational(1, 1).unwrap());
        assert_eq!(arnold_c0(AdeType::D(4)).unwrap(), rational(2, 3).unwrap());
        assert_eq!(arnold_c0(AdeType::NotSimple), Err(Error::NotSimple));
    }

    #[test]
    fn type_names_round_trip() {
        for t in [AdeType::A(7), AdeType::D(10), AdeType::E(7), AdeType::NotSimple] {
            assert_eq!(t.to_string().parse::<AdeType>().unwrap(), t);
        }
        assert!("D3".parse::<AdeType>().is_err());
    }
}
