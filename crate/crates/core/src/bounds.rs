//! Closed-form bounds: counts of `A_{2k+1}` and `E6` points, the Picard
//! bracket of the double cover, and the Arnold-exponent lower bound on `mdr`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

fn as_string<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn bigint_string<S: Serializer>(r: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub formula_id: String,
    pub inputs: BTreeMap<String, i64>,
    #[serde(serialize_with = "as_string")]
    pub value: Rational,
    #[serde(serialize_with = "bigint_string")]
    pub floor: BigInt,
    /// Catalog curve whose count reaches `floor`.
    pub attained_by: Option<String>,
}

impl BoundReport {
    fn new(id: &str, inputs: &[(&str, i64)], value: Rational, attained_by: Option<&str>) -> Self {
        BoundReport {
            formula_id: id.into(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            floor: value.floor().to_integer(),
            value,
            attained_by: attained_by.map(String::from),
        }
    }
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Upper bound for the number of `A_{2k+1}` points on a degree `n` curve with ADE singularities.
pub fn langer_a_bound(k: i64, n: i64) -> Result<BoundReport> {
    if k < 1 || n < 6 {
        return Err(Error::InvalidArgument(format!("need k >= 1 and n >= 6, got k = {k}, n = {n}")));
    }
    let a = frac((k + 2) * (5 * k + 4), 12 * (k * k * k + 4 * k * k + 4 * k + 1));
    let b = frac(k + 2, 2 * (k * k + 3 * k + 1));
    let value = a * int(n * n) - b * int(n);
    let attained = match (k, n) {
        (2, 12) => Some("D_even(6)"),
        (3, 16) => Some("D_even(8)"),
        _ => None,
    };
    Ok(BoundReport::new("langer_a", &[("k", k), ("n", n)], value, attained))
}

/// Local orbifold Euler number of an `A_k` point for the pair with coefficient `alpha`.
pub fn eorb_a(k: i64, alpha: &Rational) -> Result<Rational> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("need k >= 1, got {k}")));
    }
    let lo = frac(k, 2 * k + 2);
    let hi = frac(k + 2, 2 * k + 2);
    if *alpha < lo || *alpha > hi {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} outside [{lo}, {hi}]")));
    }
    let t = int(k + 2) - int(2 * (k + 1)) * alpha;
    Ok(&t * &t / int(4 * (k + 1)))
}

/// Upper bound for the number of `E6` points on a degree `d` curve with ADE singularities.
pub fn e6_bound(d: i64) -> Result<BoundReport> {
    if d < 6 {
        return Err(Error::InvalidArgument(format!("need d >= 6, got {d}")));
    }
    let value = frac(20, 167) * int(d * d) - frac(24, 167) * int(d);
    Ok(BoundReport::new("e6", &[("d", d)], value, None))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PicardBracket {
    pub lower: i64,
    pub upper: i64,
    /// `sigma = upper - 1`, the maximizing threshold.
    pub maximizing: bool,
}

/// Bracket `sigma + 1 <= rho <= 3(n/2)(n/2 - 1) + 2` for the double cover branched along a degree `n` curve.
pub fn picard_bracket(sigma: i64, n: i64) -> Result<PicardBracket> {
    if n < 4 || n.is_odd() {
        return Err(Error::InvalidArgument(format!("degree must be even and at least 4, got {n}")));
    }
    if sigma < 0 {
        return Err(Error::InvalidArgument(format!("sigma must be nonnegative, got {sigma}")));
    }
    let h = n / 2;
    let upper = 3 * h * (h - 1) + 2;
    if sigma >= upper {
        return Err(Error::InvalidArgument(format!("sigma = {sigma} exceeds {} for degree {n}", upper - 1)));
    }
    Ok(PicardBracket { lower: sigma + 1, upper, maximizing: sigma == upper - 1 })
}

/// Least integer `r` with `r >= alpha * n - 2`.
pub fn sern_lower_bound(alpha: &Rational, n: i64) -> Result<i64> {
    if *alpha <= frac(1, 2) {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} must exceed 1/2")));
    }
    let v = alpha * int(n) - int(2);
    i64::try_from(v.ceil().to_integer()).map_err(|_| Error::InvalidArgument("bound out of range".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn langer_values() {
        let r = langer_a_bound(2, 12).unwrap();
        assert_eq!((r.value.clone(), r.floor.clone()), (frac(200, 11), 18.into()));
        let r = langer_a_bound(3, 16).unwrap();
        assert_eq!((r.value.clone(), r.floor.clone()), (frac(1400, 57), 24.into()));
        // k = 1: (9/40) n^2 - (3/10) n.
        assert_eq!(langer_a_bound(1, 6).unwrap().value, frac(9, 40) * int(36) - frac(3, 10) * int(6));
        assert!(langer_a_bound(0, 12).is_err());
    }

    #[test]
    fn e6_values() {
        assert_eq!(e6_bound(18).unwrap().value, frac(6048, 167));
        assert_eq!(e6_bound(18).unwrap().floor, 36.into());
        assert_eq!(e6_bound(6).unwrap().value, frac(576, 167));
        assert_eq!(e6_bound(12).unwrap().value, frac(2592, 167));
    }

    #[test]
    fn orbifold_values() {
        assert_eq!(eorb_a(1, &frac(3, 4)).unwrap(), int(0));
        assert_eq!(eorb_a(2, &frac(2, 3)).unwrap(), int(0));
        assert_eq!(eorb_a(2, &frac(1, 2)).unwrap(), frac(1, 12));
        assert!(eorb_a(2, &frac(1, 4)).is_err());
    }

    #[test]
    fn picard_values() {
        assert_eq!(picard_bracket(19, 6).unwrap(), PicardBracket { lower: 20, upper: 20, maximizing: true });
        assert_eq!(picard_bracket(37, 8).unwrap(), PicardBracket { lower: 38, upper: 38, maximizing: true });
        assert_eq!(picard_bracket(0, 4).unwrap(), PicardBracket { lower: 1, upper: 8, maximizing: false });
        assert!(picard_bracket(3, 5).is_err());
        assert!(picard_bracket(20, 6).is_err());
    }

    #[test]
    fn arnold_bound() {
        assert_eq!(sern_lower_bound(&frac(5, 8), 6).unwrap(), 2);
        assert_eq!(sern_lower_bound(&frac(7, 12), 6).unwrap(), 2);
        assert!(sern_lower_bound(&frac(1, 2), 6).is_err());
        // Line arrangements of degree 2m+1 with r = m need m >= ceil(2(2m+1)/3 - 2).
        let feasible: Vec<i64> = (1..12).filter(|&m| m >= sern_lower_bound(&frac(2, 3), 2 * m + 1).unwrap()).collect();
        assert_eq!(feasible, vec![1, 2, 3, 4]);
    }
}
