//! Exact rational helpers. Bounds that involve square roots are decided by
//! squaring both sides, so nothing here touches floating point except
//! [`to_f64`], which is for display only.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Smallest `r` with `r * r >= n`.
pub fn ceil_sqrt(n: usize) -> usize {
    let r = floor_sqrt(n);
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// Largest `r` with `r * r <= n`.
pub fn floor_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn exact_sqrt(n: usize) -> Option<usize> {
    let r = floor_sqrt(n);
    (r * r == n).then_some(r)
}

/// `x <= c * sqrt(d)` for non-negative `x`, `c`.
pub fn le_scaled_sqrt(x: &BigRational, c: &BigRational, d: usize) -> bool {
    assert!(!x.is_negative() && !c.is_negative());
    x * x <= c * c * int(d)
}

/// `x >= c * sqrt(d)` for non-negative `x`, `c`.
pub fn ge_scaled_sqrt(x: &BigRational, c: &BigRational, d: usize) -> bool {
    assert!(!x.is_negative() && !c.is_negative());
    x * x >= c * c * int(d)
}

/// `x <= sqrt(d) + 1 / sqrt(d)`, i.e. `x * sqrt(d) <= d + 1`.
pub fn le_sqrt_plus_inverse(x: &BigRational, d: usize) -> bool {
    assert!(d > 0 && !x.is_negative());
    x * x * int(d) <= int((d + 1) * (d + 1))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `"num/den"`, or just `"num"` for integers.
pub fn render(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse::<BigInt>().ok()?, b.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    (!den.is_zero()).then(|| BigRational::new(num, den))
}

/// Serde adapter storing a rational as its `"num/den"` string.
pub mod as_string {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::render(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).ok_or_else(|| D::Error::custom(format!("not a rational: {s:?}")))
    }
}

/// Same as [`as_string`] for optional values.
pub mod as_opt_string {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&super::render(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| super::parse(&s).ok_or_else(|| D::Error::custom(format!("not a rational: {s:?}"))))
            .transpose()
    }
}
