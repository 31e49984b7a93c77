//! Exact rational scalars and the `"p/q"` string encoding used in every file format.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or a bare integer string. Decimal and exponent forms are rejected.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Always `p/q`, including `q = 1`.
pub fn format(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn pow(r: &Rational, e: i32) -> Rational {
    num_traits::pow::Pow::pow(r, e)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact `q`-th root of a nonnegative rational when it is rational.
pub fn exact_root(r: &Rational, q: u32) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if q == 1 {
        return Some(r.clone());
    }
    let n = r.numer().nth_root(q);
    let d = r.denom().nth_root(q);
    if num_traits::pow(n.clone(), q as usize) == *r.numer()
        && num_traits::pow(d.clone(), q as usize) == *r.denom()
    {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Largest multiple of `2^-bits` that is `<= r`.
pub fn floor_dyadic(r: &Rational, bits: u32) -> Rational {
    let scaled = r.numer() << bits as usize;
    let q = scaled.div_floor(r.denom());
    Rational::new(q, BigInt::one() << bits as usize)
}

/// Smallest multiple of `2^-bits` that is `>= r`.
pub fn ceil_dyadic(r: &Rational, bits: u32) -> Rational {
    let scaled = r.numer() << bits as usize;
    let q = scaled.div_ceil(r.denom());
    Rational::new(q, BigInt::one() << bits as usize)
}

/// Lower and upper dyadic bounds on `r^(1/q)` for `r >= 0`, `bits` fractional bits.
pub fn root_bounds(r: &Rational, q: u32, bits: u32) -> (Rational, Rational) {
    debug_assert!(!r.is_negative());
    if let Some(x) = exact_root(r, q) {
        return (x.clone(), x);
    }
    let shift = bits as usize * q as usize;
    let scale = BigInt::one() << bits as usize;
    // floor(r * 2^(bits*q)) and ceil(...) bracket the scaled radicand
    let scaled = r.numer() << shift;
    let lo_int = scaled.div_floor(r.denom()).nth_root(q);
    let hi_rad = scaled.div_ceil(r.denom());
    let mut hi_int = hi_rad.nth_root(q);
    if num_traits::pow(hi_int.clone(), q as usize) < hi_rad {
        hi_int += 1;
    }
    (
        Rational::new(lo_int, scale.clone()),
        Rational::new(hi_int, scale),
    )
}

pub fn sign(r: &Rational) -> Sign {
    if r.is_zero() {
        Sign::NoSign
    } else if r.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Serde adapter for a single rational stored as `"p/q"`.
pub mod serde_str {
    use super::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod serde_vec {
    use super::Rational;
    use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&super::format(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| super::parse(s).map_err(D::Error::custom))
            .collect()
    }
}
