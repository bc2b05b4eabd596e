//! Exact rational scalars and the extended value line used by curves.
//!
//! All quantities in this crate (times, vehicle counts, flow rates) are
//! `Rat`: an exact rational with 128-bit numerator and denominator. That is
//! wide enough for every computation the toolkit performs on realistic road
//! data while staying `Copy` and cheap. Arithmetic panics on overflow rather
//! than wrapping (the workspace enables overflow checks in all profiles).

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact rational number. Always kept in reduced form by `Ratio`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(Ratio<i128>);

impl Rat {
    pub const ZERO: Rat = Rat(Ratio::new_raw(0, 1));
    pub const ONE: Rat = Rat(Ratio::new_raw(1, 1));

    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "rational with zero denominator");
        Rat(Ratio::new(num, den))
    }

    pub fn int(n: i128) -> Rat {
        Rat(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn min(self, other: Rat) -> Rat {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rat) -> Rat {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn recip(self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    /// Largest integer `n` with `n <= self`.
    pub fn floor(self) -> i128 {
        self.0.floor().to_integer()
    }

    /// Smallest integer `n` with `n >= self`.
    pub fn ceil(self) -> i128 {
        self.0.ceil().to_integer()
    }

    /// Floor of `self / step` for positive `step`.
    pub fn div_floor(self, step: Rat) -> i128 {
        assert!(step.is_positive(), "div_floor needs positive step");
        (self / step).floor()
    }

    /// Ceiling of `self / step` for positive `step`.
    pub fn div_ceil(self, step: Rat) -> i128 {
        assert!(step.is_positive(), "div_ceil needs positive step");
        (self / step).ceil()
    }

    /// True iff `self` is an integer multiple of positive `step`.
    pub fn is_multiple_of(self, step: Rat) -> bool {
        assert!(step.is_positive());
        (self / step).0.is_integer()
    }

    /// Least positive rational that both arguments divide evenly.
    /// For a/b and c/d in lowest terms this is lcm(a,c)/gcd(b,d).
    pub fn lcm(self, other: Rat) -> Rat {
        assert!(self.is_positive() && other.is_positive(), "lcm of non-positives");
        let num = self.numer().lcm(&other.numer());
        let den = self.denom().gcd(&other.denom());
        Rat::new(num, den)
    }

    pub fn to_f64(self) -> f64 {
        self.0.to_f64().expect("rational out of f64 range")
    }

    /// Decimal rendering, exact when the denominator is 2^a·5^b, otherwise
    /// the `num/den` form. Used for human-facing report output only.
    pub fn display_decimal(&self) -> String {
        let mut den = self.denom();
        let mut twos = 0u32;
        while den % 2 == 0 {
            den /= 2;
            twos += 1;
        }
        let mut fives = 0u32;
        while den % 5 == 0 {
            den /= 5;
            fives += 1;
        }
        if den != 1 {
            return format!("{}/{}", self.numer(), self.denom());
        }
        let digits = twos.max(fives);
        // scale numerator so the denominator becomes 10^digits
        let mut scaled = self.numer();
        for _ in 0..digits.saturating_sub(twos) {
            scaled *= 2;
        }
        for _ in 0..digits.saturating_sub(fives) {
            scaled *= 5;
        }
        if digits == 0 {
            return format!("{scaled}");
        }
        let sign = if scaled < 0 { "-" } else { "" };
        let mag = scaled.unsigned_abs();
        let pow = 10u128.pow(digits);
        let int = mag / pow;
        let frac = mag % pow;
        let frac_str = format!("{frac:0width$}", width = digits as usize);
        let frac_str = frac_str.trim_end_matches('0');
        if frac_str.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac_str}")
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepted forms: `"3"`, `"-7/2"`, `"0.25"`, `"-1.5e2"` is NOT accepted
/// (no exponents — inputs are exact by construction).
impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Rat, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty rational".into());
        }
        if let Some((num, den)) = s.split_once('/') {
            let n: i128 = num.trim().parse().map_err(|e| format!("bad numerator {num:?}: {e}"))?;
            let d: i128 = den.trim().parse().map_err(|e| format!("bad denominator {den:?}: {e}"))?;
            if d == 0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            return Ok(Rat::new(n, d));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let neg = int.trim_start().starts_with('-');
            let i: i128 = if int == "-" || int.is_empty() {
                0
            } else {
                int.parse().map_err(|e| format!("bad integer part {int:?}: {e}"))?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("bad fractional part in {s:?}"));
            }
            if frac.len() > 30 {
                return Err(format!("fractional part too long in {s:?}"));
            }
            let f: i128 = frac.parse().map_err(|e| format!("bad fractional part {frac:?}: {e}"))?;
            let pow = 10i128
                .checked_pow(frac.len() as u32)
                .ok_or_else(|| format!("fractional part too long in {s:?}"))?;
            let mag = i
                .unsigned_abs()
                .checked_mul(pow.unsigned_abs())
                .and_then(|x| x.checked_add(f.unsigned_abs()))
                .ok_or_else(|| format!("decimal out of range: {s:?}"))?;
            let mag = i128::try_from(mag).map_err(|_| format!("decimal out of range: {s:?}"))?;
            let num = if neg { -mag } else { mag };
            return Ok(Rat::new(num, pow));
        }
        let n: i128 = s.parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
        Ok(Rat::int(n))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        // Accept either a string ("3/4", "0.25") or a JSON integer. A visitor
        // rather than an untagged enum: untagged buffering loses i128.
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as \"p/q\", a decimal string, or an integer")
            }
            fn visit_str<E: serde::de::Error>(self, s: &str) -> Result<Rat, E> {
                s.parse().map_err(E::custom)
            }
            fn visit_i64<E: serde::de::Error>(self, n: i64) -> Result<Rat, E> {
                Ok(Rat::int(n as i128))
            }
            fn visit_u64<E: serde::de::Error>(self, n: u64) -> Result<Rat, E> {
                Ok(Rat::int(n as i128))
            }
            fn visit_i128<E: serde::de::Error>(self, n: i128) -> Result<Rat, E> {
                Ok(Rat::int(n))
            }
            fn visit_u128<E: serde::de::Error>(self, n: u128) -> Result<Rat, E> {
                i128::try_from(n).map(Rat::int).map_err(E::custom)
            }
        }
        de.deserialize_any(V)
    }
}

impl From<i128> for Rat {
    fn from(n: i128) -> Rat {
        Rat::int(n)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rat(self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        *self = *self + rhs;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        *self = *self - rhs;
    }
}

/// A point on the extended line [-inf, +inf]... actually only +inf is ever
/// needed: +inf is the neutral element of pointwise min and the value of a
/// curve outside its domain of interest. -inf never arises (curves are
/// bounded below on every bounded interval), so it is not representable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Value {
    Finite(Rat),
    /// +infinity.
    Infinite,
}

pub use Value::{Finite, Infinite};

impl Value {
    pub fn zero() -> Value {
        Finite(Rat::ZERO)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn finite(&self) -> Option<Rat> {
        match self {
            Finite(x) => Some(*x),
            Infinite => None,
        }
    }

    pub fn expect_finite(&self) -> Rat {
        match self {
            Finite(x) => *x,
            Infinite => panic!("expected finite value"),
        }
    }

    pub fn min(self, other: Value) -> Value {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.min(b)),
            (Finite(a), Infinite) | (Infinite, Finite(a)) => Finite(a),
            (Infinite, Infinite) => Infinite,
        }
    }

    pub fn max(self, other: Value) -> Value {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            _ => Infinite,
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Value) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Value) -> Ordering {
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl Add for Value {
    type Output = Value;
    /// Extended addition: inf + anything = inf.
    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl Add<Rat> for Value {
    type Output = Value;
    fn add(self, rhs: Rat) -> Value {
        match self {
            Finite(a) => Finite(a + rhs),
            Infinite => Infinite,
        }
    }
}

impl Sub<Rat> for Value {
    type Output = Value;
    fn sub(self, rhs: Rat) -> Value {
        match self {
            Finite(a) => Finite(a - rhs),
            Infinite => Infinite,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(x) => write!(f, "{x}"),
            Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(x) => x.serialize(ser),
            Infinite => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Value, D::Error> {
        let s = String::deserialize(de)?;
        if s.trim() == "inf" {
            Ok(Infinite)
        } else {
            s.parse().map(Finite).map_err(D::Error::custom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn reduction_and_ordering() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(-3, -6), r(1, 2));
        assert_eq!(r(3, -6), r(-1, 2));
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(1, 3));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(1, 2) - r(1, 3), r(1, 6));
        assert_eq!(r(2, 3) * r(3, 4), r(1, 2));
        assert_eq!(r(1, 2) / r(1, 4), Rat::int(2));
        assert_eq!(-r(1, 2), r(-1, 2));
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(r(7, 2).floor(), 3);
        assert_eq!(r(7, 2).ceil(), 4);
        assert_eq!(r(-7, 2).floor(), -4);
        assert_eq!(r(-7, 2).ceil(), -3);
        assert_eq!(Rat::int(5).floor(), 5);
        assert_eq!(Rat::int(5).ceil(), 5);
        assert_eq!(r(10, 3).div_floor(r(1, 3)), 10);
        assert_eq!(r(10, 3).div_ceil(r(1, 2)), 7);
    }

    #[test]
    fn rational_lcm() {
        assert_eq!(r(1, 2).lcm(r(1, 3)), Rat::ONE);
        assert_eq!(r(3, 4).lcm(r(1, 6)), r(3, 2));
        assert_eq!(Rat::int(4).lcm(Rat::int(6)), Rat::int(12));
        assert_eq!(r(5, 1).lcm(r(5, 1)), Rat::int(5));
        // both arguments divide the lcm evenly
        let l = r(3, 4).lcm(r(5, 6));
        assert!(l.is_multiple_of(r(3, 4)));
        assert!(l.is_multiple_of(r(5, 6)));
    }

    #[test]
    fn parsing() {
        assert_eq!("3".parse::<Rat>().unwrap(), Rat::int(3));
        assert_eq!("-7/2".parse::<Rat>().unwrap(), r(-7, 2));
        assert_eq!("0.25".parse::<Rat>().unwrap(), r(1, 4));
        assert_eq!("-1.5".parse::<Rat>().unwrap(), r(-3, 2));
        assert_eq!(".5".parse::<Rat>().unwrap(), r(1, 2));
        assert_eq!("-.5".parse::<Rat>().unwrap(), r(-1, 2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
        assert!("1e5".parse::<Rat>().is_err());
        assert!("1.".parse::<Rat>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["3", "-7/2", "1/3", "0", "-12"] {
            let x: Rat = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert_eq!(r(1, 4).display_decimal(), "0.25");
        assert_eq!(r(-3, 2).display_decimal(), "-1.5");
        assert_eq!(r(1, 3).display_decimal(), "1/3");
        assert_eq!(Rat::int(7).display_decimal(), "7");
        assert_eq!(r(205, 1).display_decimal(), "205");
        assert_eq!(r(1, 8).display_decimal(), "0.125");
        assert_eq!(r(41, 5).display_decimal(), "8.2");
    }

    #[test]
    fn value_ordering_and_min() {
        assert!(Finite(r(1, 2)) < Infinite);
        assert_eq!(Finite(r(1, 2)).min(Infinite), Finite(r(1, 2)));
        assert_eq!(Infinite.min(Infinite), Infinite);
        assert_eq!(Finite(r(1, 2)) + Infinite, Infinite);
        assert_eq!(Finite(r(1, 2)) + Finite(r(1, 2)), Finite(Rat::ONE));
    }

    #[test]
    fn serde_forms() {
        let x: Rat = serde_json::from_str("\"3/4\"").unwrap();
        assert_eq!(x, r(3, 4));
        let x: Rat = serde_json::from_str("\"0.2\"").unwrap();
        assert_eq!(x, r(1, 5));
        let x: Rat = serde_json::from_str("15").unwrap();
        assert_eq!(x, Rat::int(15));
        assert_eq!(serde_json::to_string(&r(3, 4)).unwrap(), "\"3/4\"");
        let v: Value = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(v, Infinite);
        assert_eq!(serde_json::to_string(&Infinite).unwrap(), "\"inf\"");
    }
}
