//! Ground fields and their elements.
//!
//! Two fields are supported: the rationals, with arbitrary-precision
//! normalized fractions, and prime fields `F_p` with residues in `[0, p)`.
//! Every scalar has exactly one canonical representation, so structural
//! equality is value equality.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field; products of two residues fit in `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`. Fails if `p` is not a prime below [`MAX_MODULUS`].
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Mod { value: 1 % p, modulus: p },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field; `None` when `den` vanishes in the field.
    pub fn fraction(self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        if d.is_zero() {
            return None;
        }
        Some(&self.from_i64(num) / &d)
    }

    /// Canonical name used by the document format: `Q` or `F<p>`.
    pub fn name(self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("F{p}"),
        }
    }

    pub fn from_name(name: &str) -> Result<Field> {
        if name == "Q" {
            return Ok(Field::Rationals);
        }
        let digits = name
            .strip_prefix('F')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) && !d.starts_with('0'))
            .ok_or_else(|| Error::invalid(format!("unknown field name {name:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::invalid(format!("modulus out of range in {name:?}")))?;
        Field::prime(p)
    }

    /// Parses a scalar in canonical form only: `"-3/4"`, `"5"`, `"0"` over the
    /// rationals, decimal residues `"0".."p-1"` over `F_p`.
    pub fn parse_scalar(self, text: &str) -> std::result::Result<Scalar, String> {
        match self {
            Field::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (text, None),
                };
                let numer = parse_canonical_int(num, true)?;
                let denom = match den {
                    None => BigInt::one(),
                    Some(d) => {
                        let d = parse_canonical_int(d, false)?;
                        if d.is_zero() || d.is_one() {
                            return Err(format!("non-canonical denominator in {text:?}"));
                        }
                        d
                    }
                };
                if numer.is_zero() && !denom.is_one() {
                    return Err(format!("non-canonical zero {text:?}"));
                }
                let value = BigRational::new(numer.clone(), denom.clone());
                if value.numer() != &numer || value.denom() != &denom {
                    return Err(format!("fraction {text:?} is not in lowest terms"));
                }
                Ok(Scalar::Rat(value))
            }
            Field::Prime(p) => {
                let n = parse_canonical_int(text, false)?;
                let v: u64 = u64::try_from(n).map_err(|_| format!("residue {text:?} out of range"))?;
                if v >= p {
                    return Err(format!("residue {text:?} is not in [0, {p})"));
                }
                Ok(Scalar::Mod { value: v, modulus: p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn parse_canonical_int(text: &str, allow_sign: bool) -> std::result::Result<BigInt, String> {
    let (neg, digits) = match text.strip_prefix('-') {
        Some(rest) if allow_sign => (true, rest),
        Some(_) => return Err(format!("unexpected sign in {text:?}")),
        None => (false, text),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("malformed integer {text:?}"));
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(format!("leading zero in {text:?}"));
    }
    if neg && digits == "0" {
        return Err(format!("negative zero {text:?}"));
    }
    let n: BigInt = digits.parse().map_err(|_| format!("malformed integer {text:?}"))?;
    Ok(if neg { -n } else { n })
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Prime-field residues carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    /// The residue, if this is a prime-field scalar.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rat(_) => None,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cold]
fn mixed() -> ! {
    panic!("arithmetic between scalars of different fields")
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                let s = a + b;
                Scalar::Mod { value: if s >= *p { s - p } else { s }, modulus: *p }
            }
            _ => mixed(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod { value: if a >= b { a - b } else { a + p - b }, modulus: *p }
            }
            _ => mixed(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod { value: a * b % p, modulus: *p }
            }
            _ => mixed(),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    #[inline]
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a += b,
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                let s = *a + b;
                *a = if s >= *p { s - *p } else { s };
            }
            _ => mixed(),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    #[inline]
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a -= b,
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                *a = if *a >= *b { *a - b } else { *a + *p - b };
            }
            _ => mixed(),
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    #[inline]
    fn mul_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a *= b,
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                *a = *a * b % *p;
            }
            _ => mixed(),
        }
    }
}

impl Scalar {
    /// `self += a * b`, the inner step of every contraction.
    #[inline]
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Mod { value: s, modulus: p },
                Scalar::Mod { value: x, .. },
                Scalar::Mod { value: y, .. },
            ) => {
                *s = (*s + x * y % *p) % *p;
            }
            (Scalar::Rat(s), Scalar::Rat(x), Scalar::Rat(y)) => {
                if x.is_integer() && y.is_integer() && s.is_integer() {
                    *s = BigRational::from_integer(s.numer() + x.numer() * y.numer());
                } else {
                    *s += x * y;
                }
            }
            _ => mixed(),
        }
    }

    /// `self -= a * b`.
    #[inline]
    pub fn sub_product(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Mod { value: s, modulus: p },
                Scalar::Mod { value: x, .. },
                Scalar::Mod { value: y, .. },
            ) => {
                let t = x * y % *p;
                *s = if *s >= t { *s - t } else { *s + *p - t };
            }
            (Scalar::Rat(s), Scalar::Rat(x), Scalar::Rat(y)) => {
                if x.is_integer() && y.is_integer() && s.is_integer() {
                    *s = BigRational::from_integer(s.numer() - x.numer() * y.numer());
                } else {
                    *s -= x * y;
                }
            }
            _ => mixed(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rational_strings() {
        let q = Field::Rationals;
        assert_eq!(q.parse_scalar("1/2").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("-7").unwrap(), q.from_i64(-7));
        for bad in ["3/6", "2/1", "-0", "0/5", "01", "1/-2", "+1", "", "1/0", "a"] {
            assert!(q.parse_scalar(bad).is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn prime_field_residues() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.parse_scalar("6").unwrap().to_string(), "6");
        assert!(f.parse_scalar("7").is_err());
        assert!(f.parse_scalar("-1").is_err());
        let two = f.from_i64(2);
        assert_eq!((&two * &two.inv().unwrap()), f.one());
        assert_eq!(f.from_i64(-1).to_string(), "6");
        assert_eq!(two.pow(3), f.one());
    }

    #[test]
    fn field_names_round_trip() {
        for f in [Field::Rationals, Field::Prime(2), Field::Prime(101)] {
            assert_eq!(Field::from_name(&f.name()).unwrap(), f);
        }
        assert!(Field::from_name("F4").is_err());
        assert!(Field::from_name("F07").is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn fused_products_match_plain_arithmetic() {
        let q = Field::Rationals;
        let mut s = q.fraction(1, 3).unwrap();
        s.add_product(&q.from_i64(2), &q.fraction(1, 6).unwrap());
        assert_eq!(s, q.fraction(2, 3).unwrap());
        s.sub_product(&q.from_i64(2), &q.from_i64(1));
        assert_eq!(s, q.fraction(-4, 3).unwrap());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    fn scalar() -> impl Strategy<Value = (Field, Scalar)> {
        prop_oneof![
            (-50i64..50, 1i64..50).prop_map(|(n, d)| {
                let q = Field::Rationals;
                (q, &q.from_i64(n) / &q.from_i64(d))
            }),
            (0i64..101).prop_map(|n| {
                let f = Field::prime(101).unwrap();
                (f, f.from_i64(n))
            }),
        ]
    }

    proptest! {
        #[test]
        fn display_parses_back_canonically((f, x) in scalar()) {
            let text = x.to_string();
            prop_assert_eq!(f.parse_scalar(&text).unwrap(), x);
        }

        #[test]
        fn nonzero_scalars_invert((f, x) in scalar()) {
            match x.inv() {
                Some(y) => prop_assert_eq!(&x * &y, f.one()),
                None => prop_assert!(x.is_zero()),
            }
        }
    }
}
