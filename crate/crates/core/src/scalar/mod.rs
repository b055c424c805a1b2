//! Exact coefficient fields: ℚ, ℚ(i) and F_p for odd primes p.
//!
//! Every structure in the crate carries a [`FieldSpec`] and stores [`Scalar`]
//! values belonging to it. Arithmetic between scalars of different fields is an
//! internal invariant violation and panics; public entry points that accept
//! user data check fields up front and return [`Error::FieldMismatch`].

mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub use rational::Rational;

use crate::error::{Error, Result};

/// Which exact field scalars live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    GaussianRationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// The prime field F_p; rejects p = 2 and composite p.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    /// 0 for the characteristic-zero fields.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Rational::from_integer(n)),
            FieldSpec::GaussianRationals => Scalar::Gaussian(Rational::from_integer(n), Rational::zero()),
            FieldSpec::PrimeField(p) => {
                Scalar::Residue { value: (n as i128).rem_euclid(*p as i128) as u64, modulus: *p }
            }
        }
    }

    fn embed_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Rational::from_bigints(n.clone(), BigInt::one())),
            FieldSpec::GaussianRationals => {
                Scalar::Gaussian(Rational::from_bigints(n.clone(), BigInt::one()), Rational::zero())
            }
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Residue { value: r.to_u64().expect("residue fits in u64"), modulus: *p }
            }
        }
    }

    /// A square root of −1, when the field has one.
    pub fn sqrt_minus_one(&self) -> Option<Scalar> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::GaussianRationals => Some(Scalar::Gaussian(Rational::zero(), Rational::one())),
            FieldSpec::PrimeField(p) => {
                if p % 4 != 1 {
                    return None;
                }
                // c^((p-1)/4) for a quadratic non-residue c
                let p = *p;
                (2..p).find_map(|c| {
                    if pow_mod(c, (p - 1) / 2, p) == p - 1 {
                        Some(Scalar::Residue { value: pow_mod(c, (p - 1) / 4, p), modulus: p })
                    } else {
                        None
                    }
                })
            }
        }
    }

    /// Parses `int`, `int/int`, or (over ℚ(i) only) `a+bi` forms.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if let Some(body) = text.strip_suffix('i') {
            if *self != FieldSpec::GaussianRationals {
                return Err(Error::ImaginaryOutsideGaussian(text.to_string()));
            }
            // split at the last sign that is not the leading one
            let split = body
                .char_indices()
                .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
                .map(|(idx, _)| idx)
                .next_back();
            let (re_text, im_text) = match split {
                Some(idx) => (&body[..idx], &body[idx..]),
                None => ("", body),
            };
            let re = if re_text.is_empty() { Rational::zero() } else { parse_rational(re_text)? };
            let im = match im_text {
                "" | "+" => Rational::one(),
                "-" => -&Rational::one(),
                t => parse_rational(t.strip_prefix('+').unwrap_or(t))?,
            };
            return Ok(Scalar::Gaussian(re, im));
        }
        let (n, d) = parse_fraction(text)?;
        let num = self.embed_bigint(&n);
        let den = self.embed_bigint(&d);
        let inv = den.inv().map_err(|_| Error::ZeroDenominator(text.to_string()))?;
        Ok(&num * &inv)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::GaussianRationals => write!(f, "Qi"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" => Ok(FieldSpec::Rationals),
            "Qi" => Ok(FieldSpec::GaussianRationals),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidField(format!("unknown field `{other}`")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

fn parse_integer(text: &str) -> Result<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed integer `{text}`")));
    }
    BigInt::from_str(text).map_err(|e| Error::Parse(format!("`{text}`: {e}")))
}

fn parse_fraction(text: &str) -> Result<(BigInt, BigInt)> {
    match text.split_once('/') {
        Some((n, d)) => Ok((parse_integer(n)?, parse_integer(d)?)),
        None => Ok((parse_integer(text)?, BigInt::one())),
    }
}

fn parse_rational(text: &str) -> Result<Rational> {
    let (n, d) = parse_fraction(text)?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::from_bigints(n, d))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An element of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    /// `re + im·i` with i² = −1.
    Gaussian(Rational, Rational),
    /// Canonical residue in `[0, modulus)`.
    Residue {
        value: u64,
        modulus: u64,
    },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Gaussian(..) => FieldSpec::GaussianRationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian(re, im) => re.is_zero() && im.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Gaussian(re, im) => re.is_one() && im.is_zero(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip().expect("nonzero")),
            Scalar::Gaussian(re, im) => {
                let norm = &(re * re) + &(im * im);
                let inv_norm = norm.recip().expect("nonzero norm");
                Scalar::Gaussian(re * &inv_norm, &(-im) * &inv_norm)
            }
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Whether the value lies in the prime subfield and equals an integer that
    /// fits in `i64` (used for compact reporting).
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => r.numer().to_i64(),
            Scalar::Gaussian(re, im) if im.is_zero() && re.denom().is_one() => re.numer().to_i64(),
            Scalar::Residue { value, .. } => i64::try_from(*value).ok(),
            _ => None,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Gaussian(a, b), Scalar::Gaussian(c, d)) => Scalar::Gaussian(a + c, b + d),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Gaussian(a, b), Scalar::Gaussian(c, d)) => Scalar::Gaussian(a - c, b - d),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Gaussian(a, b), Scalar::Gaussian(c, d)) => {
                let re = &(a * c) - &(b * d);
                let im = &(a * d) + &(b * c);
                Scalar::Gaussian(re, im)
            }
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Gaussian(a, b) => Scalar::Gaussian(-a, -b),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
            Scalar::Gaussian(re, im) => {
                if im.is_zero() {
                    return write!(f, "{re}");
                }
                let imag = if im.is_one() {
                    "i".to_string()
                } else if (-im).is_one() {
                    "-i".to_string()
                } else {
                    format!("{im}i")
                };
                if re.is_zero() {
                    write!(f, "{imag}")
                } else if im.is_negative() {
                    write!(f, "{re}{imag}")
                } else {
                    write!(f, "{re}+{imag}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const QI: FieldSpec = FieldSpec::GaussianRationals;

    #[test]
    fn parse_examples() {
        assert_eq!(Q.parse("3/6").unwrap().to_string(), "1/2");
        for field in [Q, QI, FieldSpec::prime(5).unwrap()] {
            assert!(field.parse("0").unwrap().is_zero());
        }
        let z = QI.parse("2+3i").unwrap();
        assert_eq!(&z * &z, QI.parse("-5+12i").unwrap());
        assert_eq!(QI.parse("-i").unwrap(), -QI.sqrt_minus_one().unwrap());
        assert_eq!(QI.parse("1/2-3/4i").unwrap().to_string(), "1/2-3/4i");
        assert_eq!(FieldSpec::prime(7).unwrap().parse("1/2").unwrap().to_string(), "4");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Q.parse("1/0"), Err(Error::ZeroDenominator(_))));
        assert!(matches!(Q.parse("2+3i"), Err(Error::ImaginaryOutsideGaussian(_))));
        assert!(matches!(Q.parse("abc"), Err(Error::Parse(_))));
        assert!(matches!(Q.parse("1.5"), Err(Error::Parse(_))));
        assert!(matches!(FieldSpec::prime(5).unwrap().parse("3/10"), Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(Q.from_i64(2).inv().unwrap().to_string(), "1/2");
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.from_i64(2).inv().unwrap(), f5.from_i64(3));
        let i = QI.sqrt_minus_one().unwrap();
        assert_eq!(i.inv().unwrap(), -&i);
        assert!(matches!(Q.zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn two_is_invertible_everywhere() {
        for field in [Q, QI, FieldSpec::prime(3).unwrap(), FieldSpec::prime(10007).unwrap()] {
            let two = field.from_i64(2);
            assert!((&two * &two.inv().unwrap()).is_one());
        }
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
    }

    #[test]
    fn sqrt_minus_one_mod_p() {
        let f13 = FieldSpec::prime(13).unwrap();
        let r = f13.sqrt_minus_one().unwrap();
        assert_eq!(&r * &r, f13.from_i64(-1));
        assert!(FieldSpec::prime(7).unwrap().sqrt_minus_one().is_none());
        assert!(Q.sqrt_minus_one().is_none());
    }

    #[test]
    fn field_spec_text() {
        for s in ["Q", "Qi", "Fp:10007"] {
            assert_eq!(s.parse::<FieldSpec>().unwrap().to_string(), s);
        }
        assert!("Fp:4".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    fn arb_field() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![Just(Q), Just(QI), Just(FieldSpec::PrimeField(10007)), Just(FieldSpec::PrimeField(3))]
    }

    fn arb_scalar(field: FieldSpec) -> impl Strategy<Value = Scalar> {
        (any::<i32>(), 1..1000i64, any::<i16>(), 1..50i64).prop_map(move |(a, b, c, d)| {
            let re = field.from_i64(a as i64);
            let re = &re * &field.from_i64(b).inv().unwrap_or(field.one());
            if field == QI {
                let im = Scalar::Gaussian(Rational::zero(), Rational::one());
                let imv = &field.from_i64(c as i64) * &field.from_i64(d).inv().unwrap();
                &re + &(&imv * &im)
            } else {
                re
            }
        })
    }

    proptest! {
        #[test]
        fn field_axioms(
            (a, b, c) in arb_field().prop_flat_map(|f| (arb_scalar(f), arb_scalar(f), arb_scalar(f)))
        ) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn format_round_trip(a in arb_field().prop_flat_map(arb_scalar)) {
            let text = a.to_string();
            prop_assert_eq!(a.field().parse(&text).unwrap(), a);
        }
    }
}
