use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LinalgError;

/// An element `re + im*i` of the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

pub type Scalar = GaussianRational;

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self { re: Rational::ZERO, im: Rational::ZERO }
    }

    pub fn one() -> Self {
        Self { re: Rational::ONE, im: Rational::ZERO }
    }

    pub fn i() -> Self {
        Self { re: Rational::ZERO, im: Rational::ONE }
    }

    pub fn from_int(n: i64) -> Self {
        Self { re: Rational::from(n), im: Rational::ZERO }
    }

    /// `n/d`, panics on `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self { re: Rational::from_signeds(n, d), im: Rational::ZERO }
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Self { re: Rational::from_signeds(re.0, re.1), im: Rational::from_signeds(im.0, im.1) }
    }

    pub fn from_real(re: Rational) -> Self {
        Self { re, im: Rational::ZERO }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re == Rational::ZERO && self.im == Rational::ZERO
    }

    pub fn is_one(&self) -> bool {
        self.re == Rational::ONE && self.im == Rational::ZERO
    }

    pub fn is_real(&self) -> bool {
        self.im == Rational::ZERO
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|^2`, always real and non-negative.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Sign of the real part; used for Hermitian diagonals, which are real.
    pub fn real_sign(&self) -> Ordering {
        self.re.cmp(&Rational::ZERO)
    }

    pub fn inv(&self) -> Result<Self, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn mul_i(&self) -> Self {
        Self { re: -&self.im, im: self.re.clone() }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Rational::ZERO;
        match (self.re == zero, self.im == zero) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*i", self.im),
            (false, false) => {
                if self.im < zero {
                    write!(f, "{}-{}*i", self.re, -&self.im)
                } else {
                    write!(f, "{}+{}*i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(LinalgError::Parse(format!("empty number in `{s}`")));
    }
    let r = Rational::from_str(t).map_err(|_| LinalgError::Parse(format!("bad rational `{t}`")))?;
    Ok(r)
}

impl FromStr for GaussianRational {
    type Err = LinalgError;

    /// Accepts `a`, `a/b`, `c*i`, `i`, `-i`, `a/b+c/d*i`, `a-c*i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(LinalgError::Parse("empty scalar".into()));
        }
        if t == "zero" {
            return Ok(Self::zero());
        }
        if !t.ends_with('i') {
            return Ok(Self::from_real(parse_rational(&t)?));
        }
        let body = &t[..t.len() - 1];
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_str, im_str) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_str {
            "" | "+" => Rational::ONE,
            "-" => -Rational::ONE,
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        let re = if re_str.is_empty() { Rational::ZERO } else { parse_rational(re_str)? };
        Ok(Self { re, im })
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::from_real(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        let zero = Rational::ZERO;
        if self.im == zero && o.im == zero {
            return GaussianRational { re: &self.re * &o.re, im: zero };
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero; use [`GaussianRational::inv`] for a fallible version.
    fn div(self, o: &GaussianRational) -> GaussianRational {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                self.$m(&o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, o: GaussianRational) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::one();
        for x in iter {
            acc *= &x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(q("3/4"), GaussianRational::from_ratio(3, 4));
        assert_eq!(q("i"), GaussianRational::i());
        assert_eq!(q("-i"), -GaussianRational::i());
        assert_eq!(q("2*i"), GaussianRational::from_parts((0, 1), (2, 1)));
        assert_eq!(q("1/2+3/4*i"), GaussianRational::from_parts((1, 2), (3, 4)));
        assert_eq!(q("-1/2-3/4*i"), GaussianRational::from_parts((-1, 2), (-3, 4)));
        assert_eq!(q("1-i"), GaussianRational::from_parts((1, 1), (-1, 1)));
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("abc".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "3/4", "-2", "i", "-5/3*i", "1/2+3/4*i", "-1-i"] {
            let x = q(s);
            assert_eq!(q(&x.to_string()), x, "{s}");
        }
    }

    #[test]
    fn field_ops() {
        let a = q("1+2*i");
        let b = q("3-i");
        assert_eq!(&a * &b, q("5+5*i"));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(&GaussianRational::i() * &GaussianRational::i(), q("-1"));
        assert!(GaussianRational::zero().inv().is_err());
        assert_eq!(a.conj(), q("1-2*i"));
        assert_eq!(a.norm_sqr(), Rational::from(5));
    }
}
