//! Gaussian rationals `a + b·i` with `a, b` in ℚ.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use super::rat::Rat;
use super::Field;

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat { re, im: Rat::ZERO }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rat::from_int(n))
    }

    pub fn i() -> Self {
        GaussRat { re: Rat::ZERO, im: Rat::ONE }
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Field for GaussRat {
    fn zero() -> Self {
        GaussRat::default()
    }
    fn one() -> Self {
        GaussRat::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        GaussRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::real(&self.re * &o.re);
        }
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn inv(&self) -> Self {
        if self.im.is_zero() {
            return GaussRat::real(self.re.recip());
        }
        let n = self.norm_sqr();
        GaussRat { re: &self.re / &n, im: -(&self.im / &n) }
    }
    fn neg(&self) -> Self {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        Field::add(self, o)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        Field::sub(self, o)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        Field::mul(self, o)
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, o: &GaussRat) -> GaussRat {
        Field::mul(self, &o.inv())
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        Field::neg(self)
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

impl fmt::Display for GaussRat {
    /// `"a"`, `"b*i"` or `"a+b*i"` / `"a-b*i"` with `a`, `b` in `n/d` form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed gaussian rational {0:?}")]
pub struct ParseGaussError(pub String);

impl FromStr for GaussRat {
    type Err = ParseGaussError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGaussError(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix("*i") else {
            return t.parse::<Rat>().map(GaussRat::real).map_err(|_| err());
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            None => body.parse::<Rat>().map(|im| GaussRat::new(Rat::ZERO, im)).map_err(|_| err()),
            Some(k) => {
                let re: Rat = body[..k].parse().map_err(|_| err())?;
                let im: Rat = body[k..].trim_start_matches('+').parse().map_err(|_| err())?;
                Ok(GaussRat::new(re, im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        for g in [
            GaussRat::from_int(0),
            GaussRat::new(Rat::half(), Rat::ZERO),
            GaussRat::new(Rat::ZERO, Rat::new(-1, 2)),
            GaussRat::new(Rat::new(3, 4), Rat::new(-5, 7)),
            GaussRat::new(Rat::new(-3, 4), Rat::new(5, 7)),
        ] {
            let s = g.to_string();
            assert_eq!(s.parse::<GaussRat>().unwrap(), g, "{s}");
        }
        assert_eq!(GaussRat::new(Rat::half(), Rat::new(1, 3)).to_string(), "1/2+1/3*i");
    }

    #[test]
    fn field_identities() {
        let i = GaussRat::i();
        assert_eq!(&i * &i, GaussRat::from_int(-1));
        let z = GaussRat::new(Rat::new(2, 3), Rat::new(-1, 5));
        assert_eq!(Field::mul(&z, &z.inv()), GaussRat::one());
        assert_eq!(z.conj().conj(), z);
    }
}
