use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinError;

/// Largest admissible prime modulus (exclusive). Residue products fit in `u128` for any
/// `u64`, but primality is checked by trial division, so moduli are kept below 2³².
pub const MAX_MODULUS: u64 = 1 << 32;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime { p: u64 },
}

impl Field {
    /// The prime field 𝔽_p; fails unless `p` is a prime below [`MAX_MODULUS`].
    pub fn prime(p: u64) -> Result<Field, LinError> {
        if p >= MAX_MODULUS {
            return Err(LinError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(LinError::NotPrime(p));
        }
        Ok(Field::Prime { p })
    }

    /// Re-checks the primality invariant (useful after deserialization).
    pub fn validate(self) -> Result<Field, LinError> {
        match self {
            Field::Rational => Ok(self),
            Field::Prime { p } => Field::prime(p),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime { p } => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar, LinError> {
        self.from_big(BigInt::from(num), BigInt::from(den))
    }

    fn from_big(self, num: BigInt, den: BigInt) -> Result<Scalar, LinError> {
        if den.is_zero() {
            return Err(LinError::Parse("zero denominator".into()));
        }
        match self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(num, den))),
            Field::Prime { p } => {
                let n = residue(&num, p);
                let d = residue(&den, p);
                if d == 0 {
                    return Err(LinError::NotInvertible { p });
                }
                Ok(Scalar::Fp {
                    v: mul_mod(n, inv_mod(d, p), p),
                    p,
                })
            }
        }
    }

    /// Parses `"a"`, `"-a"` or `"a/b"`. Over 𝔽_p the value is reduced (denominator must be a unit).
    pub fn parse(self, text: &str) -> Result<Scalar, LinError> {
        let text = text.trim();
        let bad = || LinError::Parse(format!("not a scalar: {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
        };
        self.from_big(num, den)
    }

    /// Maps a scalar into this field: rationals reduce mod p, residues must already live here.
    pub fn reduce(self, s: &Scalar) -> Result<Scalar, LinError> {
        match (s, self) {
            (Scalar::Q(q), _) => self.from_big(q.numer().clone(), q.denom().clone()),
            (Scalar::Fp { p, .. }, Field::Prime { p: target }) if *p == target => Ok(s.clone()),
            _ => Err(LinError::FieldMismatch),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime { p } => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinError;

    /// Accepts `rational`, `Q`, `prime:P` or `F_P`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(Field::Rational);
        }
        let digits = s
            .strip_prefix("prime:")
            .or_else(|| s.strip_prefix("F_"))
            .ok_or_else(|| LinError::Parse(format!("unknown field {s:?}")))?;
        let p = digits
            .parse::<u64>()
            .map_err(|_| LinError::Parse(format!("bad modulus {digits:?}")))?;
        Field::prime(p)
    }
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed by
/// `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: inv_mod(*v, *p),
                p: *p,
            },
        })
    }

    /// The integer value when this is a rational with denominator 1 that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { v, .. } => i64::try_from(*v).ok(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn mismatch() -> ! {
    panic!("scalar field mismatch")
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $fp:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($q(a, b)),
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) if p == p2 => Scalar::Fp {
                        v: $fp(*a, *b, *p),
                        p: *p,
                    },
                    _ => mismatch(),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| {
    ((a as u128 + b as u128) % p as u128) as u64
});
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
});
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, mul_mod);
binop!(Div, div, |a: &BigRational, b: &BigRational| {
    assert!(!b.is_zero(), "division by zero");
    a / b
}, |a: u64, b: u64, p: u64| {
    assert!(b != 0, "division by zero");
    mul_mod(a, inv_mod(b, p), p)
});

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
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

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let egcd = (a as i128).extended_gcd(&(p as i128));
    debug_assert_eq!(egcd.gcd, 1);
    egcd.x.rem_euclid(p as i128) as u64
}

fn residue(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_rationals() {
        let q = Field::Rational;
        assert_eq!(q.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse("-2/-1").unwrap().to_string(), "2");
        assert_eq!(q.parse("0/5").unwrap().to_string(), "0");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn residues_reduce() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.parse("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse("1/2").unwrap().to_string(), "3");
        assert!(matches!(f5.parse("1/5"), Err(LinError::NotInvertible { p: 5 })));
        let half = f5.parse("1/2").unwrap();
        assert!((&half + &half).is_one());
        assert!((half.inv().unwrap() * f5.from_i64(3)).is_one());
    }

    #[test]
    fn field_specs() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert_eq!("prime:7".parse::<Field>().unwrap(), Field::Prime { p: 7 });
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert!(MAX_MODULUS.to_string().parse::<u64>().is_ok());
    }

    #[test]
    fn reduce_rational_into_prime() {
        let f3 = Field::prime(3).unwrap();
        let x = Field::Rational.parse("5/2").unwrap();
        assert_eq!(f3.reduce(&x).unwrap().to_string(), "1");
        let y = Field::Rational.parse("1/3").unwrap();
        assert!(f3.reduce(&y).is_err());
    }
}
