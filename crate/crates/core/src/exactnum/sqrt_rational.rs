use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// An exact value `coeff * sqrt(radicand)`.
///
/// The radicand is kept as a square-free positive integer: any square factor
/// and any denominator are folded into `coeff`, so `sqrt(2/3)` is stored as
/// `1/3 * sqrt(6)`. With that convention every value has exactly one
/// representation and structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    coeff: Rational,
    radicand: BigInt,
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational { coeff: Rational::zero(), radicand: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        SqrtRational { coeff: q, radicand: BigInt::one() }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `coeff * sqrt(radicand)` for any non-negative rational radicand.
    pub fn new(coeff: Rational, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(radicand.to_string()));
        }
        if coeff.is_zero() || radicand.is_zero() {
            return Ok(Self::zero());
        }
        // sqrt(n/d) = sqrt(n*d) / d
        let denom = radicand.denom().clone();
        let (outside, inside) = square_free_split(&(radicand.numer() * &denom));
        Ok(Self::from_parts(coeff * Rational::new(outside, denom), inside))
    }

    /// `sign(q) * sqrt(|q|)`.
    pub fn from_signed_square(q: &Rational) -> Self {
        let sign = if q.is_negative() { -Rational::one() } else { Rational::one() };
        Self::new(sign, q.abs()).expect("absolute value is non-negative")
    }

    /// Assembles a value from a radicand already known to be square-free.
    pub(crate) fn from_parts(coeff: Rational, square_free: BigInt) -> Self {
        debug_assert!(square_free.is_positive());
        if coeff.is_zero() {
            Self::zero()
        } else {
            SqrtRational { coeff, radicand: square_free }
        }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    /// `value * |value|`, which is rational.
    pub fn signed_square(&self) -> Rational {
        let sq = &self.coeff * &self.coeff * Rational::from_integer(self.radicand.clone());
        if self.coeff.is_negative() {
            -sq
        } else {
            sq
        }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        Self::from_parts(&self.coeff * q, self.radicand.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.radicand != other.radicand {
            return Err(Error::IncompatibleRadicands(
                self.radicand.to_string(),
                other.radicand.to_string(),
            ));
        }
        Ok(Self::from_parts(&self.coeff + &other.coeff, self.radicand.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other.clone())
    }

    /// Display-only float conversion.
    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        c * r.sqrt()
    }
}

pub fn sqrt_rational_mul(u: &SqrtRational, v: &SqrtRational) -> SqrtRational {
    u * v
}

pub fn sqrt_rational_add(u: &SqrtRational, v: &SqrtRational) -> Result<SqrtRational> {
    u.checked_add(v)
}

impl Default for SqrtRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;

    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        if self.is_zero() || rhs.is_zero() {
            return SqrtRational::zero();
        }
        // both radicands square-free: r1*r2 = g^2 * (r1/g) * (r2/g), and the
        // two cofactors are coprime and square-free
        let g = self.radicand.gcd(&rhs.radicand);
        let inside = (&self.radicand / &g) * (&rhs.radicand / &g);
        let coeff = &self.coeff * &rhs.coeff * Rational::from_integer(g);
        SqrtRational::from_parts(coeff, inside)
    }
}

impl Mul for SqrtRational {
    type Output = SqrtRational;

    fn mul(self, rhs: SqrtRational) -> SqrtRational {
        &self * &rhs
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;

    fn neg(self) -> SqrtRational {
        SqrtRational { coeff: -self.coeff, radicand: self.radicand }
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{}*sqrt({}/1)",
            self.coeff.numer(),
            self.coeff.denom(),
            self.radicand
        )
    }
}

impl FromStr for SqrtRational {
    type Err = Error;

    /// Parses `p/q*sqrt(r/s)`; `p/q` and `sqrt(...)` alone are accepted too.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "sqrt-rational", input: s.to_owned() };
        let s = s.trim();
        let (coeff_part, rad_part) = match s.find("sqrt(") {
            Some(idx) => {
                let head = s[..idx].trim_end();
                let head = head.strip_suffix('*').map(str::trim_end).unwrap_or(head);
                let inner = s[idx + 5..].strip_suffix(')').ok_or_else(err)?;
                (head, Some(inner))
            }
            None => (s, None),
        };
        let coeff = match coeff_part {
            "" => Rational::one(),
            "-" => -Rational::one(),
            text => parse_rational(text).ok_or_else(err)?,
        };
        let radicand = match rad_part {
            Some(text) => parse_rational(text).ok_or_else(err)?,
            None => Rational::one(),
        };
        SqrtRational::new(coeff, radicand)
    }
}

impl Serialize for SqrtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SqrtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Splits `n = k^2 * f` with `f` square-free; returns `(k, f)`.
///
/// Plain trial division, fine for the factorial-built values that occur here.
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_negative(), "square_free_split of a negative number");
    if n.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let mut rest: BigUint = n.magnitude().clone();
    let mut outside = BigUint::one();
    let mut inside = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut exp = 0u32;
        while (&rest % &d).is_zero() {
            rest /= &d;
            exp += 1;
        }
        if exp > 0 {
            outside *= d.pow(exp / 2);
            if exp % 2 == 1 {
                inside *= &d;
            }
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    inside *= rest;
    (BigInt::from_biguint(Sign::Plus, outside), BigInt::from_biguint(Sign::Plus, inside))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sr(s: &str) -> SqrtRational {
        s.parse().unwrap()
    }

    #[test]
    fn mul_examples() {
        assert_eq!(sr("1*sqrt(2)") * sr("1*sqrt(2)"), sr("2/1*sqrt(1/1)"));
        assert_eq!(sr("3/2*sqrt(1)") * sr("0*sqrt(1)"), SqrtRational::zero());
        assert_eq!(sr("1*sqrt(2/3)") * sr("1*sqrt(6)"), sr("2/1*sqrt(1/1)"));
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            sqrt_rational_add(&sr("1/2*sqrt(3)"), &sr("1/3*sqrt(3)")).unwrap(),
            sr("5/6*sqrt(3)")
        );
        let x = sr("-7/5*sqrt(10)");
        assert_eq!(sqrt_rational_add(&x, &sr("0*sqrt(1)")).unwrap(), x);
        assert!(matches!(
            sqrt_rational_add(&sr("sqrt(2)"), &sr("sqrt(3)")),
            Err(Error::IncompatibleRadicands(..))
        ));
    }

    #[test]
    fn normalization() {
        let v = sr("1*sqrt(2/3)");
        assert_eq!(v.coeff(), &Rational::new(1.into(), 3.into()));
        assert_eq!(v.radicand(), &BigInt::from(6));
        assert_eq!(sr("2*sqrt(9/4)"), SqrtRational::from_integer(3));
        assert_eq!(sr("0*sqrt(5)").radicand(), &BigInt::one());
        assert_eq!(sr("sqrt(72)").to_string(), "6/1*sqrt(2/1)");
        assert!(SqrtRational::new(Rational::one(), Rational::from_integer((-2).into())).is_err());
    }

    #[test]
    fn textual_form() {
        let v = sr("-1/6*sqrt(1/1)");
        assert_eq!(v, SqrtRational::from_rational(Rational::new((-1).into(), 6.into())));
        assert_eq!(v.to_string(), "-1/6*sqrt(1/1)");
        assert_eq!(sr("-1/3").to_string(), "-1/3*sqrt(1/1)");
        assert!("1/0*sqrt(2)".parse::<SqrtRational>().is_err());
        assert!("abc".parse::<SqrtRational>().is_err());
    }

    #[test]
    fn square_free() {
        let (k, f) = square_free_split(&BigInt::from(2 * 2 * 2 * 3 * 5 * 5 * 7));
        assert_eq!((k, f), (BigInt::from(10), BigInt::from(42)));
        assert_eq!(square_free_split(&BigInt::from(1)), (BigInt::one(), BigInt::one()));
        assert_eq!(square_free_split(&BigInt::from(97)), (BigInt::one(), BigInt::from(97)));
    }

    fn arb_sqrt_rational() -> impl Strategy<Value = SqrtRational> {
        (-30i64..30, 1i64..20, 0i64..60, 1i64..60).prop_map(|(p, q, r, s)| {
            SqrtRational::new(Rational::new(p.into(), q.into()), Rational::new(r.into(), s.into()))
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(v in arb_sqrt_rational()) {
            let again = SqrtRational::new(v.coeff().clone(), Rational::from_integer(v.radicand().clone())).unwrap();
            prop_assert_eq!(&again, &v);
            prop_assert_eq!(v.to_string().parse::<SqrtRational>().unwrap(), v);
        }

        #[test]
        fn mul_commutative_associative(u in arb_sqrt_rational(), v in arb_sqrt_rational(), w in arb_sqrt_rational()) {
            prop_assert_eq!(&u * &v, &v * &u);
            prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
            prop_assert_eq!((&u * &v).signed_square(), u.signed_square() * v.signed_square());
        }

        #[test]
        fn perfect_squares_become_rational(p in 0i64..40, q in 1i64..40) {
            let sq = Rational::new((p * p).into(), (q * q).into());
            let v = SqrtRational::new(Rational::one(), sq).unwrap();
            prop_assert!(v.is_rational());
            prop_assert_eq!(v.coeff(), &Rational::new(p.into(), q.into()));
        }
    }
}
