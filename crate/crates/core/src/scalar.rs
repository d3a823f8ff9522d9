//! Exact coefficient fields.
//!
//! Every structure constant in the crate lives in a type implementing [`Scalar`]:
//! arbitrary-precision rationals ([`Rational`]) by default, or a prime field
//! [`Fp`] with the modulus fixed at compile time.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary-precision rational number, always kept reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed coefficient {0:?}: expected \"num\" or \"num/den\"")]
    Malformed(String),
    #[error("zero denominator in coefficient {0:?}")]
    ZeroDenominator(String),
    #[error("denominator of {0:?} is not invertible modulo {1}")]
    NotInvertible(String, u64),
}

/// Descriptor of the coefficient field, as it appears in the JSON formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Gf { p: u64 },
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Gf { p } => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = String;

    /// Accepts `rational`, `q`, or `gf:P`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" | "q" | "Q" => Ok(FieldKind::Rational),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .ok_or_else(|| format!("unknown field {s:?}; expected `rational` or `gf:P`"))?;
                let p: u64 = p.parse().map_err(|_| format!("bad prime in {s:?}"))?;
                Ok(FieldKind::Gf { p })
            }
        }
    }
}

/// An exact field element.
///
/// Equality is structural and decidable; there is no tolerance anywhere.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// The field this type implements.
    fn field() -> FieldKind;

    /// Image of `num/den` in the field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, ScalarError>;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Canonical `"num/den"` rendering; `parse_exact` inverts it.
    fn to_exact_string(&self) -> String;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(&BigInt::from(n), &BigInt::one()).expect("denominator one is invertible")
    }

    fn parse_exact(s: &str) -> Result<Self, ScalarError> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let parse = |t: &str| {
            if t.is_empty() || t.trim() != t {
                return Err(ScalarError::Malformed(s.to_string()));
            }
            BigInt::from_str(t).map_err(|_| ScalarError::Malformed(s.to_string()))
        };
        let num = parse(num)?;
        let den = parse(den)?;
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator(s.to_string()));
        }
        Self::from_ratio(&num, &den)
    }
}

impl Scalar for Rational {
    fn field() -> FieldKind {
        FieldKind::Rational
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator(format!("{num}/{den}")));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn to_exact_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// Residue class modulo the prime `P`, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(is_prime(P) && P < (1 << 62), "Fp modulus must be a prime below 2^62");

    pub fn new(value: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::CHECK;
        Fp(value % P)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

fn reduce_mod(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    debug_assert!(!r.is_negative());
    r.to_u64().expect("residue fits in u64")
}

impl<const P: u64> Scalar for Fp<P> {
    fn field() -> FieldKind {
        FieldKind::Gf { p: P }
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, ScalarError> {
        let d = Fp::<P>::new(reduce_mod(den, P));
        let inv = d
            .inverse()
            .ok_or_else(|| ScalarError::NotInvertible(format!("{num}/{den}"), P))?;
        Ok(Fp::new(reduce_mod(num, P)) * inv)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn to_exact_string(&self) -> String {
        format!("{}/1", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_is_reduced_with_positive_denominator() {
        let x = Rational::parse_exact("6/-4").unwrap();
        assert_eq!(x.to_exact_string(), "-3/2");
        assert_eq!(Rational::parse_exact("5").unwrap().to_exact_string(), "5/1");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            Rational::parse_exact("1/0"),
            Err(ScalarError::ZeroDenominator(_))
        ));
        assert!(matches!(
            Fp::<7>::parse_exact("3/0"),
            Err(ScalarError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn malformed_rejected() {
        for bad in ["", "1/", "/2", "a/b", " 1/2", "1.5", "1/2/3"] {
            assert!(Rational::parse_exact(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn gf_division_and_non_invertible_denominator() {
        assert_eq!(Fp::<7>::parse_exact("1/2").unwrap(), Fp::new(4));
        assert_eq!(Fp::<7>::parse_exact("-1/1").unwrap(), Fp::new(6));
        assert!(matches!(
            Fp::<7>::parse_exact("1/14"),
            Err(ScalarError::NotInvertible(_, 7))
        ));
    }

    #[test]
    fn gf_inverse() {
        for v in 1..13u64 {
            let x = Fp::<13>::new(v);
            assert_eq!(x * x.inverse().unwrap(), Fp::one());
        }
        assert!(Fp::<13>::zero().inverse().is_none());
    }

    #[test]
    fn field_kind_parses() {
        assert_eq!("rational".parse::<FieldKind>().unwrap(), FieldKind::Rational);
        assert_eq!("gf:5".parse::<FieldKind>().unwrap(), FieldKind::Gf { p: 5 });
        assert!("gf:x".parse::<FieldKind>().is_err());
        let json = serde_json::to_string(&FieldKind::Gf { p: 7 }).unwrap();
        assert_eq!(json, r#"{"kind":"gf","p":7}"#);
    }

    proptest! {
        #[test]
        fn rational_print_parse_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let x = q(n, d);
            prop_assert_eq!(Rational::parse_exact(&x.to_exact_string()).unwrap(), x);
        }

        #[test]
        fn gf_print_parse_round_trip(v in 0u64..101) {
            let x = Fp::<101>::new(v);
            prop_assert_eq!(Fp::<101>::parse_exact(&x.to_exact_string()).unwrap(), x);
        }

        #[test]
        fn gf_field_axioms(a in 0u64..31, b in 0u64..31, c in 0u64..31) {
            let (a, b, c) = (Fp::<31>::new(a), Fp::<31>::new(b), Fp::<31>::new(c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a - b) + b, a);
            prop_assert_eq!(a + (-a), Fp::zero());
        }
    }
}
