//! Exact coefficient fields for the algebra oracle: arbitrary-precision
//! rationals by default, with a prime field available through the
//! `SYZ_FIELD` environment variable (`rational` or `prime:p`) for
//! faster runs.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("`{0}` is not a field choice; use `rational` or `prime:p`")]
    BadChoice(String),
    #[error("{0} is not a prime in the supported range 2..=2^31")]
    BadPrime(u64),
}

pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

/// Arbitrary-precision rational numbers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rat(pub BigRational);

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }

    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverting zero");
        Rat(self.0.recip())
    }

    fn from_i64(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }
}

impl Rat {
    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }
}

pub const DEFAULT_PRIME: u64 = 32003;

static PRIME_MODULUS: AtomicU64 = AtomicU64::new(DEFAULT_PRIME);

/// The modulus every `Fp` value currently computes with.
pub fn prime_modulus() -> u64 {
    PRIME_MODULUS.load(Ordering::Relaxed)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Installs the modulus used by every `Fp` value created afterwards.
/// Call once at startup, before any prime-field computation.
pub fn set_prime_modulus(p: u64) -> Result<(), FieldError> {
    if p > (1 << 31) || !is_prime(p) {
        return Err(FieldError::BadPrime(p));
    }
    PRIME_MODULUS.store(p, Ordering::Relaxed);
    Ok(())
}

/// An element of the prime field with `prime_modulus()` elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp(pub u64);

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % prime_modulus())
    }

    fn sub(&self, other: &Self) -> Self {
        let m = prime_modulus();
        Fp((self.0 + m - other.0) % m)
    }

    fn mul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % prime_modulus())
    }

    fn neg(&self) -> Self {
        let m = prime_modulus();
        Fp((m - self.0) % m)
    }

    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverting zero");
        let m = prime_modulus();
        let mut result = 1u64;
        let mut base = self.0;
        let mut exp = m - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        Fp(result)
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(prime_modulus() as i64) as u64)
    }
}

/// Which field a run should use: exact rationals by default, or the
/// prime field with a chosen modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FieldChoice {
    pub fn parse(s: &str) -> Result<FieldChoice, FieldError> {
        match s {
            "rational" => Ok(FieldChoice::Rational),
            "prime" => Ok(FieldChoice::Prime(DEFAULT_PRIME)),
            _ => {
                let num = s
                    .strip_prefix("prime:")
                    .ok_or_else(|| FieldError::BadChoice(s.to_string()))?;
                let p: u64 = num
                    .parse()
                    .map_err(|_| FieldError::BadChoice(s.to_string()))?;
                if p > (1 << 31) || !is_prime(p) {
                    return Err(FieldError::BadPrime(p));
                }
                Ok(FieldChoice::Prime(p))
            }
        }
    }

    /// Reads `SYZ_FIELD`; unset picks exact rationals.
    pub fn from_env() -> Result<FieldChoice, FieldError> {
        match std::env::var("SYZ_FIELD") {
            Ok(s) => FieldChoice::parse(&s),
            Err(_) => Ok(FieldChoice::Rational),
        }
    }

    /// Makes a prime choice effective for `Fp` arithmetic.
    pub fn install(&self) -> Result<(), FieldError> {
        match self {
            FieldChoice::Rational => Ok(()),
            FieldChoice::Prime(p) => set_prime_modulus(*p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_axioms() {
        let a = Rat::from_i64(7);
        let b = Rat::from_i64(-3);
        assert_eq!(a.add(&b), Rat::from_i64(4));
        assert_eq!(a.mul(&b), Rat::from_i64(-21));
        assert_eq!(a.mul(&a.inv()), Rat::one());
        assert_eq!(b.sub(&b), Rat::zero());
    }

    #[test]
    fn prime_field_inverses() {
        for v in [1, 2, 3, 5, 100, 31999] {
            let x = Fp(v);
            assert_eq!(x.mul(&x.inv()), Fp::one());
        }
        assert_eq!(Fp::from_i64(-1), Fp(DEFAULT_PRIME - 1));
    }

    #[test]
    fn field_choices_parse() {
        assert_eq!(FieldChoice::parse("rational"), Ok(FieldChoice::Rational));
        assert_eq!(
            FieldChoice::parse("prime"),
            Ok(FieldChoice::Prime(DEFAULT_PRIME))
        );
        assert_eq!(FieldChoice::parse("prime:101"), Ok(FieldChoice::Prime(101)));
        assert!(matches!(
            FieldChoice::parse("prime:100"),
            Err(FieldError::BadPrime(100))
        ));
        assert!(matches!(
            FieldChoice::parse("float"),
            Err(FieldError::BadChoice(_))
        ));
    }

    #[test]
    fn primality_check() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }
}
