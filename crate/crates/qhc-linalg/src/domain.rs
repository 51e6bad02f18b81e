//! Coefficient domains: prime fields F_p, the rationals Q, and the
//! localized integers Z_(p) (rationals with denominator coprime to p).
//!
//! Every scalar is exact. F_p elements are reduced residues stored in a
//! machine word; Q and Z_(p) elements are arbitrary-precision reduced
//! fractions. All arithmetic goes through [`Domain`] so that the Z_(p)
//! denominator invariant is enforced in one place.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::LinalgError;

/// A coefficient domain. `PrimeField(p)` and `LocalizedIntegers(p)` require
/// `p` prime; this is verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    PrimeField(u64),
    Rationals,
    LocalizedIntegers(u64),
}

/// An exact scalar. `Fp` is a reduced residue in `0..p`; `Big` is a reduced
/// fraction (denominator positive). Which variant is legal depends on the
/// domain: `Fp` for prime fields, `Big` for Q and Z_(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u64),
    Big(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// p-adic valuation of a nonzero integer.
fn int_valuation(n: &BigInt, p: u64) -> u64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

impl Domain {
    /// Construct a prime field, verifying primality.
    pub fn prime_field(p: u64) -> Result<Domain, LinalgError> {
        if is_prime(p) {
            Ok(Domain::PrimeField(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    /// Construct the integers localized at `p`, verifying primality.
    pub fn localized_integers(p: u64) -> Result<Domain, LinalgError> {
        if is_prime(p) {
            Ok(Domain::LocalizedIntegers(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    /// Parse a ring spec string: `"f2"`, `"f5"`, ... for prime fields, `"q"`
    /// for the rationals, `"zloc2"`, `"zloc3"`, ... for localized integers.
    pub fn parse(spec: &str) -> Result<Domain, LinalgError> {
        let bad = || LinalgError::BadRingSpec(spec.to_string());
        if spec == "q" {
            Ok(Domain::Rationals)
        } else if let Some(digits) = spec.strip_prefix('f') {
            let p: u64 = digits.parse().map_err(|_| bad())?;
            Domain::prime_field(p)
        } else if let Some(digits) = spec.strip_prefix("zloc") {
            let p: u64 = digits.parse().map_err(|_| bad())?;
            Domain::localized_integers(p)
        } else {
            Err(bad())
        }
    }

    /// The ring spec string accepted by [`Domain::parse`].
    pub fn spec_string(&self) -> String {
        match self {
            Domain::PrimeField(p) => format!("f{p}"),
            Domain::Rationals => "q".to_string(),
            Domain::LocalizedIntegers(p) => format!("zloc{p}"),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Domain::PrimeField(_) | Domain::Rationals)
    }

    /// The residue characteristic: p for F_p and Z_(p), 0 for Q.
    pub fn residue_characteristic(&self) -> u64 {
        match self {
            Domain::PrimeField(p) | Domain::LocalizedIntegers(p) => *p,
            Domain::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Domain::PrimeField(_) => Scalar::Fp(0),
            _ => Scalar::Big(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Domain::PrimeField(p) => Scalar::Fp(1 % p),
            _ => Scalar::Big(BigRational::one()),
        }
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            Domain::PrimeField(p) => Scalar::Fp(n.rem_euclid(*p as i64) as u64),
            _ => Scalar::Big(BigRational::from_integer(BigInt::from(n))),
        }
    }

    fn check<'a>(&self, s: &'a Scalar) -> (u64, Option<&'a BigRational>) {
        match (self, s) {
            (Domain::PrimeField(p), Scalar::Fp(v)) => {
                debug_assert!(v < p, "unreduced residue");
                (*p, None)
            }
            (Domain::Rationals, Scalar::Big(r)) => (0, Some(r)),
            (Domain::LocalizedIntegers(p), Scalar::Big(r)) => (*p, Some(r)),
            _ => panic!("scalar {s:?} does not belong to domain {self:?}"),
        }
    }

    /// True when `s` is a legal element of this domain (reduced residue for
    /// F_p; for Z_(p), a fraction with denominator coprime to p).
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Domain::PrimeField(p), Scalar::Fp(v)) => v < p,
            (Domain::Rationals, Scalar::Big(_)) => true,
            (Domain::LocalizedIntegers(p), Scalar::Big(r)) => {
                int_valuation(r.denom(), *p) == 0 || r.is_zero()
            }
            _ => false,
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Fp(v) => *v == 0,
            Scalar::Big(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let (p, _) = self.check(a);
                Scalar::Fp((x + y) % p)
            }
            (Scalar::Big(x), Scalar::Big(y)) => Scalar::Big(x + y),
            _ => panic!("mixed scalar variants"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Fp(x) => {
                let (p, _) = self.check(a);
                Scalar::Fp(if *x == 0 { 0 } else { p - x })
            }
            Scalar::Big(x) => Scalar::Big(-x),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let (p, _) = self.check(a);
                Scalar::Fp(mul_mod(*x, *y, p))
            }
            (Scalar::Big(x), Scalar::Big(y)) => Scalar::Big(x * y),
            _ => panic!("mixed scalar variants"),
        }
    }

    /// True when `s` is invertible in the domain. In Z_(p) that means
    /// p-valuation zero.
    pub fn is_unit(&self, s: &Scalar) -> bool {
        if self.is_zero(s) {
            return false;
        }
        match self {
            Domain::PrimeField(_) | Domain::Rationals => true,
            Domain::LocalizedIntegers(p) => {
                let (_, r) = self.check(s);
                int_valuation(r.unwrap().numer(), *p) == 0
            }
        }
    }

    /// Multiplicative inverse, `None` for zero or a non-unit of Z_(p).
    pub fn inv(&self, s: &Scalar) -> Option<Scalar> {
        if !self.is_unit(s) {
            return None;
        }
        Some(match s {
            Scalar::Fp(v) => {
                let (p, _) = self.check(s);
                Scalar::Fp(pow_mod(*v, p - 2, p))
            }
            Scalar::Big(r) => Scalar::Big(r.recip()),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Exact division `a / b` inside the domain. Unlike [`Domain::div`] the
    /// divisor need not be a unit: over Z_(p) the quotient exists whenever
    /// v_p(a) >= v_p(b). `None` when `b` is zero or the quotient leaves the
    /// domain.
    pub fn exact_div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        if self.is_zero(b) {
            return None;
        }
        match (a, b) {
            (Scalar::Fp(_), Scalar::Fp(_)) => self.div(a, b),
            (Scalar::Big(x), Scalar::Big(y)) => {
                let q = Scalar::Big(x / y);
                if self.contains(&q) {
                    Some(q)
                } else {
                    None
                }
            }
            _ => panic!("mixed scalar variants"),
        }
    }

    /// p-valuation of a nonzero scalar: 0 in a field, v_p(num) in Z_(p).
    /// `None` for zero.
    pub fn valuation(&self, s: &Scalar) -> Option<u64> {
        if self.is_zero(s) {
            return None;
        }
        match self {
            Domain::PrimeField(_) | Domain::Rationals => Some(0),
            Domain::LocalizedIntegers(p) => {
                let (_, r) = self.check(s);
                let r = r.unwrap();
                Some(int_valuation(r.numer(), *p))
            }
        }
    }

    /// Image of `s` in the residue field (F_p for Z_(p) and F_p itself;
    /// identity on Q is not defined — errors for Q).
    pub fn residue(&self, s: &Scalar) -> Result<Scalar, LinalgError> {
        match self {
            Domain::PrimeField(_) => Ok(s.clone()),
            Domain::Rationals => Err(LinalgError::DomainMismatch(
                "rationals have no residue field reduction".into(),
            )),
            Domain::LocalizedIntegers(p) => {
                let (_, r) = self.check(s);
                let r = r.unwrap();
                let p_big = BigInt::from(*p);
                let num = r.numer().mod_floor_big(&p_big);
                let den = r.denom().mod_floor_big(&p_big);
                let den_inv = pow_mod(den, *p - 2, *p);
                Ok(Scalar::Fp(mul_mod(num, den_inv, *p)))
            }
        }
    }

    /// The residue-field domain for F_p / Z_(p).
    pub fn residue_domain(&self) -> Result<Domain, LinalgError> {
        match self {
            Domain::PrimeField(p) | Domain::LocalizedIntegers(p) => Ok(Domain::PrimeField(*p)),
            Domain::Rationals => Err(LinalgError::DomainMismatch(
                "rationals have no residue field".into(),
            )),
        }
    }

    /// Parse an exact coefficient string: an integer (`"3"`, `"-2"`) or a
    /// fraction (`"1/2"`). For F_p the value is reduced mod p (fractions are
    /// allowed when the denominator is invertible); for Z_(p) the denominator
    /// must be coprime to p.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::BadScalar(text.to_string(), self.spec_string());
        let (num_s, den_s) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let num: BigInt = num_s.parse().map_err(|_| bad())?;
        let den: BigInt = den_s.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Domain::PrimeField(p) => {
                let p_big = BigInt::from(*p);
                let d = den.mod_floor_big(&p_big);
                if d == 0 {
                    return Err(bad());
                }
                let n = num.mod_floor_big(&p_big);
                Ok(Scalar::Fp(mul_mod(n, pow_mod(d, *p - 2, *p), *p)))
            }
            Domain::Rationals => Ok(Scalar::Big(BigRational::new(num, den))),
            Domain::LocalizedIntegers(p) => {
                let r = BigRational::new(num, den);
                if !r.is_zero() && int_valuation(r.denom(), *p) != 0 {
                    return Err(bad());
                }
                Ok(Scalar::Big(r))
            }
        }
    }

    /// Exact string form accepted back by [`Domain::parse_scalar`].
    pub fn format_scalar(&self, s: &Scalar) -> String {
        self.check(s);
        match s {
            Scalar::Fp(v) => v.to_string(),
            Scalar::Big(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// p^e as a scalar of this domain.
    pub fn prime_power(&self, e: u64) -> Scalar {
        match self {
            Domain::PrimeField(p) => {
                if e == 0 {
                    Scalar::Fp(1 % p)
                } else {
                    Scalar::Fp(0)
                }
            }
            Domain::Rationals => Scalar::Big(BigRational::one()),
            Domain::LocalizedIntegers(p) => {
                let mut n = BigInt::one();
                for _ in 0..e {
                    n *= BigInt::from(*p);
                }
                Scalar::Big(BigRational::from_integer(n))
            }
        }
    }
}

trait ModFloorBig {
    fn mod_floor_big(&self, p: &BigInt) -> u64;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, p: &BigInt) -> u64 {
        let mut m = self % p;
        if m.is_negative() {
            m += p;
        }
        m.to_u64().expect("residue fits in u64")
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::PrimeField(p) => write!(f, "F_{p}"),
            Domain::Rationals => write!(f, "Q"),
            Domain::LocalizedIntegers(p) => write!(f, "Z_({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ring_specs() {
        assert_eq!(Domain::parse("f2").unwrap(), Domain::PrimeField(2));
        assert_eq!(Domain::parse("f5").unwrap(), Domain::PrimeField(5));
        assert_eq!(Domain::parse("q").unwrap(), Domain::Rationals);
        assert_eq!(Domain::parse("zloc3").unwrap(), Domain::LocalizedIntegers(3));
        assert!(Domain::parse("f4").is_err());
        assert!(Domain::parse("zloc6").is_err());
        assert!(Domain::parse("gf2").is_err());
    }

    #[test]
    fn primality_is_verified() {
        assert!(Domain::prime_field(2).is_ok());
        assert!(Domain::prime_field(97).is_ok());
        assert!(Domain::prime_field(1).is_err());
        assert!(Domain::prime_field(91).is_err()); // 7 * 13
    }

    #[test]
    fn field_arithmetic_mod_5() {
        let f5 = Domain::parse("f5").unwrap();
        let a = f5.from_integer(3);
        let b = f5.from_integer(4);
        assert_eq!(f5.mul(&a, &b), f5.from_integer(2)); // 12 = 2 mod 5
        assert_eq!(f5.inv(&a).unwrap(), f5.from_integer(2)); // 3*2 = 6 = 1
        assert_eq!(f5.add(&a, &b), f5.from_integer(2));
    }

    #[test]
    fn localized_integers_units_and_valuation() {
        let z2 = Domain::parse("zloc2").unwrap();
        let half = z2.parse_scalar("1/2");
        assert!(half.is_err(), "1/2 is not 2-integral");
        let third = z2.parse_scalar("1/3").unwrap();
        assert!(z2.is_unit(&third));
        let four = z2.from_integer(4);
        assert!(!z2.is_unit(&four));
        assert_eq!(z2.valuation(&four), Some(2));
        assert_eq!(z2.valuation(&third), Some(0));
        assert_eq!(z2.valuation(&z2.zero()), None);
        assert_eq!(z2.inv(&four), None);
        let six = z2.from_integer(6);
        assert_eq!(z2.valuation(&six), Some(1));
    }

    #[test]
    fn residue_reduction() {
        let z3 = Domain::parse("zloc3").unwrap();
        let x = z3.parse_scalar("7/2").unwrap(); // 7 * 2^{-1} = 1 * 2 = 2 mod 3
        assert_eq!(z3.residue(&x).unwrap(), Scalar::Fp(2));
        let y = z3.from_integer(6);
        assert_eq!(z3.residue(&y).unwrap(), Scalar::Fp(0));
    }

    #[test]
    fn scalar_round_trip() {
        let q = Domain::Rationals;
        for text in ["0", "-7", "22/7", "-3/2"] {
            let s = q.parse_scalar(text).unwrap();
            assert_eq!(q.format_scalar(&s), text);
        }
        let f7 = Domain::parse("f7").unwrap();
        assert_eq!(f7.parse_scalar("10").unwrap(), Scalar::Fp(3));
        assert_eq!(f7.parse_scalar("1/2").unwrap(), Scalar::Fp(4)); // 2*4 = 8 = 1
    }
}
