//! Coefficient rings: ℤ (arbitrary precision), ℚ and ℤ/p.
//!
//! A ring is a value, not just a type, so that ℤ/p can carry its modulus.
//! Every algorithm in [`crate::chains`] is generic over [`Ring`] and is
//! instantiated through [`with_ring!`](crate::with_ring).

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Euclidean ring with a canonical choice of associate and remainder.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn spec(&self) -> CoeffSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_field(&self) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// Euclidean size; zero exactly for the zero element.
    fn norm(&self, a: &Self::Elem) -> BigUint;
    /// Quotient of `a` by non-zero `b` leaving the canonical remainder
    /// (in `[0, |b|)` over ℤ, zero over a field).
    fn quo(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The unit `u` for which `u·a` is the canonical associate of non-zero `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;
    fn unit_inverse(&self, u: &Self::Elem) -> Self::Elem;
    /// The integer value of `a` when the ring is ℤ.
    fn as_integer(&self, a: &Self::Elem) -> Option<BigInt>;
    fn format(&self, a: &Self::Elem) -> String;

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let q = self.quo(a, b);
        self.is_zero(&self.sub(a, &self.mul(&q, b))).then_some(q)
    }
}

/// Which coefficient ring to compute over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CoeffSpec {
    #[default]
    Integers,
    Rationals,
    PrimeField(u64),
}

impl CoeffSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoeffSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoeffSpec::Integers)
    }
}

impl fmt::Display for CoeffSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffSpec::Integers => write!(f, "z"),
            CoeffSpec::Rationals => write!(f, "q"),
            CoeffSpec::PrimeField(p) => write!(f, "zp:{p}"),
        }
    }
}

impl FromStr for CoeffSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" | "zz" | "int" | "integers" => Ok(CoeffSpec::Integers),
            "q" | "qq" | "rationals" => Ok(CoeffSpec::Rationals),
            other => {
                let p =
                    other.strip_prefix("zp:").ok_or_else(|| Error::Parse(format!("unknown coefficient spec `{s}`")))?;
                let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad modulus in `{s}`")))?;
                CoeffSpec::prime_field(p)
            }
        }
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn spec(&self) -> CoeffSpec {
        CoeffSpec::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_field(&self) -> bool {
        false
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
    fn norm(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }
    fn quo(&self, a: &BigInt, b: &BigInt) -> BigInt {
        // Euclidean division: remainder in [0, |b|).
        let (q, r) = a.div_mod_floor(b);
        if r.is_negative() {
            if b.is_positive() {
                q - 1
            } else {
                q + 1
            }
        } else {
            q
        }
    }
    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    }
    fn unit_inverse(&self, u: &BigInt) -> BigInt {
        u.clone()
    }
    fn as_integer(&self, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> CoeffSpec {
        CoeffSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn norm(&self, a: &BigRational) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            BigUint::one()
        }
    }
    fn quo(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
    fn normalizing_unit(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn unit_inverse(&self, u: &BigRational) -> BigRational {
        u.recip()
    }
    fn as_integer(&self, _: &BigRational) -> Option<BigInt> {
        None
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// ℤ/p for a prime `p < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 63 {
            return Err(Error::Parse(format!("modulus {p} is too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        pow_mod(a, self.p - 2, self.p)
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn spec(&self) -> CoeffSpec {
        CoeffSpec::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - b) as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_field(&self) -> bool {
        true
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn norm(&self, a: &u64) -> BigUint {
        BigUint::from(u8::from(*a != 0))
    }
    fn quo(&self, a: &u64, b: &u64) -> u64 {
        self.mul(a, &self.inv(*b))
    }
    fn normalizing_unit(&self, a: &u64) -> u64 {
        self.inv(*a)
    }
    fn unit_inverse(&self, u: &u64) -> u64 {
        self.inv(*u)
    }
    fn as_integer(&self, _: &u64) -> Option<BigInt> {
        None
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Runs `$body` with `$r` bound to the ring selected by a [`CoeffSpec`].
/// Must be used inside a function returning [`crate::Result`].
#[macro_export]
macro_rules! with_ring {
    ($spec:expr, |$r:ident| $body:expr) => {
        match $spec {
            $crate::chains::CoeffSpec::Integers => {
                let $r = $crate::chains::Integers;
                $body
            }
            $crate::chains::CoeffSpec::Rationals => {
                let $r = $crate::chains::Rationals;
                $body
            }
            $crate::chains::CoeffSpec::PrimeField(p) => {
                let $r = $crate::chains::PrimeField::new(p)?;
                $body
            }
        }
    };
}
