//! Coefficient domains: the integers, prime fields `F_p`, and one level of
//! univariate extension `F_p[t]`.
//!
//! Every [`RingElement`] carries its [`RingSpec`]; binary operations on
//! elements of different rings fail with [`Error::SpecMismatch`].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A prime modulus, checked by trial division on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    PrimeField(Prime),
    /// `F_p[var]`. Only a prime field can be extended, and only once.
    Extension { base: Prime, var: Arc<str> },
}

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        Ok(RingSpec::PrimeField(Prime::new(p)?))
    }

    pub fn extension(p: u64, var: &str) -> Result<Self> {
        if !is_identifier(var) {
            return Err(Error::BadVariable(var.to_string()));
        }
        Ok(RingSpec::Extension {
            base: Prime::new(p)?,
            var: Arc::from(var),
        })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            RingSpec::Integers => 0,
            RingSpec::PrimeField(p) | RingSpec::Extension { base: p, .. } => p.get(),
        }
    }

    pub fn modulus(&self) -> Option<Prime> {
        match self {
            RingSpec::Integers => None,
            RingSpec::PrimeField(p) | RingSpec::Extension { base: p, .. } => Some(*p),
        }
    }

    /// Name of the adjoined indeterminate, if any.
    pub fn extension_var(&self) -> Option<&str> {
        match self {
            RingSpec::Extension { var, .. } => Some(var),
            _ => None,
        }
    }

    pub fn zero(&self) -> RingElement {
        let value = match self {
            RingSpec::Integers => Value::Int(BigInt::zero()),
            RingSpec::PrimeField(_) => Value::Residue(0),
            RingSpec::Extension { .. } => Value::Dense(Vec::new()),
        };
        RingElement {
            spec: self.clone(),
            value,
        }
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    /// The image of an integer under the canonical map `Z -> R`.
    pub fn from_bigint(&self, n: &BigInt) -> RingElement {
        let value = match self {
            RingSpec::Integers => Value::Int(n.clone()),
            RingSpec::PrimeField(p) => Value::Residue(reduce_bigint(n, *p)),
            RingSpec::Extension { base, .. } => {
                let r = reduce_bigint(n, *base);
                Value::Dense(if r == 0 { Vec::new() } else { vec![r] })
            }
        };
        RingElement {
            spec: self.clone(),
            value,
        }
    }

    pub fn from_i64(&self, n: i64) -> RingElement {
        self.from_bigint(&BigInt::from(n))
    }

    /// Builds an element of `F_p[t]` from its ascending coefficient list
    /// (`coeffs[i]` multiplies `t^i`). Coefficients are reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<RingElement> {
        match self {
            RingSpec::Extension { base, .. } => {
                let p = base.get() as i64;
                let mut v: Vec<u64> = coeffs.iter().map(|c| c.rem_euclid(p) as u64).collect();
                trim(&mut v);
                Ok(RingElement {
                    spec: self.clone(),
                    value: Value::Dense(v),
                })
            }
            _ => Err(Error::UnsupportedSpec(format!(
                "{self} has no adjoined indeterminate"
            ))),
        }
    }

    /// The adjoined indeterminate `t` of `F_p[t]`.
    pub fn generator(&self) -> Result<RingElement> {
        self.from_coeffs(&[0, 1])
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "int"),
            RingSpec::PrimeField(p) => write!(f, "zp:{p}"),
            RingSpec::Extension { base, var } => write!(f, "zp:{base}[{var}]"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadRingSpec(s.to_string());
        if s == "int" {
            return Ok(RingSpec::Integers);
        }
        let rest = s.strip_prefix("zp:").ok_or_else(bad)?;
        let (num, var) = match rest.find('[') {
            Some(i) => {
                let var = rest[i + 1..].strip_suffix(']').ok_or_else(bad)?;
                (&rest[..i], Some(var))
            }
            None => (rest, None),
        };
        if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let p: u64 = num.parse().map_err(|_| bad())?;
        match var {
            None => RingSpec::prime_field(p),
            Some(v) => RingSpec::extension(p, v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Int(BigInt),
    /// Canonical residue in `[0, p)`.
    Residue(u64),
    /// Ascending coefficients in `[0, p)`, no trailing zero.
    Dense(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    spec: RingSpec,
    value: Value,
}

fn reduce_bigint(n: &BigInt, p: Prime) -> u64 {
    let m = BigInt::from(p.get());
    let r = ((n % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

impl RingElement {
    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Dense(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_one(),
            Value::Residue(r) => *r == 1,
            Value::Dense(v) => v.as_slice() == [1],
        }
    }

    /// True for elements lying in the image of `Z` (every integer or
    /// residue, and the constants of `F_p[t]`).
    pub fn is_constant(&self) -> bool {
        match &self.value {
            Value::Dense(v) => v.len() <= 1,
            _ => true,
        }
    }

    pub fn as_bigint(&self) -> Option<&BigInt> {
        match &self.value {
            Value::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Residue(r) => Some(*r),
            _ => None,
        }
    }

    /// Ascending coefficient list of an `F_p[t]` element.
    pub fn as_coeffs(&self) -> Option<&[u64]> {
        match &self.value {
            Value::Dense(v) => Some(v),
            _ => None,
        }
    }

    /// True when the integer value is negative. Always false in
    /// characteristic `p`, where residues are printed as-is.
    pub fn is_negative(&self) -> bool {
        matches!(&self.value, Value::Int(n) if n.is_negative())
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: other.spec.to_string(),
            })
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.add_same(other))
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.add_same(&other.neg()))
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.mul_same(other))
    }

    pub(crate) fn add_same(&self, other: &RingElement) -> RingElement {
        debug_assert_eq!(self.spec, other.spec);
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Residue(a), Value::Residue(b)) => {
                Value::Residue(add_mod(*a, *b, self.spec.characteristic()))
            }
            (Value::Dense(a), Value::Dense(b)) => {
                let p = self.spec.characteristic();
                let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                let mut v = long.clone();
                for (x, y) in v.iter_mut().zip(short) {
                    *x = add_mod(*x, *y, p);
                }
                trim(&mut v);
                Value::Dense(v)
            }
            _ => unreachable!("value kind disagrees with spec"),
        };
        RingElement {
            spec: self.spec.clone(),
            value,
        }
    }

    pub(crate) fn add_assign_same(&mut self, other: &RingElement) {
        debug_assert_eq!(self.spec, other.spec);
        match (&mut self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => *a += b,
            (Value::Residue(a), Value::Residue(b)) => {
                *a = add_mod(*a, *b, self.spec.characteristic())
            }
            _ => *self = self.add_same(other),
        }
    }

    pub(crate) fn mul_same(&self, other: &RingElement) -> RingElement {
        debug_assert_eq!(self.spec, other.spec);
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Residue(a), Value::Residue(b)) => {
                Value::Residue(mul_mod(*a, *b, self.spec.characteristic()))
            }
            (Value::Dense(a), Value::Dense(b)) => {
                if a.is_empty() || b.is_empty() {
                    Value::Dense(Vec::new())
                } else {
                    let p = self.spec.characteristic();
                    let mut v = vec![0u64; a.len() + b.len() - 1];
                    for (i, x) in a.iter().enumerate() {
                        for (j, y) in b.iter().enumerate() {
                            v[i + j] = add_mod(v[i + j], mul_mod(*x, *y, p), p);
                        }
                    }
                    // F_p[t] is a domain: leading coefficients multiply to a nonzero value.
                    trim(&mut v);
                    Value::Dense(v)
                }
            }
            _ => unreachable!("value kind disagrees with spec"),
        };
        RingElement {
            spec: self.spec.clone(),
            value,
        }
    }

    pub fn neg(&self) -> RingElement {
        let value = match &self.value {
            Value::Int(a) => Value::Int(-a),
            Value::Residue(a) => Value::Residue(neg_mod(*a, self.spec.characteristic())),
            Value::Dense(a) => {
                let p = self.spec.characteristic();
                Value::Dense(a.iter().map(|&x| neg_mod(x, p)).collect())
            }
        };
        RingElement {
            spec: self.spec.clone(),
            value,
        }
    }

    pub fn pow(&self, mut exp: u64) -> RingElement {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_same(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_same(&base);
            }
        }
        acc
    }

    /// `n * self` for an integer multiplier.
    pub fn scale(&self, n: i64) -> RingElement {
        self.mul_same(&self.spec.from_i64(n))
    }

    /// Rebuilds the element through its public constructors. Used to check
    /// that every operation already returns canonical values.
    pub fn recanonicalize(&self) -> RingElement {
        match &self.value {
            Value::Int(n) => self.spec.from_bigint(n),
            Value::Residue(r) => self.spec.from_bigint(&BigInt::from(*r)),
            Value::Dense(v) => {
                let c: Vec<i64> = v.iter().map(|&x| x as i64).collect();
                self.spec.from_coeffs(&c).expect("dense value implies extension spec")
            }
        }
    }

    /// Multiplicative inverse where it exists in the ring.
    pub fn inverse(&self) -> Option<RingElement> {
        match &self.value {
            Value::Int(n) => {
                if n.is_one() || (-n).is_one() {
                    Some(self.clone())
                } else {
                    None
                }
            }
            Value::Residue(0) => None,
            Value::Residue(_) => Some(self.pow(self.spec.characteristic() - 2)),
            Value::Dense(v) if v.len() == 1 => {
                let p = self.spec.characteristic();
                let inv = RingSpec::PrimeField(Prime(p))
                    .from_bigint(&BigInt::from(v[0]))
                    .pow(p - 2)
                    .as_residue()
                    .expect("prime field residue");
                Some(RingElement {
                    spec: self.spec.clone(),
                    value: Value::Dense(vec![inv]),
                })
            }
            Value::Dense(_) => None,
        }
    }
}

impl fmt::Display for RingElement {
    /// Integers and residues print in decimal; `F_p[t]` elements print in
    /// ascending powers without spaces, e.g. `1+2*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(n) => write!(f, "{n}"),
            Value::Residue(r) => write!(f, "{r}"),
            Value::Dense(v) => {
                if v.is_empty() {
                    return write!(f, "0");
                }
                let var = self.spec.extension_var().unwrap_or("t");
                let mut first = true;
                for (i, &c) in v.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match (i, c) {
                        (0, c) => write!(f, "{c}")?,
                        (1, 1) => write!(f, "{var}")?,
                        (1, c) => write!(f, "{c}*{var}")?,
                        (i, 1) => write!(f, "{var}^{i}")?,
                        (i, c) => write!(f, "{c}*{var}^{i}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// Free-function forms of the basic operations.
pub fn ring_add(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.add(b)
}

pub fn ring_mul(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.mul(b)
}

pub fn characteristic(spec: &RingSpec) -> u64 {
    spec.characteristic()
}
