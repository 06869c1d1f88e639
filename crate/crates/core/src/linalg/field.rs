//! Ground fields: the rationals with arbitrary-precision fractions, and prime
//! fields GF(p) with word-sized p.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    /// GF(p), rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!("GF({p}) requires a prime p < 2^31")));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Gf { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Gf {
                value: n.rem_euclid(*p as i64) as u32,
                p: *p,
            },
        }
    }

    pub fn zeros(&self, n: usize) -> Vec<Scalar> {
        vec![self.zero(); n]
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn unit_vector(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = self.zeros(n);
        v[i] = self.one();
        v
    }

    /// Parses `"n"` or `"n/d"`; over GF(p) the fraction is reduced modulo p.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = num.parse().map_err(|_| Error::Parse(format!("invalid scalar {s:?}")))?;
        let d: BigInt = den.parse().map_err(|_| Error::Parse(format!("invalid scalar {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Rationals => Ok(Scalar::Q(BigRational::new(n, d))),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let nm = ((n % &pb) + &pb) % &pb;
                let dm = ((d % &pb) + &pb) % &pb;
                let nv = nm.to_u32().unwrap_or(0);
                let dv = dm.to_u32().unwrap_or(0);
                if dv == 0 {
                    return Err(Error::Parse(format!("denominator of {s:?} vanishes mod {p}")));
                }
                let a = Scalar::Gf { value: nv, p: *p };
                let b = Scalar::Gf { value: dv, p: *p };
                Ok(&a * &b.inv().expect("nonzero"))
            }
        }
    }

    /// Short textual name used in reports and on the command line: `Q` or `GF:p`.
    pub fn name(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("GF:{p}"),
        }
    }

    /// Inverse of [`Field::name`]; also accepts `GF(p)` and `GFp`.
    pub fn from_name(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let rest = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix("gf"))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let digits = rest.trim_start_matches([':', '(']).trim_end_matches(')');
        let p: u64 = digits.parse().map_err(|_| Error::InvalidField(s.to_string()))?;
        Field::prime(p)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
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

/// A field element. Prime-field elements carry their modulus so that the
/// arithmetic operators need no external context; mixing fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Gf { value: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Gf { p, .. } => Field::Prime(*p),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Gf { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Gf { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(q) => {
                if q.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(q.recip()))
                }
            }
            Scalar::Gf { value, p } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Gf {
                        value: inv_mod(*value as i64, *p as i64) as u32,
                        p: *p,
                    })
                }
            }
        }
    }

    /// `self -= a * b`, the elimination kernel.
    #[inline]
    pub fn sub_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Q(s), Scalar::Q(x), Scalar::Q(y)) => {
                *s -= x * y;
            }
            (Scalar::Gf { value, p }, Scalar::Gf { value: x, .. }, Scalar::Gf { value: y, .. }) => {
                let prod = (*x as u64 * *y as u64) % *p as u64;
                *value = ((*value as u64 + *p as u64 - prod) % *p as u64) as u32;
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    /// `self += a * b`.
    #[inline]
    pub fn add_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Q(s), Scalar::Q(x), Scalar::Q(y)) => {
                *s += x * y;
            }
            (Scalar::Gf { value, p }, Scalar::Gf { value: x, .. }, Scalar::Gf { value: y, .. }) => {
                let prod = (*x as u64 * *y as u64) % *p as u64;
                *value = ((*value as u64 + prod) % *p as u64) as u32;
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn add_assign_ref(&mut self, a: &Scalar) {
        match (self, a) {
            (Scalar::Q(s), Scalar::Q(x)) => *s += x,
            (Scalar::Gf { value, p }, Scalar::Gf { value: x, .. }) => {
                *value = ((*value as u64 + *x as u64) % *p as u64) as u32
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    /// Canonical integer lift of a prime-field element (`0..p`).
    pub fn gf_value(&self) -> Option<u32> {
        match self {
            Scalar::Gf { value, .. } => Some(*value),
            Scalar::Q(_) => None,
        }
    }
}

fn inv_mod(a: i64, m: i64) -> i64 {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Gf { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp(b),
            (Scalar::Gf { value: a, p: pa }, Scalar::Gf { value: b, p: pb }) => pa.cmp(pb).then(a.cmp(b)),
            (Scalar::Q(_), Scalar::Gf { .. }) => Ordering::Less,
            (Scalar::Gf { .. }, Scalar::Q(_)) => Ordering::Greater,
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Gf { value: a, p }, Scalar::Gf { value: b, .. }) => Scalar::Gf {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Gf { value, p } => Scalar::Gf {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Rational scalar from a numerator/denominator pair, for tests and builders.
pub fn rational(n: i64, d: i64) -> Scalar {
    Scalar::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Whether a rational scalar is negative; prime-field scalars never are.
pub fn is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Q(q) => q.is_negative(),
        Scalar::Gf { .. } => false,
    }
}
