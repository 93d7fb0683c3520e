use std::fmt;

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Ground field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    /// Integers modulo an odd prime `p < 2^31`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if !(3..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(Rational::zero()),
            Field::Prime(p) => Scalar::Modular { value: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(Rational::from_int(n)),
            Field::Prime(p) => Scalar::Modular { value: n.rem_euclid(p as i64) as u64, p },
        }
    }

    /// Maps a rational into this field. Fails over `F_p` when `p` divides the denominator.
    pub fn from_rational(self, r: &Rational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Rational(r.clone())),
            Field::Prime(p) => r
                .mod_prime(p)
                .map(|value| Scalar::Modular { value, p })
                .ok_or_else(|| Error::Parse(format!("{r} has no image modulo {p}"))),
        }
    }

    pub fn zero_vec(self, n: usize) -> Vec<Scalar> {
        vec![self.zero(); n]
    }

    pub fn unit_vec(self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec(n);
        v[i] = self.one();
        v
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// An exact field element tagged with its field.
///
/// Arithmetic between elements of different fields is a logic error and
/// panics; containers check homogeneity when they are built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Modular { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, p } => {
                assert!(*value != 0, "division by zero");
                Scalar::Modular { value: inv_mod(*value, *p), p: *p }
            }
        }
    }

    /// Square test in the ground field (quadratic residue over `F_p`).
    pub fn is_square(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_square(),
            Scalar::Modular { value, p } => *value == 0 || pow_mod(*value, (p - 1) / 2, *p) == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    /// `self -= factor * other`, the inner step of every elimination.
    pub fn sub_mul_assign(&mut self, factor: &Scalar, other: &Scalar) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        *self = &*self - &(factor * other);
    }
}

fn mixed() -> ! {
    panic!("arithmetic between scalars of different fields")
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:tt, $modular:expr) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a $rat b),
                    (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, p: q }) if p == q => {
                        let f: fn(u64, u64, u64) -> u64 = $modular;
                        Scalar::Modular { value: f(*a, *b, *p), p: *p }
                    }
                    _ => mixed(),
                }
            }
        }

        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
    };
}

binop!(Add, add, +, |a, b, p| (a + b) % p);
binop!(Sub, sub, -, |a, b, p| (a + p - b) % p);
binop!(Mul, mul, *, |a, b, p| a * b % p);
binop!(Div, div, /, |a, b, p| {
    assert!(b != 0, "division by zero");
    a * inv_mod(b, p) % p
});

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, p } => Scalar::Modular { value: (p - value) % p, p: *p },
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, p } => write!(f, "{value} (mod {p})"),
        }
    }
}
