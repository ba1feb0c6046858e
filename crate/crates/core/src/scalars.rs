//! Exact field arithmetic over `F_p` and the rationals.
//!
//! Every numeric quantity in the crate is a [`Scalar`]. Residues are kept
//! canonically reduced into `0..p`, rationals in lowest terms, so structural
//! equality is field equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field: `F_p` for a prime `p`, or `Q` when the characteristic is 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u64,
}

fn is_prime(p: u64) -> bool {
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

impl FieldSpec {
    /// Characteristic 0 or an odd prime.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 2 {
            return Err(Error::Char2Rejected);
        }
        Self::with_char2_override(characteristic)
    }

    /// Like [`FieldSpec::new`] but admits characteristic 2.
    pub fn with_char2_override(characteristic: u64) -> Result<Self> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        if characteristic > u32::MAX as u64 {
            return Err(Error::Parse(format!(
                "characteristic {characteristic} exceeds the supported range"
            )));
        }
        Ok(Self { characteristic })
    }

    pub fn rationals() -> Self {
        Self { characteristic: 0 }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_char2(&self) -> bool {
        self.characteristic == 2
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, value: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(value))),
            p => Scalar::Mod {
                residue: value.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    fn reduce_bigint(&self, value: &BigInt) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(value.clone())),
            p => {
                let r = value.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    residue: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// `1/m` in this field; fails when `m ≡ 0`, which for `m = |G|` is the
    /// modular case.
    pub fn inverse_of_integer(&self, m: i64) -> Result<Scalar> {
        let s = self.from_i64(m);
        if s.is_zero() {
            return Err(Error::ModularObstruction {
                m: m.unsigned_abs(),
                p: self.characteristic,
            });
        }
        s.inv()
    }

    /// Parses `"7"`, `"-3"` or `"num/den"`. Over `F_p` a fraction is read as
    /// `num · den⁻¹`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Parse(format!("invalid scalar `{text}`"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let num = self.reduce_bigint(&num);
        match den {
            None => Ok(num),
            Some(d) => {
                let den: BigInt = d.parse().map_err(|_| bad())?;
                num.checked_div(&self.reduce_bigint(&den))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Mod { residue: u64, modulus: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn characteristic(&self) -> u64 {
        match self {
            Scalar::Mod { modulus, .. } => *modulus,
            Scalar::Rational(_) => 0,
        }
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec {
            characteristic: self.characteristic(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { residue, .. } => *residue == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { residue, .. } => *residue == 1,
            Scalar::Rational(q) => q.is_one(),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        let (a, b) = (self.characteristic(), other.characteristic());
        if a == b {
            Ok(())
        } else {
            Err(Error::MixedFields(a, b))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Mod { residue: a, modulus }, Scalar::Mod { residue: b, .. }) => Scalar::Mod {
                residue: (a + b) % modulus,
                modulus: *modulus,
            },
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Mod { residue: a, modulus }, Scalar::Mod { residue: b, .. }) => Scalar::Mod {
                residue: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Multiplicative inverse (Fermat over `F_p`).
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Mod { residue, modulus } => Scalar::Mod {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
        })
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc = 1u128 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { residue, .. } => write!(f, "{residue}"),
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl Scalar {
    /// True when the canonical printed form starts with a minus sign; only
    /// rationals can be negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { residue, modulus } => Scalar::Mod {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
            Scalar::Rational(q) => Scalar::Rational(-q),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// Operator forms panic on mixed fields; every container in the crate shares a
// single `FieldSpec`, so a mismatch there is a programming error.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalars from different fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalars from different fields")
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$checked(rhs).expect("scalars from different fields")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}
