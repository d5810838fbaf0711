//! Exact arbitrary-precision rational arithmetic.
//!
//! Every density bound in this crate is computed as a [`Rat`]; binary
//! floating point appears only inside the numerical optimizer, and even
//! there the published value is re-certified through `Rat`. Decimal
//! strings are produced only at the rendering edge, rounded *outward*
//! (up for upper bounds, down for lower bounds) so that the printed
//! digits are themselves a valid bound.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduced fraction with arbitrary-precision numerator and positive
/// denominator. Wraps `num_rational::BigRational`, which maintains both
/// invariants (gcd 1, denominator > 0) on every operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

/// Direction for decimal rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    /// Round toward +infinity (safe for upper bounds).
    Up,
    /// Round toward -infinity (safe for lower bounds).
    Down,
}

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Exact binomial coefficient `C(n, k)` as a rational integer.
    pub fn binomial(n: u64, k: u64) -> Self {
        Rat::from_bigint(binomial_big(n, k))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Integer power; negative exponents invert (value must be nonzero).
    pub fn pow(&self, exp: i32) -> Self {
        Rat(self.0.pow(exp))
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Nearest f64; bound certification never relies on this.
    pub fn to_f64(&self) -> f64 {
        // Exact conversion can overflow for huge integers; divide in
        // floating point as a fallback.
        self.0
            .to_f64()
            .unwrap_or_else(|| self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN))
    }

    /// Rational approximation of an f64 with denominator `den`,
    /// rounding to the nearest grid point. Used to snap optimizer
    /// outputs onto exactly re-evaluable points.
    pub fn from_f64_snapped(x: f64, den: u64) -> Self {
        assert!(x.is_finite());
        let scaled = (x * den as f64).round();
        let num = BigInt::from(scaled as i128);
        Rat(BigRational::new(num, BigInt::from(den)))
    }

    /// Decimal string with `digits` fractional digits, rounded in the
    /// given direction. `Rat::new(5, 6).decimal(6, Round::Up)` renders
    /// as `"0.833334"`, and the printed value is >= 5/6.
    pub fn decimal(&self, digits: u32, mode: Round) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled_num = self.numer() * &scale;
        let den = self.denom();
        let q = match mode {
            Round::Down => scaled_num.div_floor(den),
            Round::Up => scaled_num.div_ceil(den),
        };
        let neg = q.is_negative();
        let q_abs = q.abs();
        let (int_part, frac_part) = q_abs.div_rem(&scale);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{int_part}");
        }
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits as usize
        )
    }
}

fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` as a `u128`; panics on overflow. Enough for every edge
/// census in this crate (`C(2^15, 4)` still fits easily).
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    binomial_big(n, k)
        .to_u128()
        .expect("binomial overflows u128")
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self == &Rat::from_int(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Rat::from_int(*other))
    }
}
