//! Exact fractions extended with a positive infinity.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;

/// A reduced fraction, or `+∞`. Finites compare below infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rational {
    Finite(Ratio<i64>),
    Infinite,
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational::Finite(Ratio::new(numer, denom))
    }

    pub fn int(v: i64) -> Self {
        Rational::Finite(Ratio::from_integer(v))
    }

    pub fn zero() -> Self {
        Rational::int(0)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Rational::Infinite)
    }

    pub fn finite(&self) -> Option<Ratio<i64>> {
        match self {
            Rational::Finite(r) => Some(*r),
            Rational::Infinite => None,
        }
    }

    pub fn numer(&self) -> Option<i64> {
        self.finite().map(|r| *r.numer())
    }

    pub fn denom(&self) -> Option<i64> {
        self.finite().map(|r| *r.denom())
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Rational::Finite(r) => r.is_positive(),
            Rational::Infinite => true,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rational::Finite(r) => *r.numer() as f64 / *r.denom() as f64,
            Rational::Infinite => f64::INFINITY,
        }
    }

    fn finite_op(
        self,
        rhs: Self,
        op: &str,
        f: impl Fn(Ratio<i64>, Ratio<i64>) -> Ratio<i64>,
    ) -> Self {
        match (self, rhs) {
            (Rational::Finite(a), Rational::Finite(b)) => Rational::Finite(f(a, b)),
            _ => panic!("{op} on infinite rational"),
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::int(v)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational::int(v as i64)
    }
}

impl From<Ratio<i64>> for Rational {
    fn from(r: Ratio<i64>) -> Self {
        Rational::Finite(r)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Finite(a), Rational::Finite(b)) => a.cmp(b),
            (Rational::Finite(_), Rational::Infinite) => Ordering::Less,
            (Rational::Infinite, Rational::Finite(_)) => Ordering::Greater,
            (Rational::Infinite, Rational::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Arithmetic is defined on finite values only; it panics on infinity.
impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Self) -> Self {
        self.finite_op(rhs, "add", |a, b| a + b)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Self) -> Self {
        self.finite_op(rhs, "sub", |a, b| a - b)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Self) -> Self {
        self.finite_op(rhs, "mul", |a, b| a * b)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Self) -> Self {
        if rhs.finite().is_some_and(|r| r.is_zero()) {
            panic!("division by zero rational");
        }
        self.finite_op(rhs, "div", |a, b| a / b)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Self {
        match self {
            Rational::Finite(r) => Rational::Finite(-r),
            Rational::Infinite => panic!("neg on infinite rational"),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Finite(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Rational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rational::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `"p/q"`, an integer, or `"inf"`.
impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        if s == "inf" {
            return Ok(Rational::Infinite);
        }
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(p, q))
            }
            None => s.parse::<i64>().map(Rational::int).map_err(|_| bad()),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
