//! Exact fractions for density parameters, edge probabilities and
//! capacity scaling. All arithmetic is integer-exact; overflow is an
//! error, never a silent wrap.

use crate::error::{Error, Result};
use std::cmp::Ordering;

/// Fraction in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Result<Rational> {
        if den == 0 {
            return Err(Error::Input("zero denominator".into()));
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ok(Rational {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub fn from_int(v: i128) -> Rational {
        Rational { num: v, den: 1 }
    }

    pub fn zero() -> Rational {
        Rational::from_int(0)
    }

    pub const fn num(&self) -> i128 {
        self.num
    }

    pub const fn den(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(&self) -> i128 {
        -((-self.num).div_euclid(self.den))
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn checked(num: Option<i128>, den: Option<i128>) -> Result<Rational> {
        match (num, den) {
            (Some(n), Some(d)) => Rational::new(n, d),
            _ => Err(Error::Overflow("rational arithmetic overflow".into())),
        }
    }

    pub fn checked_add(&self, other: &Rational) -> Result<Rational> {
        let num = self
            .num
            .checked_mul(other.den)
            .and_then(|a| other.num.checked_mul(self.den).and_then(|b| a.checked_add(b)));
        Rational::checked(num, self.den.checked_mul(other.den))
    }

    pub fn checked_sub(&self, other: &Rational) -> Result<Rational> {
        let num = self
            .num
            .checked_mul(other.den)
            .and_then(|a| other.num.checked_mul(self.den).and_then(|b| a.checked_sub(b)));
        Rational::checked(num, self.den.checked_mul(other.den))
    }

    pub fn checked_mul(&self, other: &Rational) -> Result<Rational> {
        // cross-reduce first to keep intermediates small
        let g1 = gcd(self.num, other.den).max(1);
        let g2 = gcd(other.num, self.den).max(1);
        Rational::checked(
            (self.num / g1).checked_mul(other.num / g2),
            (self.den / g2).checked_mul(other.den / g1),
        )
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::new(self.den, self.num)
    }

    /// The fraction with the smallest denominator in the closed interval
    /// `[lo, hi]` (smallest numerator among those), via continued-fraction
    /// descent. Requires `0 <= lo <= hi`.
    pub fn simplest_in_interval(lo: &Rational, hi: &Rational) -> Result<Rational> {
        if lo > hi || lo.num < 0 {
            return Err(Error::Input("simplest_in_interval needs 0 <= lo <= hi".into()));
        }
        // an integer in [lo, hi] wins outright
        let c = lo.ceil();
        if Rational::from_int(c) <= *hi {
            return Ok(Rational::from_int(c));
        }
        // both endpoints strictly inside (q, q+1)
        let q = Rational::from_int(lo.floor());
        let inner = Rational::simplest_in_interval(
            &hi.checked_sub(&q)?.recip()?,
            &lo.checked_sub(&q)?.recip()?,
        )?;
        q.checked_add(&inner.recip()?)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        // dens are positive; cross-reduce to avoid overflow on big inputs
        let g1 = gcd(self.num, other.num).max(1);
        let g2 = gcd(self.den, other.den);
        let lhs = (self.num / g1).checked_mul(other.den / g2);
        let rhs = (other.num / g1).checked_mul(self.den / g2);
        match (lhs, rhs) {
            (Some(a), Some(b)) => a.cmp(&b),
            // fall back to floating point only when exact comparison is
            // impossible in i128; unreachable for this crate's value ranges
            _ => self.to_f64().partial_cmp(&other.to_f64()).unwrap(),
        }
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl std::str::FromStr for Rational {
    type Err = Error;

    /// Parses "a/b" or a bare integer "a".
    fn from_str(s: &str) -> Result<Rational> {
        let parse_int = |t: &str| {
            t.trim()
                .parse::<i128>()
                .map_err(|e| Error::Input(format!("bad rational '{s}': {e}")))
        };
        match s.split_once('/') {
            Some((a, b)) => Rational::new(parse_int(a)?, parse_int(b)?),
            None => Ok(Rational::from_int(parse_int(s)?)),
        }
    }
}
