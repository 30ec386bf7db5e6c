use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A reduced positive rational `num/den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u32,
    den: u32,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Fraction {
    /// Reduces `num/den`. Both parts must be positive.
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::param(format!(
                "{num}/{den} is not a positive fraction"
            )));
        }
        let g = gcd(num as u64, den as u64) as u32;
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(n: u32) -> Result<Self> {
        Fraction::new(n, 1)
    }

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }

    /// `2 * den <= num`, the range where `K_{num/den}` is defined.
    pub fn is_circular_clique_ratio(self) -> bool {
        2 * self.den as u64 <= self.num as u64
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Smallest integer `>= self`.
    pub fn ceil(self) -> u32 {
        self.num.div_ceil(self.den)
    }

    /// All reduced fractions `n/m` with `2m <= n <= max_num`, ascending.
    pub fn circular_ratios(max_num: u32) -> Vec<Fraction> {
        let mut out = Vec::new();
        for n in 2..=max_num {
            for m in 1..=n / 2 {
                if gcd(n as u64, m as u64) == 1 {
                    out.push(Fraction { num: n, den: m });
                }
            }
        }
        out.sort();
        out
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::param(format!("cannot parse fraction {s:?}"));
        match s.split_once('/') {
            Some((n, m)) => Fraction::new(
                n.trim().parse().map_err(|_| bad())?,
                m.trim().parse().map_err(|_| bad())?,
            ),
            None => Fraction::integer(s.trim().parse().map_err(|_| bad())?),
        }
    }
}
