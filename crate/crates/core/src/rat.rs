//! Exact rational scalars and small vector helpers.
//!
//! `Rat` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; every geometric quantity in the crate is one.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Shorthand for a rational from an integer pair. Panics on zero denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Canonical text form: `-3/4`, `7`, `0`. The denominator is omitted
/// exactly when it is one, so printing then parsing is the identity.
pub fn format_rat(x: &Rat) -> String {
    let mut s = String::new();
    if x.denom().is_one() {
        let _ = write!(s, "{}", x.numer());
    } else {
        let _ = write!(s, "{}/{}", x.numer(), x.denom());
    }
    s
}

/// Parses the canonical form. Rejects anything else, including floats.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn zeros(n: usize) -> Vec<Rat> {
    (0..n).map(|_| Rat::zero()).collect()
}

pub fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zeros(n);
    v[i] = Rat::one();
    v
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn norm_inf(a: &[Rat]) -> Rat {
    let mut m = Rat::zero();
    for x in a {
        let v = x.abs();
        if v > m {
            m = v;
        }
    }
    m
}

pub fn norm_l1(a: &[Rat]) -> Rat {
    let mut m = Rat::zero();
    for x in a {
        m += x.abs();
    }
    m
}

/// Canonical text form of a point: coordinates joined by commas.
pub fn format_point(p: &[Rat]) -> String {
    let mut s = String::new();
    for (i, x) in p.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&format_rat(x));
    }
    s
}

pub fn parse_point(s: &str) -> Option<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}
