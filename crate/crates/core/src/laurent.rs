//! Sparse Laurent polynomials with integer coefficients in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i32, i64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("bad polynomial term `{term}`")]
pub struct ParseLaurentError {
    pub term: String,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes x -> x^-1.
    pub fn invert(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    /// Multiplies every exponent by `k`.
    pub fn scale_exponents(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Divides every exponent by `k`; `None` if some exponent is not a multiple.
    pub fn divide_exponents(&self, k: i32) -> Option<Self> {
        if self.terms.keys().any(|e| e % k != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / k, c))))
    }

    pub fn shift(&self, by: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + by, c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Value at x = i, returned as (real, imaginary).
    pub fn eval_at_i(&self) -> (i64, i64) {
        let mut re = 0;
        let mut im = 0;
        for (e, c) in self.terms() {
            match e.rem_euclid(4) {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        (re, im)
    }

    /// Exact division; `None` unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        let (dlo, dhi) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        while let Some(hi) = rem.max_exp() {
            if hi - rem.min_exp().unwrap() < dhi - dlo {
                return None;
            }
            let c = rem.coeff(hi);
            if c % lead != 0 {
                return None;
            }
            let q = Laurent::monomial(c / lead, hi - dhi);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Some(quot)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        &self + &rhs
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

/// Prints terms in ascending exponent as `c*t^(k/2)`, the constant term as `c`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let body = if e == 0 {
                format!("{}", c.abs())
            } else {
                format!("{}*t^({}/2)", c.abs(), e)
            };
            match (i, c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Laurent {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Laurent::zero());
        }
        let mut out = Laurent::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body[1.min(body.len())..]
                .find(['+', '-'])
                .map(|i| i + 1)
                .unwrap_or(body.len());
            // a '-' inside "^(-k/2)" is part of the exponent
            let end = adjust_for_paren(body, end);
            let term = &body[..end];
            let bad = || ParseLaurentError { term: term.to_string() };
            let (coeff, exp) = match term.split_once("*t^(") {
                Some((c, e)) => {
                    let e = e.strip_suffix("/2)").ok_or_else(bad)?;
                    (c.parse::<i64>().map_err(|_| bad())?, e.parse::<i32>().map_err(|_| bad())?)
                }
                None => (term.parse::<i64>().map_err(|_| bad())?, 0),
            };
            out.add_term(exp, if neg { -coeff } else { coeff });
            rest = &body[end..];
        }
        Ok(out)
    }
}

fn adjust_for_paren(body: &str, mut end: usize) -> usize {
    while end < body.len() {
        let open = body[..end].matches('(').count();
        let close = body[..end].matches(')').count();
        if open == close {
            break;
        }
        end = body[end + 1..]
            .find(['+', '-'])
            .map(|i| i + end + 1)
            .unwrap_or(body.len());
    }
    end
}
