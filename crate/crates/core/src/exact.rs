//! Exact rational scalars and univariate Laurent polynomials over them.
//!
//! Every identity in this crate is checked with zero tolerance, so the
//! polynomial type keeps a canonical form at all times: no stored zero
//! coefficients, exponents held in a sorted map. Equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Canonical `"num/den"` rendering; integers drop the denominator.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_string(s: &str) -> Result<Rat, ExactError> {
    let parse = |t: &str| {
        t.trim()
            .parse::<Int>()
            .map_err(|_| ExactError::BadRational(s.to_string()))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse(d)?;
            if den.is_zero() {
                return Err(ExactError::BadRational(s.to_string()));
            }
            Ok(Rat::new(parse(n)?, den))
        }
        None => Ok(Rat::from_integer(parse(s)?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("degree of the zero polynomial is undefined")]
    ZeroDegree,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("inexact polynomial division (nonzero remainder)")]
    InexactDivision,
    #[error("cannot evaluate negative exponents at zero")]
    ZeroLaurentEval,
    #[error("malformed rational literal `{0}`")]
    BadRational(String),
}

/// Univariate Laurent polynomial with exact rational coefficients.
///
/// Exponents may be negative; the map never stores a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: BTreeMap<i64, Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly::default()
    }

    pub fn one() -> Self {
        RatPoly::monomial(0, Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::monomial(0, c)
    }

    /// The variable itself, `u`.
    pub fn var() -> Self {
        RatPoly::monomial(1, Rat::one())
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        RatPoly { coeffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = RatPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    /// Dense `p[k] = coefficient of u^k` constructor for ordinary polynomials.
    pub fn from_coeff_slice(coeffs: &[i64]) -> Self {
        RatPoly::from_pairs(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as i64, Rat::from_integer(int(c)))),
        )
    }

    fn add_term(&mut self, exp: i64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, s: &Rat) -> RatPoly {
        if s.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: i64) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `p(u) -> p(-u)`: the coefficient of `u^k` picks up `(-1)^k`.
    pub fn substitute_neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, if e.rem_euclid(2) == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Substitute `u -> u^k` for `k >= 1`.
    pub fn inflate(&self, k: i64) -> RatPoly {
        assert!(k >= 1);
        RatPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// `(degree, valuation)`: the largest and smallest exponents present.
    pub fn degree_and_valuation(&self) -> Result<(i64, i64), ExactError> {
        let max = self.coeffs.keys().next_back().ok_or(ExactError::ZeroDegree)?;
        let min = self.coeffs.keys().next().ok_or(ExactError::ZeroDegree)?;
        Ok((*max, *min))
    }

    pub fn degree(&self) -> Result<i64, ExactError> {
        Ok(self.degree_and_valuation()?.0)
    }

    pub fn valuation(&self) -> Result<i64, ExactError> {
        Ok(self.degree_and_valuation()?.1)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.values().next_back()
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat, ExactError> {
        if x.is_zero() && self.coeffs.keys().next().is_some_and(|e| *e < 0) {
            return Err(ExactError::ZeroLaurentEval);
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.coeffs {
            let pow = if *e >= 0 {
                num_traits::pow::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow::pow(x.clone(), (-e) as usize).recip()
            };
            acc += c * pow;
        }
        Ok(acc)
    }

    pub fn pow(&self, n: u32) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Long division for ordinary (non-Laurent) operands.
    /// Returns `(quotient, remainder)` with `deg r < deg d`.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly), ExactError> {
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (d_deg, d_val) = d.degree_and_valuation()?;
        assert!(d_val >= 0 && self.valuation().map_or(true, |v| v >= 0));
        let d_lead = d.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = RatPoly::zero();
        while let Some((r_deg, _)) = rem.degree_and_valuation().ok() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.leading_coeff().unwrap() / &d_lead;
            let term = RatPoly::monomial(r_deg - d_deg, factor);
            rem = &rem - &(&term * d);
            quo = &quo + &term;
        }
        Ok((quo, rem))
    }

    /// Exact division; errors on a nonzero remainder. Laurent operands are
    /// handled by factoring out the valuations first.
    pub fn div_exact(&self, d: &RatPoly) -> Result<RatPoly, ExactError> {
        if self.is_zero() {
            return Ok(RatPoly::zero());
        }
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let sv = self.valuation()?;
        let dv = d.valuation()?;
        let (quo, rem) = self.shift(-sv).div_rem(&d.shift(-dv))?;
        if !rem.is_zero() {
            return Err(ExactError::InexactDivision);
        }
        Ok(quo.shift(sv - dv))
    }

    /// Serialization form: `[exponent, "num/den"]` pairs, exponents ascending.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.coeffs.iter().map(|(e, c)| (*e, rat_string(c))).collect()
    }

    pub fn from_string_pairs(pairs: &[(i64, String)]) -> Result<Self, ExactError> {
        let mut p = RatPoly::zero();
        for (e, s) in pairs {
            p.add_term(*e, rat_from_string(s)?);
        }
        Ok(p)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff_part = rat_string(&mag);
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{coeff_part}")?,
                (1, true) => write!(f, "u")?,
                (1, false) => write!(f, "{coeff_part}*u")?,
                (_, true) => write!(f, "u^{e}")?,
                (_, false) => write!(f, "{coeff_part}*u^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        let mut out = RatPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for RatPoly {
            type Output = RatPoly;
            fn $method(self, rhs: RatPoly) -> RatPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_pairs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        RatPoly::from_string_pairs(&pairs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> RatPoly {
        RatPoly::var()
    }

    #[test]
    fn ring_identities() {
        let p = &(&u() + &RatPoly::one()) * &(&u() - &RatPoly::one());
        assert_eq!(p, RatPoly::from_pairs([(2, rat(1, 1)), (0, rat(-1, 1))]));
        let q = RatPoly::from_pairs([(3, rat(2, 5)), (0, rat(-1, 2))]);
        assert_eq!(&RatPoly::zero() + &q, q);
        // (u(u^2+1)/2) * 2 = u^3 + u
        let half_odd = RatPoly::from_pairs([(3, rat(1, 2)), (1, rat(1, 2))]);
        assert_eq!(
            half_odd.scale(&rat(2, 1)),
            RatPoly::from_pairs([(3, rat(1, 1)), (1, rat(1, 1))])
        );
    }

    #[test]
    fn substitute_neg_flips_odd_exponents() {
        let half_odd = RatPoly::from_pairs([(3, rat(1, 2)), (1, rat(1, 2))]);
        assert_eq!(half_odd.substitute_neg(), (&half_odd).neg());
        assert_eq!(RatPoly::one().substitute_neg(), RatPoly::one());
        let p = RatPoly::from_pairs([(2, rat(1, 1)), (1, rat(-1, 1))]);
        assert_eq!(
            p.substitute_neg(),
            RatPoly::from_pairs([(2, rat(1, 1)), (1, rat(1, 1))])
        );
    }

    #[test]
    fn degree_and_valuation_cases() {
        let half_odd = RatPoly::from_pairs([(3, rat(1, 2)), (1, rat(1, 2))]);
        assert_eq!(half_odd.degree_and_valuation().unwrap(), (3, 1));
        assert_eq!(RatPoly::one().degree_and_valuation().unwrap(), (0, 0));
        assert_eq!(
            RatPoly::monomial(4, rat(1, 1)).degree_and_valuation().unwrap(),
            (4, 4)
        );
        assert_eq!(
            RatPoly::zero().degree_and_valuation(),
            Err(ExactError::ZeroDegree)
        );
    }

    #[test]
    fn exact_division() {
        let num = RatPoly::from_coeff_slice(&[-1, 0, 0, 0, 1]); // u^4 - 1
        let den = RatPoly::from_coeff_slice(&[-1, 1]); // u - 1
        let quo = num.div_exact(&den).unwrap();
        assert_eq!(quo, RatPoly::from_coeff_slice(&[1, 1, 1, 1]));
        let bad = RatPoly::from_coeff_slice(&[1, 1]).div_exact(&den);
        assert_eq!(bad, Err(ExactError::InexactDivision));
    }

    #[test]
    fn laurent_round_trip() {
        let p = RatPoly::from_pairs([(-2, rat(3, 7)), (0, rat(1, 1)), (5, rat(-2, 1))]);
        let pairs = p.to_pairs();
        assert_eq!(pairs[0].0, -2);
        assert_eq!(RatPoly::from_string_pairs(&pairs).unwrap(), p);
        assert_eq!(p.eval(&rat(0, 1)), Err(ExactError::ZeroLaurentEval));
        assert_eq!(
            p.eval(&rat(1, 1)).unwrap(),
            rat(3, 7) + rat(1, 1) - rat(2, 1)
        );
    }
}
