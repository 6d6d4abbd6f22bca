//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Character values of the small groups handled by this crate are sums of
//! roots of unity. Intermediate pairing sums pass through these values even
//! when the final answer is rational, so we carry them exactly: an element
//! is a vector of rationals over the basis `1, z, ..., z^(phi(n)-1)` of
//! Q(zeta_n), kept reduced modulo the n-th cyclotomic polynomial.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{Int, Rat, RatPoly};

fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// Dense coefficient vector of the n-th cyclotomic polynomial (monic,
/// degree phi(n), integer coefficients stored as rationals).
fn cyclotomic_poly(n: u32) -> Vec<Rat> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rat>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by the product of all lower cyclotomic factors.
    let mut num = RatPoly::monomial(n as i64, Rat::one());
    num = &num - &RatPoly::one();
    let mut den = RatPoly::one();
    for d in divisors(n) {
        if d < n {
            den = &den * &RatPoly::from_pairs(
                cyclotomic_poly(d)
                    .iter()
                    .enumerate()
                    .map(|(e, c)| (e as i64, c.clone())),
            );
        }
    }
    let quo = num.div_exact(&den).expect("cyclotomic division is exact");
    let deg = euler_phi(n) as usize;
    let mut dense = vec![Rat::zero(); deg + 1];
    for (e, c) in quo.terms() {
        dense[e as usize] = c.clone();
    }
    cache.lock().unwrap().insert(n, dense.clone());
    dense
}

/// An element of Q(zeta_order).
#[derive(Clone, PartialEq, Eq)]
pub struct Cyc {
    order: u32,
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Cyc::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyc { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Cyc::from_rat(Rat::from_integer(Int::from(n)))
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u32;
        let g = k.gcd(&n);
        let (n, k) = (n / g, k / g);
        let phi = euler_phi(n) as usize;
        let mut coeffs = vec![Rat::zero(); n as usize];
        coeffs[k as usize] = Rat::one();
        let mut c = Cyc { order: n, coeffs };
        c.reduce(phi);
        c.normalize();
        c
    }

    fn reduce(&mut self, phi: usize) {
        let modulus = cyclotomic_poly(self.order);
        let deg = modulus.len() - 1;
        debug_assert_eq!(deg, phi);
        while self.coeffs.len() > deg {
            let top = self.coeffs.len() - 1;
            let lead = self.coeffs[top].clone();
            if !lead.is_zero() {
                for (i, m) in modulus.iter().enumerate().take(deg) {
                    let idx = top - deg + i;
                    let adjust = &lead * m;
                    self.coeffs[idx] -= adjust;
                }
            }
            self.coeffs.truncate(top);
        }
        self.coeffs.resize(deg.max(1), Rat::zero());
    }

    /// Drop to Q when the reduced form is a constant.
    fn normalize(&mut self) {
        if self.order > 1 && self.coeffs.iter().skip(1).all(Rat::is_zero) {
            let c = self.coeffs[0].clone();
            *self = Cyc { order: 1, coeffs: vec![c] };
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.order == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rat().is_some_and(|r| r.is_one())
    }

    /// Rewrite in Q(zeta_m) for a multiple m of the current order.
    fn lift(&self, m: u32) -> Cyc {
        if m == self.order {
            return self.clone();
        }
        assert_eq!(m % self.order, 0);
        let step = (m / self.order) as usize;
        let mut coeffs = vec![Rat::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] += c.clone();
        }
        let mut out = Cyc { order: m, coeffs };
        out.reduce(euler_phi(m) as usize);
        out
    }

    fn common(&self, rhs: &Cyc) -> (Cyc, Cyc) {
        let m = self.order.lcm(&rhs.order);
        (self.lift(m), rhs.lift(m))
    }

    pub fn add(&self, rhs: &Cyc) -> Cyc {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a.normalize();
        a
    }

    pub fn sub(&self, rhs: &Cyc) -> Cyc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Cyc) -> Cyc {
        let (a, b) = self.common(rhs);
        let n = a.order;
        let mut prod = vec![Rat::zero(); (2 * a.coeffs.len()).max(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let mut out = Cyc { order: n, coeffs: prod };
        out.reduce(euler_phi(n) as usize);
        out.normalize();
        out
    }

    pub fn scale(&self, s: &Rat) -> Cyc {
        let mut out = Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        };
        out.normalize();
        out
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> Cyc {
        self.galois(-1)
    }

    /// The Galois twist `zeta -> zeta^j` for `gcd(j, order) = 1`.
    pub fn galois(&self, j: i64) -> Cyc {
        let n = self.order;
        let j = j.rem_euclid(n as i64) as u32;
        assert_eq!(j.gcd(&n), 1, "galois exponent must be invertible");
        let mut coeffs = vec![Rat::zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[(k as u64 * j as u64 % n as u64) as usize] += c.clone();
            }
        }
        let mut out = Cyc { order: n, coeffs };
        out.reduce(euler_phi(n) as usize);
        out.normalize();
        out
    }
}

impl PartialOrd for Cyc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Deterministic total order: compare in a common cyclotomic basis. Used
/// only to fix canonical row orderings, not for any analytic meaning.
impl Ord for Cyc {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.common(other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rat() {
            return write!(f, "{r}");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                if k == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*z{}^{k}", self.order)
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn phi_and_cyclotomics() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(60), 16);
        // Phi_6 = x^2 - x + 1
        let p6 = cyclotomic_poly(6);
        assert_eq!(p6, vec![rat(1, 1), rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn roots_sum_to_zero() {
        for n in [2u32, 3, 4, 5, 6, 12] {
            let mut acc = Cyc::zero();
            for k in 0..n {
                acc = acc.add(&Cyc::root_of_unity(n, k as i64));
            }
            assert!(acc.is_zero(), "sum of all {n}-th roots");
        }
    }

    #[test]
    fn cube_root_arithmetic() {
        let w = Cyc::root_of_unity(3, 1);
        let w2 = w.mul(&w);
        assert_eq!(w2, Cyc::root_of_unity(3, 2));
        assert_eq!(w.mul(&w2), Cyc::one());
        // w + w^2 = -1
        assert_eq!(w.add(&w2).as_rat(), Some(rat(-1, 1)));
        assert_eq!(w.conj(), w2);
    }

    #[test]
    fn cross_order_equality() {
        // zeta_6^2 = zeta_3
        let a = Cyc::root_of_unity(6, 2);
        let b = Cyc::root_of_unity(3, 1);
        assert_eq!(a, b);
        assert_eq!(a.cmp(&b), Ordering::Equal);
        let i = Cyc::root_of_unity(4, 1);
        assert_eq!(i.mul(&i).as_rat(), Some(rat(-1, 1)));
    }

    #[test]
    fn golden_field_is_not_rational() {
        // zeta_5 + zeta_5^4 is real irrational; must not report rational.
        let z = Cyc::root_of_unity(5, 1);
        let s = z.add(&z.galois(4));
        assert!(s.as_rat().is_none());
        // but (zeta_5 + ... + zeta_5^4) = -1
        let mut acc = Cyc::zero();
        for k in 1..5 {
            acc = acc.add(&Cyc::root_of_unity(5, k));
        }
        assert_eq!(acc.as_rat(), Some(rat(-1, 1)));
    }
}
