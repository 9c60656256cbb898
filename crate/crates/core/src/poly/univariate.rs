use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{common_denominator, Rational};

/// Dense univariate polynomial; `coeffs[k]` multiplies `t^k`. The last stored
/// coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let db = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.coeffs[db].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(db)];
        while rem.len() > db {
            let k = rem.len() - 1;
            let q = &rem[k] / &lc;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k - db + i] -= &q * c;
                }
                quot[k - db] = q;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Exact division; `None` if there is a remainder.
    pub fn div_exact(&self, divisor: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Distinct rational roots, ascending. Candidates come from the rational
    /// root theorem; integers whose divisors cannot be enumerated by trial
    /// division below `10^6` contribute only the divisors found.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        if self.is_zero() {
            return roots;
        }
        let mut coeffs = self.coeffs.clone();
        let lead_zero = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zero > 0 {
            roots.push(Rational::zero());
            coeffs.drain(..lead_zero);
        }
        let reduced = UPoly::new(coeffs);
        if reduced.degree().unwrap_or(0) > 0 {
            let den = common_denominator(reduced.coeffs.iter());
            let ints: Vec<BigInt> = reduced
                .coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
                .collect();
            let a0 = ints[0].abs();
            let an = ints.last().expect("nonzero").abs();
            for p in divisors(&a0) {
                for q in divisors(&an) {
                    if !p.gcd(&q).is_one() {
                        continue;
                    }
                    for sign in [1, -1] {
                        let t = Rational::new(BigInt::from(sign) * &p, q.clone());
                        if reduced.eval(&t).is_zero() && !roots.contains(&t) {
                            roots.push(t);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u64 = 1;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &(&bd * &bd) > n {
            break;
        }
        if (n % &bd).is_zero() {
            let other = n / &bd;
            if other != bd {
                large.push(other);
            }
            small.push(bd);
        }
        d += 1;
    }
    if small.is_empty() && n.to_u64() != Some(0) {
        small.push(BigInt::one());
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}
