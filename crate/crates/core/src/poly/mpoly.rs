use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::matrix::Matrix3;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector. Two-variable polynomials use the first two slots for
/// `(y, z)` and keep the third slot at zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(std::array::from_fn(|i| self.0[i] - other.0[i])))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }
}

// Graded lexicographic with the first variable largest.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree or order of a polynomial; the zero polynomial gets `MinusInfinity`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse polynomial in 2 variables `(y, z)` or 3 variables `(x, y, z)` with
/// exact rational coefficients. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

pub fn variable_names(nvars: usize) -> &'static [&'static str] {
    match nvars {
        2 => &["y", "z"],
        _ => &["x", "y", "z"],
    }
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars == 2 || nvars == 3, "polynomials have 2 or 3 variables");
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, [0, 0, 0], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut e = [0; 3];
        e[index] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exponents: [u32; 3], c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        assert!(
            exponents[nvars..].iter().all(|&e| e == 0),
            "exponent outside the variable range"
        );
        if !c.is_zero() {
            p.terms.insert(Monomial(exponents), c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = ([u32; 3], Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: [u32; 3]) -> Rational {
        self.terms
            .get(&Monomial(exponents))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff([0, 0, 0])
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|m| m.0[var])
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// Lowest total degree among the terms.
    pub fn order(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .min()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// Largest `k` such that `var^k` divides the polynomial.
    pub fn order_in(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|m| m.0[var])
            .min()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Nonzero homogeneous components in ascending degree; their sum is `self`.
    pub fn homogeneous_decomposition(&self) -> Vec<MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| MPoly::zero(self.nvars))
                .terms
                .insert(*m, c.clone());
        }
        out.into_values().collect()
    }

    /// The lowest-degree nonzero form.
    pub fn lowest_form(&self) -> MPoly {
        match self.order() {
            Degree::MinusInfinity => self.clone(),
            Degree::Finite(d) => self.homogeneous_component(d),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut result = MPoly::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn check_same(&self, other: &MPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Usage(format!(
                "mismatched variable counts: {} and {}",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        Ok(self * other)
    }

    pub fn partial_derivative(&self, var: usize) -> MPoly {
        assert!(var < self.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut k = *m;
            k.0[var] -= 1;
            out.add_term(k, c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes `var = value`; the variable count is unchanged.
    pub fn substitute_value(&self, var: usize, value: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut k = *m;
            let e = k.0[var];
            k.0[var] = 0;
            let factor = if e == 0 {
                Rational::one()
            } else {
                num_traits::pow(value.clone(), e as usize)
            };
            out.add_term(k, c * factor);
        }
        out
    }

    /// Composes with the linear map `(x, y, z) -> M (x, y, z)`: each variable
    /// `v_i` is replaced by `sum_j M[i][j] v_j`.
    pub fn substitute_linear(&self, m: &Matrix3) -> Result<MPoly> {
        if self.nvars != 3 {
            return Err(Error::Usage(
                "linear substitution needs a 3-variable polynomial".into(),
            ));
        }
        let forms: Vec<MPoly> = (0..3)
            .map(|i| {
                MPoly::from_terms(
                    3,
                    (0..3).map(|j| {
                        let mut e = [0; 3];
                        e[j] = 1;
                        (e, m.rows[i][j].clone())
                    }),
                )
            })
            .collect();
        let max = self.total_degree().finite().unwrap_or(0) as usize;
        let powers: Vec<Vec<MPoly>> = forms
            .iter()
            .map(|l| {
                let mut v = vec![MPoly::one(3)];
                for k in 1..=max {
                    let next = &v[k - 1] * l;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = MPoly::zero(3);
        for (mono, c) in &self.terms {
            let [a, b, e] = mono.0;
            let t = &(&powers[0][a as usize] * &powers[1][b as usize]) * &powers[2][e as usize];
            out = &out + &t.scale(c);
        }
        Ok(out)
    }

    /// Sets the chart variable to 1 and returns a polynomial in the two
    /// remaining variables, in their original order.
    pub fn dehomogenize(&self, chart: usize) -> Result<MPoly> {
        if self.nvars != 3 || chart > 2 {
            return Err(Error::Usage(
                "dehomogenization needs a 3-variable polynomial and chart in 0..3".into(),
            ));
        }
        let keep: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
        let mut out = MPoly::zero(2);
        for (m, c) in &self.terms {
            out.add_term(Monomial([m.0[keep[0]], m.0[keep[1]], 0]), c.clone());
        }
        Ok(out)
    }

    /// Homogenizes a 2-variable polynomial in `(y, z)` to degree `degree` using `x`.
    pub fn homogenize(&self, degree: u32) -> Result<MPoly> {
        if self.nvars != 2 {
            return Err(Error::Usage("homogenization needs a 2-variable polynomial".into()));
        }
        let mut out = MPoly::zero(3);
        for (m, c) in &self.terms {
            let d = m.degree();
            if d > degree {
                return Err(Error::Usage(format!(
                    "term of degree {d} exceeds target degree {degree}"
                )));
            }
            out.add_term(Monomial([degree - d, m.0[0], m.0[1]]), c.clone());
        }
        Ok(out)
    }

    /// Views a 3-variable polynomial free of `x` as a polynomial in `(y, z)`.
    pub fn drop_x(&self) -> Option<MPoly> {
        if self.nvars != 3 {
            return None;
        }
        let mut out = MPoly::zero(2);
        for (m, c) in &self.terms {
            if m.0[0] != 0 {
                return None;
            }
            out.add_term(Monomial([m.0[1], m.0[2], 0]), c.clone());
        }
        Some(out)
    }

    /// Embeds a 2-variable `(y, z)` polynomial into `(x, y, z)`.
    pub fn lift_to_xyz(&self) -> MPoly {
        if self.nvars == 3 {
            return self.clone();
        }
        let mut out = MPoly::zero(3);
        for (m, c) in &self.terms {
            out.add_term(Monomial([0, m.0[0], m.0[1]]), c.clone());
        }
        out
    }

    /// Splits along powers of `var`: the `k`-th entry is the coefficient of `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let n = match self.degree_in(var) {
            Degree::MinusInfinity => return Vec::new(),
            Degree::Finite(d) => d as usize + 1,
        };
        let mut out = vec![MPoly::zero(self.nvars); n];
        for (m, c) in &self.terms {
            let mut k = *m;
            let e = k.0[var] as usize;
            k.0[var] = 0;
            out[e].terms.insert(k, c.clone());
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn try_div(&self, divisor: &MPoly) -> Option<MPoly> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quotient = MPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let q = m.checked_div(&lm)?;
            let qc = c / &lc;
            rem = &rem - &divisor.mul_monomial(&q, &qc);
            quotient.add_term(q, qc);
        }
        Some(quotient)
    }

    /// Scales so that the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> MPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// True when every term has nonzero degree in the given variable.
    pub fn divisible_by_var(&self, var: usize) -> bool {
        self.terms.keys().all(|m| m.0[var] > 0)
    }

    /// Divides by `var^k`; panics if not divisible.
    pub fn div_var_power(&self, var: usize, k: u32) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut n = *m;
            n.0[var] = n.0[var].checked_sub(k).expect("not divisible by variable power");
            out.terms.insert(n, c.clone());
        }
        out
    }
}

fn merge(a: &MPoly, b: &MPoly, negate: bool) -> MPoly {
    assert_eq!(a.nvars, b.nvars, "mismatched variable counts");
    let mut out = a.clone();
    for (m, c) in &b.terms {
        out.add_term(*m, if negate { -c.clone() } else { c.clone() });
    }
    out
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "mismatched variable counts");
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = variable_names(self.nvars);
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(format_rational(&abs));
            }
            for (name, &e) in names.iter().zip(m.0.iter()) {
                match e {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
