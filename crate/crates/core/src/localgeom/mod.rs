//! Local invariants of a singular point: multiplicity and Milnor number.

pub mod oracle;

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::foliation::{
    act, frame_to_point, has_isolated_singularities, is_singular_at, local_representation,
    ProjPoint, VectorField,
};
use crate::poly::{gcd_bivariate, Degree, MPoly, Rational};

/// The pair `(f, g)` describing a foliation near the origin of the chart `x = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LocalPair {
    pub f: MPoly,
    pub g: MPoly,
}

impl LocalPair {
    pub fn new(f: MPoly, g: MPoly) -> Self {
        assert!(f.nvars() == 2 && g.nvars() == 2, "local pairs live in (y, z)");
        Self { f, g }
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.f.constant_term().is_zero() && self.g.constant_term().is_zero()
    }
}

/// A local intersection multiplicity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IntersectionNumber {
    Finite(u64),
    Infinite,
}

impl IntersectionNumber {
    pub fn finite(self) -> Option<u64> {
        match self {
            IntersectionNumber::Finite(n) => Some(n),
            IntersectionNumber::Infinite => None,
        }
    }
}

impl fmt::Display for IntersectionNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntersectionNumber::Finite(n) => write!(f, "{n}"),
            IntersectionNumber::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for IntersectionNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            IntersectionNumber::Finite(n) => s.serialize_u64(*n),
            IntersectionNumber::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// `min(ord f, ord g)`; a zero entry vanishes to every order and does not
/// count. `MinusInfinity` only when both are zero.
pub fn multiplicity_at_origin(pair: &LocalPair) -> Result<Degree> {
    if !pair.vanishes_at_origin() {
        return Err(Error::NotSingular("(0, 0)".into()));
    }
    let orders = [pair.f.order(), pair.g.order()];
    Ok(orders
        .into_iter()
        .filter_map(Degree::finite)
        .min()
        .map_or(Degree::MinusInfinity, Degree::Finite))
}

/// Drops the terms of total degree at least `n`.
fn truncate(p: &MPoly, n: u32) -> MPoly {
    MPoly::from_terms(2, p.terms().filter(|(m, _)| m.degree() < n).map(|(m, c)| (m.0, c.clone())))
}

fn at_z_zero(p: &MPoly) -> MPoly {
    p.substitute_value(1, &Rational::zero())
}

/// `I_0(f, g)` by Fulton's reduction. Infinite exactly when the gcd of the
/// pair passes through the origin; that case is decided before reducing.
pub fn intersection_index_origin(pair: &LocalPair) -> IntersectionNumber {
    if !pair.vanishes_at_origin() {
        return IntersectionNumber::Finite(0);
    }
    if pair.f.is_zero() || pair.g.is_zero() {
        return IntersectionNumber::Infinite;
    }
    let common = gcd_bivariate(&pair.f, &pair.g).expect("inputs are nonzero");
    if common.constant_term().is_zero() {
        return IntersectionNumber::Infinite;
    }
    let mut total: u64 = 0;
    // Bezout bounds the index by B = deg f * deg g. A pair and its truncation
    // mod m^N generate the same local ideal once either index is below N, so
    // every intermediate pair is kept mod m^(B+1).
    let bound = [&pair.f, &pair.g].map(|p| p.total_degree().finite().unwrap_or(0));
    let precision = bound[0] * bound[1] + 1;
    let mut stack = vec![(pair.f.clone(), pair.g.clone())];
    while let Some((mut f, mut g)) = stack.pop() {
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            continue;
        }
        let (mut f0, mut g0) = (at_z_zero(&f), at_z_zero(&g));
        // Order so that deg f(y, 0) <= deg g(y, 0), the zero polynomial lowest.
        if f0.degree_in(0) > g0.degree_in(0) {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut f0, &mut g0);
        }
        if f0.is_zero() {
            // f = z h and I(z, g) = ord_y g(y, 0); g(y, 0) != 0 since no common factor z.
            let k = g0
                .order_in(0)
                .finite()
                .expect("a common factor z was excluded up front");
            total += u64::from(k);
            stack.push((f.div_var_power(1, 1), g));
        } else {
            let r = f0.degree_in(0).finite().expect("nonzero");
            let s = g0.degree_in(0).finite().expect("nonzero");
            let ratio = g0.coeff([s, 0, 0]) / f0.coeff([r, 0, 0]);
            let shift = crate::poly::Monomial([s - r, 0, 0]);
            let g = truncate(&(&g - &f.mul_monomial(&shift, &ratio)), precision);
            stack.push((f, g));
        }
    }
    IntersectionNumber::Finite(total)
}

fn local_pair_at(x: &VectorField, p: &ProjPoint) -> Result<LocalPair> {
    if !is_singular_at(x, p) {
        return Err(Error::NotSingular(p.to_string()));
    }
    let h = frame_to_point(p);
    Ok(local_representation(&act(&h.inverse(), x)))
}

/// Milnor number at a singular point, computed in the frame moving `p` to `[1:0:0]`.
pub fn milnor_at_point(x: &VectorField, p: &ProjPoint) -> Result<IntersectionNumber> {
    Ok(intersection_index_origin(&local_pair_at(x, p)?))
}

pub fn multiplicity_at_point(x: &VectorField, p: &ProjPoint) -> Result<u32> {
    let pair = local_pair_at(x, p)?;
    match multiplicity_at_origin(&pair)? {
        Degree::Finite(m) => Ok(m),
        Degree::MinusInfinity => Err(Error::NullFoliation),
    }
}

/// `d^2 + d + 1`, the sum of all Milnor numbers of a degree-`d` foliation.
pub fn total_milnor(d: u32) -> u64 {
    let d = u64::from(d);
    d * d + d + 1
}

/// True iff `mu_p = d^2 + d + 1`, which forces `Sing(X) = {p}`.
pub fn unique_singularity_certificate(x: &VectorField, p: &ProjPoint) -> Result<bool> {
    if !has_isolated_singularities(x) {
        return Err(Error::NotIsolated);
    }
    Ok(milnor_at_point(x, p)? == IntersectionNumber::Finite(total_milnor(x.degree())))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SingularityReport {
    pub point: ProjPoint,
    pub degree: u32,
    pub multiplicity: u32,
    pub milnor: IntersectionNumber,
    pub unique: bool,
}

/// Multiplicity, Milnor number and uniqueness certificate at `p`.
pub fn analyze_point(x: &VectorField, p: &ProjPoint) -> Result<SingularityReport> {
    if !has_isolated_singularities(x) {
        return Err(Error::NotIsolated);
    }
    let pair = local_pair_at(x, p)?;
    let multiplicity = match multiplicity_at_origin(&pair)? {
        Degree::Finite(m) => m,
        Degree::MinusInfinity => return Err(Error::NullFoliation),
    };
    let milnor = intersection_index_origin(&pair);
    Ok(SingularityReport {
        point: p.clone(),
        degree: x.degree(),
        multiplicity,
        milnor,
        unique: milnor == IntersectionNumber::Finite(total_milnor(x.degree())),
    })
}

/// Coordinate points that are singular, in index order.
pub fn singular_coordinate_points(x: &VectorField) -> Vec<ProjPoint> {
    (0..3)
        .map(ProjPoint::basis)
        .filter(|p| is_singular_at(x, p))
        .collect()
}
