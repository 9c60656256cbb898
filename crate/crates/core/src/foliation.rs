//! Homogeneous vector fields on the projective plane modulo the radial field.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::localgeom::LocalPair;
use crate::poly::mpoly::variable_names;
use crate::poly::parse::parse_poly_at;
use crate::poly::{format_rational, gcd_bivariate, parse_rational, Matrix3, MPoly, Rational};

const PARTIALS: [&str; 3] = ["d/dx", "d/dy", "d/dz"];

/// `P d/dx + Q d/dy + R d/dz` with `P, Q, R` homogeneous of a common degree `d >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VectorField {
    degree: u32,
    comps: [MPoly; 3],
}

impl VectorField {
    /// Validates homogeneity and the common degree. All-zero input is the null foliation.
    pub fn new(p: MPoly, q: MPoly, r: MPoly) -> Result<Self> {
        let comps = [p, q, r];
        if comps.iter().any(|c| c.nvars() != 3) {
            return Err(Error::Usage("vector field components need variables x, y, z".into()));
        }
        let mut degree = None;
        for (c, name) in comps.iter().zip(PARTIALS) {
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(Error::MixedDegrees(format!(
                    "the {name} component `{c}` is not homogeneous"
                )));
            }
            let d = c.total_degree().finite().expect("nonzero");
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::MixedDegrees(format!(
                        "components of degrees {e} and {d}"
                    )))
                }
                Some(_) => {}
            }
        }
        let degree = degree.ok_or(Error::NullFoliation)?;
        if degree == 0 {
            return Err(Error::UnsupportedDegree(0));
        }
        Ok(Self { degree, comps })
    }

    /// Builds a field of known degree; components must already be homogeneous of
    /// that degree or zero.
    fn from_parts(degree: u32, comps: [MPoly; 3]) -> Result<Self> {
        if comps.iter().all(MPoly::is_zero) {
            return Err(Error::NullFoliation);
        }
        Ok(Self { degree, comps })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[MPoly; 3] {
        &self.comps
    }

    pub fn p(&self) -> &MPoly {
        &self.comps[0]
    }

    pub fn q(&self) -> &MPoly {
        &self.comps[1]
    }

    pub fn r(&self) -> &MPoly {
        &self.comps[2]
    }

    pub fn scale(&self, c: &Rational) -> Result<Self> {
        Self::from_parts(self.degree, self.comps.clone().map(|p| p.scale(c)))
    }

    /// `X + G·E` for a form `G` of degree `d - 1`.
    pub fn add_radial_multiple(&self, g: &MPoly) -> Result<Self> {
        if !g.is_zero() && (!g.is_homogeneous() || g.total_degree().finite() != Some(self.degree - 1)) {
            return Err(Error::Usage(format!(
                "radial multiplier must be a form of degree {}",
                self.degree - 1
            )));
        }
        let comps = std::array::from_fn(|i| &self.comps[i] + &(g * &MPoly::var(3, i)));
        Self::from_parts(self.degree, comps)
    }

    pub fn eval(&self, v: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|i| self.comps[i].eval(v))
    }

    /// The 1-form coefficients `(yR - zQ, zP - xR, xQ - yP)`; they vanish
    /// simultaneously exactly at the singular points and do not change when a
    /// multiple of the radial field is added.
    pub fn contraction_minors(&self) -> [MPoly; 3] {
        let v: [MPoly; 3] = std::array::from_fn(|i| MPoly::var(3, i));
        let [p, q, r] = &self.comps;
        [
            &(&v[1] * r) - &(&v[2] * q),
            &(&v[2] * p) - &(&v[0] * r),
            &(&v[0] * q) - &(&v[1] * p),
        ]
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.comps.iter().zip(PARTIALS) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) {name}")?;
        }
        Ok(())
    }
}

impl Serialize for VectorField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn blank_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for ch in text.chars() {
        if ch == '\n' {
            in_comment = false;
        } else if ch == '#' {
            in_comment = true;
        }
        if in_comment {
            // Keep byte offsets stable for error positions.
            out.extend(std::iter::repeat(' ').take(ch.len_utf8()));
        } else {
            out.push(ch);
        }
    }
    out
}

/// Parses `(poly) d/dx + (poly) d/dy + (poly) d/dz`; omitted components are
/// zero, repeated ones add up and `#` starts a comment.
pub fn parse_vector_field(text: &str) -> Result<VectorField> {
    let clean = blank_comments(text);
    let bytes = clean.as_bytes();
    let mut comps = [MPoly::zero(3), MPoly::zero(3), MPoly::zero(3)];
    let mut i = 0;
    let mut seen_term = false;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i >= bytes.len() {
            break;
        }
        let mut negate = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negate = bytes[i] == b'-';
            i += 1;
            skip_ws(&mut i);
        } else if seen_term {
            return Err(Error::Syntax {
                position: i,
                message: "expected `+` between terms".into(),
            });
        }
        if i >= bytes.len() || bytes[i] != b'(' {
            return Err(Error::Syntax {
                position: i,
                message: "expected `(` starting a component".into(),
            });
        }
        let open = i;
        let mut depth = 0usize;
        let mut close = None;
        for (k, &b) in bytes.iter().enumerate().skip(open) {
            match b {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        close = Some(k);
                        break;
                    }
                }
                _ => {}
            }
        }
        let close = close.ok_or(Error::Syntax {
            position: open,
            message: "unbalanced `(`".into(),
        })?;
        let poly = parse_poly_at(&clean[open + 1..close], 3, open + 1)?;
        i = close + 1;
        skip_ws(&mut i);
        let rest = &clean[i..];
        let Some(k) = PARTIALS.iter().position(|d| rest.starts_with(d)) else {
            return Err(Error::Syntax {
                position: i,
                message: "expected d/dx, d/dy or d/dz".into(),
            });
        };
        i += PARTIALS[k].len();
        comps[k] = if negate { &comps[k] - &poly } else { &comps[k] + &poly };
        seen_term = true;
    }
    if !seen_term {
        return Err(Error::Syntax {
            position: 0,
            message: "empty vector field".into(),
        });
    }
    let [p, q, r] = comps;
    VectorField::new(p, q, r)
}

pub fn divergence(x: &VectorField) -> MPoly {
    (0..3).fold(MPoly::zero(3), |acc, i| &acc + &x.comps[i].partial_derivative(i))
}

/// A foliation, stored as its z-reduced representative: no monomial of `R`
/// is divisible by `z`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Foliation {
    rep: VectorField,
}

impl Foliation {
    pub fn field(&self) -> &VectorField {
        &self.rep
    }

    pub fn degree(&self) -> u32 {
        self.rep.degree
    }

    /// Coefficient of a basis monomial field in the z-reduced representative.
    pub fn coordinate(&self, b: &BasisField) -> Rational {
        self.rep.comps[b.component].coeff(b.exponents)
    }

    /// Nonzero coordinates in the order of [`gamma_basis`].
    pub fn coordinates(&self) -> Vec<(BasisField, Rational)> {
        gamma_basis(self.degree())
            .into_iter()
            .filter_map(|b| {
                let c = self.coordinate(&b);
                (!c.is_zero()).then_some((b, c))
            })
            .collect()
    }

    /// True when both represent the same foliation (representatives proportional).
    pub fn same_class(&self, other: &Foliation) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let mut ratio: Option<Rational> = None;
        for b in gamma_basis(self.degree()) {
            let (a, c) = (self.coordinate(&b), other.coordinate(&b));
            match (a.is_zero(), c.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let r = c / a;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(s) if *s != r => return false,
                        Some(_) => {}
                    }
                }
                _ => return false,
            }
        }
        true
    }
}

impl fmt::Display for Foliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// Subtracts `G·E` with `G = (R - R|_{z=0}) / z`, leaving `R` free of `z`.
pub fn z_reduce(x: &VectorField) -> Result<Foliation> {
    let r = x.r();
    let r0 = r.substitute_value(2, &Rational::zero());
    let g = (r - &r0).div_var_power(2, 1);
    let comps = [
        x.p() - &(&g * &MPoly::var(3, 0)),
        x.q() - &(&g * &MPoly::var(3, 1)),
        r0,
    ];
    Ok(Foliation {
        rep: VectorField::from_parts(x.degree, comps)?,
    })
}

/// An invertible 3×3 rational matrix with its inverse cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frame {
    matrix: Matrix3,
    inverse: Matrix3,
}

impl Frame {
    pub fn new(matrix: Matrix3) -> Result<Self> {
        let inverse = matrix.inverse().ok_or(Error::SingularFrame)?;
        Ok(Self { matrix, inverse })
    }

    pub fn identity() -> Self {
        Self {
            matrix: Matrix3::identity(),
            inverse: Matrix3::identity(),
        }
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix3 {
        &self.inverse
    }

    pub fn inverse(&self) -> Frame {
        Frame {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Frame) -> Frame {
        Frame {
            matrix: &self.matrix * &other.matrix,
            inverse: &other.inverse * &self.inverse,
        }
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(self.matrix.mul_vec(p.coords())).expect("invertible image is nonzero")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix3::identity()
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

impl Serialize for Frame {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix.serialize(s)
    }
}

/// `g·X = Dg X(g⁻¹ v)`: component `i` is `sum_j g_ij X_j(g⁻¹ v)`.
pub fn act(g: &Frame, x: &VectorField) -> VectorField {
    let pulled: Vec<MPoly> = x
        .comps
        .iter()
        .map(|c| c.substitute_linear(&g.inverse).expect("3-variable component"))
        .collect();
    let comps = std::array::from_fn(|i| {
        (0..3).fold(MPoly::zero(3), |acc, j| &acc + &pulled[j].scale(&g.matrix.rows[i][j]))
    });
    VectorField::from_parts(x.degree, comps).expect("invertible frames preserve nonzero fields")
}

/// Acts on the class and returns the z-reduced representative.
pub fn act_foliation(g: &Frame, f: &Foliation) -> Foliation {
    z_reduce(&act(g, &f.rep)).expect("invertible frames preserve non-null classes")
}

/// A point of the projective plane, kept with its first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    coords: [Rational; 3],
}

impl ProjPoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| Error::Usage("projective point with all coordinates zero".into()))?;
        Ok(Self {
            coords: coords.map(|c| c / &lead),
        })
    }

    pub fn from_i64(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(crate::poly::int))
    }

    /// The coordinate point `e_i`.
    pub fn basis(i: usize) -> Self {
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero()];
        c[i] = Rational::one();
        Self { coords: c }
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    /// Parses `p0,p1,p2` with rational entries.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Syntax {
                position: 0,
                message: "a point needs three comma-separated coordinates".into(),
            });
        }
        let mut coords = Vec::with_capacity(3);
        for part in parts {
            coords.push(parse_rational(part).ok_or_else(|| Error::NonRational(part.trim().into()))?);
        }
        let coords: [Rational; 3] = coords.try_into().expect("three entries");
        Self::new(coords)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "[{}]", c.join(":"))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `X(p)` is proportional to `p`.
pub fn is_singular_at(x: &VectorField, p: &ProjPoint) -> bool {
    let v = x.eval(p.coords());
    let c = p.coords();
    (0..3).all(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        (&v[j] * &c[k] - &v[k] * &c[j]).is_zero()
    })
}

/// Invertible frame whose first column is `p`; the other columns are the
/// first pair of standard basis vectors, in index order, that completes it.
pub fn frame_to_point(p: &ProjPoint) -> Frame {
    let e = |i| ProjPoint::basis(i).coords;
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let m = Matrix3::from_columns([p.coords.clone(), e(a), e(b)]);
        if let Ok(frame) = Frame::new(m) {
            return frame;
        }
    }
    unreachable!("a nonzero vector completes to a basis with two standard vectors")
}

/// The chart `x = 1` pair `f = Q(1,y,z) - y P(1,y,z)`, `g = R(1,y,z) - z P(1,y,z)`.
pub fn local_representation(x: &VectorField) -> LocalPair {
    let d = |c: &MPoly| c.dehomogenize(0).expect("3-variable component");
    let (p, q, r) = (d(x.p()), d(x.q()), d(x.r()));
    let y = MPoly::var(2, 0);
    let z = MPoly::var(2, 1);
    LocalPair::new(&q - &(&y * &p), &r - &(&z * &p))
}

/// A basis monomial field `x^a y^b z^c d/dx_i` of the z-reduced coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BasisField {
    pub component: usize,
    pub exponents: [u32; 3],
}

impl BasisField {
    pub fn new(component: usize, exponents: [u32; 3]) -> Self {
        Self {
            component,
            exponents,
        }
    }

    pub fn field(&self) -> VectorField {
        let mut comps = [MPoly::zero(3), MPoly::zero(3), MPoly::zero(3)];
        comps[self.component] = MPoly::monomial(3, self.exponents, Rational::one());
        VectorField::new(comps[0].clone(), comps[1].clone(), comps[2].clone())
            .expect("a monomial field is valid")
    }
}

impl fmt::Display for BasisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = variable_names(3);
        let mut factors = Vec::new();
        for (name, &e) in names.iter().zip(self.exponents.iter()) {
            match e {
                0 => {}
                1 => factors.push((*name).to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        let mono = if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        };
        write!(f, "{mono} {}", PARTIALS[self.component])
    }
}

impl Serialize for BasisField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn monomials_desc(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// Coordinate basis of z-reduced degree-`d` fields: every monomial for `d/dx`
/// and `d/dy`, z-free monomials for `d/dz`. It has `d^2 + 4d + 3` elements.
pub fn gamma_basis(d: u32) -> Vec<BasisField> {
    let mut out = Vec::new();
    for component in 0..2 {
        out.extend(monomials_desc(d).into_iter().map(|e| BasisField::new(component, e)));
    }
    out.extend(
        monomials_desc(d)
            .into_iter()
            .filter(|e| e[2] == 0)
            .map(|e| BasisField::new(2, e)),
    );
    out
}

/// False when the contraction minors share a curve, i.e. the singular set
/// contains a curve. Charts `x = 1` and `y = 1` together see every factor.
pub fn has_isolated_singularities(x: &VectorField) -> bool {
    let minors = x.contraction_minors();
    for chart in [0, 1] {
        let local: Vec<MPoly> = minors
            .iter()
            .map(|m| m.dehomogenize(chart).expect("3-variable minor"))
            .collect();
        let mut g = MPoly::zero(2);
        for m in &local {
            if m.is_zero() {
                continue;
            }
            g = if g.is_zero() {
                m.monic()
            } else {
                gcd_bivariate(&g, m).expect("one input is nonzero")
            };
        }
        if g.is_zero() || g.total_degree().finite().unwrap_or(0) > 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse_poly, rat};

    fn p3(s: &str) -> MPoly {
        parse_poly(s, 3).unwrap()
    }

    fn vf(s: &str) -> VectorField {
        parse_vector_field(s).unwrap()
    }

    #[test]
    fn parses_fields() {
        let x = vf("(y^3) d/dx + (z^3) d/dy");
        assert_eq!(x.degree(), 3);
        assert_eq!(x.p(), &p3("y^3"));
        assert!(x.r().is_zero());
        let e = vf("(x) d/dx + (y) d/dy + (z) d/dz  # radial");
        assert_eq!(e.degree(), 1);
        assert!(matches!(
            parse_vector_field("(x^2) d/dx + (y^3) d/dy"),
            Err(Error::MixedDegrees(_))
        ));
        assert!(matches!(
            parse_vector_field("(x^2) d/dx + (y^2 d/dy"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_vector_field("(x + q) d/dx"),
            Err(Error::NonRational(_))
        ));
    }

    #[test]
    fn divergence_examples() {
        assert_eq!(divergence(&vf("(x^3) d/dx")), p3("3*x^2"));
        assert!(divergence(&vf("(y^3) d/dx + (z^3) d/dy")).is_zero());
        let ge = vf("(x^2*y) d/dx + (x*y^2) d/dy + (x*y*z) d/dz");
        // G = xy has degree 2, so the field has degree 3 and div(G E) = 5 G.
        assert_eq!(divergence(&ge), p3("5*x*y"));
        let ge2 = vf("(x^2) d/dx + (x*y) d/dy + (x*z) d/dz");
        assert_eq!(divergence(&ge2), p3("4*x"));
    }

    #[test]
    fn z_reduction() {
        let x = vf("(x^3) d/dx + (y^3) d/dz");
        assert_eq!(z_reduce(&x).unwrap().field(), &x);
        assert_eq!(
            z_reduce(&vf("(x) d/dx + (y) d/dy + (z) d/dz")),
            Err(Error::NullFoliation)
        );
        let x2 = vf("(-y^2) d/dx + (y*z - z^2) d/dy + (z^2) d/dz");
        let reduced = z_reduce(&x2).unwrap();
        assert_eq!(reduced.field(), &vf("(-y^2 - x*z) d/dx + (-z^2) d/dy"));
        let back = reduced.field().add_radial_multiple(&p3("z")).unwrap();
        assert_eq!(back, x2);
    }

    #[test]
    fn action_examples() {
        let x = vf("(y^3) d/dx");
        assert_eq!(act(&Frame::identity(), &x), x);
        let swap = Frame::new(Matrix3::permutation([1, 0, 2])).unwrap();
        assert_eq!(act(&swap, &x), vf("(x^3) d/dy"));
        let t = int(3);
        let torus = Frame::new(Matrix3::diagonal([t.clone(), int(1), t.recip()])).unwrap();
        // Weight pairing of x^2 z d/dx with (1, 0, -1) is 0; of x z^2 d/dx it is 2.
        assert_eq!(act(&torus, &vf("(x^2*z) d/dx")), vf("(x^2*z) d/dx"));
        assert_eq!(act(&torus, &vf("(x*z^2) d/dx")), vf("(9*x*z^2) d/dx"));
    }

    #[test]
    fn singular_points() {
        let x = vf("(y^3+y^2*z-y*z^2+z^3) d/dx + (z^3) d/dy");
        assert!(is_singular_at(&x, &ProjPoint::basis(0)));
        let ss = vf("(x*y^2 - 5*y^3 - 2*x*y*z - 12*y^2*z - 3*x*z^2 - y*z^2 - 10*z^3) d/dx + (y^3 + x*y*z + 2*y^2*z + x*z^2 + 3*z^3) d/dy");
        assert!(!is_singular_at(&ss, &ProjPoint::basis(1)));
        let e = vf("(x) d/dx + (y) d/dy + (z) d/dz");
        assert!(is_singular_at(&e, &ProjPoint::from_i64([2, -1, 5]).unwrap()));
    }

    #[test]
    fn frames_to_points() {
        assert!(frame_to_point(&ProjPoint::basis(0)).is_identity());
        let f = frame_to_point(&ProjPoint::basis(2));
        assert_eq!(f.matrix(), &Matrix3::permutation([2, 0, 1]));
        let p = ProjPoint::from_i64([1, 2, 3]).unwrap();
        let g = frame_to_point(&p);
        assert_eq!(g.matrix().column(0), [int(1), int(2), int(3)]);
        assert_eq!(g.apply(&ProjPoint::basis(0)), p);
    }

    #[test]
    fn local_pairs() {
        let l = local_representation(&vf("(y^3+y^2*z-y*z^2+z^3) d/dx + (z^3) d/dy"));
        assert_eq!(l.f, parse_poly("-y^4-y^3*z+y^2*z^2-y*z^3+z^3", 2).unwrap());
        assert_eq!(l.g, parse_poly("-y^3*z-y^2*z^2+y*z^3-z^4", 2).unwrap());
        let l = local_representation(&vf("(x^2) d/dx"));
        assert_eq!(l.f, parse_poly("-y", 2).unwrap());
        assert_eq!(l.g, parse_poly("-z", 2).unwrap());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(gamma_basis(1).len(), 8);
        assert_eq!(gamma_basis(2).len(), 15);
        assert_eq!(gamma_basis(3).len(), 24);
        assert_eq!(gamma_basis(3)[0].to_string(), "x^3 d/dx");
    }

    #[test]
    fn isolated_detection() {
        assert!(has_isolated_singularities(&vf("(y^3+y^2*z-y*z^2+z^3) d/dx + (z^3) d/dy")));
        // Every point of the line z = 0 is singular.
        assert!(!has_isolated_singularities(&vf("(x*z) d/dx + (y*z) d/dy")));
        // The line x = 0 is invisible in the chart x = 1.
        assert!(!has_isolated_singularities(&vf("(x^2) d/dy + (x*y) d/dz")));
    }

    #[test]
    fn proportional_classes() {
        let a = z_reduce(&vf("(y^2) d/dx + (z^2) d/dy")).unwrap();
        let b = z_reduce(&vf("(2*y^2 + x^2) d/dx + (2*z^2 + x*y) d/dy + (x*z) d/dz")).unwrap();
        assert!(a.same_class(&b));
        let c = z_reduce(&vf("(y^2) d/dx + (2*z^2) d/dy")).unwrap();
        assert!(!c.same_class(&a));
        let half = a.field().scale(&rat(1, 2)).unwrap();
        assert!(z_reduce(&half).unwrap().same_class(&a));
    }
}
