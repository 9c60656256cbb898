//! Constructors and recognizers for the explicit degree-3 families, plus the
//! catalog of worked examples.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::foliation::{has_isolated_singularities, parse_vector_field, z_reduce, ProjPoint, VectorField};
use crate::git::VerdictClass;
use crate::localgeom::{multiplicity_at_point, milnor_at_point, IntersectionNumber};
use crate::poly::{format_rational, int, resultant_binary_forms, MPoly, Rational};

/// Parameter bag keyed by the names used on the command line.
pub type ParamMap = BTreeMap<String, Rational>;

fn take(map: &ParamMap, keys: &[&str]) -> Result<Vec<Rational>> {
    if let Some(extra) = map.keys().find(|k| !keys.contains(&k.as_str())) {
        return Err(Error::Usage(format!(
            "unknown parameter `{extra}`; expected {}",
            keys.join(", ")
        )));
    }
    keys.iter()
        .map(|k| {
            map.get(*k)
                .cloned()
                .ok_or_else(|| Error::Usage(format!("missing parameter `{k}`")))
        })
        .collect()
}

fn to_map(keys: &[&str], values: &[&Rational]) -> ParamMap {
    keys.iter()
        .zip(values)
        .map(|(k, v)| (k.to_string(), (*v).clone()))
        .collect()
}

fn serialize_map(map: &ParamMap) -> BTreeMap<String, String> {
    map.iter().map(|(k, v)| (k.clone(), format_rational(v))).collect()
}

fn mono(c: Rational, e: [u32; 3]) -> MPoly {
    MPoly::monomial(3, e, c)
}

fn sum(terms: Vec<MPoly>) -> MPoly {
    terms.iter().fold(MPoly::zero(3), |acc, t| &acc + t)
}

/// Binary form in `(y, z)` from descending coefficients of `y^(m-k) z^k`.
fn binary_form(coeffs: &[&Rational]) -> MPoly {
    let m = coeffs.len() as u32 - 1;
    MPoly::from_terms(
        2,
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| ([m - k as u32, k as u32, 0], (*c).clone())),
    )
}

/// Requires `mu = 13` and multiplicity 2 at `[1:0:0]`, with isolated singularities.
fn post_validate_m2(x: &VectorField) -> Result<()> {
    let p = ProjPoint::basis(0);
    let failure = || Error::FamilyCondition("post-validation (mu = 13, m = 2 at [1:0:0])".into());
    if !has_isolated_singularities(x) {
        return Err(failure());
    }
    if milnor_at_point(x, &p).map_err(|_| failure())? != IntersectionNumber::Finite(13)
        || multiplicity_at_point(x, &p).map_err(|_| failure())? != 2
    {
        return Err(failure());
    }
    Ok(())
}

/// Parameters of the strictly semistable normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SSParams {
    pub b02: Rational,
    pub b21: Rational,
    pub b12: Rational,
    pub c12: Rational,
}

impl SSParams {
    pub const KEYS: [&'static str; 4] = ["b02", "b21", "b12", "c12"];

    pub fn from_map(map: &ParamMap) -> Result<Self> {
        let v = take(map, &Self::KEYS)?;
        Ok(Self {
            b02: v[0].clone(),
            b21: v[1].clone(),
            b12: v[2].clone(),
            c12: v[3].clone(),
        })
    }

    pub fn to_map(&self) -> ParamMap {
        to_map(&Self::KEYS, &[&self.b02, &self.b21, &self.b12, &self.c12])
    }

    pub fn a30(&self) -> Rational {
        &self.b21 - int(2) * &self.c12 - int(5) * &self.b02
    }

    pub fn a21(&self) -> Rational {
        let (b02, b21, b12, c12) = (&self.b02, &self.b21, &self.b12, &self.c12);
        -(b21 * c12) + c12 * c12 - b21 * b02 - int(7) * b02 * b02 + b12
    }

    pub fn a12(&self) -> Rational {
        let (b02, b12, c12) = (&self.b02, &self.b12, &self.c12);
        c12 * c12 * b02 + int(2) * c12 * b02 * b02 - int(3) * b02 * b02 * b02 - b12 * c12
            - b12 * b02
            + c12 * b02
            + b02 * b02
    }

    pub fn a03(&self) -> Rational {
        let (b02, c12) = (&self.b02, &self.c12);
        -(b02 * b02 * b02 * b02) - c12 * c12 * b02 - int(2) * c12 * b02 * b02 - b02 * b02 * b02
    }
}

pub fn ss_family(p: &SSParams) -> Result<VectorField> {
    if p.a30().is_zero() {
        return Err(Error::FamilyCondition("a30 = b21 - 2*c12 - 5*b02 != 0".into()));
    }
    let (b02, b21, b12, c12) = (&p.b02, &p.b21, &p.b12, &p.c12);
    let e = b02 * (b02 + c12);
    let pp = sum(vec![
        mono(int(1), [1, 2, 0]),
        mono(-c12.clone(), [1, 1, 1]),
        mono(-e.clone(), [1, 0, 2]),
        mono(p.a30(), [0, 3, 0]),
        mono(p.a21(), [0, 2, 1]),
        mono(p.a12(), [0, 1, 2]),
        mono(p.a03(), [0, 0, 3]),
    ]);
    let qq = sum(vec![
        mono(int(1), [1, 1, 1]),
        mono(b02.clone(), [1, 0, 2]),
        mono(int(1), [0, 3, 0]),
        mono(b21 - c12, [0, 2, 1]),
        mono(-(b02 * b02) - b02 * c12 + b12, [0, 1, 2]),
        mono(e, [0, 0, 3]),
    ]);
    let x = VectorField::new(pp, qq, MPoly::zero(3))?;
    post_validate_m2(&x)?;
    Ok(x)
}

/// Free coefficients of the stable multiplicity-2 family; the `b` and `c`
/// coefficients follow from conditions (1)-(5).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableParams {
    pub a10: Rational,
    pub a01: Rational,
    pub a20: Rational,
    pub a11: Rational,
    pub a02: Rational,
    pub a30: Rational,
    pub a21: Rational,
    pub a12: Rational,
    pub a03: Rational,
}

impl StableParams {
    pub const KEYS: [&'static str; 9] =
        ["a10", "a01", "a20", "a11", "a02", "a30", "a21", "a12", "a03"];

    fn values(&self) -> [&Rational; 9] {
        [
            &self.a10, &self.a01, &self.a20, &self.a11, &self.a02, &self.a30, &self.a21,
            &self.a12, &self.a03,
        ]
    }

    pub fn from_map(map: &ParamMap) -> Result<Self> {
        let v = take(map, &Self::KEYS)?;
        Ok(Self {
            a10: v[0].clone(),
            a01: v[1].clone(),
            a20: v[2].clone(),
            a11: v[3].clone(),
            a02: v[4].clone(),
            a30: v[5].clone(),
            a21: v[6].clone(),
            a12: v[7].clone(),
            a03: v[8].clone(),
        })
    }

    pub fn to_map(&self) -> ParamMap {
        to_map(&Self::KEYS, &self.values())
    }

    /// `(b30, b21, b12, b03, c30)` from conditions (1)-(5).
    pub fn derived(&self) -> [Rational; 5] {
        let (a, b) = (&self.a10, &self.a01);
        [
            int(-4) * a * a * a * b,
            int(-6) * a * a * b * b,
            int(-4) * a * b * b * b,
            -(b * b * b * b),
            a * a * a * a,
        ]
    }

    fn linear_form(&self) -> MPoly {
        binary_form(&[&self.a10, &self.a01])
    }

    /// The binary cubic `Q - y (a20 y^2 + a11 y z + a02 z^2)` of condition (6).
    fn condition6_form(&self) -> MPoly {
        let [b30, b21, b12, b03, _] = self.derived();
        binary_form(&[
            &(b30 - &self.a20),
            &(b21 - &self.a11),
            &(b12 - &self.a02),
            &b03,
        ])
    }

    fn cubic(&self) -> MPoly {
        binary_form(&[&self.a30, &self.a21, &self.a12, &self.a03])
    }

    /// Conditions on the free coefficients; (1)-(5) hold by construction.
    pub fn check(&self) -> Result<()> {
        if (&self.a10 * &self.a01).is_zero() {
            return Err(Error::FamilyCondition("a10*a01 != 0".into()));
        }
        let l = self.linear_form();
        let f3 = self.condition6_form();
        if f3.is_zero() || !resultant_binary_forms(&l, &f3)?.is_zero() {
            return Err(Error::FamilyCondition("condition (6)".into()));
        }
        let cubic = self.cubic();
        if cubic.is_zero() || resultant_binary_forms(&l, &cubic)?.is_zero() {
            return Err(Error::FamilyCondition("condition (7)".into()));
        }
        Ok(())
    }
}

pub fn stable_family(p: &StableParams) -> Result<VectorField> {
    p.check()?;
    let [b30, b21, b12, b03, c30] = p.derived();
    let pp = sum(vec![
        mono(p.a10.clone(), [2, 1, 0]),
        mono(p.a01.clone(), [2, 0, 1]),
        mono(p.a20.clone(), [1, 2, 0]),
        mono(p.a11.clone(), [1, 1, 1]),
        mono(p.a02.clone(), [1, 0, 2]),
        mono(p.a30.clone(), [0, 3, 0]),
        mono(p.a21.clone(), [0, 2, 1]),
        mono(p.a12.clone(), [0, 1, 2]),
        mono(p.a03.clone(), [0, 0, 3]),
    ]);
    let qq = sum(vec![
        mono(b30, [0, 3, 0]),
        mono(b21, [0, 2, 1]),
        mono(b12, [0, 1, 2]),
        mono(b03, [0, 0, 3]),
    ]);
    let x = VectorField::new(pp, qq, mono(c30, [0, 3, 0]))?;
    post_validate_m2(&x)?;
    Ok(x)
}

/// Coefficients of the unstable multiplicity-2 family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnstableM2Params {
    pub b11: Rational,
    pub b02: Rational,
    pub b21: Rational,
    pub b12: Rational,
    pub b03: Rational,
}

impl UnstableM2Params {
    pub const KEYS: [&'static str; 5] = ["b11", "b02", "b21", "b12", "b03"];

    pub fn from_map(map: &ParamMap) -> Result<Self> {
        let v = take(map, &Self::KEYS)?;
        Ok(Self {
            b11: v[0].clone(),
            b02: v[1].clone(),
            b21: v[2].clone(),
            b12: v[3].clone(),
            b03: v[4].clone(),
        })
    }

    pub fn to_map(&self) -> ParamMap {
        to_map(
            &Self::KEYS,
            &[&self.b11, &self.b02, &self.b21, &self.b12, &self.b03],
        )
    }

    pub fn check(&self) -> Result<()> {
        if (&self.b11 * &self.b02).is_zero() {
            return Err(Error::FamilyCondition("b11*b02 != 0".into()));
        }
        let l = binary_form(&[&self.b11, &self.b02]);
        let quad = binary_form(&[&self.b21, &self.b12, &self.b03]);
        if quad.is_zero() || resultant_binary_forms(&l, &quad)?.is_zero() {
            return Err(Error::FamilyCondition(
                "Res(b11*y + b02*z, b21*y^2 + b12*y*z + b03*z^2) != 0".into(),
            ));
        }
        Ok(())
    }

    fn cube(&self) -> MPoly {
        let l = &mono(self.b11.clone(), [0, 1, 0]) + &mono(self.b02.clone(), [0, 0, 1]);
        l.pow(3)
    }
}

pub fn unstable_m2_family(p: &UnstableM2Params) -> Result<VectorField> {
    p.check()?;
    let qq = sum(vec![
        mono(p.b11.clone(), [1, 1, 1]),
        mono(p.b02.clone(), [1, 0, 2]),
        mono(p.b21.clone(), [0, 2, 1]),
        mono(p.b12.clone(), [0, 1, 2]),
        mono(p.b03.clone(), [0, 0, 3]),
    ]);
    let x = VectorField::new(p.cube(), qq, MPoly::zero(3))?;
    post_validate_m2(&x)?;
    Ok(x)
}

/// Coefficients of the multiplicity-3 shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mult3Params {
    /// `a20, a11, a02, a30, a21, a12, a03`
    pub a: [Rational; 7],
    /// `b30, b21, b12, b03`
    pub b: [Rational; 4],
    pub c30: Rational,
}

const MULT3_P: [[u32; 3]; 7] = [
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];
const CUBIC_YZ: [[u32; 3]; 4] = [[0, 3, 0], [0, 2, 1], [0, 1, 2], [0, 0, 3]];

impl Mult3Params {
    pub const KEYS: [&'static str; 12] = [
        "a20", "a11", "a02", "a30", "a21", "a12", "a03", "b30", "b21", "b12", "b03", "c30",
    ];

    pub fn from_map(map: &ParamMap) -> Result<Self> {
        let v = take(map, &Self::KEYS)?;
        Ok(Self {
            a: std::array::from_fn(|i| v[i].clone()),
            b: std::array::from_fn(|i| v[7 + i].clone()),
            c30: v[11].clone(),
        })
    }

    pub fn to_map(&self) -> ParamMap {
        let values: Vec<&Rational> = self.a.iter().chain(self.b.iter()).chain([&self.c30]).collect();
        to_map(&Self::KEYS, &values)
    }
}

/// Shape only; uniqueness of the singular point is the caller's concern.
pub fn mult3_family(p: &Mult3Params) -> Result<VectorField> {
    let pp = sum(MULT3_P.iter().zip(&p.a).map(|(e, c)| mono(c.clone(), *e)).collect());
    let qq = sum(CUBIC_YZ.iter().zip(&p.b).map(|(e, c)| mono(c.clone(), *e)).collect());
    VectorField::new(pp, qq, mono(p.c30.clone(), [0, 3, 0]))
}

/// A recognized normal form with its parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NormalForm {
    SsTheorem(SSParams),
    StableProp(StableParams),
    UnstableLemma(UnstableM2Params),
    Mult3(Mult3Params),
    /// Multiplicity 1 with `mu = 13` at `[1:0:0]`.
    A31,
}

impl NormalForm {
    pub fn rule_id(&self) -> &'static str {
        match self {
            NormalForm::SsTheorem(_) => "ss-theorem",
            NormalForm::StableProp(_) => "stable-prop",
            NormalForm::UnstableLemma(_) => "unstable-lemma",
            NormalForm::Mult3(_) => "mult3-prop",
            NormalForm::A31 => "a31-prop",
        }
    }

    pub fn params(&self) -> ParamMap {
        match self {
            NormalForm::SsTheorem(p) => p.to_map(),
            NormalForm::StableProp(p) => p.to_map(),
            NormalForm::UnstableLemma(p) => p.to_map(),
            NormalForm::Mult3(p) => p.to_map(),
            NormalForm::A31 => ParamMap::new(),
        }
    }
}

impl Serialize for NormalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            rule: &'static str,
            params: BTreeMap<String, String>,
        }
        Repr {
            rule: self.rule_id(),
            params: serialize_map(&self.params()),
        }
        .serialize(s)
    }
}

/// Coefficient reader that also checks no monomial outside an allowed list occurs.
struct Shape<'a> {
    x: &'a VectorField,
}

impl Shape<'_> {
    fn c(&self, comp: usize, e: [u32; 3]) -> Rational {
        self.x.components()[comp].coeff(e)
    }

    fn only(&self, comp: usize, allowed: &[[u32; 3]]) -> bool {
        self.x.components()[comp]
            .terms()
            .all(|(m, _)| allowed.contains(&m.0))
    }
}

const SS_P: [[u32; 3]; 7] = MULT3_P;
const SS_Q: [[u32; 3]; 6] = [
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

fn match_ss(y: &VectorField) -> Option<SSParams> {
    let s = Shape { x: y };
    if !y.r().is_zero() || !s.only(0, &SS_P) || !s.only(1, &SS_Q) {
        return None;
    }
    let one = int(1);
    if s.c(0, [1, 2, 0]) != one || s.c(1, [1, 1, 1]) != one || s.c(1, [0, 3, 0]) != one {
        return None;
    }
    let c12 = -s.c(0, [1, 1, 1]);
    let b02 = s.c(1, [1, 0, 2]);
    let b21 = s.c(1, [0, 2, 1]) + &c12;
    let b12 = s.c(1, [0, 1, 2]) + &b02 * &b02 + &b02 * &c12;
    let p = SSParams { b02, b21, b12, c12 };
    let candidate = ss_family(&p).ok()?;
    (candidate == *y).then_some(p)
}

fn match_stable(y: &VectorField) -> Option<StableParams> {
    let s = Shape { x: y };
    let p_allowed: Vec<[u32; 3]> = [[2, 1, 0], [2, 0, 1]].into_iter().chain(MULT3_P).collect();
    if !s.only(0, &p_allowed) || !s.only(1, &CUBIC_YZ) || !s.only(2, &[[0, 3, 0]]) {
        return None;
    }
    let g = |e| s.c(0, e);
    let p = StableParams {
        a10: g([2, 1, 0]),
        a01: g([2, 0, 1]),
        a20: g([1, 2, 0]),
        a11: g([1, 1, 1]),
        a02: g([1, 0, 2]),
        a30: g([0, 3, 0]),
        a21: g([0, 2, 1]),
        a12: g([0, 1, 2]),
        a03: g([0, 0, 3]),
    };
    let candidate = stable_family(&p).ok()?;
    (candidate == *y).then_some(p)
}

fn match_lemma(y: &VectorField) -> Option<UnstableM2Params> {
    let s = Shape { x: y };
    if !y.r().is_zero() || !s.only(1, &[[1, 1, 1], [1, 0, 2], [0, 2, 1], [0, 1, 2], [0, 0, 3]]) {
        return None;
    }
    let p = UnstableM2Params {
        b11: s.c(1, [1, 1, 1]),
        b02: s.c(1, [1, 0, 2]),
        b21: s.c(1, [0, 2, 1]),
        b12: s.c(1, [0, 1, 2]),
        b03: s.c(1, [0, 0, 3]),
    };
    if p.cube() != *y.p() {
        return None;
    }
    let candidate = unstable_m2_family(&p).ok()?;
    (candidate == *y).then_some(p)
}

fn match_mult3(y: &VectorField) -> Option<Mult3Params> {
    let s = Shape { x: y };
    if !s.only(0, &MULT3_P) || !s.only(1, &CUBIC_YZ) || !s.only(2, &[[0, 3, 0]]) {
        return None;
    }
    Some(Mult3Params {
        a: MULT3_P.map(|e| s.c(0, e)),
        b: CUBIC_YZ.map(|e| s.c(1, e)),
        c30: s.c(2, [0, 3, 0]),
    })
}

fn match_a31(y: &VectorField) -> Option<()> {
    let p = ProjPoint::basis(0);
    if !has_isolated_singularities(y) {
        return None;
    }
    let m = multiplicity_at_point(y, &p).ok()?;
    let mu = milnor_at_point(y, &p).ok()?;
    (m == 1 && mu == IntersectionNumber::Finite(13)).then_some(())
}

/// Recognizes the presented z-reduced coordinates (no frame search). Checks
/// all conditions of the matched family, including `mu = 13` at `[1:0:0]`
/// for the multiplicity-2 families.
pub fn match_normal_form(x: &VectorField) -> Option<NormalForm> {
    if x.degree() != 3 {
        return None;
    }
    let y = z_reduce(x).ok()?;
    let y = y.field();
    if let Some(p) = match_ss(y) {
        return Some(NormalForm::SsTheorem(p));
    }
    if let Some(p) = match_stable(y) {
        return Some(NormalForm::StableProp(p));
    }
    if let Some(p) = match_lemma(y) {
        return Some(NormalForm::UnstableLemma(p));
    }
    if let Some(p) = match_mult3(y) {
        return Some(NormalForm::Mult3(p));
    }
    match_a31(y).map(|_| NormalForm::A31)
}

/// Only the stable and strictly semistable matchers, used by the classifier.
pub(crate) fn match_stable_prop(y: &VectorField) -> Option<StableParams> {
    match_stable(y)
}

pub(crate) fn match_ss_theorem(y: &VectorField) -> Option<SSParams> {
    match_ss(y)
}

/// A worked example with the invariants the pipeline must reproduce.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub field: VectorField,
    pub point: ProjPoint,
    pub multiplicity: u32,
    pub milnor: u64,
    pub verdict: VerdictClass,
}

const CATALOG_SOURCES: [(&str, &str, u32, u64, VerdictClass); 10] = [
    ("degree1-nilpotent", "(y) d/dx + (z) d/dy", 1, 3, VerdictClass::Unstable),
    ("X1", "(y^2) d/dx + (z^2) d/dy", 2, 7, VerdictClass::Unstable),
    (
        "X2",
        "(-y^2) d/dx + (y*z - z^2) d/dy + (z^2) d/dz",
        2,
        7,
        VerdictClass::Unstable,
    ),
    ("X3", "(y^2 + z^2) d/dx + (y*z) d/dy", 2, 7, VerdictClass::Unstable),
    (
        "X4",
        "(-y*z) d/dx + (x*y + z^2) d/dy + (y^2) d/dz",
        1,
        7,
        VerdictClass::Stable,
    ),
    (
        "mult1-example",
        "(5*x*y*z - y^3 + 2*z^3) d/dx + (-3/2*x^2*y - 3/2*x*z^2 + 9/2*y^2*z) d/dy + (-3*x*y^2) d/dz",
        1,
        13,
        VerdictClass::Stable,
    ),
    (
        "mult3-example",
        "(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy",
        3,
        13,
        VerdictClass::Unstable,
    ),
    (
        "ss-example",
        "(x*y^2 - 5*y^3 - 2*x*y*z - 12*y^2*z - 3*x*z^2 - y*z^2 - 10*z^3) d/dx + (y^3 + x*y*z + 2*y^2*z + x*z^2 + 3*z^3) d/dy",
        2,
        13,
        VerdictClass::StrictlySemistable,
    ),
    (
        "stable-example",
        "(x^2*y + 2*x^2*z - 8*x*y^2 - 16*x*y*z - 8*x*z^2 + y^3 + y^2*z + y*z^2 + z^3) d/dx + (-8*y^3 - 24*y^2*z - 32*y*z^2 - 16*z^3) d/dy + (y^3) d/dz",
        2,
        13,
        // Matches the stable normal form, yet a flag frame separates its support.
        VerdictClass::Unstable,
    ),
    (
        "lemma-example",
        "(y^3 + 3*y^2*z + 3*y*z^2 + z^3) d/dx + (x*y*z + x*z^2 + y^2*z + z^3) d/dy",
        2,
        13,
        VerdictClass::Unstable,
    ),
];

/// All worked examples; every singular point listed is `[1:0:0]`.
pub fn catalog() -> Vec<CatalogEntry> {
    CATALOG_SOURCES
        .iter()
        .map(|&(name, text, multiplicity, milnor, verdict)| CatalogEntry {
            name,
            field: parse_vector_field(text).expect("catalog entries parse"),
            point: ProjPoint::basis(0),
            multiplicity,
            milnor,
            verdict,
        })
        .collect()
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ss_example() -> SSParams {
        SSParams {
            b02: int(1),
            b21: int(4),
            b12: int(3),
            c12: int(2),
        }
    }

    fn stable_example() -> StableParams {
        StableParams {
            a10: int(1),
            a01: int(2),
            a20: int(-8),
            a11: int(-16),
            a02: int(-8),
            a30: int(1),
            a21: int(1),
            a12: int(1),
            a03: int(1),
        }
    }

    #[test]
    fn ss_family_reproduces_the_example() {
        let p = ss_example();
        assert_eq!(p.a30(), int(-5));
        let x = ss_family(&p).unwrap();
        assert_eq!(x, catalog_entry("ss-example").unwrap().field);
        assert_eq!(match_normal_form(&x), Some(NormalForm::SsTheorem(p)));
    }

    #[test]
    fn degenerate_ss_point_is_rejected() {
        let p = SSParams {
            b02: int(0),
            b21: int(1),
            b12: int(0),
            c12: int(0),
        };
        assert_eq!(p.a30(), int(1));
        assert!(matches!(ss_family(&p), Err(Error::FamilyCondition(_))));
    }

    #[test]
    fn stable_family_reproduces_the_example() {
        let p = stable_example();
        let x = stable_family(&p).unwrap();
        assert_eq!(x, catalog_entry("stable-example").unwrap().field);
        assert_eq!(x.q(), &parse_poly("-8y^3-24y^2z-32yz^2-16z^3", 3).unwrap());
        let a = &(x.r() * &MPoly::var(3, 1)) - &(x.q() * &MPoly::var(3, 2));
        assert_eq!(a, parse_poly("(y+2z)^4", 3).unwrap());
        assert_eq!(match_normal_form(&x), Some(NormalForm::StableProp(p)));
    }

    #[test]
    fn condition_seven_is_named() {
        let mut p = stable_example();
        // Cubic vanishing at (y, z) = (-2, 1).
        p.a30 = int(1);
        p.a21 = int(2);
        p.a12 = int(0);
        p.a03 = int(0);
        assert_eq!(
            stable_family(&p),
            Err(Error::FamilyCondition("condition (7)".into()))
        );
        p = stable_example();
        p.a20 = int(0);
        assert_eq!(
            stable_family(&p),
            Err(Error::FamilyCondition("condition (6)".into()))
        );
    }

    #[test]
    fn lemma_family() {
        let p = UnstableM2Params {
            b11: int(1),
            b02: int(1),
            b21: int(1),
            b12: int(0),
            b03: int(1),
        };
        let x = unstable_m2_family(&p).unwrap();
        assert_eq!(x, catalog_entry("lemma-example").unwrap().field);
        assert_eq!(match_normal_form(&x), Some(NormalForm::UnstableLemma(p.clone())));
        let bad = UnstableM2Params { b02: int(0), ..p };
        assert_eq!(
            unstable_m2_family(&bad),
            Err(Error::FamilyCondition("b11*b02 != 0".into()))
        );
    }

    #[test]
    fn mult3_shapes() {
        let m = catalog_entry("mult3-example").unwrap().field;
        assert!(matches!(match_normal_form(&m), Some(NormalForm::Mult3(_))));
        let mut b = [int(0), int(0), int(0), int(1)];
        let p = Mult3Params {
            a: std::array::from_fn(|_| int(0)),
            b: b.clone(),
            c30: int(1),
        };
        let x = mult3_family(&p).unwrap();
        assert_eq!(x.q(), &parse_poly("z^3", 3).unwrap());
        assert_eq!(x.r(), &parse_poly("y^3", 3).unwrap());
        b[3] = int(0);
        let _ = b;
    }

    #[test]
    fn generic_field_matches_nothing() {
        let x = parse_vector_field("(x^3 + y^2*z) d/dx + (x*y*z + z^3) d/dy + (x^2*y) d/dz").unwrap();
        assert_eq!(match_normal_form(&x), None);
    }

    #[test]
    fn multiplicity_one_rule() {
        let x = catalog_entry("mult1-example").unwrap().field;
        assert_eq!(match_normal_form(&x), Some(NormalForm::A31));
    }
}
