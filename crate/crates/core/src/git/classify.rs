//! Top-level stability classifier. Stable and strictly semistable verdicts
//! come only from normal-form rules; hull evidence alone yields `Unknown`.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::hull::{hull_position, HullPosition};
use super::search::{candidate_frames, position_in_frame, search_destabilizing_frame, SearchOptions};
use super::vspaces::{v_membership, VSubspace};
use super::weights::{weight_support, OneParamSubgroup};
use crate::error::{Error, Result};
use crate::families::{match_ss_theorem, match_stable_prop};
use crate::foliation::{
    act, act_foliation, frame_to_point, has_isolated_singularities, is_singular_at,
    local_representation, z_reduce, Foliation, Frame, ProjPoint, VectorField,
};
use crate::localgeom::{
    milnor_at_point, multiplicity_at_point, total_milnor, IntersectionNumber,
};
use crate::poly::{format_rational, int, MPoly, Matrix3, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum VerdictClass {
    Stable,
    StrictlySemistable,
    Unstable,
    Unknown,
}

impl fmt::Display for VerdictClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictClass::Stable => "Stable",
            VerdictClass::StrictlySemistable => "StrictlySemistable",
            VerdictClass::Unstable => "Unstable",
            VerdictClass::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

fn rational_str<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct PositionCounts {
    pub outside: usize,
    pub boundary: usize,
    pub interior: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// Every weight of `frame·X` pairs strictly positively with `lambda`.
    DestabilizingPair {
        frame: Frame,
        lambda: OneParamSubgroup,
    },
    /// `frame·X` lies in the monomial span `subspace`.
    SubspaceMembership { subspace: VSubspace, frame: Frame },
    /// `scale · frame·X` (z-reduced) is literally in the normal form of `rule`.
    NormalFormMatch {
        rule: String,
        frame: Frame,
        #[serde(serialize_with = "rational_str")]
        scale: Rational,
        point: ProjPoint,
        checked: Vec<String>,
    },
    HullEvidence {
        frames_tested: usize,
        identity: HullPosition,
        positions: PositionCounts,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StabilityVerdict {
    pub class: VerdictClass,
    pub certificate: Certificate,
    pub notes: String,
}

impl StabilityVerdict {
    /// Re-checks the certificate against `x` from scratch.
    pub fn verify(&self, x: &VectorField) -> bool {
        let Ok(f) = z_reduce(x) else { return false };
        match (&self.class, &self.certificate) {
            (VerdictClass::Unstable, Certificate::DestabilizingPair { frame, lambda }) => {
                weight_support(&act_foliation(frame, &f))
                    .weights()
                    .all(|w| w.pairing(lambda) > 0)
            }
            (VerdictClass::Unstable, Certificate::SubspaceMembership { subspace, frame }) => {
                let g = act_foliation(frame, &f);
                g.degree() == 3 && g.coordinates().iter().all(|(b, _)| subspace.contains(b))
            }
            (
                VerdictClass::Stable | VerdictClass::StrictlySemistable,
                Certificate::NormalFormMatch {
                    rule,
                    frame,
                    scale,
                    point,
                    ..
                },
            ) => verify_rule(x, rule, frame, scale, point) == Some(self.class),
            (VerdictClass::Unknown, Certificate::HullEvidence { .. }) => true,
            _ => false,
        }
    }
}

fn unique_at(x: &VectorField, p: &ProjPoint, m: u32) -> bool {
    is_singular_at(x, p)
        && multiplicity_at_point(x, p).ok() == Some(m)
        && milnor_at_point(x, p).ok() == Some(IntersectionNumber::Finite(total_milnor(x.degree())))
}

fn verify_rule(
    x: &VectorField,
    rule: &str,
    frame: &Frame,
    scale: &Rational,
    point: &ProjPoint,
) -> Option<VerdictClass> {
    if !has_isolated_singularities(x) {
        return None;
    }
    let normalized = || -> Option<VectorField> {
        z_reduce(&act(frame, x)).ok()?.field().scale(scale).ok()
    };
    match rule {
        "a31-prop" => (x.degree() == 3 && unique_at(x, point, 1)).then_some(VerdictClass::Stable),
        "a21-catalog" => (x.degree() == 2 && unique_at(x, point, 1)).then_some(VerdictClass::Stable),
        "stable-prop" => {
            let y = normalized()?;
            (frame.apply(point) == ProjPoint::basis(0) && match_stable_prop(&y).is_some())
                .then_some(VerdictClass::Stable)
        }
        "ss-theorem" => {
            let y = normalized()?;
            (frame.apply(point) == ProjPoint::basis(0) && match_ss_theorem(&y).is_some())
                .then_some(VerdictClass::StrictlySemistable)
        }
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub budget: usize,
    pub seed: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { budget: 500, seed: 1 }
    }
}

fn unstable_pair(frame: Frame, lambda: OneParamSubgroup, notes: impl Into<String>) -> StabilityVerdict {
    StabilityVerdict {
        class: VerdictClass::Unstable,
        certificate: Certificate::DestabilizingPair { frame, lambda },
        notes: notes.into(),
    }
}

fn normal_form(
    class: VerdictClass,
    rule: &str,
    frame: Frame,
    scale: Rational,
    point: &ProjPoint,
    checked: &[&str],
    notes: impl Into<String>,
) -> StabilityVerdict {
    StabilityVerdict {
        class,
        certificate: Certificate::NormalFormMatch {
            rule: rule.into(),
            frame,
            scale,
            point: point.clone(),
            checked: checked.iter().map(|s| s.to_string()).collect(),
        },
        notes: notes.into(),
    }
}

/// A rule-based Stable or StrictlySemistable verdict stands only if the frame
/// search finds no separating frame; a witness is a proof of instability.
fn unless_refuted(f: &Foliation, search: &SearchOptions, verdict: StabilityVerdict) -> StabilityVerdict {
    let Certificate::NormalFormMatch { rule, .. } = &verdict.certificate else {
        return verdict;
    };
    match search_destabilizing_frame(f, search) {
        Some((frame, lambda)) => unstable_pair(
            frame,
            lambda,
            format!("normal form `{rule}` matched, but a separating frame exists"),
        ),
        None => verdict,
    }
}

/// Runs every candidate frame; returns the first witness in trial order or
/// the evidence gathered.
fn survey(f: &Foliation, opts: &SearchOptions, notes: &str) -> StabilityVerdict {
    let frames = candidate_frames(f, opts);
    let hit = frames.par_iter().enumerate().find_map_first(|(i, g)| match position_in_frame(f, g) {
        HullPosition::OriginOutside(lambda) => Some((i, lambda)),
        _ => None,
    });
    if let Some((i, lambda)) = hit {
        let note = format!("{notes}separated in frame {} of {}", i + 1, frames.len());
        return unstable_pair(frames[i].clone(), lambda, note);
    }
    let positions: Vec<HullPosition> = frames.par_iter().map(|g| position_in_frame(f, g)).collect();
    let mut counts = PositionCounts::default();
    for p in &positions {
        match p {
            HullPosition::OriginOutside(_) => counts.outside += 1,
            HullPosition::OriginOnBoundary => counts.boundary += 1,
            HullPosition::OriginInterior => counts.interior += 1,
        }
    }
    let identity = hull_position(&weight_support(f));
    StabilityVerdict {
        class: VerdictClass::Unknown,
        certificate: Certificate::HullEvidence {
            frames_tested: frames.len(),
            identity,
            positions: counts,
        },
        notes: format!("{notes}no separating frame among {} tried", frames.len()),
    }
}

/// Linear part `A` with `X = A v`.
fn linear_part(x: &VectorField) -> Matrix3 {
    let rows = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut e = [0u32; 3];
            e[j] = 1;
            x.components()[i].coeff(e)
        })
    });
    Matrix3::new(rows)
}

/// For traceless nilpotent `N` of rank 2, the Jordan basis `(N^2 v, N v, v)`
/// puts the support strictly on one side of the origin.
fn degree_one_frame(x: &VectorField) -> Option<Frame> {
    let a = linear_part(x);
    let t = (0..3).fold(Rational::zero(), |acc, i| acc + &a.rows[i][i]) / int(3);
    let mut n = a;
    for i in 0..3 {
        n.rows[i][i] -= &t;
    }
    let n2 = &n * &n;
    let n3 = &n2 * &n;
    if n3.rows.iter().flatten().any(|c| !c.is_zero()) {
        return None;
    }
    (0..3).find_map(|k| {
        let v = ProjPoint::basis(k).coords().clone();
        let nv = n.mul_vec(&v);
        let n2v = n.mul_vec(&nv);
        let b = Frame::new(Matrix3::from_columns([n2v, nv, v])).ok()?;
        Some(b.inverse())
    })
}

fn coef(y: &VectorField, comp: usize, e: [u32; 3]) -> Rational {
    y.components()[comp].coeff(e)
}

fn x_free(p: &MPoly) -> bool {
    p.terms().all(|(m, _)| m.0[0] == 0)
}

fn yz_frame(rows: [[i64; 2]; 2]) -> Frame {
    Frame::new(Matrix3::from_i64([
        [1, 0, 0],
        [0, rows[0][0], rows[0][1]],
        [0, rows[1][0], rows[1][1]],
    ]))
    .expect("invertible block")
}

/// Normalization onto the stable multiplicity-2 form at `p`; returns the
/// frame and scale under which the literal match holds.
fn stable_normalization(x: &VectorField, p: &ProjPoint) -> Option<(Frame, Rational)> {
    let h_inv = frame_to_point(p).inverse();
    let shears = [
        Frame::identity(),
        yz_frame([[1, 1], [0, 1]]),
        yz_frame([[1, 0], [1, 1]]),
        yz_frame([[1, 1], [1, 2]]),
    ];
    for s in &shears {
        let g0 = s.compose(&h_inv);
        let y = z_reduce(&act(&g0, x)).ok()?;
        let y = y.field();
        if !x_free(y.q()) || !x_free(y.r()) {
            return None;
        }
        let (a10, a01) = (coef(y, 0, [2, 1, 0]), coef(y, 0, [2, 0, 1]));
        if (&a10 * &a01).is_zero() {
            continue;
        }
        let a = &(y.r() * &MPoly::var(3, 1)) - &(y.q() * &MPoly::var(3, 2));
        let l4 = (&MPoly::monomial(3, [0, 1, 0], a10) + &MPoly::monomial(3, [0, 0, 1], a01)).pow(4);
        let kappa = a.coeff([0, 4, 0]) / l4.coeff([0, 4, 0]);
        if kappa.is_zero() || a != l4.scale(&kappa) {
            return None;
        }
        let scale = Rational::one() / &kappa;
        let d = Frame::new(Matrix3::diagonal([scale.clone(), int(1), int(1)])).ok()?;
        let g = d.compose(&g0);
        let normalized = z_reduce(&act(&g, x)).ok()?.field().scale(&scale).ok()?;
        return match_stable_prop(&normalized).map(|_| (g, scale));
    }
    None
}

/// Normalization onto the strictly semistable form at `p`.
fn ss_normalization(x: &VectorField, p: &ProjPoint) -> Option<(Frame, Rational)> {
    let h = frame_to_point(p);
    let pair = local_representation(&act(&h.inverse(), x));
    let (f2, g2) = (pair.f.homogeneous_component(2), pair.g.homogeneous_component(2));
    // The 2-jet must be rank one: (f2, g2) = (v0 q, v1 q).
    let v: [Rational; 2] = if !f2.is_zero() {
        let (m, c) = f2.leading_term()?;
        let ratio = g2.coeff(m.0) / c;
        if g2 != f2.scale(&ratio) {
            return None;
        }
        [int(1), ratio]
    } else if !g2.is_zero() {
        [int(0), int(1)]
    } else {
        return None;
    };
    for w in [[0, 1], [1, 0], [1, 1], [1, -1], [1, 2]] {
        let w = [int(w[0]), int(w[1])];
        if (&v[0] * &w[1] - &v[1] * &w[0]).is_zero() {
            continue;
        }
        let z = Rational::zero;
        let b = Matrix3::new([
            [int(1), z(), z()],
            [z(), v[0].clone(), w[0].clone()],
            [z(), v[1].clone(), w[1].clone()],
        ]);
        let Ok(hb) = Frame::new(h.matrix() * &b) else { continue };
        let g0 = hb.inverse();
        let Some(found) = ss_from_flag(x, &g0) else { continue };
        return Some(found);
    }
    None
}

fn ss_from_flag(x: &VectorField, g0: &Frame) -> Option<(Frame, Rational)> {
    let y0 = z_reduce(&act(g0, x)).ok()?;
    let y0 = y0.field();
    let (c1, c2) = (coef(y0, 0, [1, 2, 0]), coef(y0, 1, [1, 1, 1]));
    if c1.is_zero() || c2.is_zero() {
        return None;
    }
    let scale = Rational::one() / &c1;
    let d = Frame::new(Matrix3::diagonal([&c2 / &c1, int(1), int(1)])).ok()?;
    let mut g = d.compose(g0);
    let y1 = z_reduce(&act(&g, x)).ok()?.field().scale(&scale).ok()?;
    let b02 = coef(&y1, 1, [1, 0, 2]);
    let c12 = -coef(&y1, 0, [1, 1, 1]);
    if !b02.is_zero() {
        let gamma = (coef(&y1, 1, [0, 0, 3]) - &b02 * (&b02 + &c12)) / &b02;
        let z = Rational::zero;
        let t = Frame::new(Matrix3::new([
            [int(1), z(), gamma],
            [z(), int(1), z()],
            [z(), z(), int(1)],
        ]))
        .ok()?;
        g = t.compose(&g);
    }
    let normalized = z_reduce(&act(&g, x)).ok()?.field().scale(&scale).ok()?;
    match_ss_theorem(&normalized).map(|_| (g, scale))
}

/// Classifies `x`, using the singular point `p` when given.
pub fn classify(
    x: &VectorField,
    p: Option<&ProjPoint>,
    opts: &ClassifyOptions,
) -> Result<StabilityVerdict> {
    if !has_isolated_singularities(x) {
        return Err(Error::NotIsolated);
    }
    let f = z_reduce(x)?;
    let search = SearchOptions {
        budget: opts.budget,
        seed: opts.seed,
        hints: p.into_iter().cloned().collect(),
    };
    let verdict = classify_inner(x, &f, p, &search)?;
    Ok(unless_refuted(&f, &search, verdict))
}

fn classify_inner(
    x: &VectorField,
    f: &Foliation,
    p: Option<&ProjPoint>,
    search: &SearchOptions,
) -> Result<StabilityVerdict> {
    if x.degree() == 1 {
        if let Some(frame) = degree_one_frame(x) {
            if let HullPosition::OriginOutside(lambda) =
                hull_position(&weight_support(&act_foliation(&frame, f)))
            {
                return Ok(unstable_pair(frame, lambda, "degree 1: nilpotent linear part, Jordan frame"));
            }
        }
        return Ok(survey(f, search, "degree 1: linear part not nilpotent; "));
    }
    let Some(p) = p else {
        return Ok(survey(f, search, "no point given; "));
    };
    if !is_singular_at(x, p) {
        return Err(Error::NotSingular(p.to_string()));
    }
    let m = multiplicity_at_point(x, p)?;
    let mu = milnor_at_point(x, p)?;
    let unique = mu == IntersectionNumber::Finite(total_milnor(x.degree()));
    if !unique {
        return Ok(survey(f, search, "point not certified unique; "));
    }
    let h_inv = frame_to_point(p).inverse();
    let uniq = "mu = d^2 + d + 1 (unique singular point)";
    match (x.degree(), m) {
        (3, 1) => Ok(normal_form(
            VerdictClass::Stable,
            "a31-prop",
            h_inv,
            int(1),
            p,
            &["m = 1", uniq],
            "degree 3, unique singular point of multiplicity 1",
        )),
        (2, 1) => Ok(normal_form(
            VerdictClass::Stable,
            "a21-catalog",
            h_inv,
            int(1),
            p,
            &["m = 1", uniq],
            "degree 2, unique singular point of multiplicity 1",
        )),
        (3, 3) => {
            let moved = act_foliation(&h_inv, f);
            if v_membership(&moved)? == Some(VSubspace::V1) {
                return Ok(StabilityVerdict {
                    class: VerdictClass::Unstable,
                    certificate: Certificate::SubspaceMembership {
                        subspace: VSubspace::V1,
                        frame: h_inv,
                    },
                    notes: "degree 3, unique singular point of multiplicity 3".into(),
                });
            }
            Ok(survey(f, search, "multiplicity 3 outside V1 in the point frame; "))
        }
        (3, 2) => {
            if let Some((frame, scale)) = stable_normalization(x, p) {
                return Ok(normal_form(
                    VerdictClass::Stable,
                    "stable-prop",
                    frame,
                    scale,
                    p,
                    &[
                        "a10*a01 != 0",
                        "conditions (1)-(5)",
                        "condition (6)",
                        "condition (7)",
                        "m = 2",
                        uniq,
                    ],
                    "degree 3, multiplicity 2, stable normal form",
                ));
            }
            if let Some((frame, scale)) = ss_normalization(x, p) {
                return Ok(normal_form(
                    VerdictClass::StrictlySemistable,
                    "ss-theorem",
                    frame,
                    scale,
                    p,
                    &["coefficient relations", "m = 2", uniq],
                    "degree 3, multiplicity 2, strictly semistable normal form",
                ));
            }
            Ok(survey(f, search, "multiplicity 2, no normal form matched; "))
        }
        _ => Ok(survey(f, search, "")),
    }
}
