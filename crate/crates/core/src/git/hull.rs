//! Exact position of the origin relative to the convex hull of a support.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::weights::{OneParamSubgroup, WeightSupport};
use crate::poly::{common_denominator_of, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "position", content = "lambda")]
pub enum HullPosition {
    /// Every support weight pairs strictly positively with the subgroup.
    OriginOutside(OneParamSubgroup),
    OriginOnBoundary,
    OriginInterior,
}

impl HullPosition {
    pub fn label(&self) -> &'static str {
        match self {
            HullPosition::OriginOutside(_) => "outside",
            HullPosition::OriginOnBoundary => "boundary",
            HullPosition::OriginInterior => "interior",
        }
    }
}

type Pt = (i64, i64);

fn cross(o: Pt, a: Pt, b: Pt) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

/// Counter-clockwise hull without collinear points (monotone chain).
fn convex_hull(mut pts: Vec<Pt>) -> Vec<Pt> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Pt> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Pt> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Closest point to the origin on the segment `[a, b]`.
fn closest_on_segment(a: Pt, b: Pt) -> (Rational, Rational) {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = q(dx * dx + dy * dy);
    if len2.is_zero() {
        return (q(a.0), q(a.1));
    }
    let t = -q(a.0 * dx + a.1 * dy) / len2;
    let t = t.max(Rational::zero()).min(q(1));
    (q(a.0) + &t * q(dx), q(a.1) + &t * q(dy))
}

/// The hull point nearest the origin `c` satisfies `<h, c> >= |c|^2` on the
/// hull, so `c` scaled to coprime integers separates whenever it is nonzero.
fn separating_subgroup(hull: &[Pt]) -> OneParamSubgroup {
    let mut best: Option<(Rational, (Rational, Rational))> = None;
    let n = hull.len();
    for i in 0..n {
        let c = closest_on_segment(hull[i], hull[(i + 1) % n]);
        let norm = &c.0 * &c.0 + &c.1 * &c.1;
        if best.as_ref().map_or(true, |(b, _)| norm < *b) {
            best = Some((norm, c));
        }
    }
    let (_, (c0, c1)) = best.expect("nonempty hull");
    let den = common_denominator_of(&[c0.clone(), c1.clone()]);
    let scale = Rational::from_integer(den);
    let (i0, i1) = ((c0 * &scale).to_integer(), (c1 * &scale).to_integer());
    let g = i0.gcd(&i1);
    let (i0, i1) = (i0 / &g, i1 / &g);
    OneParamSubgroup::from_plane(
        i0.to_i64().expect("weights are small"),
        i1.to_i64().expect("weights are small"),
    )
    .expect("nonzero functional")
}

/// Classifies the origin against the hull of the support in the weight plane.
pub fn hull_position(s: &WeightSupport) -> HullPosition {
    let pts: Vec<Pt> = s.weights().map(|w| w.plane()).collect();
    assert!(!pts.is_empty(), "hull of an empty support");
    let hull = convex_hull(pts);
    let origin = (0, 0);
    let inside_closed = match hull.len() {
        1 => hull[0] == origin,
        2 => {
            cross(hull[0], hull[1], origin) == 0
                && (hull[0].0 - origin.0) * (hull[1].0 - origin.0) <= 0
                && (hull[0].1 - origin.1) * (hull[1].1 - origin.1) <= 0
        }
        n => (0..n).all(|i| cross(hull[i], hull[(i + 1) % n], origin) >= 0),
    };
    if !inside_closed {
        let lambda = separating_subgroup(&hull);
        debug_assert!(s.weights().all(|w| w.pairing(&lambda) > 0));
        return HullPosition::OriginOutside(lambda);
    }
    let n = hull.len();
    if n >= 3 && (0..n).all(|i| cross(hull[i], hull[(i + 1) % n], origin) > 0) {
        HullPosition::OriginInterior
    } else {
        HullPosition::OriginOnBoundary
    }
}
