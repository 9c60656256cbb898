//! Deterministic search for a frame in which the support is separated from
//! the origin.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::hull::{hull_position, HullPosition};
use super::weights::{weight_support, OneParamSubgroup};
use crate::foliation::{act_foliation, frame_to_point, local_representation, act, Foliation, Frame, ProjPoint};
use crate::localgeom::singular_coordinate_points;
use crate::poly::{binary_linear_factors, gcd_bivariate, int, rat, Matrix3, MPoly, Rational};

use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of frames tried, structured frames first.
    pub budget: usize,
    pub seed: u64,
    /// Known singular points, tried before the coordinate points.
    pub hints: Vec<ProjPoint>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: 500,
            seed: 1,
            hints: Vec::new(),
        }
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
];

fn permutation_frame(perm: [usize; 3]) -> Frame {
    Frame::new(Matrix3::permutation(perm)).expect("permutations are invertible")
}

/// Directions `(u, v)` in the `(y, z)` chart of lines through the origin worth
/// aligning with the `e0 e1` line: zero loci of rational linear factors of the
/// leading jets, then the two axes.
pub(crate) fn line_candidates(x_at_origin: &crate::foliation::VectorField) -> Vec<(Rational, Rational)> {
    let pair = local_representation(x_at_origin);
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    let order = |p: &MPoly| p.order().finite();
    let m = match (order(&pair.f), order(&pair.g)) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return out,
    };
    let fm = pair.f.homogeneous_component(m);
    let gm = pair.g.homogeneous_component(m);
    let y = MPoly::var(2, 0);
    let z = MPoly::var(2, 1);
    let mixed = &(&z * &fm) - &(&y * &gm);
    let mut forms = Vec::new();
    if !fm.is_zero() && !gm.is_zero() {
        if let Ok(g) = gcd_bivariate(&fm, &gm) {
            forms.push(g);
        }
    }
    forms.extend([fm, gm, mixed]);
    for form in forms.iter().filter(|f| !f.is_zero() && f.total_degree().finite() > Some(0)) {
        if let Ok(factors) = binary_linear_factors(form) {
            for (a, b) in factors {
                out.push((b, -a));
            }
        }
    }
    out.push((int(1), int(0)));
    out.push((int(0), int(1)));
    let mut seen: Vec<(Rational, Rational)> = Vec::new();
    for d in out {
        if !seen.iter().any(|s| (&s.0 * &d.1 - &s.1 * &d.0).is_zero()) {
            seen.push(d);
        }
    }
    seen
}

/// `B = [[1,0,0],[0,u,c],[0,v,e]]` with `(c, e)` completing `(u, v)`.
pub(crate) fn flag_block(u: &Rational, v: &Rational) -> Matrix3 {
    let (c, e) = if u.is_zero() { (int(1), int(0)) } else { (int(0), int(1)) };
    let z = Rational::zero;
    Matrix3::new([[int(1), z(), z()], [z(), u.clone(), c], [z(), v.clone(), e]])
}

/// Frames moving `q` to `[1:0:0]` with the candidate lines through `q` sent to
/// the `e0 e1` line.
pub(crate) fn flag_frames(f: &Foliation, q: &ProjPoint) -> Vec<Frame> {
    let h = frame_to_point(q);
    let at_origin = act(&h.inverse(), f.field());
    line_candidates(&at_origin)
        .iter()
        .filter_map(|(u, v)| {
            let hb = Frame::new(h.matrix() * &flag_block(u, v)).ok()?;
            Some(hb.inverse())
        })
        .collect()
}

fn random_unipotent(rng: &mut ChaCha8Rng, upper: bool) -> Matrix3 {
    const ENTRIES: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];
    let mut m = Matrix3::identity();
    for i in 0..3 {
        for j in 0..3 {
            if (upper && j > i) || (!upper && j < i) {
                let (n, d) = ENTRIES[rng.gen_range(0..ENTRIES.len())];
                m.rows[i][j] = rat(n, d);
            }
        }
    }
    m
}

/// The full trial list in its fixed order, truncated to `budget`.
pub fn candidate_frames(f: &Foliation, opts: &SearchOptions) -> Vec<Frame> {
    let mut frames = vec![Frame::identity()];
    let mut points = opts.hints.clone();
    for p in singular_coordinate_points(f.field()) {
        if !points.contains(&p) {
            points.push(p);
        }
    }
    for q in &points {
        let h_inv = frame_to_point(q).inverse();
        frames.extend(PERMUTATIONS.iter().map(|p| permutation_frame(*p).compose(&h_inv)));
    }
    for q in &points {
        frames.extend(flag_frames(f, q));
    }
    frames.extend(PERMUTATIONS.iter().skip(1).map(|p| permutation_frame(*p)));
    if frames.len() >= opts.budget {
        frames.truncate(opts.budget);
        return frames;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    while frames.len() < opts.budget {
        let u = random_unipotent(&mut rng, true);
        let l = random_unipotent(&mut rng, false);
        let perm = *PERMUTATIONS.choose(&mut rng).expect("nonempty");
        let m = &(&Matrix3::permutation(perm) * &u) * &l;
        frames.push(Frame::new(m).expect("unit determinant"));
    }
    frames
}

/// Hull position of the support of `g·F`, computed exactly unless the modular
/// support already surrounds the origin.
pub(crate) fn position_in_frame(f: &Foliation, g: &Frame) -> HullPosition {
    if super::modp::interior_mod_p(f, g) {
        return HullPosition::OriginInterior;
    }
    hull_position(&weight_support(&act_foliation(g, f)))
}

/// Separating subgroup for `F` transformed by `g`, if any.
pub fn separation_in_frame(f: &Foliation, g: &Frame) -> Option<OneParamSubgroup> {
    match position_in_frame(f, g) {
        HullPosition::OriginOutside(lambda) => Some(lambda),
        _ => None,
    }
}

/// First frame in the trial order whose transformed support is separated.
/// Frames are evaluated in parallel; the result does not depend on scheduling.
pub fn search_destabilizing_frame(
    f: &Foliation,
    opts: &SearchOptions,
) -> Option<(Frame, OneParamSubgroup)> {
    candidate_frames(f, opts)
        .into_par_iter()
        .find_map_first(|g| separation_in_frame(f, &g).map(|lambda| (g, lambda)))
}
