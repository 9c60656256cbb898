#![allow(dead_code)]

use foliant_core::foliation::{Frame, VectorField};
use foliant_core::poly::{int, rat, MPoly, Matrix3, Rational};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

/// Sparse polynomial with up to `terms` monomials of total degree <= `max_deg`.
pub fn poly(nvars: usize, max_deg: u32, terms: usize) -> impl Strategy<Value = MPoly> {
    let mono = proptest::collection::vec(0..=max_deg, nvars)
        .prop_filter("degree bound", move |e| e.iter().sum::<u32>() <= max_deg);
    proptest::collection::vec((mono, small_rational()), 0..=terms).prop_map(move |ts| {
        MPoly::from_terms(
            nvars,
            ts.into_iter().map(|(e, c)| {
                let mut m = [0u32; 3];
                m[..e.len()].copy_from_slice(&e);
                (m, c)
            }),
        )
    })
}

/// Homogeneous polynomial of degree `d` in x, y, z.
pub fn form(d: u32, terms: usize) -> impl Strategy<Value = MPoly> {
    let mono = (0..=d, 0..=d).prop_filter_map("degree", move |(a, b)| {
        (a + b <= d).then(|| [a, b, d - a - b])
    });
    proptest::collection::vec((mono, small_rational()), 1..=terms)
        .prop_map(|ts| MPoly::from_terms(3, ts))
}

pub fn field(d: u32) -> impl Strategy<Value = VectorField> {
    (form(d, 5), form(d, 5), form(d, 5))
        .prop_filter_map("non-null field", |(p, q, r)| VectorField::new(p, q, r).ok())
}

pub fn frame() -> impl Strategy<Value = Frame> {
    proptest::collection::vec(-3i64..=3, 9).prop_filter_map("invertible", |v| {
        Frame::new(Matrix3::from_i64([
            [v[0], v[1], v[2]],
            [v[3], v[4], v[5]],
            [v[6], v[7], v[8]],
        ]))
        .ok()
    })
}

pub fn rng_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn rng_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    loop {
        let q = rng_rational(rng, bound);
        if q != int(0) {
            return q;
        }
    }
}

/// Random invertible frame with small integer entries.
pub fn rng_frame(rng: &mut ChaCha8Rng) -> Frame {
    loop {
        let rows = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-2i64..=2)));
        if let Ok(f) = Frame::new(Matrix3::from_i64(rows)) {
            return f;
        }
    }
}

/// Random bivariate polynomial vanishing at the origin, total degree <= `max_deg`.
pub fn rng_local_poly(rng: &mut ChaCha8Rng, max_deg: u32) -> MPoly {
    loop {
        let n = rng.gen_range(1..=4);
        let terms: Vec<([u32; 3], Rational)> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0..=max_deg);
                let b = rng.gen_range(0..=max_deg - a);
                ([a, b, 0], rat(rng.gen_range(-3..=3), 1))
            })
            .filter(|(e, _)| e[0] + e[1] > 0)
            .collect();
        let p = MPoly::from_terms(2, terms);
        if !p.is_zero() {
            return p;
        }
    }
}
