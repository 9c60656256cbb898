//! Support of a transformed class reduced modulo a large prime.
//!
//! Reduction `Z_(p) -> F_p` is a ring map, so a coordinate nonzero mod `p` is
//! nonzero over the rationals: the modular support is a subset of the exact
//! one. If the origin is interior to the hull of a subset it is interior to the
//! hull of the whole support, which lets most frames skip exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::hull::{hull_position, HullPosition};
use super::weights::WeightSupport;
use crate::foliation::{BasisField, Foliation, Frame};
use crate::poly::{Matrix3, Rational};

const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(P)) as u64
}

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    add(a, P - b)
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn residue(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("residue below p")
}

/// `None` when `p` divides the denominator.
fn reduce(r: &Rational) -> Option<u64> {
    let den = residue(r.denom());
    (den != 0).then(|| mul(residue(r.numer()), pow(den, P - 2)))
}

fn reduce_matrix(m: &Matrix3) -> Option<[[u64; 3]; 3]> {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = reduce(&m.rows[i][j])?;
        }
    }
    Some(out)
}

/// Dense polynomials of total degree at most `d`, indexed by `(a, b, c)`.
struct Dense {
    side: usize,
    c: Vec<u64>,
}

impl Dense {
    fn zero(d: usize) -> Self {
        let side = d + 1;
        Self { side, c: vec![0; side * side * side] }
    }

    fn idx(&self, e: [usize; 3]) -> usize {
        (e[0] * self.side + e[1]) * self.side + e[2]
    }

    fn get(&self, e: [usize; 3]) -> u64 {
        self.c[self.idx(e)]
    }

    fn set(&mut self, e: [usize; 3], v: u64) {
        let i = self.idx(e);
        self.c[i] = v;
    }

    fn terms(&self) -> impl Iterator<Item = ([usize; 3], u64)> + '_ {
        let s = self.side;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(move |(i, v)| ([i / (s * s), (i / s) % s, i % s], *v))
    }

    /// Product, dropping nothing: callers keep degrees within `d`.
    fn mul(&self, other: &Dense) -> Dense {
        let mut out = Dense::zero(self.side - 1);
        let lhs: Vec<_> = self.terms().collect();
        for (e, v) in other.terms() {
            for (f, w) in &lhs {
                let g = [e[0] + f[0], e[1] + f[1], e[2] + f[2]];
                let i = out.idx(g);
                out.c[i] = add(out.c[i], mul(v, *w));
            }
        }
        out
    }

    fn axpy(&mut self, a: u64, x: &Dense) {
        for (e, v) in x.terms() {
            let i = self.idx(e);
            self.c[i] = add(self.c[i], mul(a, v));
        }
    }
}

/// Components of `g·X` modulo `p`, z-reduced; `None` if some entry does not reduce.
fn reduced_components(f: &Foliation, g: &Frame) -> Option<[Dense; 3]> {
    let d = f.degree() as usize;
    let gm = reduce_matrix(g.matrix())?;
    let hm = reduce_matrix(g.inverse_matrix())?;
    let powers: Vec<Vec<Dense>> = (0..3)
        .map(|k| {
            let mut form = Dense::zero(d);
            for (l, &v) in hm[k].iter().enumerate() {
                let mut e = [0; 3];
                e[l] = 1;
                form.set(e, v);
            }
            let mut v = vec![{
                let mut one = Dense::zero(d);
                one.set([0, 0, 0], 1);
                one
            }];
            for j in 1..=d {
                let next = v[j - 1].mul(&form);
                v.push(next);
            }
            v
        })
        .collect();
    let mut pulled = Vec::with_capacity(3);
    for comp in f.field().components() {
        let mut acc = Dense::zero(d);
        for (m, c) in comp.terms() {
            let [a, b, e] = m.0.map(|x| x as usize);
            let t = powers[0][a].mul(&powers[1][b]).mul(&powers[2][e]);
            acc.axpy(reduce(c)?, &t);
        }
        pulled.push(acc);
    }
    let mut comps: [Dense; 3] = std::array::from_fn(|i| {
        let mut acc = Dense::zero(d);
        for (j, p) in pulled.iter().enumerate() {
            acc.axpy(gm[i][j], p);
        }
        acc
    });
    // Subtract G·E with G = (R - R|_{z=0}) / z.
    let moved: Vec<([usize; 3], u64)> = comps[2].terms().filter(|(e, _)| e[2] > 0).collect();
    for (e, v) in moved {
        let [a, b, c] = e;
        comps[2].set(e, 0);
        let x = [a + 1, b, c - 1];
        comps[0].set(x, sub(comps[0].get(x), v));
        let y = [a, b + 1, c - 1];
        comps[1].set(y, sub(comps[1].get(y), v));
    }
    Some(comps)
}

/// True only when the origin is certainly interior to the hull of the exact
/// support of `g·F`.
pub(crate) fn interior_mod_p(f: &Foliation, g: &Frame) -> bool {
    let Some(comps) = reduced_components(f, g) else {
        return false;
    };
    let basis: Vec<BasisField> = comps
        .iter()
        .enumerate()
        .flat_map(|(i, c)| {
            c.terms()
                .map(move |(e, _)| BasisField::new(i, e.map(|x| x as u32)))
                .collect::<Vec<_>>()
        })
        .collect();
    !basis.is_empty() && hull_position(&WeightSupport::from_basis(&basis)) == HullPosition::OriginInterior
}
