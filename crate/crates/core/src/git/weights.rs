use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::foliation::{BasisField, Foliation};

/// A torus character in `Z^3` modulo the diagonal, stored with minimum entry 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeightVector([i64; 3]);

impl WeightVector {
    pub fn new(raw: [i64; 3]) -> Self {
        let m = raw.iter().copied().min().expect("three entries");
        Self(raw.map(|w| w - m))
    }

    pub fn entries(&self) -> [i64; 3] {
        self.0
    }

    /// Plane coordinates `(w0 - w2, w1 - w2)`; injective on classes.
    pub fn plane(&self) -> (i64, i64) {
        (self.0[0] - self.0[2], self.0[1] - self.0[2])
    }

    pub fn pairing(&self, lambda: &OneParamSubgroup) -> i64 {
        self.0.iter().zip(lambda.0.iter()).map(|(w, r)| w * r).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `diag(t^r0, t^r1, t^r2)` with `r0 + r1 + r2 = 0` and coprime entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct OneParamSubgroup([i64; 3]);

impl OneParamSubgroup {
    pub fn new(r: [i64; 3]) -> Result<Self> {
        if r.iter().sum::<i64>() != 0 {
            return Err(Error::Usage(format!("1-PS entries {r:?} must sum to zero")));
        }
        let g = r.iter().fold(0i64, |acc, x| acc.gcd(x));
        if g == 0 {
            return Err(Error::Usage("1-PS must be nonzero".into()));
        }
        Ok(Self(r.map(|x| x / g)))
    }

    /// From a functional `(c0, c1)` on plane coordinates.
    pub fn from_plane(c0: i64, c1: i64) -> Result<Self> {
        Self::new([c0, c1, -c0 - c1])
    }

    pub fn entries(&self) -> [i64; 3] {
        self.0
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl Serialize for OneParamSubgroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Weight of `x^a y^b z^c d/dx_i`: the class of `e_i - (a, b, c)`.
pub fn weight_of_monomial(exponents: [u32; 3], component: usize) -> WeightVector {
    let mut raw = exponents.map(|e| -i64::from(e));
    raw[component] += 1;
    WeightVector::new(raw)
}

pub fn weight_of_basis(b: &BasisField) -> WeightVector {
    weight_of_monomial(b.exponents, b.component)
}

/// Weight classes of the nonzero coordinates, each with the basis fields carrying it.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightSupport {
    classes: BTreeMap<WeightVector, Vec<BasisField>>,
}

impl WeightSupport {
    pub fn from_basis<'a>(fields: impl IntoIterator<Item = &'a BasisField>) -> Self {
        let mut classes: BTreeMap<WeightVector, Vec<BasisField>> = BTreeMap::new();
        for b in fields {
            classes.entry(weight_of_basis(b)).or_default().push(*b);
        }
        Self { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn weights(&self) -> impl Iterator<Item = &WeightVector> {
        self.classes.keys()
    }

    pub fn classes(&self) -> impl Iterator<Item = (&WeightVector, &Vec<BasisField>)> {
        self.classes.iter()
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.classes.contains_key(w)
    }

    /// One `w0 w1 w2 : monomial` line per basis field.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (w, fields) in &self.classes {
            for b in fields {
                out.push_str(&format!("{w} : {b}\n"));
            }
        }
        out
    }
}

impl Serialize for WeightSupport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            weight: &'a WeightVector,
            plane: (i64, i64),
            monomials: &'a [BasisField],
        }
        let entries: Vec<Entry> = self
            .classes
            .iter()
            .map(|(w, m)| Entry {
                weight: w,
                plane: w.plane(),
                monomials: m,
            })
            .collect();
        entries.serialize(s)
    }
}

pub fn weight_support(f: &Foliation) -> WeightSupport {
    let coords = f.coordinates();
    WeightSupport::from_basis(coords.iter().map(|(b, _)| b))
}

/// `min_w <w, lambda>`; `lambda` destabilizes in this frame iff it is positive.
pub fn mu_pairing(s: &WeightSupport, lambda: &OneParamSubgroup) -> Option<i64> {
    s.weights().map(|w| w.pairing(lambda)).min()
}
