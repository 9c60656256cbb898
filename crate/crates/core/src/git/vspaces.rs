//! The three monomial spans whose orbits make up the unstable degree-3 locus.

use std::fmt;

use serde::{Serialize, Serializer};

use super::hull::{hull_position, HullPosition};
use super::weights::WeightSupport;
use crate::error::{Error, Result};
use crate::foliation::{BasisField, Foliation};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum VSubspace {
    V1,
    V2,
    V3,
}

const DX: usize = 0;
const DY: usize = 1;
const DZ: usize = 2;

const V1: [(usize, [u32; 3]); 13] = [
    (DX, [1, 2, 0]),
    (DX, [1, 1, 1]),
    (DX, [1, 0, 2]),
    (DX, [0, 3, 0]),
    (DX, [0, 2, 1]),
    (DX, [0, 1, 2]),
    (DX, [0, 0, 3]),
    (DY, [1, 0, 2]),
    (DY, [0, 3, 0]),
    (DY, [0, 2, 1]),
    (DY, [0, 1, 2]),
    (DY, [0, 0, 3]),
    (DZ, [0, 3, 0]),
];

const V2: [(usize, [u32; 3]); 12] = [
    (DX, [2, 0, 1]),
    (DX, [1, 1, 1]),
    (DX, [1, 0, 2]),
    (DX, [0, 2, 1]),
    (DX, [0, 1, 2]),
    (DX, [0, 0, 3]),
    (DY, [2, 0, 1]),
    (DY, [1, 0, 2]),
    (DY, [1, 1, 1]),
    (DY, [0, 2, 1]),
    (DY, [0, 1, 2]),
    (DY, [0, 0, 3]),
];

const V3: [(usize, [u32; 3]); 12] = [
    (DX, [2, 0, 1]),
    (DX, [1, 1, 1]),
    (DX, [1, 0, 2]),
    (DX, [0, 3, 0]),
    (DX, [0, 2, 1]),
    (DX, [0, 1, 2]),
    (DX, [0, 0, 3]),
    (DY, [1, 0, 2]),
    (DY, [1, 1, 1]),
    (DY, [0, 2, 1]),
    (DY, [0, 1, 2]),
    (DY, [0, 0, 3]),
];

impl VSubspace {
    pub const ALL: [VSubspace; 3] = [VSubspace::V1, VSubspace::V2, VSubspace::V3];

    pub fn basis(&self) -> Vec<BasisField> {
        let list: &[(usize, [u32; 3])] = match self {
            VSubspace::V1 => &V1,
            VSubspace::V2 => &V2,
            VSubspace::V3 => &V3,
        };
        list.iter().map(|&(c, e)| BasisField::new(c, e)).collect()
    }

    pub fn contains(&self, b: &BasisField) -> bool {
        self.basis().contains(b)
    }

    /// The hull position of the whole span; `OriginOutside` for each subspace.
    pub fn span_position(&self) -> HullPosition {
        hull_position(&WeightSupport::from_basis(&self.basis()))
    }
}

impl fmt::Display for VSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            VSubspace::V1 => "V1",
            VSubspace::V2 => "V2",
            VSubspace::V3 => "V3",
        };
        f.write_str(name)
    }
}

impl Serialize for VSubspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The first span containing every nonzero coordinate, in the current frame.
pub fn v_membership(f: &Foliation) -> Result<Option<VSubspace>> {
    if f.degree() != 3 {
        return Err(Error::UnsupportedDegree(f.degree()));
    }
    let coords = f.coordinates();
    Ok(VSubspace::ALL
        .into_iter()
        .find(|v| coords.iter().all(|(b, _)| v.contains(b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::{parse_vector_field, z_reduce};

    #[test]
    fn span_sizes_and_separation() {
        assert_eq!(VSubspace::V1.basis().len(), 13);
        assert_eq!(VSubspace::V2.basis().len(), 12);
        assert_eq!(VSubspace::V3.basis().len(), 12);
        for v in VSubspace::ALL {
            assert!(matches!(v.span_position(), HullPosition::OriginOutside(_)));
        }
    }

    #[test]
    fn memberships() {
        let f = |s: &str| z_reduce(&parse_vector_field(s).unwrap()).unwrap();
        let mult3 = f("(y^3+y^2*z-y*z^2+z^3) d/dx + (z^3) d/dy");
        assert_eq!(v_membership(&mult3).unwrap(), Some(VSubspace::V1));
        let lemma = f("((y+z)^3) d/dx + (x*y*z + x*z^2 + y^2*z + z^3) d/dy");
        assert_eq!(v_membership(&lemma).unwrap(), Some(VSubspace::V3));
        let stable = f("(x^2*y + 2*x^2*z - 8*x*y^2 - 16*x*y*z - 8*x*z^2 + y^3 + y^2*z + y*z^2 + z^3) d/dx + (-8*y^3 - 24*y^2*z - 32*y*z^2 - 16*z^3) d/dy + (y^3) d/dz");
        assert_eq!(v_membership(&stable).unwrap(), None);
        let quad = f("(y^2) d/dx + (z^2) d/dy");
        assert_eq!(v_membership(&quad), Err(Error::UnsupportedDegree(2)));
    }
}
