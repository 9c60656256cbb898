//! Torus weights, hull tests, destabilizing frames and the stability classifier.

mod classify;
mod hull;
mod modp;
mod search;
mod vspaces;
mod weights;

pub use classify::{classify, Certificate, ClassifyOptions, PositionCounts, StabilityVerdict, VerdictClass};
pub use hull::{hull_position, HullPosition};
pub use search::{candidate_frames, search_destabilizing_frame, separation_in_frame, SearchOptions};
pub use vspaces::{v_membership, VSubspace};
pub use weights::{
    mu_pairing, weight_of_basis, weight_of_monomial, weight_support, OneParamSubgroup, WeightSupport,
    WeightVector,
};
