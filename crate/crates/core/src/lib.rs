//! Exact intersection-number sequences of nef classes in the convex model,
//! with certified checkers for the Khovanskii-Teissier, Diskant and Bonnesen
//! inequalities and an exact LP oracle for inradius and outradius.
//!
//! A rational polytope `P` stands in for a nef class; for a pair `(P, Q)` the
//! sequence `s_i = d! V(P[i], Q[d-i])` plays the role of `(alpha^i . beta^(d-i))`.

pub mod bounds;
pub mod certified;
pub mod cli;
pub mod error;
pub mod generate;
pub mod linalg;
pub mod lp;
pub mod mixedvol;
pub mod nefseq;
pub mod polytope;
pub mod radii;
pub mod rational;

pub use error::{Error, Result};
pub use mixedvol::{intersection_sequence, mixed_volume, volume, volume_polynomial, NefSequence};
pub use polytope::Polytope;
pub use rational::Rational;
