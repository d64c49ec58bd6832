//! Heights, Weil functions, Hilbert and Chow weights, and subgeneral-position
//! tools for homogeneous polynomials over ℚ, plus a harness that checks the
//! subspace-type inequality for hypersurfaces in subgeneral position on
//! rational points of bounded height.

pub mod chow;
pub mod error;
pub mod harness;
pub mod heights;
pub mod ideals;
pub mod io;
pub mod linalg;
pub mod polyring;
pub mod position;
pub mod qarith;

pub use chow::{ChowForm, ChowWeightResult, ConstantConvention, WeightVector};
pub use error::{Error, Result};
pub use harness::{BoundMode, ExperimentConfig, Report, VerificationRecord};
pub use heights::HeightValue;
pub use ideals::{GroebnerBasis, MonomialOrder, PolyIdeal, VarietySpec};
pub use polyring::{HomPoly, Monomial, Poly, ProjPoint};
pub use position::{PositionReport, ReplacementResult};
pub use qarith::{Place, PlaceSet, Rat};
