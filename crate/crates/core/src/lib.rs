//! Exact computations on two-bridge knots: Schubert words, Riley
//! polynomials, real-root counts of parabolic slices and signatures.

pub mod bipoly;
pub mod chebyshev;
pub mod error;
pub mod json;
pub mod laurent;
pub mod poly;
pub mod rational;
pub mod real_roots;
pub mod riley;
pub mod signature;
pub mod text;
pub mod two_bridge;
pub mod verifier;

pub use bipoly::{compose, eval_bi, BiPoly};
pub use error::{Error, Result};
pub use laurent::{symmetrize_to_xy, SymLaurent};
pub use poly::UniPoly;
pub use rational::Rational;
pub use two_bridge::{DoubleTwist, Family, KnotId, SchubertWord};
