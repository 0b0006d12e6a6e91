//! Exact symbolic analysis of codimension-one holomorphic distributions
//! on projective 3-space: polynomial arithmetic, exterior calculus,
//! Gröbner-basis ideal theory, scheme invariants, and Chern-class
//! bookkeeping, all over arbitrary-precision rationals.

pub mod forms;
pub mod generators;
pub mod groebner;
pub mod invariants;
pub mod poly;
pub mod report;
pub mod univar;
pub mod verify;
