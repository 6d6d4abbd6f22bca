//! Exact computation of family data, nonabelian Fourier pairings, degree
//! polynomials and the degree-flip involution for unipotent representations
//! of finite reductive groups whose longest Weyl element is central
//! (types B, C, D with even rank, G2, F4).
//!
//! Everything is computed in exact rational (or cyclotomic) arithmetic;
//! every identity the crate verifies is an exact polynomial or rational
//! equality with zero tolerance.

pub mod cyclo;
pub mod mgamma;
pub mod exact;
pub mod groups;
pub mod perm;
