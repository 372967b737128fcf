//! Exact scalar arithmetic: rationals, Hilbert symbols, Q(zeta_8) and rational functions over it.

pub mod cyc8;
pub mod field;
pub mod hilbert;
pub mod ratfunc;
pub mod rational;

pub use cyc8::Cyc8;
pub use field::Field;
pub use hilbert::{hilbert, hilbert2, Place};
pub use ratfunc::{Poly, RatFunc};
pub use rational::{dyadic_decompose, parse_q, q, qf, Q};
