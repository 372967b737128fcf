//! Half-integral weight forms on `Gamma0(4)` and the operators realizing the Hecke algebra on them.

pub mod analytic;
pub mod generators;
pub mod operators;
pub mod qexp;
pub mod shimura;
pub mod space;
pub mod transport;

pub use analytic::analytic_oracle;
pub use generators::{gen_f, integral_weight_eigenform, theta};
pub use operators::{plus_condition_check, t4plus, tp2};
pub use qexp::QExpansion;
pub use shimura::{shimura_check, steinberg_detect, ShimuraReport, SteinbergReport};
pub use space::{default_precision, fricke_w4, op_t4, op_tp2, op_w, space_basis, HalfIntForm, HalfIntSpace, SpaceKind, Spaces};
pub use transport::{q_transport, Generator, TransportedModule};
