//! The 2-adic metaplectic group, its compact open subgroups and double cosets.

pub mod coset;
pub mod gamma;
pub mod ktypes;
pub mod group;
pub mod mat2;
pub mod sweep;

pub use coset::{classify_double_coset, coset_decomposition, ell, CosetLabel, DoubleCosetDecomposition};
pub use gamma::GammaChar;
pub use ktypes::{finite_quotient_ktypes, FiniteQuotient, KTypeReport};
pub use group::{cocycle, mu2_part_mod_k4, rational_splitting_check, subgroup_member, MetaplecticElt, Subgroup};
pub use mat2::Mat2;
