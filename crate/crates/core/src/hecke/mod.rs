//! The Iwahori Hecke algebra of genuine `gamma`-spherical functions.

pub mod algebra;
pub mod elt;
pub mod oracle;
pub mod psmodule;

pub use algebra::{center, idempotents, invert, one_dim_characters, parse_element, t_w, u0, u1, verify_relations, Character};
pub use elt::{BasisLabel, HeckeElt};
pub use oracle::{convolve, evaluate, oracle_agrees};
pub use psmodule::{shimura_parameter, PSModule};
