//! Shifted tableaux over the gl and sp alphabets, the jeu de taquin
//! bijections that factor primed shifted tableaux into a staircase part and
//! an ordinary tableau, alternating sign matrices with their six-vertex
//! encodings, and exact checks of the associated polynomial identities.

pub mod asm;
pub mod core_types;
pub mod error;
pub mod goldens;
pub mod identities;
pub mod jdt_gl;
pub mod jdt_sp;
pub mod polynomial;
pub mod suite;
pub mod tableau;
pub mod tableaux_gl;
pub mod tableaux_sp;

pub use error::{Error, Result};
