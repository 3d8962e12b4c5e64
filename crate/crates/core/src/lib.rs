//! Exact computations with semisimple Hopf algebras over finite fields:
//! the smash product `H # kG` with a cyclic group of order `2 dim H`, its
//! simple modules, and the Grothendieck algebras of both.

pub mod error;
pub mod field;
pub mod groups;
pub mod grothendieck;
pub mod hopf;
pub mod linalg;
pub mod pipeline;
pub mod presentation;
pub mod rep;
pub mod report;
pub mod semisimple;
pub mod smash;

pub use error::{Error, Result};
pub use field::{Embedding, Fe, Field, FieldElement};
pub use groups::Group;
pub use hopf::{validate_hopf, HopfAlgebra, HopfElement};
pub use report::{Check, Report, Status};
