//! Free partially commutative (trace) monoids and an explicit free
//! resolution of the trivial module `ℤ` over the monoid ring `ℤM`.

pub mod amalgam;
pub mod basis;
pub mod cli;
pub mod error;
pub mod exactness;
pub mod graph;
pub mod linalg;
pub mod resolution;
pub mod ring;
pub mod trace;

pub use error::{Error, Result};
pub use graph::{Clique, CommutationGraph};
pub use ring::{ModuleElement, RingElement};
pub use trace::{Letter, LetterSet, Presentation, Trace};
