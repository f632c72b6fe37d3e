//! Combinatorial models of the cobordism categories 2-Cob and oriented
//! 1-Cob⁺: pushout composition, the (cofibration, fibration) orthogonal
//! factorization system with constructive lifting, and the functor from
//! oriented 1-cobordisms into 2-cobordisms.

pub mod error;
pub mod finset;
pub mod gen;
pub mod ofs;
pub mod onecob;
mod relabel;
pub mod twocob;

pub use error::{Error, Result};
pub use finset::FinMap;
pub use ofs::{Factorization, Morphism};
pub use onecob::{Cobordism1, Component1, Sign, SignedSet};
pub use twocob::{Cobordism2, Component2};
