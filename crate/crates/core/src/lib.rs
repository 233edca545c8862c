//! Finite hoops, their split extensions with strong section, strong external
//! actions, and the L-algebra comparison, all checked by exhaustive
//! evaluation on operation tables.

pub mod action;
pub mod corpus;
pub mod descriptor;
pub mod enumerate;
pub mod extension;
pub mod format;
pub mod hoop;
pub mod lalg;
pub mod morph;
pub mod search;
pub mod suite;
pub mod term;

pub use action::{ActionError, StrongExternalAction};
pub use extension::{ExtensionError, SplitExtension};
pub use format::ParseError;
pub use hoop::{Elem, FiniteHoop, HoopError, Variety};
pub use lalg::{FiniteLAlgebra, LAlgError};
pub use morph::{Filter, Homomorphism, MorphError};
pub use term::TermError;
