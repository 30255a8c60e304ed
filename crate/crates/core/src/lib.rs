pub mod admissible;
pub mod affweyl;
pub mod checks;
pub mod error;
pub mod model;
pub mod newton;
pub mod orders;
pub mod parabolic;
pub mod report;
pub mod siegel;
pub mod zip;

pub use admissible::{admissible_set, AdmissibleSet, StratumRecord};
pub use affweyl::{Coweight, Elt, GroupCtx, Sigma, Word};
pub use error::{Error, Result};
pub use model::Model;
pub use newton::{BClass, NewtonPoint};
pub use orders::{Notation, OrderKind, Poset};
pub use parabolic::Parahoric;
pub use siegel::{gsp_context, gsp_context_with, level_to_parahoric, GspModel, SiegelLevel};
