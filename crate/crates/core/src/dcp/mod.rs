//! Index posets, the poset `W(lambda, tau)`, the DCP poset `D(lambda, I, tau)` and
//! tau-standardness.

mod build;
mod index_poset;
mod setup;
mod standard;
mod underline;

pub use build::{rho_inverse_w0, Dcp, DcpEdge, DcpNode, EdgeKind};
pub use index_poset::{mask_to_vec, IndexPoset};
pub use setup::{totally_ordered_exists, Setup};
pub use standard::{check_standard, CriteriaRow, StandardnessReport};
pub use underline::UnderlineW;
