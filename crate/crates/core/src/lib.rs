//! Exact Schubert calculus, quantum cohomology of Grassmannians, two-step
//! flag intersections and conformal-blocks numerics on M̄₀,ₙ.

pub mod cb;
pub mod error;
pub mod flags;
pub mod gw;
pub mod moduli;
pub mod partitions;
pub mod quantum;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Partition, Rect};
