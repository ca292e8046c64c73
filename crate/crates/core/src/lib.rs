//! Quandle homology, shifting maps and state-sum invariants of classical
//! links, computed with exact arithmetic.

pub mod chain;
pub mod cocycles;
pub mod linalg;
pub mod links;
pub mod quandle;
pub mod verify;

pub use linalg::{AbelianGroup, IntMatrix, SparseMatrix};
pub use quandle::{Direction, Point, Quandle, QuandleError, QuandleHom, XMap, XSet, XSetKind};
