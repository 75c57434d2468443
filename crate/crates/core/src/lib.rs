//! Closed 3-manifolds obtained by pairing the faces of a single polyhedral
//! cell: the cyclic families `M24(n)` and `M25(n)`, their cell census,
//! fundamental-group presentations, first homology and rotational
//! symmetries.

pub mod complex;
pub mod error;
pub mod families;
pub mod group;
pub mod io;
pub mod report;
pub mod symmetry;

pub use complex::{CellCounts, EdgeOrbit, PairedComplex, VertexOrbit};
pub use error::{Error, Result};
pub use families::{build_m24, build_m25, FamilyId};
