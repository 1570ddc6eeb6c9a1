//! Poset metrics over prime fields: ideals, isometry groups, extension
//! properties, orbit association schemes, MacWilliams transforms and shapes.

pub mod code;
pub mod corpus;
pub mod cyclotomic;
pub mod dispatch;
pub mod error;
pub mod extension;
pub mod field;
pub mod io;
pub mod iso;
pub mod isometry;
pub mod nrt;
pub mod ops;
pub mod orbits;
pub mod poset;
pub mod scheme;
pub mod semilattice;
pub mod shape;
pub mod space;
pub mod subset;
pub mod tree;

pub use error::{Error, Result};
pub use poset::Poset;
pub use subset::Subset;
