pub mod artifact;
pub mod bounds;
pub mod cli;
pub mod codes;
pub mod compare;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod predict;
pub mod projgeom;
pub mod varieties;
