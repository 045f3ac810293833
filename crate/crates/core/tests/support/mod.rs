pub mod gen;
pub mod simplex;
