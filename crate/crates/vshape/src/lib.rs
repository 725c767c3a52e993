//! Files, generators, plots and the command line for `vshape-core`.

pub mod cli;
pub mod gen;
pub mod io;
pub mod record;
pub mod run;
pub mod svg;

pub use vshape_core as core;
