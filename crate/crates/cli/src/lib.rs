//! File formats, benchmark sweeps and statistics reports for
//! `semidual-core`. The `semidual` binary is a thin front end over this.

pub mod bench;
pub mod io;

pub use bench::{run_sweep, BenchRow, Mismatch, SubdivisionArgs, Sweep};
pub use io::{Clipper, InputError, Lines, Region};
