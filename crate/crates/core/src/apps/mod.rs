//! The two families of intersecting-set problems: permutations with few
//! fixed points in `S_n`, and matrices with `A - I` of large rank in
//! `GL(n, F_q)`.

mod efp;
mod gl;

pub use efp::{
    efp_conjectured_max, efp_connection, efp_csv, efp_grid, efp_table, fixed_points_count,
    ConjecturedMax, EfpCell, EfpTableOptions,
};
pub use gl::{gl_cell, gl_connection, gl_lower_bound, gl_witness_family, GlCell};
