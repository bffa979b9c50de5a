//! Exhaustive ground-truth solvers and combinatorial helpers.

pub mod cnf;
pub mod h_value;
pub mod hamilton;
pub mod partitions;
pub mod paths;
pub mod solvers;
pub mod trees;

pub use cnf::{nae3sat_solve, sat3_solve, Assignment, Clause, Cnf3Formula, Literal};
pub use h_value::{h_value, HValue};
pub use hamilton::double_hamilton_paths;
pub use solvers::{
    extremal_cck_colorings, solve_cck, solve_cfc, solve_mc, solve_pc, ExtremalColorings,
    OracleSolution,
};
pub use trees::nonisomorphic_trees;
