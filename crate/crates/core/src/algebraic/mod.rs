//! Algebraic series: proper systems, grammars, branches of algebraic curves,
//! catalytic equations, Laurent slices and coefficient asymptotics.

pub mod asymptotics;
pub mod branches;
pub mod catalytic;
pub mod eval;
pub mod grammar;
pub mod laurent;
pub mod system;

pub use asymptotics::algebraic_asymptotics;
pub use branches::{lagrange_coeff, series_roots, verify_algebraic, BranchReport, BranchSolution};
pub use catalytic::{solve_catalytic, CatalyticEquation, CatalyticSolution};
pub use grammar::{brute_language_count, grammar_to_system, Cfg, Symbol};
pub use system::{canonical_solution, canonical_solution_rat, normalize_system, NormalForm, PolySystem};
pub use laurent::{laurent_slice, BiRatFun, SliceMode};
