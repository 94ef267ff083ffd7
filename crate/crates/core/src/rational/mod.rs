//! Rational generating functions: walks, automata, sections and dominant poles.

pub mod analysis;
pub mod automaton;
pub mod digraph;

pub use analysis::{rational_asymptotics, section, soittola_check, AsymptoticEstimate, SoittolaReport};
pub use automaton::{automaton_gf, determinize, Nfa};
pub use digraph::{transfer_gf, viennot_gf, WeightedDigraph};
