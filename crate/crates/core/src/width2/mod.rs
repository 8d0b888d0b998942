//! Walks in the two-column strip `{0, 1} x Z`: grammar, generating
//! functions, weighted automaton and the Fibonacci closed form.

mod automaton;
mod gf;
mod grammar;
mod theorem;

pub use automaton::{gf_via_weighted_automaton, grammar_automaton, Edge, WeightedAutomaton};
pub use gf::{full_gf, northbound_gf, piece_gf, Piece};
pub use grammar::{decompositions, generate_northbound, parse_northbound, GrammarDecomposition};
pub use theorem::{
    closed_form_a, closed_form_matches_gf, verify_against, verify_theorem, Check, Mismatch,
    VerificationReport,
};
