//! Built-in examples, addressable by name.

use crate::algebraic::{CatalyticEquation, Cfg, PolySystem};
use crate::arith::parse::parse_poly;
use crate::arith::{MPoly, RatFun, Var};
use crate::rational::{Nfa, WeightedDigraph};

/// A named built-in object.
#[derive(Clone, Debug)]
pub enum Fixture {
    Digraph {
        graph: WeightedDigraph,
        start: usize,
        targets: Vec<usize>,
    },
    Automaton(Nfa),
    Grammar(Cfg),
    /// `P(t, a) = 0` solved for `var`.
    Equation { poly: MPoly, var: Var },
    System(PolySystem),
    Catalytic(CatalyticEquation),
    Rational(RatFun),
}

fn poly(s: &str) -> MPoly {
    parse_poly(s).expect("fixture polynomial")
}

/// Walks on the five-vertex digraph with loop weight `x` at 3 and edge weight `y` on 3 -> 5.
pub fn xy_digraph() -> WeightedDigraph {
    let one = || MPoly::one();
    WeightedDigraph::from_edges(
        5,
        [
            (1, 2, one()),
            (2, 2, one()),
            (4, 4, one()),
            (5, 5, one()),
            (3, 3, poly("x")),
            (3, 2, one()),
            (4, 2, one()),
            (2, 3, one()),
            (2, 4, one()),
            (3, 4, one()),
            (5, 4, one()),
            (2, 5, one()),
            (3, 5, poly("y")),
        ],
    )
    .expect("fixture digraph")
}

/// Column-convex polyominoes coded as words; the language equations give this automaton.
pub fn ccpoly_automaton() -> Nfa {
    let letters = ["a", "b", "c", "abar", "bbar", "cbar"];
    Nfa::new(
        5,
        letters.iter().map(|s| s.to_string()).collect(),
        &[
            (1, "c", 2),
            (2, "a", 2),
            (3, "a", 2),
            (4, "c", 2),
            (2, "c", 3),
            (3, "b", 3),
            (3, "c", 3),
            (2, "abar", 4),
            (3, "abar", 4),
            (4, "a", 4),
            (5, "b", 4),
            (2, "cbar", 5),
            (3, "bbar", 5),
            (3, "cbar", 5),
            (5, "b", 5),
        ],
        1,
        &[2, 3],
    )
    .expect("fixture automaton")
}

pub fn ccpoly_gf() -> RatFun {
    RatFun::from_mpolys(&poly("t*(1 - t)^3"), &poly("1 - 5*t + 7*t^2 - 4*t^3")).unwrap()
}

/// `a_n = 25^n cos^2(n alpha)` with `cos alpha = 3/5`.
pub fn cos_squared_gf() -> RatFun {
    RatFun::from_mpolys(&poly("1 - 2*t + 225*t^2"), &poly("(1 - 25*t)*(625*t^2 + 14*t + 1)")).unwrap()
}

pub fn dyck_grammar() -> Cfg {
    Cfg::from_words(
        &["S"],
        &["a", "b"],
        &[("S", "a b"), ("S", "a b S"), ("S", "a S b"), ("S", "a S b S")],
    )
    .unwrap()
}

/// Excursions of the +1/-1 walk, decomposed at the first return to 0.
pub fn meander_grammar() -> Cfg {
    Cfg::from_words(
        &["M0"],
        &["a", "b"],
        &[("M0", "a b"), ("M0", "a b M0"), ("M0", "a M0 b"), ("M0", "a M0 b M0")],
    )
    .unwrap()
}

/// Every word `a^n` has many derivation trees.
pub fn ambiguous_grammar() -> Cfg {
    Cfg::from_words(&["S"], &["a"], &[("S", "a"), ("S", "S S"), ("S", "S S S")]).unwrap()
}

pub fn binary_tree_system() -> PolySystem {
    PolySystem::new(vec![Var::new("A")], vec![poly("t + A^2")]).unwrap()
}

/// Excursions and walks returning to 0; the bare term `2 M0` is expanded once.
pub fn excursion_system() -> PolySystem {
    PolySystem::new(
        vec![Var::new("W0"), Var::new("M0")],
        vec![poly("2*t^2*(1 + M0)^2 + M0*W0"), poly("t^2*(1 + M0)^2")],
    )
    .unwrap()
}

/// Half-pyramids `H` and pyramids `P`; `P = H(1 + P)` with `H` expanded once.
pub fn heap_system() -> PolySystem {
    PolySystem::new(
        vec![Var::new("P"), Var::new("H")],
        vec![poly("t + t*H + t*H^2 + H*P"), poly("t + t*H + t*H^2")],
    )
    .unwrap()
}

pub fn quadratic_example_system() -> PolySystem {
    PolySystem::new(
        vec![Var::new("A1"), Var::new("A2")],
        vec![poly("t^2 + A1*A2"), poly("2*t*A1^3")],
    )
    .unwrap()
}

pub fn hard_particle_equation() -> MPoly {
    poly(
        "23328*t^6*A^4 + 27*t^4*(91 - 2088*t)*A^3 \
         + t^2*(86 - 3951*t + 46710*t^2 + 3456*t^3)*A^2 \
         + (1 - 69*t + 1598*t^2 - 11743*t^3 - 14544*t^4)*A \
         - 1 + 66*t - 1495*t^2 + 11485*t^3 + 128*t^4",
    )
}

/// `V = t / ((1 - 2V)(1 - 3V + 3V^2))` with denominators cleared.
pub fn parametrization_equation() -> MPoly {
    poly("V*(1 - 2*V)*(1 - 3*V + 3*V^2) - t")
}

pub fn general_maps_equation() -> MPoly {
    poly("-1 + 16*t + (1 - 18*t)*G + 27*t^2*G^2")
}

pub fn general_maps_catalytic() -> CatalyticEquation {
    CatalyticEquation::parse("G(u) = 1 + t*u^2*G(u)^2 + t*u*DD").unwrap()
}

pub fn loopless_triangulations_equation() -> MPoly {
    poly("1 - 27*t + (-1 + 36*t)*T - 8*t*T^2 - 16*t^2*T^3")
}

pub fn three_connected_triangulations_equation() -> MPoly {
    poly("-1 + 16*t + (1 - 20*t)*M + (3*t + 8*t^2)*M^2 + 3*t^2*M^3 + t^3*M^4")
}

/// Names accepted by [`fixture`], sorted.
pub fn fixture_names() -> Vec<&'static str> {
    let mut v = vec![
        "ambiguous",
        "binary-trees",
        "ccpoly",
        "ccpoly-gf",
        "cos2",
        "dyck",
        "hard-particles",
        "parametrized",
        "general-maps",
        "general-maps-catalytic",
        "excursions",
        "xy-digraph",
        "heaps",
        "meander",
        "quadratic-example",
        "triangulations-m",
        "triangulations-t",
    ];
    v.sort();
    v
}

pub fn fixture(name: &str) -> Option<Fixture> {
    let eq = |p: MPoly, v: &str| Fixture::Equation {
        poly: p,
        var: Var::new(v),
    };
    Some(match name {
        "ambiguous" => Fixture::Grammar(ambiguous_grammar()),
        "binary-trees" => Fixture::System(binary_tree_system()),
        "ccpoly" => Fixture::Automaton(ccpoly_automaton()),
        "ccpoly-gf" => Fixture::Rational(ccpoly_gf()),
        "cos2" => Fixture::Rational(cos_squared_gf()),
        "dyck" => Fixture::Grammar(dyck_grammar()),
        "hard-particles" => eq(hard_particle_equation(), "A"),
        "parametrized" => eq(parametrization_equation(), "V"),
        "general-maps" => eq(general_maps_equation(), "G"),
        "general-maps-catalytic" => Fixture::Catalytic(general_maps_catalytic()),
        "excursions" => Fixture::System(excursion_system()),
        "xy-digraph" => Fixture::Digraph {
            graph: xy_digraph(),
            start: 1,
            targets: vec![2, 3],
        },
        "heaps" => Fixture::System(heap_system()),
        "meander" => Fixture::Grammar(meander_grammar()),
        "quadratic-example" => Fixture::System(quadratic_example_system()),
        "triangulations-m" => eq(three_connected_triangulations_equation(), "M"),
        "triangulations-t" => eq(loopless_triangulations_equation(), "T"),
        _ => return None,
    })
}
