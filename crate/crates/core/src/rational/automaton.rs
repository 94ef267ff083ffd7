//! Finite automata as word-counting machines.
//!
//! States are numbered `1..=n`. Letters are arbitrary strings.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::arith::{rat, MPoly, RatFun};
use crate::error::{GfError, Result};
use crate::rational::digraph::{transfer_gf, WeightedDigraph};

#[derive(Clone, Debug, PartialEq)]
pub struct Nfa {
    states: usize,
    alphabet: Vec<String>,
    transitions: BTreeSet<(usize, usize, usize)>,
    initial: usize,
    finals: BTreeSet<usize>,
}

impl Nfa {
    /// `transitions` are `(from, letter, to)`; letters must belong to the alphabet.
    pub fn new(
        states: usize,
        alphabet: Vec<String>,
        transitions: &[(usize, &str, usize)],
        initial: usize,
        finals: &[usize],
    ) -> Result<Nfa> {
        let mut seen = BTreeSet::new();
        for a in &alphabet {
            if !seen.insert(a.clone()) {
                return Err(GfError::Invalid(format!("letter '{a}' listed twice")));
            }
        }
        let check = |s: usize| {
            if s == 0 || s > states {
                Err(GfError::Invalid(format!("state {s} outside 1..={states}")))
            } else {
                Ok(())
            }
        };
        check(initial)?;
        for &f in finals {
            check(f)?;
        }
        let mut set = BTreeSet::new();
        for &(a, letter, b) in transitions {
            check(a)?;
            check(b)?;
            let l = alphabet
                .iter()
                .position(|x| x == letter)
                .ok_or_else(|| GfError::Invalid(format!("letter '{letter}' not in alphabet")))?;
            set.insert((a, l, b));
        }
        Ok(Nfa {
            states,
            alphabet,
            transitions: set,
            initial,
            finals: finals.iter().copied().collect(),
        })
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    /// `(from, letter, to)` triples with letters by name.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, &str, usize)> {
        self.transitions
            .iter()
            .map(|&(a, l, b)| (a, self.alphabet[l].as_str(), b))
    }

    /// At most one successor per state and letter.
    pub fn is_deterministic(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.transitions.iter().all(|&(a, l, _)| seen.insert((a, l)))
    }

    fn successors(&self, set: &BTreeSet<usize>, letter: usize) -> BTreeSet<usize> {
        self.transitions
            .iter()
            .filter(|(a, l, _)| *l == letter && set.contains(a))
            .map(|&(_, _, b)| b)
            .collect()
    }

    /// Whether the word (a sequence of letters) is accepted.
    pub fn accepts(&self, word: &[&str]) -> bool {
        let mut cur: BTreeSet<usize> = [self.initial].into();
        for w in word {
            let Some(l) = self.alphabet.iter().position(|x| x == w) else {
                return false;
            };
            cur = self.successors(&cur, l);
            if cur.is_empty() {
                return false;
            }
        }
        cur.iter().any(|s| self.finals.contains(s))
    }
}

/// Subset construction restricted to reachable, nonempty subsets.
///
/// New states are numbered in breadth-first discovery order, exploring
/// letters in alphabet order.
pub fn determinize(a: &Nfa) -> Nfa {
    let start: BTreeSet<usize> = [a.initial].into();
    let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let mut subsets: Vec<BTreeSet<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(start.clone(), 1);
    subsets.push(start.clone());
    queue.push_back(start);
    let mut transitions = BTreeSet::new();
    while let Some(set) = queue.pop_front() {
        let from = index[&set];
        for l in 0..a.alphabet.len() {
            let next = a.successors(&set, l);
            if next.is_empty() {
                continue;
            }
            let to = match index.get(&next) {
                Some(&k) => k,
                None => {
                    let k = subsets.len() + 1;
                    index.insert(next.clone(), k);
                    subsets.push(next.clone());
                    queue.push_back(next);
                    k
                }
            };
            transitions.insert((from, l, to));
        }
    }
    let finals = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| s.iter().any(|q| a.finals.contains(q)))
        .map(|(k, _)| k + 1)
        .collect();
    Nfa {
        states: subsets.len(),
        alphabet: a.alphabet.clone(),
        transitions,
        initial: 1,
        finals,
    }
}

/// The digraph whose edge `a -> b` carries the number of letters leading from `a` to `b`.
pub fn letter_count_digraph(a: &Nfa) -> WeightedDigraph {
    let mut g = WeightedDigraph::new(a.states);
    for &(from, _, to) in &a.transitions {
        g.add_edge(from, to, MPoly::constant(rat(1)))
            .expect("states were validated");
    }
    g
}

/// Length generating function of the accepted language, each word counted once.
pub fn automaton_gf(a: &Nfa) -> Result<RatFun> {
    let dfa;
    let machine = if a.is_deterministic() {
        a
    } else {
        dfa = determinize(a);
        &dfa
    };
    let g = letter_count_digraph(machine);
    let finals: Vec<usize> = machine.finals.iter().copied().collect();
    transfer_gf(&g, machine.initial, &finals)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Vec<String> {
        vec!["a".into(), "b".into()]
    }

    #[test]
    fn two_letter_loop() {
        let a = Nfa::new(1, ab(), &[(1, "a", 1), (1, "b", 1)], 1, &[1]).unwrap();
        assert_eq!(automaton_gf(&a).unwrap().to_string(), "1/(1 - 2*t)");
    }

    #[test]
    fn ending_in_a() {
        let a = Nfa::new(2, ab(), &[(1, "a", 1), (1, "b", 1), (1, "a", 2)], 1, &[2]).unwrap();
        assert!(!a.is_deterministic());
        let d = determinize(&a);
        assert!(d.is_deterministic());
        assert_eq!(d.state_count(), 2);
        let s = automaton_gf(&a).unwrap().expand_rat(6).unwrap();
        let expect: Vec<i64> = (0..=6).map(|n| if n == 0 { 0 } else { 1 << (n - 1) }).collect();
        assert_eq!(s, crate::arith::RSeries::from_ints(&expect));
        assert!(d.accepts(&["b", "a"]) && !d.accepts(&["a", "b"]));
    }

    #[test]
    fn unreachable_state_dropped() {
        let a = Nfa::new(3, ab(), &[(1, "a", 2), (2, "b", 1), (3, "a", 1)], 1, &[1]).unwrap();
        let d = determinize(&a);
        assert_eq!(d.state_count(), 2);
        assert_eq!(automaton_gf(&d).unwrap().to_string(), "1/(1 - t^2)");
    }

    #[test]
    fn rejects_unknown_letters() {
        assert!(Nfa::new(1, ab(), &[(1, "c", 1)], 1, &[1]).is_err());
        assert!(Nfa::new(1, ab(), &[], 2, &[1]).is_err());
    }
}
