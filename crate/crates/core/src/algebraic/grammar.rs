//! Context-free grammars as counting machines.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use super::system::PolySystem;
use crate::arith::{MPoly, Monomial, RSeries, Rat, Var};
use crate::error::{GfError, Result};

/// Longest words enumerated by [`brute_language_count`].
pub const MAX_BRUTE_LENGTH: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Symbol {
    /// Index into the nonterminals.
    Var(usize),
    /// Index into the alphabet.
    Letter(usize),
}

/// A proper grammar: nonempty right-hand sides and no rule `S_i -> S_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cfg {
    symbols: Vec<String>,
    letters: Vec<String>,
    rules: Vec<(usize, Vec<Symbol>)>,
}

impl Cfg {
    /// The first symbol is the start symbol.
    pub fn new(symbols: Vec<String>, letters: Vec<String>, rules: Vec<(usize, Vec<Symbol>)>) -> Result<Cfg> {
        let names: BTreeSet<&String> = symbols.iter().chain(&letters).collect();
        if symbols.is_empty() || names.len() != symbols.len() + letters.len() {
            return Err(GfError::Invalid("symbol and letter names must be distinct".into()));
        }
        if symbols.iter().any(|s| s == "t") {
            return Err(GfError::Invalid("a nonterminal may not be called t".into()));
        }
        for (lhs, rhs) in &rules {
            if *lhs >= symbols.len() {
                return Err(GfError::Invalid(format!("rule for unknown symbol #{lhs}")));
            }
            if rhs.is_empty() {
                return Err(GfError::Improper(format!("empty rule for {}", symbols[*lhs])));
            }
            for s in rhs {
                let ok = match *s {
                    Symbol::Var(j) => j < symbols.len(),
                    Symbol::Letter(j) => j < letters.len(),
                };
                if !ok {
                    return Err(GfError::Invalid(format!("rule for {} uses an unknown symbol", symbols[*lhs])));
                }
            }
            if let [Symbol::Var(j)] = rhs.as_slice() {
                return Err(GfError::Improper(format!(
                    "unit rule {} -> {}",
                    symbols[*lhs], symbols[*j]
                )));
            }
        }
        Ok(Cfg {
            symbols,
            letters,
            rules,
        })
    }

    /// Builds a grammar from rules written as words of names, e.g. `("S", "a S b S")`.
    pub fn from_words(start_first: &[&str], letters: &[&str], rules: &[(&str, &str)]) -> Result<Cfg> {
        let symbols: Vec<String> = start_first.iter().map(|s| s.to_string()).collect();
        let letters: Vec<String> = letters.iter().map(|s| s.to_string()).collect();
        let lookup = |name: &str| -> Result<Symbol> {
            if let Some(i) = symbols.iter().position(|s| s == name) {
                Ok(Symbol::Var(i))
            } else if let Some(i) = letters.iter().position(|s| s == name) {
                Ok(Symbol::Letter(i))
            } else {
                Err(GfError::Invalid(format!("unknown symbol '{name}'")))
            }
        };
        let mut out = Vec::new();
        for (lhs, rhs) in rules {
            let Symbol::Var(l) = lookup(lhs)? else {
                return Err(GfError::Invalid(format!("'{lhs}' is a letter")));
            };
            let word = rhs.split_whitespace().map(lookup).collect::<Result<Vec<_>>>()?;
            out.push((l, word));
        }
        Cfg::new(symbols, letters, out)
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn rules(&self) -> &[(usize, Vec<Symbol>)] {
        &self.rules
    }
}

impl fmt::Display for Cfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            let alts: Vec<String> = self
                .rules
                .iter()
                .filter(|(l, _)| *l == i)
                .map(|(_, w)| {
                    w.iter()
                        .map(|x| match *x {
                            Symbol::Var(j) => self.symbols[j].as_str(),
                            Symbol::Letter(j) => self.letters[j].as_str(),
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            writeln!(f, "{s} -> {}", alts.join(" | "))?;
        }
        Ok(())
    }
}

/// Each rule `S_i -> w` contributes `t^{#letters} prod A_j^{#S_j in w}` to `P_i`.
pub fn grammar_to_system(g: &Cfg) -> Result<PolySystem> {
    let vars: Vec<Var> = g.symbols.iter().map(|s| Var::new(s)).collect();
    let t = Var::new("t");
    let mut eqs = vec![MPoly::zero(); vars.len()];
    for (lhs, rhs) in &g.rules {
        let mut pairs: Vec<(Var, i32)> = Vec::new();
        for s in rhs {
            pairs.push(match *s {
                Symbol::Var(j) => (vars[j].clone(), 1),
                Symbol::Letter(_) => (t.clone(), 1),
            });
        }
        eqs[*lhs].add_term(Monomial::from_pairs(pairs), Rat::one());
    }
    PolySystem::new(vars, eqs)
}

/// Number of distinct words of each length `<= n_max` in the language of the start symbol.
pub fn brute_language_count(g: &Cfg, n_max: usize) -> Result<RSeries> {
    if n_max > MAX_BRUTE_LENGTH {
        return Err(GfError::GuardExceeded(format!(
            "word enumeration limited to length {MAX_BRUTE_LENGTH}"
        )));
    }
    // words[i][l]: the words of length l derived from symbol i.
    let k = g.symbols.len();
    let mut words: Vec<Vec<BTreeSet<Vec<u16>>>> = vec![vec![BTreeSet::new(); n_max + 1]; k];
    for len in 1..=n_max {
        for (lhs, rhs) in &g.rules {
            let mut found = BTreeSet::new();
            fill(&words, rhs, len, Vec::new(), &mut found);
            words[*lhs][len].extend(found);
        }
    }
    let mut counts = vec![Rat::from_integer(0.into()); n_max + 1];
    for (len, c) in counts.iter_mut().enumerate() {
        *c = Rat::from_integer(words[0][len].len().into());
    }
    Ok(RSeries::from_coeffs(counts))
}

/// Concatenations of words for `rhs` with total length `len`; every part is nonempty,
/// so nonterminal parts are shorter than `len` whenever `rhs` has two or more symbols.
fn fill(words: &[Vec<BTreeSet<Vec<u16>>>], rhs: &[Symbol], len: usize, prefix: Vec<u16>, out: &mut BTreeSet<Vec<u16>>) {
    let Some((first, rest)) = rhs.split_first() else {
        if len == 0 {
            out.insert(prefix);
        }
        return;
    };
    if len < rhs.len() {
        return;
    }
    match *first {
        Symbol::Letter(a) => {
            let mut p = prefix;
            p.push(a as u16);
            fill(words, rest, len - 1, p, out);
        }
        Symbol::Var(j) => {
            let max = len - rest.len();
            for l in 1..=max {
                for w in &words[j][l] {
                    let mut p = prefix.clone();
                    p.extend_from_slice(w);
                    fill(words, rest, len - l, p, out);
                }
            }
        }
    }
}
