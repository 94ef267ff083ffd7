//! Proper polynomial systems `A_i = P_i(t, A_1, ..., A_k)` and their canonical solutions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;

use super::eval::{embed_mpoly, embed_rat, SplitPoly};
use crate::arith::{MPoly, Monomial, RSeries, Rat, TSeries, Var};
use crate::error::{GfError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct PolySystem {
    unknowns: Vec<Var>,
    equations: Vec<MPoly>,
}

/// Target shape for [`normalize_system`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalForm {
    /// Every right-hand side is a combination of `t` and products `x_l x_m`.
    Quadratic,
    /// Every right-hand side is `t` times a polynomial.
    LeadingT,
}

impl PolySystem {
    /// Checks properness: no constant term and no bare linear term `x_j` in any equation.
    pub fn new(unknowns: Vec<Var>, equations: Vec<MPoly>) -> Result<PolySystem> {
        if unknowns.is_empty() || unknowns.len() != equations.len() {
            return Err(GfError::Invalid(format!(
                "{} unknowns for {} equations",
                unknowns.len(),
                equations.len()
            )));
        }
        let t = Var::new("t");
        let distinct: BTreeSet<&Var> = unknowns.iter().collect();
        if distinct.len() != unknowns.len() || distinct.contains(&t) {
            return Err(GfError::Invalid("unknown names must be distinct and differ from t".into()));
        }
        let s = PolySystem {
            unknowns,
            equations,
        };
        for (i, p) in s.equations.iter().enumerate() {
            for (m, _) in p.terms() {
                let a = m.exponent(&t);
                let degs: Vec<i32> = s.unknowns.iter().map(|x| m.exponent(x)).collect();
                if a < 0 || degs.iter().any(|&e| e < 0) {
                    return Err(GfError::Improper(format!(
                        "equation {} has a negative exponent",
                        i + 1
                    )));
                }
                let d: i32 = degs.iter().sum();
                if a == 0 && d == 0 {
                    return Err(GfError::Improper(format!(
                        "equation {} has a constant term",
                        i + 1
                    )));
                }
                if a == 0 && d == 1 {
                    return Err(GfError::Improper(format!(
                        "equation {} has a linear term in {}",
                        i + 1,
                        m
                    )));
                }
            }
        }
        Ok(s)
    }

    /// Names the unknowns `A1, ..., Ak`.
    pub fn with_default_names(equations: Vec<MPoly>) -> Result<PolySystem> {
        let names = (1..=equations.len()).map(|i| Var::new(&format!("A{i}"))).collect();
        PolySystem::new(names, equations)
    }

    pub fn size(&self) -> usize {
        self.unknowns.len()
    }

    pub fn unknowns(&self) -> &[Var] {
        &self.unknowns
    }

    pub fn equations(&self) -> &[MPoly] {
        &self.equations
    }

    pub fn is_positive(&self) -> bool {
        self.equations.iter().all(MPoly::is_nonnegative)
    }

    /// Every monomial, ignoring parameters, is `t` or a product of two unknowns.
    pub fn is_quadratic(&self) -> bool {
        let t = Var::new("t");
        self.equations.iter().all(|p| {
            p.terms().all(|(m, _)| {
                let a = m.exponent(&t);
                let d: i32 = self.unknowns.iter().map(|x| m.exponent(x)).sum();
                (a == 1 && d == 0) || (a == 0 && d == 2)
            })
        })
    }

    /// Every monomial carries a factor `t`.
    pub fn is_leading_t(&self) -> bool {
        let t = Var::new("t");
        self.equations
            .iter()
            .all(|p| p.terms().all(|(m, _)| m.exponent(&t) >= 1))
    }

    fn split(&self) -> Result<Vec<SplitPoly>> {
        self.equations
            .iter()
            .map(|p| SplitPoly::new(p, &self.unknowns))
            .collect()
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, p) in self.unknowns.iter().zip(&self.equations) {
            writeln!(f, "{x} = {p}")?;
        }
        Ok(())
    }
}

fn iterate<C: crate::arith::Coeff>(
    s: &PolySystem,
    n: usize,
    embed: impl Fn(&MPoly) -> Result<C> + Copy,
) -> Result<Vec<TSeries<C>>> {
    let split = s.split()?;
    let mut values: Vec<TSeries<C>> = vec![TSeries::zero(n); s.size()];
    // After pass m the coefficients of t^0..t^m are exact.
    for m in 1..=n {
        let cur: Vec<TSeries<C>> = values.iter().map(|v| v.truncate(m - 1)).collect();
        let padded: Vec<TSeries<C>> = cur
            .into_iter()
            .map(|v| TSeries::new(v.into_coeffs(), m))
            .collect();
        values = split
            .iter()
            .map(|p| p.eval(&padded, m, embed))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(values
        .into_iter()
        .map(|v| TSeries::new(v.into_coeffs(), n))
        .collect())
}

/// The unique solution with zero constant terms, modulo `t^{n+1}`.
pub fn canonical_solution(s: &PolySystem, n: usize) -> Result<Vec<TSeries>> {
    iterate(s, n, embed_mpoly)
}

/// [`canonical_solution`] for systems without parameters.
pub fn canonical_solution_rat(s: &PolySystem, n: usize) -> Result<Vec<RSeries>> {
    iterate(s, n, embed_rat)
}

/// `P_i(t, A) - A_i` for candidate values, truncated to `n`.
pub fn system_residuals(s: &PolySystem, values: &[TSeries], n: usize) -> Result<Vec<TSeries>> {
    let split = s.split()?;
    let vals: Vec<TSeries> = values.iter().map(|v| v.truncate(n)).collect();
    split
        .iter()
        .zip(&vals)
        .map(|(p, a)| Ok(p.eval(&vals, n, embed_mpoly)?.sub(a)))
        .collect()
}

struct Names {
    used: BTreeSet<String>,
}

impl Names {
    fn fresh(&mut self, prefix: &str, start: usize) -> Var {
        let mut k = start;
        loop {
            let name = format!("{prefix}{k}");
            if self.used.insert(name.clone()) {
                return Var::new(&name);
            }
            k += 1;
        }
    }
}

fn name_pool(s: &PolySystem) -> Names {
    let mut used: BTreeSet<String> = s.unknowns.iter().map(|v| v.name().to_string()).collect();
    for p in &s.equations {
        used.extend(p.vars().into_iter().map(|v| v.name().to_string()));
    }
    used.insert("t".into());
    Names { used }
}

/// Rewrites `s` into an equivalent proper system of the requested shape.
///
/// The first unknown keeps its name and its canonical solution. Positivity is preserved.
pub fn normalize_system(s: &PolySystem, mode: NormalForm) -> Result<PolySystem> {
    let q = quadratize(s)?;
    match mode {
        NormalForm::Quadratic => Ok(q),
        NormalForm::LeadingT => leading_t(&q),
    }
}

/// Atom 0 is `t`, atom `j + 1` is unknown `j`.
struct Quadratizer<'a> {
    base: &'a PolySystem,
    names: Names,
    t_proxy: Option<Var>,
    words: BTreeMap<Vec<usize>, Var>,
    extra: Vec<(Var, MPoly)>,
}

impl Quadratizer<'_> {
    fn atom(&mut self, a: usize) -> MPoly {
        if a > 0 {
            return MPoly::term(Rat::one(), Monomial::var(self.base.unknowns[a - 1].clone(), 1));
        }
        if self.t_proxy.is_none() {
            let v = self.names.fresh("T", 1);
            self.extra.push((v.clone(), MPoly::var("t")));
            self.t_proxy = Some(v);
        }
        MPoly::term(Rat::one(), Monomial::var(self.t_proxy.clone().unwrap(), 1))
    }

    /// An unknown standing for the product of the atoms in `word` (length >= 1).
    fn word(&mut self, word: &[usize]) -> MPoly {
        if word.len() == 1 {
            return self.atom(word[0]);
        }
        if let Some(v) = self.words.get(word) {
            return MPoly::term(Rat::one(), Monomial::var(v.clone(), 1));
        }
        let v = self.names.fresh("Z", 1);
        self.words.insert(word.to_vec(), v.clone());
        let slot = self.extra.len();
        self.extra.push((v.clone(), MPoly::zero()));
        let rhs = self.product(word);
        self.extra[slot].1 = rhs;
        MPoly::term(Rat::one(), Monomial::var(v, 1))
    }

    /// The quadratic monomial for a word of length >= 2.
    fn product(&mut self, word: &[usize]) -> MPoly {
        let head = self.atom(word[0]);
        let tail = self.word(&word[1..]);
        &head * &tail
    }
}

fn quadratize(s: &PolySystem) -> Result<PolySystem> {
    if s.is_quadratic() {
        return Ok(s.clone());
    }
    let split = s.split()?;
    let mut qz = Quadratizer {
        base: s,
        names: name_pool(s),
        t_proxy: None,
        words: BTreeMap::new(),
        extra: Vec::new(),
    };
    let mut rewritten = Vec::with_capacity(s.size());
    for p in &split {
        let mut out = MPoly::zero();
        for (a, exps, c) in p.terms() {
            let mut word = vec![0usize; *a];
            for (j, &e) in exps.iter().enumerate() {
                word.extend(std::iter::repeat_n(j + 1, e as usize));
            }
            let m = if word.len() == 1 {
                MPoly::var("t")
            } else {
                qz.product(&word)
            };
            out = &out + &(c * &m);
        }
        rewritten.push(out);
    }
    let mut unknowns = s.unknowns.clone();
    for (v, p) in qz.extra {
        unknowns.push(v);
        rewritten.push(p);
    }
    PolySystem::new(unknowns, rewritten)
}

fn leading_t(q: &PolySystem) -> Result<PolySystem> {
    let t = Var::new("t");
    let k = q.size();
    // Decompose each right-hand side as m_i t + sum n_{i,(l,m)} x_l x_m.
    let mut lin: Vec<MPoly> = Vec::with_capacity(k);
    let mut pairs: Vec<BTreeMap<(usize, usize), MPoly>> = Vec::with_capacity(k);
    for p in &q.equations {
        let mut m_i = MPoly::zero();
        let mut n_i: BTreeMap<(usize, usize), MPoly> = BTreeMap::new();
        for (mono, c) in p.terms() {
            let mut idx: Vec<usize> = Vec::new();
            for (j, x) in q.unknowns.iter().enumerate() {
                for _ in 0..mono.exponent(x) {
                    idx.push(j);
                }
            }
            let mut rest = mono.without(&t);
            for x in &q.unknowns {
                rest = rest.without(x);
            }
            let coeff = MPoly::term(c.clone(), rest);
            if idx.is_empty() {
                m_i = &m_i + &coeff;
            } else {
                let e = n_i.entry((idx[0], idx[1])).or_insert_with(MPoly::zero);
                *e = &*e + &coeff;
            }
        }
        lin.push(m_i);
        pairs.push(n_i);
    }
    let all: BTreeSet<(usize, usize)> = pairs.iter().flat_map(|n| n.keys().copied()).collect();
    let mut names = name_pool(q);
    let uvar: BTreeMap<(usize, usize), Var> =
        all.iter().map(|&p| (p, names.fresh("U", 1))).collect();
    let tv = MPoly::var("t");
    // m_i + sum_p n_{i,p} U_p
    let inner = |i: usize| -> MPoly {
        pairs[i].iter().fold(lin[i].clone(), |acc, (p, c)| {
            &acc + &(c * &MPoly::term(Rat::one(), Monomial::var(uvar[p].clone(), 1)))
        })
    };
    let mut unknowns = q.unknowns.clone();
    let mut eqs: Vec<MPoly> = (0..k).map(|i| &tv * &inner(i)).collect();
    for (&(l, m), v) in &uvar {
        unknowns.push(v.clone());
        eqs.push(&tv * &(&inner(l) * &inner(m)));
    }
    PolySystem::new(unknowns, eqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;
    use crate::arith::RSeries;

    fn sys(names: &[&str], eqs: &[&str]) -> PolySystem {
        PolySystem::new(
            names.iter().map(|n| Var::new(n)).collect(),
            eqs.iter().map(|e| parse_poly(e).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn binary_trees() {
        let s = sys(&["A"], &["t + A^2"]);
        let a = canonical_solution_rat(&s, 6).unwrap();
        assert_eq!(a[0], RSeries::from_ints(&[0, 1, 1, 2, 5, 14, 42]));
    }

    #[test]
    fn properness() {
        let bad = |e: &str| PolySystem::new(vec![Var::new("A")], vec![parse_poly(e).unwrap()]);
        assert!(matches!(bad("1 + t*A"), Err(GfError::Improper(_))));
        assert!(matches!(bad("t + 2*A"), Err(GfError::Improper(_))));
        assert!(bad("t + t*A + A^2").is_ok());
    }

    #[test]
    fn quadratic_and_leading_t_agree() {
        let s = sys(&["A1", "A2"], &["t^2 + A1*A2", "2*t*A1^3"]);
        let direct = canonical_solution_rat(&s, 20).unwrap();
        let q = normalize_system(&s, NormalForm::Quadratic).unwrap();
        assert!(q.is_quadratic() && q.is_positive());
        assert_eq!(q.unknowns()[0], Var::new("A1"));
        let l = normalize_system(&s, NormalForm::LeadingT).unwrap();
        assert!(l.is_leading_t() && l.is_positive());
        for other in [&q, &l] {
            let sol = canonical_solution_rat(other, 20).unwrap();
            assert_eq!(sol[0], direct[0]);
        }
    }

    #[test]
    fn trivial_system_unchanged() {
        let s = sys(&["A"], &["t"]);
        assert_eq!(normalize_system(&s, NormalForm::Quadratic).unwrap(), s);
        assert_eq!(normalize_system(&s, NormalForm::LeadingT).unwrap(), s);
    }

    #[test]
    fn residuals_vanish() {
        let s = sys(&["A", "B"], &["t*(1 + B)^2", "t*x + A*B + A^2"]);
        let sol = canonical_solution(&s, 8).unwrap();
        for r in system_residuals(&s, &sol, 8).unwrap() {
            assert!(r.is_zero());
        }
    }
}
