//! Monomials and exact polynomials in the variables `x_{i,j}` of an `n × m`
//! grid, plus the diagonal monomial orders.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::linalg::Rational;

/// The variable `x_{i,j}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct VariableIndex {
    pub i: usize,
    pub j: usize,
}

impl VariableIndex {
    pub fn new(i: usize, j: usize) -> Self {
        VariableIndex { i, j }
    }
}

impl fmt::Display for VariableIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{},{}", self.i, self.j)
    }
}

/// Sparse exponent vector. The derived `Ord` is only a canonical storage
/// order; use [`compare`] for monomial orders.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: BTreeMap<VariableIndex, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize, j: usize) -> Self {
        Monomial::from_exponents([(VariableIndex::new(i, j), 1)])
    }

    /// Zero exponents are dropped, repeated variables accumulate.
    pub fn from_exponents(items: impl IntoIterator<Item = (VariableIndex, u32)>) -> Self {
        let mut exps = BTreeMap::new();
        for (v, e) in items {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    /// Product of `x_{i,j}` over the given cells.
    pub fn from_cells(cells: &[(usize, usize)]) -> Self {
        Monomial::from_exponents(cells.iter().map(|&(i, j)| (VariableIndex::new(i, j), 1)))
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, v: VariableIndex) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (VariableIndex, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableIndex> + '_ {
        self.exps.keys().copied()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.values().all(|&e| e == 1)
    }

    /// The cells of a squarefree monomial whose variables sit in distinct
    /// rows and columns.
    pub fn rook_cells(&self) -> Option<Vec<(usize, usize)>> {
        if !self.is_squarefree() {
            return None;
        }
        let cells: Vec<(usize, usize)> = self.exps.keys().map(|v| (v.i, v.j)).collect();
        let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
        let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        (rows.len() == cells.len() && cols.len() == cells.len()).then_some(cells)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, &e)| other.exponent(*v) >= e)
    }

    /// `other / self` when `self` divides it.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exponents(other.exponents().map(|(v, e)| (v, e - self.exponent(v)))))
    }

    /// `x_{i,j} ↦ x_{σ(i),τ(j)}`.
    pub fn act(&self, sigma: &Permutation, tau: &Permutation) -> Monomial {
        Monomial::from_exponents(
            self.exponents().map(|(v, e)| (VariableIndex::new(sigma.apply(v.i), tau.apply(v.j)), e)),
        )
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exponents().chain(rhs.exponents()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.exponents().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<[usize; 3]> = self.exponents().map(|(v, e)| [v.i, v.j, e as usize]).collect();
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples = Vec::<[usize; 3]>::deserialize(d)?;
        Ok(Monomial::from_exponents(triples.into_iter().map(|[i, j, e]| (VariableIndex::new(i, j), e as u32))))
    }
}

/// Sparse rational polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(i: usize, j: usize) -> Self {
        Polynomial::monomial(Monomial::var(i, j), Rational::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The top-degree homogeneous part `τ(f)`.
    pub fn top_component(&self) -> Polynomial {
        let Some(d) = self.degree() else {
            return Polynomial::zero();
        };
        Polynomial {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// The largest monomial with nonzero coefficient.
    pub fn initial_monomial(&self, spec: &MonomialOrderSpec) -> Option<&Monomial> {
        self.terms.keys().max_by(|a, b| compare(a, b, spec))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(k, v)| (k * m, v.clone())).collect() }
    }

    pub fn act(&self, sigma: &Permutation, tau: &Permutation) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.act(sigma, tau), c.clone());
        }
        out
    }

    /// Substitutes 1 for the variables at `cells` and 0 for all others.
    pub fn evaluate_at_cells(&self, cells: &[(usize, usize)]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            if m.variables().all(|v| cells.contains(&(v.i, v.j))) {
                acc += c;
            }
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a * b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which way the antidiagonal index `i + j` ranks variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalDirection {
    /// `x_{1,1}` is the largest variable; smaller `i + j` means larger.
    #[default]
    Example,
    /// Larger `i + j` means larger.
    Definition,
}

/// Order of variables within one antidiagonal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// Larger row index first: `x_{2,1} > x_{1,2}`.
    #[default]
    HighRowFirst,
    LowRowFirst,
}

/// A diagonal variable order plus the lex/degree-lex choice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialOrderSpec {
    pub direction: DiagonalDirection,
    pub tie_break: TieBreak,
    pub degree_first: bool,
}

impl Default for MonomialOrderSpec {
    fn default() -> Self {
        MonomialOrderSpec { direction: DiagonalDirection::Example, tie_break: TieBreak::HighRowFirst, degree_first: true }
    }
}

impl MonomialOrderSpec {
    pub fn new(direction: DiagonalDirection, tie_break: TieBreak, degree_first: bool) -> Self {
        MonomialOrderSpec { direction, tie_break, degree_first }
    }

    pub fn pure_lex(self) -> Self {
        MonomialOrderSpec { degree_first: false, ..self }
    }

    /// All four diagonal variable orders, degree-compatible.
    pub fn all_diagonal() -> [MonomialOrderSpec; 4] {
        use DiagonalDirection::*;
        use TieBreak::*;
        [(Example, HighRowFirst), (Example, LowRowFirst), (Definition, HighRowFirst), (Definition, LowRowFirst)]
            .map(|(d, t)| MonomialOrderSpec::new(d, t, true))
    }

    /// Larger key means larger variable.
    fn key(&self, v: VariableIndex) -> (i64, i64) {
        let diag = (v.i + v.j) as i64;
        let primary = match self.direction {
            DiagonalDirection::Example => -diag,
            DiagonalDirection::Definition => diag,
        };
        let secondary = match self.tie_break {
            TieBreak::HighRowFirst => v.i as i64,
            TieBreak::LowRowFirst => -(v.i as i64),
        };
        (primary, secondary)
    }

    pub fn compare_variables(&self, a: VariableIndex, b: VariableIndex) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// Compares monomials under `spec`: optionally by degree, then
/// lexicographically reading variables from largest to smallest.
pub fn compare(a: &Monomial, b: &Monomial, spec: &MonomialOrderSpec) -> Ordering {
    if spec.degree_first {
        let by_degree = a.degree().cmp(&b.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
    }
    let mut vars: Vec<VariableIndex> = a.variables().chain(b.variables()).collect();
    vars.sort_unstable_by(|x, y| spec.compare_variables(*y, *x));
    vars.dedup();
    for v in vars {
        let ord = a.exponent(v).cmp(&b.exponent(v));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn all_monomials(n: usize, m: usize, max_deg: u32) -> Vec<Monomial> {
        let vars: Vec<VariableIndex> = (1..=n).flat_map(|i| (1..=m).map(move |j| VariableIndex::new(i, j))).collect();
        let mut out = vec![Monomial::one()];
        let mut frontier = vec![(Monomial::one(), 0usize)];
        for _ in 0..max_deg {
            let mut next = Vec::new();
            for (mono, start) in &frontier {
                for (k, &v) in vars.iter().enumerate().skip(*start) {
                    let grown = mono * &Monomial::from_exponents([(v, 1)]);
                    out.push(grown.clone());
                    next.push((grown, k));
                }
            }
            frontier = next;
        }
        out
    }

    #[test]
    fn monomial_basics() {
        let a = Monomial::from_cells(&[(2, 3), (3, 4)]);
        assert_eq!(a.degree(), 2);
        assert!(a.is_squarefree());
        assert_eq!(a.rook_cells(), Some(vec![(2, 3), (3, 4)]));
        assert_eq!(Monomial::from_cells(&[(1, 1), (1, 2)]).rook_cells(), None);
        let sq = &Monomial::var(1, 1) * &Monomial::var(1, 1);
        assert_eq!(sq.exponent(VariableIndex::new(1, 1)), 2);
        assert!(!sq.is_squarefree());
        assert!(Monomial::var(1, 1).divides(&sq));
        assert_eq!(Monomial::var(1, 1).quotient(&sq), Some(Monomial::var(1, 1)));
        assert!(Monomial::one().is_one());
        let json = serde_json::to_string(&sq).unwrap();
        assert_eq!(json, "[[1,1,2]]");
        assert_eq!(serde_json::from_str::<Monomial>(&json).unwrap(), sq);
    }

    #[test]
    fn example_chain() {
        let spec = MonomialOrderSpec::default();
        let chain = [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)];
        for w in chain.windows(2) {
            let (a, b) = (VariableIndex::new(w[0].0, w[0].1), VariableIndex::new(w[1].0, w[1].1));
            assert_eq!(spec.compare_variables(a, b), Ordering::Greater, "{a} vs {b}");
        }
        let lhs = Monomial::from_cells(&[(1, 1), (2, 2)]);
        let rhs = Monomial::from_cells(&[(2, 1), (1, 2)]);
        assert_eq!(compare(&lhs, &rhs, &spec), Ordering::Greater);
        assert_eq!(compare(&lhs, &rhs, &spec.pure_lex()), Ordering::Greater);
        assert_eq!(compare(&Monomial::one(), &Monomial::var(1, 1), &spec), Ordering::Less);
    }

    #[test]
    fn lex_without_degree() {
        let spec = MonomialOrderSpec::default().pure_lex();
        let big = Monomial::var(1, 1);
        let long = Monomial::from_cells(&[(2, 1), (1, 2), (3, 3)]);
        assert_eq!(compare(&big, &long, &spec), Ordering::Greater);
        assert_eq!(compare(&big, &long, &MonomialOrderSpec::default()), Ordering::Less);
    }

    #[test]
    fn order_axioms_exhaustive() {
        for (n, m) in [(2, 2), (2, 3), (3, 3)] {
            let monos = all_monomials(n, m, 3);
            let small = all_monomials(n, m, 1);
            for spec in MonomialOrderSpec::all_diagonal().into_iter().flat_map(|s| [s, s.pure_lex()]) {
                for a in &monos {
                    assert_ne!(compare(&Monomial::one(), a, &spec), Ordering::Greater);
                    for b in &monos {
                        let ab = compare(a, b, &spec);
                        assert_eq!(ab == Ordering::Equal, a == b);
                        assert_eq!(ab, compare(b, a, &spec).reverse());
                        if a.degree() + b.degree() > 3 {
                            continue;
                        }
                        for c in &small {
                            assert_eq!(compare(&(a * c), &(b * c), &spec), ab);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transitivity_on_sample() {
        let monos = all_monomials(2, 2, 2);
        let spec = MonomialOrderSpec::default();
        let mut sorted = monos.clone();
        sorted.sort_by(|a, b| compare(a, b, &spec));
        for a in 0..sorted.len() {
            for b in a + 1..sorted.len() {
                assert_eq!(compare(&sorted[a], &sorted[b], &spec), Ordering::Less);
            }
        }
    }

    #[test]
    fn polynomial_arithmetic() {
        let x = Polynomial::var(1, 1);
        let y = Polynomial::var(2, 2);
        let one = Polynomial::constant(rational(1));
        let f = &(&x + &y) * &(&x - &one);
        assert_eq!(f.len(), 4);
        assert_eq!(f.degree(), Some(2));
        assert!(!f.is_homogeneous());
        let top = f.top_component();
        assert!(top.is_homogeneous());
        assert_eq!(top.coefficient(&Monomial::from_cells(&[(1, 1), (2, 2)])), rational(1));
        assert!((&f - &f).is_zero());
        assert_eq!(f.evaluate_at_cells(&[(1, 1)]), rational(0));
        assert_eq!(f.evaluate_at_cells(&[(2, 2)]), rational(-1));
        assert_eq!(
            top.initial_monomial(&MonomialOrderSpec::default()),
            Some(&(&Monomial::var(1, 1) * &Monomial::var(1, 1)))
        );
    }

    #[test]
    fn action_on_polynomials() {
        let swap = Permutation::new(vec![2, 1]).unwrap();
        let id = Permutation::identity(2);
        let f = &Polynomial::var(1, 2) + &Polynomial::var(2, 2);
        assert_eq!(f.act(&swap, &id), f);
        assert_eq!(f.act(&id, &swap), &Polynomial::var(1, 1) + &Polynomial::var(2, 1));
    }
}
