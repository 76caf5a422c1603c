//! The ideal `I_{n,m,r}`, evaluation on rook loci, and the graded quotient
//! `C[x]/gr I(locus)`.
//!
//! The standard-monomial oracle scans only squarefree monomials supported on
//! rook placements. This loses nothing: on a 0/1 locus `x^2` and `x` take the
//! same values, so a monomial with a repeated variable evaluates like its
//! support, which has strictly smaller degree and was scanned earlier under
//! a degree-compatible order; two variables in one row or column never both
//! equal 1 on a rook placement, so such a monomial evaluates to zero. Either
//! way the evaluation vector is already in the span of earlier candidates.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::combinatorics::{lis, Permutation};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Rational, RowReducer};
use crate::poly::{compare, Monomial, MonomialOrderSpec, Polynomial, VariableIndex};
use crate::rook::{
    all_placements, enumerate_upper_locus, extend_to_permutation, extended_shadow_set, LocusParams,
    RookPlacement,
};

/// `m(R)`: the product of `x_{i,j}` over the cells of `R`.
pub fn monomial_of(placement: &RookPlacement) -> Monomial {
    Monomial::from_cells(placement.cells())
}

/// `es(R) = m(ES(R))`.
pub fn shadow_monomial(placement: &RookPlacement, params: LocusParams) -> Result<Monomial> {
    Ok(monomial_of(&extended_shadow_set(placement, params)?))
}

fn row_sum(i: usize, m: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    for j in 1..=m {
        p.add_term(Monomial::var(i, j), Rational::one());
    }
    p
}

fn column_sum(j: usize, n: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    for i in 1..=n {
        p.add_term(Monomial::var(i, j), Rational::one());
    }
    p
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn product(factors: impl IntoIterator<Item = Polynomial>) -> Polynomial {
    factors.into_iter().fold(Polynomial::constant(Rational::one()), |acc, f| &acc * &f)
}

/// Same-row products `x_{i,j} x_{i,j'}` and same-column products
/// `x_{i,j} x_{i',j}`, squares included.
pub fn quadratic_generators(n: usize, m: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=m {
            for j2 in j..=m {
                out.push(Polynomial::monomial(&Monomial::var(i, j) * &Monomial::var(i, j2), Rational::one()));
            }
        }
    }
    for j in 1..=m {
        for i in 1..=n {
            for i2 in i + 1..=n {
                out.push(Polynomial::monomial(&Monomial::var(i, j) * &Monomial::var(i2, j), Rational::one()));
            }
        }
    }
    out
}

/// Row-sum subsets of size `n - r + 1` and column-sum subsets of size
/// `m - r + 1`; both families are empty when `r = 0`.
fn sum_subsets(params: LocusParams) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    if params.r == 0 {
        return (Vec::new(), Vec::new());
    }
    (subsets(params.n, params.n - params.r + 1), subsets(params.m, params.m - params.r + 1))
}

/// Generators of `I_{n,m,r}`: the quadratic generators, then products of
/// `n - r + 1` distinct row sums, then products of `m - r + 1` distinct
/// column sums.
pub fn ideal_generators(params: LocusParams) -> Vec<Polynomial> {
    let (n, m) = (params.n, params.m);
    let (row_sets, col_sets) = sum_subsets(params);
    let mut out = quadratic_generators(n, m);
    out.extend(row_sets.iter().map(|s| product(s.iter().map(|&i| row_sum(i, m)))));
    out.extend(col_sets.iter().map(|s| product(s.iter().map(|&j| column_sum(j, n)))));
    out
}

/// Inhomogeneous polynomials vanishing on `UZ_{n,m,r}` whose top components
/// are the generators, listed in the same order as [`ideal_generators`].
pub fn vanishing_witnesses(params: LocusParams) -> Vec<Polynomial> {
    let (n, m) = (params.n, params.m);
    let one = Polynomial::constant(Rational::one());
    let (row_sets, col_sets) = sum_subsets(params);
    // x^2 - x vanishes on 0/1 points; other quadratic generators already do
    let mut out: Vec<Polynomial> = quadratic_generators(n, m)
        .into_iter()
        .map(|g| {
            let square = g.terms().next().expect("one term").0.exponents().find(|&(_, e)| e == 2);
            match square {
                Some((v, _)) => &g - &Polynomial::var(v.i, v.j),
                None => g,
            }
        })
        .collect();
    out.extend(row_sets.iter().map(|s| product(s.iter().map(|&i| &row_sum(i, m) - &one))));
    out.extend(col_sets.iter().map(|s| product(s.iter().map(|&j| &column_sum(j, n) - &one))));
    out
}

/// `f` at the 0/1 matrix of `R`.
pub fn evaluate(f: &Polynomial, placement: &RookPlacement) -> Result<Rational> {
    for (mono, _) in f.terms() {
        if let Some(v) = mono.variables().find(|v| v.i > placement.n() || v.j > placement.m()) {
            return Err(Error::SizeMismatch(format!(
                "variable {v} outside the {}x{} board",
                placement.n(),
                placement.m()
            )));
        }
    }
    Ok(f.evaluate_at_cells(placement.cells()))
}

fn monomial_eval(mono: &Monomial, locus: &[RookPlacement]) -> Vec<Rational> {
    locus
        .iter()
        .map(|p| {
            if mono.variables().all(|v| p.contains((v.i, v.j))) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// The vector `(f(z))_{z ∈ locus}`.
pub fn evaluation_vector(f: &Polynomial, locus: &[RookPlacement]) -> Vec<Rational> {
    locus.iter().map(|p| f.evaluate_at_cells(p.cells())).collect()
}

fn board_of(locus: &[RookPlacement]) -> Result<(usize, usize)> {
    let first = locus.first().ok_or(Error::EmptyLocus)?;
    let (n, m) = (first.n(), first.m());
    if locus.iter().any(|p| p.n() != n || p.m() != m) {
        return Err(Error::SizeMismatch("locus mixes board sizes".into()));
    }
    Ok((n, m))
}

fn sorted_rook_monomials(n: usize, m: usize, spec: &MonomialOrderSpec) -> Vec<Monomial> {
    let mut candidates: Vec<Monomial> = all_placements(n, m).iter().map(monomial_of).collect();
    candidates.sort_by(|a, b| compare(a, b, spec));
    candidates
}

/// Standard monomials of `gr I(locus)` in increasing order, found by the
/// greedy rank scan described in the module docs.
pub fn standard_monomials(locus: &[RookPlacement], spec: &MonomialOrderSpec) -> Result<Vec<Monomial>> {
    if !spec.degree_first {
        return Err(Error::NotDegreeCompatible);
    }
    let (n, m) = board_of(locus)?;
    let mut reducer = RowReducer::new(locus.len());
    let mut basis = Vec::with_capacity(locus.len());
    for cand in sorted_rook_monomials(n, m, spec) {
        if reducer.insert(monomial_eval(&cand, locus)) {
            basis.push(cand);
            if basis.len() == locus.len() {
                break;
            }
        }
    }
    assert_eq!(basis.len(), locus.len(), "rook monomials always separate a rook locus");
    Ok(basis)
}

/// Precomputed spans of evaluation vectors of monomials of degree `< d`, for
/// repeated membership tests in `gr I(locus)`.
pub struct GradedMembershipOracle {
    locus: Vec<RookPlacement>,
    /// `below[d]` spans the evaluations of all monomials of degree `< d`.
    below: Vec<RowReducer>,
}

impl GradedMembershipOracle {
    pub fn new(locus: &[RookPlacement]) -> Result<Self> {
        let (n, m) = board_of(locus)?;
        let top = n.min(m);
        let mut by_degree: Vec<Vec<RookPlacement>> = vec![Vec::new(); top + 1];
        for p in all_placements(n, m) {
            by_degree[p.size()].push(p);
        }
        let mut reducer = RowReducer::new(locus.len());
        let mut below = vec![reducer.clone()];
        for group in &by_degree {
            for p in group {
                reducer.insert(monomial_eval(&monomial_of(p), locus));
            }
            below.push(reducer.clone());
        }
        Ok(GradedMembershipOracle { locus: locus.to_vec(), below })
    }

    /// Whether the homogeneous polynomial `f` lies in `gr I(locus)`.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let Some(d) = f.degree() else {
            return Ok(true);
        };
        let span = &self.below[(d as usize).min(self.below.len() - 1)];
        Ok(span.contains(&evaluation_vector(f, &self.locus)))
    }
}

/// Whether the homogeneous `f` of degree `d` lies in `gr I(locus)`: its
/// evaluation vector is a combination of evaluations of lower-degree
/// monomials.
pub fn graded_ideal_membership(f: &Polynomial, locus: &[RookPlacement]) -> Result<bool> {
    GradedMembershipOracle::new(locus)?.contains(f)
}

fn monomials_of_degree(n: usize, m: usize, d: usize) -> Vec<Monomial> {
    let vars: Vec<VariableIndex> = (1..=n).flat_map(|i| (1..=m).map(move |j| VariableIndex::new(i, j))).collect();
    fn go(vars: &[VariableIndex], start: usize, left: usize, cur: &mut Vec<VariableIndex>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_exponents(cur.iter().map(|&v| (v, 1))));
            return;
        }
        for k in start..vars.len() {
            cur.push(vars[k]);
            go(vars, k, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&vars, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Number of monomials of degree `d` in `n·m` variables.
pub fn total_monomials(n: usize, m: usize, d: usize) -> u128 {
    let vars = (n * m) as u128;
    (0..d as u128).fold(1u128, |acc, k| acc * (vars + k) / (k + 1))
}

/// `dim_C` of the degree-`d` part of the ideal generated by homogeneous
/// `gens` in `C[x_{n×m}]`.
///
/// Single-term generators span exactly the monomials they divide; the rest
/// are multiplied out, reduced modulo those monomials, and ranked.
pub fn ideal_degree_dimension(gens: &[Polynomial], d: usize, n: usize, m: usize) -> Result<usize> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let monomial_gens: Vec<&Monomial> =
        gens.iter().filter(|g| g.len() == 1).map(|g| g.terms().next().expect("one term").0).collect();
    let in_monomial_ideal = |mono: &Monomial| monomial_gens.iter().any(|g| g.divides(mono));

    let all = monomials_of_degree(n, m, d);
    let (covered, rest): (Vec<Monomial>, Vec<Monomial>) = all.into_iter().partition(|x| in_monomial_ideal(x));
    let index: HashMap<Monomial, usize> = rest.into_iter().enumerate().map(|(k, x)| (x, k)).collect();

    let mut reducer = RowReducer::new(index.len());
    for g in gens.iter().filter(|g| g.len() > 1) {
        let e = g.degree().expect("nonzero") as usize;
        if e > d {
            continue;
        }
        for mult in monomials_of_degree(n, m, d - e) {
            if reducer.rank() == index.len() {
                break;
            }
            if in_monomial_ideal(&mult) {
                continue;
            }
            let mut v = vec![Rational::zero(); index.len()];
            let mut nonzero = false;
            for (mono, c) in g.terms() {
                if let Some(&k) = index.get(&(mono * &mult)) {
                    v[k] += c;
                    nonzero = true;
                }
            }
            if nonzero {
                reducer.insert(v);
            }
        }
    }
    Ok(covered.len() + reducer.rank())
}

/// `C[x]/gr I(locus)` with its standard monomial basis and the exact
/// expansion of every rook monomial in that basis.
pub struct GradedQuotientModel {
    n: usize,
    m: usize,
    spec: MonomialOrderSpec,
    locus: Vec<RookPlacement>,
    basis: Vec<Monomial>,
    basis_index: HashMap<Monomial, usize>,
    evaluation: ExactMatrix,
    expansions: HashMap<Monomial, Vec<Rational>>,
}

impl GradedQuotientModel {
    pub fn for_params(params: LocusParams, spec: &MonomialOrderSpec) -> Result<Self> {
        Self::from_locus(&enumerate_upper_locus(params), spec)
    }

    pub fn from_locus(locus: &[RookPlacement], spec: &MonomialOrderSpec) -> Result<Self> {
        let (n, m) = board_of(locus)?;
        let basis = standard_monomials(locus, spec)?;
        let size = locus.len();
        let mut evaluation = ExactMatrix::zeros(size, size);
        for (col, b) in basis.iter().enumerate() {
            for (row, value) in monomial_eval(b, locus).into_iter().enumerate() {
                evaluation.set(row, col, value);
            }
        }
        let inverse = evaluation.inverse().expect("standard monomials separate the locus");

        // E·c = eval(m(R')) and eval(m(R'))[z] = [R' ⊆ z], so c is a sum of
        // columns of E^{-1}.
        let mut expansions = HashMap::new();
        for rook in all_placements(n, m) {
            let mut c = vec![Rational::zero(); size];
            for (z, point) in locus.iter().enumerate() {
                if rook.is_subset_of(point) {
                    for (b, slot) in c.iter_mut().enumerate() {
                        let entry = inverse.get(b, z);
                        if !entry.is_zero() {
                            *slot += entry;
                        }
                    }
                }
            }
            expansions.insert(monomial_of(&rook), c);
        }
        let basis_index = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        Ok(GradedQuotientModel { n, m, spec: *spec, locus: locus.to_vec(), basis, basis_index, evaluation, expansions })
    }

    pub fn board(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn spec(&self) -> &MonomialOrderSpec {
        &self.spec
    }

    pub fn locus(&self) -> &[RookPlacement] {
        &self.locus
    }

    /// Standard monomials in increasing order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn evaluation_matrix(&self) -> &ExactMatrix {
        &self.evaluation
    }

    pub fn basis_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().filter(move |b| b.degree() == d)
    }

    /// Full expansion of `eval(mono)` over the basis, all degrees; `None` for
    /// monomials that vanish on every rook placement or repeat a variable.
    pub fn expansion(&self, mono: &Monomial) -> Option<&[Rational]> {
        self.expansions.get(mono).map(Vec::as_slice)
    }

    /// Coefficients over degree-`deg(mono)` standard monomials with
    /// `mono ≡ Σ c_B B` modulo `gr I`.
    pub fn normal_form(&self, mono: &Monomial) -> BTreeMap<Monomial, Rational> {
        let Some(c) = self.expansion(mono) else {
            return BTreeMap::new();
        };
        let d = mono.degree();
        let mut out = BTreeMap::new();
        for (b, coef) in self.basis.iter().zip(c) {
            if coef.is_zero() {
                continue;
            }
            assert!(b.degree() <= d, "{mono} expands onto {b} of higher degree");
            if b.degree() == d {
                out.insert(b.clone(), coef.clone());
            }
        }
        out
    }

    /// Coefficient of the standard monomial `basis_elt` in
    /// `normal_form(mono)`; zero when degrees differ.
    pub fn normal_form_coefficient(&self, mono: &Monomial, basis_elt: &Monomial) -> Rational {
        match (self.expansion(mono), self.basis_index.get(basis_elt)) {
            (Some(c), Some(&k)) if basis_elt.degree() == mono.degree() => c[k].clone(),
            _ => Rational::zero(),
        }
    }

    /// Membership of a homogeneous polynomial in `gr I(locus)`.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (mono, c) in f.terms() {
            for (b, coef) in self.normal_form(mono) {
                *acc.entry(b).or_insert_with(Rational::zero) += coef * c;
            }
        }
        Ok(acc.values().all(Zero::is_zero))
    }

    /// Number of basis elements of each degree.
    pub fn hilbert_series(&self) -> Vec<u64> {
        degree_histogram(self.basis.iter().map(|b| b.degree() as usize))
    }
}

fn degree_histogram(degrees: impl Iterator<Item = usize>) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for d in degrees {
        if out.len() <= d {
            out.resize(d + 1, 0);
        }
        out[d] += 1;
    }
    out
}

/// Hilbert series of `R(UZ_{n,m,r})` from `deg = n + m - r - lis(EX(R))`.
pub fn hilbert_series_via_lis(params: LocusParams) -> Vec<u64> {
    degree_histogram(enumerate_upper_locus(params).iter().map(|p| {
        let w = extend_to_permutation(p, params).expect("locus point has at least r rooks");
        params.extended_len() - lis(&w)
    }))
}

/// Degree histogram of the oracle basis.
pub fn hilbert_series_oracle(locus: &[RookPlacement], spec: &MonomialOrderSpec) -> Result<Vec<u64>> {
    Ok(degree_histogram(standard_monomials(locus, spec)?.iter().map(|b| b.degree() as usize)))
}

/// Which side of `S_n × S_m` a symmetrizer acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Rows,
    Columns,
}

/// `Σ_{w ∈ S_X} w·m(R)` where `S_X` permutes the rows (or columns) in
/// `subset` and fixes the rest.
pub fn symmetrized_monomial(placement: &RookPlacement, subset: &[usize], side: Side) -> Polynomial {
    let size = match side {
        Side::Rows => placement.n(),
        Side::Columns => placement.m(),
    };
    let other = Permutation::identity(match side {
        Side::Rows => placement.m(),
        Side::Columns => placement.n(),
    });
    let base = monomial_of(placement);
    let mut out = Polynomial::zero();
    for w in Permutation::all(subset.len()) {
        let mut images: Vec<usize> = (1..=size).collect();
        for (k, &x) in subset.iter().enumerate() {
            images[x - 1] = subset[w.apply(k + 1) - 1];
        }
        let g = Permutation::new(images).expect("subset permutation");
        let moved = match side {
            Side::Rows => base.act(&g, &other),
            Side::Columns => base.act(&other, &g),
        };
        out.add_term(moved, Rational::one());
    }
    out
}

/// Sizes `p` with `n + m - d - r < p <= bound`.
pub fn symmetrizer_sizes(params: LocusParams, d: usize, bound: usize) -> std::ops::RangeInclusive<usize> {
    let threshold = (params.n + params.m) as i64 - d as i64 - params.r as i64;
    let low = (threshold + 1).max(0) as usize;
    low..=bound
}

/// Sorts monomials increasingly under `spec`.
pub fn sort_monomials(monos: &mut [Monomial], spec: &MonomialOrderSpec) {
    monos.sort_by(|a, b| compare(a, b, spec));
}

pub fn is_sorted(monos: &[Monomial], spec: &MonomialOrderSpec) -> bool {
    monos.windows(2).all(|w| compare(&w[0], &w[1], spec) == Ordering::Less)
}
