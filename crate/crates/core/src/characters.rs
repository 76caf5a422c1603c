//! Symmetric-group characters: Murnaghan–Nakayama tables, Frobenius images
//! of permutation modules and of the graded quotient, symmetrizer
//! annihilation, Kronecker coefficients, and the equivariant log-concavity
//! check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{partitions_of, syt_count, Partition, Permutation};
use crate::error::{Error, Result};
use crate::ideal::GradedQuotientModel;
use crate::linalg::Rational;
use crate::poly::MonomialOrderSpec;
use crate::rook::{fixed_point_count, LocusParams, RookPlacement};
use crate::symfunc::{DoublySchurVector, GradedDoublySchurSeries};

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn centralizer_size(rho: &Partition) -> u64 {
    rho.multiplicities()
        .iter()
        .enumerate()
        .map(|(k, &mult)| (k as u64).pow(mult as u32) * factorial(mult))
        .product()
}

/// Irreducible characters of `S_n`. Rows and columns are both indexed by
/// `partitions_of(n)`: rows by irreducible, columns by cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
}

/// Beta-set of `λ` with `len` beads: `λ_i + len - i`.
fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lambda.part(i) + len - 1 - i).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| b + i + 1 - len).collect())
}

/// `χ^λ(ρ)` by removing rim hooks of the lengths in `rho`, largest first.
fn murnaghan_nakayama(lambda: &Partition, rho: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
    let Some((&k, rest)) = rho.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.clone(), rho.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len();
    let beta = beta_set(lambda, len);
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut moved = beta.clone();
        moved[pos] = b - k;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&from_beta_set(moved), rest, memo);
    }
    memo.insert(key, total);
    total
}

impl CharacterTable {
    pub fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let mut values = Vec::with_capacity(partitions.len());
        // memo keys pair a shape with how many cycles of ρ remain; valid per ρ
        for lambda in &partitions {
            let mut row = Vec::with_capacity(partitions.len());
            for rho in &partitions {
                let mut memo = HashMap::new();
                row.push(murnaghan_nakayama(lambda, rho.parts(), &mut memo));
            }
            values.push(row);
        }
        let class_sizes = partitions.iter().map(|rho| factorial(n) / centralizer_size(rho)).collect();
        Self::from_parts(n, partitions, values, class_sizes)
    }

    fn from_parts(n: usize, partitions: Vec<Partition>, values: Vec<Vec<i64>>, class_sizes: Vec<u64>) -> Self {
        let index = partitions.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        CharacterTable { n, partitions, index, values, class_sizes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        factorial(self.n)
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// `χ^λ(ρ)`; panics if either is not a partition of `n`.
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[rho]]
    }

    pub fn row(&self, lambda_index: usize) -> &[i64] {
        &self.values[lambda_index]
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn class_size(&self, rho: &Partition) -> u64 {
        self.class_sizes[self.index[rho]]
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    /// Class sizes, degrees and row orthogonality.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Cache(format!("table for n = {} fails {what}", self.n)));
        let order = self.order();
        if self.partitions.iter().zip(&self.class_sizes).any(|(rho, &k)| k != order / centralizer_size(rho)) {
            return bad("class sizes");
        }
        let identity = self.index[&Partition::column(self.n)];
        if self.partitions.iter().zip(&self.values).any(|(l, row)| row[identity] != syt_count(l) as i64) {
            return bad("degrees");
        }
        for (a, ra) in self.values.iter().enumerate() {
            for (b, rb) in self.values.iter().enumerate().skip(a) {
                let sum: i128 =
                    (0..ra.len()).map(|c| self.class_sizes[c] as i128 * ra[c] as i128 * rb[c] as i128).sum();
                if sum != if a == b { order as i128 } else { 0 } {
                    return bad("orthogonality");
                }
            }
        }
        Ok(())
    }

    /// `(1/n!) Σ_ρ |K_ρ| f(ρ) χ^λ(ρ)` for every `λ`.
    pub fn decompose(&self, class_function: &[Rational]) -> Vec<Rational> {
        assert_eq!(class_function.len(), self.partitions.len());
        let order = Rational::from_integer(self.order().into());
        (0..self.partitions.len())
            .map(|l| {
                let mut acc = Rational::zero();
                for (c, f) in class_function.iter().enumerate() {
                    let w = self.class_sizes[c] as i64 * self.values[l][c];
                    if w != 0 && !f.is_zero() {
                        acc += f * Rational::from_integer(w.into());
                    }
                }
                acc / &order
            })
            .collect()
    }
}

/// On-disk form of a [`CharacterTable`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CharacterTableRecord {
    pub format_version: u32,
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<i64>>,
}

pub const CHARACTER_TABLE_FORMAT: u32 = 1;

impl From<&CharacterTable> for CharacterTableRecord {
    fn from(t: &CharacterTable) -> Self {
        CharacterTableRecord {
            format_version: CHARACTER_TABLE_FORMAT,
            n: t.n,
            partitions: t.partitions.clone(),
            class_sizes: t.class_sizes.clone(),
            values: t.values.clone(),
        }
    }
}

impl TryFrom<CharacterTableRecord> for CharacterTable {
    type Error = Error;
    fn try_from(rec: CharacterTableRecord) -> Result<Self> {
        let expected = partitions_of(rec.n);
        let k = expected.len();
        if rec.format_version != CHARACTER_TABLE_FORMAT {
            return Err(Error::Cache(format!("format version {} (expected {CHARACTER_TABLE_FORMAT})", rec.format_version)));
        }
        if rec.partitions != expected || rec.class_sizes.len() != k || rec.values.len() != k || rec.values.iter().any(|r| r.len() != k) {
            return Err(Error::Cache(format!("malformed table for n = {}", rec.n)));
        }
        let table = CharacterTable::from_parts(rec.n, rec.partitions, rec.values, rec.class_sizes);
        table.validate()?;
        Ok(table)
    }
}

/// A class function on `S_n × S_m`, indexed by pairs of cycle types in
/// table order.
#[derive(Clone, PartialEq, Debug)]
pub struct ClassFunction2D {
    pub rows: usize,
    pub cols: usize,
    values: Vec<Rational>,
}

impl ClassFunction2D {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ClassFunction2D { rows, cols, values: vec![Rational::zero(); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.values[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.values[r * self.cols + c] = v;
    }
}

/// Multiplicities `c_{λ,μ}` of a class function on `S_n × S_m`.
pub fn decompose_2d(f: &ClassFunction2D, left: &CharacterTable, right: &CharacterTable) -> Result<DoublySchurVector> {
    let (pl, pr) = (left.partitions(), right.partitions());
    assert_eq!((f.rows, f.cols), (pl.len(), pr.len()));
    // decompose along the right factor, then along the left
    let partial: Vec<Vec<Rational>> =
        (0..f.rows).map(|r| right.decompose(&(0..f.cols).map(|c| f.get(r, c).clone()).collect::<Vec<_>>())).collect();
    let mut out = DoublySchurVector::zero();
    for (mu_idx, mu) in pr.iter().enumerate() {
        let column: Vec<Rational> = partial.iter().map(|row| row[mu_idx].clone()).collect();
        for (lambda, c) in pl.iter().zip(left.decompose(&column)) {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return Err(Error::NonIntegerMultiplicity(format!("{c} at ({lambda}, {mu})")));
            }
            if c < Rational::zero() {
                return Err(Error::NegativeMultiplicity(format!("{c} at ({lambda}, {mu})")));
            }
            out.add_term(lambda.clone(), mu.clone(), c);
        }
    }
    Ok(out)
}

/// Frobenius image of the permutation module `C[locus]` computed from
/// fixed-point counts of one representative per class pair.
pub fn frobenius_from_fixed_points(locus: &[RookPlacement], n: usize, m: usize) -> Result<DoublySchurVector> {
    let (left, right) = (CharacterTable::compute(n), CharacterTable::compute(m));
    frobenius_from_fixed_points_with(locus, &left, &right)
}

pub fn frobenius_from_fixed_points_with(
    locus: &[RookPlacement],
    left: &CharacterTable,
    right: &CharacterTable,
) -> Result<DoublySchurVector> {
    let mut f = ClassFunction2D::zeros(left.partitions().len(), right.partitions().len());
    for (r, rho) in left.partitions().iter().enumerate() {
        let sigma = Permutation::class_representative(rho);
        for (c, kappa) in right.partitions().iter().enumerate() {
            let tau = Permutation::class_representative(kappa);
            let fixed = fixed_point_count(&sigma, &tau, locus)?;
            f.set(r, c, Rational::from_integer(fixed.into()));
        }
    }
    decompose_2d(&f, left, right)
}

/// Graded Frobenius image of `C[x]/gr I(UZ)` from traces of class
/// representatives on the standard monomial basis, degree by degree.
pub fn graded_frobenius_oracle(params: LocusParams, spec: &MonomialOrderSpec) -> Result<GradedDoublySchurSeries> {
    let model = GradedQuotientModel::for_params(params, spec)?;
    graded_frobenius_of_model(&model)
}

pub fn graded_frobenius_of_model(model: &GradedQuotientModel) -> Result<GradedDoublySchurSeries> {
    let (n, m) = model.board();
    let (left, right) = (CharacterTable::compute(n), CharacterTable::compute(m));
    let top = model.basis().iter().map(|b| b.degree()).max().unwrap_or(0);
    let reps_left: Vec<Permutation> = left.partitions().iter().map(Permutation::class_representative).collect();
    let reps_right: Vec<Permutation> = right.partitions().iter().map(Permutation::class_representative).collect();
    let mut layers = Vec::new();
    for d in 0..=top {
        let basis: Vec<_> = model.basis_of_degree(d).collect();
        let mut f = ClassFunction2D::zeros(reps_left.len(), reps_right.len());
        for (r, sigma) in reps_left.iter().enumerate() {
            for (c, tau) in reps_right.iter().enumerate() {
                let mut trace = Rational::zero();
                for b in &basis {
                    trace += model.normal_form_coefficient(&b.act(sigma, tau), b);
                }
                f.set(r, c, trace);
            }
        }
        layers.push(decompose_2d(&f, &left, &right)?);
    }
    Ok(GradedDoublySchurSeries::new(n, m, layers))
}

/// `η_j = Σ_{w ∈ S_j} w` kills `V^λ` exactly when `λ_1 < j`.
pub fn symmetrizer_annihilates(lambda: &Partition, j: usize) -> bool {
    lambda.first() < j
}

/// Multiplicity of the trivial character of `S_j` (on the first `j`
/// letters) in `Res χ^λ`, by the inner product over `S_j`-classes
/// embedded as `ρ ∪ 1^{n-j}`.
pub fn trivial_restriction_multiplicity(lambda: &Partition, j: usize, table: &CharacterTable) -> Result<u64> {
    let n = table.n();
    if j > n || lambda.size() != n {
        return Err(Error::SizeMismatch(format!("restricting {lambda} from S_{n} to S_{j}")));
    }
    let mut acc = Rational::zero();
    for rho in partitions_of(j) {
        let mut parts = rho.parts().to_vec();
        parts.extend(std::iter::repeat_n(1, n - j));
        let embedded = Partition::from_unsorted(parts);
        let size_in_sj = factorial(j) / centralizer_size(&rho);
        acc += Rational::from_integer((size_in_sj as i64 * table.value(lambda, &embedded)).into());
    }
    let mult = acc / Rational::from_integer(factorial(j).into());
    if !mult.is_integer() {
        return Err(Error::NonIntegerMultiplicity(mult.to_string()));
    }
    mult.to_integer().to_u64().ok_or_else(|| Error::NegativeMultiplicity(mult.to_string()))
}

/// `g_{λ,ν,α} = (1/n!) Σ_ρ |K_ρ| χ^λ(ρ) χ^ν(ρ) χ^α(ρ)`.
pub fn kronecker(lambda: &Partition, nu: &Partition, alpha: &Partition) -> Result<u64> {
    let n = lambda.size();
    if nu.size() != n || alpha.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda}, {nu}, {alpha} have different sizes")));
    }
    kronecker_with(lambda, nu, alpha, &CharacterTable::compute(n))
}

pub fn kronecker_with(lambda: &Partition, nu: &Partition, alpha: &Partition, table: &CharacterTable) -> Result<u64> {
    let mut acc = BigInt::zero();
    for rho in table.partitions() {
        acc += BigInt::from(table.class_size(rho))
            * table.value(lambda, rho)
            * table.value(nu, rho)
            * table.value(alpha, rho);
    }
    let order = BigInt::from(table.order());
    if !(&acc % &order).is_zero() {
        return Err(Error::NonIntegerMultiplicity(format!("{acc}/{order}")));
    }
    (acc / order).to_u64().ok_or_else(|| Error::NegativeMultiplicity("kronecker".into()))
}

/// One failure of `mult_{α,β}(V_i ⊗ V_i) ≥ mult_{α,β}(V_{i-1} ⊗ V_{i+1})`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LogConcavityViolation {
    pub degree: usize,
    pub alpha: Partition,
    pub beta: Partition,
    pub square_multiplicity: i128,
    pub neighbour_multiplicity: i128,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LogConcavityReport {
    pub n: usize,
    pub m: usize,
    /// Internal degrees `i` that were compared.
    pub checked_degrees: Vec<usize>,
    pub violations: Vec<LogConcavityViolation>,
}

impl LogConcavityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("character arithmetic overflowed i128")
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("character arithmetic overflowed i128")
}

/// Character values `χ_V(ρ, σ)` of a genuine module on all class pairs,
/// computed as `X_nᵀ · C · X_m`.
fn layer_character(layer: &DoublySchurVector, left: &CharacterTable, right: &CharacterTable) -> Result<Vec<Vec<i128>>> {
    let (kl, kr) = (left.partitions().len(), right.partitions().len());
    let mut coeffs = vec![vec![0i128; kr]; kl];
    for ((lambda, mu), c) in layer.terms() {
        if !c.is_integer() || *c < Rational::zero() {
            return Err(Error::NonIntegerMultiplicity(format!("{c} at ({lambda}, {mu})")));
        }
        let li = left.index_of(lambda).ok_or_else(|| Error::SizeMismatch(format!("{lambda} is not a partition of {}", left.n())))?;
        let mi = right.index_of(mu).ok_or_else(|| Error::SizeMismatch(format!("{mu} is not a partition of {}", right.n())))?;
        coeffs[li][mi] = c.to_integer().to_i128().expect("multiplicity fits");
    }
    let mut half = vec![vec![0i128; kr]; kl];
    for l in 0..kl {
        for (mu_idx, &c) in coeffs[l].iter().enumerate() {
            if c == 0 {
                continue;
            }
            for s in 0..kr {
                half[l][s] = checked_add(half[l][s], checked_mul(c, right.row(mu_idx)[s] as i128));
            }
        }
    }
    let mut out = vec![vec![0i128; kr]; kl];
    for rho in 0..kl {
        for l in 0..kl {
            let chi = left.row(l)[rho] as i128;
            if chi == 0 {
                continue;
            }
            for s in 0..kr {
                out[rho][s] = checked_add(out[rho][s], checked_mul(chi, half[l][s]));
            }
        }
    }
    Ok(out)
}

/// Integer multiplicities of a character given on class pairs.
fn decompose_integral(chi: &[Vec<i128>], left: &CharacterTable, right: &CharacterTable) -> Vec<Vec<i128>> {
    let (kl, kr) = (left.partitions().len(), right.partitions().len());
    let order = checked_mul(left.order() as i128, right.order() as i128);
    // t[α][σ] = Σ_ρ |K_ρ| χ(ρ,σ) χ^α(ρ)
    let mut t = vec![vec![0i128; kr]; kl];
    for a in 0..kl {
        for rho in 0..kl {
            let w = checked_mul(left.class_sizes()[rho] as i128, left.row(a)[rho] as i128);
            if w == 0 {
                continue;
            }
            for s in 0..kr {
                t[a][s] = checked_add(t[a][s], checked_mul(w, chi[rho][s]));
            }
        }
    }
    let mut out = vec![vec![0i128; kr]; kl];
    for a in 0..kl {
        for b in 0..kr {
            let mut acc = 0i128;
            for s in 0..kr {
                let w = checked_mul(right.class_sizes()[s] as i128, right.row(b)[s] as i128);
                if w != 0 {
                    acc = checked_add(acc, checked_mul(w, t[a][s]));
                }
            }
            assert_eq!(acc % order, 0, "tensor character decomposed to a non-integer");
            out[a][b] = acc / order;
        }
    }
    out
}

/// Checks `V_i ⊗ V_i ↠ V_{i-1} ⊗ V_{i+1}` for every internal degree of the
/// sequence `V_0, V_1, …, V_N` by comparing multiplicities of every
/// `(α, β)` in the two diagonal tensor products.
pub fn check_equivariant_log_concavity(series: &GradedDoublySchurSeries, n: usize, m: usize) -> Result<LogConcavityReport> {
    check_equivariant_log_concavity_from(series, n, m, 0)
}

/// As [`check_equivariant_log_concavity`] for the subsequence starting at
/// degree `first`.
pub fn check_equivariant_log_concavity_from(
    series: &GradedDoublySchurSeries,
    n: usize,
    m: usize,
    first: usize,
) -> Result<LogConcavityReport> {
    let (left, right) = (CharacterTable::compute(n), CharacterTable::compute(m));
    check_log_concavity_with(series, &left, &right, first)
}

pub fn check_log_concavity_with(
    series: &GradedDoublySchurSeries,
    left: &CharacterTable,
    right: &CharacterTable,
    first: usize,
) -> Result<LogConcavityReport> {
    let (n, m) = (left.n(), right.n());
    let layers = series.layers();
    let mut report = LogConcavityReport { n, m, checked_degrees: Vec::new(), violations: Vec::new() };
    if layers.len() < first + 3 {
        return Ok(report);
    }
    let chars: Vec<Vec<Vec<i128>>> =
        layers.iter().map(|l| layer_character(l, left, right)).collect::<Result<_>>()?;
    let (kl, kr) = (left.partitions().len(), right.partitions().len());
    for i in first + 1..layers.len() - 1 {
        report.checked_degrees.push(i);
        let square: Vec<Vec<i128>> = (0..kl)
            .map(|a| (0..kr).map(|b| checked_mul(chars[i][a][b], chars[i][a][b])).collect())
            .collect();
        let neighbours: Vec<Vec<i128>> = (0..kl)
            .map(|a| (0..kr).map(|b| checked_mul(chars[i - 1][a][b], chars[i + 1][a][b])).collect())
            .collect();
        let sq = decompose_integral(&square, left, right);
        let nb = decompose_integral(&neighbours, left, right);
        for a in 0..kl {
            for b in 0..kr {
                if sq[a][b] < nb[a][b] {
                    report.violations.push(LogConcavityViolation {
                        degree: i,
                        alpha: left.partitions()[a].clone(),
                        beta: right.partitions()[b].clone(),
                        square_multiplicity: sq[a][b],
                        neighbour_multiplicity: nb[a][b],
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rook::{enumerate_rook_placements, enumerate_upper_locus};
    use crate::symfunc::{frob_layer, grfrob_main, SchurVector};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_tables() {
        let t1 = CharacterTable::compute(1);
        assert_eq!(t1.values(), &[vec![1]]);
        let t3 = CharacterTable::compute(3);
        let row: Vec<i64> = [part(&[1, 1, 1]), part(&[2, 1]), part(&[3])]
            .iter()
            .map(|rho| t3.value(&part(&[2, 1]), rho))
            .collect();
        assert_eq!(row, vec![2, 0, -1]);
        assert_eq!(t3.class_size(&part(&[2, 1])), 3);
        let t0 = CharacterTable::compute(0);
        assert_eq!(t0.values(), &[vec![1]]);
    }

    // (n-1,1) is the permutation character minus the trivial one
    #[test]
    fn natural_representation() {
        for n in 2..=6 {
            let t = CharacterTable::compute(n);
            let std = Partition::from_unsorted(vec![n - 1, 1]);
            for rho in partitions_of(n) {
                let fixed = rho.parts().iter().filter(|&&p| p == 1).count() as i64;
                assert_eq!(t.value(&std, &rho), fixed - 1);
                let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(t.value(&Partition::column(n), &rho), sign);
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 0..=8 {
            let t = CharacterTable::compute(n);
            let k = t.partitions().len();
            let order = t.order() as i128;
            for a in 0..k {
                for b in 0..k {
                    let row: i128 = (0..k).map(|c| t.class_sizes()[c] as i128 * t.row(a)[c] as i128 * t.row(b)[c] as i128).sum();
                    assert_eq!(row, if a == b { order } else { 0 });
                    let col: i128 = (0..k).map(|l| t.row(l)[a] as i128 * t.row(l)[b] as i128).sum();
                    let z = centralizer_size(&t.partitions()[a]) as i128;
                    assert_eq!(col, if a == b { z } else { 0 });
                }
            }
            let identity_class = Partition::column(n);
            for lambda in t.partitions() {
                assert_eq!(t.value(lambda, &identity_class) as u64, syt_count(lambda));
            }
        }
    }

    #[test]
    fn fixed_point_frobenius() {
        let empty = [RookPlacement::empty(3, 2)];
        let triv = frobenius_from_fixed_points(&empty, 3, 2).unwrap();
        assert_eq!(triv, SchurVector::h(3).tensor(&SchurVector::h(2)));
        for (n, m) in [(2, 2), (2, 3), (3, 3)] {
            for d in 0..=n.min(m) {
                let z = enumerate_rook_placements(n, m, d).unwrap();
                assert_eq!(frobenius_from_fixed_points(&z, n, m).unwrap(), frob_layer(n, m, d).unwrap());
            }
        }
    }

    #[test]
    fn non_closed_locus_is_rejected() {
        let lopsided = [RookPlacement::new(2, 2, vec![(1, 1)]).unwrap()];
        assert!(matches!(frobenius_from_fixed_points(&lopsided, 2, 2), Err(Error::NonIntegerMultiplicity(_))));
    }

    #[test]
    fn graded_oracle_small() {
        let spec = MonomialOrderSpec::default();
        for p in [(1, 1, 1), (2, 2, 1), (2, 2, 0)] {
            let params = LocusParams::new(p.0, p.1, p.2).unwrap();
            assert_eq!(graded_frobenius_oracle(params, &spec).unwrap(), grfrob_main(params));
        }
        let one = graded_frobenius_oracle(LocusParams::new(1, 1, 1).unwrap(), &spec).unwrap();
        assert_eq!(one.layers(), &[SchurVector::h(1).tensor(&SchurVector::h(1))]);
    }

    #[test]
    fn ungraded_matches_sum_of_layers() {
        let params = LocusParams::new(2, 3, 1).unwrap();
        let got = frobenius_from_fixed_points(&enumerate_upper_locus(params), 2, 3).unwrap();
        assert_eq!(got, grfrob_main(params).ungraded());
    }

    #[test]
    fn symmetrizers() {
        for n in 1..=5 {
            let t = CharacterTable::compute(n);
            for j in 0..=n {
                assert!(!symmetrizer_annihilates(&Partition::row(n), j));
                for lambda in partitions_of(n) {
                    let mult = trivial_restriction_multiplicity(&lambda, j, &t).unwrap();
                    assert_eq!(symmetrizer_annihilates(&lambda, j), mult == 0, "{lambda} j={j}");
                }
            }
            if n >= 2 {
                assert!(symmetrizer_annihilates(&Partition::column(n), 2));
            }
        }
    }

    #[test]
    fn kronecker_values() {
        for n in 1..=5 {
            let t = CharacterTable::compute(n);
            let ps = partitions_of(n);
            for l in &ps {
                assert_eq!(kronecker_with(&Partition::row(n), l, l, &t).unwrap(), 1);
                for v in &ps {
                    for a in &ps {
                        let x = kronecker_with(l, v, a, &t).unwrap();
                        assert_eq!(x, kronecker_with(v, a, l, &t).unwrap());
                        assert_eq!(x, kronecker_with(a, l, v, &t).unwrap());
                    }
                }
            }
            assert_eq!(kronecker(&Partition::column(n), &Partition::column(n), &Partition::row(n)).unwrap(), 1);
        }
        assert!(kronecker(&part(&[2]), &part(&[1]), &part(&[2])).is_err());
    }

    #[test]
    fn log_concavity_basics() {
        let single = GradedDoublySchurSeries::new(2, 2, vec![SchurVector::h(2).tensor(&SchurVector::h(2))]);
        let rep = check_equivariant_log_concavity(&single, 2, 2).unwrap();
        assert!(rep.passed() && rep.checked_degrees.is_empty());

        let triv = SchurVector::h(2).tensor(&SchurVector::h(2));
        let bad = GradedDoublySchurSeries::new(2, 2, vec![triv.clone(), triv.clone(), triv.scale(&Rational::from_integer(3.into()))]);
        let rep = check_equivariant_log_concavity(&bad, 2, 2).unwrap();
        assert!(!rep.passed());
        assert_eq!(rep.violations[0].degree, 1);
        assert_eq!((rep.violations[0].square_multiplicity, rep.violations[0].neighbour_multiplicity), (1, 3));

        for (n, m) in [(2, 2), (3, 3), (3, 4)] {
            for r in 0..=n.min(m) {
                let params = LocusParams::new(n, m, r).unwrap();
                assert!(check_equivariant_log_concavity(&grfrob_main(params), n, m).unwrap().passed());
            }
        }
    }

    #[test]
    fn tensor_square_multiplicities_via_kronecker() {
        // V = s_(2,1) ⊗ s_(2): mult of (α,β) in V⊗V is g(21,21,α)·g(2,2,β)
        let n = 3;
        let v = SchurVector::schur(part(&[2, 1])).tensor(&SchurVector::h(2));
        let (l, r) = (CharacterTable::compute(n), CharacterTable::compute(2));
        let chi = layer_character(&v, &l, &r).unwrap();
        let sq: Vec<Vec<i128>> = chi.iter().map(|row| row.iter().map(|x| x * x).collect()).collect();
        let mult = decompose_integral(&sq, &l, &r);
        for (a, alpha) in l.partitions().iter().enumerate() {
            for (b, beta) in r.partitions().iter().enumerate() {
                let want = kronecker(&part(&[2, 1]), &part(&[2, 1]), alpha).unwrap()
                    * kronecker(&part(&[2]), &part(&[2]), beta).unwrap();
                assert_eq!(mult[a][b], want as i128);
            }
        }
    }
}
