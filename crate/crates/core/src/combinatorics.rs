//! Partitions, permutations, standard tableaux and the two faces of the
//! Schensted correspondence: row insertion and Viennot's shadow lines.
//!
//! Points of a diagram are `(x, y)` pairs with `x` on the horizontal axis and
//! `y` on the vertical one; the diagram of `w` is `{(i, w(i))}`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice point `(x, y)`.
pub type Point = (usize, usize);

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`; empty when `k == 0`.
    pub fn row(k: usize) -> Self {
        Partition::from_unsorted(vec![k])
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-indexed, with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `λ₁`, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// Multiplicities `m_i` of each part size `i` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.first() + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of shape `λ`, by the hook length formula.
pub fn syt_count(shape: &Partition) -> u64 {
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
            hooks *= BigUint::from(hook);
        }
    }
    let fact: BigUint = (1..=shape.size()).map(BigUint::from).product();
    (fact / hooks).to_u64().expect("tableau count fits in u64")
}

/// A permutation of `1..=N` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `[n, n-1, ..., 1]`.
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    /// Canonical representative of the conjugacy class with cycle type
    /// `cycle_type`: cycles in the given (decreasing) order on consecutive
    /// letters, e.g. `(3,1)` gives `(1 2 3)(4)`.
    pub fn class_representative(cycle_type: &Partition) -> Self {
        let mut images = Vec::with_capacity(cycle_type.size());
        let mut start = 1;
        for &len in cycle_type.parts() {
            for k in 0..len {
                images.push(if k + 1 == len { start } else { start + k + 1 });
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 <= i <= N`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch(format!(
                "composing permutations of {} and {} letters",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.len()];
        let mut lens = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] - 1;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// The diagram `{(i, w(i))}`.
    pub fn diagram(&self) -> PointSet {
        PointSet {
            points: self.images.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect(),
        }
    }

    /// Every permutation of `1..=n`, in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=n).collect()) }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lexicographic iterator over `S_n`.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { images: current })
    }
}

/// A standard Young tableau, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Checks row/column strictness and that row lengths form a partition.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(Error::InvalidTableau("rows must strictly increase".into()));
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau("columns must strictly increase".into()));
            }
        }
        let entries: BTreeSet<usize> = rows.iter().flatten().copied().collect();
        if entries.len() != rows.iter().map(Vec::len).sum::<usize>() {
            return Err(Error::InvalidTableau("repeated entry".into()));
        }
        Ok(StandardTableau { rows })
    }

    /// Like [`StandardTableau::new`], additionally requiring the entries to be
    /// exactly `content`.
    pub fn with_content(rows: Vec<Vec<usize>>, content: &BTreeSet<usize>) -> Result<Self> {
        let t = StandardTableau::new(rows)?;
        if &t.entries() != content {
            return Err(Error::InvalidTableau("entries differ from the declared content".into()));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn entries(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// The image `(P, Q)` of a permutation under the Schensted correspondence.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TableauPair {
    pub p: StandardTableau,
    pub q: StandardTableau,
}

impl TableauPair {
    pub fn new(p: StandardTableau, q: StandardTableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::InvalidTableau(format!(
                "P has shape {} but Q has shape {}",
                p.shape(),
                q.shape()
            )));
        }
        Ok(TableauPair { p, q })
    }

    pub fn shape(&self) -> Partition {
        self.p.shape()
    }
}

/// A partial permutation matrix: points with pairwise distinct `x` and
/// pairwise distinct `y` coordinates. Points are kept sorted by `x`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        points.sort_unstable();
        let xs: BTreeSet<usize> = points.iter().map(|p| p.0).collect();
        let ys: BTreeSet<usize> = points.iter().map(|p| p.1).collect();
        if xs.len() != points.len() || ys.len() != points.len() {
            return Err(Error::InvalidPointSet(format!("{points:?} repeats a coordinate")));
        }
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search(&p).is_ok()
    }
}

impl TryFrom<Vec<Point>> for PointSet {
    type Error = Error;
    fn try_from(points: Vec<Point>) -> Result<Self> {
        PointSet::new(points)
    }
}

impl From<PointSet> for Vec<Point> {
    fn from(ps: PointSet) -> Self {
        ps.points
    }
}

/// One shadow line: the input points lying on it (its south-west turning
/// points, read left to right with `x` increasing and `y` decreasing), the
/// north-east corners between consecutive points, and the two infinite rays.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ShadowLine {
    pub points: Vec<Point>,
    pub ne_corners: Vec<Point>,
    pub vertical_ray_x: usize,
    pub horizontal_ray_y: usize,
}

impl ShadowLine {
    fn from_points(points: Vec<Point>) -> Self {
        let ne_corners = points.windows(2).map(|w| (w[1].0, w[0].1)).collect();
        let vertical_ray_x = points[0].0;
        let horizontal_ray_y = points[points.len() - 1].1;
        ShadowLine { points, ne_corners, vertical_ray_x, horizontal_ray_y }
    }
}

/// The shadow lines `L_1, L_2, ...` of a point set, in construction order.
///
/// A point lies on `L_t` exactly when the longest chain of points strictly
/// south-west of it, ending at it, has length `t`; sweeping by `x` and
/// placing each point on the first line whose current lowest `y` exceeds its
/// own computes this in `O(k log k)`.
pub fn shadow_lines(ps: &PointSet) -> Vec<ShadowLine> {
    let mut lines: Vec<Vec<Point>> = Vec::new();
    let mut tails: Vec<usize> = Vec::new();
    for &(x, y) in ps.points() {
        let t = tails.partition_point(|&ty| ty < y);
        if t == lines.len() {
            lines.push(vec![(x, y)]);
            tails.push(y);
        } else {
            lines[t].push((x, y));
            tails[t] = y;
        }
    }
    lines.into_iter().map(ShadowLine::from_points).collect()
}

fn corners_of(lines: &[ShadowLine]) -> PointSet {
    let points = lines.iter().flat_map(|l| l.ne_corners.iter().copied()).collect();
    PointSet::new(points).expect("north-east corners of shadow lines form a partial permutation")
}

/// The shadow set: all north-east corners of the shadow lines.
pub fn shadow_set(ps: &PointSet) -> PointSet {
    corners_of(&shadow_lines(ps))
}

/// Length of the longest increasing subsequence.
pub fn lis(w: &Permutation) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &v in w.images() {
        let k = tails.partition_point(|&t| t < v);
        if k == tails.len() {
            tails.push(v);
        } else {
            tails[k] = v;
        }
    }
    tails.len()
}

/// Schensted's correspondence computed geometrically: row `i` of `P` holds
/// the horizontal rays and row `i` of `Q` the vertical rays of the shadow
/// lines of the `(i-1)`-fold iterated shadow set.
pub fn rsk_viennot(w: &Permutation) -> TableauPair {
    let mut p_rows = Vec::new();
    let mut q_rows = Vec::new();
    let mut ps = w.diagram();
    while !ps.is_empty() {
        let lines = shadow_lines(&ps);
        let mut p_row: Vec<usize> = lines.iter().map(|l| l.horizontal_ray_y).collect();
        let mut q_row: Vec<usize> = lines.iter().map(|l| l.vertical_ray_x).collect();
        p_row.sort_unstable();
        q_row.sort_unstable();
        p_rows.push(p_row);
        q_rows.push(q_row);
        ps = corners_of(&lines);
    }
    let p = StandardTableau::new(p_rows).expect("shadow construction yields a standard tableau");
    let q = StandardTableau::new(q_rows).expect("shadow construction yields a standard tableau");
    TableauPair::new(p, q).expect("P and Q share a shape")
}

/// Schensted row insertion.
pub fn rsk_insert(w: &Permutation) -> TableauPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &v) in w.images().iter().enumerate() {
        let mut bumped = v;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![bumped]);
                q.push(vec![step + 1]);
                break;
            }
            let pos = p[row].partition_point(|&e| e < bumped);
            if pos == p[row].len() {
                p[row].push(bumped);
                q[row].push(step + 1);
                break;
            }
            bumped = std::mem::replace(&mut p[row][pos], bumped);
            row += 1;
        }
    }
    let p = StandardTableau::new(p).expect("row insertion yields a standard tableau");
    let q = StandardTableau::new(q).expect("recording tableau is standard");
    TableauPair::new(p, q).expect("P and Q share a shape")
}
