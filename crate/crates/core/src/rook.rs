//! Rook placements, the loci `Z_{n,m,d}` and `UZ_{n,m,r}`, the row/column
//! action, and the extension of a placement to a permutation of
//! `n + m - r` letters whose shadow set lands back on the board.
//!
//! A cell `(i, j)` has `i ∈ [n]` on the horizontal axis and `j ∈ [m]` on the
//! vertical axis, the same convention as permutation diagrams.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{shadow_lines, shadow_set, Permutation, Point, PointSet};
use crate::error::{Error, Result};

/// Board size `n × m` and the minimum rook count `r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LocusParams {
    pub n: usize,
    pub m: usize,
    pub r: usize,
}

impl LocusParams {
    pub fn new(n: usize, m: usize, r: usize) -> Result<Self> {
        if n == 0 || m == 0 || r > n.min(m) {
            return Err(Error::InvalidParams { n, m, r });
        }
        Ok(LocusParams { n, m, r })
    }

    pub fn max_rooks(&self) -> usize {
        self.n.min(self.m)
    }

    /// `n + m - r`, the number of letters of extended permutations.
    pub fn extended_len(&self) -> usize {
        self.n + self.m - self.r
    }

    /// `|UZ_{n,m,r}|` without enumerating.
    pub fn locus_size(&self) -> u128 {
        (self.r..=self.max_rooks()).map(|d| placement_count(self.n, self.m, d)).sum()
    }
}

impl fmt::Display for LocusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, r={})", self.n, self.m, self.r)
    }
}

/// `C(n,d)·C(m,d)·d!`.
pub fn placement_count(n: usize, m: usize, d: usize) -> u128 {
    if d > n.min(m) {
        return 0;
    }
    let binom = |a: usize, b: usize| -> u128 {
        (0..b).fold(1u128, |acc, k| acc * (a - k) as u128 / (k + 1) as u128)
    };
    binom(n, d) * binom(m, d) * (1..=d as u128).product::<u128>()
}

/// A set of non-attacking cells on an `n × m` board, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RookPlacement {
    n: usize,
    m: usize,
    cells: Vec<Point>,
}

impl RookPlacement {
    pub fn new(n: usize, m: usize, mut cells: Vec<Point>) -> Result<Self> {
        cells.sort_unstable();
        if let Some(&(i, j)) = cells.iter().find(|&&(i, j)| i == 0 || i > n || j == 0 || j > m) {
            return Err(Error::InvalidPlacement(format!("cell ({i},{j}) is off the {n}x{m} board")));
        }
        let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
        let cols: BTreeSet<usize> = cells.iter().map(|c| c.1).collect();
        if rows.len() != cells.len() || cols.len() != cells.len() {
            return Err(Error::InvalidPlacement(format!("{cells:?} has two rooks in a line")));
        }
        Ok(RookPlacement { n, m, cells })
    }

    pub fn empty(n: usize, m: usize) -> Self {
        RookPlacement { n, m, cells: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cells(&self) -> &[Point] {
        &self.cells
    }

    /// Number of rooks.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: Point) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    pub fn is_subset_of(&self, other: &RookPlacement) -> bool {
        self.cells.iter().all(|&c| other.contains(c))
    }

    pub fn as_point_set(&self) -> PointSet {
        PointSet::new(self.cells.clone()).expect("rook placements are partial permutations")
    }
}

impl fmt::Display for RookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.cells.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for RookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Z_{n,m,d}`, in lexicographic order of the sorted cell lists.
pub fn enumerate_rook_placements(n: usize, m: usize, d: usize) -> Result<Vec<RookPlacement>> {
    if d > n.min(m) {
        return Err(Error::SizeOutOfRange { d, max: n.min(m) });
    }
    fn go(
        n: usize,
        m: usize,
        left: usize,
        next_row: usize,
        used: &mut [bool],
        cells: &mut Vec<Point>,
        out: &mut Vec<RookPlacement>,
    ) {
        if left == 0 {
            out.push(RookPlacement { n, m, cells: cells.clone() });
            return;
        }
        for i in next_row..=n + 1 - left {
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                used[j] = true;
                cells.push((i, j));
                go(n, m, left - 1, i + 1, used, cells, out);
                cells.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, m, d, 1, &mut vec![false; m + 1], &mut Vec::new(), &mut out);
    Ok(out)
}

/// `UZ_{n,m,r}`: placements of every size from `r` to `min(n, m)`, by size
/// and then lexicographically.
pub fn enumerate_upper_locus(params: LocusParams) -> Vec<RookPlacement> {
    (params.r..=params.max_rooks())
        .flat_map(|d| enumerate_rook_placements(params.n, params.m, d).expect("d in range"))
        .collect()
}

/// Every rook placement on the board, i.e. `UZ_{n,m,0}`.
pub fn all_placements(n: usize, m: usize) -> Vec<RookPlacement> {
    enumerate_upper_locus(LocusParams { n, m, r: 0 })
}

/// `(σ, τ)·R = {(σ(i), τ(j))}`.
pub fn act(sigma: &Permutation, tau: &Permutation, placement: &RookPlacement) -> Result<RookPlacement> {
    if sigma.len() != placement.n || tau.len() != placement.m {
        return Err(Error::SizeMismatch(format!(
            "acting by S_{} x S_{} on a {}x{} board",
            sigma.len(),
            tau.len(),
            placement.n,
            placement.m
        )));
    }
    let mut cells: Vec<Point> =
        placement.cells.iter().map(|&(i, j)| (sigma.apply(i), tau.apply(j))).collect();
    cells.sort_unstable();
    Ok(RookPlacement { n: placement.n, m: placement.m, cells })
}

/// `#{R ∈ locus : (σ, τ)·R = R}`.
pub fn fixed_point_count(sigma: &Permutation, tau: &Permutation, locus: &[RookPlacement]) -> Result<usize> {
    let mut count = 0;
    for placement in locus {
        if act(sigma, tau, placement)? == *placement {
            count += 1;
        }
    }
    Ok(count)
}

/// A coordinate on the extended board: an added line `k̄` or an original
/// index `k`. Every barred label precedes every plain one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum ExtendedBoardLabel {
    Barred(usize),
    Plain(usize),
}

impl ExtendedBoardLabel {
    /// Position on an axis carrying `barred` added lines.
    pub fn position(self, barred: usize) -> usize {
        match self {
            ExtendedBoardLabel::Barred(k) => k,
            ExtendedBoardLabel::Plain(k) => barred + k,
        }
    }
}

impl fmt::Display for ExtendedBoardLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedBoardLabel::Barred(k) => write!(f, "{k}\u{0305}"),
            ExtendedBoardLabel::Plain(k) => write!(f, "{k}"),
        }
    }
}

/// A point of the extended diagram, `(horizontal, vertical)`.
pub type ExtendedPoint = (ExtendedBoardLabel, ExtendedBoardLabel);

fn check_board(placement: &RookPlacement, params: LocusParams) -> Result<()> {
    if placement.n != params.n || placement.m != params.m {
        return Err(Error::SizeMismatch(format!(
            "placement lives on a {}x{} board, parameters are {params}",
            placement.n, placement.m
        )));
    }
    Ok(())
}

/// The points of `EX(R)` in board labels: the rooks of `R`, the diagonal
/// `(k̄, k̄)` for `k <= |R| - r`, then the empty rows matched in increasing
/// order to the next barred columns and the empty columns matched in
/// increasing order to the next barred rows.
pub fn extension_points(placement: &RookPlacement, params: LocusParams) -> Result<Vec<ExtendedPoint>> {
    use ExtendedBoardLabel::{Barred, Plain};
    check_board(placement, params)?;
    let size = placement.size();
    if size < params.r {
        return Err(Error::TooFewRooks { size, r: params.r });
    }
    let surplus = size - params.r;
    let mut points: Vec<ExtendedPoint> = (1..=surplus).map(|k| (Barred(k), Barred(k))).collect();

    let used_x: BTreeSet<usize> = placement.cells.iter().map(|c| c.0).collect();
    let used_y: BTreeSet<usize> = placement.cells.iter().map(|c| c.1).collect();
    let empty_y = (1..=params.m).filter(|j| !used_y.contains(j));
    points.extend(empty_y.enumerate().map(|(l, j)| (Barred(surplus + l + 1), Plain(j))));
    let empty_x = (1..=params.n).filter(|i| !used_x.contains(i));
    points.extend(empty_x.enumerate().map(|(k, i)| (Plain(i), Barred(surplus + k + 1))));

    points.extend(placement.cells.iter().map(|&(i, j)| (Plain(i), Plain(j))));
    points.sort_unstable();
    Ok(points)
}

/// `EX(R) ∈ S_{n+m-r}`: the extended diagram relabelled so that the `m - r`
/// added columns come first horizontally and the `n - r` added rows come
/// first vertically.
pub fn extend_to_permutation(placement: &RookPlacement, params: LocusParams) -> Result<Permutation> {
    let points = extension_points(placement, params)?;
    let (h_bar, v_bar) = (params.m - params.r, params.n - params.r);
    let mut images = vec![0; params.extended_len()];
    for (x, y) in points {
        images[x.position(h_bar) - 1] = y.position(v_bar);
    }
    Ok(Permutation::new(images).expect("extension is a permutation"))
}

/// `ES(R)`: the shadow set of `EX(R)`, which always lies in the original
/// `n × m` region of the extended board.
pub fn extended_shadow_set(placement: &RookPlacement, params: LocusParams) -> Result<RookPlacement> {
    let w = extend_to_permutation(placement, params)?;
    let (h_bar, v_bar) = (params.m - params.r, params.n - params.r);
    let cells = shadow_set(&w.diagram())
        .points()
        .iter()
        .map(|&(x, y)| {
            assert!(
                x > h_bar && y > v_bar,
                "shadow corner ({x},{y}) of EX({placement}) left the original board for {params}"
            );
            (x - h_bar, y - v_bar)
        })
        .collect();
    Ok(RookPlacement::new(params.n, params.m, cells).expect("extended shadow set is a placement"))
}

/// The `(x_i)`, `(y_j)` sequences over `{-1, 0, 1}` read off the shadow
/// lines of a placement.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LatticeProfile {
    pub xs: Vec<i8>,
    pub ys: Vec<i8>,
}

impl LatticeProfile {
    pub fn max_prefix_x(&self) -> i64 {
        max_prefix(&self.xs)
    }

    pub fn max_prefix_y(&self) -> i64 {
        max_prefix(&self.ys)
    }
}

fn max_prefix(seq: &[i8]) -> i64 {
    seq.iter()
        .scan(0i64, |acc, &s| {
            *acc += s as i64;
            Some(*acc)
        })
        .max()
        .unwrap_or(0)
}

/// `x_i = 1` if some shadow line of `R` has its vertical ray at `x = i`,
/// `-1` if column `i` holds no rook, `0` otherwise; `y_j` likewise with
/// horizontal rays.
pub fn profile(placement: &RookPlacement) -> LatticeProfile {
    let lines = shadow_lines(&placement.as_point_set());
    let mut xs = vec![-1i8; placement.n];
    let mut ys = vec![-1i8; placement.m];
    for &(i, j) in &placement.cells {
        xs[i - 1] = 0;
        ys[j - 1] = 0;
    }
    for line in &lines {
        xs[line.vertical_ray_x - 1] = 1;
        ys[line.horizontal_ray_y - 1] = 1;
    }
    LatticeProfile { xs, ys }
}

/// Whether `R = ES(R̃)` for some `R̃ ∈ UZ_{n,m,r}`, decided by the prefix
/// sums of [`profile`]: every prefix of `xs` is at most `m - r` and every
/// prefix of `ys` at most `n - r`.
pub fn is_extended_shadow_set(placement: &RookPlacement, params: LocusParams) -> Result<bool> {
    check_board(placement, params)?;
    let prof = profile(placement);
    Ok(prof.max_prefix_x() <= (params.m - params.r) as i64
        && prof.max_prefix_y() <= (params.n - params.r) as i64)
}
