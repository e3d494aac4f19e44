//! Partitions, skew shapes and the cylinder picture.
//!
//! Diagrams use French convention: row 0 is the bottom row and holds the
//! largest part. Columns of a diagram are 1-based, so row `r` of a skew shape
//! `ν/λ` occupies columns `λ_r + 1 ..= ν_r`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so two partitions compare
/// equal exactly when their nonzero parts agree.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Parts padded with zeros (or truncated) to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self.part(i)).collect()
    }

    pub fn transpose(&self) -> Partition {
        let cols = (1..=self.first())
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(cols)
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Adds `k` columns of height `n`, i.e. `k` to each of the first `n` parts.
    pub fn add_full_columns(&self, n: usize, k: usize) -> Result<Partition> {
        if self.len() > n {
            return Err(Error::SizeMismatch(format!(
                "{self} has more than {n} parts"
            )));
        }
        Partition::new(self.padded(n).into_iter().map(|p| p + k).collect())
    }

    /// Removes `k` columns of height `n`. Fails if fewer than `k` such columns exist.
    pub fn remove_full_columns(&self, n: usize, k: usize) -> Result<Partition> {
        if self.len() > n || self.part(n.saturating_sub(1)) < k || n == 0 {
            return Err(Error::SizeMismatch(format!(
                "{self} does not contain {k} columns of height {n}"
            )));
        }
        Partition::new(self.0.iter().map(|p| p - k).collect())
    }

    /// Folds the parts cyclically onto `period` slots: slot `j` collects
    /// parts `j, j + period, j + 2·period, …`.
    pub fn fold(&self, period: usize) -> Partition {
        let mut slots = vec![0; period];
        for (i, &p) in self.0.iter().enumerate() {
            slots[i % period] += p;
        }
        Partition::from_unsorted(slots)
    }

    /// Compact form used on the command line: `4,2,2` or `-` for empty.
    pub fn compact(&self) -> String {
        if self.0.is_empty() {
            "-".to_string()
        } else {
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// All partitions of `m` with at most `max_len` parts, each at most `max_part`,
    /// in reverse lexicographic order.
    pub fn all_of_size(m: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        fn rec(
            rem: usize,
            max_part: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 || rem > max_part * slots {
                return;
            }
            for p in (1..=max_part.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting in a box of `width` columns and `height` rows.
    pub fn all_in_box(width: usize, height: usize) -> Vec<Partition> {
        (0..=width * height)
            .flat_map(|m| Partition::all_of_size(m, height, width))
            .collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
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
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `-` for the empty partition or comma-separated nonnegative
    /// integers in weakly decreasing order.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Level `ℓ` and rank `n` of the fusion ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FusionContext {
    level: usize,
    rank: usize,
}

/// Membership of a partition in `P^{ℓ,n}` and `R^{ℓ,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub in_p: bool,
    pub in_r: bool,
}

impl FusionContext {
    pub fn new(level: usize, rank: usize) -> Result<Self> {
        if level == 0 || rank == 0 {
            return Err(Error::InvalidContext { level, rank });
        }
        Ok(FusionContext { level, rank })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `ℓ + n`, the width of the fundamental alcove in `β = γ + ρ` coordinates.
    pub fn modulus(&self) -> usize {
        self.level + self.rank
    }

    /// The context with level and rank exchanged.
    pub fn dual(&self) -> FusionContext {
        FusionContext {
            level: self.rank,
            rank: self.level,
        }
    }

    /// `p ∈ P^{ℓ,n}`: at most `n` parts and `p₁ − pₙ ≤ ℓ`.
    pub fn is_weight(&self, p: &Partition) -> bool {
        p.len() <= self.rank && p.first() - p.part(self.rank - 1) <= self.level
    }

    /// `p ∈ R^{ℓ,n}`: `p` fits in the `ℓ × n` box.
    pub fn is_boxed(&self, p: &Partition) -> bool {
        p.len() <= self.rank && p.first() <= self.level
    }

    pub fn classify(&self, p: &Partition) -> Classification {
        Classification {
            in_p: self.is_weight(p),
            in_r: self.is_boxed(p),
        }
    }

    pub(crate) fn require_weight(&self, name: &'static str, p: &Partition) -> Result<()> {
        if self.is_weight(p) {
            Ok(())
        } else {
            Err(Error::Precondition {
                name,
                partition: p.clone(),
                condition: format!("membership in P^{{{},{}}}", self.level, self.rank),
            })
        }
    }

    pub(crate) fn require_boxed(&self, name: &'static str, p: &Partition) -> Result<()> {
        if self.is_boxed(p) {
            Ok(())
        } else {
            Err(Error::Precondition {
                name,
                partition: p.clone(),
                condition: format!("membership in R^{{{},{}}}", self.level, self.rank),
            })
        }
    }

    /// All of `P^{ℓ,n}` of the given size.
    pub fn weights_of_size(&self, m: usize) -> Vec<Partition> {
        Partition::all_of_size(m, self.rank, m)
            .into_iter()
            .filter(|p| self.is_weight(p))
            .collect()
    }
}

/// Complement of `p` in the `ℓ × n` rectangle, rotated back to a partition.
pub fn complement(p: &Partition, ctx: &FusionContext) -> Result<Partition> {
    ctx.require_boxed("λ", p)?;
    let n = ctx.rank();
    Partition::new((0..n).map(|i| ctx.level() - p.part(n - 1 - i)).collect())
}

/// A lattice cell. Columns are 1-based within the base diagram, rows 0-based
/// from the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub col: i64,
    pub row: i64,
}

impl Cell {
    pub fn new(col: i64, row: i64) -> Self {
        Cell { col, row }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `p/∅`.
    pub fn straight(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of rows of the outer shape.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Inclusive column span of row `r`, or `None` when the row is empty.
    pub fn row_span(&self, r: usize) -> Option<(usize, usize)> {
        let (lo, hi) = (self.inner.part(r), self.outer.part(r));
        (hi > lo).then_some((lo + 1, hi))
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    /// Cells in reading order for filling: bottom row first, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.num_rows())
            .flat_map(|r| {
                let (lo, hi) = (self.inner.part(r), self.outer.part(r));
                (lo + 1..=hi).map(move |c| Cell::new(c as i64, r as i64))
            })
            .collect()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        if cell.row < 0 || cell.col < 1 {
            return false;
        }
        let r = cell.row as usize;
        let c = cell.col as usize;
        self.inner.part(r) < c && c <= self.outer.part(r)
    }

    /// Number of cells in column `c` of the diagram.
    pub fn column_height(&self, c: usize) -> usize {
        self.outer.transpose().part(c - 1) - self.inner.transpose().part(c - 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// `ν/λ + shift_{−ℓ,n}(ν/λ)`: the base skew shape together with its translate
/// by `ℓ` columns to the left and `n` rows up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperposedShape {
    cells: BTreeSet<Cell>,
    base: SkewShape,
    context: FusionContext,
}

pub fn superpose(shape: &SkewShape, ctx: &FusionContext) -> Result<SuperposedShape> {
    ctx.require_weight("ν", shape.outer())?;
    let (dx, dy) = (ctx.level() as i64, ctx.rank() as i64);
    let base = shape.cells();
    let cells = base
        .iter()
        .copied()
        .chain(base.iter().map(|c| Cell::new(c.col - dx, c.row + dy)))
        .collect();
    Ok(SuperposedShape {
        cells,
        base: shape.clone(),
        context: *ctx,
    })
}

impl SuperposedShape {
    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn base(&self) -> &SkewShape {
        &self.base
    }

    pub fn context(&self) -> &FusionContext {
        &self.context
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Occupied rows of every nonempty column.
    pub fn columns(&self) -> BTreeMap<i64, BTreeSet<i64>> {
        let mut cols: BTreeMap<i64, BTreeSet<i64>> = BTreeMap::new();
        for c in &self.cells {
            cols.entry(c.col).or_default().insert(c.row);
        }
        cols
    }

    /// Rightmost column `c` (short of the last occupied column) that shares no
    /// row with column `c + 1`.
    pub fn cutting_point(&self) -> Option<i64> {
        let cols = self.columns();
        let last = *cols.keys().next_back()?;
        let empty = BTreeSet::new();
        cols.iter()
            .filter(|(&c, _)| c < last)
            .filter(|(&c, rows)| rows.is_disjoint(cols.get(&(c + 1)).unwrap_or(&empty)))
            .map(|(&c, _)| c)
            .next_back()
    }

    /// Connectivity of the graph whose vertices are the cells and whose edges
    /// join cells sharing a side.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.cells.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let next = Cell::new(c.col + dx, c.row + dy);
                if self.cells.contains(&next) && seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// The cells in columns `(c − ℓ, c]`, translated so the leftmost occupied
    /// column is 1 and the lowest occupied row is 0, read back as `ν̃/λ̃`.
    ///
    /// Returns `None` unless the window holds exactly one copy's worth of
    /// cells arranged as a skew shape.
    pub fn window(&self, c: i64) -> Option<SkewShape> {
        let lo = c - self.context.level() as i64;
        let cells: Vec<Cell> = self
            .cells
            .iter()
            .copied()
            .filter(|cell| lo < cell.col && cell.col <= c)
            .collect();
        if cells.len() != self.base.size() {
            return None;
        }
        if cells.is_empty() {
            return Some(SkewShape::straight(Partition::empty()));
        }
        let min_col = cells.iter().map(|c| c.col).min()?;
        let min_row = cells.iter().map(|c| c.row).min()?;
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for cell in &cells {
            rows.entry((cell.row - min_row) as usize)
                .or_default()
                .push((cell.col - min_col + 1) as usize);
        }
        let height = rows.keys().next_back()? + 1;
        let mut outer = Vec::with_capacity(height);
        let mut inner = Vec::with_capacity(height);
        for r in 0..height {
            let cols = rows.get(&r)?;
            let (a, b) = (*cols.iter().min()?, *cols.iter().max()?);
            if b - a + 1 != cols.len() {
                return None;
            }
            outer.push(b);
            inner.push(a - 1);
        }
        let outer = Partition::new(outer).ok()?;
        let inner = Partition::new(inner).ok()?;
        SkewShape::new(outer, inner).ok()
    }
}

/// Cutting point of `ν/λ + shift_{−ℓ,n}(ν/λ)`, if the superposition is disconnected.
pub fn cutting_point(shape: &SkewShape, ctx: &FusionContext) -> Result<Option<i64>> {
    Ok(superpose(shape, ctx)?.cutting_point())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformCase {
    /// The superposition is disconnected at a cutting point.
    Cut,
    /// `μ` has at most two parts; the window ends at a height-two column.
    Sl2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowTransform {
    pub outer: Partition,
    pub inner: Partition,
    pub case: TransformCase,
    /// Right end of the window, in superposition column coordinates.
    pub column: i64,
}

/// Replaces `ν/λ` by a window of its cylinder on which the fusion coefficient
/// is an ordinary Littlewood–Richardson coefficient `c_{λ̃μ}^{ν̃}`.
///
/// Returns `Ok(None)` when neither a cutting point nor the two-row case applies.
pub fn window_transform(
    shape: &SkewShape,
    mu: &Partition,
    ctx: &FusionContext,
) -> Result<Option<WindowTransform>> {
    ctx.require_boxed("λ", shape.inner())?;
    ctx.require_weight("ν", shape.outer())?;
    if mu.size() != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "|μ| = {} but |ν/λ| = {}",
            mu.size(),
            shape.size()
        )));
    }
    if shape.is_empty() {
        return Ok(Some(WindowTransform {
            outer: shape.outer().clone(),
            inner: shape.inner().clone(),
            case: TransformCase::Cut,
            column: 0,
        }));
    }
    let sup = superpose(shape, ctx)?;
    let make = |c: i64, case| {
        sup.window(c).map(|w| WindowTransform {
            outer: w.outer,
            inner: w.inner,
            case,
            column: c,
        })
    };
    if let Some(c) = sup.cutting_point() {
        return Ok(make(c, TransformCase::Cut));
    }
    if mu.len() <= 2 && ctx.rank() >= 2 {
        let tall = (1..=shape.outer().first())
            .rev()
            .find(|&c| shape.column_height(c) == 2);
        if let Some(c) = tall {
            return Ok(make(c as i64, TransformCase::Sl2));
        }
    }
    Ok(None)
}
