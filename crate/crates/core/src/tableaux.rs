//! Column-strict skew tableaux, reading words and the classical
//! Littlewood–Richardson rule.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition, SkewShape};

/// Letter multiplicities: entry `i` counts the letter `i + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Content(Vec<usize>);

impl Content {
    pub fn new(counts: Vec<usize>) -> Self {
        Content(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Alphabet size implied by the content.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of `letter` (1-based).
    pub fn count(&self, letter: usize) -> usize {
        letter
            .checked_sub(1)
            .and_then(|i| self.0.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn padded(&self, n: usize) -> Content {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        Content(v)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Rearranged into a partition.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl From<&Partition> for Content {
    fn from(p: &Partition) -> Self {
        Content(p.parts().to_vec())
    }
}

impl From<Vec<usize>> for Content {
    fn from(v: Vec<usize>) -> Self {
        Content(v)
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn content(&self, alphabet: usize) -> Content {
        let mut counts = vec![0; alphabet.max(self.max_letter())];
        for &l in &self.0 {
            counts[l - 1] += 1;
        }
        Content(counts)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l < 10) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Digits (`4123`) or comma-separated letters (`4,1,12,3`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        match letters {
            Some(l) if l.iter().all(|&x| x > 0) => Ok(Word(l)),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// True when every suffix of `w` has partition content.
pub fn is_lattice(w: &Word) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &l in w.letters().iter().rev() {
        if counts.len() < l {
            counts.resize(l, 0);
        }
        counts[l - 1] += 1;
        if l > 1 && counts[l - 1] > counts[l - 2] {
            return false;
        }
    }
    true
}

/// A column-strict filling of a skew shape. `rows[r]` lists the entries of
/// row `r` (bottom row first) from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::InvalidTableau(format!(
                "{} rows given for shape {shape}",
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(Error::InvalidTableau(format!(
                    "row {r} has {} entries, shape {shape} needs {}",
                    row.len(),
                    shape.row_len(r)
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("letters must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {r} is not weakly increasing"
                )));
            }
        }
        let t = SkewTableau { shape, rows };
        for cell in t.shape.cells() {
            let below = Cell::new(cell.col, cell.row - 1);
            if let (Some(a), Some(b)) = (t.entry(below), t.entry(cell)) {
                if a >= b {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not strictly increasing at row {}",
                        cell.col, cell.row
                    )));
                }
            }
        }
        Ok(t)
    }

    pub(crate) fn from_cell_values(shape: &SkewShape, values: &[usize]) -> Self {
        let mut rows = Vec::with_capacity(shape.num_rows());
        let mut at = 0;
        for r in 0..shape.num_rows() {
            let len = shape.row_len(r);
            rows.push(values[at..at + len].to_vec());
            at += len;
        }
        SkewTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains_cell(cell) {
            return None;
        }
        let r = cell.row as usize;
        let offset = cell.col as usize - self.shape.inner().part(r) - 1;
        self.rows[r].get(offset).copied()
    }

    pub fn content(&self, alphabet: usize) -> Content {
        self.reading_word().content(alphabet)
    }

    pub fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Cells in column reading order: columns left to right, each top to bottom.
    fn reading_cells(&self) -> Vec<Cell> {
        let shape = &self.shape;
        (1..=shape.outer().first() as i64)
            .flat_map(|c| {
                (0..shape.num_rows() as i64)
                    .rev()
                    .map(move |r| Cell::new(c, r))
                    .filter(|&cell| shape.contains_cell(cell))
            })
            .collect()
    }

    pub fn reading_word(&self) -> Word {
        Word(
            self.reading_cells()
                .into_iter()
                .filter_map(|c| self.entry(c))
                .collect(),
        )
    }

    /// Inverse of [`reading_word`](Self::reading_word); fails unless the
    /// result is column-strict.
    pub fn from_reading_word(shape: &SkewShape, word: &Word) -> Result<Self> {
        if word.len() != shape.size() {
            return Err(Error::SizeMismatch(format!(
                "word of length {} for shape of size {}",
                word.len(),
                shape.size()
            )));
        }
        let blank = SkewTableau::from_cell_values(shape, &vec![0; shape.size()]);
        let mut values: HashMap<Cell, usize> = HashMap::new();
        for (cell, &l) in blank.reading_cells().into_iter().zip(word.letters()) {
            values.insert(cell, l);
        }
        let rows = (0..shape.num_rows())
            .map(|r| match shape.row_span(r) {
                Some((a, b)) => (a..=b)
                    .map(|c| values[&Cell::new(c as i64, r as i64)])
                    .collect(),
                None => Vec::new(),
            })
            .collect();
        SkewTableau::from_rows(shape.clone(), rows)
    }
}

/// Relation imposed between a cell and an earlier cell in fill order.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Link {
    /// value > earlier value
    Above(usize),
    /// value < earlier value
    Under(usize),
}

/// Backtracking filler over the cells of a skew shape, bottom row first,
/// left to right. Letters are tried in increasing order, so fillings come
/// out in lexicographic order of their concatenated rows.
pub(crate) struct Filler {
    shape: SkewShape,
    left: Vec<Option<usize>>,
    links: Vec<Vec<Link>>,
}

impl Filler {
    pub(crate) fn new(shape: &SkewShape) -> Self {
        let cells = shape.cells();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let left = cells
            .iter()
            .map(|c| index.get(&Cell::new(c.col - 1, c.row)).copied())
            .collect();
        let links = cells
            .iter()
            .map(|c| {
                index
                    .get(&Cell::new(c.col, c.row - 1))
                    .map(|&j| vec![Link::Above(j)])
                    .unwrap_or_default()
            })
            .collect();
        Filler {
            shape: shape.clone(),
            left,
            links,
        }
    }

    /// Adds the constraint `value(a) < value(b)` between two cells of the shape.
    pub(crate) fn require_less(&mut self, a: Cell, b: Cell) {
        let cells = self.shape.cells();
        let ia = cells.iter().position(|&c| c == a);
        let ib = cells.iter().position(|&c| c == b);
        if let (Some(ia), Some(ib)) = (ia, ib) {
            match ia.cmp(&ib) {
                std::cmp::Ordering::Less => self.links[ib].push(Link::Above(ia)),
                std::cmp::Ordering::Greater => self.links[ia].push(Link::Under(ib)),
                // a cell is never less than itself
                std::cmp::Ordering::Equal => self.links[ia].push(Link::Under(ia)),
            }
        }
    }

    /// Calls `visit` with the cell values of every filling of the given content.
    pub(crate) fn visit<F: FnMut(&[usize])>(&self, content: &Content, mut visit: F) {
        let n = self.left.len();
        if content.total() != n {
            return;
        }
        let mut remaining = content.counts().to_vec();
        let mut values = vec![0usize; n];
        self.fill(0, &mut remaining, &mut values, &mut visit);
    }

    fn fill<F: FnMut(&[usize])>(
        &self,
        i: usize,
        remaining: &mut [usize],
        values: &mut [usize],
        visit: &mut F,
    ) {
        if i == values.len() {
            visit(values);
            return;
        }
        let mut lo = self.left[i].map_or(1, |j| values[j]);
        let mut hi = remaining.len();
        for link in &self.links[i] {
            match *link {
                Link::Above(j) => lo = lo.max(values[j] + 1),
                Link::Under(j) if j == i => return,
                Link::Under(j) => hi = hi.min(values[j].saturating_sub(1)),
            }
        }
        for v in lo..=hi {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            values[i] = v;
            self.fill(i + 1, remaining, values, visit);
            remaining[v - 1] += 1;
        }
    }

    pub(crate) fn shape(&self) -> &SkewShape {
        &self.shape
    }
}

/// All column-strict fillings of `shape` with the given content, in
/// lexicographic order of the rows read bottom to top.
pub fn enumerate_skew_tableaux(shape: &SkewShape, content: &Content) -> Vec<SkewTableau> {
    let filler = Filler::new(shape);
    let mut out = Vec::new();
    filler.visit(content, |v| {
        out.push(SkewTableau::from_cell_values(filler.shape(), v))
    });
    out
}

/// Skew Kostka number `K_{ν/λ, α}`.
pub fn kostka(shape: &SkewShape, content: &Content) -> u64 {
    let mut count = 0;
    Filler::new(shape).visit(content, |_| count += 1);
    count
}

/// `c_{λμ}^ν`: lattice column-strict fillings of `ν/λ` with content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !lambda.is_contained_in(nu) {
        return 0;
    }
    let Ok(shape) = SkewShape::new(nu.clone(), lambda.clone()) else {
        return 0;
    };
    let mut count = 0;
    let filler = Filler::new(&shape);
    filler.visit(&Content::from(mu), |v| {
        let t = SkewTableau::from_cell_values(&shape, v);
        if is_lattice(&t.reading_word()) {
            count += 1;
        }
    });
    count
}
