//! Ribbon tabloids and the signed expansion of the inverse Kostka matrix.
//!
//! A tabloid of shape `μ` tiles the diagram by ribbons that each meet the
//! first column. The ribbon "starting" at first-column row `i` is the one
//! whose topmost first-column cell sits in row `i`; it runs down and to the
//! right from there. Its length is `weight[i]` (zero when no ribbon starts
//! in that row).

use serde::Serialize;

use crate::partitions::{Cell, Partition};
use crate::tableaux::Content;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Ribbon {
    /// First-column row (0-based from the bottom) where the ribbon starts.
    pub start_row: usize,
    /// Cells from the top-left end to the bottom-right end.
    pub cells: Vec<Cell>,
}

impl Ribbon {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Occupied rows minus one.
    pub fn height(&self) -> usize {
        let top = self.cells.iter().map(|c| c.row).max().unwrap_or(0);
        let bottom = self.cells.iter().map(|c| c.row).min().unwrap_or(0);
        (top - bottom) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tabloid {
    shape: Partition,
    weight: Vec<usize>,
    ribbons: Vec<Ribbon>,
}

impl Tabloid {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// One entry per row of the shape.
    pub fn weight(&self) -> Content {
        Content::new(self.weight.clone())
    }

    pub fn ribbons(&self) -> &[Ribbon] {
        &self.ribbons
    }

    pub fn height(&self) -> usize {
        self.ribbons.iter().map(Ribbon::height).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.height().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The weight sorted into a partition.
    pub fn tabloid_type(&self) -> Partition {
        Partition::from_unsorted(self.weight.clone())
    }
}

/// Row lengths covered so far during the bottom-up construction.
#[derive(Clone)]
struct Tiling<'a> {
    shape: &'a Partition,
    covered: Vec<usize>,
}

impl<'a> Tiling<'a> {
    fn new(shape: &'a Partition) -> Self {
        Tiling {
            shape,
            covered: vec![0; shape.len()],
        }
    }

    /// Draws the ribbon of length `len` whose top-left cell is the first cell
    /// of `row`. Each step is forced: go down when the cell below is the next
    /// uncovered cell of its row, otherwise go right. Fails when the ribbon
    /// leaves the shape or the covered region stops being a partition.
    fn place(&mut self, row: usize, len: usize) -> Option<Ribbon> {
        if self.covered[row] != 0 {
            return None;
        }
        let (mut x, mut y) = (0usize, row);
        let mut cells = Vec::with_capacity(len);
        for step in 0..len {
            if x >= self.shape.part(y) || self.covered[y] != x {
                return None;
            }
            cells.push(Cell::new(x as i64 + 1, y as i64));
            self.covered[y] = x + 1;
            if step + 1 == len {
                break;
            }
            if y > 0 && self.covered[y - 1] == x {
                y -= 1;
            } else {
                x += 1;
            }
        }
        if self.covered.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Ribbon {
            start_row: row,
            cells,
        })
    }

    fn is_complete(&self) -> bool {
        self.covered == self.shape.parts()
    }
}

/// The unique tabloid of shape `mu` with weight `beta`, if any.
pub fn weight_to_tabloid(beta: &Content, mu: &Partition) -> Option<Tabloid> {
    let rows = mu.len();
    if beta.counts().iter().skip(rows).any(|&b| b != 0) {
        return None;
    }
    let weight = beta.padded(rows).counts()[..rows].to_vec();
    let mut tiling = Tiling::new(mu);
    let mut ribbons = Vec::new();
    for (row, &len) in weight.iter().enumerate() {
        if len > 0 {
            ribbons.push(tiling.place(row, len)?);
        }
    }
    tiling.is_complete().then(|| Tabloid {
        shape: mu.clone(),
        weight,
        ribbons,
    })
}

/// All tabloids of shape `mu`, ordered by weight, lexicographically decreasing.
pub fn enumerate_tabloids(mu: &Partition) -> Vec<Tabloid> {
    fn rec(
        tiling: &Tiling<'_>,
        row: usize,
        remaining: usize,
        weight: &mut Vec<usize>,
        ribbons: &mut Vec<Ribbon>,
        out: &mut Vec<Tabloid>,
    ) {
        if row == tiling.shape.len() {
            if remaining == 0 && tiling.is_complete() {
                out.push(Tabloid {
                    shape: tiling.shape.clone(),
                    weight: weight.clone(),
                    ribbons: ribbons.clone(),
                });
            }
            return;
        }
        for len in (0..=remaining).rev() {
            let mut next = tiling.clone();
            if len > 0 {
                match next.place(row, len) {
                    Some(r) => ribbons.push(r),
                    None => continue,
                }
            }
            weight.push(len);
            rec(&next, row + 1, remaining - len, weight, ribbons, out);
            weight.pop();
            if len > 0 {
                ribbons.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(
        &Tiling::new(mu),
        0,
        mu.size(),
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// `K⁻¹_{αμ}`: signed count of tabloids of shape `mu` and type `alpha`.
pub fn inverse_kostka(alpha: &Partition, mu: &Partition) -> i64 {
    if alpha.size() != mu.size() {
        return 0;
    }
    enumerate_tabloids(mu)
        .iter()
        .filter(|t| &t.tabloid_type() == alpha)
        .map(Tabloid::sign)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn signed(ts: &[Tabloid]) -> BTreeSet<(i64, Vec<usize>)> {
        ts.iter()
            .map(|t| (t.sign(), t.weight().counts().to_vec()))
            .collect()
    }

    #[test]
    fn shape_321() {
        let ts = enumerate_tabloids(&p(&[3, 2, 1]));
        let expected: BTreeSet<_> = [
            (1, vec![3, 2, 1]),
            (-1, vec![1, 4, 1]),
            (-1, vec![3, 0, 3]),
            (1, vec![1, 0, 5]),
        ]
        .into_iter()
        .collect();
        assert_eq!(ts.len(), 4);
        assert_eq!(signed(&ts), expected);
        let types: BTreeSet<Partition> = ts.iter().map(Tabloid::tabloid_type).collect();
        let want: BTreeSet<Partition> = [p(&[3, 2, 1]), p(&[4, 1, 1]), p(&[3, 3]), p(&[5, 1])]
            .into_iter()
            .collect();
        assert_eq!(types, want);
    }

    #[test]
    fn shape_222() {
        let ts = enumerate_tabloids(&p(&[2, 2, 2]));
        let expected: BTreeSet<_> = [
            (1, vec![2, 2, 2]),
            (-1, vec![2, 1, 3]),
            (-1, vec![1, 3, 2]),
            (1, vec![0, 3, 3]),
            (-1, vec![0, 2, 4]),
            (1, vec![1, 1, 4]),
        ]
        .into_iter()
        .collect();
        assert_eq!(ts.len(), 6);
        assert_eq!(signed(&ts), expected);
    }

    #[test]
    fn single_cell() {
        let ts = enumerate_tabloids(&p(&[1]));
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].weight().counts(), &[1]);
        assert_eq!(ts[0].sign(), 1);
    }

    #[test]
    fn empty_shape_has_empty_tabloid() {
        let ts = enumerate_tabloids(&Partition::empty());
        assert_eq!(ts.len(), 1);
        assert!(ts[0].ribbons().is_empty());
    }

    #[test]
    fn weight_lookup() {
        let t = weight_to_tabloid(&Content::new(vec![1, 4, 1]), &p(&[3, 2, 1])).unwrap();
        assert_eq!(t.sign(), -1);
        assert_eq!(t.ribbons()[1].cells.len(), 4);
        assert_eq!(t.tabloid_type(), p(&[4, 1, 1]));

        assert!(weight_to_tabloid(&Content::new(vec![2, 2, 2]), &p(&[3, 2, 1])).is_none());

        let t = weight_to_tabloid(&Content::new(vec![2, 2, 2]), &p(&[2, 2, 2])).unwrap();
        assert_eq!(t.sign(), 1);
        assert!(t.ribbons().iter().all(|r| r.height() == 0));

        // zero-padded and too-long weights
        assert!(weight_to_tabloid(&Content::new(vec![1, 0, 0]), &p(&[1])).is_some());
        assert!(weight_to_tabloid(&Content::new(vec![1, 0, 1]), &p(&[1])).is_none());
    }

    #[test]
    fn ribbons_have_no_square() {
        for t in enumerate_tabloids(&p(&[4, 3, 3, 1])) {
            for r in t.ribbons() {
                let cells: BTreeSet<Cell> = r.cells.iter().copied().collect();
                for c in &cells {
                    let square = [(1, 0), (0, 1), (1, 1)]
                        .iter()
                        .all(|&(dx, dy)| cells.contains(&Cell::new(c.col + dx, c.row + dy)));
                    assert!(!square);
                }
                assert!(r.cells.iter().any(|c| c.col == 1));
            }
        }
    }

    #[test]
    fn inverse_kostka_examples() {
        assert_eq!(inverse_kostka(&p(&[3, 2, 1]), &p(&[3, 2, 1])), 1);
        assert_eq!(inverse_kostka(&p(&[3, 3]), &p(&[3, 2, 1])), -1);
        // degree two: K = [[1,1],[0,1]] over ((2),(1,1)), inverse [[1,-1],[0,1]]
        assert_eq!(inverse_kostka(&p(&[2]), &p(&[1, 1])), -1);
        assert_eq!(inverse_kostka(&p(&[1, 1]), &p(&[1, 1])), 1);
        assert_eq!(inverse_kostka(&p(&[2]), &p(&[2])), 1);
        assert_eq!(inverse_kostka(&p(&[1, 1]), &p(&[2])), 0);
        assert_eq!(inverse_kostka(&p(&[2]), &p(&[1, 1, 1])), 0);
    }
}
