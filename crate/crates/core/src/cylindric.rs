//! Cylindric tableaux: fillings that stay column-strict when superposed with
//! their own translate by `ℓ` columns left and `n` rows up.
//!
//! The two copies share no row, so the only new vertical adjacencies are
//! between base row `n − 1` and the shifted copy's bottom row. Cell `(x, n−1)`
//! sits directly below the shifted image of `(x + ℓ, 0)`, which gives the
//! single condition `t(x, n−1) < t(x+ℓ, 0)` per such pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Cell, FusionContext, Partition, SkewShape};
use crate::tableaux::{Content, Filler, SkewTableau};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CylindricTableau {
    tableau: SkewTableau,
    context: FusionContext,
}

impl CylindricTableau {
    pub fn new(tableau: SkewTableau, ctx: FusionContext) -> Result<Self> {
        let shape = tableau.shape();
        ctx.require_weight("ν", shape.outer())?;
        ctx.require_weight("λ", shape.inner())?;
        if !is_cylindric(&tableau, &ctx) {
            return Err(Error::InvalidTableau(format!(
                "filling is not cylindric at level {} rank {}",
                ctx.level(),
                ctx.rank()
            )));
        }
        Ok(CylindricTableau {
            tableau,
            context: ctx,
        })
    }

    pub fn tableau(&self) -> &SkewTableau {
        &self.tableau
    }

    pub fn context(&self) -> &FusionContext {
        &self.context
    }

    pub fn into_tableau(self) -> SkewTableau {
        self.tableau
    }
}

/// Pairs `(lower, upper)` of base cells whose values must satisfy `lower < upper`.
fn constrained_pairs(shape: &SkewShape, ctx: &FusionContext) -> Vec<(Cell, Cell)> {
    let top = ctx.rank() as i64 - 1;
    let shift = ctx.level() as i64;
    (1..=shape.outer().first() as i64)
        .map(|x| (Cell::new(x, top), Cell::new(x + shift, 0)))
        .filter(|&(a, b)| shape.contains_cell(a) && shape.contains_cell(b))
        .collect()
}

pub fn is_cylindric(t: &SkewTableau, ctx: &FusionContext) -> bool {
    constrained_pairs(t.shape(), ctx)
        .into_iter()
        .all(|(a, b)| match (t.entry(a), t.entry(b)) {
            (Some(x), Some(y)) => x < y,
            _ => true,
        })
}

fn cylindric_filler(shape: &SkewShape, ctx: &FusionContext) -> Result<Filler> {
    ctx.require_weight("ν", shape.outer())?;
    ctx.require_weight("λ", shape.inner())?;
    let mut filler = Filler::new(shape);
    for (a, b) in constrained_pairs(shape, ctx) {
        filler.require_less(a, b);
    }
    Ok(filler)
}

/// All cylindric tableaux of the given shape and content, in the same order
/// as [`enumerate_skew_tableaux`](crate::tableaux::enumerate_skew_tableaux).
pub fn enumerate_cylindric(
    shape: &SkewShape,
    content: &Content,
    ctx: &FusionContext,
) -> Result<Vec<CylindricTableau>> {
    let filler = cylindric_filler(shape, ctx)?;
    let mut out = Vec::new();
    filler.visit(content, |v| {
        out.push(CylindricTableau {
            tableau: SkewTableau::from_cell_values(shape, v),
            context: *ctx,
        })
    });
    Ok(out)
}

/// `K^{cyc}_{ν/λ, α}`.
pub fn cylindric_kostka(shape: &SkewShape, content: &Content, ctx: &FusionContext) -> Result<u64> {
    let filler = cylindric_filler(shape, ctx)?;
    let mut count = 0;
    filler.visit(content, |_| count += 1);
    Ok(count)
}

/// Terms `ν` of `h_r · s_λ` in the fusion ring: horizontal `r`-strips `ν/λ`
/// with `ν ∈ P^{ℓ,n}` and `ν₁ − λₙ ≤ ℓ`. Reverse lexicographic order.
pub fn fusion_pieri(lambda: &Partition, r: usize, ctx: &FusionContext) -> Result<Vec<Partition>> {
    ctx.require_weight("λ", lambda)?;
    if r == 0 || r > ctx.level() {
        return Err(Error::InvalidStrip {
            r,
            level: ctx.level(),
        });
    }
    let n = ctx.rank();
    let base = lambda.padded(n);
    let last = base[n - 1];
    let mut out = Vec::new();
    let mut parts = base.clone();
    // Row i may grow up to the old row above it (row 0 is unbounded).
    fn rec(
        i: usize,
        remaining: usize,
        base: &[usize],
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == base.len() {
            if remaining == 0 {
                out.push(Partition::new(parts.clone()).expect("strip keeps parts decreasing"));
            }
            return;
        }
        let cap = if i == 0 {
            remaining
        } else {
            (base[i - 1] - base[i]).min(remaining)
        };
        for add in (0..=cap).rev() {
            parts[i] = base[i] + add;
            rec(i + 1, remaining - add, base, parts, out);
        }
        parts[i] = base[i];
    }
    rec(0, r, &base, &mut parts, &mut out);
    out.retain(|nu| ctx.is_weight(nu) && nu.first() <= last + ctx.level());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_skew_tableaux;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ctx(l: usize, n: usize) -> FusionContext {
        FusionContext::new(l, n).unwrap()
    }

    fn sample_shape() -> SkewShape {
        SkewShape::new(p(&[4, 2, 2]), p(&[1, 1])).unwrap()
    }

    fn tab(rows: Vec<Vec<usize>>) -> SkewTableau {
        SkewTableau::from_rows(sample_shape(), rows).unwrap()
    }

    #[test]
    fn sample_cylindricity() {
        let c = ctx(3, 3);
        assert!(is_cylindric(
            &tab(vec![vec![1, 2, 3], vec![2], vec![1, 3]]),
            &c
        ));
        assert!(is_cylindric(
            &tab(vec![vec![1, 1, 3], vec![2], vec![2, 3]]),
            &c
        ));
        assert!(!is_cylindric(
            &tab(vec![vec![1, 1, 2], vec![2], vec![3, 3]]),
            &c
        ));
    }

    #[test]
    fn vacuous_when_no_pairs() {
        // ℓ large: x + ℓ overshoots every row-0 cell
        let shape = SkewShape::new(p(&[3, 2, 1]), p(&[1])).unwrap();
        let c = ctx(3, 3);
        assert!(constrained_pairs(&shape, &c).is_empty());
        for t in enumerate_skew_tableaux(&shape, &Content::new(vec![2, 2, 1])) {
            assert!(is_cylindric(&t, &c));
        }
    }

    #[test]
    fn sample_counts() {
        let c = ctx(3, 3);
        let count = |w: &[usize]| {
            enumerate_cylindric(&sample_shape(), &Content::new(w.to_vec()), &c)
                .unwrap()
                .len()
        };
        assert_eq!(count(&[2, 2, 2]), 2);
        assert_eq!(count(&[0, 3, 3]), 0);
        assert_eq!(count(&[2, 1, 3]), 1);
        assert_eq!(count(&[1, 3, 2]), 1);
        assert_eq!(count(&[0, 2, 4]), 0);
        assert_eq!(count(&[1, 1, 4]), 0);

        let all = enumerate_cylindric(&sample_shape(), &Content::new(vec![2, 2, 2]), &c).unwrap();
        let rows: Vec<_> = all.iter().map(|t| t.tableau().rows().to_vec()).collect();
        assert_eq!(
            rows,
            vec![
                vec![vec![1, 1, 3], vec![2], vec![2, 3]],
                vec![vec![1, 2, 3], vec![2], vec![1, 3]],
            ]
        );
    }

    #[test]
    fn pruning_matches_post_filter() {
        let c = ctx(3, 3);
        for content in [vec![2, 2, 2], vec![2, 1, 3], vec![3, 2, 1], vec![1, 2, 3]] {
            let content = Content::new(content);
            let pruned: Vec<SkewTableau> = enumerate_cylindric(&sample_shape(), &content, &c)
                .unwrap()
                .into_iter()
                .map(CylindricTableau::into_tableau)
                .collect();
            let filtered: Vec<SkewTableau> = enumerate_skew_tableaux(&sample_shape(), &content)
                .into_iter()
                .filter(|t| is_cylindric(t, &c))
                .collect();
            assert_eq!(pruned, filtered);
        }
    }

    #[test]
    fn rank_one_constrains_within_the_row() {
        // n = 1: cell x must be below-left of cell x + ℓ in the same row
        let shape = SkewShape::straight(p(&[3]));
        let c = ctx(2, 1);
        assert_eq!(
            cylindric_kostka(&shape, &Content::new(vec![3]), &c).unwrap(),
            0
        );
        assert_eq!(
            cylindric_kostka(&shape, &Content::new(vec![2, 1]), &c).unwrap(),
            1
        );
    }

    #[test]
    fn new_rejects_noncylindric() {
        let t = tab(vec![vec![1, 1, 2], vec![2], vec![3, 3]]);
        assert!(CylindricTableau::new(t, ctx(3, 3)).is_err());
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            fusion_pieri(&p(&[3]), 2, &ctx(3, 2)).unwrap(),
            vec![p(&[3, 2])]
        );
        assert_eq!(
            fusion_pieri(&p(&[1, 1]), 1, &ctx(3, 3)).unwrap(),
            vec![p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert!(fusion_pieri(&p(&[2]), 2, &ctx(1, 1)).is_err());
        assert!(fusion_pieri(&p(&[1]), 0, &ctx(2, 2)).is_err());
        assert!(fusion_pieri(&p(&[1]), 3, &ctx(2, 2)).is_err());
        assert!(fusion_pieri(&p(&[3]), 1, &ctx(2, 2)).is_err());
    }

    #[test]
    fn pieri_never_empty_on_valid_input() {
        for (l, n) in [(1, 1), (1, 3), (2, 2), (3, 2), (2, 3), (3, 3)] {
            let c = ctx(l, n);
            for m in 0..=6 {
                for lambda in c.weights_of_size(m) {
                    for r in 1..=l {
                        assert!(!fusion_pieri(&lambda, r, &c).unwrap().is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_agrees_with_single_letter_cylindric_counts() {
        for (l, n) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let c = ctx(l, n);
            for m in 0..=5 {
                for lambda in c.weights_of_size(m) {
                    for r in 1..=l {
                        let strips = fusion_pieri(&lambda, r, &c).unwrap();
                        let by_count: Vec<Partition> = c
                            .weights_of_size(m + r)
                            .into_iter()
                            .filter(|nu| lambda.is_contained_in(nu))
                            .filter(|nu| {
                                let shape = SkewShape::new(nu.clone(), lambda.clone()).unwrap();
                                cylindric_kostka(&shape, &Content::new(vec![r]), &c).unwrap() == 1
                            })
                            .collect();
                        let mut a = strips.clone();
                        let mut b = by_count;
                        a.sort();
                        b.sort();
                        assert_eq!(a, b, "λ = {lambda}, r = {r}, ℓ = {l}, n = {n}");
                    }
                }
            }
        }
    }
}
