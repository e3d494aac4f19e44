//! Grid harness: every method and identity the library should satisfy,
//! evaluated exhaustively on small inputs.

use std::collections::HashMap;

use fusion_core::crystal::{crystal_pairs, is_highest_weight, rs_involution};
use fusion_core::fusion::level_rank_dual;
use fusion_core::tabloids::inverse_kostka;
use fusion_core::{
    cylindric_kostka, expand_product, fusion_positive, fusion_signed_det, fusion_signed_tabloid,
    kostka, lr_coefficient, window_transform, Content, FusionContext, Partition, Result,
    SchurExpansion, SkewShape, TransformCase,
};

/// Pass counts for one identity. Monitors are reported but never fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub monitor: bool,
    pub failures: Vec<String>,
}

const KEPT_FAILURES: usize = 5;

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            passed: 0,
            total: 0,
            monitor: false,
            failures: Vec::new(),
        }
    }

    fn monitor(name: &'static str) -> Self {
        Check {
            monitor: true,
            ..Check::new(name)
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < KEPT_FAILURES {
            self.failures.push(detail());
        }
    }

    pub fn ok(&self) -> bool {
        self.monitor || self.passed == self.total
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub context: FusionContext,
    pub max_weight: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const METHOD_AGREEMENT: &str = "kac-walton = signed tabloid = signed det >= 0";
pub const POSITIVE_AGREEMENT: &str = "positive formula agrees where defined";
pub const POSITIVE_COVERAGE: &str = "positive formula defined";
pub const COMMUTATIVITY: &str = "commutativity";
pub const COLUMN_LAW: &str = "height-n column add/remove";
pub const LEVEL_RANK: &str = "level-rank duality";
pub const WINDOW_COUNTS: &str = "window equinumerosity (cut)";
pub const TWO_ROW_WINDOW_COUNTS: &str = "window equinumerosity (two-row)";
pub const CONTENT_SYMMETRY: &str = "cylindric kostka under content permutation";
pub const INVERSE_MATRIX: &str = "kostka times inverse kostka is identity";
pub const INVOLUTION: &str = "involution laws";
pub const INVOLUTION_COUNT: &str = "involution fixed points = lr";

/// `(λ, μ, ν)` with `λ, μ` in the `ℓ × n` box, `ν ∈ P^{ℓ,n}` and `|ν| ≤ max_weight`.
pub fn fusion_grid(
    ctx: &FusionContext,
    max_weight: usize,
) -> Vec<(Partition, Partition, Partition)> {
    let boxed = Partition::all_in_box(ctx.level(), ctx.rank());
    let mut out = Vec::new();
    for lambda in &boxed {
        for mu in &boxed {
            let m = lambda.size() + mu.size();
            if m > max_weight {
                continue;
            }
            for nu in ctx.weights_of_size(m) {
                out.push((lambda.clone(), mu.clone(), nu));
            }
        }
    }
    out
}

/// Every composition of `m` into `parts` nonnegative entries.
pub fn compositions(m: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if m == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=m).rev() {
        for mut rest in compositions(m - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

struct Expansions<'a> {
    ctx: &'a FusionContext,
    cache: HashMap<(Partition, Partition), SchurExpansion>,
}

impl Expansions<'_> {
    fn coefficient(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
        let key = (lambda.clone(), mu.clone());
        if !self.cache.contains_key(&key) {
            let e = expand_product(lambda, mu, self.ctx)?;
            self.cache.insert(key.clone(), e);
        }
        Ok(self.cache[&key].coefficient(nu))
    }
}

fn triple(lambda: &Partition, mu: &Partition, nu: &Partition) -> String {
    format!("λ={lambda} μ={mu} ν={nu}")
}

/// Method agreement, positivity and the symmetry laws on [`fusion_grid`].
pub fn fusion_checks(ctx: &FusionContext, max_weight: usize) -> Result<Vec<Check>> {
    let n = ctx.rank();
    let mut agree = Check::new(METHOD_AGREEMENT);
    let mut pos = Check::new(POSITIVE_AGREEMENT);
    let mut coverage = Check::monitor(POSITIVE_COVERAGE);
    let mut comm = Check::new(COMMUTATIVITY);
    let mut column = Check::new(COLUMN_LAW);
    let mut duality = Check::new(LEVEL_RANK);
    let mut kw = Expansions {
        ctx,
        cache: HashMap::new(),
    };
    let dual_ctx = ctx.dual();
    let mut dual = Expansions {
        ctx: &dual_ctx,
        cache: HashMap::new(),
    };

    for (lambda, mu, nu) in fusion_grid(ctx, max_weight) {
        let k = kw.coefficient(&lambda, &mu, &nu)?;
        let cyl = fusion_signed_tabloid(&lambda, &mu, &nu, ctx)?;
        let det = fusion_signed_det(&lambda, &mu, &nu, ctx)?;
        agree.record(k == cyl && cyl == det && k >= 0, || {
            format!("{}: kw={k} cyl={cyl} det={det}", triple(&lambda, &mu, &nu))
        });

        let p = fusion_positive(&lambda, &mu, &nu, ctx)?;
        coverage.record(p.is_some(), || triple(&lambda, &mu, &nu));
        if let Some(v) = p {
            pos.record(v == k, || {
                format!("{}: pos={v} kw={k}", triple(&lambda, &mu, &nu))
            });
        }

        let swapped = kw.coefficient(&mu, &lambda, &nu)?;
        comm.record(swapped == k, || {
            format!("{}: {k} vs swapped {swapped}", triple(&lambda, &mu, &nu))
        });

        let lambda_up = lambda.add_full_columns(n, 1)?;
        if ctx.is_boxed(&lambda_up) {
            let nu_up = nu.add_full_columns(n, 1)?;
            let up = kw.coefficient(&lambda_up, &mu, &nu_up)?;
            column.record(up == k, || {
                format!("{}: {k} vs added column {up}", triple(&lambda, &mu, &nu))
            });
        }
        if lambda.part(n - 1) > 0 && nu.part(n - 1) > 0 {
            let lambda_down = lambda.remove_full_columns(n, 1)?;
            let nu_down = nu.remove_full_columns(n, 1)?;
            let down = kw.coefficient(&lambda_down, &mu, &nu_down)?;
            column.record(down == k, || {
                format!(
                    "{}: {k} vs removed column {down}",
                    triple(&lambda, &mu, &nu)
                )
            });
        }

        let (lt, mt, nt, dctx) = level_rank_dual(&lambda, &mu, &nu, ctx);
        let d = if dctx.is_weight(&nt) {
            dual.coefficient(&lt, &mt, &nt)?
        } else {
            0
        };
        duality.record(d == k, || {
            format!("{}: {k} vs dual {d} at ν'={nt}", triple(&lambda, &mu, &nu))
        });
    }
    Ok(vec![agree, pos, coverage, comm, column, duality])
}

/// Window equinumerosity over shapes `ν/λ` from the grid. Two-row windows
/// and content-permutation symmetry of cylindric Kostka numbers are monitors.
pub fn cylindric_checks(ctx: &FusionContext, max_weight: usize) -> Result<Vec<Check>> {
    let n = ctx.rank();
    let mut window = Check::new(WINDOW_COUNTS);
    let mut two_row = Check::monitor(TWO_ROW_WINDOW_COUNTS);
    let mut symmetry = Check::monitor(CONTENT_SYMMETRY);
    let boxed = Partition::all_in_box(ctx.level(), ctx.rank());
    for lambda in &boxed {
        for m in lambda.size()..=max_weight {
            for nu in ctx.weights_of_size(m) {
                if !lambda.is_contained_in(&nu) {
                    continue;
                }
                let shape = SkewShape::new(nu.clone(), lambda.clone())?;
                let size = shape.size();
                let contents: Vec<Content> = compositions(size, n)
                    .into_iter()
                    .map(Content::new)
                    .collect();
                let counts: Vec<u64> = contents
                    .iter()
                    .map(|a| cylindric_kostka(&shape, a, ctx))
                    .collect::<Result<_>>()?;
                for (a, &c) in contents.iter().zip(&counts) {
                    let sorted = Content::new(a.sorted().padded(n));
                    let s = cylindric_kostka(&shape, &sorted, ctx)?;
                    symmetry.record(s == c, || {
                        format!("{shape}: α={a} gives {c}, sorted gives {s}")
                    });
                }
                for mu in Partition::all_of_size(size, n, ctx.level()) {
                    let Some(w) = window_transform(&shape, &mu, ctx)? else {
                        continue;
                    };
                    let target = SkewShape::new(w.outer.clone(), w.inner.clone())?;
                    let cylindric = ctx.is_weight(&w.outer) && ctx.is_weight(&w.inner);
                    for (a, &c) in contents.iter().zip(&counts) {
                        let t = if cylindric {
                            cylindric_kostka(&target, a, ctx)?
                        } else {
                            kostka(&target, a)
                        };
                        let check = match w.case {
                            TransformCase::Cut => &mut window,
                            TransformCase::Sl2 => &mut two_row,
                        };
                        check.record(t == c, || {
                            format!(
                                "{shape} → {target} ({:?}), μ={mu}, α={a}: {c} vs {t}",
                                w.case
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(vec![window, two_row, symmetry])
}

/// `Σ_α K_{λα} K⁻¹_{αμ} = δ_{λμ}` for all partitions of each `m ≤ max_weight`.
pub fn inverse_matrix_check(max_weight: usize) -> Check {
    let mut check = Check::new(INVERSE_MATRIX);
    for m in 0..=max_weight {
        let parts = Partition::all_of_size(m, m, m);
        let kostkas: Vec<Vec<i64>> = parts
            .iter()
            .map(|lambda| {
                let shape = SkewShape::straight(lambda.clone());
                parts
                    .iter()
                    .map(|alpha| kostka(&shape, &Content::from(alpha)) as i64)
                    .collect()
            })
            .collect();
        let inverse: Vec<Vec<i64>> = parts
            .iter()
            .map(|alpha| parts.iter().map(|mu| inverse_kostka(alpha, mu)).collect())
            .collect();
        for (i, lambda) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                let sum: i64 = (0..parts.len())
                    .map(|a| kostkas[i][a] * inverse[a][j])
                    .sum();
                let want = i64::from(i == j);
                check.record(sum == want, || format!("λ={lambda} μ={mu}: {sum}"));
            }
        }
    }
    check
}

/// The sign-reversing involution on all triples with `|ν| ≤ max_weight`.
pub fn involution_checks(max_weight: usize) -> Result<Vec<Check>> {
    let mut laws = Check::new(INVOLUTION);
    let mut count = Check::new(INVOLUTION_COUNT);
    for size in 0..=max_weight {
        for nu in Partition::all_of_size(size, size, size) {
            for lambda in Partition::all_in_box(nu.first(), nu.len()) {
                if !lambda.is_contained_in(&nu) {
                    continue;
                }
                let rest = size - lambda.size();
                for mu in Partition::all_of_size(rest, rest, rest) {
                    let n = mu.len().max(1);
                    let mut fixed = 0u64;
                    for p in crystal_pairs(&lambda, &mu, &nu, n)? {
                        let q = rs_involution(&p)?;
                        let back = rs_involution(&q)?;
                        let ok = if q == p {
                            fixed += 1;
                            p.sigma().is_identity() && is_highest_weight(p.tableau())
                        } else {
                            back == p && q.sign() == -p.sign()
                        };
                        laws.record(ok, || {
                            format!("{}: σ={:?}", triple(&lambda, &mu, &nu), p.sigma().order())
                        });
                    }
                    let lr = lr_coefficient(&lambda, &mu, &nu);
                    count.record(fixed == lr, || {
                        format!("{}: fixed={fixed} lr={lr}", triple(&lambda, &mu, &nu))
                    });
                }
            }
        }
    }
    Ok(vec![laws, count])
}

/// Everything above for one context.
pub fn run_crosscheck(ctx: &FusionContext, max_weight: usize) -> Result<Report> {
    let mut checks = fusion_checks(ctx, max_weight)?;
    checks.extend(cylindric_checks(ctx, max_weight)?);
    checks.push(inverse_matrix_check(max_weight));
    checks.extend(involution_checks(max_weight)?);
    Ok(Report {
        context: *ctx,
        max_weight,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        assert_eq!(
            compositions(3, 2),
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
        assert!(compositions(1, 0).is_empty());
    }

    #[test]
    fn small_grid_passes() {
        let ctx = FusionContext::new(2, 2).unwrap();
        let report = run_crosscheck(&ctx, 4).unwrap();
        for c in &report.checks {
            assert!(c.ok(), "{}: {:?}", c.name, c.failures);
        }
        assert!(report.check(METHOD_AGREEMENT).unwrap().total > 0);
    }

    #[test]
    fn failures_are_capped() {
        let mut c = Check::new("x");
        for _ in 0..10 {
            c.record(false, || "bad".into());
        }
        assert_eq!(
            (c.passed, c.total, c.failures.len()),
            (0, 10, KEPT_FAILURES)
        );
        assert!(!c.ok());
    }
}
