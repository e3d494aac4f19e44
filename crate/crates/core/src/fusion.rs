//! Fusion coefficients `c_{λμ}^{ν,ℓ,n}` by three independent routes:
//!
//! * [`fusion_kac_walton`]: straighten every term of the classical product
//!   `s_λ s_μ` into the fundamental alcove, with signs.
//! * [`fusion_signed_tabloid`] and [`fusion_signed_det`]: signed sums of
//!   cylindric Kostka numbers against the inverse Kostka matrix, expanded
//!   over tabloids or over `S_n` respectively.
//! * [`fusion_positive`]: a single Littlewood–Richardson coefficient on a
//!   window of the cylinder, when such a window exists.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::nonnegative_dot_weights;
use crate::cylindric::cylindric_kostka;
use crate::error::{Error, Result};
use crate::partitions::{window_transform, FusionContext, Partition, SkewShape, WindowTransform};
use crate::tableaux::lr_coefficient;
use crate::tabloids::enumerate_tabloids;

/// A finite integer combination of Schur functions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, i64>,
    context: Option<FusionContext>,
}

impl SchurExpansion {
    pub fn new(context: Option<FusionContext>) -> Self {
        SchurExpansion {
            terms: BTreeMap::new(),
            context,
        }
    }

    pub fn context(&self) -> Option<&FusionContext> {
        self.context.as_ref()
    }

    /// Adds `coefficient · s_p`, dropping the term if it cancels to zero.
    pub fn add(&mut self, p: Partition, coefficient: i64) -> Result<()> {
        if let Some(ctx) = &self.context {
            ctx.require_weight("ν", &p)?;
        }
        let entry = self.terms.entry(p.clone()).or_insert(0);
        *entry = entry
            .checked_add(coefficient)
            .ok_or(Error::Overflow("Schur expansion"))?;
        if *entry == 0 {
            self.terms.remove(&p);
        }
        Ok(())
    }

    pub fn coefficient(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `β = γ + ρ` for a composition `γ` with at most `n` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeight {
    entries: Vec<i64>,
    context: FusionContext,
}

impl AffineWeight {
    pub fn from_partition(gamma: &Partition, ctx: &FusionContext) -> Result<Self> {
        let n = ctx.rank();
        if gamma.len() > n {
            return Err(Error::SizeMismatch(format!(
                "γ = {gamma} has more than {n} parts"
            )));
        }
        let entries = gamma
            .padded(n)
            .iter()
            .enumerate()
            .map(|(i, &g)| g as i64 + (n - 1 - i) as i64)
            .collect();
        Ok(AffineWeight {
            entries,
            context: *ctx,
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Moves the weight into the fundamental alcove. Returns the sign of the
    /// affine group element used and the resulting partition, or `None` when
    /// the orbit meets a wall.
    pub fn straighten(mut self) -> Option<(i64, Partition)> {
        let n = self.entries.len();
        let modulus = self.context.modulus() as i64;
        let mut sign = 1;
        loop {
            let b = &mut self.entries;
            let inversions: usize = (0..n)
                .map(|i| (i + 1..n).filter(|&j| b[i] < b[j]).count())
                .sum();
            b.sort_unstable_by(|x, y| y.cmp(x));
            if b.windows(2).any(|w| w[0] == w[1]) {
                return None;
            }
            if inversions % 2 == 1 {
                sign = -sign;
            }
            let spread = b[0] - b[n - 1];
            if spread == modulus {
                return None;
            }
            if spread < modulus {
                let parts = b
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| (x - (n - 1 - i) as i64) as usize)
                    .collect();
                return Some((sign, Partition::new(parts).expect("strictly decreasing β")));
            }
            let (first, last) = (b[0], b[n - 1]);
            b[0] = last + modulus;
            b[n - 1] = first - modulus;
            sign = -sign;
        }
    }
}

/// Straightens `γ + ρ` into the fundamental alcove of level `ℓ`, rank `n`.
pub fn straighten(gamma: &Partition, ctx: &FusionContext) -> Result<Option<(i64, Partition)>> {
    Ok(AffineWeight::from_partition(gamma, ctx)?.straighten())
}

fn check_size(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<()> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(Error::SizeMismatch(format!(
            "|λ| + |μ| = {} but |ν| = {}",
            lambda.size() + mu.size(),
            nu.size()
        )));
    }
    Ok(())
}

/// Checks `λ, μ ∈ R^{ℓ,n}`, `ν ∈ P^{ℓ,n}` and `|λ| + |μ| = |ν|`.
pub fn validate(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &FusionContext,
) -> Result<()> {
    ctx.require_boxed("λ", lambda)?;
    ctx.require_boxed("μ", mu)?;
    ctx.require_weight("ν", nu)?;
    check_size(lambda, mu, nu)
}

fn to_signed(c: u64) -> Result<i64> {
    i64::try_from(c).map_err(|_| Error::Overflow("coefficient"))
}

fn accumulate(total: i64, sign: i64, count: u64) -> Result<i64> {
    to_signed(count)?
        .checked_mul(sign)
        .and_then(|t| total.checked_add(t))
        .ok_or(Error::Overflow("signed sum"))
}

/// The fusion product `s_λ · s_μ` in the Schur basis of level `ℓ`, rank `n`.
pub fn expand_product(
    lambda: &Partition,
    mu: &Partition,
    ctx: &FusionContext,
) -> Result<SchurExpansion> {
    ctx.require_boxed("λ", lambda)?;
    ctx.require_boxed("μ", mu)?;
    let m = lambda.size() + mu.size();
    let widest = lambda.first() + mu.first();
    let mut out = SchurExpansion::new(Some(*ctx));
    for gamma in Partition::all_of_size(m, ctx.rank(), widest) {
        if !lambda.is_contained_in(&gamma) {
            continue;
        }
        let c = lr_coefficient(lambda, mu, &gamma);
        if c == 0 {
            continue;
        }
        if let Some((sign, nu)) = straighten(&gamma, ctx)? {
            let term = to_signed(c)?
                .checked_mul(sign)
                .ok_or(Error::Overflow("Kac–Walton term"))?;
            out.add(nu, term)?;
        }
    }
    Ok(out)
}

pub fn fusion_kac_walton(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &FusionContext,
) -> Result<i64> {
    validate(lambda, mu, nu, ctx)?;
    Ok(expand_product(lambda, mu, ctx)?.coefficient(nu))
}

/// `Σ_T sign(T) · K^{cyc}_{ν/λ, weight(T)}` over tabloids `T` of shape `μ`.
pub fn fusion_signed_tabloid(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &FusionContext,
) -> Result<i64> {
    validate(lambda, mu, nu, ctx)?;
    if !lambda.is_contained_in(nu) {
        return Ok(0);
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone())?;
    enumerate_tabloids(mu).iter().try_fold(0, |total, t| {
        accumulate(total, t.sign(), cylindric_kostka(&shape, &t.weight(), ctx)?)
    })
}

/// `Σ_{σ ∈ S_n} sign(σ) · K^{cyc}_{ν/λ, σ(μ+ρ)−ρ}`.
pub fn fusion_signed_det(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &FusionContext,
) -> Result<i64> {
    validate(lambda, mu, nu, ctx)?;
    if !lambda.is_contained_in(nu) {
        return Ok(0);
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone())?;
    nonnegative_dot_weights(mu, ctx.rank())
        .iter()
        .try_fold(0, |total, (sigma, weight)| {
            accumulate(total, sigma.sign(), cylindric_kostka(&shape, weight, ctx)?)
        })
}

/// How the positive formula was reached: the triple the window transform
/// was applied to, the transform itself, and the resulting coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveWitness {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub swapped: bool,
    pub stripped_columns: usize,
    pub transform: WindowTransform,
    pub value: u64,
}

/// Finds a window transform for `(λ, μ, ν)`, trying in order the triple
/// itself, the swap `λ ↔ μ`, and then both again after stripping the common
/// height-`n` columns of the inner partition and `ν`.
pub fn positive_witness(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &FusionContext,
) -> Result<Option<PositiveWitness>> {
    validate(lambda, mu, nu, ctx)?;
    let n = ctx.rank();
    let mut attempts = vec![
        (lambda.clone(), mu.clone(), nu.clone(), false, 0),
        (mu.clone(), lambda.clone(), nu.clone(), true, 0),
    ];
    for (inner, other, swapped) in [(lambda, mu, false), (mu, lambda, true)] {
        let k = inner.part(n - 1).min(nu.part(n - 1));
        if k > 0 {
            attempts.push((
                inner.remove_full_columns(n, k)?,
                other.clone(),
                nu.remove_full_columns(n, k)?,
                swapped,
                k,
            ));
        }
    }
    for (inner, other, outer, swapped, stripped) in attempts {
        if !inner.is_contained_in(&outer) {
            continue;
        }
        let shape = SkewShape::new(outer.clone(), inner.clone())?;
        if let Some(transform) = window_transform(&shape, &other, ctx)? {
            let value = lr_coefficient(&transform.inner, &other, &transform.outer);
            return Ok(Some(PositiveWitness {
                lambda: inner,
                mu: other,
                nu: outer,
                swapped,
                stripped_columns: stripped,
                transform,
                value,
            }));
        }
    }
    Ok(None)
}

/// `c_{λ̃μ}^{ν̃}` when a window transform applies, else `None`.
pub fn fusion_positive(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &FusionContext,
) -> Result<Option<i64>> {
    positive_witness(lambda, mu, nu, ctx)?
        .map(|w| to_signed(w.value))
        .transpose()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Positive formula when it applies, Kac–Walton otherwise.
    Auto,
    Kw,
    Cyl,
    Det,
    Pos,
}

impl Method {
    pub const EXPLICIT: [Method; 4] = [Method::Kw, Method::Cyl, Method::Det, Method::Pos];
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "kw" => Ok(Method::Kw),
            "cyl" => Ok(Method::Cyl),
            "det" => Ok(Method::Det),
            "pos" => Ok(Method::Pos),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Kw => "kw",
            Method::Cyl => "cyl",
            Method::Det => "det",
            Method::Pos => "pos",
        })
    }
}

pub fn fusion(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &FusionContext,
    method: Method,
) -> Result<i64> {
    match method {
        Method::Auto => match fusion_positive(lambda, mu, nu, ctx)? {
            Some(v) => Ok(v),
            None => fusion_kac_walton(lambda, mu, nu, ctx),
        },
        Method::Kw => fusion_kac_walton(lambda, mu, nu, ctx),
        Method::Cyl => fusion_signed_tabloid(lambda, mu, nu, ctx),
        Method::Det => fusion_signed_det(lambda, mu, nu, ctx),
        Method::Pos => fusion_positive(lambda, mu, nu, ctx)?.ok_or(Error::PositiveNotApplicable),
    }
}

/// The triple and context on the other side of level-rank duality:
/// transposes, with `νᵗ` folded onto `ℓ` rows.
pub fn level_rank_dual(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &FusionContext,
) -> (Partition, Partition, Partition, FusionContext) {
    (
        lambda.transpose(),
        mu.transpose(),
        nu.transpose().fold(ctx.level()),
        ctx.dual(),
    )
}
