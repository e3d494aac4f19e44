//! Crystal operators on words and tableaux, and the Remmel–Shimozono
//! sign-reversing involution.
//!
//! For a fixed `i`, letters `i + 1` and `i` are bracketed greedily as pairs
//! `(i+1) … i`, scanning left to right. The unbracketed letters then read
//! `i^a (i+1)^b`. Raising turns the leftmost unbracketed `i + 1` into `i`,
//! lowering turns the rightmost unbracketed `i` into `i + 1`, and reflecting
//! rewrites the unbracketed run as `i^b (i+1)^a`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, SkewShape};
use crate::tableaux::{enumerate_skew_tableaux, is_lattice, Content, SkewTableau, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrystalOp {
    /// `ẽᵢ`
    Raise,
    /// `f̃ᵢ`
    Lower,
    /// `s̃ᵢ`
    Reflect,
}

impl FromStr for CrystalOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" | "raise" => Ok(CrystalOp::Raise),
            "f" | "lower" => Ok(CrystalOp::Lower),
            "s" | "reflect" => Ok(CrystalOp::Reflect),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for CrystalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrystalOp::Raise => "e",
            CrystalOp::Lower => "f",
            CrystalOp::Reflect => "s",
        })
    }
}

/// Positions of the unbracketed letters `i` and `i + 1`, in word order.
fn unbracketed(letters: &[usize], i: usize) -> (Vec<usize>, Vec<usize>) {
    let mut lows = Vec::new();
    let mut open = Vec::new();
    for (pos, &l) in letters.iter().enumerate() {
        if l == i + 1 {
            open.push(pos);
        } else if l == i && open.pop().is_none() {
            lows.push(pos);
        }
    }
    (lows, open)
}

fn check_index(i: usize, alphabet: usize) -> Result<()> {
    if i == 0 || i >= alphabet {
        return Err(Error::InvalidIndex { index: i, alphabet });
    }
    Ok(())
}

/// Applies `op` at index `i`; `None` when the operator annihilates `w`.
pub fn apply_crystal(w: &Word, op: CrystalOp, i: usize, alphabet: usize) -> Result<Option<Word>> {
    check_index(i, alphabet)?;
    if w.max_letter() > alphabet {
        return Err(Error::LetterOutOfRange {
            letter: w.max_letter(),
            alphabet,
        });
    }
    let mut letters = w.letters().to_vec();
    let (lows, highs) = unbracketed(&letters, i);
    match op {
        CrystalOp::Raise => {
            let Some(&pos) = highs.first() else {
                return Ok(None);
            };
            letters[pos] = i;
        }
        CrystalOp::Lower => {
            let Some(&pos) = lows.last() else {
                return Ok(None);
            };
            letters[pos] = i + 1;
        }
        CrystalOp::Reflect => {
            let b = highs.len();
            for (k, &pos) in lows.iter().chain(&highs).enumerate() {
                letters[pos] = if k < b { i } else { i + 1 };
            }
        }
    }
    Ok(Some(Word::new(letters)))
}

/// Applies `op` to the column reading word of `t` and writes the result back
/// into the same shape. The empty tableau is annihilated by every operator.
pub fn apply_crystal_tableau(
    t: &SkewTableau,
    op: CrystalOp,
    i: usize,
    alphabet: usize,
) -> Result<Option<SkewTableau>> {
    check_index(i, alphabet)?;
    if t.shape().is_empty() {
        return Ok(None);
    }
    let Some(word) = apply_crystal(&t.reading_word(), op, i, alphabet)? else {
        return Ok(None);
    };
    SkewTableau::from_reading_word(t.shape(), &word)
        .map(Some)
        .map_err(|e| Error::Invariant(format!("crystal operator broke column-strictness: {e}")))
}

/// `ẽᵢ t = 0` for all `i`, checked through the lattice property of the reading word.
pub fn is_highest_weight(t: &SkewTableau) -> bool {
    is_lattice(&t.reading_word())
}

/// The other characterization: every raising operator annihilates `t`.
pub fn is_annihilated_by_raising(t: &SkewTableau, alphabet: usize) -> Result<bool> {
    for i in 1..alphabet {
        if apply_crystal(&t.reading_word(), CrystalOp::Raise, i, alphabet)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A permutation of `n` positions with its sign. It acts on `n`-tuples by
/// `(σ·v)[k] = v[order[k]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedPermutation {
    order: Vec<usize>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            order: (0..n).collect(),
        }
    }

    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; order.len()];
        for &j in &order {
            if j >= order.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::Parse(format!("{order:?} is not a permutation")));
            }
        }
        Ok(SignedPermutation { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.order.iter().enumerate().all(|(k, &j)| k == j)
    }

    pub fn inversions(&self) -> usize {
        let o = &self.order;
        (0..o.len())
            .map(|a| (a + 1..o.len()).filter(|&b| o[a] > o[b]).count())
            .sum()
    }

    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `σ_r ∘ self`: afterwards swap entries `r` and `r + 1` (1-based).
    pub fn then_swap(&self, r: usize) -> Self {
        let mut order = self.order.clone();
        order.swap(r - 1, r);
        SignedPermutation { order }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.order.iter().map(|&j| v[j]).collect()
    }
}

/// `ρ = (n−1, …, 1, 0)`.
pub fn staircase(n: usize) -> Vec<i64> {
    (0..n).rev().map(|x| x as i64).collect()
}

/// `σ(μ + ρ) − ρ`, or `None` if an entry is negative.
pub fn dot_weight(sigma: &SignedPermutation, mu: &Partition) -> Option<Content> {
    let n = sigma.len();
    let rho = staircase(n);
    let shifted: Vec<i64> = mu
        .padded(n)
        .iter()
        .zip(&rho)
        .map(|(&m, &r)| m as i64 + r)
        .collect();
    sigma
        .apply(&shifted)
        .iter()
        .zip(&rho)
        .map(|(&a, &r)| usize::try_from(a - r).ok())
        .collect::<Option<Vec<_>>>()
        .map(Content::new)
}

/// Every `σ ∈ S_n` whose weight `σ(μ + ρ) − ρ` is nonnegative, with that
/// weight, in lexicographic order of `σ`.
pub fn nonnegative_dot_weights(mu: &Partition, n: usize) -> Vec<(SignedPermutation, Content)> {
    let rho = staircase(n);
    let shifted: Vec<i64> = mu
        .padded(n)
        .iter()
        .zip(&rho)
        .map(|(&m, &r)| m as i64 + r)
        .collect();
    let mut out = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        shifted: &[i64],
        rho: &[i64],
        order: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<(SignedPermutation, Content)>,
    ) {
        let k = order.len();
        if k == shifted.len() {
            let weight = order
                .iter()
                .zip(rho)
                .map(|(&j, &r)| (shifted[j] - r) as usize)
                .collect();
            out.push((
                SignedPermutation {
                    order: order.clone(),
                },
                Content::new(weight),
            ));
            return;
        }
        for j in 0..shifted.len() {
            if !used[j] && shifted[j] >= rho[k] {
                used[j] = true;
                order.push(j);
                rec(shifted, rho, order, used, out);
                order.pop();
                used[j] = false;
            }
        }
    }
    rec(&shifted, &rho, &mut order, &mut used, &mut out);
    out
}

/// A pair `(σ, t)` with `content(t) = σ(μ + ρ) − ρ` over an alphabet of size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CrystalPair {
    sigma: SignedPermutation,
    tableau: SkewTableau,
    mu: Partition,
}

impl CrystalPair {
    pub fn new(sigma: SignedPermutation, tableau: SkewTableau, mu: Partition) -> Result<Self> {
        let n = sigma.len();
        if mu.len() > n || tableau.max_letter() > n {
            return Err(Error::SizeMismatch(format!(
                "permutation of {n} letters cannot carry μ = {mu} and this tableau"
            )));
        }
        let weight = dot_weight(&sigma, &mu)
            .ok_or_else(|| Error::Invariant(format!("σ(μ+ρ)−ρ is negative for μ = {mu}")))?;
        if tableau.content(n) != weight {
            return Err(Error::Invariant(format!(
                "tableau content {} differs from σ(μ+ρ)−ρ = {weight}",
                tableau.content(n)
            )));
        }
        Ok(CrystalPair { sigma, tableau, mu })
    }

    pub fn sigma(&self) -> &SignedPermutation {
        &self.sigma
    }

    pub fn tableau(&self) -> &SkewTableau {
        &self.tableau
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn rank(&self) -> usize {
        self.sigma.len()
    }

    pub fn sign(&self) -> i64 {
        self.sigma.sign()
    }
}

/// Index `r` such that the rightmost lattice violation in `w` is a letter `r + 1`.
fn rightmost_violation(w: &Word) -> Option<usize> {
    let mut counts: Vec<usize> = Vec::new();
    for &l in w.letters().iter().rev() {
        if counts.len() < l {
            counts.resize(l, 0);
        }
        counts[l - 1] += 1;
        if l > 1 && counts[l - 1] > counts[l - 2] {
            return Some(l - 1);
        }
    }
    None
}

/// `θ(σ, t)`: identity on highest-weight tableaux, otherwise
/// `(σ_r σ, s̃_r ẽ_r t)` for the rightmost lattice violation `r + 1`.
pub fn rs_involution(p: &CrystalPair) -> Result<CrystalPair> {
    let Some(r) = rightmost_violation(&p.tableau.reading_word()) else {
        return Ok(p.clone());
    };
    let n = p.rank();
    let raised = apply_crystal_tableau(&p.tableau, CrystalOp::Raise, r, n)?
        .ok_or_else(|| Error::Invariant(format!("ẽ_{r} annihilated a lattice violation")))?;
    let reflected = apply_crystal_tableau(&raised, CrystalOp::Reflect, r, n)?
        .ok_or_else(|| Error::Invariant(format!("s̃_{r} annihilated a tableau")))?;
    CrystalPair::new(p.sigma.then_swap(r), reflected, p.mu.clone())
}

/// All pairs `(σ, t)` with `σ ∈ S_n` and `t` a column-strict filling of `ν/λ`
/// of content `σ(μ + ρ) − ρ`.
pub fn crystal_pairs(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<Vec<CrystalPair>> {
    if mu.len() > n {
        return Err(Error::SizeMismatch(format!(
            "μ = {mu} has more than {n} parts"
        )));
    }
    if !lambda.is_contained_in(nu) || lambda.size() + mu.size() != nu.size() {
        return Ok(Vec::new());
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone())?;
    let mut out = Vec::new();
    for (sigma, weight) in nonnegative_dot_weights(mu, n) {
        for t in enumerate_skew_tableaux(&shape, &weight) {
            out.push(CrystalPair {
                sigma: sigma.clone(),
                tableau: t,
                mu: mu.clone(),
            });
        }
    }
    Ok(out)
}

/// Fixed points of `θ` over all pairs, which equals `c_{λμ}^ν`.
pub fn lr_via_involution(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = mu.len().max(1);
    let mut fixed = 0;
    for p in crystal_pairs(lambda, mu, nu, n)? {
        if rs_involution(&p)? == p {
            fixed += 1;
        }
    }
    Ok(fixed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const SAMPLE_WORD: &str = "4123322341214223";

    #[test]
    fn sample_word_operators() {
        let word = w(SAMPLE_WORD);
        let e = apply_crystal(&word, CrystalOp::Raise, 2, 4)
            .unwrap()
            .unwrap();
        let f = apply_crystal(&word, CrystalOp::Lower, 2, 4)
            .unwrap()
            .unwrap();
        let s = apply_crystal(&word, CrystalOp::Reflect, 2, 4)
            .unwrap()
            .unwrap();
        assert_eq!(e.to_string(), "4123322341214222");
        assert_eq!(f.to_string(), "4123322341214233");
        assert_eq!(s.to_string(), "4123322341214333");
    }

    #[test]
    fn annihilation_and_errors() {
        assert_eq!(
            apply_crystal(&w("1"), CrystalOp::Raise, 1, 2).unwrap(),
            None
        );
        assert_eq!(
            apply_crystal(&w("2"), CrystalOp::Lower, 1, 2).unwrap(),
            None
        );
        assert!(apply_crystal(&w("1"), CrystalOp::Raise, 0, 2).is_err());
        assert!(apply_crystal(&w("1"), CrystalOp::Raise, 2, 2).is_err());
        assert!(apply_crystal(&w("3"), CrystalOp::Raise, 1, 2).is_err());
    }

    fn sample_tableau(rows: Vec<Vec<usize>>) -> SkewTableau {
        let shape = SkewShape::new(p(&[4, 2, 2]), p(&[1, 1])).unwrap();
        SkewTableau::from_rows(shape, rows).unwrap()
    }

    #[test]
    fn sample_tableau_reflect_raise() {
        let t = sample_tableau(vec![vec![1, 2, 3], vec![2], vec![1, 3]]);
        let raised = apply_crystal_tableau(&t, CrystalOp::Raise, 2, 3)
            .unwrap()
            .unwrap();
        let out = apply_crystal_tableau(&raised, CrystalOp::Reflect, 2, 3)
            .unwrap()
            .unwrap();
        assert_eq!(out.rows(), &[vec![1, 3, 3], vec![2], vec![1, 3]]);
    }

    #[test]
    fn empty_tableau_is_annihilated() {
        let shape = SkewShape::new(p(&[2]), p(&[2])).unwrap();
        let t = SkewTableau::from_rows(shape, vec![vec![]]).unwrap();
        for op in [CrystalOp::Raise, CrystalOp::Lower, CrystalOp::Reflect] {
            assert_eq!(apply_crystal_tableau(&t, op, 1, 2).unwrap(), None);
        }
    }

    #[test]
    fn highest_weight_characterizations_agree() {
        let shape = SkewShape::new(p(&[3, 2, 1]), p(&[1])).unwrap();
        for content in [vec![2, 2, 1], vec![3, 2], vec![2, 1, 2], vec![1, 1, 1, 2]] {
            let content = Content::new(content);
            for t in enumerate_skew_tableaux(&shape, &content) {
                assert_eq!(
                    is_highest_weight(&t),
                    is_annihilated_by_raising(&t, content.len()).unwrap()
                );
            }
        }
        let t = SkewTableau::from_rows(
            SkewShape::new(p(&[3, 1]), p(&[])).unwrap(),
            vec![vec![1, 1, 1], vec![2]],
        )
        .unwrap();
        assert_eq!(t.reading_word().to_string(), "2111");
        assert!(is_highest_weight(&t));
    }

    #[test]
    fn window_witness_is_highest_weight() {
        let shape = SkewShape::new(p(&[4, 4, 4]), p(&[3, 2])).unwrap();
        let witnesses: Vec<SkewTableau> =
            enumerate_skew_tableaux(&shape, &Content::new(vec![4, 2, 1]))
                .into_iter()
                .filter(is_highest_weight)
                .collect();
        assert_eq!(witnesses.len(), 1);
        assert!(is_annihilated_by_raising(&witnesses[0], 3).unwrap());
        assert_eq!(
            apply_crystal_tableau(&witnesses[0], CrystalOp::Raise, 1, 3).unwrap(),
            None
        );
    }

    #[test]
    fn involution_sample_example() {
        let t = sample_tableau(vec![vec![1, 2, 3], vec![2], vec![1, 3]]);
        let pair = CrystalPair::new(SignedPermutation::identity(3), t, p(&[2, 2, 2])).unwrap();
        let image = rs_involution(&pair).unwrap();
        assert_eq!(
            image.tableau().rows(),
            &[vec![1, 3, 3], vec![2], vec![1, 3]]
        );
        assert_eq!(image.sign(), -1);
        assert_eq!(image.tableau().content(3), Content::new(vec![2, 1, 3]));
        assert_eq!(rs_involution(&image).unwrap(), pair);
    }

    #[test]
    fn involution_on_small_family() {
        let (lambda, mu, nu) = (p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1]));
        let pairs = crystal_pairs(&lambda, &mu, &nu, 2).unwrap();
        let mut fixed = 0;
        for pair in &pairs {
            let image = rs_involution(pair).unwrap();
            assert_eq!(&rs_involution(&image).unwrap(), pair);
            if &image == pair {
                fixed += 1;
                assert!(pair.sigma().is_identity());
            } else {
                assert_eq!(image.sign(), -pair.sign());
            }
        }
        assert_eq!(fixed, 2);
        let signed: i64 = pairs.iter().map(CrystalPair::sign).sum();
        assert_eq!(signed, 2);
    }

    #[test]
    fn lr_via_involution_examples() {
        assert_eq!(lr_via_involution(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(
            lr_via_involution(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(),
            2
        );
        assert_eq!(
            lr_via_involution(&p(&[3, 2]), &p(&[4, 2, 1]), &p(&[4, 4, 4])).unwrap(),
            1
        );
        assert_eq!(lr_via_involution(&p(&[1]), &p(&[]), &p(&[1])).unwrap(), 1);
    }

    #[test]
    fn pair_rejects_wrong_content() {
        let t = sample_tableau(vec![vec![1, 2, 3], vec![2], vec![1, 3]]);
        assert!(CrystalPair::new(SignedPermutation::identity(3), t, p(&[3, 2, 1])).is_err());
    }

    #[test]
    fn permutation_signs() {
        let s = SignedPermutation::from_order(vec![2, 0, 1]).unwrap();
        assert_eq!(s.inversions(), 2);
        assert_eq!(s.sign(), 1);
        assert_eq!(s.then_swap(1).sign(), -1);
        assert!(SignedPermutation::from_order(vec![0, 0]).is_err());
        assert_eq!(s.apply(&[10, 20, 30]), vec![30, 10, 20]);
    }

    #[test]
    fn dot_weights_cover_all_nonnegative_permutations() {
        let mu = p(&[2, 1]);
        let listed = nonnegative_dot_weights(&mu, 3);
        let mut brute = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let sigma = SignedPermutation::from_order(vec![a, b, c]).unwrap();
                    if let Some(wt) = dot_weight(&sigma, &mu) {
                        brute += 1;
                        assert!(listed.contains(&(sigma, wt)));
                    }
                }
            }
        }
        assert_eq!(listed.len(), brute);
        assert!(listed[0].0.is_identity());
    }
}
