//! Class sizes, tableau counts and the factorization, conjugacy and identity
//! checks, each with a brute-force counterpart.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ribbon::{
    highest_weight_qrw, hypo_congruent, hypo_rsk, is_quasi_ribbon_word, quasi_ribbon_tableaux,
    slide_up_slide_left, QuasiRibbonTableau,
};
use crate::words::{
    coarsenings, compositions_of, weight, words_of_weight, Composition, Partition, Symbol, Word,
};

/// Largest word length the brute-force enumerations accept.
pub const BRUTE_LIMIT: usize = 10;

fn guard(what: &'static str, size: usize) -> Result<()> {
    if size > BRUTE_LIMIT {
        Err(Error::TooLarge {
            what,
            size,
            limit: BRUTE_LIMIT,
        })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultinomialArgs {
    total: usize,
    parts: Vec<usize>,
}

impl MultinomialArgs {
    pub fn new(total: usize, parts: Vec<usize>) -> Result<Self> {
        let actual: usize = parts.iter().sum();
        if actual != total {
            return Err(Error::SumMismatch {
                expected: total,
                actual,
            });
        }
        Ok(MultinomialArgs { total, parts })
    }

    pub fn of_parts(parts: &[usize]) -> Self {
        MultinomialArgs {
            total: parts.iter().sum(),
            parts: parts.to_vec(),
        }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

/// `total! / ∏ parts!`.
pub fn multinomial(args: &MultinomialArgs) -> BigUint {
    let mut acc = BigUint::one();
    let mut sofar = 0;
    for &p in &args.parts {
        sofar += p;
        acc *= binomial(sofar, p);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSizeQuery {
    pub shape: Composition,
    pub n: u32,
}

impl ClassSizeQuery {
    pub fn new(shape: Composition, n: u32) -> Self {
        ClassSizeQuery { shape, n }
    }
}

/// Size of any hypoplactic class whose quasi-ribbon tableau has the given shape:
/// the alternating sum of multinomials over coarsenings.
pub fn hypo_class_size(q: &ClassSizeQuery) -> BigUint {
    let alpha = &q.shape;
    if alpha.len() > q.n as usize {
        return BigUint::zero();
    }
    let mut sum = BigInt::zero();
    for beta in coarsenings(alpha) {
        let term = BigInt::from(multinomial(&MultinomialArgs::of_parts(beta.parts())));
        if (alpha.len() - beta.len()).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    debug_assert!(!sum.is_negative());
    sum.to_biguint().expect("class sizes are non-negative")
}

/// Every word with the same weight and quasi-ribbon tableau as `w`, in lexicographic order.
pub fn hypo_class(w: &Word) -> Result<Vec<Word>> {
    guard("word", w.len())?;
    let t = hypo_rsk(w).0;
    Ok(words_of_weight(&weight(w))
        .into_iter()
        .filter(|u| hypo_rsk(u).0 == t)
        .collect())
}

/// Class size by enumerating the words of weight `α` and comparing tableaux
/// with that of the highest-weight quasi-ribbon word of shape `α`.
pub fn hypo_class_size_brute(q: &ClassSizeQuery) -> Result<BigUint> {
    guard("composition", q.shape.weight())?;
    if q.shape.len() > q.n as usize {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(
        hypo_class(&highest_weight_qrw(&q.shape))?.len(),
    ))
}

/// The quasi-ribbon tableau of shape `β` and content `γ`, if any: entries are
/// forced to be sorted along the ribbon.
pub fn tableau_with_content(beta: &Composition, gamma: &[usize]) -> Option<QuasiRibbonTableau> {
    if gamma.iter().sum::<usize>() != beta.weight() {
        return None;
    }
    let cells: Vec<Symbol> = gamma
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat_n(k as Symbol + 1, c))
        .collect();
    let mut rows = Vec::with_capacity(beta.len());
    let mut start = 0;
    for &p in beta.parts() {
        rows.push(cells[start..start + p].to_vec());
        start += p;
    }
    QuasiRibbonTableau::new(beta.clone(), rows).ok()
}

/// Size of the class of the tableau of shape `β` and content `γ`, by enumeration.
pub fn hypo_class_size_with_content(beta: &Composition, gamma: &Composition) -> Result<BigUint> {
    guard("composition", gamma.weight())?;
    Ok(match tableau_with_content(beta, gamma.parts()) {
        None => BigUint::zero(),
        Some(t) => BigUint::from(hypo_class(&t.reading())?.len()),
    })
}

/// The classes of words of weight `α` partition them: the coarsening sum of
/// brute class sizes equals the multinomial of `α`.
pub fn novelli_recursion_check(alpha: &Composition, n: u32) -> Result<bool> {
    guard("composition", alpha.weight())?;
    if alpha.len() > n as usize {
        return Err(Error::AlphabetTooSmall {
            parts: alpha.len(),
            n,
        });
    }
    let mut sum = BigUint::zero();
    for beta in coarsenings(alpha) {
        sum += hypo_class_size_brute(&ClassSizeQuery::new(beta, n))?;
    }
    Ok(sum == multinomial(&MultinomialArgs::of_parts(alpha.parts())))
}

/// Number of quasi-ribbon tableaux of shape `α` over `1..=n`.
pub fn count_qrt(alpha: &Composition, n: u32) -> BigUint {
    let (l, n) = (alpha.len(), n as usize);
    if l > n {
        return BigUint::zero();
    }
    binomial(n + alpha.weight() - l, n - l)
}

/// Number of crystal components of shape `λ` over `1..=n` that contain a
/// quasi-ribbon word.
pub fn count_iso_plac_components_with_qrw(lambda: &Partition, n: u32) -> BigUint {
    let p = lambda.parts();
    let first = p.first().copied().unwrap_or(0);
    if lambda.weight() - first + 1 > n as usize {
        return BigUint::zero();
    }
    let mut parts: Vec<usize> = p.windows(2).map(|x| x[0] - x[1]).collect();
    if let Some(&last) = p.last() {
        parts.push(last);
    }
    multinomial(&MultinomialArgs::of_parts(&parts))
}

/// The same count by sliding the standard filling of every composition with at
/// most `n` parts and collecting the distinct recording tableaux of shape `λ`.
pub fn count_iso_plac_components_brute(lambda: &Partition, n: u32) -> Result<BigUint> {
    let k = lambda.weight();
    guard("partition", k)?;
    let found: std::collections::HashSet<_> = compositions_of(k)
        .iter()
        .filter(|a| a.len() <= n as usize)
        .filter_map(|a| slide_up_slide_left(&QuasiRibbonTableau::standard(a)).ok())
        .filter(|y| y.shape() == *lambda)
        .collect();
    Ok(BigUint::from(found.len()))
}

/// Number of pairs `(u, v)` of quasi-ribbon words over `1..=n` with shapes
/// `α` and `β` such that `u·v` is congruent to `w`.
pub fn factorization_count(
    w: &Word,
    alpha: &Composition,
    beta: &Composition,
    n: u32,
) -> Result<usize> {
    w.check_bound(n)?;
    if !is_quasi_ribbon_word(w) {
        return Err(Error::NotQuasiRibbonWord(w.to_string()));
    }
    if alpha.weight() + beta.weight() != w.len() {
        return Err(Error::WeightMismatch(
            alpha.weight() + beta.weight(),
            w.len(),
        ));
    }
    let wt = weight(w);
    let mut count = 0;
    for tu in quasi_ribbon_tableaux(alpha, n) {
        let u = tu.reading();
        let wu = weight(&u);
        let rest: Option<Vec<usize>> = (1..=wt.len().max(wu.len()))
            .map(|k| wt.term(k).checked_sub(wu.term(k)))
            .collect();
        let Some(rest) = rest else { continue };
        let Some(tv) = tableau_with_content(beta, &rest) else {
            continue;
        };
        if hypo_congruent(w, &u.concat(&tv.reading())) {
            count += 1;
        }
    }
    Ok(count)
}

/// `g = n(n−1)⋯1` when `u·g ≡ g·v` and `g·u ≡ v·g`; `None` if the weights differ.
pub fn o_conjugacy_witness(u: &Word, v: &Word, n: u32) -> Result<Option<Word>> {
    u.check_bound(n)?;
    v.check_bound(n)?;
    if weight(u) != weight(v) {
        return Ok(None);
    }
    let g = Word::new((1..=n).rev().collect())?;
    let holds =
        hypo_congruent(&u.concat(&g), &g.concat(v)) && hypo_congruent(&g.concat(u), &v.concat(&g));
    Ok(holds.then_some(g))
}

/// Whether `xyxy` and `yxyx` are congruent.
pub fn check_identity_xyxy(x: &Word, y: &Word, n: u32) -> Result<bool> {
    x.check_bound(n)?;
    y.check_bound(n)?;
    let xy = x.concat(y);
    let yx = y.concat(x);
    Ok(hypo_congruent(&xy.concat(&xy), &yx.concat(&yx)))
}
