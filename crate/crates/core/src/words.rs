//! Words over ordered alphabets, weights, standardization and the
//! composition arithmetic used by the rest of the crate.
//!
//! Positions and symbols are 1-indexed on the public surface.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A symbol of the alphabet `{1 < 2 < ...}`. Zero is never a valid symbol.
pub type Symbol = u32;

/// A finite word over the positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if let Some(&z) = symbols.iter().find(|&&s| s == 0) {
            return Err(Error::ZeroSymbol(z));
        }
        Ok(Word(symbols))
    }

    pub(crate) fn from_vec_unchecked(symbols: Vec<Symbol>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s > 0));
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().copied()
    }

    /// `|w|_x`, the number of occurrences of `x`.
    pub fn count(&self, x: Symbol) -> usize {
        self.0.iter().filter(|&&s| s == x).count()
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.0.iter().copied().max()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Checks that every symbol lies in `1..=n`.
    pub fn check_bound(&self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        match self.0.iter().find(|&&s| s > n) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, n }),
            None => Ok(()),
        }
    }

    /// Copy of the word with the symbol at 0-based `pos` replaced.
    pub(crate) fn with_symbol(&self, pos: usize, s: Symbol) -> Word {
        let mut v = self.0.clone();
        v[pos] = s;
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&s| s <= 9) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
            f.write_str(&parts.join(","))?;
            // a lone multi-digit symbol keeps a trailing comma so it reads back as one symbol
            if parts.len() == 1 {
                f.write_str(",")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let symbols = if s.contains(',') {
            s.strip_suffix(',')
                .unwrap_or(s)
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<Symbol>()
                        .map_err(|_| Error::Parse(format!("bad symbol `{t}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad symbol `{c}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(symbols)
    }
}

impl From<&[Symbol]> for Word {
    /// Panics on a zero symbol; intended for literals in tests and examples.
    fn from(s: &[Symbol]) -> Self {
        Word::new(s.to_vec()).expect("symbols must be positive")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Weak composition stored without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(mut terms: Vec<usize>) -> Self {
        while terms.last() == Some(&0) {
            terms.pop();
        }
        WeakComposition(terms)
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    /// The `k`-th term (1-indexed); zero beyond the stored length.
    pub fn term(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// True when the terms are non-increasing, i.e. the weak composition is a partition.
    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] >= p[1])
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "({})", s.join(","))
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part `{t}`")))
        })
        .collect()
}

/// A finite sequence of strictly positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, `ℓ(α)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of parts, `|α|`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Proper partial sums `{α1, α1+α2, ..., α1+...+α(ℓ-1)}` in increasing order.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`]: the composition of `total`
    /// whose proper partial sums are exactly `descents`.
    pub fn from_descent_set(descents: &[usize], total: usize) -> Result<Self> {
        if total == 0 {
            return if descents.is_empty() {
                Ok(Composition(Vec::new()))
            } else {
                Err(Error::ZeroPart)
            };
        }
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents.iter().chain(std::iter::once(&total)) {
            if d <= prev {
                return Err(Error::ZeroPart);
            }
            parts.push(d - prev);
            prev = d;
        }
        Ok(Composition(parts))
    }

    pub fn as_weak(&self) -> WeakComposition {
        WeakComposition::new(self.0.clone())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// A non-increasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NotPartition);
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// `wt(w)`: the k-th term counts the symbols k in `w`.
pub fn weight(w: &Word) -> WeakComposition {
    let max = w.max_symbol().unwrap_or(0) as usize;
    let mut terms = vec![0; max];
    for s in w.iter() {
        terms[s as usize - 1] += 1;
    }
    WeakComposition::new(terms)
}

/// Dominance order on weights: every prefix sum of `a` is at most the
/// corresponding prefix sum of `b`.
pub fn weight_leq(a: &WeakComposition, b: &WeakComposition) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for k in 1..=len {
        sa += a.term(k);
        sb += b.term(k);
        if sa > sb {
            return false;
        }
    }
    true
}

/// Relabels `w` as a permutation of `1..=|w|`, breaking ties between equal
/// symbols from left to right.
pub fn standardize(w: &Word) -> Word {
    let mut order: Vec<usize> = (0..w.len()).collect();
    // stable sort keeps equal symbols in left-to-right order
    order.sort_by_key(|&p| w.symbols()[p]);
    let mut out = vec![0; w.len()];
    for (rank, &p) in order.iter().enumerate() {
        out[p] = rank as Symbol + 1;
    }
    Word::from_vec_unchecked(out)
}

pub fn is_standard(w: &Word) -> bool {
    let k = w.len();
    let mut seen = vec![false; k + 1];
    for s in w.iter() {
        let s = s as usize;
        if s > k || seen[s] {
            return false;
        }
        seen[s] = true;
    }
    true
}

fn require_standard(w: &Word) -> Result<()> {
    if is_standard(w) {
        Ok(())
    } else {
        Err(Error::NotStandard(w.to_string()))
    }
}

pub fn inverse_permutation(w: &Word) -> Result<Word> {
    require_standard(w)?;
    let mut out = vec![0; w.len()];
    for (h, s) in w.iter().enumerate() {
        out[s as usize - 1] = h as Symbol + 1;
    }
    Ok(Word::from_vec_unchecked(out))
}

/// Positions `h` (1-indexed) with `w[h] > w[h+1]`.
pub fn descent_set(w: &Word) -> Result<Vec<usize>> {
    require_standard(w)?;
    Ok(w.symbols()
        .windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(h, _)| h + 1)
        .collect())
}

pub fn descent_composition(w: &Word) -> Result<Composition> {
    let d = descent_set(w)?;
    Composition::from_descent_set(&d, w.len())
}

/// `b ⪯ a`: `b` is obtained from `a` by merging consecutive parts.
pub fn coarser(b: &Composition, a: &Composition) -> Result<bool> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch(b.weight(), a.weight()));
    }
    let da = a.descent_set();
    Ok(b.descent_set().iter().all(|d| da.binary_search(d).is_ok()))
}

/// All `β ⪯ α`, each once. Subsets of the descent set of `α` are visited in
/// decreasing binary order with the first descent as the most significant
/// bit, so `α` itself comes first and the one-part composition last.
pub fn coarsenings(a: &Composition) -> Vec<Composition> {
    let d = a.descent_set();
    let m = d.len();
    let total = a.weight();
    (0..1usize << m)
        .rev()
        .map(|mask| {
            let kept: Vec<usize> = (0..m)
                .filter(|&j| mask >> (m - 1 - j) & 1 == 1)
                .map(|j| d[j])
                .collect();
            Composition::from_descent_set(&kept, total).expect("subset of a descent set")
        })
        .collect()
}

/// All compositions of `k`, in the order produced by [`coarsenings`] of `(1,...,1)`.
pub fn compositions_of(k: usize) -> Vec<Composition> {
    if k == 0 {
        return vec![Composition::default()];
    }
    coarsenings(&Composition(vec![1; k]))
}

/// All partitions of `k`, largest first part first.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Factorization into maximal strictly decreasing factors.
pub fn max_decreasing_factorization(w: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur: Vec<Symbol> = Vec::new();
    for s in w.iter() {
        if let Some(&last) = cur.last() {
            if s >= last {
                out.push(Word::from_vec_unchecked(std::mem::take(&mut cur)));
            }
        }
        cur.push(s);
    }
    if !cur.is_empty() {
        out.push(Word::from_vec_unchecked(cur));
    }
    out
}

/// Whether `w` contains `i+1` somewhere to the left of `i`.
pub fn has_inversion(w: &Word, i: Symbol) -> bool {
    let mut seen_upper = false;
    for s in w.iter() {
        if s == i + 1 {
            seen_upper = true;
        } else if s == i && seen_upper {
            return true;
        }
    }
    false
}

/// `w♯`: reverse the word and send each `a` to `n - a + 1`.
pub fn schuetzenberger_involution(w: &Word, n: u32) -> Result<Word> {
    w.check_bound(n)?;
    Ok(Word::from_vec_unchecked(
        w.symbols().iter().rev().map(|&a| n - a + 1).collect(),
    ))
}

/// Every word of length `len` over `1..=n`, in lexicographic order.
pub fn all_words(n: u32, len: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity((n as usize).pow(len as u32));
    let mut cur = vec![1; len];
    if n == 0 {
        if len == 0 {
            out.push(Word::empty());
        }
        return out;
    }
    loop {
        out.push(Word::from_vec_unchecked(cur.clone()));
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < n {
                cur[k] += 1;
                for c in cur.iter_mut().skip(k + 1) {
                    *c = 1;
                }
                break;
            }
        }
    }
}

/// Every word of length at most `max_len` over `1..=n`, shortest first.
pub fn all_words_up_to(n: u32, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|len| all_words(n, len)).collect()
}

/// Every word whose weight is `wt`, in lexicographic order.
pub fn words_of_weight(wt: &WeakComposition) -> Vec<Word> {
    let mut cur: Vec<Symbol> = wt
        .terms()
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat_n(k as Symbol + 1, c))
        .collect();
    let mut out = vec![Word::from_vec_unchecked(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Word::from_vec_unchecked(cur.clone()));
    }
    out
}

/// Advances to the next lexicographic arrangement of a multiset; false at the last one.
fn next_permutation(v: &mut [Symbol]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
