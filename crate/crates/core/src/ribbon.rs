//! Quasi-ribbon tableaux, Krob–Thibon insertion, recording ribbons and the
//! hypoplactic congruence.
//!
//! A ribbon of shape `α` is stored as its cells in path order (rows left to
//! right, top row first) together with the shape; cells `p` and `p+1` share a
//! column exactly when `p` is a proper partial sum of `α`, and share a row
//! otherwise. A quasi-ribbon tableau is then a filling that is weakly
//! increasing along the path and strictly increasing down each column.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{
    descent_composition, inverse_permutation, max_decreasing_factorization, standardize, weight,
    Composition, Symbol, Word,
};
use crate::young::{plactic_relations, write_grid, YoungTableau};

/// `down[p]` is true when path cells `p` and `p+1` (0-based) are vertically adjacent.
fn steps_of(shape: &Composition) -> Vec<bool> {
    let n = shape.weight();
    let mut down = vec![false; n.saturating_sub(1)];
    for d in shape.descent_set() {
        down[d - 1] = true;
    }
    down
}

fn shape_of_steps(down: &[bool], total: usize) -> Composition {
    let d: Vec<usize> = down
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(p, _)| p + 1)
        .collect();
    Composition::from_descent_set(&d, total).expect("steps describe a composition")
}

fn split_rows(cells: &[Symbol], shape: &Composition) -> Vec<Vec<Symbol>> {
    let mut rows = Vec::with_capacity(shape.len());
    let mut start = 0;
    for &p in shape.parts() {
        rows.push(cells[start..start + p].to_vec());
        start += p;
    }
    rows
}

fn split_columns(cells: &[Symbol], down: &[bool]) -> Vec<Vec<Symbol>> {
    let mut cols: Vec<Vec<Symbol>> = Vec::new();
    for (p, &c) in cells.iter().enumerate() {
        if p == 0 || !down[p - 1] {
            cols.push(Vec::new());
        }
        cols.last_mut().unwrap().push(c);
    }
    cols
}

fn flatten_rows(shape: &Composition, rows: Vec<Vec<Symbol>>) -> Result<Vec<Symbol>> {
    if rows.len() != shape.len() || rows.iter().zip(shape.parts()).any(|(r, &p)| r.len() != p) {
        return Err(Error::InvalidTableau(
            "row lengths do not match the shape".into(),
        ));
    }
    let cells: Vec<Symbol> = rows.into_iter().flatten().collect();
    if cells.contains(&0) {
        return Err(Error::ZeroSymbol(0));
    }
    Ok(cells)
}

/// Column index of each path cell, for staircase rendering.
fn row_offsets(shape: &Composition) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(shape.len());
    let mut col = 0;
    for &p in shape.parts() {
        offsets.push(col);
        col += p - 1;
    }
    offsets
}

fn render(f: &mut fmt::Formatter<'_>, shape: &Composition, cells: &[Symbol]) -> fmt::Result {
    let rows = split_rows(cells, shape);
    let offsets = row_offsets(shape);
    write_grid(f, offsets.into_iter().zip(rows.iter().map(Vec::as_slice)))
}

#[derive(Serialize, Deserialize)]
struct RibbonJson {
    shape: Vec<usize>,
    rows: Vec<Vec<Symbol>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    standard: bool,
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RibbonJson", into = "RibbonJson")]
pub struct QuasiRibbonTableau {
    shape: Composition,
    cells: Vec<Symbol>,
}

impl QuasiRibbonTableau {
    pub fn new(shape: Composition, rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let cells = flatten_rows(&shape, rows)?;
        let down = steps_of(&shape);
        for (p, pair) in cells.windows(2).enumerate() {
            if pair[0] > pair[1] || (down[p] && pair[0] == pair[1]) {
                return Err(Error::InvalidTableau(format!(
                    "quasi-ribbon condition fails between cells {} and {}",
                    p + 1,
                    p + 2
                )));
            }
        }
        Ok(QuasiRibbonTableau { shape, cells })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The tableau of shape `α` filled with `1..=|α|` along the ribbon.
    pub fn standard(shape: &Composition) -> Self {
        QuasiRibbonTableau {
            shape: shape.clone(),
            cells: (1..=shape.weight() as Symbol).collect(),
        }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// Entries in path order (concatenated rows).
    pub fn entries(&self) -> &[Symbol] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<Symbol>> {
        split_rows(&self.cells, &self.shape)
    }

    /// Columns left to right, each listed top to bottom.
    pub fn columns(&self) -> Vec<Vec<Symbol>> {
        split_columns(&self.cells, &steps_of(&self.shape))
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn reading(&self) -> Word {
        Word::from_vec_unchecked(
            self.columns()
                .into_iter()
                .flat_map(|c| c.into_iter().rev())
                .collect(),
        )
    }

    pub fn to_tabloid(&self) -> QuasiRibbonTabloid {
        QuasiRibbonTabloid {
            columns: self.columns(),
        }
    }

    /// Inserts in place; returns the 0-based path position of the new cell.
    fn insert_at(&mut self, a: Symbol, down: &mut Vec<bool>) -> usize {
        let k = self.cells.partition_point(|&x| x <= a);
        let len = self.cells.len();
        self.cells.insert(k, a);
        if len > 0 {
            if k == 0 {
                down.insert(0, true);
            } else if k == len {
                down.push(false);
            } else {
                // x at k-1, z at k: x a horizontally, z below a
                down[k - 1] = false;
                down.insert(k, true);
            }
        }
        k
    }
}

impl TryFrom<RibbonJson> for QuasiRibbonTableau {
    type Error = Error;
    fn try_from(j: RibbonJson) -> Result<Self> {
        QuasiRibbonTableau::new(Composition::new(j.shape)?, j.rows)
    }
}

impl From<QuasiRibbonTableau> for RibbonJson {
    fn from(t: QuasiRibbonTableau) -> Self {
        RibbonJson {
            rows: t.rows(),
            shape: t.shape.parts().to_vec(),
            standard: false,
        }
    }
}

impl fmt::Display for QuasiRibbonTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(f, &self.shape, &self.cells)
    }
}

/// A ribbon filled with `1..=N`, rows increasing left to right and columns
/// increasing bottom to top.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RibbonJson", into = "RibbonJson")]
pub struct RecordingRibbon {
    shape: Composition,
    cells: Vec<Symbol>,
}

impl RecordingRibbon {
    pub fn new(shape: Composition, rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let cells = flatten_rows(&shape, rows)?;
        let n = cells.len();
        let mut seen = vec![false; n + 1];
        for &c in &cells {
            let c = c as usize;
            if c > n || seen[c] {
                return Err(Error::InvalidTableau(
                    "recording ribbon entries are not 1..N".into(),
                ));
            }
            seen[c] = true;
        }
        let down = steps_of(&shape);
        for (p, pair) in cells.windows(2).enumerate() {
            if down[p] != (pair[0] > pair[1]) {
                return Err(Error::InvalidTableau(format!(
                    "recording ribbon order fails between cells {} and {}",
                    p + 1,
                    p + 2
                )));
            }
        }
        Ok(RecordingRibbon { shape, cells })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<Symbol>> {
        split_rows(&self.cells, &self.shape)
    }
}

impl TryFrom<RibbonJson> for RecordingRibbon {
    type Error = Error;
    fn try_from(j: RibbonJson) -> Result<Self> {
        RecordingRibbon::new(Composition::new(j.shape)?, j.rows)
    }
}

impl From<RecordingRibbon> for RibbonJson {
    fn from(r: RecordingRibbon) -> Self {
        RibbonJson {
            rows: r.rows(),
            shape: r.shape.parts().to_vec(),
            standard: true,
        }
    }
}

impl fmt::Display for RecordingRibbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(f, &self.shape, &self.cells)
    }
}

/// Columns in ribbon staircase arrangement: the bottom cell of each column
/// shares a row with the top cell of the next. Only columns are constrained.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuasiRibbonTabloid {
    columns: Vec<Vec<Symbol>>,
}

impl QuasiRibbonTabloid {
    /// Columns listed left to right, each top to bottom.
    pub fn new(columns: Vec<Vec<Symbol>>) -> Result<Self> {
        for c in &columns {
            if c.is_empty() || c.contains(&0) || c.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::InvalidTableau(
                    "columns must be non-empty and strictly increasing".into(),
                ));
            }
        }
        Ok(QuasiRibbonTabloid { columns })
    }

    pub fn columns(&self) -> &[Vec<Symbol>] {
        &self.columns
    }

    fn path(&self) -> (Vec<Symbol>, Vec<bool>) {
        let mut cells = Vec::new();
        let mut down = Vec::new();
        for (h, col) in self.columns.iter().enumerate() {
            if h > 0 {
                down.push(false);
            }
            for (r, &c) in col.iter().enumerate() {
                if r > 0 {
                    down.push(true);
                }
                cells.push(c);
            }
        }
        (cells, down)
    }

    pub fn shape(&self) -> Composition {
        let (cells, down) = self.path();
        shape_of_steps(&down, cells.len())
    }

    /// The tabloid as a quasi-ribbon tableau, if its rows are non-decreasing.
    pub fn to_tableau(&self) -> Option<QuasiRibbonTableau> {
        let (cells, down) = self.path();
        let ok = cells
            .windows(2)
            .zip(&down)
            .all(|(p, &d)| if d { p[0] < p[1] } else { p[0] <= p[1] });
        ok.then(|| QuasiRibbonTableau {
            shape: shape_of_steps(&down, cells.len()),
            cells,
        })
    }
}

impl fmt::Display for QuasiRibbonTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (cells, down) = self.path();
        render(f, &shape_of_steps(&down, cells.len()), &cells)
    }
}

/// Columns left to right, each read bottom to top.
pub fn qr_column_reading(t: &QuasiRibbonTabloid) -> Word {
    Word::from_vec_unchecked(
        t.columns
            .iter()
            .flat_map(|c| c.iter().rev().copied())
            .collect(),
    )
}

/// The quasi-ribbon tabloid whose columns are the maximal decreasing factors of `w`.
pub fn qr_tabloid_of(w: &Word) -> QuasiRibbonTabloid {
    QuasiRibbonTabloid {
        columns: max_decreasing_factorization(w)
            .into_iter()
            .map(|f| f.into_symbols().into_iter().rev().collect())
            .collect(),
    }
}

pub fn is_quasi_ribbon_word(w: &Word) -> bool {
    qr_tabloid_of(w).to_tableau().is_some()
}

/// Krob–Thibon insertion of `a` into `t`.
pub fn kt_insert(t: &QuasiRibbonTableau, a: Symbol) -> QuasiRibbonTableau {
    let mut out = t.clone();
    let mut down = steps_of(&t.shape);
    out.insert_at(a, &mut down);
    out.shape = shape_of_steps(&down, out.cells.len());
    out
}

/// `(QRT(w), R(w))`.
pub fn hypo_rsk(w: &Word) -> (QuasiRibbonTableau, RecordingRibbon) {
    let mut t = QuasiRibbonTableau::empty();
    let mut down = Vec::new();
    let mut labels: Vec<Symbol> = Vec::with_capacity(w.len());
    for (i, a) in w.iter().enumerate() {
        let k = t.insert_at(a, &mut down);
        labels.insert(k, i as Symbol + 1);
    }
    let shape = shape_of_steps(&down, t.cells.len());
    t.shape = shape.clone();
    (
        t,
        RecordingRibbon {
            shape,
            cells: labels,
        },
    )
}

/// Inverse of [`hypo_rsk`]: removes cells in decreasing order of their recording label.
pub fn hypo_rsk_inverse(t: &QuasiRibbonTableau, r: &RecordingRibbon) -> Result<Word> {
    if t.shape != r.shape {
        return Err(Error::ShapeMismatch);
    }
    let mut cells = t.cells.clone();
    let mut labels = r.cells.clone();
    let mut out = vec![0; cells.len()];
    for k in (1..=labels.len()).rev() {
        let p = labels
            .iter()
            .position(|&l| l as usize == k)
            .expect("recording ribbon holds 1..N");
        out[k - 1] = cells.remove(p);
        labels.remove(p);
    }
    Ok(Word::from_vec_unchecked(out))
}

/// `descomp(std(w)⁻¹)`, the shape of `QRT(w)`.
pub fn predicted_shape(w: &Word) -> Composition {
    let inv = inverse_permutation(&standardize(w)).expect("standardization is standard");
    descent_composition(&inv).expect("inverse of a standard word is standard")
}

/// Equal weight and equal `descomp(std(·)⁻¹)`.
pub fn hypo_congruent(u: &Word, v: &Word) -> bool {
    u.len() == v.len() && weight(u) == weight(v) && predicted_shape(u) == predicted_shape(v)
}

/// Defining relations of the hypoplactic monoid of rank `n`.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct HypoRelationSet {
    pairs: Vec<(Word, Word)>,
}

impl HypoRelationSet {
    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// The Knuth relations plus `cadb = acbd` (a ≤ b < c ≤ d) and
/// `bdac = dbca` (a < b ≤ c < d) over `1..=n`.
pub fn hypoplactic_relations(n: u32) -> HypoRelationSet {
    let mut pairs: Vec<(Word, Word)> = plactic_relations(n).pairs().to_vec();
    let w4 = |s: [Symbol; 4]| Word::from_vec_unchecked(s.to_vec());
    for a in 1..=n {
        for b in a..=n {
            for c in b + 1..=n {
                for d in c..=n {
                    pairs.push((w4([c, a, d, b]), w4([a, c, b, d])));
                }
            }
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b..=n {
                for d in c + 1..=n {
                    pairs.push((w4([b, d, a, c]), w4([d, b, c, a])));
                }
            }
        }
    }
    HypoRelationSet { pairs }
}

/// Slides the columns of a ribbon filling up to row 1, then closes the gaps in
/// each row. Columns are given left to right, each top to bottom.
pub fn slide_up_slide_left_columns(columns: &[Vec<Symbol>]) -> Result<YoungTableau> {
    let tabloid = QuasiRibbonTabloid::new(columns.to_vec())?;
    let height = tabloid.columns.iter().map(Vec::len).max().unwrap_or(0);
    let rows: Vec<Vec<Symbol>> = (0..height)
        .map(|r| {
            tabloid
                .columns
                .iter()
                .filter_map(|c| c.get(r).copied())
                .collect()
        })
        .collect();
    YoungTableau::new(rows)
}

pub fn slide_up_slide_left(t: &QuasiRibbonTableau) -> Result<YoungTableau> {
    slide_up_slide_left_columns(&t.columns())
}

/// The quasi-ribbon tableau of shape `α` with row `j` full of symbols `j`.
pub fn highest_weight_tableau(shape: &Composition) -> QuasiRibbonTableau {
    let rows = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| vec![j as Symbol + 1; p])
        .collect();
    QuasiRibbonTableau::new(shape.clone(), rows).expect("rows of distinct constant symbols")
}

/// Reading of [`highest_weight_tableau`].
pub fn highest_weight_qrw(shape: &Composition) -> Word {
    highest_weight_tableau(shape).reading()
}

/// Every quasi-ribbon tableau of shape `α` with entries in `1..=n`.
pub fn quasi_ribbon_tableaux(shape: &Composition, n: u32) -> Vec<QuasiRibbonTableau> {
    let down = steps_of(shape);
    let total = shape.weight();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(total);
    fn fill(
        cur: &mut Vec<Symbol>,
        down: &[bool],
        total: usize,
        n: u32,
        shape: &Composition,
        out: &mut Vec<QuasiRibbonTableau>,
    ) {
        let p = cur.len();
        if p == total {
            out.push(QuasiRibbonTableau {
                shape: shape.clone(),
                cells: cur.clone(),
            });
            return;
        }
        let lo = match cur.last() {
            None => 1,
            Some(&x) if down[p - 1] => x + 1,
            Some(&x) => x,
        };
        // strict steps still ahead must fit under n
        let forced = down[p.min(down.len())..].iter().filter(|&&d| d).count() as u32;
        for s in lo..=n.saturating_sub(forced) {
            cur.push(s);
            fill(cur, down, total, n, shape, out);
            cur.pop();
        }
    }
    if total == 0 {
        return vec![QuasiRibbonTableau::empty()];
    }
    fill(&mut cur, &down, total, n, shape, &mut out);
    out
}
