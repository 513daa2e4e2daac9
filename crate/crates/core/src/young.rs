//! Young tableaux, Schensted insertion and the classical Robinson–Schensted–Knuth
//! correspondence; tableau words, Yamanouchi words and the plactic congruence.
//!
//! Tableaux use the English convention: rows top-to-bottom, first row longest.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{max_decreasing_factorization, weight, Partition, Symbol, Word};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct YoungTableau {
    rows: Vec<Vec<Symbol>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    rows: Vec<Vec<Symbol>>,
}

impl TryFrom<TableauJson> for YoungTableau {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<Self> {
        YoungTableau::new(j.rows)
    }
}

impl From<YoungTableau> for TableauJson {
    fn from(t: YoungTableau) -> Self {
        TableauJson { rows: t.rows }
    }
}

fn check_young_rows(rows: &[Vec<Symbol>], strict_rows: bool) -> Result<()> {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(Error::InvalidTableau(format!("row {} is empty", r + 1)));
        }
        if row.contains(&0) {
            return Err(Error::ZeroSymbol(0));
        }
        let bad_row = if strict_rows {
            row.windows(2).any(|p| p[0] >= p[1])
        } else {
            row.windows(2).any(|p| p[0] > p[1])
        };
        if bad_row {
            return Err(Error::InvalidTableau(format!(
                "row {} is not increasing",
                r + 1
            )));
        }
        if r > 0 {
            let above = &rows[r - 1];
            if row.len() > above.len() {
                return Err(Error::InvalidTableau("row lengths increase".into()));
            }
            if row.iter().zip(above).any(|(b, a)| a >= b) {
                return Err(Error::InvalidTableau(format!(
                    "column not strictly increasing at row {}",
                    r + 1
                )));
            }
        }
    }
    Ok(())
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<Symbol>>) -> Result<Self> {
        check_young_rows(&rows, false)?;
        Ok(YoungTableau { rows })
    }

    pub fn empty() -> Self {
        YoungTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid tableau shape")
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Columns, each listed top to bottom.
    pub fn to_tabloid(&self) -> Tabloid {
        let width = self.rows.first().map_or(0, Vec::len);
        let columns = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect();
        Tabloid { columns }
    }

    pub fn reading(&self) -> Word {
        column_reading(&self.to_tabloid())
    }

    /// Row insertion in place; returns the 0-based row that gained a cell.
    fn bump(&mut self, mut a: Symbol) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&z| z > a) {
                None => {
                    row.push(a);
                    return r;
                }
                Some(p) => a = std::mem::replace(&mut row[p], a),
            }
        }
        self.rows.push(vec![a]);
        self.rows.len() - 1
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.rows.iter().map(|r| (0, r.as_slice())))
    }
}

/// Renders rows of cells, each row shifted right by its offset.
pub(crate) fn write_grid<'a>(
    f: &mut fmt::Formatter<'_>,
    rows: impl Iterator<Item = (usize, &'a [Symbol])>,
) -> fmt::Result {
    let rows: Vec<(usize, &[Symbol])> = rows.collect();
    let width = rows
        .iter()
        .flat_map(|(_, r)| r.iter())
        .map(|s| s.to_string().len())
        .max()
        .unwrap_or(1);
    for (i, (offset, row)) in rows.iter().enumerate() {
        if i > 0 {
            writeln!(f)?;
        }
        let mut line = " ".repeat(offset * (width + 1));
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        line.push_str(&cells.join(" "));
        f.write_str(line.trim_end())?;
    }
    Ok(())
}

/// A Young tableau filled with `1..=N`, each once.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct StandardYoungTableau {
    rows: Vec<Vec<Symbol>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<Symbol>>) -> Result<Self> {
        check_young_rows(&rows, true)?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &s in rows.iter().flatten() {
            let s = s as usize;
            if s > n || seen[s] {
                return Err(Error::InvalidTableau("entries are not 1..N".into()));
            }
            seen[s] = true;
        }
        Ok(StandardYoungTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid tableau shape")
    }

    pub fn as_tableau(&self) -> YoungTableau {
        YoungTableau {
            rows: self.rows.clone(),
        }
    }
}

impl TryFrom<TableauJson> for StandardYoungTableau {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<Self> {
        StandardYoungTableau::new(j.rows)
    }
}

impl From<StandardYoungTableau> for TableauJson {
    fn from(t: StandardYoungTableau) -> Self {
        TableauJson { rows: t.rows }
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.rows.iter().map(|r| (0, r.as_slice())))
    }
}

/// Top-aligned columns, each strictly increasing from top to bottom.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "TabloidJson", into = "TabloidJson")]
pub struct Tabloid {
    columns: Vec<Vec<Symbol>>,
}

#[derive(Serialize, Deserialize)]
struct TabloidJson {
    columns: Vec<Vec<Symbol>>,
}

impl TryFrom<TabloidJson> for Tabloid {
    type Error = Error;
    fn try_from(j: TabloidJson) -> Result<Self> {
        Tabloid::new(j.columns)
    }
}

impl From<Tabloid> for TabloidJson {
    fn from(t: Tabloid) -> Self {
        TabloidJson { columns: t.columns }
    }
}

impl Tabloid {
    pub fn new(columns: Vec<Vec<Symbol>>) -> Result<Self> {
        for c in &columns {
            if c.is_empty() || c.contains(&0) || c.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::InvalidTableau(
                    "tabloid columns must be non-empty and strictly increasing".into(),
                ));
            }
        }
        Ok(Tabloid { columns })
    }

    pub fn columns(&self) -> &[Vec<Symbol>] {
        &self.columns
    }

    /// The tabloid read as a Young tableau, if it is one.
    pub fn to_tableau(&self) -> Option<YoungTableau> {
        if self.columns.windows(2).any(|p| p[0].len() < p[1].len()) {
            return None;
        }
        let height = self.columns.first().map_or(0, Vec::len);
        let rows: Vec<Vec<Symbol>> = (0..height)
            .map(|r| {
                self.columns
                    .iter()
                    .take_while(|c| c.len() > r)
                    .map(|c| c[r])
                    .collect()
            })
            .collect();
        YoungTableau::new(rows).ok()
    }
}

/// Columns left to right, each read bottom to top.
pub fn column_reading(t: &Tabloid) -> Word {
    Word::from_vec_unchecked(
        t.columns
            .iter()
            .flat_map(|c| c.iter().rev().copied())
            .collect(),
    )
}

/// The tabloid whose columns are the maximal decreasing factors of `w`.
pub fn tabloid_of(w: &Word) -> Tabloid {
    Tabloid {
        columns: max_decreasing_factorization(w)
            .into_iter()
            .map(|f| f.into_symbols().into_iter().rev().collect())
            .collect(),
    }
}

pub fn is_tableau_word(w: &Word) -> bool {
    tabloid_of(w).to_tableau().is_some()
}

pub fn schensted_insert(t: &YoungTableau, a: Symbol) -> YoungTableau {
    let mut out = t.clone();
    out.bump(a);
    out
}

/// `(P(w), Q(w))`.
pub fn rsk(w: &Word) -> (YoungTableau, StandardYoungTableau) {
    let mut p = YoungTableau::empty();
    let mut q: Vec<Vec<Symbol>> = Vec::new();
    for (i, a) in w.iter().enumerate() {
        let r = p.bump(a);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i as Symbol + 1);
        debug_assert!(p.rows.iter().map(Vec::len).eq(q.iter().map(Vec::len)));
    }
    (p, StandardYoungTableau { rows: q })
}

/// Every suffix has a non-increasing weight.
pub fn is_yamanouchi(w: &Word) -> bool {
    let max = w.max_symbol().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max + 2];
    for s in w.symbols().iter().rev() {
        let s = *s as usize;
        counts[s] += 1;
        if s > 1 && counts[s] > counts[s - 1] {
            return false;
        }
    }
    true
}

pub fn plactic_congruent(u: &Word, v: &Word) -> bool {
    u.len() == v.len() && weight(u) == weight(v) && rsk(u).0 == rsk(v).0
}

/// Defining relations of the plactic monoid of rank `n`.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct KnuthRelationSet {
    pairs: Vec<(Word, Word)>,
}

impl KnuthRelationSet {
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

fn w3(a: Symbol, b: Symbol, c: Symbol) -> Word {
    Word::from_vec_unchecked(vec![a, b, c])
}

/// All instances of `acb = cab` (a ≤ b < c) and `bac = bca` (a < b ≤ c) over `1..=n`.
pub fn plactic_relations(n: u32) -> KnuthRelationSet {
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            for c in b + 1..=n {
                pairs.push((w3(a, c, b), w3(c, a, b)));
            }
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b..=n {
                pairs.push((w3(b, a, c), w3(b, c, a)));
            }
        }
    }
    KnuthRelationSet { pairs }
}
