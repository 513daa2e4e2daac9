//! Connected components of the crystal and quasi-crystal graphs on `A_n*`.
//!
//! Vertices are words; there is an edge `u →i v` when the lowering operator
//! of the chosen kind sends `u` to `v`. Components are stored in a canonical
//! breadth-first order from the highest-weight vertex, which makes
//! isomorphism a comparison of signatures.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::operators::{kashiwara_e, kashiwara_f, quasi_e, quasi_f, OperatorResult};
use crate::ribbon::{hypo_rsk, slide_up_slide_left, QuasiRibbonTableau};
use crate::words::{
    compositions_of, has_inversion, is_standard, schuetzenberger_involution, weight, Composition,
    Symbol, Word,
};
use crate::young::rsk;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Crystal,
    QuasiCrystal,
}

impl GraphKind {
    pub fn raise(self, w: &Word, i: Symbol) -> OperatorResult {
        match self {
            GraphKind::Crystal => kashiwara_e(w, i),
            GraphKind::QuasiCrystal => quasi_e(w, i),
        }
    }

    pub fn lower(self, w: &Word, i: Symbol) -> OperatorResult {
        match self {
            GraphKind::Crystal => kashiwara_f(w, i),
            GraphKind::QuasiCrystal => quasi_f(w, i),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Crystal => "crystal",
            GraphKind::QuasiCrystal => "quasi-crystal",
        })
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "crystal" | "plac" => Ok(GraphKind::Crystal),
            "quasi-crystal" | "quasi" | "hypo" => Ok(GraphKind::QuasiCrystal),
            _ => Err(Error::Parse(format!("unknown graph kind `{s}`"))),
        }
    }
}

/// `from →label to`. `quasi` marks edges that are also quasi-Kashiwara actions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: Word,
    pub label: Symbol,
    pub to: Word,
    pub quasi: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComponentJson", into = "ComponentJson")]
pub struct Component {
    kind: GraphKind,
    n: u32,
    /// Canonical order; the root comes first.
    vertices: Vec<Word>,
    index: HashMap<Word, usize>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    kind: GraphKind,
    n: u32,
    root: Word,
    vertices: Vec<Word>,
    edges: Vec<Edge>,
}

impl TryFrom<ComponentJson> for Component {
    type Error = Error;

    fn try_from(j: ComponentJson) -> Result<Self> {
        if j.vertices.first() != Some(&j.root) {
            return Err(Error::Parse("root must be the first vertex".into()));
        }
        let index: HashMap<Word, usize> = j
            .vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, v)| (v, k))
            .collect();
        if index.len() != j.vertices.len() {
            return Err(Error::Parse("duplicate vertex".into()));
        }
        for e in &j.edges {
            if !index.contains_key(&e.from) || !index.contains_key(&e.to) {
                return Err(Error::Parse(format!(
                    "edge {} -> {} leaves the vertex set",
                    e.from, e.to
                )));
            }
        }
        Ok(Component {
            kind: j.kind,
            n: j.n,
            vertices: j.vertices,
            index,
            edges: j.edges,
        })
    }
}

impl From<Component> for ComponentJson {
    fn from(c: Component) -> Self {
        ComponentJson {
            kind: c.kind,
            n: c.n,
            root: c.vertices[0].clone(),
            vertices: c.vertices,
            edges: c.edges,
        }
    }
}

/// Per vertex in canonical order: its weight and, for each label, the index of
/// its lowering target. Equal signatures mean weight-preserving labelled
/// isomorphic components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentSignature {
    kind: GraphKind,
    n: u32,
    vertices: Vec<(Vec<usize>, Vec<Option<usize>>)>,
}

impl ComponentSignature {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

impl Component {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The highest-weight vertex.
    pub fn root(&self) -> &Word {
        &self.vertices[0]
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.index.contains_key(w)
    }

    /// Position of `w` in the canonical order.
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn signature(&self) -> ComponentSignature {
        signature_of(&self.vertices, &self.index, self.kind, self.n)
    }

    /// Graphviz rendering. With `overlay`, edges that are not quasi-Kashiwara
    /// actions are dotted.
    pub fn to_dot(&self, overlay: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.kind);
        for (k, v) in self.vertices.iter().enumerate() {
            let label = if v.is_empty() {
                "ε".to_string()
            } else {
                v.to_string()
            };
            let _ = writeln!(out, "  v{k} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let style = if overlay && !e.quasi {
                ", style=dotted"
            } else {
                ""
            };
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{}\"{style}];",
                self.index[&e.from], self.index[&e.to], e.label
            );
        }
        out.push('}');
        out.push('\n');
        out
    }
}

fn labels(n: u32) -> std::ops::Range<Symbol> {
    1..n
}

fn canonical_order(root: &Word, kind: GraphKind, n: u32) -> Vec<Word> {
    let mut seen: HashSet<Word> = HashSet::from([root.clone()]);
    let mut order = vec![root.clone()];
    let mut queue = VecDeque::from([root.clone()]);
    while let Some(v) = queue.pop_front() {
        let lowered = labels(n).map(|i| kind.lower(&v, i));
        let raised = labels(n).map(|i| kind.raise(&v, i));
        for t in lowered.chain(raised).flatten() {
            if seen.insert(t.clone()) {
                order.push(t.clone());
                queue.push_back(t);
            }
        }
    }
    order
}

fn signature_of(
    order: &[Word],
    index: &HashMap<Word, usize>,
    kind: GraphKind,
    n: u32,
) -> ComponentSignature {
    let vertices = order
        .iter()
        .map(|v| {
            let targets = labels(n)
                .map(|i| kind.lower(v, i).map(|t| index[&t]))
                .collect();
            (weight(v).terms().to_vec(), targets)
        })
        .collect();
    ComponentSignature { kind, n, vertices }
}

fn index_of_order(order: &[Word]) -> HashMap<Word, usize> {
    order
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, v)| (v, k))
        .collect()
}

fn check_alphabet(w: &Word, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyAlphabet);
    }
    w.check_bound(n)
}

/// The component of `w` in the graph of the given kind over `1..=n`.
pub fn explore_component(w: &Word, n: u32, kind: GraphKind) -> Result<Component> {
    check_alphabet(w, n)?;
    let closure = canonical_order(w, kind, n);
    let roots: Vec<&Word> = closure
        .iter()
        .filter(|v| labels(n).all(|i| kind.raise(v, i).is_none()))
        .collect();
    // a unique root is expected; ties fall back to the least signature
    let (order, index) = roots
        .into_iter()
        .map(|r| {
            let order = canonical_order(r, kind, n);
            let index = index_of_order(&order);
            (order, index)
        })
        .min_by_key(|(order, index)| signature_of(order, index, kind, n))
        .expect("a finite component has a vertex with no raising operator");
    let edges = order
        .iter()
        .flat_map(|v| {
            labels(n).filter_map(move |i| {
                kind.lower(v, i).map(|t| Edge {
                    quasi: kind == GraphKind::QuasiCrystal || quasi_f(v, i).as_ref() == Some(&t),
                    from: v.clone(),
                    label: i,
                    to: t,
                })
            })
        })
        .collect();
    Ok(Component {
        kind,
        n,
        vertices: order,
        index,
        edges,
    })
}

/// Applies raising operators until none is defined.
pub fn highest_weight_word(w: &Word, n: u32, kind: GraphKind) -> Result<Word> {
    check_alphabet(w, n)?;
    let mut cur = w.clone();
    while let Some(next) = labels(n).find_map(|i| kind.raise(&cur, i)) {
        cur = next;
    }
    Ok(cur)
}

/// Contains every symbol up to its maximum and has an `i`-inversion for each `i` below it.
pub fn is_highest_weight_hypo(w: &Word) -> bool {
    let m = w.max_symbol().unwrap_or(0);
    (1..=m).all(|a| w.count(a) > 0) && (1..m).all(|i| has_inversion(w, i))
}

pub fn component_signature(c: &Component) -> ComponentSignature {
    c.signature()
}

/// Same position in isomorphic quasi-crystal components.
pub fn sim_related(u: &Word, v: &Word, n: u32) -> Result<bool> {
    let cu = explore_component(u, n, GraphKind::QuasiCrystal)?;
    let cv = explore_component(v, n, GraphKind::QuasiCrystal)?;
    Ok(cu.index_of(u) == cv.index_of(v) && cu.signature() == cv.signature())
}

pub fn same_recording_ribbon(u: &Word, v: &Word, n: u32) -> Result<bool> {
    check_alphabet(u, n)?;
    check_alphabet(v, n)?;
    Ok(hypo_rsk(u).1 == hypo_rsk(v).1)
}

/// Every component meeting a set of words, each explored once.
#[derive(Clone, Debug)]
pub struct ComponentAtlas {
    components: Vec<Component>,
    signatures: Vec<ComponentSignature>,
    locate: HashMap<Word, (usize, usize)>,
}

impl ComponentAtlas {
    pub fn build(words: &[Word], n: u32, kind: GraphKind, exec: Execution) -> Result<Self> {
        for w in words {
            check_alphabet(w, n)?;
        }
        let roots: BTreeSet<Word> = exec
            .map(words, |w| {
                highest_weight_word(w, n, kind).expect("bounds checked")
            })
            .into_iter()
            .collect();
        let roots: Vec<Word> = roots.into_iter().collect();
        let components = exec.map(&roots, |r| {
            explore_component(r, n, kind).expect("bounds checked")
        });
        let signatures = exec.map(&components, Component::signature);
        let mut locate = HashMap::new();
        for (c, comp) in components.iter().enumerate() {
            for (k, v) in comp.vertices().iter().enumerate() {
                locate.insert(v.clone(), (c, k));
            }
        }
        Ok(ComponentAtlas {
            components,
            signatures,
            locate,
        })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn signatures(&self) -> &[ComponentSignature] {
        &self.signatures
    }

    /// `(component, vertex)` indices of `w`.
    pub fn locate(&self, w: &Word) -> Option<(usize, usize)> {
        self.locate.get(w).copied()
    }

    pub fn component_of(&self, w: &Word) -> Option<&Component> {
        self.locate(w).map(|(c, _)| &self.components[c])
    }

    pub fn same_component(&self, u: &Word, v: &Word) -> Option<bool> {
        Some(self.locate(u)?.0 == self.locate(v)?.0)
    }

    /// Same position in components with equal signatures.
    pub fn sim_related(&self, u: &Word, v: &Word) -> Option<bool> {
        let (cu, ku) = self.locate(u)?;
        let (cv, kv) = self.locate(v)?;
        Some(ku == kv && self.signatures[cu] == self.signatures[cv])
    }
}

/// A crystal component with its edges split by whether the quasi-Kashiwara
/// operator performs the same action, and the quasi-crystal components inside it.
#[derive(Clone, Debug)]
pub struct CrystalOverlay {
    crystal: Component,
    quasi_components: Vec<Component>,
}

impl CrystalOverlay {
    pub fn crystal(&self) -> &Component {
        &self.crystal
    }

    /// Ordered by first appearance of a vertex in the crystal component.
    pub fn quasi_components(&self) -> &[Component] {
        &self.quasi_components
    }

    pub fn quasi_edges(&self) -> impl Iterator<Item = &Edge> {
        self.crystal.edges.iter().filter(|e| e.quasi)
    }

    pub fn crystal_only_edges(&self) -> impl Iterator<Item = &Edge> {
        self.crystal.edges.iter().filter(|e| !e.quasi)
    }

    pub fn quasi_roots(&self) -> Vec<&Word> {
        self.quasi_components.iter().map(Component::root).collect()
    }
}

pub fn crystal_overlay(w: &Word, n: u32) -> Result<CrystalOverlay> {
    let crystal = explore_component(w, n, GraphKind::Crystal)?;
    let mut seen: HashSet<Word> = HashSet::new();
    let mut quasi_components = Vec::new();
    for v in crystal.vertices() {
        if seen.contains(v) {
            continue;
        }
        let q = explore_component(v, n, GraphKind::QuasiCrystal)?;
        seen.extend(q.vertices().iter().cloned());
        quasi_components.push(q);
    }
    Ok(CrystalOverlay {
        crystal,
        quasi_components,
    })
}

/// Whether the crystal component of `w` holds a quasi-ribbon word, decided by
/// matching `Q(w)` against slid standard ribbon fillings.
pub fn plac_component_contains_qrw(w: &Word, n: u32) -> Result<bool> {
    check_alphabet(w, n)?;
    let q = rsk(w).1;
    Ok(compositions_of(w.len())
        .iter()
        .filter(|a| a.len() <= n as usize)
        .any(|a| {
            slide_up_slide_left(&QuasiRibbonTableau::standard(a))
                .map(|y| y.rows() == q.rows())
                .unwrap_or(false)
        }))
}

/// The composition `α` such that `p` reverses each consecutive block of
/// positions given by `α` onto the same block of values, if there is one.
pub fn is_interval_reversing(p: &Word) -> Result<Option<Composition>> {
    if !is_standard(p) {
        return Err(Error::NotStandard(p.to_string()));
    }
    let s = p.symbols();
    let mut parts = Vec::new();
    let mut start = 0;
    while start < s.len() {
        let top = s[start] as usize;
        if top <= start {
            return Ok(None);
        }
        let len = top - start;
        if (0..len).any(|t| s[start + t] as usize != top - t) {
            return Ok(None);
        }
        parts.push(len);
        start = top;
    }
    Ok(Some(Composition::new(parts)?))
}

/// Every edge `u →i v` has the mirror edge `v♯ →(n−i) u♯`.
pub fn involution_edge_check(c: &Component, n: u32) -> Result<bool> {
    for e in c.edges() {
        let u = schuetzenberger_involution(&e.from, n)?;
        let v = schuetzenberger_involution(&e.to, n)?;
        if c.kind().lower(&v, n - e.label) != Some(u) {
            return Ok(false);
        }
    }
    Ok(true)
}
