//! Quantitative bipolar argumentation frameworks (QBAFs).
//!
//! A [`Qbaf`] is an immutable labelled digraph: every argument carries an
//! intrinsic weight in `[0, 1]`, and edges are either attacks or supports.
//! Arguments are stored sorted by id, so iteration order and serialized
//! output are stable.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building, parsing or transforming a graph.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("argument ids must be non-empty")]
    EmptyId,
    #[error("duplicate argument id `{0}`")]
    DuplicateId(String),
    #[error("edge ({from}, {to}) references unknown argument `{missing}`")]
    UnknownEndpoint {
        from: String,
        to: String,
        missing: String,
    },
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("weight of `{id}` is {weight}, outside [0, 1]")]
    WeightOutOfRange { id: String, weight: f64 },
    #[error("edge ({from}, {to}) is both an attack and a support")]
    Inconsistent { from: String, to: String },
    #[error("graph has a cycle: {}", format_cycle(.witness))]
    Cycle { witness: Vec<ArgumentId> },
    #[error("argument sets overlap on {}", format_ids(.shared))]
    Overlap { shared: Vec<ArgumentId> },
    #[error("invalid relabeling: {0}")]
    InvalidMapping(String),
}

fn format_cycle(ids: &[ArgumentId]) -> String {
    ids.iter().map(ArgumentId::as_str).collect::<Vec<_>>().join(" -> ")
}

fn format_ids(ids: &[ArgumentId]) -> String {
    ids.iter().map(ArgumentId::as_str).collect::<Vec<_>>().join(", ")
}

/// Identifier of an argument. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(id: impl Into<String>) -> Result<Self, GraphError> {
        let id = id.into();
        if id.is_empty() {
            return Err(GraphError::EmptyId);
        }
        Ok(ArgumentId(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for ArgumentId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ArgumentId::new(s)
    }
}

impl<'de> Deserialize<'de> for ArgumentId {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(de)?;
        ArgumentId::new(raw).map_err(serde::de::Error::custom)
    }
}

impl std::borrow::Borrow<str> for ArgumentId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// The two edge relations of a bipolar framework.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Attack,
    Support,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Attack => f.write_str("attack"),
            Relation::Support => f.write_str("support"),
        }
    }
}

type Edge = (usize, usize);

/// An immutable QBAF.
///
/// Construct one with [`QbafBuilder`] or [`parse_qbaf`]. Edges that appear
/// more than once in the input collapse into a single edge; the collapse is
/// reported by [`validate`].
#[derive(Clone)]
pub struct Qbaf {
    ids: Vec<ArgumentId>,
    index: HashMap<ArgumentId, usize>,
    weights: Vec<f64>,
    attacks: BTreeSet<Edge>,
    supports: BTreeSet<Edge>,
    ranks: BTreeMap<(Relation, usize, usize), i64>,
    attackers_of: Vec<Vec<usize>>,
    supporters_of: Vec<Vec<usize>>,
    collapsed: Vec<(Relation, usize, usize)>,
}

impl PartialEq for Qbaf {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids
            && self.weights.iter().map(|w| w.to_bits()).eq(other.weights.iter().map(|w| w.to_bits()))
            && self.attacks == other.attacks
            && self.supports == other.supports
            && self.ranks == other.ranks
    }
}

impl fmt::Debug for Qbaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Qbaf")
            .field(
                "arguments",
                &self.ids.iter().zip(&self.weights).map(|(id, w)| (id.as_str(), *w)).collect::<Vec<_>>(),
            )
            .field("attacks", &self.attack_pairs().collect::<Vec<_>>())
            .field("supports", &self.support_pairs().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental constructor for [`Qbaf`].
#[derive(Debug, Clone, Default)]
pub struct QbafBuilder {
    arguments: Vec<(String, f64)>,
    edges: Vec<(Relation, String, String, Option<i64>)>,
}

impl QbafBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn argument(mut self, id: &str, weight: f64) -> Self {
        self.push_argument(id, weight);
        self
    }

    pub fn attack(mut self, from: &str, to: &str) -> Self {
        self.push_edge(Relation::Attack, from, to, None);
        self
    }

    pub fn support(mut self, from: &str, to: &str) -> Self {
        self.push_edge(Relation::Support, from, to, None);
        self
    }

    /// Adds an edge carrying a rank, used by order-sensitive aggregators.
    pub fn ranked(mut self, relation: Relation, from: &str, to: &str, rank: i64) -> Self {
        self.push_edge(relation, from, to, Some(rank));
        self
    }

    pub fn push_argument(&mut self, id: &str, weight: f64) -> &mut Self {
        self.arguments.push((id.to_owned(), weight));
        self
    }

    pub fn push_edge(&mut self, relation: Relation, from: &str, to: &str, rank: Option<i64>) -> &mut Self {
        self.edges.push((relation, from.to_owned(), to.to_owned(), rank));
        self
    }

    /// Builds the graph and enforces every invariant.
    pub fn build(self) -> Result<Qbaf, GraphError> {
        let g = self.build_unchecked()?;
        if let Some(v) = validate(&g).violations.into_iter().next() {
            return Err(v.into_error());
        }
        Ok(g)
    }

    /// Builds the graph, checking only structural soundness (unique non-empty
    /// ids, known edge endpoints). Weight bounds and relation consistency are
    /// left to [`validate`].
    pub fn build_unchecked(self) -> Result<Qbaf, GraphError> {
        let mut args: Vec<(ArgumentId, f64)> = Vec::with_capacity(self.arguments.len());
        for (id, w) in self.arguments {
            args.push((ArgumentId::new(id)?, w));
        }
        args.sort_by(|a, b| a.0.cmp(&b.0));
        for pair in args.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(GraphError::DuplicateId(pair[0].0.to_string()));
            }
        }
        let (ids, weights): (Vec<_>, Vec<_>) = args.into_iter().unzip();
        let index: HashMap<ArgumentId, usize> = ids.iter().cloned().enumerate().map(|(i, id)| (id, i)).collect();

        let mut attacks = BTreeSet::new();
        let mut supports = BTreeSet::new();
        let mut ranks = BTreeMap::new();
        let mut collapsed = Vec::new();
        for (relation, from, to, rank) in self.edges {
            let lookup = |name: &str| {
                index.get(name).copied().ok_or_else(|| GraphError::UnknownEndpoint {
                    from: from.clone(),
                    to: to.clone(),
                    missing: name.to_owned(),
                })
            };
            let (s, t) = (lookup(&from)?, lookup(&to)?);
            let set = match relation {
                Relation::Attack => &mut attacks,
                Relation::Support => &mut supports,
            };
            if !set.insert((s, t)) {
                collapsed.push((relation, s, t));
                continue;
            }
            if let Some(r) = rank {
                ranks.insert((relation, s, t), r);
            }
        }

        let n = ids.len();
        let mut attackers_of = vec![Vec::new(); n];
        let mut supporters_of = vec![Vec::new(); n];
        for &(s, t) in &attacks {
            attackers_of[t].push(s);
        }
        for &(s, t) in &supports {
            supporters_of[t].push(s);
        }
        for list in attackers_of.iter_mut().chain(supporters_of.iter_mut()) {
            list.sort_unstable();
        }

        Ok(Qbaf { ids, index, weights, attacks, supports, ranks, attackers_of, supporters_of, collapsed })
    }
}

impl Qbaf {
    pub fn builder() -> QbafBuilder {
        QbafBuilder::new()
    }

    pub fn empty() -> Qbaf {
        QbafBuilder::new().build_unchecked().expect("empty graph is structurally valid")
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Arguments in ascending id order.
    pub fn arguments(&self) -> impl ExactSizeIterator<Item = &ArgumentId> + '_ {
        self.ids.iter()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn weight(&self, id: &str) -> Option<f64> {
        self.index.get(id).map(|&i| self.weights[i])
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn support_count(&self) -> usize {
        self.supports.len()
    }

    pub fn attack_pairs(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.attacks.iter().map(|&(s, t)| (&self.ids[s], &self.ids[t]))
    }

    pub fn support_pairs(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.supports.iter().map(|&(s, t)| (&self.ids[s], &self.ids[t]))
    }

    pub fn has_edge(&self, relation: Relation, from: &str, to: &str) -> bool {
        match (self.index.get(from), self.index.get(to)) {
            (Some(&s), Some(&t)) => self.relation_set(relation).contains(&(s, t)),
            _ => false,
        }
    }

    /// Rank attached to an edge, if any.
    pub fn edge_rank(&self, relation: Relation, from: &str, to: &str) -> Option<i64> {
        let (&s, &t) = (self.index.get(from)?, self.index.get(to)?);
        self.ranks.get(&(relation, s, t)).copied()
    }

    pub fn attackers(&self, id: &str) -> Result<BTreeSet<ArgumentId>, GraphError> {
        let i = self.require(id)?;
        Ok(self.attackers_of[i].iter().map(|&j| self.ids[j].clone()).collect())
    }

    pub fn supporters(&self, id: &str) -> Result<BTreeSet<ArgumentId>, GraphError> {
        let i = self.require(id)?;
        Ok(self.supporters_of[i].iter().map(|&j| self.ids[j].clone()).collect())
    }

    /// True when the argument has neither attackers nor supporters.
    pub fn is_leaf(&self, id: &str) -> Result<bool, GraphError> {
        let i = self.require(id)?;
        Ok(self.attackers_of[i].is_empty() && self.supporters_of[i].is_empty())
    }

    /// Whether a directed path (over attacks and supports, length >= 0)
    /// leads from `from` to `to`.
    pub fn has_path(&self, from: &str, to: &str) -> Result<bool, GraphError> {
        let (s, t) = (self.require(from)?, self.require(to)?);
        Ok(self.reachable_from(s)[t])
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize, GraphError> {
        self.index.get(id).copied().ok_or_else(|| GraphError::UnknownArgument(id.to_owned()))
    }

    pub(crate) fn id_at(&self, i: usize) -> &ArgumentId {
        &self.ids[i]
    }

    pub(crate) fn weight_at(&self, i: usize) -> f64 {
        self.weights[i]
    }

    pub(crate) fn attackers_at(&self, i: usize) -> &[usize] {
        &self.attackers_of[i]
    }

    pub(crate) fn supporters_at(&self, i: usize) -> &[usize] {
        &self.supporters_of[i]
    }

    pub(crate) fn rank_at(&self, relation: Relation, s: usize, t: usize) -> Option<i64> {
        self.ranks.get(&(relation, s, t)).copied()
    }

    fn relation_set(&self, relation: Relation) -> &BTreeSet<Edge> {
        match relation {
            Relation::Attack => &self.attacks,
            Relation::Support => &self.supports,
        }
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for &(s, t) in self.attacks.iter().chain(&self.supports) {
            out[s].push(t);
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        out
    }

    pub(crate) fn reachable_from(&self, start: usize) -> Vec<bool> {
        let succ = self.successors();
        let mut seen = vec![false; self.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &v in &succ[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Topological order as indices, smallest ready id first.
    pub(crate) fn topo_indices(&self) -> Result<Vec<usize>, GraphError> {
        let succ = self.successors();
        let mut indegree = vec![0usize; self.len()];
        for list in &succ {
            for &v in list {
                indegree[v] += 1;
            }
        }
        let mut ready: BTreeSet<usize> = (0..self.len()).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(u) = ready.pop_first() {
            order.push(u);
            for &v in &succ[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        if order.len() == self.len() {
            Ok(order)
        } else {
            Err(GraphError::Cycle { witness: self.find_cycle(&succ) })
        }
    }

    fn find_cycle(&self, succ: &[Vec<usize>]) -> Vec<ArgumentId> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut mark = vec![Mark::New; self.len()];
        for root in 0..self.len() {
            if mark[root] != Mark::New {
                continue;
            }
            // iterative DFS: (node, next successor position)
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            mark[root] = Mark::Active;
            while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
                if let Some(&v) = succ[u].get(*pos) {
                    *pos += 1;
                    match mark[v] {
                        Mark::New => {
                            mark[v] = Mark::Active;
                            stack.push((v, 0));
                        }
                        Mark::Active => {
                            let start = stack.iter().position(|&(w, _)| w == v).expect("active node on stack");
                            let mut cycle: Vec<ArgumentId> =
                                stack[start..].iter().map(|&(w, _)| self.ids[w].clone()).collect();
                            cycle.push(self.ids[v].clone());
                            return cycle;
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[u] = Mark::Done;
                    stack.pop();
                }
            }
        }
        Vec::new()
    }
}

/// A problem found by [`validate`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    WeightOutOfRange { argument: ArgumentId, weight: f64 },
    AttackAndSupport { from: ArgumentId, to: ArgumentId },
}

impl Violation {
    fn into_error(self) -> GraphError {
        match self {
            Violation::WeightOutOfRange { argument, weight } => {
                GraphError::WeightOutOfRange { id: argument.to_string(), weight }
            }
            Violation::AttackAndSupport { from, to } => {
                GraphError::Inconsistent { from: from.to_string(), to: to.to_string() }
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WeightOutOfRange { argument, weight } => {
                write!(f, "argument `{argument}` has weight {weight}, outside [0, 1]")
            }
            Violation::AttackAndSupport { from, to } => {
                write!(f, "edge ({from}, {to}) is both an attack and a support")
            }
        }
    }
}

/// Outcome of [`validate`]: hard violations plus informational warnings.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the weight bounds and the attack/support consistency invariant.
/// Cycles are not violations: they only prevent evaluation.
pub fn validate(g: &Qbaf) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (id, &w) in g.ids.iter().zip(&g.weights) {
        // NaN fails both comparisons
        if !(0.0..=1.0).contains(&w) {
            report.violations.push(Violation::WeightOutOfRange { argument: id.clone(), weight: w });
        }
    }
    for edge in g.attacks.intersection(&g.supports) {
        report.violations.push(Violation::AttackAndSupport {
            from: g.ids[edge.0].clone(),
            to: g.ids[edge.1].clone(),
        });
    }
    for &(relation, s, t) in &g.collapsed {
        report.warnings.push(format!("duplicate {relation} edge ({}, {}) collapsed", g.ids[s], g.ids[t]));
    }
    report
}

/// Arguments in an order where every edge goes forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoOrder(Vec<ArgumentId>);

impl TopoOrder {
    /// Wraps an explicit order; [`crate::engine::evaluate_in_order`] checks it
    /// against the graph.
    pub fn from_ids(ids: Vec<ArgumentId>) -> Self {
        TopoOrder(ids)
    }

    pub fn as_slice(&self) -> &[ArgumentId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<ArgumentId> {
        self.0
    }
}

pub fn topological_order(g: &Qbaf) -> Result<TopoOrder, GraphError> {
    let order = g.topo_indices()?;
    Ok(TopoOrder(order.into_iter().map(|i| g.ids[i].clone()).collect()))
}

/// Disjoint union of two graphs.
pub fn union(g: &Qbaf, h: &Qbaf) -> Result<Qbaf, GraphError> {
    let shared: Vec<ArgumentId> = g.ids.iter().filter(|id| h.index.contains_key(*id)).cloned().collect();
    if !shared.is_empty() {
        return Err(GraphError::Overlap { shared });
    }
    let mut b = QbafBuilder::new();
    for part in [g, h] {
        copy_into(part, &mut b, |id| id.as_str().to_owned());
    }
    b.build_unchecked()
}

/// Renames every argument through `mapping`, which must be a bijection
/// defined on all arguments of `g`.
pub fn relabel(g: &Qbaf, mapping: &BTreeMap<ArgumentId, ArgumentId>) -> Result<Qbaf, GraphError> {
    let mut images = BTreeSet::new();
    for id in &g.ids {
        let target = mapping
            .get(id)
            .ok_or_else(|| GraphError::InvalidMapping(format!("no image for `{id}`")))?;
        if !images.insert(target) {
            return Err(GraphError::InvalidMapping(format!("`{target}` is the image of two arguments")));
        }
    }
    let mut b = QbafBuilder::new();
    copy_into(g, &mut b, |id| mapping[id].as_str().to_owned());
    b.build_unchecked()
}

fn copy_into(g: &Qbaf, b: &mut QbafBuilder, rename: impl Fn(&ArgumentId) -> String) {
    for (id, &w) in g.ids.iter().zip(&g.weights) {
        b.push_argument(&rename(id), w);
    }
    for (relation, set) in [(Relation::Attack, &g.attacks), (Relation::Support, &g.supports)] {
        for &(s, t) in set {
            b.push_edge(relation, &rename(&g.ids[s]), &rename(&g.ids[t]), g.rank_at(relation, s, t));
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ArgumentDoc {
    id: String,
    weight: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum EdgeDoc {
    Pair(String, String),
    Ranked { from: String, to: String, order: i64 },
}

/// On-disk JSON layout.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct Document {
    #[serde(default)]
    arguments: Vec<ArgumentDoc>,
    #[serde(default)]
    attacks: Vec<EdgeDoc>,
    #[serde(default)]
    supports: Vec<EdgeDoc>,
}

impl Document {
    fn from_graph(g: &Qbaf) -> Self {
        let edges = |relation: Relation, set: &BTreeSet<Edge>| {
            set.iter()
                .map(|&(s, t)| {
                    let (from, to) = (g.ids[s].to_string(), g.ids[t].to_string());
                    match g.rank_at(relation, s, t) {
                        Some(order) => EdgeDoc::Ranked { from, to, order },
                        None => EdgeDoc::Pair(from, to),
                    }
                })
                .collect()
        };
        Document {
            arguments: g
                .ids
                .iter()
                .zip(&g.weights)
                .map(|(id, &weight)| ArgumentDoc { id: id.to_string(), weight })
                .collect(),
            attacks: edges(Relation::Attack, &g.attacks),
            supports: edges(Relation::Support, &g.supports),
        }
    }

    fn into_builder(self) -> QbafBuilder {
        let mut b = QbafBuilder::new();
        for a in &self.arguments {
            b.push_argument(&a.id, a.weight);
        }
        for (relation, list) in [(Relation::Attack, self.attacks), (Relation::Support, self.supports)] {
            for e in list {
                match e {
                    EdgeDoc::Pair(from, to) => b.push_edge(relation, &from, &to, None),
                    EdgeDoc::Ranked { from, to, order } => b.push_edge(relation, &from, &to, Some(order)),
                };
            }
        }
        b
    }
}

impl Serialize for Qbaf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Document::from_graph(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Qbaf {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        Document::deserialize(de)?.into_builder().build().map_err(serde::de::Error::custom)
    }
}

/// Parses a JSON document and enforces every graph invariant.
pub fn parse_qbaf(document: &str) -> Result<Qbaf, GraphError> {
    parse_document(document)?.build()
}

/// Parses a JSON document, checking structure only; use [`validate`] on the
/// result to list invariant violations.
pub fn parse_qbaf_unchecked(document: &str) -> Result<Qbaf, GraphError> {
    parse_document(document)?.build_unchecked()
}

fn parse_document(document: &str) -> Result<QbafBuilder, GraphError> {
    let doc: Document = serde_json::from_str(document).map_err(|e| GraphError::Malformed(e.to_string()))?;
    Ok(doc.into_builder())
}

/// Pretty JSON with arguments sorted by id and edges sorted lexicographically.
pub fn to_json(g: &Qbaf) -> String {
    let mut out = serde_json::to_string_pretty(&Document::from_graph(g)).expect("document serializes");
    out.push('\n');
    out
}
