//! Falsification harness for the argumentation principles A1 to A12.
//!
//! Each trial builds an [`Instance`] meant to satisfy a principle's premise,
//! then [`examine`] re-checks the premise formally on the evaluated graph
//! and tests the conclusion. A verdict is either "no counterexample" or a
//! replayable witness: calling [`examine`] on the stored instance again
//! yields the same violation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::aggregators::postulates::{check_postulate, Postulate, SamplingConfig};
use crate::aggregators::{Aggregator, Codomain, Combiner};
use crate::engine::{evaluate, AggregativeSemantics, DegreeMap};
use crate::graph::{relabel, union, ArgumentId, Qbaf, QbafBuilder, Relation};

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Principle {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A7Strict,
    A8,
    A8Strict,
    A9,
    A10,
    A10Strict,
    A11,
    A12,
}

impl Principle {
    pub const ALL: [Principle; 15] = [
        Principle::A1,
        Principle::A2,
        Principle::A3,
        Principle::A4,
        Principle::A5,
        Principle::A6,
        Principle::A7,
        Principle::A7Strict,
        Principle::A8,
        Principle::A8Strict,
        Principle::A9,
        Principle::A10,
        Principle::A10Strict,
        Principle::A11,
        Principle::A12,
    ];

    pub fn title(self) -> &'static str {
        match self {
            Principle::A1 => "anonymity",
            Principle::A2 => "independence",
            Principle::A3 => "directionality",
            Principle::A4 => "equivalence",
            Principle::A5 => "stability",
            Principle::A6 => "neutrality",
            Principle::A7 => "monotony",
            Principle::A7Strict => "strict monotony",
            Principle::A8 => "reinforcement",
            Principle::A8Strict => "strict reinforcement",
            Principle::A9 => "resilience",
            Principle::A10 => "franklin",
            Principle::A10Strict => "strict franklin",
            Principle::A11 => "weakening",
            Principle::A12 => "strengthening",
        }
    }
}

impl fmt::Display for Principle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Principle::A7Strict => f.write_str("A7-strict"),
            Principle::A8Strict => f.write_str("A8-strict"),
            Principle::A10Strict => f.write_str("A10-strict"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for Principle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace(['_', ' '], "-");
        let norm = norm.strip_suffix("S").filter(|n| n.ends_with(char::is_numeric)).map_or(norm.clone(), |n| {
            format!("{n}-STRICT")
        });
        Principle::ALL
            .into_iter()
            .find(|p| p.to_string().to_ascii_uppercase() == norm)
            .ok_or_else(|| format!("unknown principle `{s}` (expected A1..A12, A7-strict, A8-strict, A10-strict)"))
    }
}

/// Random graph parameters. Weights are multiples of `weight_step`,
/// endpoints included.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_args: usize,
    pub max_edges: usize,
    pub weight_step: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig { seed: 1, trials: 1000, max_args: 8, max_edges: 16, weight_step: 0.1 }
    }
}

const EDGE_PROBABILITY: f64 = 0.4;

fn grid_weight(rng: &mut ChaCha8Rng, step: f64) -> f64 {
    let steps = (1.0 / step).round().max(1.0) as u32;
    rng.gen_range(0..=steps) as f64 / steps as f64
}

fn random_graph(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig, prefix: &str) -> QbafBuilder {
    let n = rng.gen_range(1..=cfg.max_args.max(1));
    let mut ids: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let mut b = QbafBuilder::new();
    for id in &ids {
        b.push_argument(id, grid_weight(rng, cfg.weight_step));
    }
    // edges only run forward in a random permutation, so the result is acyclic
    ids.shuffle(rng);
    let mut edges = 0;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if edges >= cfg.max_edges {
                break 'outer;
            }
            if rng.gen_bool(EDGE_PROBABILITY) {
                let rel = if rng.gen_bool(0.5) { Relation::Attack } else { Relation::Support };
                b.push_edge(rel, &ids[i], &ids[j], None);
                edges += 1;
            }
        }
    }
    b
}

/// A valid acyclic QBAF drawn from `cfg.seed`.
pub fn generate_random_acqbaf(cfg: &GeneratorConfig) -> Qbaf {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    random_graph(&mut rng, cfg, "g").build().expect("generator output is valid")
}

/// Data instantiating one principle check.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    /// A1: `graph` and its image under `mapping`.
    Relabel { graph: Qbaf, mapping: BTreeMap<ArgumentId, ArgumentId> },
    /// A2: two graphs to be joined.
    Union { left: Qbaf, right: Qbaf },
    /// A3: `graph` plus one extra edge.
    AddEdge { graph: Qbaf, relation: Relation, from: ArgumentId, to: ArgumentId },
    /// A5, A9: every argument of the graph.
    Graph { graph: Qbaf },
    /// A4, A6, A7, A8, A10: two arguments of the same graph. `x` is the
    /// zero-degree parent for A6.
    Pair { graph: Qbaf, a: ArgumentId, b: ArgumentId, x: Option<ArgumentId> },
    /// A11, A12: a single target.
    Target { graph: Qbaf, a: ArgumentId },
}

/// Result of checking one instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    PremiseFailed,
    Holds,
    Violated(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrincipleWitness {
    Instance { trial: usize, instance: Instance, detail: String },
    /// Direct scan of the combiner: `phi_f(x, y, z) = value`.
    Triple { x: f64, y: f64, z: f64, value: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrincipleStatus {
    NoCounterexample,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrincipleVerdict {
    pub principle: Principle,
    pub status: PrincipleStatus,
    pub witness: Option<PrincipleWitness>,
    pub trials_run: usize,
    /// Trials whose premise held, so the conclusion was actually tested.
    pub premise_held: usize,
    /// A10 only: trials where the tuple-level reformulation disagreed with
    /// the graph-level check.
    pub reformulation_disagreements: usize,
}

impl PrincipleVerdict {
    pub fn holds(&self) -> bool {
        self.status == PrincipleStatus::NoCounterexample
    }
}

struct View<'a> {
    g: &'a Qbaf,
    d: DegreeMap,
}

impl View<'_> {
    fn deg(&self, id: &str) -> f64 {
        self.d.deg(id).expect("argument of the evaluated graph")
    }

    fn w(&self, id: &str) -> f64 {
        self.g.weight(id).expect("argument of the graph")
    }

    fn att(&self, id: &str) -> BTreeSet<ArgumentId> {
        self.g.attackers(id).expect("argument of the graph")
    }

    fn supp(&self, id: &str) -> BTreeSet<ArgumentId> {
        self.g.supporters(id).expect("argument of the graph")
    }

    fn strong(&self, set: &BTreeSet<ArgumentId>) -> BTreeSet<ArgumentId> {
        set.iter().filter(|x| self.deg(x.as_str()) != 0.0).cloned().collect()
    }

    fn sorted_degrees(&self, set: &BTreeSet<ArgumentId>) -> Vec<f64> {
        let mut v: Vec<f64> = set.iter().map(|x| self.deg(x.as_str())).collect();
        v.sort_by(f64::total_cmp);
        v
    }
}

fn view<'a>(s: &AggregativeSemantics, g: &'a Qbaf) -> Option<View<'a>> {
    evaluate(s, g).ok().map(|d| View { g, d })
}

fn verdict_of(holds: bool, detail: impl FnOnce() -> String) -> Outcome {
    if holds {
        Outcome::Holds
    } else {
        Outcome::Violated(detail())
    }
}

/// Checks the premise of `p` on `instance` and, when it holds, the
/// conclusion. Instances the semantics cannot evaluate count as premise
/// failures.
pub fn examine(s: &AggregativeSemantics, p: Principle, instance: &Instance) -> Outcome {
    match (p, instance) {
        (Principle::A1, Instance::Relabel { graph, mapping }) => {
            let Ok(image) = relabel(graph, mapping) else { return Outcome::PremiseFailed };
            let (Some(v), Some(u)) = (view(s, graph), view(s, &image)) else { return Outcome::PremiseFailed };
            for a in graph.arguments() {
                let (da, db) = (v.deg(a.as_str()), u.deg(mapping[a].as_str()));
                if (da - db).abs() > TOL {
                    return Outcome::Violated(format!("deg({a}) = {da} but deg({}) = {db}", mapping[a]));
                }
            }
            Outcome::Holds
        }
        (Principle::A2, Instance::Union { left, right }) => {
            let Ok(joined) = union(left, right) else { return Outcome::PremiseFailed };
            let Some(u) = view(s, &joined) else { return Outcome::PremiseFailed };
            for part in [left, right] {
                let Some(v) = view(s, part) else { return Outcome::PremiseFailed };
                for a in part.arguments() {
                    let (alone, together) = (v.deg(a.as_str()), u.deg(a.as_str()));
                    if (alone - together).abs() > TOL {
                        return Outcome::Violated(format!("deg({a}) is {alone} alone but {together} in the union"));
                    }
                }
            }
            Outcome::Holds
        }
        (Principle::A3, Instance::AddEdge { graph, relation, from, to }) => {
            if graph.has_edge(Relation::Attack, from.as_str(), to.as_str())
                || graph.has_edge(Relation::Support, from.as_str(), to.as_str())
            {
                return Outcome::PremiseFailed;
            }
            let Some(extended) = add_edge(graph, *relation, from, to) else { return Outcome::PremiseFailed };
            let (Some(v), Some(u)) = (view(s, graph), view(s, &extended)) else { return Outcome::PremiseFailed };
            for x in graph.arguments() {
                if extended.has_path(to.as_str(), x.as_str()).unwrap_or(true) {
                    continue;
                }
                let (before, after) = (v.deg(x.as_str()), u.deg(x.as_str()));
                if (before - after).abs() > TOL {
                    return Outcome::Violated(format!("deg({x}) moved from {before} to {after}"));
                }
            }
            Outcome::Holds
        }
        (Principle::A5, Instance::Graph { graph }) => {
            let Some(v) = view(s, graph) else { return Outcome::PremiseFailed };
            let mut any = false;
            for a in graph.arguments() {
                if graph.is_leaf(a.as_str()).unwrap_or(false) {
                    any = true;
                    let (d, w) = (v.deg(a.as_str()), v.w(a.as_str()));
                    if (d - w).abs() > TOL {
                        return Outcome::Violated(format!("leaf {a} has w = {w} but deg = {d}"));
                    }
                }
            }
            if any {
                Outcome::Holds
            } else {
                Outcome::PremiseFailed
            }
        }
        (Principle::A9, Instance::Graph { graph }) => {
            let Some(v) = view(s, graph) else { return Outcome::PremiseFailed };
            let mut any = false;
            for a in graph.arguments() {
                let w = v.w(a.as_str());
                if w > 0.0 && w < 1.0 {
                    any = true;
                    let d = v.deg(a.as_str());
                    if d <= 0.0 || d >= 1.0 {
                        return Outcome::Violated(format!("{a} has w = {w} but deg = {d}"));
                    }
                }
            }
            if any {
                Outcome::Holds
            } else {
                Outcome::PremiseFailed
            }
        }
        (_, Instance::Pair { graph, a, b, x }) => {
            let Some(v) = view(s, graph) else { return Outcome::PremiseFailed };
            if !graph.contains(a.as_str()) || !graph.contains(b.as_str()) || a == b {
                return Outcome::PremiseFailed;
            }
            examine_pair(s, p, &v, a.as_str(), b.as_str(), x.as_ref())
        }
        (Principle::A11 | Principle::A12, Instance::Target { graph, a }) => {
            if !graph.contains(a.as_str()) {
                return Outcome::PremiseFailed;
            }
            let Some(v) = view(s, graph) else { return Outcome::PremiseFailed };
            let weakening = p == Principle::A11;
            if injection_premise(&v, a.as_str(), weakening).is_none() {
                return Outcome::PremiseFailed;
            }
            let (d, w) = (v.deg(a.as_str()), v.w(a.as_str()));
            if weakening {
                verdict_of(d < w, || format!("premise holds at {a} yet deg = {d} >= w = {w}"))
            } else {
                verdict_of(d > w, || format!("premise holds at {a} yet deg = {d} <= w = {w}"))
            }
        }
        _ => Outcome::PremiseFailed,
    }
}

fn examine_pair(s: &AggregativeSemantics, p: Principle, v: &View, a: &str, b: &str, x: Option<&ArgumentId>) -> Outcome {
    if v.w(a) != v.w(b) {
        return Outcome::PremiseFailed;
    }
    let (att_a, att_b, supp_a, supp_b) = (v.att(a), v.att(b), v.supp(a), v.supp(b));
    let (da, db) = (v.deg(a), v.deg(b));
    let equal = || verdict_of((da - db).abs() <= TOL, || format!("deg({a}) = {da} but deg({b}) = {db}"));
    match p {
        Principle::A4 => {
            let same = v.sorted_degrees(&att_a) == v.sorted_degrees(&att_b)
                && v.sorted_degrees(&supp_a) == v.sorted_degrees(&supp_b);
            if !same {
                return Outcome::PremiseFailed;
            }
            equal()
        }
        Principle::A6 => {
            let Some(x) = x else { return Outcome::PremiseFailed };
            let mut parents_a: BTreeSet<ArgumentId> = att_a.union(&supp_a).cloned().collect();
            parents_a.insert(x.clone());
            let parents_b: BTreeSet<ArgumentId> = att_b.union(&supp_b).cloned().collect();
            let premise = v.deg(x.as_str()) == 0.0
                && att_a.is_subset(&att_b)
                && supp_a.is_subset(&supp_b)
                && parents_a == parents_b;
            if !premise {
                return Outcome::PremiseFailed;
            }
            equal()
        }
        Principle::A7 | Principle::A7Strict => {
            if !(att_a.is_subset(&att_b) && supp_b.is_subset(&supp_a)) {
                return Outcome::PremiseFailed;
            }
            if p == Principle::A7 {
                return verdict_of(da >= db - TOL, || format!("deg({a}) = {da} < deg({b}) = {db}"));
            }
            let proper = |small: &BTreeSet<ArgumentId>, big: &BTreeSet<ArgumentId>| {
                small.is_subset(big) && small.len() < big.len()
            };
            let strict = (da > 0.0 && proper(&v.strong(&att_a), &v.strong(&att_b)))
                || (db < 1.0 && proper(&v.strong(&supp_b), &v.strong(&supp_a)));
            if !strict {
                return Outcome::PremiseFailed;
            }
            verdict_of(da > db, || format!("deg({a}) = {da} is not above deg({b}) = {db}"))
        }
        Principle::A8 | Principle::A8Strict => {
            let c: BTreeSet<ArgumentId> = att_a.intersection(&att_b).cloned().collect();
            let c2: BTreeSet<ArgumentId> = supp_a.intersection(&supp_b).cloned().collect();
            let only = |from: &BTreeSet<ArgumentId>, common: &BTreeSet<ArgumentId>| -> Option<ArgumentId> {
                let mut rest = from.difference(common);
                match (rest.next(), rest.next()) {
                    (Some(one), None) => Some(one.clone()),
                    _ => None,
                }
            };
            let (Some(xa), Some(ya), Some(xs), Some(ys)) =
                (only(&att_a, &c), only(&att_b, &c), only(&supp_a, &c2), only(&supp_b, &c2))
            else {
                return Outcome::PremiseFailed;
            };
            let outside = [&xa, &ya, &xs, &ys].iter().all(|e| !c.contains(*e) && !c2.contains(*e));
            let (dx, dy, dxs, dys) = (v.deg(xa.as_str()), v.deg(ya.as_str()), v.deg(xs.as_str()), v.deg(ys.as_str()));
            if !(outside && dx <= dy && dxs >= dys) {
                return Outcome::PremiseFailed;
            }
            if p == Principle::A8 {
                return verdict_of(da >= db - TOL, || format!("deg({a}) = {da} < deg({b}) = {db}"));
            }
            let strict = (da > 0.0 && dx < dy) || (db < 1.0 && dxs > dys);
            if !strict {
                return Outcome::PremiseFailed;
            }
            verdict_of(da > db, || format!("deg({a}) = {da} is not above deg({b}) = {db}"))
        }
        Principle::A10 | Principle::A10Strict => {
            let (Some(xa), Some(ys)) = (single_extra(&att_a, &att_b), single_extra(&supp_a, &supp_b)) else {
                return Outcome::PremiseFailed;
            };
            if v.deg(xa.as_str()) != v.deg(ys.as_str()) {
                return Outcome::PremiseFailed;
            }
            if p == Principle::A10 {
                verdict_of(da <= db + TOL, || format!("deg({a}) = {da} > deg({b}) = {db}"))
            } else {
                equal()
            }
        }
        _ => {
            let _ = s;
            Outcome::PremiseFailed
        }
    }
}

/// The single element of `big \ small` when `small` is a subset of `big`.
fn single_extra(big: &BTreeSet<ArgumentId>, small: &BTreeSet<ArgumentId>) -> Option<ArgumentId> {
    if !small.is_subset(big) || big.len() != small.len() + 1 {
        return None;
    }
    big.difference(small).next().cloned()
}

fn add_edge(g: &Qbaf, relation: Relation, from: &ArgumentId, to: &ArgumentId) -> Option<Qbaf> {
    let mut b = QbafBuilder::new();
    for a in g.arguments() {
        b.push_argument(a.as_str(), g.weight(a.as_str())?);
    }
    for (s, t) in g.attack_pairs() {
        b.push_edge(Relation::Attack, s.as_str(), t.as_str(), g.edge_rank(Relation::Attack, s.as_str(), t.as_str()));
    }
    for (s, t) in g.support_pairs() {
        b.push_edge(Relation::Support, s.as_str(), t.as_str(), g.edge_rank(Relation::Support, s.as_str(), t.as_str()));
    }
    b.push_edge(relation, from.as_str(), to.as_str(), None);
    b.build().ok()
}

/// Matching certifying the weakening (A11) or strengthening (A12) premise
/// at `a`: pairs `(dominated, dominating)`. Sorting both sides by
/// descending degree and pairing positionally finds a dominating injection
/// whenever one exists.
pub fn injection_premise_on(
    g: &Qbaf,
    d: &DegreeMap,
    a: &str,
    weakening: bool,
) -> Option<Vec<(ArgumentId, ArgumentId)>> {
    let v = View { g, d: d.clone() };
    if !g.contains(a) {
        return None;
    }
    injection_premise(&v, a, weakening)
}

fn injection_premise(v: &View, a: &str, weakening: bool) -> Option<Vec<(ArgumentId, ArgumentId)>> {
    // deg(a) > w(a) cannot hold at w(a) = 1, so strengthening also needs w(a) < 1
    let w = v.w(a);
    if w <= 0.0 || (!weakening && w >= 1.0) {
        return None;
    }
    let (small, big) = if weakening { (v.supp(a), v.att(a)) } else { (v.att(a), v.supp(a)) };
    if small.len() > big.len() {
        return None;
    }
    let by_degree = |set: &BTreeSet<ArgumentId>| {
        let mut list: Vec<(f64, ArgumentId)> = set.iter().map(|x| (v.deg(x.as_str()), x.clone())).collect();
        list.sort_by(|p, q| q.0.total_cmp(&p.0).then_with(|| p.1.cmp(&q.1)));
        list
    };
    let (small, big) = (by_degree(&small), by_degree(&big));
    let mut strict = false;
    for (s, b) in small.iter().zip(&big) {
        if s.0 > b.0 {
            return None;
        }
        strict |= s.0 < b.0;
    }
    let leftover = big[small.len()..].iter().any(|(d, _)| *d != 0.0);
    if !(strict || leftover) {
        return None;
    }
    Some(small.into_iter().zip(big).map(|(s, b)| (s.1, b.1)).collect())
}

fn degrees_of(d: &DegreeMap, g: &Qbaf) -> HashMap<String, f64> {
    g.arguments().map(|a| (a.to_string(), d.deg(a.as_str()).unwrap_or(f64::NAN))).collect()
}

/// Builds a trial instance for `p`, or `None` if the base graph could not
/// be evaluated.
fn construct(s: &AggregativeSemantics, p: Principle, rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> Option<Instance> {
    let base = random_graph(rng, cfg, "g");
    let graph = base.clone().build().ok()?;
    let ids: Vec<ArgumentId> = graph.arguments().cloned().collect();
    match p {
        Principle::A1 => {
            let mut targets: Vec<usize> = (0..ids.len()).collect();
            targets.shuffle(rng);
            let mapping = ids
                .iter()
                .zip(targets)
                .map(|(id, k)| (id.clone(), ArgumentId::new(format!("r{k}")).expect("non-empty")))
                .collect();
            Some(Instance::Relabel { graph, mapping })
        }
        Principle::A2 => {
            let right = random_graph(rng, cfg, "h").build().ok()?;
            Some(Instance::Union { left: graph, right })
        }
        Principle::A3 => {
            let order = crate::graph::topological_order(&graph).ok()?.into_vec();
            let mut candidates = Vec::new();
            for i in 0..order.len() {
                for j in i + 1..order.len() {
                    let (f, t) = (&order[i], &order[j]);
                    if !graph.has_edge(Relation::Attack, f.as_str(), t.as_str())
                        && !graph.has_edge(Relation::Support, f.as_str(), t.as_str())
                    {
                        candidates.push((f.clone(), t.clone()));
                    }
                }
            }
            let (from, to) = candidates.choose(rng)?.clone();
            let relation = if rng.gen_bool(0.5) { Relation::Attack } else { Relation::Support };
            Some(Instance::AddEdge { graph, relation, from, to })
        }
        Principle::A5 | Principle::A9 => Some(Instance::Graph { graph }),
        Principle::A11 | Principle::A12 => {
            if rng.gen_bool(0.5) {
                let a = ids.choose(rng)?.clone();
                return Some(Instance::Target { graph, a });
            }
            let deg = degrees_of(&evaluate(s, &graph).ok()?, &graph);
            let mut b = base;
            let weakening = p == Principle::A11;
            let w = (grid_weight(rng, cfg.weight_step)).max(cfg.weight_step);
            b.push_argument("t", w);
            let (lesser, greater) =
                if weakening { (Relation::Support, Relation::Attack) } else { (Relation::Attack, Relation::Support) };
            let mut fresh = 0;
            for id in &ids {
                if !rng.gen_bool(0.4) {
                    continue;
                }
                b.push_edge(lesser, id.as_str(), "t", None);
                let d = deg[id.as_str()];
                let bump = if rng.gen_bool(0.5) { 0.0 } else { rng.gen_range(0.0..=1.0 - d) };
                let name = format!("f{fresh}");
                fresh += 1;
                b.push_argument(&name, (d + bump).min(1.0));
                b.push_edge(greater, &name, "t", None);
            }
            if fresh == 0 || rng.gen_bool(0.5) {
                let name = format!("f{fresh}");
                b.push_argument(&name, grid_weight(rng, cfg.weight_step));
                b.push_edge(greater, &name, "t", None);
            }
            Some(Instance::Target { graph: b.build().ok()?, a: ArgumentId::new("t").expect("non-empty") })
        }
        _ => construct_pair(s, p, rng, cfg, base, &graph, &ids),
    }
}

fn construct_pair(
    s: &AggregativeSemantics,
    p: Principle,
    rng: &mut ChaCha8Rng,
    cfg: &GeneratorConfig,
    mut b: QbafBuilder,
    graph: &Qbaf,
    ids: &[ArgumentId],
) -> Option<Instance> {
    let deg = degrees_of(&evaluate(s, graph).ok()?, graph);
    let id = |s: &str| ArgumentId::new(s).expect("non-empty");
    let w = grid_weight(rng, cfg.weight_step);
    let mut fresh = 0usize;
    let mut leaf = |b: &mut QbafBuilder, weight: f64| {
        let name = format!("f{fresh}");
        fresh += 1;
        b.push_argument(&name, weight);
        name
    };
    let edge = |b: &mut QbafBuilder, rel: Relation, from: &str, to: &str| {
        b.push_edge(rel, from, to, None);
    };
    let mut x = None;
    match p {
        Principle::A4 => {
            let src = ids.choose(rng)?;
            let src_w = graph.weight(src.as_str())?;
            b.push_argument("b", src_w);
            let share = rng.gen_bool(0.5);
            for (rel, parents) in [
                (Relation::Attack, graph.attackers(src.as_str()).ok()?),
                (Relation::Support, graph.supporters(src.as_str()).ok()?),
            ] {
                for parent in parents {
                    if share {
                        edge(&mut b, rel, parent.as_str(), "b");
                    } else {
                        let name = leaf(&mut b, deg[parent.as_str()]);
                        edge(&mut b, rel, &name, "b");
                    }
                }
            }
            return Some(Instance::Pair { graph: b.build().ok()?, a: src.clone(), b: id("b"), x: None });
        }
        Principle::A6 => {
            b.push_argument("a", w);
            b.push_argument("b", w);
            let zeros: Vec<&ArgumentId> = ids.iter().filter(|i| deg[i.as_str()] == 0.0).collect();
            let extra = match zeros.choose(rng) {
                Some(z) if rng.gen_bool(0.5) => z.as_str().to_owned(),
                _ => leaf(&mut b, 0.0),
            };
            for i in ids {
                if i.as_str() == extra {
                    continue;
                }
                let roll: f64 = rng.gen();
                let rel = if roll < 0.3 {
                    Relation::Attack
                } else if roll < 0.6 {
                    Relation::Support
                } else {
                    continue;
                };
                edge(&mut b, rel, i.as_str(), "a");
                edge(&mut b, rel, i.as_str(), "b");
            }
            let rel = if rng.gen_bool(0.5) { Relation::Attack } else { Relation::Support };
            edge(&mut b, rel, &extra, "b");
            x = Some(id(&extra));
        }
        Principle::A7 | Principle::A7Strict => {
            b.push_argument("a", w);
            b.push_argument("b", w);
            let mut pool: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
            for _ in 0..rng.gen_range(0..=3) {
                let weight = grid_weight(rng, cfg.weight_step);
                pool.push(leaf(&mut b, weight));
            }
            for i in &pool {
                match rng.gen_range(0..5) {
                    0 => edge(&mut b, Relation::Attack, i, "b"),
                    1 => {
                        edge(&mut b, Relation::Attack, i, "a");
                        edge(&mut b, Relation::Attack, i, "b");
                    }
                    2 => edge(&mut b, Relation::Support, i, "a"),
                    3 => {
                        edge(&mut b, Relation::Support, i, "a");
                        edge(&mut b, Relation::Support, i, "b");
                    }
                    _ => {}
                }
            }
        }
        Principle::A8 | Principle::A8Strict => {
            b.push_argument("a", w);
            b.push_argument("b", w);
            let mut free: Vec<String> = Vec::new();
            for i in ids {
                match rng.gen_range(0..4) {
                    0 => {
                        edge(&mut b, Relation::Attack, i.as_str(), "a");
                        edge(&mut b, Relation::Attack, i.as_str(), "b");
                    }
                    1 => {
                        edge(&mut b, Relation::Support, i.as_str(), "a");
                        edge(&mut b, Relation::Support, i.as_str(), "b");
                    }
                    _ => free.push(i.to_string()),
                }
            }
            free.shuffle(rng);
            let mut degree_of = HashMap::new();
            let mut pick = |b: &mut QbafBuilder, rng: &mut ChaCha8Rng| -> String {
                if rng.gen_bool(0.5) {
                    if let Some(name) = free.pop() {
                        degree_of.insert(name.clone(), deg[name.as_str()]);
                        return name;
                    }
                }
                let weight = grid_weight(rng, cfg.weight_step);
                let name = leaf(b, weight);
                degree_of.insert(name.clone(), weight);
                name
            };
            let (mut xa, mut ya) = (pick(&mut b, rng), pick(&mut b, rng));
            let (mut xs, mut ys) = (pick(&mut b, rng), pick(&mut b, rng));
            if degree_of[&xa] > degree_of[&ya] {
                std::mem::swap(&mut xa, &mut ya);
            }
            if degree_of[&xs] < degree_of[&ys] {
                std::mem::swap(&mut xs, &mut ys);
            }
            edge(&mut b, Relation::Attack, &xa, "a");
            edge(&mut b, Relation::Attack, &ya, "b");
            edge(&mut b, Relation::Support, &xs, "a");
            edge(&mut b, Relation::Support, &ys, "b");
        }
        Principle::A10 | Principle::A10Strict => {
            b.push_argument("a", w);
            b.push_argument("b", w);
            for i in ids {
                let roll: f64 = rng.gen();
                let rel = if roll < 0.3 {
                    Relation::Attack
                } else if roll < 0.6 {
                    Relation::Support
                } else {
                    continue;
                };
                edge(&mut b, rel, i.as_str(), "a");
                edge(&mut b, rel, i.as_str(), "b");
            }
            let shared = grid_weight(rng, cfg.weight_step);
            let xa = leaf(&mut b, shared);
            let ys = leaf(&mut b, shared);
            edge(&mut b, Relation::Attack, &xa, "a");
            edge(&mut b, Relation::Support, &ys, "a");
        }
        _ => return None,
    }
    Some(Instance::Pair { graph: b.build().ok()?, a: id("a"), b: id("b"), x })
}

/// Tuple-level form of A10: adding the same value `v` to both sides never
/// raises the combined degree. Mirrors the leaf rule when both sides of
/// the reference argument are empty.
fn franklin_tuple_holds(s: &AggregativeSemantics, att: &[f64], supp: &[f64], v: f64, z: f64) -> Option<bool> {
    let with = |xs: &[f64]| -> Vec<f64> { xs.iter().copied().chain([v]).collect() };
    let lhs = s.phi_f().eval(s.phi_r().aggregate(&with(att)).ok()?, s.phi_s().aggregate(&with(supp)).ok()?, z).ok()?;
    let rhs = if att.is_empty() && supp.is_empty() {
        z
    } else {
        s.phi_f().eval(s.phi_r().aggregate(att).ok()?, s.phi_s().aggregate(supp).ok()?, z).ok()?
    };
    Some(lhs <= rhs + TOL)
}

fn franklin_agrees(s: &AggregativeSemantics, instance: &Instance, graph_holds: bool) -> bool {
    let Instance::Pair { graph, b, .. } = instance else { return true };
    let Some(v) = view(s, graph) else { return true };
    let Instance::Pair { a, .. } = instance else { return true };
    let (Some(xa), Some(_)) = (
        single_extra(&v.att(a.as_str()), &v.att(b.as_str())),
        single_extra(&v.supp(a.as_str()), &v.supp(b.as_str())),
    ) else {
        return true;
    };
    let degrees = |set: BTreeSet<ArgumentId>| -> Vec<f64> { set.iter().map(|x| v.deg(x.as_str())).collect() };
    let att = degrees(v.att(b.as_str()));
    let supp = degrees(v.supp(b.as_str()));
    match franklin_tuple_holds(s, &att, &supp, v.deg(xa.as_str()), v.w(b.as_str())) {
        Some(tuple_holds) => tuple_holds == graph_holds,
        None => true,
    }
}

fn trial_rng(cfg: &GeneratorConfig, p: Principle, trial: usize) -> ChaCha8Rng {
    let tag = Principle::ALL.iter().position(|q| *q == p).unwrap_or(0) as u64;
    ChaCha8Rng::seed_from_u64(
        cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (trial as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9) ^ (tag << 56),
    )
}

/// Runs `cfg.trials` randomized trials and stops at the first violation.
pub fn check_principle(s: &AggregativeSemantics, p: Principle, cfg: &GeneratorConfig) -> PrincipleVerdict {
    let mut verdict = PrincipleVerdict {
        principle: p,
        status: PrincipleStatus::NoCounterexample,
        witness: None,
        trials_run: 0,
        premise_held: 0,
        reformulation_disagreements: 0,
    };
    for trial in 0..cfg.trials.max(1) {
        verdict.trials_run += 1;
        let mut rng = trial_rng(cfg, p, trial);
        let Some(instance) = construct(s, p, &mut rng, cfg) else { continue };
        let outcome = examine(s, p, &instance);
        if outcome == Outcome::PremiseFailed {
            continue;
        }
        verdict.premise_held += 1;
        if p == Principle::A10 && !franklin_agrees(s, &instance, outcome == Outcome::Holds) {
            verdict.reformulation_disagreements += 1;
        }
        if let Outcome::Violated(detail) = outcome {
            verdict.status = PrincipleStatus::Violated;
            verdict.witness = Some(PrincipleWitness::Instance { trial, instance, detail });
            break;
        }
    }
    verdict
}

/// Replays a stored witness; true when it still shows a violation.
pub fn replay(s: &AggregativeSemantics, verdict: &PrincipleVerdict) -> bool {
    match &verdict.witness {
        Some(PrincipleWitness::Instance { instance, .. }) => {
            matches!(examine(s, verdict.principle, instance), Outcome::Violated(_))
        }
        Some(PrincipleWitness::Triple { x, y, z, .. }) => {
            s.phi_f().eval(*x, *y, *z).map(|v| v <= 0.0 || v >= 1.0).unwrap_or(false)
        }
        None => false,
    }
}

/// Scans `phi_f` directly on a grid with `z` strictly inside (0, 1) for
/// values reaching 0 or 1.
pub fn resilience_scan(phi_f: &Combiner, step: f64) -> PrincipleVerdict {
    let steps = (1.0 / step).round().max(1.0) as usize;
    let grid: Vec<f64> = (0..=steps).map(|i| i as f64 / steps as f64).collect();
    let mut verdict = PrincipleVerdict {
        principle: Principle::A9,
        status: PrincipleStatus::NoCounterexample,
        witness: None,
        trials_run: 0,
        premise_held: 0,
        reformulation_disagreements: 0,
    };
    for &z in &grid[1..steps] {
        for &x in &grid {
            for &y in &grid {
                verdict.trials_run += 1;
                verdict.premise_held += 1;
                let Ok(value) = phi_f.eval(x, y, z) else { continue };
                if value <= 0.0 || value >= 1.0 {
                    verdict.status = PrincipleStatus::Violated;
                    verdict.witness = Some(PrincipleWitness::Triple { x, y, z, value });
                    return verdict;
                }
            }
        }
    }
    verdict
}

/// Which proposition hypotheses a semantics meets, as decided by sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Hypotheses {
    /// Boundary conditions of all three functions, empty sides included.
    pub boundary: bool,
    /// 0 is neutral for both aggregators, down to the empty multiset, and
    /// `phi_f` maps the two empty values and `z` back to `z`.
    pub zero_neutral: bool,
    /// The attacker side lowers the degree and the supporter side raises
    /// it, once aggregator and combiner directions are composed.
    pub monotone: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Up,
    Down,
    Flat,
    Neither,
}

impl Direction {
    fn compose(self, other: Direction) -> Direction {
        use Direction::*;
        match (self, other) {
            (Flat, _) | (_, Flat) => Flat,
            (Neither, _) | (_, Neither) => Neither,
            (a, b) if a == b => Up,
            _ => Down,
        }
    }

    fn from_flags(up: bool, down: bool) -> Direction {
        match (up, down) {
            (true, true) => Direction::Flat,
            (true, false) => Direction::Up,
            (false, true) => Direction::Down,
            (false, false) => Direction::Neither,
        }
    }
}

fn unit_grid(step: f64) -> Vec<f64> {
    let steps = (1.0 / step).round() as usize;
    (0..=steps).map(|i| i as f64 / steps as f64).collect()
}

fn aggregator_direction(agg: &Aggregator) -> Direction {
    let grid = unit_grid(0.1);
    let (mut up, mut down) = (true, true);
    let mut tuples: Vec<Vec<f64>> = grid.iter().map(|&v| vec![v]).collect();
    for &u in &grid {
        for &v in &grid {
            tuples.push(vec![u, v]);
        }
    }
    for t in &tuples {
        let Ok(base) = agg.aggregate(t) else { continue };
        for i in 0..t.len() {
            if t[i] >= 1.0 {
                continue;
            }
            let mut raised = t.clone();
            raised[i] = (t[i] + 0.1).min(1.0);
            let Ok(out) = agg.aggregate(&raised) else { continue };
            up &= out >= base - TOL;
            down &= out <= base + TOL;
        }
    }
    Direction::from_flags(up, down)
}

fn combiner_directions(c: &Combiner) -> (Direction, Direction) {
    let grid = unit_grid(0.1);
    let span = |d: Codomain| -> Vec<f64> {
        match d {
            Codomain::Unit => grid.clone(),
            Codomain::NonNegative => (0..=30).map(|i| i as f64 / 10.0).collect(),
        }
    };
    let (xs, ys) = (span(c.attack_domain()), span(c.support_domain()));
    let (mut xu, mut xd, mut yu, mut yd) = (true, true, true, true);
    for &z in &grid {
        for (i, &x) in xs.iter().enumerate() {
            for (j, &y) in ys.iter().enumerate() {
                let Ok(base) = c.eval(x, y, z) else { continue };
                if let Some(&x2) = xs.get(i + 1) {
                    if let Ok(out) = c.eval(x2, y, z) {
                        xu &= out >= base - TOL;
                        xd &= out <= base + TOL;
                    }
                }
                if let Some(&y2) = ys.get(j + 1) {
                    if let Ok(out) = c.eval(x, y2, z) {
                        yu &= out >= base - TOL;
                        yd &= out <= base + TOL;
                    }
                }
            }
        }
    }
    (Direction::from_flags(xu, xd), Direction::from_flags(yu, yd))
}

#[derive(Debug, Clone, Copy)]
struct AggregatorTags {
    boundary: bool,
    zero_neutral: bool,
    direction: Direction,
}

/// Memoizes the per-function parts of [`hypotheses`], which dominate its
/// cost when many semantics share the same aggregators.
pub struct HypothesisTagger {
    cfg: SamplingConfig,
    aggregators: HashMap<String, AggregatorTags>,
    combiners: HashMap<String, (Direction, Direction)>,
}

impl HypothesisTagger {
    pub fn new(cfg: SamplingConfig) -> Self {
        HypothesisTagger { cfg, aggregators: HashMap::new(), combiners: HashMap::new() }
    }

    fn aggregator(&mut self, a: &Aggregator) -> AggregatorTags {
        let cfg = &self.cfg;
        *self.aggregators.entry(a.name().to_owned()).or_insert_with(|| AggregatorTags {
            boundary: a.empty_value() == 0.0 && check_postulate(a, Postulate::P1, cfg).holds(),
            zero_neutral: check_postulate(a, Postulate::P9, cfg).element == Some(0.0)
                && a.aggregate(&[0.0]).is_ok_and(|v| (v - a.empty_value()).abs() <= TOL),
            direction: aggregator_direction(a),
        })
    }

    pub fn tag(&mut self, s: &AggregativeSemantics) -> Hypotheses {
        let (r, sp, f) = (s.phi_r(), s.phi_s(), s.phi_f());
        let (tr, ts) = (self.aggregator(r), self.aggregator(sp));
        let (fx, fy) = *self.combiners.entry(f.name().to_owned()).or_insert_with(|| combiner_directions(f));
        let zs = unit_grid(0.1);
        let near = |x: f64, y: f64, z: f64, want: f64| f.eval(x, y, z).is_ok_and(|v| (v - want).abs() <= TOL);

        let boundary = tr.boundary
            && ts.boundary
            && near(0.0, 1.0, 1.0, 1.0)
            && near(1.0, 0.0, 0.0, 0.0)
            && zs.iter().all(|&z| near(0.0, 0.0, z, z));
        let zero_neutral = tr.zero_neutral
            && ts.zero_neutral
            && zs.iter().all(|&z| near(r.empty_value(), sp.empty_value(), z, z));
        let monotone = tr.direction.compose(fx) == Direction::Down && ts.direction.compose(fy) == Direction::Up;
        Hypotheses { boundary, zero_neutral, monotone }
    }
}

/// Decides the hypotheses of `s` using the postulate checker on `cfg`.
pub fn hypotheses(s: &AggregativeSemantics, cfg: &SamplingConfig) -> Hypotheses {
    HypothesisTagger::new(cfg.clone()).tag(s)
}

/// Outcome of checking one proposition over a sample of semantics.
#[derive(Debug, Clone, Serialize)]
pub struct PropositionReport {
    pub proposition: u8,
    pub principles: Vec<Principle>,
    pub rows: Vec<PropositionRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropositionRow {
    pub semantics: String,
    pub qualifies: bool,
    pub verdicts: Vec<PrincipleVerdict>,
}

impl PropositionReport {
    /// True when every qualifying semantics survived every check.
    pub fn passed(&self) -> bool {
        self.rows.iter().filter(|r| r.qualifies).all(|r| r.verdicts.iter().all(PrincipleVerdict::holds))
    }

    pub fn qualifying(&self) -> usize {
        self.rows.iter().filter(|r| r.qualifies).count()
    }
}

/// Principles covered by each proposition (2 to 6).
pub fn proposition_principles(n: u8) -> Option<Vec<Principle>> {
    Some(match n {
        2 => vec![Principle::A1, Principle::A2, Principle::A3, Principle::A4],
        3 => vec![Principle::A5],
        4 => vec![Principle::A6],
        5 => vec![Principle::A8],
        6 => vec![Principle::A7],
        _ => return None,
    })
}

fn qualifies(n: u8, h: Hypotheses) -> bool {
    match n {
        3 => h.boundary,
        4 => h.zero_neutral,
        5 => h.monotone,
        6 => h.zero_neutral && h.monotone,
        _ => true,
    }
}

/// Runs the principle checks of proposition `n` on every semantics of
/// `sample` whose hypotheses hold. Non-qualifying semantics are listed but
/// not checked.
pub fn verify_proposition(
    n: u8,
    sample: &[AggregativeSemantics],
    cfg: &GeneratorConfig,
    sampling: &SamplingConfig,
) -> Option<PropositionReport> {
    let principles = proposition_principles(n)?;
    let mut tagger = HypothesisTagger::new(sampling.clone());
    let rows = sample
        .iter()
        .map(|s| {
            let h = if n == 2 { Hypotheses::default() } else { tagger.tag(s) };
            let ok = qualifies(n, h);
            let verdicts = if ok { principles.iter().map(|&p| check_principle(s, p, cfg)).collect() } else { Vec::new() };
            PropositionRow { semantics: s.label(), qualifies: ok, verdicts }
        })
        .collect();
    Some(PropositionReport { proposition: n, principles, rows })
}
