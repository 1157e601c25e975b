//! Evaluation of aggregative semantics over acyclic graphs.
//!
//! Arguments are visited in topological order. A leaf keeps its intrinsic
//! weight; every other argument gets
//! `deg = phi_f(phi_r(attacker degrees), phi_s(supporter degrees), w)`.
//! The direct DF-Quad, Ebs and QE evaluators are kept separately so the
//! aggregative rewrites can be checked against them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::aggregators::{AggError, Aggregator, Combiner};
use crate::graph::{ArgumentId, GraphError, Qbaf, Relation, TopoOrder};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("argument `{argument}`: {source}")]
    Aggregation { argument: ArgumentId, source: AggError },
    #[error("edge ({from}, {to}) has no rank but `{aggregator}` is order-sensitive")]
    MissingRank { from: ArgumentId, to: ArgumentId, aggregator: String },
    #[error("invalid evaluation order: {0}")]
    InvalidOrder(String),
    #[error("incompatible semantics: {0}")]
    Incompatible(String),
    #[error(transparent)]
    Resolve(#[from] AggError),
}

/// The triple `(phi_r, phi_s, phi_f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregativeSemantics {
    phi_r: Aggregator,
    phi_s: Aggregator,
    phi_f: Combiner,
}

impl AggregativeSemantics {
    /// Fails when `phi_f` cannot accept the values `phi_r` or `phi_s` produce.
    pub fn new(phi_r: Aggregator, phi_s: Aggregator, phi_f: Combiner) -> Result<Self, EvalError> {
        if !phi_f.attack_domain().includes(phi_r.codomain()) {
            return Err(EvalError::Incompatible(format!(
                "{} yields {} but {} expects x in {}",
                phi_r.name(),
                phi_r.codomain(),
                phi_f.name(),
                phi_f.attack_domain()
            )));
        }
        if !phi_f.support_domain().includes(phi_s.codomain()) {
            return Err(EvalError::Incompatible(format!(
                "{} yields {} but {} expects y in {}",
                phi_s.name(),
                phi_s.codomain(),
                phi_f.name(),
                phi_f.support_domain()
            )));
        }
        Ok(AggregativeSemantics { phi_r, phi_s, phi_f })
    }

    /// Resolves catalog names; `phi_f` may be a dedicated combiner or an
    /// aggregator name, adapted with `final_from`.
    pub fn from_names(phi_r: &str, phi_s: &str, phi_f: &str) -> Result<Self, EvalError> {
        Self::new(Aggregator::by_name(phi_r)?, Aggregator::by_name(phi_s)?, Combiner::resolve(phi_f)?)
    }

    pub fn phi_r(&self) -> &Aggregator {
        &self.phi_r
    }

    pub fn phi_s(&self) -> &Aggregator {
        &self.phi_s
    }

    pub fn phi_f(&self) -> &Combiner {
        &self.phi_f
    }

    /// `phi_r/phi_s/phi_f`
    pub fn label(&self) -> String {
        format!("{}/{}/{}", self.phi_r.name(), self.phi_s.name(), self.phi_f.name())
    }
}

/// The three semantics from the literature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Literature {
    Dfquad,
    Ebs,
    Qe,
}

impl Literature {
    pub const ALL: [Literature; 3] = [Literature::Dfquad, Literature::Ebs, Literature::Qe];

    pub fn name(self) -> &'static str {
        match self {
            Literature::Dfquad => "dfquad",
            Literature::Ebs => "ebs",
            Literature::Qe => "qe",
        }
    }
}

impl fmt::Display for Literature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Literature {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dfquad" => Ok(Literature::Dfquad),
            "ebs" => Ok(Literature::Ebs),
            "qe" => Ok(Literature::Qe),
            other => Err(EvalError::Resolve(AggError::UnknownCombiner(other.to_owned()))),
        }
    }
}

/// Aggregative form of a literature semantics. DF-Quad aggregates with the
/// product of complements (empty value 1); Ebs and QE with the plain sum.
pub fn as_aggregative(l: Literature) -> AggregativeSemantics {
    let agg = match l {
        Literature::Dfquad => "complement_product",
        Literature::Ebs | Literature::Qe => "sum",
    };
    let a = Aggregator::by_name(agg).expect("builtin aggregator");
    let f = Combiner::by_name(l.name()).expect("builtin combiner");
    AggregativeSemantics::new(a.clone(), a, f).expect("literature triples are compatible")
}

/// Degrees and intermediate global weights of every argument.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeMap {
    ids: Vec<ArgumentId>,
    weight: Vec<f64>,
    pi_r: Vec<f64>,
    pi_s: Vec<f64>,
    deg: Vec<f64>,
}

/// One line of a [`DegreeMap`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeRow<'a> {
    pub argument: &'a ArgumentId,
    pub weight: f64,
    pub pi_r: f64,
    pub pi_s: f64,
    pub degree: f64,
}

impl DegreeMap {
    fn position(&self, id: &str) -> Option<usize> {
        self.ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    pub fn deg(&self, id: &str) -> Option<f64> {
        self.position(id).map(|i| self.deg[i])
    }

    pub fn pi_r(&self, id: &str) -> Option<f64> {
        self.position(id).map(|i| self.pi_r[i])
    }

    pub fn pi_s(&self, id: &str) -> Option<f64> {
        self.position(id).map(|i| self.pi_s[i])
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Rows in ascending id order.
    pub fn rows(&self) -> impl Iterator<Item = DegreeRow<'_>> + '_ {
        (0..self.ids.len()).map(|i| DegreeRow {
            argument: &self.ids[i],
            weight: self.weight[i],
            pi_r: self.pi_r[i],
            pi_s: self.pi_s[i],
            degree: self.deg[i],
        })
    }

    pub(crate) fn deg_at(&self, i: usize) -> f64 {
        self.deg[i]
    }

    /// CSV with columns `argument,weight,pi_r,pi_s,degree`, optionally
    /// rounded to `digits` decimals.
    pub fn to_csv(&self, digits: Option<u32>) -> String {
        let cell = |v: f64| match digits {
            Some(d) => format!("{:.*}", d as usize, round_half_away(v, d)),
            None => format!("{v}"),
        };
        let mut out = String::from("argument,weight,pi_r,pi_s,degree\n");
        for r in self.rows() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.argument,
                cell(r.weight),
                cell(r.pi_r),
                cell(r.pi_s),
                cell(r.degree)
            ));
        }
        out
    }
}

/// Rounds half away from zero. A tiny nudge keeps values such as 0.465,
/// stored as 0.46499999..., on the side their decimal form suggests.
pub fn round_half_away(v: f64, digits: u32) -> f64 {
    let scale = 10f64.powi(digits as i32);
    ((v.abs() * scale + 0.5 + 1e-9).floor() / scale).copysign(v)
}

pub fn evaluate(s: &AggregativeSemantics, g: &Qbaf) -> Result<DegreeMap, EvalError> {
    let order = g.topo_indices()?;
    run(s, g, &order)
}

/// Evaluates along a caller-supplied order, which must be a topological
/// order of `g`.
pub fn evaluate_in_order(s: &AggregativeSemantics, g: &Qbaf, order: &TopoOrder) -> Result<DegreeMap, EvalError> {
    let ids = order.as_slice();
    if ids.len() != g.len() {
        return Err(EvalError::InvalidOrder(format!("{} ids for {} arguments", ids.len(), g.len())));
    }
    let mut position = vec![usize::MAX; g.len()];
    let mut indices = Vec::with_capacity(ids.len());
    for (k, id) in ids.iter().enumerate() {
        let i = g.require(id.as_str())?;
        if position[i] != usize::MAX {
            return Err(EvalError::InvalidOrder(format!("`{id}` listed twice")));
        }
        position[i] = k;
        indices.push(i);
    }
    for &t in &indices {
        for &p in g.attackers_at(t).iter().chain(g.supporters_at(t)) {
            if position[p] > position[t] {
                return Err(EvalError::InvalidOrder(format!("`{}` comes after `{}`", g.id_at(p), g.id_at(t))));
            }
        }
    }
    run(s, g, &indices)
}

fn run(s: &AggregativeSemantics, g: &Qbaf, order: &[usize]) -> Result<DegreeMap, EvalError> {
    let n = g.len();
    let mut deg = vec![f64::NAN; n];
    let mut pi_r = vec![s.phi_r.empty_value(); n];
    let mut pi_s = vec![s.phi_s.empty_value(); n];
    let mut buf = Vec::new();
    for &a in order {
        let w = g.weight_at(a);
        let (att, sup) = (g.attackers_at(a), g.supporters_at(a));
        if att.is_empty() && sup.is_empty() {
            deg[a] = w;
            continue;
        }
        let wrap = |source| EvalError::Aggregation { argument: g.id_at(a).clone(), source };
        gather(g, &s.phi_r, Relation::Attack, att, a, &deg, &mut buf)?;
        pi_r[a] = s.phi_r.aggregate(&buf).map_err(wrap)?;
        gather(g, &s.phi_s, Relation::Support, sup, a, &deg, &mut buf)?;
        pi_s[a] = s.phi_s.aggregate(&buf).map_err(wrap)?;
        deg[a] = s.phi_f.eval(pi_r[a], pi_s[a], w).map_err(wrap)?;
    }
    Ok(finish(g, deg, pi_r, pi_s))
}

/// Collects parent degrees into `buf`, ordered by edge rank when the
/// aggregator is order-sensitive.
fn gather(
    g: &Qbaf,
    agg: &Aggregator,
    relation: Relation,
    parents: &[usize],
    target: usize,
    deg: &[f64],
    buf: &mut Vec<f64>,
) -> Result<(), EvalError> {
    buf.clear();
    if agg.is_ordered() && parents.len() > 1 {
        let mut ranked = Vec::with_capacity(parents.len());
        for &p in parents {
            let rank = g.rank_at(relation, p, target).ok_or_else(|| EvalError::MissingRank {
                from: g.id_at(p).clone(),
                to: g.id_at(target).clone(),
                aggregator: agg.name().to_owned(),
            })?;
            ranked.push((rank, p));
        }
        ranked.sort();
        buf.extend(ranked.iter().map(|&(_, p)| deg[p]));
    } else {
        buf.extend(parents.iter().map(|&p| deg[p]));
    }
    Ok(())
}

fn finish(g: &Qbaf, deg: Vec<f64>, pi_r: Vec<f64>, pi_s: Vec<f64>) -> DegreeMap {
    DegreeMap {
        ids: g.arguments().cloned().collect(),
        weight: (0..g.len()).map(|i| g.weight_at(i)).collect(),
        pi_r,
        pi_s,
        deg,
    }
}

/// Shared loop of the direct evaluators: `fold` reduces parent degrees,
/// `update(x, y, w)` yields the degree.
fn direct(
    g: &Qbaf,
    start: f64,
    fold: impl Fn(f64, f64) -> f64,
    update: impl Fn(f64, f64, f64) -> f64,
) -> Result<DegreeMap, EvalError> {
    let order = g.topo_indices()?;
    let n = g.len();
    let (mut deg, mut pi_r, mut pi_s) = (vec![f64::NAN; n], vec![start; n], vec![start; n]);
    for a in order {
        pi_r[a] = g.attackers_at(a).iter().fold(start, |acc, &p| fold(acc, deg[p]));
        pi_s[a] = g.supporters_at(a).iter().fold(start, |acc, &p| fold(acc, deg[p]));
        deg[a] = update(pi_r[a], pi_s[a], g.weight_at(a));
    }
    Ok(finish(g, deg, pi_r, pi_s))
}

/// DF-Quad: `s = prod_att(1 - deg) - prod_supp(1 - deg)`,
/// `deg = w - w max(0, -s) + (1 - w) max(0, s)`.
pub fn evaluate_dfquad(g: &Qbaf) -> Result<DegreeMap, EvalError> {
    direct(
        g,
        1.0,
        |acc, d| acc * (1.0 - d),
        |x, y, w| {
            let s = x - y;
            w - w * (-s).max(0.0) + (1.0 - w) * s.max(0.0)
        },
    )
}

/// Euler-based: `deg = 1 - (1 - w^2) / (1 + w e^s)` with
/// `s = sum_supp deg - sum_att deg`.
pub fn evaluate_ebs(g: &Qbaf) -> Result<DegreeMap, EvalError> {
    direct(g, 0.0, |acc, d| acc + d, |x, y, w| 1.0 - (1.0 - w * w) / (1.0 + w * (y - x).exp()))
}

/// Quadratic energy: `deg = w - w h(-s) + (1 - w) h(s)` with
/// `h(s) = max(0, s)^2 / (1 + max(0, s)^2)`.
pub fn evaluate_qe(g: &Qbaf) -> Result<DegreeMap, EvalError> {
    let h = |s: f64| {
        let s = s.max(0.0);
        s * s / (1.0 + s * s)
    };
    direct(
        g,
        0.0,
        |acc, d| acc + d,
        |x, y, w| {
            let s = y - x;
            w - w * h(-s) + (1.0 - w) * h(s)
        },
    )
}

pub fn evaluate_literature(l: Literature, g: &Qbaf) -> Result<DegreeMap, EvalError> {
    match l {
        Literature::Dfquad => evaluate_dfquad(g),
        Literature::Ebs => evaluate_ebs(g),
        Literature::Qe => evaluate_qe(g),
    }
}

/// Attackers and supporters with non-zero degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrongSets {
    pub s_att: BTreeSet<ArgumentId>,
    pub s_supp: BTreeSet<ArgumentId>,
}

pub fn strong_sets(g: &Qbaf, d: &DegreeMap, a: &str) -> Result<StrongSets, EvalError> {
    let i = g.require(a)?;
    let strong = |parents: &[usize]| -> BTreeSet<ArgumentId> {
        parents.iter().filter(|&&p| d.deg_at(p) != 0.0).map(|&p| g.id_at(p).clone()).collect()
    };
    Ok(StrongSets { s_att: strong(g.attackers_at(i)), s_supp: strong(g.supporters_at(i)) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{topological_order, QbafBuilder};
    use proptest::prelude::*;

    fn fig1() -> Qbaf {
        Qbaf::builder()
            .argument("a", 0.5)
            .argument("b", 0.9)
            .argument("c", 0.2)
            .argument("d", 0.8)
            .argument("e", 0.1)
            .attack("b", "a")
            .attack("e", "a")
            .support("c", "a")
            .support("d", "a")
            .build()
            .unwrap()
    }

    #[test]
    fn worked_example_with_drastic_support() {
        let s = AggregativeSemantics::from_names("tnorm_product", "tconorm_drastic", "example3").unwrap();
        let d = evaluate(&s, &fig1()).unwrap();
        assert_eq!(d.pi_r("a"), Some(0.9 * 0.1));
        assert_eq!(d.pi_s("a"), Some(1.0));
        assert!((d.deg("a").unwrap() - 0.7275).abs() < 1e-12);
    }

    #[test]
    fn literature_on_fig1() {
        let g = fig1();
        assert!((evaluate_dfquad(&g).unwrap().deg("a").unwrap() - 0.465).abs() < 1e-12);
        assert_eq!(evaluate_ebs(&g).unwrap().deg("a"), Some(0.5));
        assert_eq!(evaluate_qe(&g).unwrap().deg("a"), Some(0.5));
        for l in Literature::ALL {
            let direct = evaluate_literature(l, &g).unwrap();
            let agg = evaluate(&as_aggregative(l), &g).unwrap();
            assert!((direct.deg("a").unwrap() - agg.deg("a").unwrap()).abs() < 1e-12, "{l}");
        }
    }

    #[test]
    fn leaves_keep_weight() {
        let g = Qbaf::builder().argument("x", 0.7).build().unwrap();
        for l in Literature::ALL {
            assert_eq!(evaluate(&as_aggregative(l), &g).unwrap().deg("x"), Some(0.7));
        }
        let one = Qbaf::builder().argument("x", 1.0).build().unwrap();
        assert_eq!(evaluate_ebs(&one).unwrap().deg("x"), Some(1.0));
        assert_eq!(evaluate_qe(&g).unwrap().deg("x"), Some(0.7));
        assert_eq!(evaluate_dfquad(&g).unwrap().deg("x"), Some(0.7));
    }

    #[test]
    fn one_sided_targets_use_empty_value() {
        let g = Qbaf::builder().argument("a", 0.5).argument("b", 0.4).attack("b", "a").build().unwrap();
        let s = AggregativeSemantics::from_names("max", "max", "avg_am").unwrap();
        let d = evaluate(&s, &g).unwrap();
        assert_eq!(d.pi_s("a"), Some(0.0));
        assert!((d.deg("a").unwrap() - (0.6 + 0.0 + 0.5) / 3.0).abs() < 1e-12);
    }

    #[test]
    fn cycles_are_rejected() {
        let g = Qbaf::builder().argument("a", 0.5).attack("a", "a").build().unwrap();
        let s = AggregativeSemantics::from_names("max", "max", "avg_am").unwrap();
        assert!(matches!(evaluate(&s, &g), Err(EvalError::Graph(GraphError::Cycle { .. }))));
        assert!(evaluate_qe(&g).is_err());
    }

    #[test]
    fn incompatible_domains() {
        let err = AggregativeSemantics::from_names("sum", "sum", "avg_am").unwrap_err();
        assert!(matches!(err, EvalError::Incompatible(_)));
        assert!(AggregativeSemantics::from_names("sum", "sum", "ebs").is_ok());
    }

    #[test]
    fn ordered_aggregator_needs_ranks() {
        let base = || {
            let mut b = QbafBuilder::new();
            b.push_argument("a", 0.5);
            for (id, w) in [("b", 0.4), ("c", 0.9), ("d", 0.9), ("e", 0.2)] {
                b.push_argument(id, w);
            }
            b
        };
        let s = AggregativeSemantics::from_names("ordered_weighted_avg", "avg_am", "avg_am").unwrap();
        let mut ranked = base();
        for (k, id) in ["b", "c", "d", "e"].iter().enumerate() {
            ranked.push_edge(Relation::Attack, id, "a", Some(k as i64 + 1));
        }
        let d = evaluate(&s, &ranked.build().unwrap()).unwrap();
        assert!((d.pi_r("a").unwrap() - 0.078 / 0.22).abs() < 1e-12);

        let mut bare = base();
        for id in ["b", "c"] {
            bare.push_edge(Relation::Attack, id, "a", None);
        }
        assert!(matches!(evaluate(&s, &bare.build().unwrap()), Err(EvalError::MissingRank { .. })));
    }

    #[test]
    fn domain_errors_name_the_argument() {
        let g = Qbaf::builder()
            .argument("a", 0.5)
            .argument("b", 0.0)
            .argument("c", 1.0)
            .attack("b", "a")
            .attack("c", "a")
            .build()
            .unwrap();
        let s = AggregativeSemantics::from_names("symmetric_sum", "max", "avg_am").unwrap();
        match evaluate(&s, &g) {
            Err(EvalError::Aggregation { argument, .. }) => assert_eq!(argument.as_str(), "a"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn custom_orders_checked() {
        let g = fig1();
        let s = AggregativeSemantics::from_names("avg_am", "avg_am", "avg_am").unwrap();
        let mut ids = topological_order(&g).unwrap().into_vec();
        ids.reverse();
        assert!(matches!(
            evaluate_in_order(&s, &g, &TopoOrder::from_ids(ids.clone())),
            Err(EvalError::InvalidOrder(_))
        ));
        ids.reverse();
        ids.swap(0, 3);
        assert_eq!(evaluate_in_order(&s, &g, &TopoOrder::from_ids(ids)).unwrap(), evaluate(&s, &g).unwrap());
    }

    #[test]
    fn strong_sets_drop_zero_degrees() {
        let g = Qbaf::builder()
            .argument("a", 0.5)
            .argument("z", 0.0)
            .argument("p", 0.3)
            .attack("z", "a")
            .attack("p", "a")
            .build()
            .unwrap();
        let s = AggregativeSemantics::from_names("max", "max", "avg_am").unwrap();
        let d = evaluate(&s, &g).unwrap();
        let sets = strong_sets(&g, &d, "a").unwrap();
        assert_eq!(sets.s_att.len(), 1);
        assert!(sets.s_att.contains("p"));
        assert!(strong_sets(&g, &d, "q").is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_half_away(0.465, 2), 0.47);
        assert_eq!(round_half_away(0.7275, 2), 0.73);
        assert_eq!(round_half_away(0.1 / 3.0, 2), 0.03);
        assert_eq!(round_half_away(-0.125, 2), -0.13);
        assert_eq!(round_half_away(1.0, 2), 1.0);
    }

    #[test]
    fn csv_layout() {
        let s = as_aggregative(Literature::Dfquad);
        let csv = evaluate(&s, &fig1()).unwrap().to_csv(Some(2));
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("argument,weight,pi_r,pi_s,degree"));
        assert_eq!(lines.next(), Some("a,0.50,0.09,0.16,0.47"));
    }

    fn random_graph() -> impl Strategy<Value = Qbaf> {
        (1usize..10)
            .prop_flat_map(|n| {
                (
                    prop::collection::vec(0u8..=10, n),
                    prop::collection::vec((0..n, 0..n, any::<bool>()), 0..15),
                )
            })
            .prop_map(|(weights, edges)| {
                let mut b = QbafBuilder::new();
                for (i, w) in weights.iter().enumerate() {
                    b.push_argument(&format!("n{i}"), *w as f64 / 10.0);
                }
                let mut seen = BTreeSet::new();
                for (x, y, attack) in edges {
                    let (s, t) = (x.min(y), x.max(y));
                    if s != t && seen.insert((s, t)) {
                        let rel = if attack { Relation::Attack } else { Relation::Support };
                        b.push_edge(rel, &format!("n{s}"), &format!("n{t}"), None);
                    }
                }
                b.build().unwrap()
            })
    }

    fn sample_semantics() -> Vec<AggregativeSemantics> {
        let mut out: Vec<_> = Literature::ALL.iter().map(|&l| as_aggregative(l)).collect();
        for (r, s, f) in [
            ("avg_am", "avg_am", "avg_am"),
            ("tnorm_product", "max", "tconorm_algebraic"),
            ("min", "tconorm_bounded_sum", "fig8"),
            ("avg_gm", "tnorm_lukasiewicz", "hybrid_minmax"),
        ] {
            out.push(AggregativeSemantics::from_names(r, s, f).unwrap());
        }
        out
    }

    proptest! {
        #[test]
        fn recomputation_and_range(g in random_graph()) {
            for s in sample_semantics() {
                let d = evaluate(&s, &g).unwrap();
                for r in d.rows() {
                    let id = r.argument.as_str();
                    prop_assert!((0.0..=1.0).contains(&r.degree), "{} {id} {}", s.label(), r.degree);
                    if g.is_leaf(id).unwrap() {
                        prop_assert_eq!(r.degree.to_bits(), r.weight.to_bits());
                    } else {
                        let again = s.phi_f().eval(r.pi_r, r.pi_s, r.weight).unwrap();
                        prop_assert_eq!(again.to_bits(), r.degree.to_bits());
                    }
                }
            }
        }

        #[test]
        fn order_independent(g in random_graph(), seed in any::<u64>()) {
            // a different valid order: Kahn's algorithm picking the largest ready id
            let mut ids: Vec<ArgumentId> = Vec::new();
            let mut placed = BTreeSet::new();
            while ids.len() < g.len() {
                let ready: Vec<&ArgumentId> = g
                    .arguments()
                    .filter(|a| !placed.contains(*a))
                    .filter(|a| {
                        let att = g.attackers(a.as_str()).unwrap();
                        let sup = g.supporters(a.as_str()).unwrap();
                        att.iter().chain(&sup).all(|p| placed.contains(p))
                    })
                    .collect();
                let pick = ready[(seed as usize) % ready.len()].clone();
                placed.insert(pick.clone());
                ids.push(pick);
            }
            let order = TopoOrder::from_ids(ids);
            for s in sample_semantics() {
                prop_assert_eq!(evaluate(&s, &g).unwrap(), evaluate_in_order(&s, &g, &order).unwrap());
            }
        }

        #[test]
        fn literature_rewrites_agree(g in random_graph()) {
            for l in Literature::ALL {
                let a = evaluate(&as_aggregative(l), &g).unwrap();
                let b = evaluate_literature(l, &g).unwrap();
                for (x, y) in a.rows().zip(b.rows()) {
                    prop_assert!((x.degree - y.degree).abs() <= 1e-9);
                }
            }
        }
    }
}
