use std::collections::BTreeMap;

use proptest::prelude::*;
use qbaf_core::graph::{parse_qbaf_unchecked, relabel, to_json, union};
use qbaf_core::principles::{generate_random_acqbaf, GeneratorConfig};
use qbaf_core::{parse_qbaf, topological_order, validate, ArgumentId, GraphError, Qbaf};

const FIG1: &str = r#"{
  "arguments": [
    {"id": "a", "weight": 0.5}, {"id": "b", "weight": 0.9}, {"id": "c", "weight": 0.2},
    {"id": "d", "weight": 0.8}, {"id": "e", "weight": 0.1}
  ],
  "attacks": [["b", "a"], ["e", "a"]],
  "supports": [["c", "a"], ["d", "a"]]
}"#;

fn ids(set: std::collections::BTreeSet<ArgumentId>) -> Vec<String> {
    set.into_iter().map(|a| a.to_string()).collect()
}

#[test]
fn fig1_document() {
    let g = parse_qbaf(FIG1).unwrap();
    assert_eq!((g.len(), g.attack_count(), g.support_count()), (5, 2, 2));
    assert_eq!(ids(g.attackers("a").unwrap()), ["b", "e"]);
    assert_eq!(ids(g.supporters("a").unwrap()), ["c", "d"]);
    assert!(g.attackers("b").unwrap().is_empty());
    assert!(validate(&g).is_valid());
    let order = topological_order(&g).unwrap().into_vec();
    assert_eq!(order.last().unwrap().as_str(), "a");
}

#[test]
fn empty_document() {
    let g = parse_qbaf(r#"{"arguments": [], "attacks": [], "supports": []}"#).unwrap();
    assert!(g.is_empty());
}

#[test]
fn document_errors() {
    let both = r#"{"arguments": [{"id": "a", "weight": 0.5}, {"id": "b", "weight": 0.5}],
                   "attacks": [["b", "a"]], "supports": [["b", "a"]]}"#;
    assert!(matches!(parse_qbaf(both), Err(GraphError::Inconsistent { .. })));
    let heavy = r#"{"arguments": [{"id": "a", "weight": 1.3}], "attacks": [], "supports": []}"#;
    assert!(matches!(parse_qbaf(heavy), Err(GraphError::WeightOutOfRange { .. })));
    let report = validate(&parse_qbaf_unchecked(heavy).unwrap());
    assert_eq!(report.violations.len(), 1);
    assert!(report.violations[0].to_string().contains("`a`"));
    let dup = r#"{"arguments": [{"id": "a", "weight": 0.1}, {"id": "a", "weight": 0.2}], "attacks": [], "supports": []}"#;
    assert!(matches!(parse_qbaf(dup), Err(GraphError::DuplicateId(_))));
    let unknown = r#"{"arguments": [{"id": "a", "weight": 0.1}], "attacks": [["z", "a"]], "supports": []}"#;
    assert!(matches!(parse_qbaf(unknown), Err(GraphError::UnknownEndpoint { .. })));
    assert!(matches!(parse_qbaf("{"), Err(GraphError::Malformed(_))));
}

#[test]
fn cycles_are_valid_but_unordered() {
    let g = Qbaf::builder().argument("a", 0.5).argument("b", 0.5).attack("a", "b").attack("b", "a").build().unwrap();
    assert!(validate(&g).is_valid());
    match topological_order(&g) {
        Err(GraphError::Cycle { witness }) => {
            let w: Vec<&str> = witness.iter().map(|a| a.as_str()).collect();
            assert_eq!(w, ["a", "b", "a"]);
        }
        other => panic!("expected a cycle, got {other:?}"),
    }
    let selfloop = Qbaf::builder().argument("a", 0.5).attack("a", "a").build().unwrap();
    assert!(topological_order(&selfloop).is_err());
}

#[test]
fn union_and_relabel() {
    let g = parse_qbaf(FIG1).unwrap();
    let x = Qbaf::builder().argument("x", 0.3).build().unwrap();
    assert_eq!(union(&g, &x).unwrap().len(), 6);
    assert_eq!(union(&Qbaf::empty(), &g).unwrap(), g);
    assert!(matches!(union(&g, &g), Err(GraphError::Overlap { .. })));

    let id = |s: &str| ArgumentId::new(s).unwrap();
    let prime: BTreeMap<_, _> = g.arguments().map(|a| (a.clone(), id(&format!("{a}'")))).collect();
    let back: BTreeMap<_, _> = prime.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
    let h = relabel(&g, &prime).unwrap();
    assert_eq!(relabel(&h, &back).unwrap(), g);
    let ident: BTreeMap<_, _> = g.arguments().map(|a| (a.clone(), a.clone())).collect();
    assert_eq!(relabel(&g, &ident).unwrap(), g);
    let mut squash = ident.clone();
    squash.insert(id("b"), id("a"));
    assert!(relabel(&g, &squash).is_err());
}

/// Cycle search by depth-first enumeration of every path.
fn has_cycle_brute(g: &Qbaf) -> bool {
    g.arguments().any(|a| {
        let parents = |x: &str| {
            let mut p = g.attackers(x).unwrap();
            p.extend(g.supporters(x).unwrap());
            p
        };
        let mut stack: Vec<(ArgumentId, usize)> = parents(a.as_str()).into_iter().map(|p| (p, 1)).collect();
        while let Some((x, depth)) = stack.pop() {
            if &x == a {
                return true;
            }
            if depth <= g.len() {
                stack.extend(parents(x.as_str()).into_iter().map(|p| (p, depth + 1)));
            }
        }
        false
    })
}

fn arb_graph() -> impl Strategy<Value = Qbaf> {
    (1usize..=8, proptest::collection::vec((0usize..8, 0usize..8, any::<bool>()), 0..14), proptest::collection::vec(0u8..=10, 8))
        .prop_map(|(n, edges, weights)| {
            let mut b = Qbaf::builder();
            for i in 0..n {
                b.push_argument(&format!("n{i}"), f64::from(weights[i]) / 10.0);
            }
            for (s, t, attack) in edges {
                let (s, t) = (format!("n{}", s % n), format!("n{}", t % n));
                let rel = if attack { qbaf_core::Relation::Attack } else { qbaf_core::Relation::Support };
                b.push_edge(rel, &s, &t, None);
            }
            b.build_unchecked().unwrap()
        })
        .prop_filter("consistent", |g| validate(g).is_valid())
}

proptest! {
    #[test]
    fn topological_order_iff_acyclic(g in arb_graph()) {
        let order = topological_order(&g);
        prop_assert_eq!(order.is_ok(), !has_cycle_brute(&g));
        if let Ok(order) = order {
            let pos: BTreeMap<&str, usize> = order.as_slice().iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
            for (s, t) in g.attack_pairs().chain(g.support_pairs()) {
                prop_assert!(pos[s.as_str()] < pos[t.as_str()]);
            }
        }
    }

    #[test]
    fn serialization_fixpoint(seed in 0u64..5000) {
        let g = generate_random_acqbaf(&GeneratorConfig { seed, ..GeneratorConfig::default() });
        let text = to_json(&g);
        let back = parse_qbaf(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn union_commutes(a in 0u64..500, b in 0u64..500) {
        let g = generate_random_acqbaf(&GeneratorConfig { seed: a, ..GeneratorConfig::default() });
        let h = generate_random_acqbaf(&GeneratorConfig { seed: b, ..GeneratorConfig::default() });
        let ids: BTreeMap<_, _> = h.arguments().map(|x| (x.clone(), ArgumentId::new(format!("h{x}")).unwrap())).collect();
        let h = relabel(&h, &ids).unwrap();
        prop_assert_eq!(union(&g, &h).unwrap(), union(&h, &g).unwrap());
    }

    #[test]
    fn relabel_preserves_counts(seed in 0u64..5000) {
        let g = generate_random_acqbaf(&GeneratorConfig { seed, ..GeneratorConfig::default() });
        let reversed: Vec<&ArgumentId> = g.arguments().collect::<Vec<_>>().into_iter().rev().collect();
        let map: BTreeMap<_, _> = reversed.into_iter().zip(g.arguments()).map(|(a, b)| (a.clone(), ArgumentId::new(format!("{b}x")).unwrap())).collect();
        let h = relabel(&g, &map).unwrap();
        prop_assert_eq!((h.len(), h.attack_count(), h.support_count()), (g.len(), g.attack_count(), g.support_count()));
        let mut wg: Vec<f64> = g.arguments().map(|a| g.weight(a.as_str()).unwrap()).collect();
        let mut wh: Vec<f64> = h.arguments().map(|a| h.weight(a.as_str()).unwrap()).collect();
        wg.sort_by(f64::total_cmp);
        wh.sort_by(f64::total_cmp);
        prop_assert_eq!(wg, wh);
    }
}
