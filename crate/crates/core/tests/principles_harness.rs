use qbaf_core::engine::{as_aggregative, evaluate};
use qbaf_core::principles::{
    check_principle, examine, injection_premise_on, replay, resilience_scan, GeneratorConfig, Instance, Outcome,
    Principle, PrincipleStatus,
};
use qbaf_core::{final_from, AggregativeSemantics, Aggregator, ArgumentId, Literature, Qbaf, Relation};

fn cfg(trials: usize) -> GeneratorConfig {
    GeneratorConfig { seed: 5, trials, ..GeneratorConfig::default() }
}

fn fig6() -> Qbaf {
    let mut b = Qbaf::builder().argument("a", 0.5);
    let star = |b: &mut qbaf_core::QbafBuilder, to: &str, att: &[(&str, f64)], supp: &[(&str, f64)]| {
        for &(id, w) in att {
            b.push_argument(id, w);
            b.push_edge(Relation::Attack, id, to, None);
        }
        for &(id, w) in supp {
            b.push_argument(id, w);
            b.push_edge(Relation::Support, id, to, None);
        }
    };
    star(&mut b, "a", &[("b", 0.9), ("c", 0.5), ("d", 0.1), ("e", 0.5)], &[("f", 0.8), ("g", 0.5), ("h", 0.2), ("i", 0.5)]);
    star(&mut b, "e", &[("e1", 0.9), ("e2", 0.5), ("e3", 0.1)], &[("e4", 1.0), ("e5", 0.5), ("e6", 0.2), ("e7", 0.0)]);
    star(&mut b, "i", &[("i1", 1.0), ("i2", 0.5), ("i3", 0.2), ("i4", 0.0)], &[("i5", 0.9), ("i6", 0.5), ("i7", 0.1)]);
    b.build().unwrap()
}

#[test]
fn stability_holds_for_every_aggregative_semantics() {
    // the leaf rule makes A5 hold whatever the three functions are
    for (r, s, f) in [("avg_am", "avg_am", "avg_am"), ("tnorm_product", "min", "max3"), ("tnorm_drastic", "tconorm_drastic", "tnorm_drastic")] {
        let sem = AggregativeSemantics::from_names(r, s, f).unwrap();
        assert!(check_principle(&sem, Principle::A5, &cfg(300)).holds());
    }
}

#[test]
fn averaging_breaks_strengthening_on_fig6() {
    let s4 = AggregativeSemantics::from_names("avg_am", "avg_am", "avg_am").unwrap();
    let inst = Instance::Target { graph: fig6(), a: ArgumentId::new("e").unwrap() };
    assert!(matches!(examine(&s4, Principle::A12, &inst), Outcome::Violated(_)));
    let random = check_principle(&s4, Principle::A12, &cfg(500));
    assert_eq!(random.status, PrincipleStatus::Violated);
    assert!(replay(&s4, &random));
}

#[test]
fn fig6_injections() {
    let g = fig6();
    let d = evaluate(&as_aggregative(Literature::Dfquad), &g).unwrap();
    let at_i = injection_premise_on(&g, &d, "i", true).unwrap();
    assert_eq!(at_i.len(), 3);
    assert!(injection_premise_on(&g, &d, "e", false).is_some());
    assert!(injection_premise_on(&g, &d, "e", true).is_none());
}

#[test]
fn literature_semantics_pass_their_principles() {
    for l in Literature::ALL {
        let s = as_aggregative(l);
        for p in [Principle::A6, Principle::A7, Principle::A8] {
            let v = check_principle(&s, p, &cfg(300));
            assert!(v.holds(), "{l} {p}: {:?}", v.witness);
        }
    }
}

#[test]
fn franklin_separates_sums_from_products() {
    // with sums an equal attacker/supporter pair cancels exactly
    for l in [Literature::Ebs, Literature::Qe] {
        let s = as_aggregative(l);
        for p in [Principle::A10, Principle::A10Strict] {
            let v = check_principle(&s, p, &cfg(300));
            assert!(v.holds(), "{l} {p}: {:?}", v.witness);
            assert_eq!(v.reformulation_disagreements, 0);
        }
    }
    // products of complements shrink both sides by the same factor, which
    // pulls an attack-dominated degree back up towards the weight
    let df = as_aggregative(Literature::Dfquad);
    let v = check_principle(&df, Principle::A10, &cfg(300));
    assert_eq!(v.status, PrincipleStatus::Violated);
    assert!(replay(&df, &v));
}

#[test]
fn witnesses_serialize_and_replay() {
    let s = AggregativeSemantics::from_names("tnorm_product", "max", "fig8").unwrap();
    let v = check_principle(&s, Principle::A6, &cfg(500));
    assert!(!v.holds());
    let json = serde_json::to_value(&v).unwrap();
    assert_eq!(json["status"], "violated");
    assert_eq!(json["witness"]["instance"]["kind"], "pair");
    assert!(replay(&s, &v));
}

#[test]
fn resilience_scan_finds_product_collapse() {
    let prod = final_from(&Aggregator::by_name("tnorm_product").unwrap()).unwrap();
    let v = resilience_scan(&prod, 0.05);
    assert_eq!(v.status, PrincipleStatus::Violated);
    let s = AggregativeSemantics::new(Aggregator::by_name("max").unwrap(), Aggregator::by_name("max").unwrap(), prod).unwrap();
    assert!(replay(&s, &v));
}

#[test]
fn weakening_and_strengthening_on_literature() {
    // QE keeps strict inequalities; Ebs cannot move an argument of weight 1
    let qe = as_aggregative(Literature::Qe);
    for p in [Principle::A11, Principle::A12] {
        assert!(check_principle(&qe, p, &cfg(1000)).holds(), "qe {p}");
    }
    let ebs = check_principle(&as_aggregative(Literature::Ebs), Principle::A11, &GeneratorConfig { seed: 3, trials: 3000, ..GeneratorConfig::default() });
    assert_eq!(ebs.status, PrincipleStatus::Violated);
    // a degree-1 attacker and a degree-1 supporter zero both products, so
    // the remaining attackers no longer count
    let df = check_principle(&as_aggregative(Literature::Dfquad), Principle::A11, &cfg(1000));
    assert_eq!(df.status, PrincipleStatus::Violated);
}
