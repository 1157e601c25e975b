//! The 515-semantics sweep over the final reference graph.

use std::thread;

use qbaf_core::engine::{as_aggregative, evaluate};
use qbaf_core::{AggregativeSemantics, Aggregator, Combiner, Literature};
use serde::Serialize;

use crate::graphs::{reference_graph, ReferenceGraph};

/// Catalog members used in every slot, sorted by name. The two drastic
/// functions are left out.
pub const SWEEP_AGGREGATORS: [&str; 8] = [
    "avg_am",
    "avg_gm",
    "max",
    "min",
    "tconorm_algebraic",
    "tconorm_bounded_sum",
    "tnorm_lukasiewicz",
    "tnorm_product",
];

pub const SWEEP_SIZE: usize = 3 + SWEEP_AGGREGATORS.len().pow(3);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub phi_r: String,
    pub phi_s: String,
    pub phi_f: String,
    pub deg_i: f64,
    pub deg_e: f64,
    pub pi_r_a: f64,
    pub pi_s_a: f64,
    pub deg_a: f64,
}

/// The sweep's semantics in row order: literature first, then every
/// aggregator triple lexicographically, `phi_f` adapted with `final_from`.
pub fn sweep_semantics() -> Vec<AggregativeSemantics> {
    let mut out: Vec<AggregativeSemantics> = Literature::ALL.into_iter().map(as_aggregative).collect();
    let agg = |n: &str| Aggregator::by_name(n).expect("sweep names are in the catalog");
    for r in SWEEP_AGGREGATORS {
        for s in SWEEP_AGGREGATORS {
            for f in SWEEP_AGGREGATORS {
                let phi_f = qbaf_core::final_from(&agg(f)).expect("sweep aggregators map into [0, 1]");
                out.push(AggregativeSemantics::new(agg(r), agg(s), phi_f).expect("compatible"));
            }
        }
    }
    out
}

/// Evaluates one semantics on the final reference graph.
pub fn sweep_row(s: &AggregativeSemantics) -> SweepRow {
    let g = reference_graph(ReferenceGraph::Fig6Final);
    let d = evaluate(s, &g).expect("the reference graph is acyclic");
    let get = |f: fn(&qbaf_core::DegreeMap, &str) -> Option<f64>, id: &str| f(&d, id).expect("known argument");
    SweepRow {
        phi_r: s.phi_r().name().to_owned(),
        phi_s: s.phi_s().name().to_owned(),
        phi_f: s.phi_f().name().to_owned(),
        deg_i: get(qbaf_core::DegreeMap::deg, "i"),
        deg_e: get(qbaf_core::DegreeMap::deg, "e"),
        pi_r_a: get(qbaf_core::DegreeMap::pi_r, "a"),
        pi_s_a: get(qbaf_core::DegreeMap::pi_s, "a"),
        deg_a: get(qbaf_core::DegreeMap::deg, "a"),
    }
}

/// All 515 rows, in the fixed order of [`sweep_semantics`]. Rows are
/// computed on worker threads; assembly keeps the enumeration order.
pub fn sweep_fig6() -> Vec<SweepRow> {
    let semantics = sweep_semantics();
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunk = semantics.len().div_ceil(workers);
    thread::scope(|scope| {
        let handles: Vec<_> = semantics
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(sweep_row).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    })
}

/// Broader sample for principle checks: every pair of sweep aggregators
/// with each adapted combiner and each dedicated example combiner, plus
/// the literature semantics.
pub fn catalog_semantics() -> Vec<AggregativeSemantics> {
    let agg = |n: &str| Aggregator::by_name(n).expect("sweep names are in the catalog");
    let mut combiners: Vec<Combiner> =
        SWEEP_AGGREGATORS.iter().map(|n| qbaf_core::final_from(&agg(n)).expect("unit codomain")).collect();
    for name in ["example3", "fig8", "saturation", "min3", "max3", "hybrid_minmax"] {
        combiners.push(Combiner::by_name(name).expect("dedicated combiner"));
    }
    let mut out: Vec<AggregativeSemantics> = Literature::ALL.into_iter().map(as_aggregative).collect();
    for r in SWEEP_AGGREGATORS {
        for s in SWEEP_AGGREGATORS {
            for f in &combiners {
                out.push(AggregativeSemantics::new(agg(r), agg(s), f.clone()).expect("compatible"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_sorted() {
        assert!(SWEEP_AGGREGATORS.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn size_and_order() {
        let rows = sweep_fig6();
        assert_eq!(rows.len(), SWEEP_SIZE);
        assert_eq!(SWEEP_SIZE, 515);
        assert_eq!(rows[0].phi_f, "dfquad");
        assert_eq!((rows[3].phi_r.as_str(), rows[3].phi_s.as_str(), rows[3].phi_f.as_str()), ("avg_am", "avg_am", "avg_am"));
        assert_eq!(rows[4].phi_f, "avg_gm");
        assert_eq!(rows[514].phi_r, "tnorm_product");
        assert!(rows.iter().all(|r| (0.0..=1.0).contains(&r.deg_a)));
    }

    #[test]
    fn literature_rows_near_half() {
        for row in &sweep_fig6()[..3] {
            assert!((0.48..=0.505).contains(&row.deg_a), "{row:?}");
        }
    }
}
