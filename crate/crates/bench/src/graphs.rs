//! Hard-coded reference graphs.

use std::fmt;
use std::str::FromStr;

use qbaf_core::{Qbaf, QbafBuilder, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReferenceGraph {
    Fig1,
    Fig2Commutativity,
    Fig3Idempotence,
    Fig4WeakReinf,
    Fig5ContinuityA,
    Fig5ContinuityB,
    CompositionBefore,
    CompositionAfter,
    DecompositionBefore,
    DecompositionAfter,
    Fig8WeakeningAxiom,
    Fig6Final,
}

impl ReferenceGraph {
    pub const ALL: [ReferenceGraph; 12] = [
        ReferenceGraph::Fig1,
        ReferenceGraph::Fig2Commutativity,
        ReferenceGraph::Fig3Idempotence,
        ReferenceGraph::Fig4WeakReinf,
        ReferenceGraph::Fig5ContinuityA,
        ReferenceGraph::Fig5ContinuityB,
        ReferenceGraph::CompositionBefore,
        ReferenceGraph::CompositionAfter,
        ReferenceGraph::DecompositionBefore,
        ReferenceGraph::DecompositionAfter,
        ReferenceGraph::Fig8WeakeningAxiom,
        ReferenceGraph::Fig6Final,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReferenceGraph::Fig1 => "fig1",
            ReferenceGraph::Fig2Commutativity => "fig2_commutativity",
            ReferenceGraph::Fig3Idempotence => "fig3_idempotence",
            ReferenceGraph::Fig4WeakReinf => "fig4_weak_reinf",
            ReferenceGraph::Fig5ContinuityA => "fig5_continuity_a",
            ReferenceGraph::Fig5ContinuityB => "fig5_continuity_b",
            ReferenceGraph::CompositionBefore => "fig_composition_before",
            ReferenceGraph::CompositionAfter => "fig_composition_after",
            ReferenceGraph::DecompositionBefore => "fig_decomposition_before",
            ReferenceGraph::DecompositionAfter => "fig_decomposition_after",
            ReferenceGraph::Fig8WeakeningAxiom => "fig8_weakening_axiom",
            ReferenceGraph::Fig6Final => "fig6_final",
        }
    }
}

impl fmt::Display for ReferenceGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown graph id `{0}`")]
pub struct UnknownGraph(pub String);

impl FromStr for ReferenceGraph {
    type Err = UnknownGraph;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReferenceGraph::ALL.into_iter().find(|id| id.name() == s).ok_or_else(|| UnknownGraph(s.to_owned()))
    }
}

/// Star around `target`: every listed attacker and supporter is a leaf.
fn star(target: (&str, f64), attackers: &[(&str, f64)], supporters: &[(&str, f64)]) -> QbafBuilder {
    let mut b = QbafBuilder::new();
    b.push_argument(target.0, target.1);
    for &(id, w) in attackers {
        b.push_argument(id, w);
        b.push_edge(Relation::Attack, id, target.0, None);
    }
    for &(id, w) in supporters {
        b.push_argument(id, w);
        b.push_edge(Relation::Support, id, target.0, None);
    }
    b
}

fn composition(after: bool) -> QbafBuilder {
    let mut b = star(("a1", 0.5), &[("b1", 0.2), ("c1", 0.7)], &[]);
    b.push_argument("a2", 0.5);
    for (id, w) in [("b2", 0.4), ("c2", 0.3)] {
        b.push_argument(id, w);
        b.push_edge(Relation::Attack, id, "a2", None);
    }
    if after {
        b.push_argument("d", 0.7);
        b.push_edge(Relation::Attack, "d", "a1", None);
        b.push_edge(Relation::Attack, "d", "a2", None);
    }
    b
}

fn decomposition(before: bool) -> QbafBuilder {
    let mut b = star(("a1", 0.5), &[("b1", 0.6), ("c1", 0.6)], &[]);
    b.push_argument("a2", 0.5);
    for (id, w) in [("b2", 0.8), ("c2", 0.2)] {
        b.push_argument(id, w);
        b.push_edge(Relation::Attack, id, "a2", None);
    }
    if before {
        b.push_argument("d", 0.6);
        b.push_edge(Relation::Attack, "d", "a1", None);
        b.push_edge(Relation::Attack, "d", "a2", None);
    }
    b
}

fn fig6() -> QbafBuilder {
    let mut b = star(
        ("a", 0.5),
        &[("b", 0.9), ("c", 0.5), ("d", 0.1), ("e", 0.5)],
        &[("f", 0.8), ("g", 0.5), ("h", 0.2), ("i", 0.5)],
    );
    let mut side = |target: &str, attackers: &[(&str, f64)], supporters: &[(&str, f64)]| {
        for &(id, w) in attackers {
            b.push_argument(id, w);
            b.push_edge(Relation::Attack, id, target, None);
        }
        for &(id, w) in supporters {
            b.push_argument(id, w);
            b.push_edge(Relation::Support, id, target, None);
        }
    };
    side("e", &[("e1", 0.9), ("e2", 0.5), ("e3", 0.1)], &[("e4", 1.0), ("e5", 0.5), ("e6", 0.2), ("e7", 0.0)]);
    side("i", &[("i1", 1.0), ("i2", 0.5), ("i3", 0.2), ("i4", 0.0)], &[("i5", 0.9), ("i6", 0.5), ("i7", 0.1)]);
    b
}

/// The reference graph `id`. Every target has weight 0.5 unless its figure
/// says otherwise.
pub fn reference_graph(id: ReferenceGraph) -> Qbaf {
    let b = match id {
        ReferenceGraph::Fig1 => star(("a", 0.5), &[("b", 0.9), ("e", 0.1)], &[("c", 0.2), ("d", 0.8)]),
        ReferenceGraph::Fig2Commutativity => {
            // the rank is the time step at which the attack was posted
            let mut b = QbafBuilder::new().argument("a", 0.5);
            for (rank, (id, w)) in [("b", 0.4), ("c", 0.9), ("d", 0.9), ("e", 0.2)].into_iter().enumerate() {
                b = b.argument(id, w).ranked(Relation::Attack, id, "a", rank as i64 + 1);
            }
            b
        }
        ReferenceGraph::Fig3Idempotence => star(("a", 0.5), &[("b", 0.4), ("c", 0.4)], &[]),
        ReferenceGraph::Fig4WeakReinf => star(("a", 0.5), &[("b", 0.2), ("d", 0.8), ("c", 0.9), ("e", 0.1)], &[]),
        ReferenceGraph::Fig5ContinuityA => star(("a", 0.5), &[("c", 0.6), ("d", 0.3), ("e", 0.59)], &[("b", 0.1)]),
        ReferenceGraph::Fig5ContinuityB => star(("a", 0.5), &[("c", 0.6), ("d", 0.3), ("e", 0.6)], &[("b", 0.1)]),
        ReferenceGraph::CompositionBefore => composition(false),
        ReferenceGraph::CompositionAfter => composition(true),
        ReferenceGraph::DecompositionBefore => decomposition(true),
        ReferenceGraph::DecompositionAfter => decomposition(false),
        ReferenceGraph::Fig8WeakeningAxiom => {
            star(("a", 0.5), &[("c", 0.9), ("d", 0.5), ("f", 0.3)], &[("b", 0.6), ("e", 0.4)])
        }
        ReferenceGraph::Fig6Final => fig6(),
    };
    b.build().expect("reference graphs are valid")
}
