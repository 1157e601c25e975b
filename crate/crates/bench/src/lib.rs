//! Reference graphs and reproduction harness: the 515-semantics sweep,
//! the 15-row comparison table, the degree histogram, worked examples and
//! the expected postulate table.

pub mod emit;
pub mod examples;
pub mod graphs;
pub mod histogram;
pub mod sweep;
pub mod table2;
pub mod table4;

pub use emit::{emit_sweep, EmitError};
pub use examples::{reproduce_examples, ExamplesReport};
pub use graphs::{reference_graph, ReferenceGraph};
pub use histogram::{histogram_fig7, Histogram};
pub use sweep::{catalog_semantics, sweep_fig6, SweepRow};
pub use table2::{compare_table2, TABLE2};
pub use table4::{reproduce_table4, Table4Report};

/// True when `a` and `b` are at most `ulps` representable doubles apart.
pub fn within_ulps(a: f64, b: f64, ulps: u64) -> bool {
    if a == b {
        return true;
    }
    if a.is_nan() || b.is_nan() || a.signum() != b.signum() {
        return false;
    }
    a.to_bits().abs_diff(b.to_bits()) <= ulps
}
