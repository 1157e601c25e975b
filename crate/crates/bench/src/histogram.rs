//! Distribution of deg(a) over the sweep.

use std::fmt::Write as _;

use serde::Serialize;

use crate::sweep::SweepRow;

pub const BIN_COUNT: usize = 25;
pub const BIN_WIDTH: f64 = 0.04;

/// How values are assigned to bins. Written next to every histogram
/// artifact since the convention is ours.
pub const BIN_RULE: &str = "value v goes to bin floor(v / 0.04); edges go to the higher bin; 1.0 goes to the last bin";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Histogram {
    pub counts: [usize; BIN_COUNT],
    pub total: usize,
}

/// Bin index of `v`. The epsilon keeps values such as 0.12, which land
/// just below an edge in binary, on the higher side.
pub fn bin_of(v: f64) -> usize {
    ((v * BIN_COUNT as f64 + 1e-9).floor().max(0.0) as usize).min(BIN_COUNT - 1)
}

impl Histogram {
    pub fn from_values(values: impl IntoIterator<Item = f64>) -> Self {
        let mut counts = [0; BIN_COUNT];
        let mut total = 0;
        for v in values {
            counts[bin_of(v)] += 1;
            total += 1;
        }
        Histogram { counts, total }
    }

    pub fn bin_bounds(i: usize) -> (f64, f64) {
        (i as f64 * BIN_WIDTH, (i + 1) as f64 * BIN_WIDTH)
    }

    /// Whether every bin holds at least one semantics.
    pub fn all_bins_populated(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
    }

    pub fn empty_bins(&self) -> Vec<usize> {
        (0..BIN_COUNT).filter(|&i| self.counts[i] == 0).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("bin_lo,bin_hi,count\n");
        for (i, c) in self.counts.iter().enumerate() {
            let (lo, hi) = Self::bin_bounds(i);
            let _ = writeln!(out, "{lo:.2},{hi:.2},{c}");
        }
        out
    }

    /// Static bar chart.
    pub fn to_svg(&self) -> String {
        let (w, h, margin) = (640.0, 360.0, 40.0);
        let plot_w = w - 2.0 * margin;
        let plot_h = h - 2.0 * margin;
        let max = self.counts.iter().copied().max().unwrap_or(0).max(1) as f64;
        let bar_w = plot_w / BIN_COUNT as f64;
        let mut out = String::new();
        let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
        let _ = writeln!(out, "  <title>deg(a) over {} semantics, bin width {BIN_WIDTH}</title>", self.total);
        let _ = writeln!(out, "  <desc>{BIN_RULE}</desc>");
        let _ = writeln!(out, r#"  <rect width="{w}" height="{h}" fill="white"/>"#);
        for (i, &c) in self.counts.iter().enumerate() {
            let bh = plot_h * c as f64 / max;
            let x = margin + i as f64 * bar_w;
            let y = h - margin - bh;
            let _ = writeln!(
                out,
                r##"  <rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{bh:.2}" fill="#4a78b5"><title>{:.2}-{:.2}: {c}</title></rect>"##,
                bar_w - 1.0,
                Self::bin_bounds(i).0,
                Self::bin_bounds(i).1,
            );
        }
        let axis_y = h - margin;
        let _ = writeln!(out, r#"  <line x1="{margin}" y1="{axis_y}" x2="{}" y2="{axis_y}" stroke="black"/>"#, w - margin);
        let _ = writeln!(out, r#"  <line x1="{margin}" y1="{margin}" x2="{margin}" y2="{axis_y}" stroke="black"/>"#);
        for tick in 0..=5 {
            let v = tick as f64 * 0.2;
            let x = margin + plot_w * v;
            let _ = writeln!(
                out,
                r#"  <text x="{x:.2}" y="{:.2}" font-size="11" text-anchor="middle">{v:.1}</text>"#,
                axis_y + 16.0
            );
        }
        let _ = writeln!(
            out,
            r#"  <text x="{margin}" y="{:.2}" font-size="11" text-anchor="end">{max}</text>"#,
            margin + 4.0
        );
        out.push_str("</svg>\n");
        out
    }
}

pub fn histogram_fig7(rows: &[SweepRow]) -> Histogram {
    Histogram::from_values(rows.iter().map(|r| r.deg_a))
}
