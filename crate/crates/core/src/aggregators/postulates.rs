//! Sampling-based checks of the aggregation postulates P1 to P12.
//!
//! A check can refute a postulate with a concrete counterexample but can
//! never prove it; `HoldsOnSample` only means no sampled tuple broke it.
//! Continuity is weaker still and reports `HeuristicHolds`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Aggregator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Postulate {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P9,
    P10,
    P11,
    P12,
}

impl Postulate {
    pub const ALL: [Postulate; 12] = [
        Postulate::P1,
        Postulate::P2,
        Postulate::P3,
        Postulate::P4,
        Postulate::P5,
        Postulate::P6,
        Postulate::P7,
        Postulate::P8,
        Postulate::P9,
        Postulate::P10,
        Postulate::P11,
        Postulate::P12,
    ];

    pub fn title(self) -> &'static str {
        match self {
            Postulate::P1 => "boundary conditions",
            Postulate::P2 => "monotony",
            Postulate::P3 => "continuity",
            Postulate::P4 => "commutativity",
            Postulate::P5 => "idempotence",
            Postulate::P6 => "associativity",
            Postulate::P7 => "weakening",
            Postulate::P8 => "reinforcement",
            Postulate::P9 => "neutral element",
            Postulate::P10 => "null element",
            Postulate::P11 => "composition",
            Postulate::P12 => "decomposition",
        }
    }
}

impl fmt::Display for Postulate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Postulate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Postulate::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown postulate `{s}` (expected P1..P12)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    HoldsOnSample,
    HeuristicHolds,
    Violated,
}

/// Counterexample to a postulate. Each shape is replayable with
/// [`reproduces`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Witness {
    /// P1, P5, P7, P8: a single offending tuple.
    Tuple { x: Vec<f64> },
    /// P2: `y` raises one coordinate of `x`. P4: `y` permutes `x`.
    /// P6: `x` and `y` are the two halves.
    Pair { x: Vec<f64>, y: Vec<f64> },
    /// P3: the value jumps between `at` and both perturbed points.
    Jump { at: Vec<f64>, near: Vec<f64>, nearer: Vec<f64> },
    /// P9, P10: one refuting tuple per candidate element; `position` is
    /// where the candidate sits in `tuple`.
    Element { refutations: Vec<Refutation> },
    /// P11, P12: tuples `x`, `y` extended by `z` at the front or the end.
    Extension { x: Vec<f64>, y: Vec<f64>, z: f64, z_first: bool },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Refutation {
    pub candidate: f64,
    pub tuple: Vec<f64>,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PostulateVerdict {
    pub postulate: Postulate,
    pub status: Status,
    /// Neutral (P9) or null (P10) element found on the sample.
    pub element: Option<f64>,
    pub witness: Option<Witness>,
    pub samples_used: usize,
}

impl PostulateVerdict {
    pub fn holds(&self) -> bool {
        self.status != Status::Violated
    }

    /// Short table cell: `yes`, `no`, or `e1=v` / `e0=v` for elements.
    pub fn cell(&self) -> String {
        match (self.status, self.element, self.postulate) {
            (Status::Violated, _, _) => "no".into(),
            (_, Some(e), Postulate::P9) => format!("e1={e}"),
            (_, Some(e), Postulate::P10) => format!("e0={e}"),
            _ => "yes".into(),
        }
    }
}

/// Sampling parameters. Defaults: grid step 0.1 for arity up to 3 and
/// 10,000 seeded random tuples of arity 4 and 5.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingConfig {
    pub seed: u64,
    pub grid_step: f64,
    pub grid_arity: usize,
    pub random_tuples: usize,
    pub max_arity: usize,
    pub tolerance: f64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig { seed: 7, grid_step: 0.1, grid_arity: 3, random_tuples: 10_000, max_arity: 5, tolerance: 1e-9 }
    }
}

const CONTINUITY_STEP: f64 = 1e-4;
const CONTINUITY_CONFIRM: f64 = 1e-12;
const CONTINUITY_SLOPE: f64 = 100.0;

struct Sample {
    grid: Vec<f64>,
    /// grid tuples indexed by arity - 1
    grid_tuples: Vec<Vec<Vec<f64>>>,
    random: Vec<Vec<f64>>,
}

impl Sample {
    fn new(cfg: &SamplingConfig) -> Self {
        let steps = (1.0 / cfg.grid_step).round().max(1.0) as usize;
        let grid: Vec<f64> = (0..=steps).map(|i| i as f64 / steps as f64).collect();
        let grid_tuples = (1..=cfg.grid_arity)
            .map(|n| {
                (0..n)
                    .map(|_| grid.iter().copied())
                    .multi_cartesian_product()
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let low = cfg.grid_arity + 1;
        let span = cfg.max_arity.saturating_sub(cfg.grid_arity).max(1);
        let random = (0..cfg.random_tuples)
            .map(|k| {
                let n = if cfg.max_arity > cfg.grid_arity { low + k % span } else { cfg.max_arity.max(1) };
                (0..n).map(|_| draw(&mut rng, &grid)).collect()
            })
            .collect();
        Sample { grid, grid_tuples, random }
    }

    fn all(&self) -> impl Iterator<Item = &Vec<f64>> + '_ {
        self.grid_tuples.iter().flatten().chain(&self.random)
    }
}

fn draw(rng: &mut ChaCha8Rng, grid: &[f64]) -> f64 {
    if rng.gen_bool(0.5) {
        grid[rng.gen_range(0..grid.len())]
    } else {
        rng.gen::<f64>()
    }
}

struct Checker<'a> {
    agg: &'a Aggregator,
    cfg: &'a SamplingConfig,
    sample: &'a Sample,
    evals: usize,
}

impl Checker<'_> {
    /// `None` where the aggregator is undefined; such samples are skipped.
    fn phi(&mut self, xs: &[f64]) -> Option<f64> {
        self.evals += 1;
        self.agg.aggregate(xs).ok()
    }

    fn verdict(&self, p: Postulate, witness: Option<Witness>) -> PostulateVerdict {
        let status = match (&witness, p) {
            (Some(_), _) => Status::Violated,
            (None, Postulate::P3) => Status::HeuristicHolds,
            (None, _) => Status::HoldsOnSample,
        };
        PostulateVerdict { postulate: p, status, element: None, witness, samples_used: self.evals }
    }

    fn run(&mut self, p: Postulate) -> PostulateVerdict {
        match p {
            Postulate::P1 => {
                let w = self.boundary();
                self.verdict(p, w)
            }
            Postulate::P2 => {
                let w = self.monotony();
                self.verdict(p, w)
            }
            Postulate::P3 => {
                let w = self.continuity();
                self.verdict(p, w)
            }
            Postulate::P4 => {
                let w = self.commutativity();
                self.verdict(p, w)
            }
            Postulate::P5 => {
                let w = self.idempotence();
                self.verdict(p, w)
            }
            Postulate::P6 => {
                let w = self.associativity();
                self.verdict(p, w)
            }
            Postulate::P7 | Postulate::P8 => {
                let w = self.bounded_by_extremes(p == Postulate::P7);
                self.verdict(p, w)
            }
            Postulate::P9 | Postulate::P10 => self.element(p),
            Postulate::P11 | Postulate::P12 => {
                let w = self.extension(p == Postulate::P11);
                self.verdict(p, w)
            }
        }
    }

    fn boundary(&mut self) -> Option<Witness> {
        for n in 1..=self.cfg.max_arity {
            for v in [0.0, 1.0] {
                let x = vec![v; n];
                if let Some(out) = self.phi(&x) {
                    if (out - v).abs() > self.cfg.tolerance {
                        return Some(Witness::Tuple { x });
                    }
                }
            }
        }
        None
    }

    fn monotony(&mut self) -> Option<Witness> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed ^ 0x2);
        let step = self.sample.grid[1] - self.sample.grid[0];
        let tuples: Vec<Vec<f64>> = self.sample.all().cloned().collect();
        for (k, x) in tuples.iter().enumerate() {
            let Some(base) = self.phi(x) else { continue };
            let on_grid = k < tuples.len() - self.sample.random.len();
            for i in 0..x.len() {
                if x[i] >= 1.0 {
                    continue;
                }
                let mut y = x.clone();
                y[i] = if on_grid { (x[i] + step).min(1.0) } else { x[i] + rng.gen::<f64>() * (1.0 - x[i]) };
                if let Some(out) = self.phi(&y) {
                    if base > out + self.cfg.tolerance {
                        return Some(Witness::Pair { x: x.clone(), y });
                    }
                }
            }
        }
        None
    }

    fn continuity(&mut self) -> Option<Witness> {
        let points: Vec<Vec<f64>> = self.sample.all().cloned().collect();
        for x in &points {
            let Some(base) = self.phi(x) else { continue };
            let n = x.len();
            // diagonal toward the interior first, then each coordinate both ways
            let mut directions: Vec<Vec<f64>> = vec![x.iter().map(|&v| if v < 1.0 { 1.0 } else { -1.0 }).collect()];
            for i in 0..n {
                for sign in [1.0, -1.0] {
                    let mut d = vec![0.0; n];
                    d[i] = sign;
                    directions.push(d);
                }
            }
            for d in directions {
                let shift = |h: f64| -> Option<Vec<f64>> {
                    let moved: Vec<f64> = x.iter().zip(&d).map(|(v, s)| v + s * h).collect();
                    moved.iter().all(|v| (0.0..=1.0).contains(v)).then_some(moved)
                };
                let Some(near) = shift(CONTINUITY_STEP) else { continue };
                let Some(out) = self.phi(&near) else { continue };
                if (out - base).abs() <= CONTINUITY_SLOPE * CONTINUITY_STEP {
                    continue;
                }
                let Some(nearer) = shift(CONTINUITY_CONFIRM) else { continue };
                let Some(close) = self.phi(&nearer) else { continue };
                if (close - base).abs() > CONTINUITY_SLOPE * CONTINUITY_STEP {
                    return Some(Witness::Jump { at: x.clone(), near, nearer });
                }
            }
        }
        None
    }

    fn commutativity(&mut self) -> Option<Witness> {
        let tuples: Vec<Vec<f64>> = self.sample.all().filter(|t| t.len() > 1).cloned().collect();
        for x in &tuples {
            let Some(base) = self.phi(x) else { continue };
            for perm in x.iter().copied().permutations(x.len()) {
                if let Some(out) = self.phi(&perm) {
                    if (out - base).abs() > self.cfg.tolerance {
                        return Some(Witness::Pair { x: x.clone(), y: perm });
                    }
                }
            }
        }
        None
    }

    fn idempotence(&mut self) -> Option<Witness> {
        let values: Vec<f64> = self.sample.grid.iter().copied().chain(self.sample.random.iter().map(|t| t[0])).collect();
        for n in 1..=self.cfg.max_arity {
            for &v in &values {
                let x = vec![v; n];
                if let Some(out) = self.phi(&x) {
                    if (out - v).abs() > self.cfg.tolerance {
                        return Some(Witness::Tuple { x });
                    }
                }
            }
        }
        None
    }

    fn associativity(&mut self) -> Option<Witness> {
        let tuples: Vec<Vec<f64>> = self.sample.all().filter(|t| t.len() > 1).cloned().collect();
        for t in &tuples {
            let Some(whole) = self.phi(t) else { continue };
            for k in 1..t.len() {
                let (x, y) = t.split_at(k);
                let (Some(a), Some(b)) = (self.phi(x), self.phi(y)) else { continue };
                if let Some(nested) = self.phi(&[a, b]) {
                    if (nested - whole).abs() > self.cfg.tolerance {
                        return Some(Witness::Pair { x: x.to_vec(), y: y.to_vec() });
                    }
                }
            }
        }
        None
    }

    fn bounded_by_extremes(&mut self, below_min: bool) -> Option<Witness> {
        let tuples: Vec<Vec<f64>> = self.sample.all().cloned().collect();
        for x in &tuples {
            let Some(out) = self.phi(x) else { continue };
            let broken = if below_min {
                out > x.iter().copied().fold(f64::INFINITY, f64::min) + self.cfg.tolerance
            } else {
                out < x.iter().copied().fold(f64::NEG_INFINITY, f64::max) - self.cfg.tolerance
            };
            if broken {
                return Some(Witness::Tuple { x: x.clone() });
            }
        }
        None
    }

    /// Searches the grid for a neutral (P9) or null (P10) element.
    fn element(&mut self, p: Postulate) -> PostulateVerdict {
        let neutral = p == Postulate::P9;
        let short = self.cfg.grid_arity.min(2);
        let bases: Vec<Vec<f64>> = self.sample.grid_tuples[..short]
            .iter()
            .flatten()
            .cloned()
            .chain(self.sample.random.iter().map(|t| t[..t.len() - 1].to_vec()))
            .collect();
        let mut refutations = Vec::new();
        let mut found = None;
        for &e in &self.sample.grid.clone() {
            match self.refute_element(e, neutral, &bases) {
                Some(r) => refutations.push(r),
                None => {
                    found = Some(e);
                    break;
                }
            }
        }
        match found {
            Some(e) => PostulateVerdict {
                postulate: p,
                status: Status::HoldsOnSample,
                element: Some(e),
                witness: None,
                samples_used: self.evals,
            },
            None => self.verdict(p, Some(Witness::Element { refutations })),
        }
    }

    fn refute_element(&mut self, e: f64, neutral: bool, bases: &[Vec<f64>]) -> Option<Refutation> {
        for b in bases {
            let reference = if neutral {
                match self.phi(b) {
                    Some(v) => v,
                    None => continue,
                }
            } else {
                e
            };
            for position in 0..=b.len() {
                let mut tuple = b.clone();
                tuple.insert(position, e);
                if let Some(out) = self.phi(&tuple) {
                    if (out - reference).abs() > self.cfg.tolerance {
                        return Some(Refutation { candidate: e, tuple, position });
                    }
                }
            }
        }
        None
    }

    /// Composition (`compose`) or decomposition, on pairs of equal arity.
    fn extension(&mut self, compose: bool) -> Option<Witness> {
        let mut pairs: Vec<(Vec<f64>, Vec<f64>, Vec<f64>)> = Vec::new();
        let zs = self.sample.grid.clone();
        for tuples in self.sample.grid_tuples.iter().take(2) {
            for (x, y) in tuples.iter().cartesian_product(tuples) {
                pairs.push((x.clone(), y.clone(), zs.clone()));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed ^ 0xb);
        let random = &self.sample.random;
        for k in 0..random.len() {
            let x = &random[k];
            let partner = random.iter().skip(k + 1).chain(random).find(|t| t.len() == x.len());
            if let Some(y) = partner {
                let z = draw(&mut rng, &self.sample.grid);
                pairs.push((x.clone(), y.clone(), vec![z]));
            }
        }
        let tol = self.cfg.tolerance;
        for (x, y, zs) in pairs {
            let (Some(fx), Some(fy)) = (self.phi(&x), self.phi(&y)) else { continue };
            if compose && fx > fy {
                continue;
            }
            for z in zs {
                for z_first in [false, true] {
                    let (xz, yz) = (extend(&x, z, z_first), extend(&y, z, z_first));
                    let (Some(fxz), Some(fyz)) = (self.phi(&xz), self.phi(&yz)) else { continue };
                    let broken = if compose { fxz > fyz + tol } else { fxz < fyz - tol && fx > fy + tol };
                    if broken {
                        return Some(Witness::Extension { x, y, z, z_first });
                    }
                }
            }
        }
        None
    }
}

fn extend(x: &[f64], z: f64, z_first: bool) -> Vec<f64> {
    let mut out = Vec::with_capacity(x.len() + 1);
    if z_first {
        out.push(z);
        out.extend_from_slice(x);
    } else {
        out.extend_from_slice(x);
        out.push(z);
    }
    out
}

/// Checks one postulate on the sample described by `cfg`.
pub fn check_postulate(agg: &Aggregator, p: Postulate, cfg: &SamplingConfig) -> PostulateVerdict {
    let sample = Sample::new(cfg);
    Checker { agg, cfg, sample: &sample, evals: 0 }.run(p)
}

/// Re-evaluates a witness; true when it still breaks the postulate.
pub fn reproduces(agg: &Aggregator, p: Postulate, witness: &Witness, tol: f64) -> bool {
    let phi = |xs: &[f64]| agg.aggregate(xs).ok();
    let check = || -> Option<bool> {
        Some(match (p, witness) {
            (Postulate::P1, Witness::Tuple { x }) => {
                let v = x[0];
                x.iter().all(|&c| c == v) && (v == 0.0 || v == 1.0) && (phi(x)? - v).abs() > tol
            }
            (Postulate::P5, Witness::Tuple { x }) => x.iter().all(|&c| c == x[0]) && (phi(x)? - x[0]).abs() > tol,
            (Postulate::P7, Witness::Tuple { x }) => phi(x)? > x.iter().copied().fold(f64::INFINITY, f64::min) + tol,
            (Postulate::P8, Witness::Tuple { x }) => {
                phi(x)? < x.iter().copied().fold(f64::NEG_INFINITY, f64::max) - tol
            }
            (Postulate::P2, Witness::Pair { x, y }) => {
                let raised = x.len() == y.len()
                    && x.iter().zip(y).filter(|(a, b)| a != b).count() == 1
                    && x.iter().zip(y).all(|(a, b)| a <= b);
                raised && phi(x)? > phi(y)? + tol
            }
            (Postulate::P4, Witness::Pair { x, y }) => {
                let (mut a, mut b) = (x.clone(), y.clone());
                a.sort_by(f64::total_cmp);
                b.sort_by(f64::total_cmp);
                a == b && (phi(x)? - phi(y)?).abs() > tol
            }
            (Postulate::P6, Witness::Pair { x, y }) => {
                let whole: Vec<f64> = x.iter().chain(y).copied().collect();
                (phi(&[phi(x)?, phi(y)?])? - phi(&whole)?).abs() > tol
            }
            (Postulate::P3, Witness::Jump { at, near, nearer }) => {
                let base = phi(at)?;
                let limit = CONTINUITY_SLOPE * CONTINUITY_STEP;
                (phi(near)? - base).abs() > limit && (phi(nearer)? - base).abs() > limit
            }
            (Postulate::P9 | Postulate::P10, Witness::Element { refutations }) => {
                !refutations.is_empty()
                    && refutations.iter().all(|r| {
                        let out = phi(&r.tuple);
                        let reference = if p == Postulate::P9 {
                            let mut rest = r.tuple.clone();
                            rest.remove(r.position);
                            phi(&rest)
                        } else {
                            Some(r.candidate)
                        };
                        r.tuple.get(r.position) == Some(&r.candidate)
                            && matches!((out, reference), (Some(o), Some(e)) if (o - e).abs() > tol)
                    })
            }
            (Postulate::P11, Witness::Extension { x, y, z, z_first }) => {
                phi(x)? <= phi(y)? && phi(&extend(x, *z, *z_first))? > phi(&extend(y, *z, *z_first))? + tol
            }
            (Postulate::P12, Witness::Extension { x, y, z, z_first }) => {
                phi(&extend(x, *z, *z_first))? < phi(&extend(y, *z, *z_first))? - tol && phi(x)? > phi(y)? + tol
            }
            _ => false,
        })
    };
    check().unwrap_or(false)
}

/// Verdicts of every postulate for each aggregator, in input order.
#[derive(Debug, Clone, Serialize)]
pub struct PostulateMatrix {
    pub rows: Vec<(String, Vec<PostulateVerdict>)>,
}

impl PostulateMatrix {
    /// CSV with one row per aggregator and one column per postulate.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("aggregator");
        for p in Postulate::ALL {
            out.push(',');
            out.push_str(&p.to_string());
        }
        out.push('\n');
        for (name, verdicts) in &self.rows {
            out.push_str(name);
            for v in verdicts {
                out.push(',');
                out.push_str(&v.cell());
            }
            out.push('\n');
        }
        out
    }
}

pub fn postulate_matrix(aggs: &[Aggregator], cfg: &SamplingConfig) -> PostulateMatrix {
    let sample = Sample::new(cfg);
    let rows = aggs
        .iter()
        .map(|agg| {
            let verdicts = Postulate::ALL
                .iter()
                .map(|&p| Checker { agg, cfg, sample: &sample, evals: 0 }.run(p))
                .collect();
            (agg.name().to_owned(), verdicts)
        })
        .collect();
    PostulateMatrix { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SamplingConfig {
        SamplingConfig { random_tuples: 500, ..SamplingConfig::default() }
    }

    fn check(name: &str, p: Postulate) -> PostulateVerdict {
        check_postulate(&Aggregator::by_name(name).unwrap(), p, &small())
    }

    #[test]
    fn min_is_idempotent() {
        assert_eq!(check("min", Postulate::P5).status, Status::HoldsOnSample);
    }

    #[test]
    fn product_is_not_idempotent() {
        let v = check("tnorm_product", Postulate::P5);
        assert_eq!(v.status, Status::Violated);
        let Some(Witness::Tuple { x }) = &v.witness else { panic!("{v:?}") };
        assert!(x.iter().all(|&c| c == x[0]));
        assert!(reproduces(&Aggregator::by_name("tnorm_product").unwrap(), Postulate::P5, v.witness.as_ref().unwrap(), 1e-9));
    }

    #[test]
    fn mean_has_no_neutral_element() {
        let v = check("avg_am", Postulate::P9);
        assert_eq!(v.status, Status::Violated);
        let Some(Witness::Element { refutations }) = &v.witness else { panic!() };
        assert_eq!(refutations.len(), 11);
    }

    #[test]
    fn elements_found() {
        assert_eq!(check("tnorm_product", Postulate::P9).element, Some(1.0));
        assert_eq!(check("tconorm_algebraic", Postulate::P10).element, Some(1.0));
        assert_eq!(check("avg_gm", Postulate::P10).element, Some(0.0));
        assert_eq!(check("sum", Postulate::P9).cell(), "e1=0");
    }

    #[test]
    fn drastic_conorm_jumps() {
        let v = check("tconorm_drastic", Postulate::P3);
        assert_eq!(v.status, Status::Violated);
        let Some(Witness::Jump { at, .. }) = &v.witness else { panic!() };
        assert!(at.iter().any(|&c| c == 0.0));
        assert_eq!(check("avg_gm", Postulate::P3).status, Status::HeuristicHolds);
    }

    #[test]
    fn ordered_average_is_not_commutative() {
        let owa = Aggregator::by_name("ordered_weighted_avg").unwrap();
        let v = check_postulate(&owa, Postulate::P4, &small());
        assert_eq!(v.status, Status::Violated);
        assert!(reproduces(&owa, Postulate::P4, v.witness.as_ref().unwrap(), 1e-9));
    }

    #[test]
    fn sum_boundary_fails() {
        assert_eq!(check("sum", Postulate::P1).status, Status::Violated);
    }

    #[test]
    fn witnesses_replay() {
        let cfg = small();
        let m = postulate_matrix(&super::super::catalog(), &cfg);
        for (name, verdicts) in &m.rows {
            let agg = Aggregator::by_name(name).unwrap();
            for v in verdicts {
                if let Some(w) = &v.witness {
                    assert!(reproduces(&agg, v.postulate, w, cfg.tolerance), "{name} {:?} {w:?}", v.postulate);
                }
            }
        }
    }

    #[test]
    fn deterministic_by_seed() {
        let cfg = small();
        let a = postulate_matrix(&[Aggregator::by_name("symmetric_sum").unwrap()], &cfg);
        let b = postulate_matrix(&[Aggregator::by_name("symmetric_sum").unwrap()], &cfg);
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn empty_matrix() {
        assert!(postulate_matrix(&[], &small()).rows.is_empty());
    }
}
