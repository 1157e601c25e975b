//! Aggregation functions used for the attacker and supporter global weights,
//! and the ternary combiners that turn them into a degree.
//!
//! Binary-only definitions (Łukasiewicz, drastic, symmetric sum) extend to
//! any arity by a left fold. The empty multiset maps to the aggregator's
//! `empty_value`, which is the minimum of its codomain except for the
//! complemented product used by DF-Quad.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod combiners;
pub mod postulates;

pub use combiners::{example_combiners, final_from, literature_combiners, Combiner, CombinerKind};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AggError {
    #[error("{aggregator}: input {value} is outside its domain")]
    OutOfDomain { aggregator: String, value: f64 },
    #[error("{aggregator}: undefined at {inputs:?}")]
    Singular { aggregator: String, inputs: Vec<f64> },
    #[error("{0}: codomain is not [0, 1], cannot build a combiner from it")]
    NotUnitCodomain(String),
    #[error("unknown aggregator `{0}`")]
    Unknown(String),
    #[error("unknown combiner `{0}`")]
    UnknownCombiner(String),
}

/// Value range of an aggregator or combiner slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Codomain {
    /// `[0, 1]`
    Unit,
    /// `[0, +inf)`
    NonNegative,
}

impl Codomain {
    pub fn contains(self, v: f64) -> bool {
        match self {
            Codomain::Unit => (0.0..=1.0).contains(&v),
            Codomain::NonNegative => v >= 0.0 && v.is_finite(),
        }
    }

    /// Whether every value of `other` is also a value of `self`.
    pub fn includes(self, other: Codomain) -> bool {
        !(self == Codomain::Unit && other == Codomain::NonNegative)
    }
}

impl fmt::Display for Codomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Codomain::Unit => f.write_str("[0,1]"),
            Codomain::NonNegative => f.write_str("[0,inf)"),
        }
    }
}

type CustomFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Rule {
    AvgAm,
    AvgGm,
    Product,
    AlgebraicSum,
    Min,
    Max,
    Lukasiewicz,
    BoundedSum,
    DrasticTnorm,
    DrasticTconorm,
    Sum,
    SymmetricSum,
    OrderedWeightedAvg,
    ComplementProduct,
    Custom(CustomFn),
}

/// A named n-ary aggregation function.
#[derive(Clone)]
pub struct Aggregator {
    name: String,
    rule: Rule,
    domain: Codomain,
    codomain: Codomain,
    empty_value: f64,
    ordered: bool,
}

impl fmt::Debug for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Aggregator")
            .field("name", &self.name)
            .field("codomain", &self.codomain)
            .field("empty_value", &self.empty_value)
            .field("ordered", &self.ordered)
            .finish()
    }
}

impl PartialEq for Aggregator {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

/// Names of the ten functions of the reference table, in table order.
pub const TABLE_NAMES: [&str; 10] = [
    "avg_am",
    "avg_gm",
    "tnorm_product",
    "tconorm_algebraic",
    "min",
    "max",
    "tnorm_lukasiewicz",
    "tconorm_bounded_sum",
    "tnorm_drastic",
    "tconorm_drastic",
];

impl Aggregator {
    fn builtin(name: &str, rule: Rule) -> Self {
        Aggregator {
            name: name.to_owned(),
            rule,
            domain: Codomain::Unit,
            codomain: Codomain::Unit,
            empty_value: 0.0,
            ordered: false,
        }
    }

    /// Looks up a catalog member by its stable name.
    pub fn by_name(name: &str) -> Result<Self, AggError> {
        let rule = match name {
            "avg_am" => Rule::AvgAm,
            "avg_gm" => Rule::AvgGm,
            "tnorm_product" => Rule::Product,
            "tconorm_algebraic" => Rule::AlgebraicSum,
            "min" => Rule::Min,
            "max" => Rule::Max,
            "tnorm_lukasiewicz" => Rule::Lukasiewicz,
            "tconorm_bounded_sum" => Rule::BoundedSum,
            "tnorm_drastic" => Rule::DrasticTnorm,
            "tconorm_drastic" => Rule::DrasticTconorm,
            "sum" => {
                let mut a = Self::builtin(name, Rule::Sum);
                a.domain = Codomain::NonNegative;
                a.codomain = Codomain::NonNegative;
                return Ok(a);
            }
            "symmetric_sum" => Rule::SymmetricSum,
            "ordered_weighted_avg" => {
                let mut a = Self::builtin(name, Rule::OrderedWeightedAvg);
                a.ordered = true;
                return Ok(a);
            }
            "complement_product" => {
                let mut a = Self::builtin(name, Rule::ComplementProduct);
                a.empty_value = 1.0;
                return Ok(a);
            }
            other => return Err(AggError::Unknown(other.to_owned())),
        };
        Ok(Self::builtin(name, rule))
    }

    /// Wraps an arbitrary function over `[0, 1]` inputs, e.g. the piecewise
    /// aggregators used to illustrate composition.
    pub fn custom(
        name: &str,
        codomain: Codomain,
        empty_value: f64,
        f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Aggregator {
            name: name.to_owned(),
            rule: Rule::Custom(Arc::new(f)),
            domain: Codomain::Unit,
            codomain,
            empty_value,
            ordered: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn codomain(&self) -> Codomain {
        self.codomain
    }

    /// Range accepted for each input.
    pub fn domain(&self) -> Codomain {
        self.domain
    }

    pub fn empty_value(&self) -> f64 {
        self.empty_value
    }

    /// True for aggregators whose result depends on input order.
    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    /// Aggregates `values`, read as a sequence for ordered aggregators and
    /// as a multiset otherwise.
    pub fn aggregate(&self, values: &[f64]) -> Result<f64, AggError> {
        if let Some(&bad) = values.iter().find(|&&v| !self.domain.contains(v)) {
            return Err(AggError::OutOfDomain { aggregator: self.name.clone(), value: bad });
        }
        if values.is_empty() {
            return Ok(self.empty_value);
        }
        let v = match &self.rule {
            Rule::AvgAm => values.iter().sum::<f64>() / values.len() as f64,
            Rule::AvgGm => values.iter().product::<f64>().powf(1.0 / values.len() as f64),
            Rule::Product => values.iter().product(),
            Rule::AlgebraicSum => 1.0 - values.iter().map(|v| 1.0 - v).product::<f64>(),
            Rule::Min => values.iter().copied().fold(f64::INFINITY, f64::min),
            Rule::Max => values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            Rule::Lukasiewicz => fold(values, |a, b| (a + b - 1.0).max(0.0)),
            Rule::BoundedSum => fold(values, |a, b| (a + b).min(1.0)),
            Rule::DrasticTnorm => fold(values, |a, b| {
                if a == 1.0 {
                    b
                } else if b == 1.0 {
                    a
                } else {
                    0.0
                }
            }),
            Rule::DrasticTconorm => fold(values, |a, b| {
                if a == 0.0 {
                    b
                } else if b == 0.0 {
                    a
                } else {
                    1.0
                }
            }),
            Rule::Sum => values.iter().sum(),
            Rule::SymmetricSum => {
                let mut acc = values[0];
                for &b in &values[1..] {
                    let den = 1.0 - acc - b + 2.0 * acc * b;
                    if den == 0.0 {
                        return Err(AggError::Singular { aggregator: self.name.clone(), inputs: values.to_vec() });
                    }
                    acc = acc * b / den;
                }
                acc
            }
            Rule::OrderedWeightedAvg => {
                let n = values.len();
                let (mut num, mut den) = (0.0, 0.0);
                for (k, v) in values.iter().enumerate() {
                    let a = positional_weight(k + 1, n);
                    num += a * v;
                    den += a;
                }
                num / den
            }
            Rule::ComplementProduct => values.iter().map(|v| 1.0 - v).product(),
            Rule::Custom(f) => f(values),
        };
        Ok(v)
    }
}

fn fold(values: &[f64], op: impl Fn(f64, f64) -> f64) -> f64 {
    values[1..].iter().fold(values[0], |acc, &v| op(acc, v))
}

/// Weight of position `i` (1-based) among `n`: `0.1^i` in the first half,
/// mirrored around the centre so both ends dominate.
fn positional_weight(i: usize, n: usize) -> f64 {
    let k = i.min(n + 1 - i);
    0.1f64.powi(k as i32)
}

/// The reference table of ten functions plus `sum`, `symmetric_sum` and
/// `ordered_weighted_avg`.
pub fn catalog() -> Vec<Aggregator> {
    TABLE_NAMES
        .iter()
        .chain(&["sum", "symmetric_sum", "ordered_weighted_avg"])
        .map(|n| Aggregator::by_name(n).expect("catalog names resolve"))
        .collect()
}

/// Only the ten functions of the reference table.
pub fn table_catalog() -> Vec<Aggregator> {
    TABLE_NAMES.iter().map(|n| Aggregator::by_name(n).expect("catalog names resolve")).collect()
}

/// Convenience wrapper over [`Aggregator::aggregate`].
pub fn aggregate(agg: &Aggregator, values: &[f64]) -> Result<f64, AggError> {
    agg.aggregate(values)
}
