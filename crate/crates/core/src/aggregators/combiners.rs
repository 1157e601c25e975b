use std::fmt;
use std::sync::Arc;

use super::{AggError, Aggregator, Codomain};

type CustomFn = Arc<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Rule {
    Dfquad,
    Ebs,
    Qe,
    Example3,
    Fig8,
    Saturation,
    Min3,
    Max3,
    HybridMinmax,
    FinalFrom(Aggregator),
    Custom(CustomFn),
}

/// Broad family of a combiner, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombinerKind {
    Literature,
    Example,
    Adapted,
    Custom,
}

/// Ternary function `(x, y, z)` from the attacker weight, supporter weight
/// and intrinsic weight to a degree in `[0, 1]`.
#[derive(Clone)]
pub struct Combiner {
    name: String,
    rule: Rule,
    attack_domain: Codomain,
    support_domain: Codomain,
}

impl fmt::Debug for Combiner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Combiner")
            .field("name", &self.name)
            .field("attack_domain", &self.attack_domain)
            .field("support_domain", &self.support_domain)
            .finish()
    }
}

impl PartialEq for Combiner {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

/// Names of the dedicated (non-adapted) combiners.
pub const COMBINER_NAMES: [&str; 9] =
    ["dfquad", "ebs", "qe", "example3", "fig8", "saturation", "min3", "max3", "hybrid_minmax"];

impl Combiner {
    fn unit(name: &str, rule: Rule) -> Self {
        Combiner { name: name.to_owned(), rule, attack_domain: Codomain::Unit, support_domain: Codomain::Unit }
    }

    /// A dedicated combiner by name.
    pub fn by_name(name: &str) -> Result<Self, AggError> {
        let rule = match name {
            "dfquad" => Rule::Dfquad,
            "ebs" | "qe" => {
                let rule = if name == "ebs" { Rule::Ebs } else { Rule::Qe };
                return Ok(Combiner {
                    name: name.to_owned(),
                    rule,
                    attack_domain: Codomain::NonNegative,
                    support_domain: Codomain::NonNegative,
                });
            }
            "example3" => Rule::Example3,
            "fig8" => Rule::Fig8,
            "saturation" => Rule::Saturation,
            "min3" => Rule::Min3,
            "max3" => Rule::Max3,
            "hybrid_minmax" => Rule::HybridMinmax,
            other => return Err(AggError::UnknownCombiner(other.to_owned())),
        };
        Ok(Self::unit(name, rule))
    }

    /// Dedicated combiner if `name` is one, otherwise the catalog aggregator
    /// of that name adapted with [`final_from`].
    pub fn resolve(name: &str) -> Result<Self, AggError> {
        match Self::by_name(name) {
            Ok(c) => Ok(c),
            Err(_) => match Aggregator::by_name(name) {
                Ok(a) => final_from(&a),
                Err(_) => Err(AggError::UnknownCombiner(name.to_owned())),
            },
        }
    }

    pub fn custom(name: &str, f: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        Self::unit(name, Rule::Custom(Arc::new(f)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> CombinerKind {
        match self.rule {
            Rule::Dfquad | Rule::Ebs | Rule::Qe => CombinerKind::Literature,
            Rule::FinalFrom(_) => CombinerKind::Adapted,
            Rule::Custom(_) => CombinerKind::Custom,
            _ => CombinerKind::Example,
        }
    }

    /// The aggregator behind an adapted combiner.
    pub fn source(&self) -> Option<&Aggregator> {
        match &self.rule {
            Rule::FinalFrom(a) => Some(a),
            _ => None,
        }
    }

    /// Range accepted for `x`.
    pub fn attack_domain(&self) -> Codomain {
        self.attack_domain
    }

    /// Range accepted for `y`.
    pub fn support_domain(&self) -> Codomain {
        self.support_domain
    }

    pub fn eval(&self, x: f64, y: f64, z: f64) -> Result<f64, AggError> {
        let v = match &self.rule {
            Rule::Dfquad => z - z * (y - x).max(0.0) + (1.0 - z) * (x - y).max(0.0),
            Rule::Ebs => 1.0 - (1.0 - z * z) / (1.0 + z * (y - x).exp()),
            Rule::Qe => {
                let h = |s: f64| {
                    let s = s.max(0.0);
                    s * s / (1.0 + s * s)
                };
                z - z * h(x - y) + (1.0 - z) * h(y - x)
            }
            Rule::Example3 => ((1.0 - x + y) / 2.0 + z) / 2.0,
            Rule::Fig8 => ((1.0 + y) * (z - x).max(0.0)).min(1.0),
            Rule::Saturation => {
                if x < 0.5 {
                    (y + z).min(1.0)
                } else {
                    ((-x + y + z) / 3.0).max(0.0)
                }
            }
            Rule::Min3 => (1.0 - x).min(y).min(z),
            Rule::Max3 => (1.0 - x).max(y).max(z),
            Rule::HybridMinmax => {
                if x < 0.2 && y > 0.8 && z > 0.8 {
                    (1.0 - x).max(y).max(z)
                } else if x > 0.8 && y < 0.2 && z < 0.2 {
                    (1.0 - x).min(y).min(z)
                } else {
                    (1.0 - x + y + z) / 3.0
                }
            }
            Rule::FinalFrom(a) => a.aggregate(&[1.0 - x, y, z])?,
            Rule::Custom(f) => f(x, y, z),
        };
        Ok(v)
    }
}

/// Adapts an aggregator into a combiner: `(x, y, z) -> agg(1 - x, y, z)`.
pub fn final_from(agg: &Aggregator) -> Result<Combiner, AggError> {
    if agg.codomain() != Codomain::Unit {
        return Err(AggError::NotUnitCodomain(agg.name().to_owned()));
    }
    Ok(Combiner::unit(agg.name(), Rule::FinalFrom(agg.clone())))
}

/// The DF-Quad, Ebs and QE combiners.
pub fn literature_combiners() -> [Combiner; 3] {
    ["dfquad", "ebs", "qe"].map(|n| Combiner::by_name(n).expect("literature names resolve"))
}

/// Every dedicated combiner, literature ones included.
pub fn example_combiners() -> Vec<Combiner> {
    COMBINER_NAMES.iter().map(|n| Combiner::by_name(n).expect("combiner names resolve")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(name: &str) -> Combiner {
        Combiner::by_name(name).unwrap()
    }

    #[test]
    fn literature_values() {
        assert!((c("dfquad").eval(0.09, 0.16, 0.5).unwrap() - 0.465).abs() < 1e-12);
        assert_eq!(c("ebs").eval(1.0, 1.0, 0.5).unwrap(), 0.5);
        for s in [0.0, 0.7, 2.5] {
            assert_eq!(c("qe").eval(s, s, 0.3).unwrap(), 0.3);
        }
    }

    #[test]
    fn example_values() {
        assert!((c("example3").eval(0.09, 1.0, 0.5).unwrap() - 0.7275).abs() < 1e-12);
        assert!((c("fig8").eval(0.3, 0.4, 0.5).unwrap() - 0.28).abs() < 1e-12);
        assert!((c("saturation").eval(0.497, 0.1, 0.5).unwrap() - 0.6).abs() < 1e-12);
        assert!((c("saturation").eval(0.5, 0.1, 0.5).unwrap() - 0.1 / 3.0).abs() < 1e-12);
        assert_eq!(c("min3").eval(0.2, 0.5, 0.9).unwrap(), 0.5);
        assert_eq!(c("max3").eval(0.2, 0.5, 0.6).unwrap(), 0.8);
        assert_eq!(c("hybrid_minmax").eval(0.1, 0.9, 0.95).unwrap(), 0.95);
        assert!((c("hybrid_minmax").eval(0.9, 0.1, 0.15).unwrap() - 0.1).abs() < 1e-12);
    }

    #[test]
    fn adapted_combiners() {
        let avg = final_from(&Aggregator::by_name("avg_am").unwrap()).unwrap();
        let v = avg.eval(0.494, 0.506, 0.5).unwrap();
        assert!((v - 0.504).abs() < 1e-12);
        assert!((avg.eval(0.0, 0.0, 0.4).unwrap() - 1.4 / 3.0).abs() < 1e-12);

        let prod = final_from(&Aggregator::by_name("tnorm_product").unwrap()).unwrap();
        for (x, y) in [(0.0, 0.0), (0.3, 0.9), (1.0, 1.0)] {
            assert_eq!(prod.eval(x, y, 0.0).unwrap(), 0.0);
        }
        assert!(matches!(
            final_from(&Aggregator::by_name("sum").unwrap()),
            Err(AggError::NotUnitCodomain(_))
        ));
    }

    #[test]
    fn resolution_prefers_dedicated() {
        assert_eq!(Combiner::resolve("ebs").unwrap().kind(), CombinerKind::Literature);
        assert_eq!(Combiner::resolve("min").unwrap().kind(), CombinerKind::Adapted);
        assert!(Combiner::resolve("nope").is_err());
    }

    fn unit() -> impl Strategy<Value = f64> {
        prop_oneof![Just(0.0), Just(1.0), 0.0..=1.0f64]
    }

    proptest! {
        // DF-Quad is left out: its x and y are products of complements, so it
        // grows with x rather than shrinking.
        #[test]
        fn monotone_in_each_slot(x in unit(), y in unit(), z in unit(), d in 0.0..0.5f64) {
            let mut all = example_combiners();
            all.retain(|c| c.name() != "dfquad");
            for name in ["avg_am", "avg_gm", "tnorm_product", "max", "tnorm_lukasiewicz"] {
                all.push(final_from(&Aggregator::by_name(name).unwrap()).unwrap());
            }
            let up = |v: f64| (v + d).min(1.0);
            for c in &all {
                let base = c.eval(x, y, z).unwrap();
                prop_assert!(c.eval(up(x), y, z).unwrap() <= base + 1e-12, "{} in x", c.name());
                prop_assert!(c.eval(x, up(y), z).unwrap() >= base - 1e-12, "{} in y", c.name());
                prop_assert!(c.eval(x, y, up(z)).unwrap() >= base - 1e-12, "{} in z", c.name());
            }
        }

        #[test]
        fn dfquad_grows_with_x(x in unit(), y in unit(), z in unit(), d in 0.0..0.5f64) {
            let c = c("dfquad");
            prop_assert!(c.eval((x + d).min(1.0), y, z).unwrap() >= c.eval(x, y, z).unwrap() - 1e-12);
        }

        #[test]
        fn outputs_in_unit_interval(x in 0.0..5.0f64, y in 0.0..5.0f64, z in unit()) {
            for c in literature_combiners().iter().skip(1) {
                let v = c.eval(x, y, z).unwrap();
                prop_assert!((0.0..=1.0).contains(&v), "{} gave {v}", c.name());
            }
            let (x, y) = (x / 5.0, y / 5.0);
            for c in example_combiners() {
                let v = c.eval(x, y, z).unwrap();
                prop_assert!((-1e-12..=1.0 + 1e-12).contains(&v), "{} gave {v}", c.name());
            }
        }
    }
}
