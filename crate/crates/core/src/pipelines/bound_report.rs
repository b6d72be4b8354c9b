use serde::{Deserialize, Serialize};

use super::{InputSummary, SCHEMA_VERSION};
use crate::bounds::{floor_log2, floor_log_ratio, palette_size, small_spread};
use crate::graph::Graph;
use crate::oracles::{OracleBudget, OracleValues};

/// Which structural hypotheses the input meets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub connected: bool,
    pub regular_degree: Option<usize>,
    pub min_degree_at_least_2: bool,
    /// Δ ≤ 2^{(δ−3)/2}.
    pub small_degree_spread: bool,
    pub triangle_free: Option<bool>,
}

/// One evaluated right-hand side. `value` is the color bound for χ₂;
/// `None` when a hypothesis fails or a needed invariant is missing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: Option<usize>,
    /// Why the entry has no value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Every bound formula evaluated from one set of oracle values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub schema_version: u32,
    pub input_summary: InputSummary,
    pub oracle_values: OracleValues,
    pub omitted: Vec<String>,
    pub hypotheses: Hypotheses,
    /// Observed χ₂ − χ when both are known.
    pub observed_difference: Option<usize>,
    pub bounds: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<usize> {
        self.bounds.iter().find(|b| b.name == name).and_then(|b| b.value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Evaluates all bound formulas on `g` without recoloring anything.
/// Invariants the oracles cannot compute within `budget` are listed in
/// `omitted` and the formulas needing them are left empty.
pub fn bound_report(g: &Graph, budget: &OracleBudget) -> BoundReport {
    let (values, omitted) = OracleValues::compute(g, budget);
    let (min_d, max_d) = (g.min_degree(), g.max_degree());
    let hypotheses = Hypotheses {
        connected: g.is_connected(),
        regular_degree: g.regular_degree(),
        min_degree_at_least_2: g.n() > 0 && min_d >= 2,
        small_degree_spread: g.n() > 0 && small_spread(min_d, max_d),
        triangle_free: values.omega.map(|w| w <= 2),
    };
    let mut bounds = Vec::new();
    let mut push = |name: &str, value: Result<usize, String>| {
        let (value, reason) = match value {
            Ok(v) => (Some(v), None),
            Err(r) => (None, Some(r)),
        };
        bounds.push(BoundEntry {
            name: name.into(),
            value,
            reason,
        });
    };
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| format!("{what} unavailable"));
    let chi = need(values.chi, "chi");
    let alpha = need(values.alpha, "alpha");
    let omega = need(values.omega, "omega");
    let matching = need(values.matching, "matching number");
    let min2 = if hypotheses.min_degree_at_least_2 {
        Ok(())
    } else {
        Err("minimum degree below 2".to_string())
    };
    let regular = hypotheses.regular_degree.ok_or_else(|| "not regular".to_string());

    push("max_degree_rule", Ok(max_degree_rule(g)));
    push(
        "log_iteration",
        (|| {
            min2.clone()?;
            let (c, a) = (chi.clone()?, alpha.clone()?);
            let eta = palette_size(min_d, max_d).map_err(|e| e.to_string())? as usize;
            let k = floor_log_ratio(a, min_d, max_d).map_err(|e| e.to_string())? + 1;
            Ok(c + eta * k + 1)
        })(),
    );
    push(
        "regular_log",
        (|| {
            regular.clone()?;
            let (c, a) = (chi.clone()?, alpha.clone()?);
            Ok(c + 2 * floor_log2(a.max(1)) + 3)
        })(),
    );
    push(
        "small_spread_log",
        (|| {
            if !hypotheses.small_degree_spread {
                return Err("degree spread too large".to_string());
            }
            let (c, a) = (chi.clone()?, alpha.clone()?);
            Ok(c + 2 * floor_log_ratio(a, min_d, max_d).map_err(|e| e.to_string())? + 3)
        })(),
    );
    push(
        "independence_plus_one",
        (|| {
            if !hypotheses.connected {
                return Err("not connected".to_string());
            }
            Ok(chi.clone()? + alpha.clone()? + 1)
        })(),
    );
    push("independence_plus_three", (|| Ok(chi.clone()? + alpha.clone()? + 3))());
    push(
        "independence_clique_half",
        (|| {
            if !hypotheses.connected {
                return Err("not connected".to_string());
            }
            Ok(chi.clone()? + (alpha.clone()? + omega.clone()?).div_ceil(2) + 3)
        })(),
    );
    push(
        "triangle_free_half",
        (|| {
            if omega.clone()? > 2 {
                return Err("has a triangle".to_string());
            }
            Ok(chi.clone()? + alpha.clone()?.div_ceil(2) + 4)
        })(),
    );
    push(
        "regular_order_ratio",
        (|| {
            let r = regular.clone()?;
            let c = chi.clone()?;
            if r == 0 {
                return Ok(c);
            }
            Ok(c + 2 * g.n().div_ceil(r) - 2)
        })(),
    );
    push("matching_plus_three", (|| Ok(chi.clone()? + matching.clone()? + 3))());
    push(
        "class_split",
        (|| {
            min2.clone()?;
            let eta = palette_size(min_d, max_d).map_err(|e| e.to_string())? as usize;
            Ok(eta * chi.clone()?)
        })(),
    );

    let observed_difference = match (values.chi, values.chi2) {
        (Some(a), Some(b)) => Some(b - a),
        _ => None,
    };
    BoundReport {
        schema_version: SCHEMA_VERSION,
        input_summary: InputSummary::of(g),
        oracle_values: values,
        omitted,
        hypotheses,
        observed_difference,
        bounds,
    }
}

/// The classical degree bound on χ₂: per component, 4 when Δ ≤ 3 (5 for the
/// 5-cycle) and Δ + 1 otherwise; the maximum over components.
pub fn max_degree_rule(g: &Graph) -> usize {
    g.connected_components()
        .iter()
        .map(|comp| {
            let (h, _) = g.induced_subgraph(comp).unwrap();
            let d = h.max_degree();
            if d >= 4 {
                d + 1
            } else if h.n() == 5 && h.regular_degree() == Some(2) {
                5
            } else if h.n() == 1 {
                1
            } else {
                4
            }
        })
        .max()
        .unwrap_or(0)
}
