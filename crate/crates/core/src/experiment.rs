//! Batch experiments: a graph family swept over parameters, a list of
//! pipelines run on each instance, and deterministic aggregates. Checks of
//! unproven bounds only count observations; they never fail a batch.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{
    complete, complete_bipartite, cube_q3, cycle, gab_graph, matching_lower_bound_graph, path, petersen,
    prop2_graph, random_regular, two_subdivision,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::color_graph;
use crate::oracles::{maximal_independent_dominating_set, OracleBudget, OracleValues};
use crate::pipelines::{Algorithm, InputSummary, PipelineConfig, RunReport, SCHEMA_VERSION};
use crate::repair::lemma4_independent_dominator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    RandomRegular,
    Gab,
    Prop2,
    MatchingExample,
    TwoSubdivisionComplete,
    Named,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::RandomRegular,
        Family::Gab,
        Family::Prop2,
        Family::MatchingExample,
        Family::TwoSubdivisionComplete,
        Family::Named,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::RandomRegular => "random-regular",
            Family::Gab => "gab",
            Family::Prop2 => "prop2",
            Family::MatchingExample => "matching-example",
            Family::TwoSubdivisionComplete => "two-subdivision-complete",
            Family::Named => "named",
        }
    }

    /// Builds one instance. `seed` only matters for random families.
    pub fn build(self, params: &Params, seed: u64) -> Result<Graph> {
        match self {
            Family::RandomRegular => random_regular(params.int("n")?, params.int("r")?, seed),
            Family::Gab => gab_graph(params.int("a")?, params.int("b")?),
            Family::Prop2 => prop2_graph(params.int("a")?, params.int("b")?),
            Family::MatchingExample => matching_lower_bound_graph(params.int("a")?),
            Family::TwoSubdivisionComplete => Ok(two_subdivision(&complete(params.int("n")?))),
            Family::Named => named_graph(params),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::input(format!("unknown family `{s}`")))
    }
}

fn named_graph(params: &Params) -> Result<Graph> {
    let name = params.text("name")?;
    match name {
        "petersen" => Ok(petersen()),
        "cube" | "q3" => Ok(cube_q3()),
        "cycle" => cycle(params.int("n")?),
        "path" => path(params.int("n")?),
        "complete" => Ok(complete(params.int("n")?)),
        "complete-bipartite" => Ok(complete_bipartite(params.int("a")?, params.int("b")?)),
        other => Err(Error::input(format!("unknown named graph `{other}`"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(usize),
    Text(String),
}

/// A parameter: one value, or a list to sweep over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    One(Scalar),
    Sweep(Vec<Scalar>),
}

/// One concrete parameter assignment.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(pub BTreeMap<String, Scalar>);

impl Params {
    pub fn int(&self, key: &str) -> Result<usize> {
        match self.0.get(key) {
            Some(Scalar::Int(v)) => Ok(*v),
            Some(Scalar::Text(t)) => Err(Error::input(format!("parameter `{key}` must be an integer, got `{t}`"))),
            None => Err(Error::input(format!("missing parameter `{key}`"))),
        }
    }

    pub fn text(&self, key: &str) -> Result<&str> {
        match self.0.get(key) {
            Some(Scalar::Text(t)) => Ok(t),
            Some(Scalar::Int(v)) => Err(Error::input(format!("parameter `{key}` must be a name, got {v}"))),
            None => Err(Error::input(format!("missing parameter `{key}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub family: Family,
    #[serde(default)]
    pub parameters: BTreeMap<String, ParamValue>,
    pub trials: usize,
    pub seed: u64,
    #[serde(default)]
    pub algorithms: Vec<Algorithm>,
    #[serde(default)]
    pub budget: OracleBudget,
    /// Compute χ and χ₂ exactly per instance.
    #[serde(default = "yes")]
    pub exact: bool,
    /// Run the dominator on a seeded maximal independent set and record
    /// the overlap `|T₁ ∩ T₂|`.
    #[serde(default)]
    pub dominator_probe: bool,
}

fn yes() -> bool {
    true
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::input("trials must be at least 1"));
        }
        self.budget.validate()?;
        // Sweeps may contain invalid combinations; those fail per trial.
        // A spec where no combination is valid is rejected outright.
        let mut first_err = None;
        for p in self.parameter_grid() {
            match self.family.build(&p, 0) {
                Ok(_) => return Ok(()),
                Err(e) => {
                    first_err.get_or_insert(e);
                }
            }
        }
        Err(first_err.unwrap())
    }

    /// Cartesian product of the sweeps, in key order.
    pub fn parameter_grid(&self) -> Vec<Params> {
        let mut grid = vec![Params::default()];
        for (key, value) in &self.parameters {
            let options = match value {
                ParamValue::One(s) => vec![s.clone()],
                ParamValue::Sweep(list) => list.clone(),
            };
            grid = grid
                .into_iter()
                .flat_map(|p| {
                    options.iter().map(move |o| {
                        let mut q = p.clone();
                        q.0.insert(key.clone(), o.clone());
                        q
                    })
                })
                .collect();
        }
        grid
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgorithmRun {
    pub algorithm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<RunReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatorProbe {
    pub input_size: usize,
    pub overlap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub index: usize,
    pub parameters: Params,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_summary: Option<InputSummary>,
    pub oracle_values: OracleValues,
    /// Exact χ₂ − χ when both are known.
    pub difference: Option<usize>,
    pub runs: Vec<AlgorithmRun>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dominator: Option<DominatorProbe>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgorithmStats {
    pub runs: usize,
    pub errors: usize,
    pub within_bound: usize,
    pub fallback_used: usize,
    /// Runs without fallback that exceeded their bound or were not dynamic.
    pub bound_violations: usize,
}

/// Observation counts for an unproven bound. Never asserted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub checked: usize,
    pub exceeded: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregates {
    pub trials: usize,
    pub failed_trials: usize,
    pub max_difference: Option<usize>,
    pub difference_histogram: BTreeMap<usize, usize>,
    pub per_algorithm: BTreeMap<String, AlgorithmStats>,
    pub bound_violations: usize,
    /// Regular instances with χ₂ − χ > 2.
    pub regular_difference_above_two: Observation,
    /// Instances with χ₂ − χ > 2⌈Δ/δ⌉ (δ ≥ 1).
    pub difference_above_twice_degree_ratio: Observation,
    pub max_dominator_overlap: Option<usize>,
    pub dominator_overlap_histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema_version: u32,
    pub spec: ExperimentSpec,
    pub aggregates: Aggregates,
    pub trials: Vec<TrialReport>,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs every trial (in parallel) and folds the results in trial order.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    spec.validate()?;
    let jobs: Vec<(usize, Params)> = spec
        .parameter_grid()
        .into_iter()
        .flat_map(|p| (0..spec.trials).map(move |_| p.clone()))
        .enumerate()
        .collect();
    let trials: Vec<TrialReport> = jobs
        .into_par_iter()
        .map(|(index, params)| run_trial(spec, index, params))
        .collect();
    let aggregates = aggregate(&trials);
    Ok(ExperimentReport {
        schema_version: SCHEMA_VERSION,
        spec: spec.clone(),
        aggregates,
        trials,
    })
}

fn run_trial(spec: &ExperimentSpec, index: usize, parameters: Params) -> TrialReport {
    let seed = crate::derive_seed(spec.seed, index as u64);
    let mut trial = TrialReport {
        index,
        parameters,
        seed,
        input_summary: None,
        oracle_values: OracleValues::default(),
        difference: None,
        runs: Vec::new(),
        dominator: None,
        errors: Vec::new(),
    };
    let g = match spec.family.build(&trial.parameters, seed) {
        Ok(g) => g,
        Err(e) => {
            trial.errors.push(format!("generate: {e}"));
            return trial;
        }
    };
    trial.input_summary = Some(InputSummary::of(&g));
    if spec.exact {
        match crate::oracles::chromatic_number(&g, &spec.budget) {
            Ok(chi) => trial.oracle_values.chi = Some(chi),
            Err(e) => trial.errors.push(format!("chi: {e}")),
        }
        match crate::oracles::dynamic_chromatic_number(&g, &spec.budget) {
            Ok(chi2) => trial.oracle_values.chi2 = Some(chi2),
            Err(e) => trial.errors.push(format!("chi2: {e}")),
        }
        if let (Some(a), Some(b)) = (trial.oracle_values.chi, trial.oracle_values.chi2) {
            trial.difference = Some(b - a);
        }
    }
    for &algo in &spec.algorithms {
        let mut cfg = PipelineConfig::new(seed);
        cfg.budget = spec.budget;
        let run = match color_graph(algo, &g, &cfg) {
            Ok(report) => AlgorithmRun {
                algorithm: algo.name().into(),
                report: Some(report),
                error: None,
            },
            Err(e) => AlgorithmRun {
                algorithm: algo.name().into(),
                report: None,
                error: Some(e.to_string()),
            },
        };
        trial.runs.push(run);
    }
    if spec.dominator_probe && g.m() > 0 {
        let t1 = maximal_independent_dominating_set(&g, seed);
        let t1: crate::graph::VertexSet = t1.iter().filter(|&v| g.degree(v) > 0).collect();
        match lemma4_independent_dominator(&g, &t1) {
            Ok(d) => {
                trial.dominator = Some(DominatorProbe {
                    input_size: t1.len(),
                    overlap: d.t3_residual.len(),
                })
            }
            Err(e) => trial.errors.push(format!("dominator: {e}")),
        }
    }
    trial
}

fn aggregate(trials: &[TrialReport]) -> Aggregates {
    let mut agg = Aggregates {
        trials: trials.len(),
        ..Aggregates::default()
    };
    for t in trials {
        if !t.errors.is_empty() || t.runs.iter().any(|r| r.error.is_some()) {
            agg.failed_trials += 1;
        }
        if let Some(d) = t.difference {
            agg.max_difference = Some(agg.max_difference.map_or(d, |m| m.max(d)));
            *agg.difference_histogram.entry(d).or_default() += 1;
            if let Some(s) = &t.input_summary {
                if s.n > 0 && s.min_degree == s.max_degree {
                    agg.regular_difference_above_two.checked += 1;
                    if d > 2 {
                        agg.regular_difference_above_two.exceeded += 1;
                    }
                }
                if s.min_degree >= 1 {
                    agg.difference_above_twice_degree_ratio.checked += 1;
                    if d > 2 * s.max_degree.div_ceil(s.min_degree) {
                        agg.difference_above_twice_degree_ratio.exceeded += 1;
                    }
                }
            }
        }
        for run in &t.runs {
            let stats = agg.per_algorithm.entry(run.algorithm.clone()).or_default();
            stats.runs += 1;
            match &run.report {
                None => stats.errors += 1,
                Some(r) => {
                    stats.within_bound += r.within_bound as usize;
                    stats.fallback_used += r.fallback_used as usize;
                    if !r.is_sound() {
                        stats.bound_violations += 1;
                        agg.bound_violations += 1;
                    }
                }
            }
        }
        if let Some(p) = &t.dominator {
            agg.max_dominator_overlap = Some(agg.max_dominator_overlap.map_or(p.overlap, |m| m.max(p.overlap)));
            *agg.dominator_overlap_histogram.entry(p.overlap).or_default() += 1;
        }
    }
    agg
}
