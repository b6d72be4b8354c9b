//! Recoloring subroutines shared by the bound pipelines: the counter-based
//! independent dominator, seeded resampling of independent sets and color
//! classes, two-coloring a constrained side, fresh-color repair and the
//! normalization that leaves only isolated bad vertices.

mod dominator;
mod fresh;
mod normalize;
mod resample;
mod two_color;

use serde::{Deserialize, Serialize};

pub use dominator::{lemma4_independent_dominator, DominationResult};
pub use fresh::{lemma6_fresh_color_repair, lemma6_repair_with};
pub use normalize::{lemma8_normalize, Normalized};
pub use resample::{lemma5_recolor_independent, lemma9_split_classes, Recoloring};
pub use two_color::{lemma2_two_color_part_b, TwoColoring};

pub(crate) use normalize::descend;

/// What a resampling loop does once its round cap is reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fallback {
    Fail,
    FreshColorRepair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResampleConfig {
    pub seed: u64,
    /// `None` means `⌈10·n·ln(n+2)⌉`.
    pub max_rounds: Option<usize>,
    pub fallback: Fallback,
}

impl ResampleConfig {
    pub fn new(seed: u64) -> Self {
        ResampleConfig {
            seed,
            max_rounds: None,
            fallback: Fallback::FreshColorRepair,
        }
    }

    /// Same limits with a different seed.
    pub fn reseeded(&self, seed: u64) -> Self {
        ResampleConfig { seed, ..*self }
    }

    /// The round cap for a graph on `n` vertices; always at least 1.
    pub fn rounds_for(&self, n: usize) -> usize {
        self.max_rounds
            .unwrap_or_else(|| (10.0 * n as f64 * ((n + 2) as f64).ln()).ceil() as usize)
            .max(1)
    }
}

impl Default for ResampleConfig {
    fn default() -> Self {
        ResampleConfig::new(0)
    }
}
