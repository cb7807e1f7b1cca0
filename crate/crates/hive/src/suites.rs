//! Verification suites run in parallel over their samples. Per-sample reports
//! are merged in sample order, so output does not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use hive_core::hive::Labeling;
use hive_core::saturation::{
    check_maximizer, check_saturation, check_semigroup, corner_scan_exhaustive, corner_search,
    exhaustive_triples, fulton_check, random_regular_triple, Claim, Provenance, Report,
    TripleSample, FULTON_BUDGET,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Saturation,
    Semigroup,
    Corners,
    Fulton,
    Maximizer,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Saturation,
        Suite::Semigroup,
        Suite::Corners,
        Suite::Fulton,
        Suite::Maximizer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Saturation => "saturation",
            Suite::Semigroup => "semigroup",
            Suite::Corners => "corners",
            Suite::Fulton => "fulton",
            Suite::Maximizer => "maximizer",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Side size; exhaustive ranges include every shorter triple.
    pub n: usize,
    pub max_size: u64,
    pub seed: u64,
    /// Largest scaling factor for saturation and Fulton checks.
    pub scale: u64,
    /// Number of random draws for sampled suites.
    pub samples: usize,
    /// Ceiling on `N * |nu|` for the Fulton check.
    pub budget: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n: 3,
            max_size: 8,
            seed: 42,
            scale: 4,
            samples: 200,
            budget: FULTON_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub report: Report,
    pub witness: Option<Labeling>,
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> SuiteOutcome {
    let start = Instant::now();
    let mut out = match suite {
        Suite::Saturation => plain(saturation(cfg)),
        Suite::Semigroup => plain(semigroup(cfg)),
        Suite::Corners => corners(cfg),
        Suite::Fulton => plain(fulton(cfg)),
        Suite::Maximizer => plain(maximizer(cfg)),
    };
    out.report.runtime = Some(start.elapsed());
    out
}

fn plain(report: Report) -> SuiteOutcome {
    SuiteOutcome {
        report,
        witness: None,
    }
}

pub fn saturation(cfg: &SuiteConfig) -> Report {
    let triples = exhaustive_triples(cfg.n, cfg.max_size);
    let parts: Vec<Report> = triples
        .par_iter()
        .map(|t| check_saturation(t, cfg.scale))
        .collect();
    Report::merged(Claim::Saturation, None, parts)
}

/// Random pairs of nonzero triples from the exhaustive range.
pub fn semigroup(cfg: &SuiteConfig) -> Report {
    let members: Vec<TripleSample> = exhaustive_triples(cfg.n, cfg.max_size)
        .into_par_iter()
        .filter(|t| !t.coefficient().is_zero())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs: Vec<(TripleSample, TripleSample)> = if members.is_empty() {
        Vec::new()
    } else {
        (0..cfg.samples)
            .map(|_| {
                let a = &members[rng.random_range(0..members.len())];
                let b = &members[rng.random_range(0..members.len())];
                (a.clone(), b.clone())
            })
            .collect()
    };
    let parts: Vec<Report> = pairs
        .par_iter()
        .map(|p| check_semigroup(std::slice::from_ref(p)))
        .collect();
    Report::merged(Claim::Semigroup, Some(cfg.seed), parts)
}

/// Exhaustive corner integrality for `n <= 4`; a seeded search for a
/// non-integral corner above that.
pub fn corners(cfg: &SuiteConfig) -> SuiteOutcome {
    if cfg.n >= 5 {
        let scan = corner_search(cfg.n, cfg.seed, cfg.samples, 30, 6);
        return SuiteOutcome {
            report: scan.report,
            witness: scan.witness,
        };
    }
    let triples = exhaustive_triples(cfg.n, cfg.max_size);
    let scans: Vec<_> = triples
        .par_iter()
        .map(|t| corner_scan_exhaustive(std::slice::from_ref(t)))
        .collect();
    let witness = scans.iter().find_map(|s| s.witness.clone());
    SuiteOutcome {
        report: Report::merged(
            Claim::CornerIntegrality,
            None,
            scans.into_iter().map(|s| s.report),
        ),
        witness,
    }
}

pub fn fulton(cfg: &SuiteConfig) -> Report {
    let triples = exhaustive_triples(cfg.n, cfg.max_size);
    let parts: Vec<Report> = triples
        .par_iter()
        .map(|t| fulton_check(t, cfg.scale, cfg.budget))
        .collect();
    Report::merged(Claim::CoefficientOne, None, parts)
}

/// `samples` seeded regular borders with sides cycling through `2..=n`.
pub fn maximizer(cfg: &SuiteConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let top = cfg.n.max(2);
    let triples: Vec<TripleSample> = (0..cfg.samples)
        .map(|index| {
            let n = 2 + index % (top - 1);
            random_regular_triple(
                &mut rng,
                n,
                5,
                3 * n,
                Provenance::Seeded {
                    seed: cfg.seed,
                    index,
                },
            )
        })
        .collect();
    let parts: Vec<Report> = triples
        .par_iter()
        .enumerate()
        .map(|(i, t)| check_maximizer(t, cfg.seed.wrapping_add(i as u64)))
        .collect();
    Report::merged(Claim::MaximizerIntegrality, Some(cfg.seed), parts)
}
