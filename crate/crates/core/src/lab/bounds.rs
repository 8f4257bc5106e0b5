use crate::error::{Error, Result};
use crate::lab::Instance;
use crate::t1::Containment;

/// Largest group size `n` whose `n²` ordered pairs are checked exhaustively.
pub const DEFAULT_PAIR_CAP: u128 = 10_000_000;
/// Largest `n³` for which all ordered triples of a group are checked.
pub const DEFAULT_TRIPLE_CAP: u128 = 1_000_000_000;
/// Triples sampled from a group that is too large for the triple cap.
pub const DEFAULT_TRIPLE_SAMPLES: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random { trials: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchBounds {
    pub max_universe: usize,
    /// Parameter pool for Type-1 sets, primary pool for Type-2 sets.
    pub max_primary: usize,
    pub max_underlying: usize,
    pub mode: SearchMode,
    pub containment: Containment,
    pub pair_cap: u128,
    pub triple_cap: u128,
    pub triple_samples: u64,
    /// Extra instances checked before the generated space, whatever their
    /// size.
    pub seeds: Vec<Instance>,
    /// Also seed with the built-in worked examples that fit the bounds.
    pub builtin_seeds: bool,
    pub parallel: bool,
}

impl SearchBounds {
    pub fn exhaustive(max_universe: usize, max_primary: usize, max_underlying: usize) -> Self {
        Self {
            max_universe,
            max_primary,
            max_underlying,
            mode: SearchMode::Exhaustive,
            containment: Containment::Subset,
            pair_cap: DEFAULT_PAIR_CAP,
            triple_cap: DEFAULT_TRIPLE_CAP,
            triple_samples: DEFAULT_TRIPLE_SAMPLES,
            seeds: Vec::new(),
            builtin_seeds: true,
            parallel: true,
        }
    }

    pub fn random(max_universe: usize, max_primary: usize, max_underlying: usize, trials: u64, seed: u64) -> Self {
        Self {
            mode: SearchMode::Random { trials, seed },
            ..Self::exhaustive(max_universe, max_primary, max_underlying)
        }
    }

    pub fn with_seeds(mut self, seeds: impl IntoIterator<Item = Instance>) -> Self {
        self.seeds.extend(seeds);
        self
    }

    pub fn with_containment(mut self, containment: Containment) -> Self {
        self.containment = containment;
        self
    }

    pub fn without_builtin_seeds(mut self) -> Self {
        self.builtin_seeds = false;
        self
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn is_exhaustive(&self) -> bool {
        self.mode == SearchMode::Exhaustive
    }

    /// Seed for sampled triples and random cases.
    pub fn rng_seed(&self) -> u64 {
        match self.mode {
            SearchMode::Exhaustive => 0,
            SearchMode::Random { seed, .. } => seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_universe == 0 {
            return Err(Error::InvalidBounds("max universe must be at least 1".into()));
        }
        if let SearchMode::Random { trials: 0, .. } = self.mode {
            return Err(Error::InvalidBounds("random mode needs at least one trial".into()));
        }
        if self.max_universe > 64 {
            return Err(Error::InvalidBounds("max universe is limited to 64".into()));
        }
        Ok(())
    }

    /// Whether a built-in seed instance lies inside these bounds.
    pub fn admits(&self, instance: &Instance) -> bool {
        if instance.universe_len() > self.max_universe {
            return false;
        }
        match instance {
            Instance::T1(s) => s.param_count() <= self.max_primary,
            Instance::T2(s) => s.primary_count() <= self.max_primary && s.underlying().len() <= self.max_underlying,
        }
    }
}
