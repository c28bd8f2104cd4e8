//! Product-replacement random elements and Monte Carlo order fractions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::perm::Perm;
use crate::error::{Error, Result};

/// Minimum number of samples accepted by [`estimate_fraction`].
pub const MIN_SAMPLES: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub slots: usize,
    pub burn_in: usize,
    pub threads: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            slots: 10,
            burn_in: 100,
            threads: 1,
        }
    }
}

/// Product replacement with an accumulator ("rattle" variant).
pub struct ProductReplacement {
    slots: Vec<Perm>,
    acc: Perm,
    rng: ChaCha8Rng,
    scratch: Perm,
}

impl ProductReplacement {
    pub fn new(degree: usize, gens: &[Perm], config: &SamplerConfig, rng: ChaCha8Rng) -> ProductReplacement {
        let mut source: Vec<Perm> = gens.to_vec();
        if source.is_empty() {
            source.push(Perm::identity(degree));
        }
        let count = config.slots.max(source.len()).max(2);
        let slots = (0..count).map(|i| source[i % source.len()].clone()).collect();
        let mut pr = ProductReplacement {
            slots,
            acc: Perm::identity(degree),
            rng,
            scratch: Perm::identity(degree),
        };
        for _ in 0..config.burn_in {
            pr.step();
        }
        pr
    }

    /// Advances the walk and returns the new accumulator.
    pub fn step(&mut self) -> &Perm {
        let n = self.slots.len();
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        if self.rng.gen_bool(0.5) {
            self.slots[i].compose_into(&self.slots[j], &mut self.scratch);
        } else {
            self.slots[j].compose_into(&self.slots[i], &mut self.scratch);
        }
        std::mem::swap(&mut self.slots[i], &mut self.scratch);
        self.acc.compose_into(&self.slots[i], &mut self.scratch);
        std::mem::swap(&mut self.acc, &mut self.scratch);
        &self.acc
    }
}

/// Monte Carlo estimate of a proportion with its binomial standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FractionEstimate {
    pub hits: u64,
    pub samples: u64,
    pub fraction: f64,
    pub std_error: f64,
}

impl FractionEstimate {
    pub fn from_counts(hits: u64, samples: u64) -> FractionEstimate {
        let p = hits as f64 / samples as f64;
        FractionEstimate {
            hits,
            samples,
            fraction: p,
            std_error: (p * (1.0 - p) / samples as f64).sqrt(),
        }
    }

    /// Whether `value` lies within `k` standard errors. A zero standard error
    /// (all or no hits) is widened to that of a single hit, so an exact match
    /// is not demanded from a finite sample.
    pub fn within(&self, value: f64, k: f64) -> bool {
        let floor = (1.0 / self.samples as f64) * (1.0 - 1.0 / self.samples as f64);
        let se = self.std_error.max((floor / self.samples as f64).sqrt());
        (self.fraction - value).abs() <= k * se
    }
}

/// Fraction of sampled elements whose order is exactly `k`.
///
/// Each worker runs its own walk on ChaCha stream `w` of the seed, so a run
/// with one thread is reproducible and runs with more threads are
/// statistically equivalent.
pub fn estimate_fraction(
    degree: usize,
    gens: &[Perm],
    k: u64,
    samples: u64,
    seed: u64,
    config: &SamplerConfig,
) -> Result<FractionEstimate> {
    if samples < MIN_SAMPLES {
        return Err(Error::Precondition(format!("at least {MIN_SAMPLES} samples are required, got {samples}")));
    }
    let workers = config.threads.max(1) as u64;
    let run = |w: u64| {
        let share = samples / workers + u64::from(w < samples % workers);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(w);
        let mut walk = ProductReplacement::new(degree, gens, config, rng);
        (0..share).filter(|_| walk.step().order_checked() == Some(k)).count() as u64
    };
    let hits: u64 = if workers == 1 {
        run(0)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers as usize)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
        pool.install(|| (0..workers).into_par_iter().map(run).sum())
    };
    Ok(FractionEstimate::from_counts(hits, samples))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a5() -> Vec<Perm> {
        vec![
            Perm::from_cycles(5, &[&[1, 2, 3]]).unwrap(),
            Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap(),
        ]
    }

    #[test]
    fn deterministic_for_one_thread() {
        let cfg = SamplerConfig::default();
        let a = estimate_fraction(5, &a5(), 5, 5000, 7, &cfg).unwrap();
        let b = estimate_fraction(5, &a5(), 5, 5000, 7, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn too_few_samples() {
        assert!(matches!(
            estimate_fraction(5, &a5(), 5, 999, 1, &SamplerConfig::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn impossible_order_gives_zero() {
        let e = estimate_fraction(5, &a5(), 7, 1000, 1, &SamplerConfig::default()).unwrap();
        assert_eq!(e.hits, 0);
        assert_eq!(e.fraction, 0.0);
    }
}
