//! Random hosts and density sweeps.

mod random;
mod sweep;

pub use random::gen_random_host;
pub use sweep::{
    aggregate, certificate_name, density, rows_to_tsv, run_sweep, run_sweep_to_dir, run_trials,
    timings_to_tsv, trial_seed, Overrides, SweepError, SweepRow, SweepSpec, Trial,
};
