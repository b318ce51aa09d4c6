//! Success rate of the search as the host density `p = a n^(-1/5)` grows.

use homeomorph::harness::{rows_to_tsv, run_sweep, SweepSpec};

const SPEC: &str = r#"
target = "builtin:triangle"
n = [24, 40]
a = ["1/5", "1/2", "3/4", "1", "3/2"]
b = "1/5"
trials = 20
seed = 1
"#;

fn main() {
    let spec = SweepSpec::from_toml(SPEC).unwrap();
    let rows = run_sweep(&spec).unwrap();
    print!("{}", rows_to_tsv(&rows));
}
