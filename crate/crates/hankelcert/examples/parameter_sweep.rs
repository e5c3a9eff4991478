//! Sweep t for a fixed class and print the CSV table that the `sweep`
//! subcommand would write to a file. The case column flips from
//! BOTH_NONNEG to NEG_POS as t crosses the family's switch point.
//!
//! ```bash
//! cargo run --example parameter_sweep
//! # equivalent CLI invocation:
//! # hankelcert sweep --lambda 1 --mu 1 --t-min 0.58 --t-max 0.63 --steps 11 --out sweep.csv
//! ```

use std::path::PathBuf;

use hankelcert::cli::{render_sweep, SweepSpec};

fn main() {
    let spec = SweepSpec {
        lambda: 1.0,
        mu: 1.0,
        t_min: 0.58,
        t_max: 0.63,
        steps: 11,
        output_path: PathBuf::new(), // unused by render_sweep
    };
    print!("{}", render_sweep(&spec).unwrap());
}
