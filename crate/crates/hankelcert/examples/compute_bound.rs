//! Compute the determinant bound and its case analysis for a few
//! parameter triples.
//!
//! ```bash
//! cargo run --example compute_bound
//! ```

use hankelcert::{hankel_bound, ClassParams};

fn main() {
    let triples = [
        // starlike family: both sign quantities nonnegative, bound = K(2,t)
        (1.0, 0.0, 0.55),
        // unit family below its switch point: endpoint max
        (1.0, 1.0, 0.55),
        // mixed signs with the critical point still outside (0,2)
        (1.0, 1.0, 0.62),
        // interior critical point: bound = K(c0, t)
        (1.0, 0.0, 0.80),
        (2.0, 0.5, 0.80),
    ];

    println!(
        "{:>6} {:>5} {:>6}  {:<12} {:>13} {:>13} {:>13} {:>9}",
        "lambda", "mu", "t", "case", "m1", "m2", "bound", "c0"
    );
    for (lambda, mu, t) in triples {
        let params = ClassParams::new(lambda, mu, t).unwrap();
        let r = hankel_bound(&params);
        println!(
            "{lambda:>6} {mu:>5} {t:>6}  {:<12} {:>13.6e} {:>13.6e} {:>13.9} {:>9}",
            r.case.to_string(),
            r.m1,
            r.m2,
            r.bound,
            r.c0.map(|c| format!("{c:.4}"))
                .unwrap_or_else(|| "-".into()),
        );
    }

    // out-of-domain parameters are rejected with a specific reason
    println!();
    for (lambda, mu, t) in [(1.0, 1.0, 1.0), (0.5, 0.0, 0.7), (1.0, -1.0, 0.7)] {
        match ClassParams::new(lambda, mu, t) {
            Ok(_) => unreachable!(),
            Err(e) => println!("({lambda}, {mu}, {t}) rejected: {e}"),
        }
    }
}
