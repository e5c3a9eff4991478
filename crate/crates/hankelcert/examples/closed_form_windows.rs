//! The two-branch closed forms for the starlike and unit families switch
//! branches as soon as M1 changes sign -- but their second branch is the
//! interior-critical-point value K(c0, t), which only becomes the true
//! profile maximum once c0 = sqrt(-6 M2 / M1) drops below 2. On the window
//! in between, the printed form strictly overshoots the tight bound (it
//! even diverges at the switch point itself). This example maps both
//! windows.
//!
//! ```bash
//! cargo run --example closed_form_windows
//! ```

use hankelcert::bounds::{
    bound_bsigma_closed, bound_starlike_closed, bsigma_threshold, hankel_bound, starlike_threshold,
};
use hankelcert::ClassParams;

fn main() {
    println!("starlike family (lambda = 1, mu = 0):");
    println!("  branch switch at t = {:.9}", starlike_threshold());
    table(|t| bound_starlike_closed(t).unwrap(), 1.0, 0.0);

    println!("\nunit family (lambda = 1, mu = 1):");
    println!("  branch switch at t = {:.9}", bsigma_threshold());
    table(|t| bound_bsigma_closed(t).unwrap(), 1.0, 1.0);
}

fn table(closed: impl Fn(f64) -> f64, lambda: f64, mu: f64) {
    println!(
        "  {:>6} {:>16} {:>16} {:>12}  critical point",
        "t", "closed form", "tight bound", "overshoot"
    );
    for t in [0.55, 0.61, 0.615, 0.63, 0.65, 0.70, 0.78, 0.80, 0.90] {
        let p = ClassParams::new(lambda, mu, t).unwrap();
        let r = hankel_bound(&p);
        let cl = closed(t);
        let c0 =
            r.c0.map(|c| format!("c0 = {c:.4}"))
                .unwrap_or_else(|| "no interior c0".into());
        println!(
            "  {t:>6} {cl:>16.9} {:>16.9} {:>12.3e}  {c0}",
            r.bound,
            cl - r.bound
        );
    }
}
