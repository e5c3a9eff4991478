//! Where do M1 and M2 change sign in t? These roots are the switch points
//! of the piecewise bound; the scan below reproduces the two printed
//! constants 0.603615 and (7 + sqrt(401))/44.
//!
//! ```bash
//! cargo run --example sign_change_thresholds
//! ```

use hankelcert::bounds::{m1, m2};
use hankelcert::oracles::scan_sign_changes;
use hankelcert::ClassParams;

fn main() {
    for (lambda, mu) in [(1.0, 1.0), (1.0, 0.0), (2.0, 0.5), (3.0, 3.0)] {
        println!("(lambda, mu) = ({lambda}, {mu}):");
        let m1_roots = scan_sign_changes(
            |t| m1(&ClassParams::new(lambda, mu, t).unwrap()),
            0.501,
            0.999,
            498,
            1e-12,
        );
        let m2_roots = scan_sign_changes(
            |t| m2(&ClassParams::new(lambda, mu, t).unwrap()),
            0.501,
            0.999,
            498,
            1e-12,
        );
        match m1_roots.as_slice() {
            [] => println!("  m1: no sign change"),
            roots => roots.iter().for_each(|r| println!("  m1 root: {r:.12}")),
        }
        match m2_roots.as_slice() {
            [] => println!("  m2: no sign change"),
            roots => roots.iter().for_each(|r| println!("  m2 root: {r:.12}")),
        }
    }

    let analytic = (7.0 + 401.0_f64.sqrt()) / 44.0;
    println!("\nanalytic starlike switch point (7 + sqrt(401))/44 = {analytic:.12}");
}
