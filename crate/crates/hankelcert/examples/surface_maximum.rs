//! Brute-force confirmation of the two maximization steps behind the
//! bound: the quadratic surface F peaks at the (1,1) corner of the unit
//! square, and the profile K(c, t) peaks where the case analysis says.
//!
//! ```bash
//! cargo run --example surface_maximum
//! ```

use hankelcert::bounds::{f_surface, hankel_bound, k_profile};
use hankelcert::oracles::{brute_max_profile, brute_max_surface};
use hankelcert::ClassParams;

fn main() {
    let params = ClassParams::new(1.4, 1.1, 0.83).unwrap();

    println!("surface F over the unit square (101 x 101 grid):");
    for c in [0.3, 0.9, 1.5, 2.0] {
        let (max, (g1, g2)) = brute_max_surface(c, &params, 101).unwrap();
        let corner = f_surface(1.0, 1.0, c, &params).unwrap();
        println!(
            "  c = {c:<4} grid max {max:.12} at ({g1}, {g2});  F(1,1) = {corner:.12}  diff {:.1e}",
            (max - corner).abs()
        );
    }

    println!("\nprofile K over [0, 2] vs the resolved bound:");
    for (lambda, mu, t) in [(1.0, 0.0, 0.55), (1.0, 1.0, 0.9), (2.0, 0.5, 0.8)] {
        let p = ClassParams::new(lambda, mu, t).unwrap();
        let r = hankel_bound(&p);
        let (bmax, arg) = brute_max_profile(&p, 101).unwrap();
        println!(
            "  ({lambda}, {mu}, {t})  case {:<12} brute max {bmax:.12} at c = {arg:.6}; bound {:.12}",
            r.case.to_string(),
            r.bound
        );
        assert!(bmax <= r.bound + 1e-10);
        let _ = k_profile(arg, &p).unwrap();
    }
}
