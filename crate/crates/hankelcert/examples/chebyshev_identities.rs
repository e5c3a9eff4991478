//! Chebyshev polynomial evaluation and the identities tying the two kinds
//! together: recurrence vs trigonometric closed form, the derivative
//! relation, and the generating-function products.
//!
//! ```bash
//! cargo run --example chebyshev_identities
//! ```

use hankelcert::chebyshev::{cheb_t, cheb_u, cheb_u_trig, h_kernel, h_series};

fn main() {
    let t = 0.75;
    println!("U_n({t}) for n = 0..6:");
    for n in 0..=6u32 {
        println!("  U_{n} = {:>12.8}", cheb_u(n, t));
    }

    // recurrence vs sin((n+1) theta)/sin(theta)
    let mut worst = 0.0f64;
    for n in 0..=20u32 {
        for k in 1..40 {
            let t = -1.0 + 0.05 * k as f64;
            worst = worst.max((cheb_u(n, t) - cheb_u_trig(n, t).unwrap()).abs());
        }
    }
    println!("\nrecurrence vs trigonometric form, n <= 20: worst |diff| = {worst:.2e}");

    // 2 T_n = U_n - U_{n-2} and T_n = U_n - t U_{n-1}
    let mut worst = 0.0f64;
    for n in 2..=20u32 {
        for k in 1..40 {
            let t = -1.0 + 0.05 * k as f64;
            let a = 2.0 * cheb_t(n, t) - (cheb_u(n, t) - cheb_u(n - 2, t));
            let b = cheb_t(n, t) - (cheb_u(n, t) - t * cheb_u(n - 1, t));
            worst = worst.max(a.abs()).max(b.abs());
        }
    }
    println!("first/second kind relations, n <= 20:      worst |diff| = {worst:.2e}");

    // H(z,t) * (1 - 2 t z + z^2) == 1 up to the truncation order
    let order = 10;
    let prod = h_series(t, order)
        .unwrap()
        .mul(&h_kernel(t, order))
        .unwrap();
    let tail: f64 = (1..=order)
        .map(|k| prod.coeff(k).norm())
        .fold(0.0, f64::max);
    println!(
        "generating function times kernel:          constant {:.1}, largest tail coefficient {tail:.2e}",
        prod.coeff(0).re
    );
}
