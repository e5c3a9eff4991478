//! Truncated power-series arithmetic: products, real powers, composition,
//! reversion, and the class-defining left-hand side.
//!
//! ```bash
//! cargo run --example series_toolkit
//! ```

use hankelcert::series::{class_lhs, TruncatedSeries};
use hankelcert::ClassParams;

fn show(label: &str, s: &TruncatedSeries) {
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| format!("{:.6}", c.re)).collect();
    println!("{label:<28} [{}]", coeffs.join(", "));
}

fn main() {
    // (1 + z)^2 three ways
    let a = TruncatedSeries::from_real(&[1.0, 1.0, 0.0]);
    show("(1+z) * (1+z)", &a.mul(&a).unwrap());
    show("(1+z)^2 via pow_real", &a.pow_real(2.0).unwrap());
    let half = a.pow_real(0.5).unwrap();
    show("sqrt(1+z) squared", &half.mul(&half).unwrap());

    // reversion of a normalized quartic: the inverse-series coefficients
    // are (-a2, 2 a2^2 - a3, -(5 a2^3 - 5 a2 a3 + a4))
    let f = TruncatedSeries::from_real(&[0.0, 1.0, 0.5, 0.25, 0.1]);
    let g = f.revert().unwrap();
    show("\nf = z + z^2/2 + ...", &f);
    show("g = f^(-1)", &g);
    show("g o f (identity)", &g.compose(&f).unwrap());

    // the class-defining expression; at lambda = mu = 1 it is exactly f'
    let params = ClassParams::new(1.0, 1.0, 0.75).unwrap();
    let lhs = class_lhs(&f, &params).unwrap();
    show("\nclass expression at (1,1)", &lhs);
    show("f' for comparison", &f.derivative());

    // generic parameters: the linear coefficient is (lambda + mu) a2
    let params = ClassParams::new(1.7, 2.2, 0.75).unwrap();
    let lhs = class_lhs(&f, &params).unwrap();
    println!(
        "\ncoefficient 1 at (1.7, 2.2): {:.6}  ==  (lambda + mu) a2 = {:.6}",
        lhs.coeff(1).re,
        (1.7 + 2.2) * 0.5
    );
}
