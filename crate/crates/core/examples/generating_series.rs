//! The refined generating series Φ(x, y), solved by fixed-point iteration,
//! next to the sum of the tree polynomials of each size.

use tamari::poly::{phi_series, tamari_poly};
use tamari::tree::enumerate_trees;
use tamari::Polynomial;

fn main() {
    let phi = phi_series(5);
    println!("Φ = {phi}");
    for n in 0..=5 {
        let by_trees: Polynomial = enumerate_trees(n).iter().map(tamari_poly).sum();
        println!("y^{n}: {}", phi.y_coefficient(n as u32));
        assert_eq!(phi.y_coefficient(n as u32), by_trees);
    }
}
