//! Half Eulerian polynomials from the E₂ operator, the reversal identity and
//! the `(2i+1)^n - (2i)^n` series.

use bderange::exactpoly::series_div_one_minus_x_pow;
use bderange::families::formulas::{b_minus_reversal, b_plus_e2, eulerian_triangle};

fn main() -> bderange::Result<()> {
    let a = eulerian_triangle(6);
    for (n, an) in a.iter().enumerate() {
        let bp = b_plus_e2(n, an)?;
        let bm = b_minus_reversal(n, &bp)?;
        println!("n={n}: B+ = {bp}");
        println!("      B- = {bm}");
        if n > 0 {
            println!("      B+/(1-x)^n = {}", series_div_one_minus_x_pow(&bp, n, 4));
        }
    }
    Ok(())
}
