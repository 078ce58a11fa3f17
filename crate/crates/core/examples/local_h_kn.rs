//! Builds `K_n`, compares its local h-polynomial with f⁺_n and its
//! h-polynomial with B⁺_n, and checks the decomposition over `sd(2^[n])`.

use bderange::families::{f_plus, half_eulerian_plus};
use bderange::simplicial::{decomposition_formula_check, k_n, sd_relative_local_h_formula};

fn main() -> bderange::Result<()> {
    for n in 1..=4 {
        let k = k_n(n, false)?;
        let local = k.over_simplex.local_h()?;
        let h = k.complex().h_polynomial();
        println!(
            "K_{n}: {} vertices, {} facets",
            k.complex().vertex_count(),
            k.complex().facets().len()
        );
        println!("  local h = {local}  (f+ = {})", f_plus(n)?);
        println!("  h       = {h}  (B+ = {})", half_eulerian_plus(n)?);
        println!(
            "  decomposition over sd holds: {}",
            decomposition_formula_check(&k.sd, &k.over_sd)?
        );
    }

    let k = k_n(3, false)?;
    let e = k.sd_face(&[0b001, 0b011]).expect("chain {1} < {1,2}");
    println!(
        "relative local h of sd(2^[3]) at {{1}} < {{1,2}}: {} (formula {})",
        k.sd.relative_local_h(&e)?,
        sd_relative_local_h_formula(3, &[0b001, 0b011])?
    );
    Ok(())
}
