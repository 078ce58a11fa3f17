//! Exponential generating functions of the type-B families, truncated at t^7.

use bderange::families::egf;

fn main() -> bderange::Result<()> {
    let order = 7;
    let series = [
        ("d^B", egf::derangement_b(order)?),
        ("f+", egf::f_plus(order)?),
        ("f-", egf::f_minus(order)?),
        ("B+", egf::b_plus(order)?),
        ("B-", egf::b_minus(order)?),
    ];
    for (name, s) in &series {
        println!("{name}");
        for n in 0..=order {
            println!("  n={n}: {}", egf::coefficient(s, n)?);
        }
    }
    Ok(())
}
