//! Prints f±, ξ± for n ≤ 7 and B± for n ≤ 6 with the methods that agreed.

use bderange::families::{engine, Family};

fn main() -> bderange::Result<()> {
    for (family, max_n) in [
        (Family::FPlus, 7),
        (Family::FMinus, 7),
        (Family::XiPlus, 7),
        (Family::XiMinus, 7),
        (Family::BPlus, 6),
        (Family::BMinus, 6),
    ] {
        println!("{family}");
        for row in engine().table(family, max_n)? {
            let methods: Vec<&str> = row.methods_agreed.iter().map(|m| m.tag()).collect();
            println!("  n={} {}  ({})", row.n, row.value, methods.join(", "));
        }
    }
    Ok(())
}
