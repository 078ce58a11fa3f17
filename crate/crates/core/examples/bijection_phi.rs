//! The bijection from type-B derangements to permutation sequences, its
//! inverse, and the inverse-excedance ledger.

use bderange::bijections::{phi, phi_inverse, statistic_ledger};
use bderange::signedperm::SignedPermutation;

fn main() -> bderange::Result<()> {
    let w = SignedPermutation::from_cycles(&[vec![3, 7], vec![1, 4], vec![-5, 9, -2], vec![-8, -6]])?;
    println!("w = {w}");
    let c = phi(&w)?;
    println!("sigma0 = {:?} on {:?}", c.sigma0().values(), c.sigma0().ground());
    for (i, b) in c.blocks().iter().enumerate() {
        println!("sigma{} = {:?}", i + 1, b.values());
    }
    println!("json = {}", serde_json::to_string(&c).expect("serialisable"));

    let ledger = statistic_ledger(&w)?;
    println!(
        "iexc_B = {} = iexc(sigma0) {} + blocks {} + floor {}",
        ledger.iexc_b,
        ledger.iexc_sigma0,
        ledger.blocks.iter().map(|b| b.counted).sum::<usize>(),
        ledger.floor_term
    );
    assert!(ledger.holds());
    assert_eq!(phi_inverse(&c)?, w);
    println!("round trip ok");
    Ok(())
}
