//! Signed permutation statistics, cycle forms and enumeration of `D^B_n`.

use bderange::signedperm::{enumerate_bn, CycleConvention, SignedPermutation};

fn main() -> bderange::Result<()> {
    let w: SignedPermutation = "3,-1,-2,5,4".parse()?;
    println!("w = {w}");
    println!("des_B = {}, asc_B = {}", w.des_b(), w.asc_b());
    println!("exc_B = {}, iexc_B = {}", w.exc_b(), w.iexc_b());
    println!("descent set = {:?}", w.des_b_set());
    println!("derangement = {}, half = {:?}", w.is_derangement(), w.half()?);
    println!("type A cycles = {}", w.cycle_form(CycleConvention::TypeA));
    println!("type B cycles = {}", w.cycle_form(CycleConvention::TypeB));
    println!("inverse = {}, negation = {}", w.invert(), w.negate());

    for n in 0..=5 {
        let total = enumerate_bn(n)?.filter(SignedPermutation::is_derangement).count();
        println!("|D^B_{n}| = {total}");
    }
    Ok(())
}
