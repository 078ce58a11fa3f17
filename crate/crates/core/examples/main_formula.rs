//! The multinomial formula for `d^B_n` against enumeration, and its
//! symmetric decomposition `d^B_n = f⁺_n + f⁻_n`.

use bderange::analysis::unimodal_peaks;
use bderange::families::{enumerate, formulas, symmetric_decompose};

fn main() -> bderange::Result<()> {
    for n in 0..=6 {
        let formula = formulas::main_formula(n);
        let counted = enumerate::derangement_b_by_exc(n, false)?;
        assert_eq!(formula, counted);
        let (fp, fm) = symmetric_decompose(&formula, n)?;
        let (_, peaks) = unimodal_peaks(&formula);
        println!("n={n}: d^B = {formula}");
        println!("      f+ = {fp}");
        println!("      f- = {fm}");
        println!("      peaks {peaks:?}");
    }
    Ok(())
}
