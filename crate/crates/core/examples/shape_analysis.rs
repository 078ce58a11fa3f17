//! Shape reports: symmetry, unimodality, gamma vectors, Sturm real-rootedness
//! and the Toeplitz minor probe.

use bderange::analysis::{gamma_extract, shape_report, sturm_real_rooted, toeplitz_negative_minor};
use bderange::families::{engine, Family};
use bderange::IntPoly;

fn main() -> bderange::Result<()> {
    for n in 2..=8 {
        let fp = engine().value(Family::FPlus, n)?;
        let report = shape_report(&fp, Some(n));
        println!(
            "f+_{n}: unimodal={} peaks={:?} log-concave={} real-rooted={:?}",
            report.unimodal, report.peaks, report.log_concave, report.real_rooted
        );
        println!("  xi+ = {}", gamma_extract(&fp, n)?.to_poly());
    }

    let p = IntPoly::from_slice(&[1, 1, 1]);
    println!("1 + x + x^2 real-rooted: {}", sturm_real_rooted(&p)?);
    match toeplitz_negative_minor(&p, 3)? {
        Some(m) => println!("negative minor rows {:?} cols {:?} det {}", m.rows, m.cols, m.det),
        None => println!("no negative minor found"),
    }
    Ok(())
}
