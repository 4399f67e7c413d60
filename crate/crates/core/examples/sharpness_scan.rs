//! The extremal function on circles inside, on and beyond the radius.
//!
//! Inside `r0` the minimum of `Re z f'/f` stays above `α`; on `|z| = r0` it
//! touches `α` at `z = r0`; beyond it drops below.

use univalent_radii::extremal::ExtremalFunction;
use univalent_radii::verify::{check_sharpness, scan_circle};
use univalent_radii::{solve_radius, ClassSpec, RadiusKind, RadiusQuery};

fn main() -> univalent_radii::Result<()> {
    let class = ClassSpec::bound_by_n(1.0);
    let kind = RadiusKind::StarlikeOrder(0.25);
    let r0 = solve_radius(&RadiusQuery::new(class, kind))?.radius;
    let f = ExtremalFunction::new(class)?;
    println!("{kind}, |a_n| <= n: r0 = {r0:.15}");

    for factor in [0.5, 0.9, 1.0, 1.05, 1.2] {
        let scan = scan_circle(&f, factor * r0, 4096)?;
        let min = scan
            .min_re_for(kind)
            .expect("no pole below the radius of univalence");
        println!(
            "  |z| = {factor:.2} r0: min Re zf'/f = {min:+.10}  at theta = {:.4}",
            scan.argmin_for(kind)
        );
    }

    let report = check_sharpness(class, kind)?;
    println!(
        "sharpness at z = r0: {} ({})",
        if report.passed {
            "equality holds"
        } else {
            "FAILED"
        },
        report.detail
    );
    Ok(())
}
