//! Radius of convexity as `α` and `b` vary, with the monotonicity checks
//! over the default grid.

use univalent_radii::verify::{monotonicity_suite, stepped, Grid};
use univalent_radii::{solve_radius, ClassSpec, RadiusKind, RadiusQuery};

fn main() -> univalent_radii::Result<()> {
    let bs = stepped(0.0, 1.0, 0.25);
    print!("alpha \\ b");
    for b in &bs {
        print!("{b:>12}");
    }
    println!();
    for alpha in stepped(0.0, 0.9, 0.15) {
        print!("{alpha:>9}");
        for &b in &bs {
            let q = RadiusQuery::new(
                ClassSpec::bound_by_m(b, 1.0),
                RadiusKind::ConvexOrder(alpha),
            );
            print!("{:>12.8}", solve_radius(&q)?.radius);
        }
        println!();
    }

    let reports = monotonicity_suite(&Grid::default_grid());
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!(
        "\nmonotonicity over the default grid: {} sweeps, {failed} failed",
        reports.len()
    );
    Ok(())
}
