//! Radius of `Re p > α` for `p = 1 + c_1 z + ...` with `|c_1| = 2b` and
//! `|c_n| <= 2M`, and the extremal `p` meeting the bound at `z = r0`.

use univalent_radii::equations::{caratheodory_margin, caratheodory_radius};
use univalent_radii::extremal::{ComplexPoint, ExtremalFunction};
use univalent_radii::ClassSpec;

fn main() -> univalent_radii::Result<()> {
    println!(
        "{:>5} {:>5} {:>5} {:>18} {:>10} {:>14}",
        "alpha", "b", "M", "r0", "margin", "Re p(r0)"
    );
    for alpha in [0.0, 0.5] {
        for b in [0.0, 0.5, 1.0] {
            for m in [0.5, 1.0, 2.0] {
                let r0 = caratheodory_radius(alpha, b, m)?;
                let margin = caratheodory_margin(alpha, b, m, r0)?;
                let p = ExtremalFunction::new(ClassSpec::caratheodory(b, m))?
                    .eval(ComplexPoint::real(r0)?);
                println!(
                    "{alpha:>5} {b:>5} {m:>5} {r0:>18.15} {margin:>10.1e} {:>14.12}",
                    p.re
                );
            }
        }
    }
    Ok(())
}
