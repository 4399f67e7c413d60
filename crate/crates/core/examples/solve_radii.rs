//! Radii of starlikeness and convexity for each coefficient class.

use univalent_radii::{solve_radius, ClassSpec, RadiusKind, RadiusQuery};

fn main() -> univalent_radii::Result<()> {
    let classes = [
        ("|a_n| <= n, |a_2| = 2", ClassSpec::bound_by_n(1.0)),
        ("|a_n| <= n, a_2 = 0", ClassSpec::bound_by_n(0.0)),
        ("|a_n| <= 1, |a_2| = 1", ClassSpec::bound_by_m(0.5, 1.0)),
        (
            "|a_n| <= 1/n, |a_2| = 1",
            ClassSpec::bound_by_m_over_n(0.5, 1.0),
        ),
    ];
    let kinds = [
        RadiusKind::StarlikeOrder(0.0),
        RadiusKind::StarlikeOrder(0.5),
        RadiusKind::ParabolicStarlike,
        RadiusKind::ConvexOrder(0.0),
        RadiusKind::UniformlyConvex,
    ];

    for (label, class) in classes {
        println!("{label}");
        for kind in kinds {
            let result = solve_radius(&RadiusQuery::new(class, kind))?;
            println!(
                "  {:<24} r0 = {:.12}  ({} iterations, residual {:+.1e}, {})",
                kind.to_string(),
                result.radius,
                result.iterations,
                result.residual,
                result.equation_id
            );
        }
    }
    Ok(())
}
