//! The solver against a root found by summing the worst-case coefficient
//! series term by term. The oracle returns an interval whose width is the
//! truncation error; with few terms the interval is wide.

use univalent_radii::verify::oracle_root;
use univalent_radii::{solve_radius, ClassSpec, RadiusKind, RadiusQuery};

fn main() -> univalent_radii::Result<()> {
    let cases = [
        (ClassSpec::bound_by_n(1.0), RadiusKind::ConvexOrder(0.0)),
        (
            ClassSpec::bound_by_m(0.3, 2.0),
            RadiusKind::StarlikeOrder(0.5),
        ),
        (
            ClassSpec::bound_by_m_over_n(0.5, 1.0),
            RadiusKind::StarlikeOrder(0.0),
        ),
        (
            ClassSpec::bound_by_m_over_n(0.25, 1.0),
            RadiusKind::ConvexOrder(0.0),
        ),
        (
            ClassSpec::caratheodory(1.0, 2.0),
            RadiusKind::PositiveRealPartOrder(0.5),
        ),
    ];
    for (class, kind) in cases {
        let solved = solve_radius(&RadiusQuery::new(class, kind))?.radius;
        println!(
            "{} b={} m={:?} {kind}: solved {solved:.15}",
            class.family, class.b, class.m
        );
        for terms in [5, 20, 10_000] {
            let oracle = oracle_root(class, kind, terms)?;
            println!(
                "  {terms:>6} terms: [{:.15}, {:.15}]  width {:.1e}  distance {:.1e}",
                oracle.lo,
                oracle.hi,
                oracle.width(),
                oracle.distance(solved)
            );
        }
    }
    Ok(())
}
