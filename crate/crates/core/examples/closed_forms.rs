//! Radii that have closed forms, compared with the numeric roots.

use univalent_radii::solver::{closed_form_radical, solve_radius, Radical};

fn main() -> univalent_radii::Result<()> {
    let radicals = [
        ("root of 2(1-r)^3 = 1+r", Radical::StarlikeUnrestricted),
        ("parabolic, |a_n| <= n", Radical::ParabolicUnrestricted),
        (
            "parabolic, a_2 = 0: 1 - 2^(-1/3)",
            Radical::ParabolicVanishingSecond,
        ),
        (
            "|a_n| <= 1/2: 1 - sqrt(M/(1+M))",
            Radical::BoundedCoefficients(0.5),
        ),
        ("|a_n| <= 1", Radical::BoundedCoefficients(1.0)),
        ("|a_n| <= 2", Radical::BoundedCoefficients(2.0)),
    ];
    println!(
        "{:<36} {:>20} {:>20} {:>10}",
        "", "closed form", "numeric", "|diff|"
    );
    for (label, radical) in radicals {
        let closed = closed_form_radical(radical);
        let numeric = solve_radius(&radical.query())?.radius;
        println!(
            "{label:<36} {closed:>20.17} {numeric:>20.17} {:>10.1e}",
            (closed - numeric).abs()
        );
    }
    Ok(())
}
