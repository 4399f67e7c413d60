//! Closed-form extremal functions against their truncated Taylor series.

use univalent_radii::extremal::{ComplexPoint, ExtremalFunction};
use univalent_radii::ClassSpec;

fn main() -> univalent_radii::Result<()> {
    let z = ComplexPoint::from_polar(0.6, 1.0)?;
    let classes = [
        ClassSpec::bound_by_n(1.0),
        ClassSpec::bound_by_m(0.5, 1.0),
        ClassSpec::bound_by_m_over_n(0.5, 1.0),
        ClassSpec::caratheodory(1.0, 1.0),
    ];
    for class in classes {
        let f = ExtremalFunction::new(class)?;
        let coefficients: Vec<String> = (1..=6)
            .map(|n| format!("{:+.3}", f.coefficient(n)))
            .collect();
        println!("{}: coefficients {}", class.family, coefficients.join(" "));
        let exact = f.eval(z);
        for terms in [5, 20, 80] {
            let t = f.eval_truncated(z, terms)?;
            println!(
                "  {terms:>3} terms: error {:.2e}  tail bound {:.2e}",
                (t.value - exact).norm(),
                t.tail_bound
            );
        }
    }
    Ok(())
}
