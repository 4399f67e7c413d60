use proptest::prelude::*;
use univalent_radii::equations::{sufficiency_margin_convex, sufficiency_margin_starlike};
use univalent_radii::verify::{check_sharpness, oracle_root};
use univalent_radii::{solve_radius, ClassSpec, Family, RadiusKind, RadiusQuery};

fn class_strategy() -> impl Strategy<Value = ClassSpec> {
    (0usize..4, 0.0f64..=1.0, 0.1f64..=3.0).prop_map(|(i, b, m)| match i {
        0 => ClassSpec::bound_by_n(b),
        1 => ClassSpec::bound_by_m(b, m),
        2 => ClassSpec::bound_by_m_over_n(b, m),
        _ => ClassSpec::caratheodory(b, m),
    })
}

fn kind_for(class: ClassSpec, convex: bool, alpha: f64) -> RadiusKind {
    match (class.family, convex) {
        (Family::Caratheodory, _) => RadiusKind::PositiveRealPartOrder(alpha),
        (_, true) => RadiusKind::ConvexOrder(alpha),
        (_, false) => RadiusKind::StarlikeOrder(alpha),
    }
}

fn applicable(class: ClassSpec, kind: RadiusKind) -> bool {
    !(class.family == Family::BoundByMOverN && kind.is_convex() && 2.0 * class.b > 1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solved_radius_is_valid(class in class_strategy(), convex: bool, alpha in 0.0f64..0.99) {
        let kind = kind_for(class, convex, alpha);
        prop_assume!(applicable(class, kind));
        let q = RadiusQuery::new(class, kind);
        let r = solve_radius(&q).unwrap();
        prop_assert!(r.radius > 0.0 && r.radius < 1.0);
        prop_assert!(r.residual.abs() <= q.tolerance);
    }

    #[test]
    fn margin_changes_sign_at_radius(class in class_strategy(), convex: bool, alpha in 0.0f64..0.9) {
        prop_assume!(class.family != Family::Caratheodory);
        prop_assume!(!(convex && class.family == Family::BoundByMOverN));
        let kind = kind_for(class, convex, alpha);
        let r0 = solve_radius(&RadiusQuery::new(class, kind)).unwrap().radius;
        let margin = |r: f64| if convex {
            sufficiency_margin_convex(&class, alpha, r).unwrap()
        } else {
            sufficiency_margin_starlike(&class, alpha, r).unwrap()
        };
        prop_assert!(margin(0.99 * r0) > 0.0);
        prop_assert!(margin((1.01 * r0).min(0.5 * (1.0 + r0))) < 0.0);
    }

    #[test]
    fn sharpness_holds(class in class_strategy(), convex: bool, alpha in 0.0f64..0.9) {
        let kind = kind_for(class, convex, alpha);
        prop_assume!(applicable(class, kind));
        let report = check_sharpness(class, kind).unwrap();
        prop_assert!(report.passed, "{:?}", report);
    }

    #[test]
    fn oracle_agrees(class in class_strategy(), convex: bool, alpha in 0.0f64..0.9) {
        let kind = kind_for(class, convex, alpha);
        prop_assume!(applicable(class, kind));
        let solved = solve_radius(&RadiusQuery::new(class, kind)).unwrap().radius;
        let oracle = oracle_root(class, kind, 10_000).unwrap();
        prop_assert!(oracle.distance(solved) <= 1e-9, "{} vs {:?}", solved, oracle);
    }

    #[test]
    fn decreasing_in_alpha(class in class_strategy(), convex: bool, a1 in 0.0f64..0.9, gap in 0.01f64..0.09) {
        let k1 = kind_for(class, convex, a1);
        prop_assume!(applicable(class, k1));
        let r1 = solve_radius(&RadiusQuery::new(class, k1)).unwrap().radius;
        let r2 = solve_radius(&RadiusQuery::new(class, kind_for(class, convex, a1 + gap))).unwrap().radius;
        prop_assert!(r2 < r1);
    }

    #[test]
    fn nonincreasing_in_b(class in class_strategy(), convex: bool, alpha in 0.0f64..0.9, b2 in 0.0f64..=1.0) {
        let lo = class.b.min(b2);
        let hi = class.b.max(b2);
        let at = |b: f64| ClassSpec { b, ..class };
        let kind = kind_for(class, convex, alpha);
        prop_assume!(applicable(at(hi), kind));
        let r_lo = solve_radius(&RadiusQuery::new(at(lo), kind)).unwrap().radius;
        let r_hi = solve_radius(&RadiusQuery::new(at(hi), kind)).unwrap().radius;
        prop_assert!(r_hi <= r_lo + 1e-12);
    }
}
