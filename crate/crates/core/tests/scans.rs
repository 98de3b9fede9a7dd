use polycode::duality::{classify_self_dual, duality_flags};
use polycode::equivalence::DEFAULT_NODE_BUDGET;
use polycode::polycyclic::{enumerate_family, family_correspondence, PolycyclicCode};
use polycode::scan::{
    binary_trinomial_scan, common_divisor_shape_scan, non_square_isodual_survey,
    prime_length_dual_containing_search, trinomials, TrinomialFilter,
};
use polycode::{FieldCtx, Polynomial};

fn poly(s: &str, f: &FieldCtx) -> Polynomial {
    Polynomial::parse(s, f).unwrap()
}

#[test]
fn correspondence_onto_reciprocal_family() {
    let f3 = FieldCtx::prime(3).unwrap();
    let f1 = poly("x^10+x^8+1", &f3);
    let fc = family_correspondence(&f1, DEFAULT_NODE_BUDGET).unwrap();
    assert_eq!(fc.f2, poly("x^10+x^2+1", &f3));
    assert_eq!(fc.pairs.len(), 18);
    assert_eq!(enumerate_family(&fc.f2).unwrap().len(), 18);
    assert!(fc.bijective && fc.all_equivalent);
}

#[test]
fn no_self_dual_trinomial_codes_over_gf3() {
    let f3 = FieldCtx::prime(3).unwrap();
    for f in trinomials(&f3, 2, 8) {
        assert!(classify_self_dual(&f).unwrap().is_empty(), "{f}");
    }
}

#[test]
fn zero_code_is_not_dual_containing() {
    let f2 = FieldCtx::prime(2).unwrap();
    let f = poly("x^5+x^2+1", &f2);
    let flags = duality_flags(&PolycyclicCode::new(&f, &f).unwrap());
    assert!(!flags.dual_containing);
}

#[test]
fn common_divisor_shape_small_fields() {
    for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let ctx = FieldCtx::new(p, m).unwrap();
        let r = common_divisor_shape_scan(&ctx, 5).unwrap();
        assert!(r.passed(), "{ctx}: {:?}", r.violations);
    }
}

#[test]
fn gf5_common_divisor_shape_has_witnesses() {
    let f5 = FieldCtx::prime(5).unwrap();
    let r = common_divisor_shape_scan(&f5, 2).unwrap();
    assert!(r
        .witnesses
        .iter()
        .any(|w| w.f == "x^4+4*x^2+4" && w.g == "x^2+2"));
}

#[test]
fn reports_are_deterministic() {
    let a = serde_json::to_string(&binary_trinomial_scan(9).unwrap()).unwrap();
    let b = serde_json::to_string(&binary_trinomial_scan(9).unwrap()).unwrap();
    assert_eq!(a, b);

    let f3 = FieldCtx::prime(3).unwrap();
    let run = || {
        serde_json::to_string(
            &prime_length_dual_containing_search(&f3, 5, TrinomialFilter::All).unwrap(),
        )
        .unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn non_square_isodual_codes_exist() {
    let r = non_square_isodual_survey(12, DEFAULT_NODE_BUDGET).unwrap();
    assert!(r.inconclusive.is_empty());
    for w in &r.witnesses {
        let f2 = FieldCtx::prime(2).unwrap();
        let g = poly(&w.g, &f2);
        assert_ne!(g.mul(&g), poly(&w.f, &f2));
    }
}
