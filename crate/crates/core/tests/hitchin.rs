use sliceforge::dynkin::DynkinType;
use sliceforge::hitchin::{
    branch_locus, discriminant, family_spec, local_cameral, local_threefold, radical,
    restriction_check, smoothness_report, LocalSection, ModelTag, ZeroLocation,
};
use sliceforge::poly::upoly::UPoly;
use sliceforge::poly::{q, MPoly};

fn t(s: &str) -> DynkinType {
    s.parse().unwrap()
}

fn section(d: &str, parts: &[&str]) -> LocalSection {
    LocalSection::parse(t(d), "x", parts).unwrap()
}

fn univariate(p: &MPoly) -> UPoly {
    UPoly::from_mpoly(p, "x").unwrap()
}

#[test]
fn a1_square_free_sections_give_smooth_models() {
    for b in [
        "x",
        "x - 3",
        "x*(x-1)",
        "x^2 - 2",
        "x*(x-1)*(x+2)",
        "x^2 + 1",
        "2*x^3 - x",
    ] {
        let sec = section("A1", &[b]);
        assert!(
            smoothness_report(&local_cameral(t("A1"), &sec).unwrap())
                .unwrap()
                .smooth,
            "cameral {b}"
        );
        for model in [ModelTag::Slice, ModelTag::Hypersurface] {
            let y = local_threefold(t("A1"), &sec, model).unwrap();
            assert!(smoothness_report(&y).unwrap().smooth, "{model} {b}");
        }
    }
}

#[test]
fn a1_repeated_zeros_give_singular_models() {
    for b in ["x^2", "x^3", "(x-1)^2*(x+1)", "x^2*(x^2-2)"] {
        let sec = section("A1", &[b]);
        assert!(
            !smoothness_report(&local_cameral(t("A1"), &sec).unwrap())
                .unwrap()
                .smooth,
            "cameral {b}"
        );
        for model in [ModelTag::Slice, ModelTag::Hypersurface] {
            let y = local_threefold(t("A1"), &sec, model).unwrap();
            assert!(!smoothness_report(&y).unwrap().smooth, "{model} {b}");
        }
    }
}

#[test]
fn discriminant_zeros_match_branch_locus() {
    let cases: &[(&str, &[&str])] = &[
        ("A1", &["x"]),
        ("A1", &["x^2 - 2"]),
        ("A1", &["x*(x-1)*(x-3)"]),
        ("B2", &["x", "1"]),
        ("B2", &["x^2 - 1", "x"]),
        ("B2", &["1", "x^2 - 3"]),
    ];
    for (d, parts) in cases {
        let sec = section(d, parts);
        let disc = discriminant(t(d), &sec).unwrap();
        let branch = branch_locus(t(d), &sec).unwrap();
        assert_eq!(
            radical(&univariate(&disc.polynomial)),
            radical(&univariate(&branch)),
            "{d} {parts:?}"
        );
        let degree: usize = disc
            .zeros
            .iter()
            .map(|z| {
                z.multiplicity
                    * match &z.location {
                        ZeroLocation::Rational(_) => 1,
                        ZeroLocation::Algebraic(f) => f.degree_in("x") as usize,
                    }
            })
            .sum();
        assert_eq!(
            degree as u32,
            disc.polynomial.degree_in("x"),
            "{d} {parts:?}"
        );
    }
}

#[test]
fn a1_discriminant_is_the_branch_polynomial() {
    let sec = section("A1", &["(x-1)*(x-3)*(x+2)"]);
    let disc = discriminant(t("A1"), &sec).unwrap().polynomial;
    let branch = branch_locus(t("A1"), &sec).unwrap();
    let ratio = branch.constant_term() / disc.constant_term();
    assert_eq!(branch, disc.scale(&ratio));
    assert_ne!(ratio, q(0));
}

#[test]
fn family_ledgers_hold() {
    let mut types: Vec<String> = (1..=8).map(|k| format!("A{k}")).collect();
    types.extend((4..=8).map(|k| format!("D{k}")));
    types.extend(["E6", "E7", "E8"].map(String::from));
    types.extend((2..=4).map(|k| format!("B{k}")));
    for d in types {
        let spec = family_spec(t(&d)).unwrap();
        assert!(spec.ledger_ok, "{d}");
        assert!(
            spec.equation
                .is_weighted_homogeneous(&spec.ledger, spec.target),
            "{d}"
        );
    }
}

#[test]
fn family_spec_examples() {
    let a1 = family_spec(t("A1")).unwrap();
    assert_eq!(a1.ambient_display(), "tot(K ⊕ K ⊕ K)");
    assert_eq!(a1.base_display(), "H⁰(K²)");
    let e6 = family_spec(t("E6")).unwrap();
    assert_eq!(e6.ambient_display(), "tot(K³ ⊕ K⁴ ⊕ K⁶)");
    assert_eq!(e6.base_degrees, vec![2, 5, 6, 8, 9, 12]);
}

#[test]
fn restriction_holds_for_b_series() {
    for d in ["B2", "B3"] {
        let r = restriction_check(t(d)).unwrap();
        assert!(r.passed(), "{d}");
    }
}
