use sliceforge::dynkin::DynkinType;
use sliceforge::singularity::{
    classify_ade, jacobi_basis, milnor_number, normal_form, semiuniversal_deformation,
    symmetry_action, tjurina_number, GermType,
};

fn ade() -> Vec<DynkinType> {
    let mut v: Vec<String> = (1..=8).map(|k| format!("A{k}")).collect();
    v.extend((4..=8).map(|k| format!("D{k}")));
    v.extend(["E6", "E7", "E8"].map(String::from));
    v.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn milnor_equals_tjurina() {
    for t in ade() {
        let m = normal_form(t).unwrap();
        assert!(m.is_homogeneous(), "{t}");
        let mu = milnor_number(&m.equation).unwrap();
        assert_eq!(mu.finite(), Some(t.rank()), "{t}");
        assert_eq!(tjurina_number(&m.equation).unwrap(), mu, "{t}");
        assert_eq!(classify_ade(&m.equation).unwrap(), GermType::Simple(t));
    }
}

#[test]
fn every_monomial_has_the_family_degree() {
    let mut types = ade();
    types.extend(["B2", "B3", "B4"].map(|s| s.parse::<DynkinType>().unwrap()));
    for t in types {
        let fam = semiuniversal_deformation(t).unwrap();
        for (e, _) in fam.equation.terms() {
            let w: i64 = e
                .iter()
                .zip(fam.equation.vars())
                .map(|(k, v)| *k as i64 * fam.weight(v).unwrap())
                .sum();
            assert_eq!(w, fam.degree, "{t}");
        }
        assert!(fam.is_invariant(), "{t}");
    }
}

#[test]
fn invariant_jacobi_basis_has_folded_rank() {
    for (d, rank) in [("B2", 2), ("B3", 3)] {
        let d: DynkinType = d.parse().unwrap();
        let (model, act) = symmetry_action(d).unwrap();
        let basis = jacobi_basis(&model, Some(&act)).unwrap();
        assert_eq!(basis.invariant.unwrap().len(), rank);
        assert_eq!(basis.monomials.len(), model.dynkin.rank());
    }
}
