use sliceforge::equivcoh::{
    e2_page, group_cohomology_cyclic, smith_normal_form, zmatrix, CohomologyPage, CyclicAction,
    FGAbelianGroup, FiberCohomology,
};

#[test]
fn smith_form_of_a_small_matrix() {
    let m = zmatrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = smith_normal_form(&m);
    let ds: Vec<String> = s.divisors.iter().map(|d| d.to_string()).collect();
    assert_eq!(ds, ["2", "6", "12"]);
    assert_eq!(FGAbelianGroup::cokernel(&m).to_string(), "Z/2 ⊕ Z/6 ⊕ Z/12");
}

#[test]
fn torsion_module_action() {
    let act = CyclicAction::new(2, zmatrix(&[&[-1]]), zmatrix(&[&[4]])).unwrap();
    let h = group_cohomology_cyclic(&act, 2).unwrap();
    let shown: Vec<String> = h.iter().map(|g| g.to_string()).collect();
    assert_eq!(shown, ["Z/2", "Z/2", "Z/2"]);
}

#[test]
fn page_serializes_cells() {
    let fiber = vec![FiberCohomology {
        q: 0,
        group: FGAbelianGroup::free(1),
        action: CyclicAction::trivial(2, 1),
    }];
    let page = e2_page(&fiber, 2).unwrap();
    let v = serde_json::to_value(&page).unwrap();
    let cell = &v["cells"][2];
    assert_eq!(cell["p"], 2);
    assert_eq!(cell["q"], 0);
    assert_eq!(cell["free_rank"], 0);
    assert_eq!(cell["torsion"], serde_json::json!(["2"]));
    let back: CohomologyPage = serde_json::from_value(v).unwrap();
    assert_eq!(back, page);
}
