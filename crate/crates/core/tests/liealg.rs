use sliceforge::dynkin::DynkinType;
use sliceforge::liealg::{central_fiber, slice_quotient, BuiltinSlice, SlodowySlice};
use sliceforge::singularity::{classify_ade, milnor_number, GermType};

#[test]
fn builtin_slices_are_subregular() {
    for (which, alg, rank) in [
        (BuiltinSlice::Sl4, "A3", 3),
        (BuiltinSlice::So5, "B2", 2),
        (BuiltinSlice::Sl2, "A1", 1),
    ] {
        let s = SlodowySlice::builtin(which);
        assert_eq!(s.dim(), rank + 2, "{alg}");
        let quot = slice_quotient(&s);
        let weights = s.weight_table().unwrap();
        assert!(quot.is_weighted_homogeneous(&weights), "{alg}");
        let cf = central_fiber(&s, &quot).unwrap();
        let homogeneous = if alg == "B2" { "A3" } else { alg };
        let h: DynkinType = homogeneous.parse().unwrap();
        assert_eq!(
            milnor_number(&cf.equation).unwrap().finite(),
            Some(h.rank()),
            "{alg}"
        );
        assert_eq!(
            classify_ade(&cf.equation).unwrap(),
            GermType::Simple(h),
            "{alg}"
        );
    }
}
