use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use sliceforge::dynkin::{DynkinType, RootSystem};
use sliceforge::equivcoh::{
    diagram_involution, group_cohomology_cyclic, root_lattice_action, smith_normal_form, zdet,
    zmatrix, CyclicAction, ZMatrix,
};
use sliceforge::liealg::{
    base_action, builtin_symmetries, compose_signs, induced_signs, rank_dq, slice_action,
    slice_quotient, BuiltinSlice, SlodowySlice,
};
use sliceforge::poly::{q, Ideal, MPoly, MonomialOrder, Rational};

fn vars(n: usize) -> Vec<String> {
    ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
}

fn mpoly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), -5i64..=5),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        MPoly::from_terms(vars(n), terms.into_iter().map(|(e, c)| (e, q(c)))).unwrap()
    })
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn to_z(rows: &[Vec<i64>]) -> ZMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    zmatrix(&refs)
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// A finite-order integer matrix: a block-diagonal base conjugated by a
/// product of elementary matrices.
fn finite_action() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    let blocks = prop::collection::vec(0usize..4, 1..=3);
    let moves = prop::collection::vec((0usize..6, 0usize..6, -1i64..=1), 0..4);
    (prop_oneof![Just(2usize), Just(3usize)], blocks, moves).prop_map(|(order, blocks, moves)| {
        let mut pieces: Vec<Vec<Vec<i64>>> = Vec::new();
        for b in blocks {
            pieces.push(match (order, b) {
                (_, 0) => vec![vec![1]],
                (2, 1) => vec![vec![-1]],
                (2, _) => vec![vec![0, 1], vec![1, 0]],
                (_, 1) => vec![vec![0, -1], vec![1, -1]],
                _ => vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]],
            });
        }
        let n: usize = pieces.iter().map(|p| p.len()).sum();
        let mut base = vec![vec![0; n]; n];
        let mut at = 0;
        for p in &pieces {
            for (i, row) in p.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    base[at + i][at + j] = *v;
                }
            }
            at += p.len();
        }
        let (mut p, mut p_inv) = (identity(n), identity(n));
        for (r, c, k) in moves {
            let (r, c) = (r % n, c % n);
            if r == c {
                continue;
            }
            let mut e = identity(n);
            e[r][c] = k;
            let mut e_inv = identity(n);
            e_inv[r][c] = -k;
            p = mat_mul(&p, &e);
            p_inv = mat_mul(&e_inv, &p_inv);
        }
        (order, mat_mul(&mat_mul(&p, &base), &p_inv))
    })
}

fn cartan_point(t: &'static str) -> impl Strategy<Value = (&'static str, Vec<i64>, Vec<usize>)> {
    let rank = t[1..].parse::<usize>().unwrap();
    (
        Just(t),
        prop::collection::vec(-6i64..=6, rank),
        prop::collection::vec(0usize..64, 0..=2),
    )
}

fn project_off(t: &mut Vec<Rational>, roots: &[&Vec<Rational>]) {
    let dot = |a: &[Rational], b: &[Rational]| a.iter().zip(b).fold(q(0), |s, (x, y)| s + x * y);
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for r in roots {
        let mut v = (*r).clone();
        for u in &basis {
            let c = dot(&v, u) / dot(u, u);
            v = v.iter().zip(u).map(|(a, b)| a - &c * b).collect();
        }
        if v.iter().any(|x| !x.is_zero()) {
            basis.push(v);
        }
    }
    for u in &basis {
        let c = dot(t, u) / dot(u, u);
        *t = t.iter().zip(u).map(|(a, b)| a - &c * b).collect();
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn leibniz_rule(f in mpoly(3, 3, 5), g in mpoly(3, 3, 5)) {
        for v in vars(3) {
            let lhs = (&f * &g).derivative(&v);
            let rhs = &(&f.derivative(&v) * &g) + &(&f * &g.derivative(&v));
            prop_assert!((&lhs - &rhs).is_zero());
        }
    }

    #[test]
    fn identity_substitution(f in mpoly(3, 4, 6)) {
        let id: Vec<(String, MPoly)> = vars(3).into_iter().map(|v| (v.clone(), MPoly::var(&v))).collect();
        prop_assert!((&f.substitute(&id) - &f).is_zero());
    }

    #[test]
    fn groebner_is_idempotent(gens in prop::collection::vec(mpoly(2, 3, 4), 1..=3), lex in any::<bool>()) {
        let order = if lex { MonomialOrder::lex() } else { MonomialOrder::grevlex() };
        let ideal = Ideal::with_context(&vars(2), gens).unwrap();
        let gb = match ideal.groebner_with_budget(&order, 5_000) {
            Ok(gb) => gb,
            Err(e) => {
                prop_assume!(!e.is_budget_exceeded());
                panic!("{e}");
            }
        };
        prop_assume!(!gb.is_zero_ideal());
        let again = Ideal::with_context(&vars(2), gb.basis().to_vec()).unwrap().groebner(&order).unwrap();
        prop_assert_eq!(gb.basis(), again.basis());
        for g in ideal.generators() {
            prop_assert!(gb.contains(g));
        }
    }

    #[test]
    fn quotient_dimension_is_order_independent(
        a in 1u32..=4,
        b in 1u32..=4,
        tail in prop::collection::vec(mpoly(2, 2, 3), 3),
    ) {
        let v = vars(2);
        let x = MPoly::var("x").in_context(&v).unwrap();
        let y = MPoly::var("y").in_context(&v).unwrap();
        let low = |p: &MPoly, bound: u32| {
            MPoly::from_terms(v.clone(), p.terms().filter(|(e, _)| e.iter().sum::<u32>() < bound).map(|(e, c)| (e.clone(), c.clone()))).unwrap()
        };
        let f1 = &x.pow(a) + &low(&tail[0], a.min(b));
        let f2 = &y.pow(b) + &low(&tail[1], a.min(b));
        let ideal = Ideal::with_context(&v, vec![f1, f2, tail[2].clone()]).unwrap();
        let lex = ideal.groebner_with_budget(&MonomialOrder::lex(), 20_000);
        let grevlex = ideal.groebner_with_budget(&MonomialOrder::grevlex(), 20_000);
        prop_assume!(lex.is_ok() && grevlex.is_ok());
        let (l, g) = (lex.unwrap().quotient_basis().len(), grevlex.unwrap().quotient_basis().len());
        prop_assert!(l.is_some());
        prop_assert_eq!(l, g);
    }

    #[test]
    fn smith_normal_form_properties(rows in int_matrix(4)) {
        let m = to_z(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul_mat(&m).mul_mat(&s.v), s.d.clone());
        prop_assert_eq!(zdet(&s.u).abs(), BigInt::from(1));
        prop_assert_eq!(zdet(&s.v).abs(), BigInt::from(1));
        prop_assert_eq!(s.u.mul_mat(&s.u_inv), ZMatrix::identity(s.u.rows()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for (i, d) in s.divisors.iter().enumerate() {
            prop_assert!(d.is_positive());
            prop_assert_eq!(s.d.get(i, i), d);
            if let Some(next) = s.divisors.get(i + 1) {
                prop_assert!((next % d).is_zero());
            }
        }
    }

    #[test]
    fn cyclic_cohomology_is_two_periodic((order, a) in finite_action()) {
        let act = CyclicAction::on_free(order, to_z(&a)).unwrap();
        let h = group_cohomology_cyclic(&act, 6).unwrap();
        prop_assert_eq!(&h[1], &h[3]);
        prop_assert_eq!(&h[3], &h[5]);
        prop_assert_eq!(&h[2], &h[4]);
        prop_assert_eq!(&h[4], &h[6]);
    }

    #[test]
    fn rational_cohomology_vanishes((order, a) in finite_action()) {
        let act = CyclicAction::on_free(order, to_z(&a)).unwrap();
        let h = group_cohomology_cyclic(&act, 4).unwrap();
        for g in &h[1..] {
            prop_assert!(g.is_torsion());
            for t in &g.torsion {
                prop_assert!((BigInt::from(order) % t).is_zero());
            }
        }
        let invariant_rank = {
            let n = a.len();
            let mut avg = vec![vec![0i64; n]; n];
            let mut power = identity(n);
            for _ in 0..order {
                for i in 0..n {
                    for j in 0..n {
                        avg[i][j] += power[i][j];
                    }
                }
                power = mat_mul(&power, &a);
            }
            let qm = sliceforge::linalg::QMatrix::from_fn(n, n, |i, j| q(avg[i][j]));
            qm.rank()
        };
        prop_assert_eq!(h[0].free_rank, invariant_rank);
    }

    #[test]
    fn rank_of_dq_matches_jacobian(
        (t, coeffs, walls) in prop_oneof![
            cartan_point("A2"), cartan_point("A3"), cartan_point("A4"), cartan_point("B2"),
            cartan_point("B3"), cartan_point("C3"), cartan_point("D4"), cartan_point("G2"),
        ]
    ) {
        let rs = RootSystem::new(t.parse::<DynkinType>().unwrap());
        let mut point = vec![q(0); rs.ambient_dim];
        for (s, c) in rs.simple.iter().zip(&coeffs) {
            point = point.iter().zip(s).map(|(a, b)| a + q(*c) * b).collect();
        }
        let chosen: Vec<&Vec<Rational>> = walls.iter().map(|w| &rs.roots[w % rs.len()]).collect();
        project_off(&mut point, &chosen);
        let r = rank_dq(&point, &rs).unwrap();
        prop_assert!(r.jacobian_rank.is_some());
        prop_assert!(r.agrees(), "{:?} at {:?}", r, point);
    }
}

#[test]
fn base_action_is_a_homomorphism() {
    for which in [BuiltinSlice::Sl4, BuiltinSlice::So5] {
        let s = SlodowySlice::builtin(which);
        let quot = slice_quotient(&s);
        let act = slice_action(&s, &builtin_symmetries(which)).unwrap();
        let signs = base_action(&quot, &act).unwrap();
        for (g, sg) in act.generators.iter().zip(&signs) {
            for (h, sh) in act.generators.iter().zip(&signs) {
                let composed = induced_signs(&quot, &h.compose(g)).unwrap();
                assert_eq!(composed, compose_signs(sg, sh));
            }
        }
    }
}

#[test]
fn involution_lattices_have_torsion_in_degree_two() {
    let mut types: Vec<String> = (1..=4).map(|k| format!("A{}", 2 * k + 1)).collect();
    types.extend((4..=8).map(|k| format!("D{k}")));
    types.push("E6".into());
    for t in types {
        let h: DynkinType = t.parse().unwrap();
        let act = root_lattice_action(&diagram_involution(h).unwrap());
        let coh = group_cohomology_cyclic(&act, 2).unwrap();
        assert!(
            coh[2].is_torsion() && !coh[2].is_zero(),
            "{t}: H^2 = {}",
            coh[2]
        );
    }
}
