mod common;

use common::{brute_lattice_points, brute_vertices, dim_c2, dim_type_a, q, Q};
use proptest::prelude::*;

use spw_core::exactgeom::{convex_hull, dd_convert, dilate, lattice_points, rat, HPolyhedron};
use spw_core::stringdata::{string_cone, Provider};
use spw_core::{Error, ReducedWord, RootSystem, Weight};

const BOX: i64 = 4;

/// `[0, BOX]^d` cut by the given rows `a·x ≤ b`.
fn boxed(d: usize, cuts: &[(Vec<i64>, i64)]) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        a.push(e.clone());
        b.push(BOX);
        e[i] = -1;
        a.push(e);
        b.push(0);
    }
    for (row, rhs) in cuts {
        a.push(row.clone());
        b.push(*rhs);
    }
    (a, b)
}

fn to_h(a: &[Vec<i64>], b: &[i64]) -> HPolyhedron {
    let mut h = HPolyhedron::new(a[0].len());
    for (row, &rhs) in a.iter().zip(b) {
        h.push_ineq(row.iter().map(|&x| rat(x)).collect(), rat(rhs));
    }
    h
}

fn qmat(a: &[Vec<i64>], b: &[i64]) -> (Vec<Vec<Q>>, Vec<Q>) {
    (a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), b.iter().map(|&x| q(x)).collect())
}

fn polytope_strategy() -> impl Strategy<Value = (usize, Vec<(Vec<i64>, i64)>)> {
    (2usize..=3).prop_flat_map(|d| {
        let cut = (prop::collection::vec(-2i64..=2, d), 0i64..=6);
        (Just(d), prop::collection::vec(cut, 0..=3))
    })
}

fn vertex_set(h: &HPolyhedron) -> Option<Vec<Vec<Q>>> {
    match dd_convert(h) {
        Ok(v) => Some(v.vertices),
        Err(Error::EmptyPolyhedron) => None,
        Err(e) => panic!("{e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vertices_match_brute_force((d, cuts) in polytope_strategy()) {
        let (a, b) = boxed(d, &cuts);
        let (qa, qb) = qmat(&a, &b);
        let expected: Vec<Vec<Q>> = brute_vertices(&qa, &qb).into_iter().collect();
        match vertex_set(&to_h(&a, &b)) {
            Some(mut v) => {
                v.sort();
                prop_assert_eq!(v, expected);
            }
            None => prop_assert!(expected.is_empty()),
        }
    }

    #[test]
    fn lattice_points_match_brute_force((d, cuts) in polytope_strategy()) {
        let (a, b) = boxed(d, &cuts);
        let mut expected = brute_lattice_points(&a, &b, BOX);
        expected.sort();
        match lattice_points(&to_h(&a, &b)) {
            Ok(mut pts) => {
                pts.sort();
                prop_assert_eq!(pts, expected);
            }
            Err(Error::EmptyPolyhedron) => prop_assert!(expected.is_empty()),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn hull_round_trip((d, cuts) in polytope_strategy()) {
        let (a, b) = boxed(d, &cuts);
        let Ok(v) = dd_convert(&to_h(&a, &b)) else { return Ok(()) };
        let back = dd_convert(&convex_hull(&v).unwrap()).unwrap();
        prop_assert_eq!(back.vertices, v.vertices);
    }

    #[test]
    fn dilation_scales_vertices((d, cuts) in polytope_strategy(), n in 1i64..=4) {
        let (a, b) = boxed(d, &cuts);
        let h = to_h(&a, &b);
        let Some(v) = vertex_set(&h) else { return Ok(()) };
        let scaled: Vec<Vec<Q>> = v.iter().map(|p| p.iter().map(|x| x * q(n)).collect()).collect();
        prop_assert_eq!(vertex_set(&dilate(&h, &q(n))).unwrap(), scaled);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn a3_lattice_count_is_weyl_dimension(l in prop::collection::vec(0i64..=2, 3), w in 0usize..3) {
        let rs = RootSystem::parse("A3").unwrap();
        let word: ReducedWord = ["1,2,1,3,2,1", "1,3,2,3,1,2", "2,1,3,2,3,1"][w].parse().unwrap();
        let provider = if w == 0 { Provider::Builtin } else { Provider::Empirical { degree: 2 } };
        let cone = string_cone(&rs, &word, &provider).unwrap();
        let p = cone.polytope(&Weight::from_ints(&l)).unwrap();
        prop_assert_eq!(p.lattice_count().unwrap(), dim_type_a(&l));
    }

    #[test]
    fn c2_lattice_count_is_weyl_dimension(a in 0i64..=3, b in 0i64..=3, w in 0usize..2) {
        let rs = RootSystem::parse("C2").unwrap();
        let word: ReducedWord = ["1,2,1,2", "2,1,2,1"][w].parse().unwrap();
        let cone = string_cone(&rs, &word, &Provider::Builtin).unwrap();
        let p = cone.polytope(&Weight::from_ints(&[a, b])).unwrap();
        prop_assert_eq!(p.lattice_count().unwrap(), dim_c2(a, b));
    }

    #[test]
    fn string_polytopes_scale_with_the_weight(l in prop::collection::vec(0i64..=2, 2), n in 2i64..=3) {
        let rs = RootSystem::parse("A2").unwrap();
        let cone = string_cone(&rs, &rs.standard_word(), &Provider::Builtin).unwrap();
        let base = cone.polytope(&Weight::from_ints(&l)).unwrap();
        let nl: Vec<i64> = l.iter().map(|x| x * n).collect();
        let big = cone.polytope(&Weight::from_ints(&nl)).unwrap();
        let scaled: Vec<Vec<Q>> =
            base.vertices().unwrap().vertices.iter().map(|p| p.iter().map(|x| x * q(n)).collect()).collect();
        prop_assert_eq!(&big.vertices().unwrap().vertices, &scaled);
    }
}
