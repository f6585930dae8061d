use super::*;
use crate::exactgeom::{dd_convert, parse_rat_vec, VPolytope};

fn rs(name: &str) -> RootSystem {
    RootSystem::parse(name).unwrap()
}

fn word(s: &str) -> ReducedWord {
    s.parse().unwrap()
}

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

fn rats(c: &[i64]) -> Vec<Rat> {
    to_rat(c)
}

fn builtin(r: &RootSystem, s: &str) -> StringCone {
    string_cone(r, &word(s), &Provider::Builtin).unwrap()
}

fn reduced(dim: usize, normals: Vec<Vec<i64>>) -> ConeH {
    let c = ConeH::from_normals(dim, normals.iter().map(|r| rats(r)).collect()).unwrap();
    ConeH::new(facet_reduce(c.as_h()).unwrap()).unwrap()
}

#[test]
fn lambda_rows_for_a2_at_rho() {
    let h = lambda_inequalities(&rs("A2"), &word("1,2,1"), &w(&[1, 1])).unwrap();
    assert_eq!(h.ineqs.len(), 3);
    assert!(h.ineqs.iter().all(|r| r.b == rat(1)));
    // t1 − t2 + 2t3 ≤ 1, t2 − t3 ≤ 1, t3 ≤ 1
    assert_eq!(h.ineqs[0].a, rats(&[1, -1, 2]));
    assert_eq!(h.ineqs[1].a, rats(&[0, 1, -1]));
    assert_eq!(h.ineqs[2].a, rats(&[0, 0, 1]));
}

#[test]
fn zero_weight_gives_a_point() {
    let c = builtin(&rs("A2"), "1,2,1");
    let p = c.polytope(&w(&[0, 0])).unwrap();
    assert_eq!(p.lattice_points().unwrap(), vec![vec![0, 0, 0]]);
    assert_eq!(p.vertex_count().unwrap(), 1);
}

#[test]
fn gt_cone_chains() {
    let a2 = rs("A2");
    let c = builtin(&a2, "1,2,1");
    assert_eq!(c.provenance(), &Provenance::BuiltinGtA);
    let expect = reduced(3, vec![vec![-1, 0, 0], vec![0, -1, 1], vec![0, 0, -1]]);
    assert_eq!(c.cone(), &expect);
    let a3 = rs("A3");
    let c = gt_cone(&a3).unwrap();
    assert_eq!(c.cone().as_h().ineqs.len(), 6);
    assert!(string_cone(&a3, &word("1,3,2,3,1,2"), &Provider::Builtin).is_err());
}

#[test]
fn c2_cones_match_printed_chains() {
    let c2 = rs("C2");
    let a = builtin(&c2, "1,2,1,2");
    let expect = reduced(4, vec![vec![-1, 0, 0, 0], vec![0, -2, 1, 0], vec![0, 0, -1, 2], vec![0, 0, 0, -1]]);
    assert_eq!(a.cone(), &expect);
    let b = builtin(&c2, "2,1,2,1");
    let expect = reduced(4, vec![vec![-1, 0, 0, 0], vec![0, -1, 1, 0], vec![0, 0, -1, 1], vec![0, 0, 0, -1]]);
    assert_eq!(b.cone(), &expect);
    assert!(matches!(c2_cone(&rs("A2"), &word("1,2,1")), Err(Error::ProviderMismatch(_))));
}

#[test]
fn a2_rho_polytope() {
    let c = builtin(&rs("A2"), "1,2,1");
    let p = c.polytope(&w(&[1, 1])).unwrap();
    assert_eq!(p.vertex_count().unwrap(), 7);
    assert_eq!(p.lattice_count().unwrap(), 8);
    assert!(p.is_integral().unwrap());
}

#[test]
fn non_dominant_weight_rejected() {
    let c = builtin(&rs("A2"), "1,2,1");
    assert!(matches!(c.polytope(&w(&[1, -1])), Err(Error::NotDominant(_))));
}

#[test]
fn highest_weight_vertex_closed_form() {
    let a2 = rs("A2");
    let q = highest_weight_vertex(&a2, &word("1,2,1"), &w(&[1, 1])).unwrap();
    assert_eq!(q, rats(&[1, 2, 1]));
    let c = builtin(&a2, "1,2,1");
    let p = c.polytope(&w(&[2, 1])).unwrap();
    let q = p.highest_weight_vertex();
    for row in &c.lambda_inequalities(&w(&[2, 1])).ineqs {
        assert!(row.slack(&q).is_zero());
    }
    assert!(p.vertices().unwrap().vertices.contains(&q));
    assert_eq!(highest_weight_vertex(&a2, &word("1,2,1"), &w(&[0, 0])).unwrap(), rats(&[0, 0, 0]));
}

#[test]
fn projection_endpoints() {
    let a2 = rs("A2");
    let wd = word("1,2,1");
    let l = w(&[2, 1]);
    assert_eq!(pi_lambda(&a2, &wd, &l, &rats(&[0, 0, 0])).unwrap(), l.neg());
    let q = highest_weight_vertex(&a2, &wd, &l).unwrap();
    assert_eq!(pi_lambda(&a2, &wd, &l, &q).unwrap(), a2.dual_weight(&l));
    assert!(pi_lambda(&a2, &wd, &l, &rats(&[0, 0])).is_err());
}

#[test]
fn extremal_vertices_of_a2_rho() {
    let c = builtin(&rs("A2"), "1,2,1");
    let p = c.polytope(&w(&[1, 1])).unwrap();
    let ext = extremal_weight_vertices(&p).unwrap();
    assert_eq!(ext.len(), 6);
    assert_eq!(ext[&w(&[-1, -1])], vec![0, 0, 0]);
    assert_eq!(ext[&w(&[1, 1])], vec![1, 2, 1]);
}

#[test]
fn fibers() {
    let c = builtin(&rs("A2"), "1,2,1");
    let p = c.polytope(&w(&[1, 1])).unwrap();
    assert_eq!(p.fiber(&w(&[0, 0])).unwrap().lattice_count().unwrap(), 2);
    assert_eq!(p.fiber(&w(&[1, 1])).unwrap().lattice_count().unwrap(), 1);
    assert_eq!(p.fiber(&w(&[3, 0])).unwrap().lattice_count().unwrap(), 0);
}

#[test]
fn big_cone_slices() {
    let c = builtin(&rs("A2"), "1,2,1");
    let big = c.big_cone();
    assert_eq!(big.dim(), 5);
    assert_eq!(big.as_h().affine_dim().unwrap(), 5);
    let en = LatticeEnumerator::with_parameters(big.as_h(), 2).unwrap();
    assert_eq!(en.count_at(&[1, 1]).unwrap(), 8);
    assert_eq!(en.count_at(&[0, 0]).unwrap(), 1);
}

#[test]
fn gt_coordinates() {
    assert_eq!(gt_renaming_table(2), vec![(1, 2, 1), (2, 1, 2), (3, 1, 1)]);
    let part = weight_to_partition(&w(&[1, 1]));
    assert_eq!(part, rats(&[2, 1, 0]));
    assert_eq!(partition_to_weight(&part), w(&[1, 1]));
    let x = rats(&[1, 2, 1]);
    let g = gt_change_of_coords(2, GtDirection::StringToPattern, &part, &x).unwrap();
    let back = gt_change_of_coords(2, GtDirection::PatternToString, &part, &g).unwrap();
    assert_eq!(back, x);
    assert!(matches!(
        gt_change_of_coords(2, GtDirection::StringToPattern, &part, &rats(&[1])),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn gt_vertex_enumeration() {
    assert_eq!(gt_vertices(&rats(&[2, 1, 0])).unwrap().len(), 7);
    assert_eq!(gt_vertices(&rats(&[1, 0])).unwrap().len(), 2);
    assert_eq!(gt_vertices(&rats(&[0, 0, 0])).unwrap(), vec![rats(&[0, 0, 0])]);
    // Through the coordinate change they are exactly the DD vertices.
    let c = builtin(&rs("A2"), "1,2,1");
    let part = rats(&[3, 1, 0]);
    let p = c.polytope(&partition_to_weight(&part)).unwrap();
    let mut from_patterns: Vec<Vec<Rat>> = gt_vertices(&part)
        .unwrap()
        .iter()
        .map(|g| gt_change_of_coords(2, GtDirection::PatternToString, &part, g).unwrap())
        .collect();
    from_patterns.sort();
    assert_eq!(from_patterns, p.vertices().unwrap().vertices);
}

#[test]
fn fans_of_small_types() {
    assert!(string_fan(&builtin(&rs("A2"), "1,2,1")).unwrap().is_trivial());
    assert!(string_fan(&builtin(&rs("A1"), "1")).unwrap().is_trivial());
}

#[test]
fn minkowski_on_gt() {
    let c = builtin(&rs("A2"), "1,2,1");
    assert!(minkowski_test(&c, &w(&[1, 0]), &w(&[0, 1])).unwrap());
    assert!(minkowski_test(&c, &w(&[2, 1]), &w(&[2, 1])).unwrap());
}

#[test]
fn spherical_cone_of_full_chamber_is_big_cone() {
    let c = builtin(&rs("A2"), "1,2,1");
    let chamber = reduced(2, vec![vec![-1, 0], vec![0, -1]]);
    let s = spherical_limit_cone(&c, &chamber).unwrap();
    let big = ConeH::new(facet_reduce(c.big_cone().as_h()).unwrap()).unwrap();
    assert_eq!(s, big);
    let outside = reduced(2, vec![vec![1, 0]]);
    assert!(matches!(spherical_limit_cone(&c, &outside), Err(Error::ChamberViolation)));
}

#[test]
fn moment_polytope_over_a_point() {
    let a2 = rs("A2");
    let c = builtin(&a2, "1,2,1");
    let l = w(&[2, 1]);
    let p = VPolytope::new(2, vec![l.coords.clone()]);
    let q = moment_polytope_limit(&c, &p).unwrap();
    let v = dd_convert(&q).unwrap();
    let mut fiber: Vec<Vec<Rat>> = v.vertices.iter().map(|x| x[2..].to_vec()).collect();
    fiber.sort();
    assert!(v.vertices.iter().all(|x| x[..2] == l.coords[..]));
    let dual = c.polytope(&a2.dual_weight(&l)).unwrap();
    assert_eq!(fiber, dual.vertices().unwrap().vertices);
}

#[test]
fn anticanonical_reports() {
    let r = anticanonical_check(&builtin(&rs("A2"), "1,2,1")).unwrap();
    assert!(r.integral);
    let r = anticanonical_check(&builtin(&rs("C2"), "1,2,1,2")).unwrap();
    assert_eq!(r.vertices, 12);
    assert_eq!(r.reflexive, Some(true));
}

#[test]
fn tangent_cone_at_highest_weight_vertex() {
    let c = builtin(&rs("A2"), "1,2,1");
    let r = hw_tangent_cone_check(&c, &w(&[1, 1])).unwrap();
    assert!(r.matches_lambda_cone);
    assert!(r.unimodular);
    assert!(matches!(hw_tangent_cone_check(&c, &w(&[1, 0])), Err(Error::NotRegular(_))));
    let r = hw_tangent_cone_check(&builtin(&rs("A1"), "1"), &w(&[1])).unwrap();
    assert!(r.unimodular);
}

#[test]
fn cone_file_round_trip() {
    let c = builtin(&rs("C2"), "1,2,1,2");
    let text = write_cone_file(&c);
    let back = parse_cone_file(&text, "mem").unwrap();
    assert_eq!(back.cone(), c.cone());
    assert_eq!(back.word(), c.word());
    assert!(parse_cone_file("STRINGCONE v1\ntype A 2\nword 1 1 2\n", "mem").is_err());
}

#[test]
fn certification_catches_a_missing_row() {
    let a2 = rs("A2");
    let c = builtin(&a2, "1,2,1");
    assert!(certify_by_counts(&c, 2).unwrap().passed());
    let loose = StringCone::new(
        a2.clone(),
        word("1,2,1"),
        0,
        reduced(3, vec![vec![-1, 0, 0], vec![0, 0, -1]]),
        Provenance::BuiltinGtA,
    )
    .unwrap();
    let cert = certify_by_counts(&loose, 1).unwrap();
    assert!(!cert.passed());
}

#[test]
fn small_census() {
    let a2 = rs("A2");
    let words = vec![word("1,2,1"), word("2,1,2")];
    let rows = census(&a2, &words, &w(&[1, 1]), &Provider::Empirical { degree: 2 }).unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.lattice_points == 8 && r.vertices == 7 && r.integral));
}

#[test]
fn e6_suffix_cone_shape() {
    let e6 = rs("E6");
    let d5 = e6.parabolic_longest_word(&[1, 2, 3, 4, 5]);
    let full = d5.concat(&ReducedWord::new(E6_SUFFIX.to_vec()));
    let c = e6_suffix_cone(&e6, &full).unwrap();
    assert_eq!(c.dim(), 16);
    assert_eq!(c.offset(), 20);
    assert_eq!(c.provenance(), &Provenance::BuiltinE6Suffix);
}

#[test]
fn rational_weights_allowed() {
    let c = builtin(&rs("A2"), "1,2,1");
    let half = Weight::new(parse_rat_vec("1/2,1/2").unwrap());
    let p = c.polytope(&half).unwrap();
    assert!(!p.is_integral().unwrap());
}
