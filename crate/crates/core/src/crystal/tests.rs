use std::collections::BTreeSet;

use super::*;
use crate::exactgeom::rat;
use crate::rootdata::RootSystem;
use crate::stringdata::{gt_cone, highest_weight_vertex, pi_lambda, to_rat};

fn word(s: &str) -> ReducedWord {
    s.parse().unwrap()
}

#[test]
fn crystal_sizes() {
    assert_eq!(build_crystal(&[1], 2).unwrap().len(), 3);
    assert_eq!(build_crystal(&[2, 1], 2).unwrap().len(), 8);
    assert_eq!(build_crystal(&[1, 1], 3).unwrap().len(), 6);
    assert!(matches!(build_crystal(&[1, 1, 1, 1], 2), Err(Error::ShapeTooTall { max_rows: 3 })));
}

#[test]
fn crystal_graph_shape() {
    let g = build_crystal(&[3, 1], 3).unwrap();
    let rs = RootSystem::parse("A3").unwrap();
    assert_eq!(g.len() as u64, rs.weyl_dim(&Weight::from_ints(&[2, 1, 0])).unwrap());
    assert_eq!(g.sources(), vec![0]);
    assert!(g.elements.iter().all(Tableau::is_semistandard));
    let all: BTreeSet<_> = semistandard_tableaux(&[3, 1], 4).into_iter().collect();
    let reached: BTreeSet<_> = g.elements.iter().cloned().collect();
    assert_eq!(all, reached);
    for &(from, i, to) in &g.edges {
        assert_eq!(g.elements[to].e(i).as_ref(), Some(&g.elements[from]));
    }
}

#[test]
fn signature_rule() {
    // Reading word 2 1 1 2 for i = 1: the first 2 cancels the next 1.
    let t = Tableau::new(vec![vec![1, 1, 2], vec![2]]);
    assert_eq!(t.epsilon(1), 1);
    assert_eq!(t.phi(1), 1);
    assert_eq!(t.f(1), Some(Tableau::new(vec![vec![1, 2, 2], vec![2]])));
    assert_eq!(t.e(1), Some(Tableau::new(vec![vec![1, 1, 1], vec![2]])));
    assert_eq!(t.raise_fully(1).0, 1);
}

#[test]
fn strings_anchor_at_both_ends() {
    let rs = RootSystem::parse("A3").unwrap();
    let wd = word("1,3,2,3,1,2");
    let shape = [3, 2, 1];
    let lambda = Weight::from_ints(&[1, 1, 1]);
    let top = Tableau::highest(&shape);
    assert_eq!(string_coords(&top, &wd), vec![0; 6]);
    let g = build_crystal(&shape, 3).unwrap();
    let low = g.elements.iter().find(|b| (1..=3).all(|i| b.phi(i) == 0)).unwrap();
    let q = highest_weight_vertex(&rs, &wd, &lambda).unwrap();
    assert_eq!(to_rat(&string_coords(low, &wd)), q);
}

#[test]
fn strings_are_injective_and_project_to_minus_weight() {
    let rs = RootSystem::parse("A3").unwrap();
    let lambda = Weight::from_ints(&[1, 0, 2]);
    let shape = weight_shape(&lambda).unwrap();
    assert_eq!(shape, vec![3, 2, 2]);
    for wd in [rs.standard_word(), word("2,1,3,2,3,1")] {
        let g = build_crystal(&shape, 3).unwrap();
        let mut seen = BTreeSet::new();
        for b in &g.elements {
            let s = string_coords(b, &wd);
            assert!(seen.insert(s.clone()));
            let mu = pi_lambda(&rs, &wd, &lambda, &to_rat(&s)).unwrap();
            let wt = Weight::from_ints(&b.weight(3));
            assert_eq!(mu, wt.neg());
        }
    }
}

#[test]
fn a2_strings_are_gt_lattice_points() {
    let rs = RootSystem::parse("A2").unwrap();
    let cone = gt_cone(&rs).unwrap();
    let r = crystal_lattice_check(&cone, &Weight::from_ints(&[1, 1])).unwrap();
    assert!(r.equal());
    assert_eq!(r.strings, 8);
    let r = crystal_lattice_check(&cone, &Weight::from_ints(&[0, 0])).unwrap();
    assert!(r.equal());
    assert_eq!(r.lattice_points, 1);
}

#[test]
fn weight_multiplicities() {
    let rho = Weight::from_ints(&[1, 1]);
    assert_eq!(crystal_weight_mult(&rho, &Weight::from_ints(&[0, 0])).unwrap(), 2);
    assert_eq!(crystal_weight_mult(&rho, &Weight::from_ints(&[1, 1])).unwrap(), 1);
    assert_eq!(crystal_weight_mult(&rho, &Weight::from_ints(&[1, 0])).unwrap(), 0);
    let half = Weight::new(vec![rat(1) / rat(2), rat(0)]);
    assert_eq!(crystal_weight_mult(&rho, &half).unwrap(), 0);
    let rs = RootSystem::parse("A3").unwrap();
    let l = Weight::from_ints(&[2, 0, 1]);
    for (mu, m) in rs.weight_multiplicities(&l).unwrap() {
        assert_eq!(crystal_weight_mult(&l, &mu).unwrap(), m, "μ = {mu}");
    }
}

#[test]
fn empirical_cones_of_a2() {
    let rs = RootSystem::parse("A2").unwrap();
    let std = empirical_string_cone(&rs, &word("1,2,1"), 2).unwrap();
    assert_eq!(std.cone(), gt_cone(&rs).unwrap().cone());
    let other = empirical_string_cone(&rs, &word("2,1,2"), 2).unwrap();
    // The diagram flip 1 ↔ 2 exchanges the two words and fixes the cone.
    assert_eq!(other.cone(), std.cone());
    assert!(matches!(empirical_string_cone(&rs, &word("1,2,1"), 0), Err(Error::CertificationFailed(_))));
    let c2 = RootSystem::parse("C2").unwrap();
    assert!(empirical_string_cone(&c2, &word("1,2,1,2"), 2).is_err());
}

#[test]
fn dump_lists_every_tableau() {
    let d = crystal_dump(&Weight::from_ints(&[1, 1]), &[word("1,2,1"), word("2,1,2")]).unwrap();
    assert_eq!(d.len(), 8);
    assert_eq!(d[0].strings[0], ("1,2,1".to_string(), vec![0, 0, 0]));
    assert!(serde_json::to_string(&d).is_ok());
}
