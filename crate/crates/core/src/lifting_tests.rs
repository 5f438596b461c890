#![cfg(test)]

use crate::builders::*;
use crate::cat::*;
use crate::colimits::product;
use crate::error::Budget;
use crate::lifting::*;
use crate::smap::SimplicialMap;
use crate::solver::{hom_count, hom_set};
use crate::sset::Extension;

fn budget() -> Budget {
    Budget::default()
}

#[test]
fn lift_against_identity_is_top() {
    let b = budget();
    let n = cyclic_group(2).nerve();
    let id = SimplicialMap::identity(&delta(1, 1));
    let tops = hom_set(&delta(1, 1), &n, &b).unwrap();
    for top in tops {
        let bottom = top.clone();
        let sq = LiftingSquare::new(id.clone(), SimplicialMap::identity(&n), top.clone(), bottom)
            .unwrap();
        let fillers = solve_lifting(&sq, &b).unwrap();
        assert_eq!(fillers.len(), 1);
        assert!(fillers[0].agrees_with(&top, top.stored_cap()));
    }
}

#[test]
fn inner_horn_fillers_in_a_nerve_are_unique() {
    let b = budget();
    let n2 = chain_poset(2).nerve();
    let incl = horn_inclusion(2, 1).unwrap();
    let tops = hom_set(incl.source(), &n2, &b).unwrap();
    assert!(!tops.is_empty());
    for top in tops {
        let sq = LiftingSquare::new(
            incl.clone(),
            map_to_point(&n2),
            top,
            map_to_point(incl.target()),
        )
        .unwrap();
        assert_eq!(solve_lifting(&sq, &b).unwrap().len(), 1);
    }
}

#[test]
fn outer_horn_against_interval_fails() {
    let b = budget();
    let d1 = delta(1, 1);
    let incl = horn_inclusion(2, 0).unwrap();
    // top map: the edge 0->1 on the face 01, degenerate on 02
    let h = incl.source();
    let mut found_failure = false;
    for top in hom_set(h, &d1, &b).unwrap() {
        let sq = LiftingSquare::new(
            incl.clone(),
            map_to_point(&d1),
            top,
            map_to_point(incl.target()),
        )
        .unwrap();
        if solve_lifting(&sq, &b).unwrap().is_empty() {
            found_failure = true;
        }
    }
    assert!(found_failure);
}

#[test]
fn nerves_of_groupoids_are_kan() {
    let b = budget();
    assert!(is_kan_complex(&cyclic_group(2).nerve(), &b).unwrap());
    assert!(is_kan_complex(&j_nerve(1), &b).unwrap());
    // the interval is not Kan: witness square on an outer horn
    let rep = has_rlp(
        &map_to_point(&delta(1, 1)),
        &GeneratingSet::new(GeneratingSetKind::KanHorns, 3),
        &b,
    )
    .unwrap();
    assert!(!rep.holds);
    let w = rep.witness.unwrap();
    assert_eq!(w.left.source().nondegenerate_counts(), vec![3, 2, 0]);
}

#[test]
fn nerves_of_categories_are_quasi_categories() {
    let b = budget();
    let n1 = chain_poset(1).nerve();
    assert!(is_quasi_category(&n1, &b).unwrap());
    let rep = has_rlp(
        &map_to_point(&n1),
        &GeneratingSet::new(GeneratingSetKind::JoyalM, 4),
        &b,
    )
    .unwrap();
    assert!(rep.holds, "witness: {:?}", rep.witness.map(|w| w.describe()));
    // the idempotent monoid nerve is a quasi-category but not Kan
    let ni = idempotent_monoid().nerve();
    assert!(is_quasi_category(&ni, &b).unwrap());
    assert!(!is_kan_complex(&ni, &b).unwrap());
}

#[test]
fn classify_monomorphisms() {
    let b = budget();
    // fold map is not a monomorphism, with an R_n 2 witness
    let two = crate::colimits::coproduct(&delta(0, 0), &delta(0, 0)).unwrap().object;
    let fold = SimplicialMap::new(
        two.clone(),
        delta(0, 0),
        vec![vec![0, 0]],
    )
    .unwrap();
    let rep = classify_map(&fold, MapClass::Monomorphism, &b).unwrap();
    assert!(!rep.verdict);
    assert!(rep.witness.is_some());
    // boundary inclusion is one
    let rep = classify_map(&boundary_inclusion(2).unwrap(), MapClass::Monomorphism, &b).unwrap();
    assert!(rep.verdict);
}

#[test]
fn classify_kan_fibration() {
    let b = budget();
    let rep = classify_map(&map_to_point(&cyclic_group(3).nerve()), MapClass::KanFibration, &b)
        .unwrap();
    assert!(rep.verdict);
    // categorical fibration classification refuses non-quasi-categories
    let err = classify_map(
        &map_to_point(&boundary(2, 2).coskeleton(2)),
        MapClass::CategoricalFibration,
        &b,
    );
    assert!(err.is_err());
}

#[test]
fn pushout_product_of_boundaries() {
    let f = boundary_inclusion(1).unwrap();
    let pp = pushout_product(&f, &f).unwrap();
    // the perimeter of the square: 4 vertices, 8 edges of which 4 nondegenerate
    assert_eq!(pp.corner.cell_count(0), 4);
    assert_eq!(pp.corner.cell_count(1), 8);
    assert_eq!(pp.corner.nondegenerate(1).len(), 4);
    // comparison map embeds into the square
    let rep = classify_map(&pp.map, MapClass::Monomorphism, &budget()).unwrap();
    assert!(rep.verdict);
    assert_eq!(pp.map.target().cell_count(1), 9);
}

#[test]
fn pushout_product_unit() {
    // (empty -> Delta^0) pp g is isomorphic to g
    let empty = boundary(0, 0);
    let unit = SimplicialMap::new(empty.clone(), delta(0, 0), vec![Vec::new()]).unwrap();
    let g = boundary_inclusion(1).unwrap();
    let pp = pushout_product(&unit, &g).unwrap();
    assert_eq!(
        pp.corner.try_isomorphic(g.source()),
        Some(true)
    );
    assert_eq!(pp.map.target().try_isomorphic(g.target()), Some(true));
}

#[test]
fn mapping_space_of_point_exponent() {
    let b = budget();
    let y = cyclic_group(2).nerve();
    let ms = mapping_space(&delta(0, 0), &y, &b).unwrap();
    assert_eq!(ms.space.try_isomorphic(&y), Some(true));
}

#[test]
fn mapping_space_examples() {
    let b = budget();
    // Hom(J^1, N(Z/2)) has 2 elements, so the mapping space has 2 vertices
    let ms = mapping_space(&j_nerve(1), &cyclic_group(2).nerve(), &b).unwrap();
    assert_eq!(ms.space.cell_count(0), 2);
    // leanness is preserved
    let ms = mapping_space(&boundary(2, 2), &cyclic_group(3).nerve(), &b).unwrap();
    let rep = ms.space.classify();
    assert!(rep.is_lean);
    assert_eq!(ms.space.cell_count(0), 9);
}

#[test]
fn pullback_power_unit() {
    let b = budget();
    // (empty -> Delta^0) gives X^{Delta^0} -> Y^{Delta^0} x_* *, i.e. p itself
    let empty = boundary(0, 0);
    let unit = SimplicialMap::new(empty.clone(), delta(0, 0), vec![Vec::new()]).unwrap();
    let p = {
        let n = cyclic_group(2).nerve();
        map_to_point(&n)
    };
    let pp = pullback_power(&unit, &p, &b).unwrap();
    assert_eq!(
        pp.map.source().try_isomorphic(p.source()),
        Some(true)
    );
    assert_eq!(pp.corner.object.try_isomorphic(p.target()), Some(true));
}

#[test]
fn r_kan_two_universal_property() {
    let b = budget();
    // maps X -> R_n 2 biject with functions on n-cells, checked by the
    // generic solver rather than the representing shortcut
    for x in [cyclic_group(2).nerve(), boundary(2, 2).coskeleton(2)] {
        for n in 0..=2usize {
            let r = r_kan_two(n);
            let count = hom_count(&x, &r, &b).unwrap();
            let xr = x.realized_to(n);
            assert_eq!(count, 1 << xr.cell_count(n), "degree {n}");
        }
    }
}

#[test]
fn unique_fillers_above_the_sweep_bound() {
    let b = budget();
    // for a c-coskeletal target, horn squares in dimension c+2 fill uniquely
    let x = cyclic_group(2).nerve();
    let c = x.cap();
    let m = c + 2;
    let incl = horn_inclusion(m, 1).unwrap();
    let tops = hom_set(incl.source(), &x, &b).unwrap();
    assert!(!tops.is_empty());
    for top in tops.iter().take(12) {
        let sq = LiftingSquare::new(
            incl.clone(),
            map_to_point(&x),
            top.clone(),
            map_to_point(incl.target()),
        )
        .unwrap();
        assert_eq!(solve_lifting(&sq, &b).unwrap().len(), 1);
    }
}

#[test]
fn exponential_law_small() {
    let b = budget();
    // Hom(Z x X, Y) = Hom(Z, Map(X, Y)) with Z = Delta^1, X = Delta^1,
    // Y = nerve(Z/2)
    let z = delta(1, 1);
    let x = delta(1, 1);
    let y = cyclic_group(2).nerve();
    let zx = product(&z, &x).unwrap();
    let lhs = hom_count(&zx.object, &y, &b).unwrap();
    let ms = mapping_space(&x, &y, &b).unwrap();
    let rhs = hom_count(&z, &ms.space, &b).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn mapping_space_is_coskeletal_extension_consistent() {
    let b = budget();
    let ms = mapping_space(&delta(1, 1), &cyclic_group(2).nerve(), &b).unwrap();
    assert_eq!(ms.space.extension(), Extension::Coskeletal);
    ms.space.validate().unwrap();
    // one degree of coskeletal extension stays degreewise finite
    let up = ms.space.realized_to(3);
    up.validate().unwrap();
}
