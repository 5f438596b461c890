#![cfg(test)]

use crate::builders::*;
use crate::cat::*;
use crate::colimits::*;
use crate::error::Budget;
use crate::smap::SimplicialMap;
use crate::solver::{hom_count, hom_set};
use crate::sset::Extension;

#[test]
fn delta_one_sizes() {
    let d1 = delta(1, 1);
    assert_eq!(d1.cell_count(0), 2);
    assert_eq!(d1.cell_count(1), 3);
    let d1 = delta(1, 4);
    // |Delta^1_m| = m + 2
    for m in 0..=4 {
        assert_eq!(d1.cell_count(m), m + 2);
    }
    d1.validate().unwrap();
}

#[test]
fn boundary_and_horn_cells() {
    let b2 = boundary(2, 2);
    assert_eq!(b2.nondegenerate_counts(), vec![3, 3, 0]);
    let h21 = horn(2, 1, 2).unwrap();
    assert_eq!(h21.nondegenerate_counts(), vec![3, 2, 0]);
    let h20 = horn(2, 0, 2).unwrap();
    assert_eq!(h20.nondegenerate_counts(), vec![3, 2, 0]);
    assert!(horn(2, 3, 2).is_err());
    let empty = boundary(0, 2);
    assert!(empty.is_empty());
}

#[test]
fn spine_of_two() {
    let sp = spine(2, 2);
    assert_eq!(sp.nondegenerate_counts(), vec![3, 2, 0]);
}

#[test]
fn walking_h_counts() {
    let h = walking_h();
    assert_eq!(h.nondegenerate_counts(), vec![2, 3, 2]);
    h.validate().unwrap();
    // skeletal extension keeps the counts stable above the cap
    let h4 = h.realized_to(4);
    assert_eq!(h4.nondegenerate_counts(), vec![2, 3, 2, 0, 0]);
}

#[test]
fn j_nerve_sizes() {
    let j1 = j_nerve(1).realized_to(3);
    for m in 0..=3 {
        assert_eq!(j1.cell_count(m), 1 << (m + 1));
        assert_eq!(j1.nondegenerate(m).len(), 2);
    }
    j1.validate().unwrap();
}

#[test]
fn r_kan_two_sizes() {
    let r0 = r_kan_two(0).realized_to(3);
    for m in 0..=3 {
        assert_eq!(r0.cell_count(m), 1 << (m + 1));
    }
    r0.validate().unwrap();
    // R_n 2 realized by the explicit functions-on-monotone-maps formula must
    // agree with its own coskeletal extension (it is n-coskeletal): compare
    // the formula object one degree above the builder cap
    let r1 = r_kan_two(1);
    let r1_direct = {
        // rebuild by the formula through degree 2 and compare degreewise
        let big = formula_r_two(1, 2);
        big
    };
    let r1_ext = r1.realized_to(2);
    assert_eq!(r1_ext.cell_count(2), r1_direct.cell_count(2));
    assert_eq!(r1_ext.try_isomorphic(&r1_direct), Some(true));
    assert_eq!(r_kan_two(2).detect_coskeletal_degree(), Some(2));
}

/// Independent oracle: the functions-on-monotone-maps formula materialized
/// through an arbitrary degree, not just the builder cap.
fn formula_r_two(n: usize, through: usize) -> crate::sset::SimplicialSet {
    use crate::delta::{enumerate_monotone, Monotone};
    let mut tables = Vec::new();
    for m in 0..=through {
        tables.push(enumerate_monotone(n, m));
    }
    let ids: Vec<Vec<String>> = tables
        .iter()
        .map(|t| {
            (0..1usize << t.len())
                .map(|bits| {
                    (0..t.len())
                        .map(|j| if bits >> j & 1 == 1 { '1' } else { '0' })
                        .collect()
                })
                .collect()
        })
        .collect();
    let transfer = |m_from: usize, m_to: usize, beta: &Monotone, bits: usize| -> usize {
        let mut out = 0usize;
        for (j, alpha) in tables[m_to].iter().enumerate() {
            let composed = beta.compose(alpha);
            let pos = tables[m_from].iter().position(|w| *w == composed).unwrap();
            if bits >> pos & 1 == 1 {
                out |= 1 << j;
            }
        }
        out
    };
    let faces: Vec<Vec<Vec<usize>>> = (0..=through)
        .map(|m| {
            if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let beta = Monotone::face(m, i);
                        (0..1usize << tables[m].len())
                            .map(|bits| transfer(m, m - 1, &beta, bits))
                            .collect()
                    })
                    .collect()
            }
        })
        .collect();
    let degens: Vec<Vec<Vec<usize>>> = (0..through)
        .map(|m| {
            (0..=m)
                .map(|i| {
                    let beta = Monotone::degeneracy(m, i);
                    (0..1usize << tables[m].len())
                        .map(|bits| transfer(m, m + 1, &beta, bits))
                        .collect()
                })
                .collect()
        })
        .collect();
    crate::sset::SimplicialSet::new(ids, faces, degens, Extension::Coskeletal).unwrap()
}

#[test]
fn j_nerve_is_coskeleton_of_points() {
    let two = coproduct(&delta(0, 0), &delta(0, 0)).unwrap().object;
    let cosk = two.coskeleton(0);
    assert_eq!(cosk.try_isomorphic(&j_nerve(1)), Some(true));
}

#[test]
fn circle_counts() {
    let c = circle();
    assert_eq!(c.nondegenerate_counts()[0], 1);
    assert_eq!(c.nondegenerate_counts()[1], 1);
}

#[test]
fn skeleton_of_delta2() {
    let sk1 = delta(2, 2).skeleton(1);
    assert_eq!(sk1.nondegenerate_counts(), vec![3, 3]);
    assert_eq!(sk1.try_isomorphic(&boundary(2, 1)), Some(true));
}

#[test]
fn coskeleton_idempotent() {
    let n = cyclic_group(2).nerve();
    let c = n.coskeleton(2);
    assert_eq!(c.try_isomorphic(&n), Some(true));
}

#[test]
fn classify_examples() {
    let j2 = j_nerve(2);
    let rep = j2.classify();
    assert!(rep.is_lean);
    assert_eq!(rep.coskeletal_degree, Some(0));

    // the nerve of a poset is the clique complex of its order relation, so
    // the exhaustive comparison bottoms out at degree 1 for a simplex; the
    // degree-2 comparison passes as well
    let d2 = delta(2, 2);
    let rep = d2.classify();
    assert!(rep.is_finite_complex);
    assert!(!rep.is_lean);
    assert_eq!(rep.coskeletal_degree, Some(1));
    assert!(d2.coskeletal_comparison_bijective(2, 3));

    let n = cyclic_group(2).nerve();
    let rep = n.classify();
    assert!(rep.is_lean);
    assert_eq!(rep.coskeletal_degree, Some(2));

    // the quotient circle happens to be 2-coskeletal (additive edge
    // labelings of cliques), but not 1-coskeletal
    let c = circle().realized_to(3);
    assert_eq!(c.classify().coskeletal_degree, Some(2));
    // boundary(3) at cap 2 is not coskeletal at any tested degree: the
    // hollow-tetrahedron tuple inflates every candidate coskeleton
    assert_eq!(boundary(3, 2).classify().coskeletal_degree, None);
}

#[test]
fn nerve_sizes() {
    let n = cyclic_group(2).nerve();
    assert_eq!(n.cell_count(0), 1);
    assert_eq!(n.cell_count(1), 2);
    assert_eq!(n.cell_count(2), 4);
    let n3 = n.realized_to(3);
    assert_eq!(n3.cell_count(3), 8);
    n3.validate().unwrap();

    let disc = discrete_category(3).nerve().realized_to(3);
    for m in 0..=3 {
        assert_eq!(disc.cell_count(m), 3);
        if m > 0 {
            assert!(disc.nondegenerate(m).is_empty());
        }
    }

    assert_eq!(
        chain_poset(1).nerve().try_isomorphic(&delta(1, 1)),
        Some(true)
    );
}

#[test]
fn product_of_intervals() {
    let d1 = delta(1, 1);
    let p = product(&d1, &d1).unwrap();
    assert_eq!(p.object.cell_count(1), 9);
    assert_eq!(p.object.nondegenerate(2).len(), 2);
    assert_eq!(p.object.nondegenerate(1).len(), 5);
    p.object.validate().unwrap();
}

#[test]
fn product_coskeletal() {
    let n2 = cyclic_group(2).nerve();
    let j1 = j_nerve(1);
    let p = product(&n2, &j1).unwrap();
    assert_eq!(p.object.extension(), Extension::Coskeletal);
    assert_eq!(p.object.cell_count(0), 2);
    assert_eq!(p.object.cell_count(1), 8);
    assert!(p.object.coskeletal_comparison_ok());
}

#[test]
fn pushout_circle() {
    // fold boundary(1) -> delta(0) against the inclusion into delta(1)
    let b1 = boundary(1, 1);
    let d1 = delta(1, 1);
    let d0 = delta(0, 1);
    let inc = word_inclusion(&b1, &d1).unwrap();
    let fold = SimplicialMap::new(
        b1.clone(),
        d0.clone(),
        (0..=1).map(|m| vec![0; b1.cell_count(m)]).collect(),
    )
    .unwrap();
    let p = pushout(&fold, &inc).unwrap();
    assert_eq!(p.object.nondegenerate_counts()[0], 1);
    assert_eq!(p.object.nondegenerate_counts()[1], 1);
    assert_eq!(p.object.try_isomorphic(&circle()), Some(true));
}

#[test]
fn pullback_over_terminal_is_product() {
    let b1 = boundary(1, 1);
    let d1 = delta(1, 1);
    let f = map_to_point(&b1);
    let g = map_to_point(&d1);
    let pb = pullback(&f, &g).unwrap();
    let pr = product(&b1, &d1).unwrap();
    assert_eq!(pb.object.try_isomorphic(&pr.object), Some(true));
}

#[test]
fn hom_set_examples() {
    let budget = Budget::default();
    // Hom(Delta^1, Delta^1) = 3 (Yoneda)
    assert_eq!(hom_count(&delta(1, 1), &delta(1, 1), &budget).unwrap(), 3);
    // Hom(boundary(2), nerve(Z/2)) = 8
    assert_eq!(
        hom_count(&boundary(2, 2), &cyclic_group(2).nerve(), &budget).unwrap(),
        8
    );
    // Hom(Delta^0, X) = vertices
    let n3 = cyclic_group(3).nerve();
    assert_eq!(hom_count(&delta(0, 0), &n3, &budget).unwrap(), 1);
    // Hom(J^1, N(Z/2)) = functors from the codiscrete groupoid = 2
    assert_eq!(
        hom_count(&j_nerve(1), &cyclic_group(2).nerve(), &budget).unwrap(),
        2
    );
}

#[test]
fn yoneda_bijection() {
    let budget = Budget::default();
    for x in [
        cyclic_group(2).nerve(),
        j_nerve(1),
        boundary(2, 2).coskeleton(2),
    ] {
        for n in 0..=2 {
            let maps = hom_set(&delta(n, n), &x, &budget).unwrap();
            let xr = x.realized_to(n);
            assert_eq!(maps.len(), xr.cell_count(n), "degree {n}");
        }
    }
}

#[test]
fn yoneda_map_is_valid() {
    let n = cyclic_group(3).nerve();
    for c in 0..n.cell_count(2) {
        let f = yoneda_map(&n, 2, c).unwrap();
        // the top cell maps to the classifying cell
        let top = f.source().index_of(2, "0.1.2").unwrap();
        assert_eq!(f.component(2, top), c);
    }
}

#[test]
fn functor_enumeration_counts() {
    // monotone maps [2] -> [2]
    let c2 = chain_poset(2);
    assert_eq!(enumerate_functors(&c2, &c2).len(), 10);
    // group homomorphisms Z/2 -> Z/3: only trivial
    assert_eq!(enumerate_functors(&cyclic_group(2), &cyclic_group(3)).len(), 1);
    // Z/2 -> Z/2: two endomorphisms
    assert_eq!(enumerate_functors(&cyclic_group(2), &cyclic_group(2)).len(), 2);
    // functors from the walking iso into Z/2: the two group elements
    assert_eq!(enumerate_functors(&codiscrete_groupoid(2), &cyclic_group(2)).len(), 2);
}

#[test]
fn category_zoo_is_valid() {
    for c in [
        cyclic_group(2),
        cyclic_group(3),
        klein_four(),
        discrete_category(3),
        chain_poset(2),
        codiscrete_groupoid(2),
        codiscrete_groupoid(3),
        two_object_z2(),
        idempotent_monoid(),
        cospan_poset(),
        span_poset(),
    ] {
        assert!(c.nerve().validate().is_ok(), "{} nerve invalid", c.name);
        assert!(c.nerve().coskeletal_comparison_ok(), "{} nerve not 2-coskeletal", c.name);
    }
    assert!(cyclic_group(2).is_groupoid());
    assert!(two_object_z2().is_groupoid());
    assert!(!idempotent_monoid().is_groupoid());
    assert!(!chain_poset(2).has_nonidentity_iso());
    assert!(codiscrete_groupoid(2).has_nonidentity_iso());
}

#[test]
fn truncated_adjunction_small() {
    // maps tr_n X -> tr_n Y biject with maps X -> cosk_n Y
    use crate::solver::enumerate_truncated;
    use crate::solver::Constraints;
    let budget = Budget::default();
    let x = boundary(2, 2);
    let y = delta(1, 2);
    for n in 0..=2 {
        let truncated = enumerate_truncated(
            &x.realized_to(n),
            &y.realized_to(n),
            n,
            &Constraints::none(n),
            &budget,
            None,
        )
        .unwrap();
        let full = hom_count(&x, &y.coskeleton(n), &budget).unwrap();
        assert_eq!(truncated.len(), full, "degree {n}");
    }
}
