//! Builders for the standard complexes: simplices, boundaries, horns,
//! spines, nerves of codiscrete groupoids, the walking equivalence, and
//! the mono-detecting coskeletal complexes.

use crate::colimits::{coproduct, quotient};
use crate::delta::{enumerate_monotone, Monotone};
use crate::error::{EngineError, Result};
use crate::smap::SimplicialMap;
use crate::sset::{Extension, SimplicialSet};

/// Build a complex whose m-cells are the monotone words `[m] -> [n]`
/// satisfying `keep`, with operators given by composition.
fn from_words<F>(n: usize, cap: usize, keep: F) -> SimplicialSet
where
    F: Fn(&Monotone) -> bool,
{
    let mut cells: Vec<Vec<Monotone>> = Vec::with_capacity(cap + 1);
    for m in 0..=cap {
        cells.push(enumerate_monotone(m, n).into_iter().filter(&keep).collect());
    }
    let ids: Vec<Vec<String>> = cells
        .iter()
        .map(|level| level.iter().map(|w| w.word()).collect())
        .collect();
    let index = |m: usize, w: &Monotone| -> usize {
        cells[m].iter().position(|v| v == w).expect("operator image escapes the complex")
    };
    let faces: Vec<Vec<Vec<usize>>> = (0..=cap)
        .map(|m| {
            if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        cells[m]
                            .iter()
                            .map(|w| index(m - 1, &w.compose(&Monotone::face(m, i))))
                            .collect()
                    })
                    .collect()
            }
        })
        .collect();
    let degens: Vec<Vec<Vec<usize>>> = (0..cap)
        .map(|m| {
            (0..=m)
                .map(|i| {
                    cells[m]
                        .iter()
                        .map(|w| index(m + 1, &w.compose(&Monotone::degeneracy(m, i))))
                        .collect()
                })
                .collect()
        })
        .collect();
    SimplicialSet::new(ids, faces, degens, Extension::Skeletal).expect("word complex invalid")
}

/// The standard n-simplex, stored through `max(n, cap)`.
pub fn delta(n: usize, cap: usize) -> SimplicialSet {
    from_words(n, cap.max(n), |_| true)
}

/// Boundary of the n-simplex: the non-surjective words.
pub fn boundary(n: usize, cap: usize) -> SimplicialSet {
    if n == 0 {
        // empty complex
        return SimplicialSet::new(vec![Vec::new()], vec![Vec::new()], Vec::new(), Extension::Skeletal)
            .expect("empty complex invalid");
    }
    from_words(n, cap.max(n.saturating_sub(1)), |w| !w.is_surjective())
}

/// The horn missing the k-th face: words avoiding some vertex other than k.
pub fn horn(n: usize, k: usize, cap: usize) -> Result<SimplicialSet> {
    if n == 0 || k > n {
        return Err(EngineError::Precondition(format!(
            "horn({n},{k}) needs n >= 1 and 0 <= k <= n"
        )));
    }
    Ok(from_words(n, cap.max(n.saturating_sub(1)), |w| {
        (0..=n).any(|j| j != k && !w.values.contains(&j))
    }))
}

/// Spine of the t-simplex: the union of the edges `[i, i+1]`.
pub fn spine(t: usize, cap: usize) -> SimplicialSet {
    from_words(t, cap.max(1), |w| {
        let lo = *w.values.first().unwrap();
        let hi = *w.values.last().unwrap();
        hi - lo <= 1
    })
}

/// Nerve of the codiscrete groupoid on t+1 objects: the 0-coskeleton of a
/// (t+1)-point set, stored at cap 1.
pub fn j_nerve(t: usize) -> SimplicialSet {
    let ids0: Vec<String> = (0..=t).map(|v| v.to_string()).collect();
    let mut ids1 = Vec::with_capacity((t + 1) * (t + 1));
    for a in 0..=t {
        for b in 0..=t {
            ids1.push(format!("{a}.{b}"));
        }
    }
    let n = t + 1;
    let d0: Vec<usize> = (0..n * n).map(|c| c % n).collect();
    let d1: Vec<usize> = (0..n * n).map(|c| c / n).collect();
    let s0: Vec<usize> = (0..n).map(|v| v * n + v).collect();
    SimplicialSet::new(
        vec![ids0, ids1],
        vec![Vec::new(), vec![d0, d1]],
        vec![vec![s0]],
        Extension::Coskeletal,
    )
    .expect("codiscrete nerve invalid")
}

/// Terminal object as a lean (0-coskeletal) complex.
pub fn point_lean() -> SimplicialSet {
    j_nerve(0)
}

/// Discrete complex on the given labels, 1-coskeletal.
pub fn discrete_lean(labels: &[&str]) -> SimplicialSet {
    let ids0: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let n = ids0.len();
    let ids1 = ids0.clone();
    let idt: Vec<usize> = (0..n).collect();
    SimplicialSet::new(
        vec![ids0, ids1],
        vec![Vec::new(), vec![idt.clone(), idt.clone()]],
        vec![vec![idt]],
        Extension::Coskeletal,
    )
    .expect("discrete complex invalid")
}

/// The walking equivalence H: two triangles glued along the edge opposite
/// vertex 0 of the first and vertex 2 of the second, with both edges
/// opposite vertex 1 collapsed.
pub fn walking_h() -> SimplicialSet {
    let d2 = delta(2, 2);
    let cop = coproduct(&d2, &d2).expect("coproduct of simplices");
    let x = &cop.object;
    let cell = |m: usize, id: &str| x.index_of(m, id).unwrap();
    let seeds = vec![
        // glue d_0 of the left triangle to d_2 of the right one
        (1, cell(1, "l:1.2"), cell(1, "r:0.1")),
        // collapse both edges opposite vertex 1
        (1, cell(1, "l:0.2"), cell(1, "l:0.0")),
        (1, cell(1, "r:0.2"), cell(1, "r:0.0")),
    ];
    quotient(x, &seeds, Extension::Skeletal)
        .expect("walking equivalence quotient")
        .object
}

/// Circle model: the 1-simplex with both endpoints identified.
pub fn circle() -> SimplicialSet {
    let d1 = delta(1, 2);
    let v0 = d1.index_of(0, "0").unwrap();
    let v1 = d1.index_of(0, "1").unwrap();
    quotient(&d1, &[(0, v0, v1)], Extension::Skeletal)
        .expect("circle quotient")
        .object
}

/// The n-coskeletal complex classifying functions on n-cells valued in a
/// two-element set: `(R_n 2)_m` is the set of functions from monotone maps
/// `[n] -> [m]` to `{0, 1}`, acting by precomposition.
pub fn r_kan_two(n: usize) -> SimplicialSet {
    let mut ids = Vec::with_capacity(n + 1);
    let mut tables: Vec<Vec<Monotone>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        tables.push(enumerate_monotone(n, m));
    }
    for table in &tables {
        let count = 1usize << table.len();
        let level: Vec<String> = (0..count)
            .map(|bits| {
                (0..table.len())
                    .map(|j| if bits >> j & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect();
        ids.push(level);
    }
    // X(beta)(phi) = phi . (beta . -)
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
    let faces: Vec<Vec<Vec<usize>>> = (0..=n)
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
    let degens: Vec<Vec<Vec<usize>>> = (0..n)
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
    SimplicialSet::new(ids, faces, degens, Extension::Coskeletal).expect("R_n 2 invalid")
}

/// The Yoneda map `Delta^n -> X` classified by an n-cell of X.
pub fn yoneda_map(x: &SimplicialSet, n: usize, cell: usize) -> Result<SimplicialMap> {
    let xr = x.realized_to(n);
    let dn = delta(n, n);
    let components: Vec<Vec<usize>> = (0..=n)
        .map(|m| {
            enumerate_monotone(m, n)
                .iter()
                .map(|alpha| xr.apply(alpha, cell))
                .collect()
        })
        .collect();
    SimplicialMap::new(dn, xr, components)
}

/// Inclusion of one word complex into another with the same id scheme.
pub fn word_inclusion(sub: &SimplicialSet, ambient: &SimplicialSet) -> Result<SimplicialMap> {
    let w = sub.cap().min(ambient.cap());
    let components: Vec<Vec<usize>> = (0..=w)
        .map(|m| {
            (0..sub.cell_count(m))
                .map(|c| {
                    ambient
                        .index_of(m, sub.id(m, c))
                        .expect("subcomplex id missing from ambient complex")
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(sub.truncated(w), ambient.truncated(w), components)
}

/// Canonical map to the lean point.
pub fn map_to_point(x: &SimplicialSet) -> SimplicialMap {
    let p = point_lean().realized_to(x.cap());
    let components = (0..=x.cap()).map(|m| vec![0usize; x.cell_count(m)]).collect();
    SimplicialMap::new(x.clone(), p, components).expect("terminal map invalid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Delta(usize),
    Boundary(usize),
    Horn(usize, usize),
    Spine(usize),
    JNerve(usize),
    WalkingH,
    RKanTwo(usize),
}

pub fn build_standard(kind: StandardKind, cap: usize) -> Result<SimplicialSet> {
    match kind {
        StandardKind::Delta(n) => Ok(delta(n, cap)),
        StandardKind::Boundary(n) => Ok(boundary(n, cap)),
        StandardKind::Horn(n, k) => horn(n, k, cap),
        StandardKind::Spine(t) => Ok(spine(t, cap)),
        StandardKind::JNerve(t) => Ok(j_nerve(t)),
        StandardKind::WalkingH => Ok(walking_h()),
        StandardKind::RKanTwo(n) => Ok(r_kan_two(n)),
    }
}
