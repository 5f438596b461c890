//! Exhaustive enumeration of simplicial maps by backtracking over
//! truncated degreewise assignments. Degenerate cells never branch: their
//! values are forced by lower degrees. Enumeration order is deterministic
//! (degrees outside in, cells and candidates in canonical index order).

use crate::error::{Budget, EngineError, Result};
use crate::smap::SimplicialMap;
use crate::sset::{Extension, SimplicialSet};

/// Per-cell constraints for a map search. `forced[m]` maps a source cell to
/// its required value; `fibers[m]`, when present, restricts the value of
/// every cell of degree m to the given per-cell candidate list.
#[derive(Default, Clone)]
pub struct Constraints {
    pub forced: Vec<Vec<Option<usize>>>,
    pub fibers: Vec<Option<Vec<Vec<usize>>>>,
}

impl Constraints {
    pub fn none(bound: usize) -> Self {
        Constraints {
            forced: vec![Vec::new(); bound + 1],
            fibers: vec![None; bound + 1],
        }
    }

    pub fn force(&mut self, m: usize, cell: usize, value: usize) -> Result<()> {
        if self.forced[m].is_empty() {
            // lazily sized by the caller via ensure_sized
            return Err(EngineError::Invalid("constraints not sized".into()));
        }
        match self.forced[m][cell] {
            Some(v) if v != value => Err(EngineError::Invalid(format!(
                "conflicting forced values for cell {cell} of degree {m}"
            ))),
            _ => {
                self.forced[m][cell] = Some(value);
                Ok(())
            }
        }
    }

    pub fn ensure_sized(&mut self, source: &SimplicialSet, bound: usize) {
        for m in 0..=bound {
            if self.forced[m].is_empty() {
                self.forced[m] = vec![None; source.cell_count(m)];
            }
        }
    }
}

/// The degree that determines maps `x -> y` together with how the map
/// extends beyond it. Errors when neither endpoint policy gives a bound.
pub fn hom_bound(x: &SimplicialSet, y: &SimplicialSet) -> Result<usize> {
    match (x.extension(), y.extension()) {
        (Extension::Skeletal, Extension::Skeletal) => {
            let s = x.top_nondegenerate_degree();
            match y.detect_coskeletal_degree() {
                Some(c) => Ok(s.min(c)),
                None => Ok(s),
            }
        }
        (Extension::Skeletal, Extension::Coskeletal) => {
            Ok(x.top_nondegenerate_degree().min(y.cap()))
        }
        (Extension::Coskeletal, Extension::Coskeletal) => Ok(y.cap()),
        (Extension::Coskeletal, Extension::Skeletal) => match y.detect_coskeletal_degree() {
            Some(c) => Ok(c),
            None => Err(EngineError::NoFiniteBound(
                "maps from a coskeletal object into a skeletal one with no detectable \
                 coskeletal degree"
                    .into(),
            )),
        },
    }
}

/// Enumerate all degreewise assignments `0..=bound` commuting with the
/// operators in that window and satisfying the constraints. Stops early
/// after `limit` solutions when given.
pub fn enumerate_truncated(
    source: &SimplicialSet,
    target: &SimplicialSet,
    bound: usize,
    constraints: &Constraints,
    budget: &Budget,
    limit: Option<usize>,
) -> Result<Vec<Vec<Vec<usize>>>> {
    let source = source.realized_to(bound);
    let target = target.realized_to(bound);
    let mut solutions = Vec::new();
    let mut partial: Vec<Vec<usize>> = Vec::new();
    search_degree(
        &source,
        &target,
        bound,
        constraints,
        budget,
        limit,
        &mut partial,
        &mut solutions,
    )?;
    Ok(solutions)
}

#[allow(clippy::too_many_arguments)]
fn search_degree(
    source: &SimplicialSet,
    target: &SimplicialSet,
    bound: usize,
    constraints: &Constraints,
    budget: &Budget,
    limit: Option<usize>,
    partial: &mut Vec<Vec<usize>>,
    solutions: &mut Vec<Vec<Vec<usize>>>,
) -> Result<bool> {
    let m = partial.len();
    if m > bound {
        solutions.push(partial.clone());
        return Ok(limit.is_some_and(|l| solutions.len() >= l));
    }
    let n = source.cell_count(m);
    let mut level = vec![usize::MAX; n];
    search_cell(
        source,
        target,
        bound,
        constraints,
        budget,
        limit,
        partial,
        &mut level,
        0,
        solutions,
    )
}

#[allow(clippy::too_many_arguments)]
fn search_cell(
    source: &SimplicialSet,
    target: &SimplicialSet,
    bound: usize,
    constraints: &Constraints,
    budget: &Budget,
    limit: Option<usize>,
    partial: &mut Vec<Vec<usize>>,
    level: &mut Vec<usize>,
    c: usize,
    solutions: &mut Vec<Vec<Vec<usize>>>,
) -> Result<bool> {
    let m = partial.len();
    if c == level.len() {
        // check degeneracy commutation from degree m-1 into m
        if m >= 1 {
            for x in 0..source.cell_count(m - 1) {
                for i in 0..m {
                    if level[source.degeneracy(m - 1, i, x)]
                        != target.degeneracy(m - 1, i, partial[m - 1][x])
                    {
                        return Ok(false);
                    }
                }
            }
        }
        partial.push(level.clone());
        let stop = search_degree(
            source,
            target,
            bound,
            constraints,
            budget,
            limit,
            partial,
            solutions,
        )?;
        partial.pop();
        return Ok(stop);
    }
    fn accept(
        source: &SimplicialSet,
        target: &SimplicialSet,
        constraints: &Constraints,
        partial: &[Vec<usize>],
        m: usize,
        c: usize,
        cand: usize,
    ) -> bool {
        if m >= 1 {
            for i in 0..=m {
                if target.face(m, i, cand) != partial[m - 1][source.face(m, i, c)] {
                    return false;
                }
            }
        }
        if let Some(Some(v)) = constraints.forced.get(m).and_then(|v| v.get(c)) {
            if *v != cand {
                return false;
            }
        }
        if let Some(Some(fibers)) = constraints.fibers.get(m) {
            if !fibers[c].contains(&cand) {
                return false;
            }
        }
        true
    }
    // degenerate cells are forced by lower degrees
    if m >= 1 {
        for i in 0..m {
            let down = source.face(m, i, c);
            if source.degeneracy(m - 1, i, down) == c {
                let forced = target.degeneracy(m - 1, i, partial[m - 1][down]);
                budget.spend(1, "map search")?;
                if !accept(source, target, constraints, partial, m, c, forced) {
                    return Ok(false);
                }
                level[c] = forced;
                let stop = search_cell(
                    source,
                    target,
                    bound,
                    constraints,
                    budget,
                    limit,
                    partial,
                    level,
                    c + 1,
                    solutions,
                )?;
                level[c] = usize::MAX;
                return Ok(stop);
            }
        }
    }
    for cand in 0..target.cell_count(m) {
        budget.spend(1, "map search")?;
        if !accept(source, target, constraints, partial, m, c, cand) {
            continue;
        }
        level[c] = cand;
        let stop = search_cell(
            source,
            target,
            bound,
            constraints,
            budget,
            limit,
            partial,
            level,
            c + 1,
            solutions,
        )?;
        level[c] = usize::MAX;
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Complete enumeration of the simplicial maps `x -> y`, in deterministic
/// order. The stored window is the determination bound of the pair.
pub fn hom_set(x: &SimplicialSet, y: &SimplicialSet, budget: &Budget) -> Result<Vec<SimplicialMap>> {
    let bound = hom_bound(x, y)?;
    hom_set_at(x, y, bound, budget)
}

pub fn hom_set_at(
    x: &SimplicialSet,
    y: &SimplicialSet,
    bound: usize,
    budget: &Budget,
) -> Result<Vec<SimplicialMap>> {
    let xr = x.realized_to(bound);
    let yr = y.realized_to(bound);
    let tables = enumerate_truncated(&xr, &yr, bound, &Constraints::none(bound), budget, None)?;
    tables
        .into_iter()
        .map(|components| SimplicialMap::new(xr.clone(), yr.clone(), components))
        .collect()
}

/// Number of simplicial maps `x -> y`.
pub fn hom_count(x: &SimplicialSet, y: &SimplicialSet, budget: &Budget) -> Result<usize> {
    Ok(hom_set(x, y, budget)?.len())
}

/// All extensions of `partial: A -> Y` along an inclusion `i: A -> B`,
/// i.e. maps `B -> Y` with `f . i = partial`.
pub fn extensions_along(
    inclusion: &SimplicialMap,
    partial: &SimplicialMap,
    budget: &Budget,
) -> Result<Vec<SimplicialMap>> {
    let b = inclusion.target();
    let y = partial.target();
    let bound = hom_bound(b, y)?;
    let br = b.realized_to(bound);
    let yr = y.realized_to(bound);
    let inc = inclusion.extended_to(bound)?;
    let par = partial.extended_to(bound)?;
    let mut constraints = Constraints::none(bound);
    constraints.ensure_sized(&br, bound);
    for m in 0..=bound {
        for a in 0..inc.source().cell_count(m) {
            if constraints
                .force(m, inc.component(m, a), par.component(m, a))
                .is_err()
            {
                return Ok(Vec::new());
            }
        }
    }
    let tables = enumerate_truncated(&br, &yr, bound, &constraints, budget, None)?;
    tables
        .into_iter()
        .map(|components| SimplicialMap::new(br.clone(), yr.clone(), components))
        .collect()
}
