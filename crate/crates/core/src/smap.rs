//! Simplicial maps: degreewise functions commuting with faces and
//! degeneracies, stored up to a window and extended on demand by the
//! extension policies of their endpoints.

use crate::error::{EngineError, Result};
use crate::sset::{Extension, SimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    /// `components[m][c]` for `m <= stored_cap()`.
    components: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialSet,
        target: SimplicialSet,
        components: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let f = SimplicialMap {
            source,
            target,
            components,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(x: &SimplicialSet) -> SimplicialMap {
        let components = (0..=x.cap()).map(|m| (0..x.cell_count(m)).collect()).collect();
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            components,
        }
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    pub fn stored_cap(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, m: usize, c: usize) -> usize {
        self.components[m][c]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    fn validate(&self) -> Result<()> {
        let w = self.components.len();
        if w == 0 || w - 1 > self.source.cap() || w - 1 > self.target.cap() {
            return Err(EngineError::Invalid(
                "map window empty or exceeding endpoint caps".into(),
            ));
        }
        for m in 0..w {
            if self.components[m].len() != self.source.cell_count(m) {
                return Err(EngineError::Invalid(format!(
                    "map has {} components in degree {m}, source has {} cells",
                    self.components[m].len(),
                    self.source.cell_count(m)
                )));
            }
            for &v in &self.components[m] {
                if v >= self.target.cell_count(m) {
                    return Err(EngineError::Invalid(format!(
                        "component out of range in degree {m}"
                    )));
                }
            }
        }
        for m in 1..w {
            for c in 0..self.source.cell_count(m) {
                for i in 0..=m {
                    if self.components[m - 1][self.source.face(m, i, c)]
                        != self.target.face(m, i, self.components[m][c])
                    {
                        return Err(EngineError::Invalid(format!(
                            "map does not commute with d_{i} on cell {} of degree {m}",
                            self.source.id(m, c)
                        )));
                    }
                }
            }
        }
        for m in 0..w.saturating_sub(1) {
            for c in 0..self.source.cell_count(m) {
                for i in 0..=m {
                    if self.components[m + 1][self.source.degeneracy(m, i, c)]
                        != self.target.degeneracy(m, i, self.components[m][c])
                    {
                        return Err(EngineError::Invalid(format!(
                            "map does not commute with s_{i} on cell {} of degree {m}",
                            self.source.id(m, c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Extend the stored window to `cap`, using a skeletal source or a
    /// coskeletal target to force the higher components.
    pub fn extended_to(&self, cap: usize) -> Result<SimplicialMap> {
        if cap <= self.stored_cap() {
            return Ok(self.clone());
        }
        let source = self.source.realized_to(cap);
        let target = self.target.realized_to(cap);
        let mut components = self.components.clone();
        for m in components.len()..=cap {
            let mut level = Vec::with_capacity(source.cell_count(m));
            if self.source.extension() == Extension::Skeletal {
                for c in 0..source.cell_count(m) {
                    let (epi, k, base) = source.normal_form(m, c);
                    level.push(target.apply(&epi, components[k][base]));
                }
            } else if self.target.extension() == Extension::Coskeletal {
                for c in 0..source.cell_count(m) {
                    let want: Vec<usize> =
                        (0..=m).map(|i| components[m - 1][source.face(m, i, c)]).collect();
                    let found = (0..target.cell_count(m))
                        .find(|&t| (0..=m).all(|i| target.face(m, i, t) == want[i]));
                    match found {
                        Some(t) => level.push(t),
                        None => {
                            return Err(EngineError::Invalid(format!(
                                "no coskeletal extension for cell {} of degree {m}",
                                source.id(m, c)
                            )))
                        }
                    }
                }
            } else {
                return Err(EngineError::NoFiniteBound(
                    "map extension needs a skeletal source or a coskeletal target".into(),
                ));
            }
            components.push(level);
        }
        SimplicialMap::new(source, target, components)
    }

    /// Composition `g . self`; the intermediate objects must agree on the
    /// common window.
    pub fn then(&self, g: &SimplicialMap) -> Result<SimplicialMap> {
        let w = self.stored_cap().min(g.stored_cap());
        for m in 0..=w {
            if self.target.ids_at(m) != g.source.ids_at(m) {
                return Err(EngineError::Invalid(format!(
                    "composition endpoints disagree in degree {m}"
                )));
            }
        }
        let components = (0..=w)
            .map(|m| {
                (0..self.source.cell_count(m))
                    .map(|c| g.components[m][self.components[m][c]])
                    .collect()
            })
            .collect();
        SimplicialMap::new(
            self.source.truncated(w),
            g.target.truncated(w),
            components,
        )
    }

    pub fn agrees_with(&self, other: &SimplicialMap, through: usize) -> bool {
        (0..=through.min(self.stored_cap()).min(other.stored_cap()))
            .all(|m| self.components[m] == other.components[m])
    }

    pub fn is_injective_through(&self, bound: usize) -> Result<bool> {
        let f = self.extended_to(bound)?;
        for m in 0..=bound {
            let mut seen = vec![false; f.target.cell_count(m)];
            for &v in &f.components[m] {
                if seen[v] {
                    return Ok(false);
                }
                seen[v] = true;
            }
        }
        Ok(true)
    }

    pub fn is_surjective_through(&self, bound: usize) -> Result<bool> {
        let f = self.extended_to(bound)?;
        for m in 0..=bound {
            let mut seen = vec![false; f.target.cell_count(m)];
            for &v in &f.components[m] {
                seen[v] = true;
            }
            if seen.iter().any(|&b| !b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Human-readable one-line description, used in witness reports.
    pub fn describe(&self) -> String {
        let counts: Vec<String> = (0..=self.stored_cap())
            .map(|m| format!("{}->{}", self.source.cell_count(m), self.target.cell_count(m)))
            .collect();
        format!("map [{}]", counts.join(", "))
    }
}
