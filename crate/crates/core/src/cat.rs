//! Finite categories and groupoids given by explicit composition tables,
//! their nerves, and exhaustive functor enumeration.

use crate::error::{EngineError, Result};
use crate::smap::SimplicialMap;
use crate::sset::{Extension, SimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub identity: Vec<usize>,
    /// `compose[g][f] = Some(g . f)` when `tgt(f) = src(g)`.
    pub compose: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    pub fn new(
        name: &str,
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let cat = FiniteCategory {
            name: name.to_string(),
            objects,
            arrows,
            identity,
            compose,
        };
        cat.validate()?;
        Ok(cat)
    }

    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    fn validate(&self) -> Result<()> {
        let n = self.arrows.len();
        if self.identity.len() != self.objects.len() {
            return Err(EngineError::Invalid("identity table length mismatch".into()));
        }
        for (o, &i) in self.identity.iter().enumerate() {
            if self.arrows[i].src != o || self.arrows[i].tgt != o {
                return Err(EngineError::Invalid(format!(
                    "identity of {} has wrong endpoints",
                    self.objects[o]
                )));
            }
        }
        for g in 0..n {
            for f in 0..n {
                let defined = self.arrows[f].tgt == self.arrows[g].src;
                match self.compose[g][f] {
                    Some(h) => {
                        if !defined {
                            return Err(EngineError::Invalid(format!(
                                "composite {}.{} defined on non-composable arrows",
                                self.arrows[g].name, self.arrows[f].name
                            )));
                        }
                        if self.arrows[h].src != self.arrows[f].src
                            || self.arrows[h].tgt != self.arrows[g].tgt
                        {
                            return Err(EngineError::Invalid(format!(
                                "composite {}.{} has wrong endpoints",
                                self.arrows[g].name, self.arrows[f].name
                            )));
                        }
                    }
                    None => {
                        if defined {
                            return Err(EngineError::Invalid(format!(
                                "missing composite {}.{}",
                                self.arrows[g].name, self.arrows[f].name
                            )));
                        }
                    }
                }
            }
        }
        // unit laws
        for f in 0..n {
            let src_id = self.identity[self.arrows[f].src];
            let tgt_id = self.identity[self.arrows[f].tgt];
            if self.compose[f][src_id] != Some(f) || self.compose[tgt_id][f] != Some(f) {
                return Err(EngineError::Invalid(format!(
                    "unit law fails at {}",
                    self.arrows[f].name
                )));
            }
        }
        // associativity, exhaustively
        for f in 0..n {
            for g in 0..n {
                if self.arrows[f].tgt != self.arrows[g].src {
                    continue;
                }
                for h in 0..n {
                    if self.arrows[g].tgt != self.arrows[h].src {
                        continue;
                    }
                    let lhs = self.compose[h][self.compose[g][f].unwrap()];
                    let rhs = self.compose[self.compose[h][g].unwrap()][f];
                    if lhs != rhs {
                        return Err(EngineError::Invalid(format!(
                            "associativity fails at ({}, {}, {})",
                            self.arrows[h].name, self.arrows[g].name, self.arrows[f].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.arrows.len()).all(|f| {
            (0..self.arrows.len()).any(|g| {
                self.arrows[g].src == self.arrows[f].tgt
                    && self.arrows[g].tgt == self.arrows[f].src
                    && self.compose[g][f] == Some(self.identity[self.arrows[f].src])
                    && self.compose[f][g] == Some(self.identity[self.arrows[f].tgt])
            })
        })
    }

    pub fn has_nonidentity_iso(&self) -> bool {
        (0..self.arrows.len()).any(|f| {
            !self.is_identity_arrow(f)
                && (0..self.arrows.len()).any(|g| {
                    self.compose[g][f] == Some(self.identity[self.arrows[f].src])
                        && self.compose[f][g] == Some(self.identity[self.arrows[f].tgt])
                })
        })
    }

    fn is_identity_arrow(&self, f: usize) -> bool {
        self.identity[self.arrows[f].src] == f && self.arrows[f].src == self.arrows[f].tgt
    }

    /// Composable chains of length m, as arrow index vectors.
    pub fn chains(&self, m: usize) -> Vec<Vec<usize>> {
        if m == 0 {
            return (0..self.objects.len()).map(|o| vec![o]).collect();
        }
        let mut out: Vec<Vec<usize>> = self.arrows.iter().enumerate().map(|(i, _)| vec![i]).collect();
        for _ in 1..m {
            let mut next = Vec::new();
            for chain in &out {
                let last = *chain.last().unwrap();
                for (g, arr) in self.arrows.iter().enumerate() {
                    if arr.src == self.arrows[last].tgt {
                        let mut c = chain.clone();
                        c.push(g);
                        next.push(c);
                    }
                }
            }
            out = next;
        }
        out
    }

    /// The nerve, stored at cap 2 with coskeletal extension (nerves of
    /// categories are 2-coskeletal).
    pub fn nerve(&self) -> SimplicialSet {
        let ids0: Vec<String> = self.objects.clone();
        let ids1: Vec<String> = self.arrows.iter().map(|a| a.name.clone()).collect();
        let pairs: Vec<(usize, usize)> = {
            let mut v = Vec::new();
            for (f, af) in self.arrows.iter().enumerate() {
                for (g, ag) in self.arrows.iter().enumerate() {
                    if af.tgt == ag.src {
                        v.push((f, g));
                    }
                }
            }
            v
        };
        let ids2: Vec<String> = pairs
            .iter()
            .map(|&(f, g)| format!("{},{}", self.arrows[f].name, self.arrows[g].name))
            .collect();
        let pair_index = |f: usize, g: usize| pairs.iter().position(|&p| p == (f, g)).unwrap();
        // degree 1 operators
        let d0_1: Vec<usize> = self.arrows.iter().map(|a| a.tgt).collect();
        let d1_1: Vec<usize> = self.arrows.iter().map(|a| a.src).collect();
        let s0_0: Vec<usize> = self.identity.clone();
        // degree 2 operators: cell (f, g) is the chain src f -> tgt f -> tgt g
        let d0_2: Vec<usize> = pairs.iter().map(|&(_, g)| g).collect();
        let d1_2: Vec<usize> = pairs.iter().map(|&(f, g)| self.compose[g][f].unwrap()).collect();
        let d2_2: Vec<usize> = pairs.iter().map(|&(f, _)| f).collect();
        let s0_1: Vec<usize> = (0..self.arrows.len())
            .map(|f| pair_index(self.identity[self.arrows[f].src], f))
            .collect();
        let s1_1: Vec<usize> = (0..self.arrows.len())
            .map(|f| pair_index(f, self.identity[self.arrows[f].tgt]))
            .collect();
        SimplicialSet::new(
            vec![ids0, ids1, ids2],
            vec![Vec::new(), vec![d0_1, d1_1], vec![d0_2, d1_2, d2_2]],
            vec![vec![s0_0], vec![s0_1, s1_1]],
            Extension::Coskeletal,
        )
        .expect("nerve invalid")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFunctor {
    pub source: FiniteCategory,
    pub target: FiniteCategory,
    pub obj_map: Vec<usize>,
    pub arr_map: Vec<usize>,
}

impl CatFunctor {
    pub fn new(
        source: FiniteCategory,
        target: FiniteCategory,
        obj_map: Vec<usize>,
        arr_map: Vec<usize>,
    ) -> Result<Self> {
        let f = CatFunctor {
            source,
            target,
            obj_map,
            arr_map,
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        for (a, arr) in self.source.arrows.iter().enumerate() {
            let fa = &self.target.arrows[self.arr_map[a]];
            if fa.src != self.obj_map[arr.src] || fa.tgt != self.obj_map[arr.tgt] {
                return Err(EngineError::Invalid(format!(
                    "functor breaks endpoints at {}",
                    arr.name
                )));
            }
        }
        for (o, &i) in self.source.identity.iter().enumerate() {
            if self.arr_map[i] != self.target.identity[self.obj_map[o]] {
                return Err(EngineError::Invalid(format!(
                    "functor breaks identity at {}",
                    self.source.objects[o]
                )));
            }
        }
        for g in 0..self.source.arrows.len() {
            for f in 0..self.source.arrows.len() {
                if let Some(h) = self.source.compose[g][f] {
                    let image = self.target.compose[self.arr_map[g]][self.arr_map[f]];
                    if image != Some(self.arr_map[h]) {
                        return Err(EngineError::Invalid(format!(
                            "functor breaks composition at ({}, {})",
                            self.source.arrows[g].name, self.source.arrows[f].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The induced map of nerves.
    pub fn nerve_map(&self) -> SimplicialMap {
        let ns = self.source.nerve();
        let nt = self.target.nerve();
        let c0: Vec<usize> = self
            .obj_map
            .iter()
            .map(|&o| nt.index_of(0, &self.target.objects[o]).unwrap())
            .collect();
        let c0 = {
            // reorder by the canonical order of ns
            let mut v = vec![0usize; ns.cell_count(0)];
            for (o, name) in self.source.objects.iter().enumerate() {
                v[ns.index_of(0, name).unwrap()] = c0[o];
            }
            v
        };
        let mut c1 = vec![0usize; ns.cell_count(1)];
        for (a, arr) in self.source.arrows.iter().enumerate() {
            c1[ns.index_of(1, &arr.name).unwrap()] = nt
                .index_of(1, &self.target.arrows[self.arr_map[a]].name)
                .unwrap();
        }
        let mut c2 = vec![0usize; ns.cell_count(2)];
        for (f, af) in self.source.arrows.iter().enumerate() {
            for (g, ag) in self.source.arrows.iter().enumerate() {
                if af.tgt != ag.src {
                    continue;
                }
                let sid = format!("{},{}", af.name, ag.name);
                let tid = format!(
                    "{},{}",
                    self.target.arrows[self.arr_map[f]].name,
                    self.target.arrows[self.arr_map[g]].name
                );
                c2[ns.index_of(2, &sid).unwrap()] = nt.index_of(2, &tid).unwrap();
            }
        }
        SimplicialMap::new(ns, nt, vec![c0, c1, c2]).expect("nerve map invalid")
    }
}

/// Exhaustively enumerate all functors `source -> target`.
pub fn enumerate_functors(source: &FiniteCategory, target: &FiniteCategory) -> Vec<CatFunctor> {
    let mut out = Vec::new();
    let nobj = source.objects.len();
    let mut obj_map = vec![0usize; nobj];
    fn assign_objects(
        source: &FiniteCategory,
        target: &FiniteCategory,
        obj_map: &mut Vec<usize>,
        o: usize,
        out: &mut Vec<CatFunctor>,
    ) {
        if o == obj_map.len() {
            let mut arr_map = vec![usize::MAX; source.arrows.len()];
            assign_arrows(source, target, obj_map, &mut arr_map, 0, out);
            return;
        }
        for t in 0..target.objects.len() {
            obj_map[o] = t;
            assign_objects(source, target, obj_map, o + 1, out);
        }
    }
    fn assign_arrows(
        source: &FiniteCategory,
        target: &FiniteCategory,
        obj_map: &[usize],
        arr_map: &mut Vec<usize>,
        a: usize,
        out: &mut Vec<CatFunctor>,
    ) {
        if a == arr_map.len() {
            if let Ok(f) = CatFunctor::new(
                source.clone(),
                target.clone(),
                obj_map.to_vec(),
                arr_map.clone(),
            ) {
                out.push(f);
            }
            return;
        }
        let arr = &source.arrows[a];
        if source.identity[arr.src] == a && arr.src == arr.tgt {
            arr_map[a] = target.identity[obj_map[arr.src]];
            assign_arrows(source, target, obj_map, arr_map, a + 1, out);
            arr_map[a] = usize::MAX;
            return;
        }
        for (t, tarr) in target.arrows.iter().enumerate() {
            if tarr.src != obj_map[arr.src] || tarr.tgt != obj_map[arr.tgt] {
                continue;
            }
            arr_map[a] = t;
            // partial composition check against already-assigned arrows
            let consistent = (0..=a).all(|b| {
                if arr_map[b] == usize::MAX {
                    return true;
                }
                [(a, b), (b, a)].iter().all(|&(g, f)| {
                    match source.compose[g][f] {
                        Some(h) if h <= a && arr_map[h] != usize::MAX => {
                            target.compose[arr_map[g]][arr_map[f]] == Some(arr_map[h])
                        }
                        _ => true,
                    }
                })
            });
            if consistent {
                assign_arrows(source, target, obj_map, arr_map, a + 1, out);
            }
            arr_map[a] = usize::MAX;
        }
    }
    assign_objects(source, target, &mut obj_map, 0, &mut out);
    out
}

// --- the shipped zoo ---------------------------------------------------

/// One-object groupoid on the cyclic group Z/n.
pub fn cyclic_group(n: usize) -> FiniteCategory {
    let objects = vec!["*".to_string()];
    let arrows: Vec<Arrow> = (0..n)
        .map(|k| Arrow {
            name: format!("g{k}"),
            src: 0,
            tgt: 0,
        })
        .collect();
    let compose: Vec<Vec<Option<usize>>> = (0..n)
        .map(|g| (0..n).map(|f| Some((g + f) % n)).collect())
        .collect();
    FiniteCategory::new(&format!("z{n}"), objects, arrows, vec![0], compose).unwrap()
}

/// One-object groupoid on Z/2 x Z/2.
pub fn klein_four() -> FiniteCategory {
    let objects = vec!["*".to_string()];
    let names = ["e", "a", "b", "c"];
    let arrows: Vec<Arrow> = names
        .iter()
        .map(|n| Arrow {
            name: n.to_string(),
            src: 0,
            tgt: 0,
        })
        .collect();
    let compose: Vec<Vec<Option<usize>>> = (0..4)
        .map(|g| (0..4).map(|f| Some(g ^ f)).collect())
        .collect();
    FiniteCategory::new("klein4", objects, arrows, vec![0], compose).unwrap()
}

/// Discrete category on n objects.
pub fn discrete_category(n: usize) -> FiniteCategory {
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let arrows: Vec<Arrow> = (0..n)
        .map(|i| Arrow {
            name: format!("id{i}"),
            src: i,
            tgt: i,
        })
        .collect();
    let compose = (0..n)
        .map(|g| (0..n).map(|f| if f == g { Some(f) } else { None }).collect())
        .collect();
    FiniteCategory::new(&format!("disc{n}"), objects, arrows, (0..n).collect(), compose).unwrap()
}

/// The poset [n] as a category: objects 0..=n, one arrow i -> j per i <= j.
pub fn chain_poset(n: usize) -> FiniteCategory {
    poset_category(
        &format!("chain{n}"),
        (0..=n).map(|i| i.to_string()).collect(),
        |i, j| i <= j,
    )
}

/// Poset category from a reflexive-transitive order predicate.
pub fn poset_category(name: &str, objects: Vec<String>, le: impl Fn(usize, usize) -> bool) -> FiniteCategory {
    let n = objects.len();
    let mut arrows = Vec::new();
    let mut arrow_of = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if le(i, j) {
                arrow_of[i][j] = Some(arrows.len());
                arrows.push(Arrow {
                    name: format!("{}<={}", objects[i], objects[j]),
                    src: i,
                    tgt: j,
                });
            }
        }
    }
    let identity: Vec<usize> = (0..n).map(|i| arrow_of[i][i].unwrap()).collect();
    let compose: Vec<Vec<Option<usize>>> = (0..arrows.len())
        .map(|g| {
            (0..arrows.len())
                .map(|f| {
                    if arrows[f].tgt == arrows[g].src {
                        arrow_of[arrows[f].src][arrows[g].tgt]
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    FiniteCategory::new(name, objects, arrows, identity, compose).unwrap()
}

/// Codiscrete groupoid on n objects: exactly one arrow per ordered pair.
pub fn codiscrete_groupoid(n: usize) -> FiniteCategory {
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let mut arrows = Vec::new();
    let mut arrow_of = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            arrow_of[i][j] = arrows.len();
            arrows.push(Arrow {
                name: format!("a{i}{j}"),
                src: i,
                tgt: j,
            });
        }
    }
    let identity: Vec<usize> = (0..n).map(|i| arrow_of[i][i]).collect();
    let compose: Vec<Vec<Option<usize>>> = (0..arrows.len())
        .map(|g| {
            (0..arrows.len())
                .map(|f| {
                    if arrows[f].tgt == arrows[g].src {
                        Some(arrow_of[arrows[f].src][arrows[g].tgt])
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    FiniteCategory::new(&format!("codisc{n}"), objects, arrows, identity, compose).unwrap()
}

/// Two-object groupoid with Z/2 automorphisms, equivalent to Z/2.
pub fn two_object_z2() -> FiniteCategory {
    let objects = vec!["p".to_string(), "q".to_string()];
    let mut arrows = Vec::new();
    let mut arrow_of = vec![vec![[0usize; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for s in 0..2 {
                arrow_of[i][j][s] = arrows.len();
                arrows.push(Arrow {
                    name: format!("f{i}{j}{s}"),
                    src: i,
                    tgt: j,
                });
            }
        }
    }
    let identity = vec![arrow_of[0][0][0], arrow_of[1][1][0]];
    let sign = |a: usize| a % 2;
    let compose: Vec<Vec<Option<usize>>> = (0..arrows.len())
        .map(|g| {
            (0..arrows.len())
                .map(|f| {
                    if arrows[f].tgt == arrows[g].src {
                        Some(arrow_of[arrows[f].src][arrows[g].tgt][(sign(f) + sign(g)) % 2])
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    FiniteCategory::new("twoz2", objects, arrows, identity, compose).unwrap()
}

/// One object, one non-trivial idempotent endomorphism.
pub fn idempotent_monoid() -> FiniteCategory {
    let objects = vec!["*".to_string()];
    let arrows = vec![
        Arrow {
            name: "id".into(),
            src: 0,
            tgt: 0,
        },
        Arrow {
            name: "e".into(),
            src: 0,
            tgt: 0,
        },
    ];
    let compose = vec![vec![Some(0), Some(1)], vec![Some(1), Some(1)]];
    FiniteCategory::new("idem", objects, arrows, vec![0], compose).unwrap()
}

/// The cospan poset x -> z <- y.
pub fn cospan_poset() -> FiniteCategory {
    poset_category(
        "cospan",
        vec!["x".into(), "y".into(), "z".into()],
        |i, j| i == j || j == 2,
    )
}

/// The span poset x <- z -> y.
pub fn span_poset() -> FiniteCategory {
    poset_category(
        "span",
        vec!["x".into(), "y".into(), "z".into()],
        |i, j| i == j || i == 2,
    )
}
