//! Arithmetic of the simplex category: monotone maps `[n] -> [m]`,
//! their epi/mono factorizations, and enumerators. Everything else in the
//! crate applies simplicial operators by factoring a monotone map into
//! elementary faces and degeneracies, so this module is the single place
//! where the simplicial identities are encoded.

/// A monotone map `[dom] -> [cod]`, stored as its list of values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monotone {
    pub values: Vec<usize>,
    pub cod: usize,
}

impl Monotone {
    pub fn new(values: Vec<usize>, cod: usize) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(values.iter().all(|&v| v <= cod));
        debug_assert!(!values.is_empty());
        Monotone { values, cod }
    }

    pub fn identity(n: usize) -> Self {
        Monotone::new((0..=n).collect(), n)
    }

    /// The elementary face `delta_i : [n-1] -> [n]` (skips `i`).
    pub fn face(n: usize, i: usize) -> Self {
        let values = (0..=n).filter(|&v| v != i).collect();
        Monotone::new(values, n)
    }

    /// The elementary degeneracy `sigma_i : [n+1] -> [n]` (repeats `i`).
    pub fn degeneracy(n: usize, i: usize) -> Self {
        let mut values = Vec::with_capacity(n + 2);
        for v in 0..=n {
            values.push(v);
            if v == i {
                values.push(v);
            }
        }
        Monotone::new(values, n)
    }

    pub fn dom(&self) -> usize {
        self.values.len() - 1
    }

    /// Composition `self . other : [other.dom] -> [self.cod]`.
    pub fn compose(&self, other: &Monotone) -> Monotone {
        debug_assert_eq!(other.cod, self.dom());
        Monotone::new(
            other.values.iter().map(|&v| self.values[v]).collect(),
            self.cod,
        )
    }

    pub fn is_identity(&self) -> bool {
        self.dom() == self.cod && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.dom() >= self.cod && {
            let mut seen = vec![false; self.cod + 1];
            for &v in &self.values {
                seen[v] = true;
            }
            seen.into_iter().all(|b| b)
        }
    }

    /// Epi-mono factorization: `self = mono . epi` with `epi` surjective
    /// onto the image and `mono` injective.
    pub fn epi_mono(&self) -> (Monotone, Monotone) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let epi_values = self
            .values
            .iter()
            .map(|v| image.iter().position(|w| w == v).unwrap())
            .collect();
        let epi = Monotone::new(epi_values, image.len() - 1);
        let mono = Monotone::new(image, self.cod);
        (epi, mono)
    }

    /// Word form of the value list, used for canonical simplex identifiers.
    pub fn word(&self) -> String {
        self.values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// All monotone maps `[dom] -> [cod]`, in lexicographic order.
pub fn enumerate_monotone(dom: usize, cod: usize) -> Vec<Monotone> {
    let mut out = Vec::new();
    let mut current = vec![0usize; dom + 1];
    loop {
        out.push(Monotone::new(current.clone(), cod));
        // next weakly increasing sequence
        let mut pos = dom + 1;
        for i in (0..=dom).rev() {
            if current[i] < cod {
                pos = i;
                break;
            }
        }
        if pos == dom + 1 {
            break;
        }
        let v = current[pos] + 1;
        for slot in current.iter_mut().skip(pos) {
            *slot = v;
        }
    }
    out
}

/// All monotone surjections `[dom] ->> [cod]`, in lexicographic order.
pub fn enumerate_epis(dom: usize, cod: usize) -> Vec<Monotone> {
    enumerate_monotone(dom, cod)
        .into_iter()
        .filter(|m| m.is_surjective())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_degeneracy_identities() {
        // d_i d_j = d_{j-1} d_i for i < j, phrased as composition in Delta:
        // delta_j . delta_i = delta_i . delta_{j-1} for i < j
        for n in 1..4usize {
            for j in 0..=n + 1 {
                for i in 0..j {
                    let lhs = Monotone::face(n + 1, j).compose(&Monotone::face(n, i));
                    let rhs = Monotone::face(n + 1, i).compose(&Monotone::face(n, j - 1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        // sigma_j . sigma_i = sigma_i . sigma_{j+1} for i <= j
        for n in 0..3usize {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = Monotone::degeneracy(n, j).compose(&Monotone::degeneracy(n + 1, i));
                    let rhs =
                        Monotone::degeneracy(n, i).compose(&Monotone::degeneracy(n + 1, j + 1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn epi_mono_factors() {
        for m in enumerate_monotone(3, 2) {
            let (epi, mono) = m.epi_mono();
            assert!(epi.is_surjective());
            assert!(mono.is_injective());
            assert_eq!(mono.compose(&epi), m);
        }
    }

    #[test]
    fn counts() {
        // |Hom([m],[n])| = C(m+n+1, m+1)
        assert_eq!(enumerate_monotone(1, 1).len(), 3);
        assert_eq!(enumerate_monotone(2, 1).len(), 4);
        assert_eq!(enumerate_monotone(2, 4).len(), 35);
        assert_eq!(enumerate_epis(2, 1).len(), 2);
        assert_eq!(enumerate_epis(4, 2).len(), 6);
    }
}
