use thiserror::Error;

use super::monoid::FiniteMonoid;

/// A monoid homomorphism between two finite monoids, stored as an index
/// map of length `domain.size()`. Construction certifies that the identity
/// and all products are preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidHom {
    domain: FiniteMonoid,
    codomain: FiniteMonoid,
    map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("map has length {found}, domain has {expected} elements")]
    LengthMismatch { expected: usize, found: usize },
    #[error("map entry {entry} at index {index} is out of range")]
    EntryOutOfRange { index: usize, entry: usize },
    #[error("identity is not preserved")]
    IdentityNotPreserved,
    #[error("not a homomorphism at ({x},{y})")]
    NotHom { x: usize, y: usize },
}

impl MonoidHom {
    pub fn new(
        domain: FiniteMonoid,
        codomain: FiniteMonoid,
        map: Vec<usize>,
    ) -> Result<Self, HomError> {
        if map.len() != domain.size() {
            return Err(HomError::LengthMismatch { expected: domain.size(), found: map.len() });
        }
        for (index, &entry) in map.iter().enumerate() {
            if entry >= codomain.size() {
                return Err(HomError::EntryOutOfRange { index, entry });
            }
        }
        if map[domain.identity()] != codomain.identity() {
            return Err(HomError::IdentityNotPreserved);
        }
        for x in domain.elements() {
            for y in domain.elements() {
                if map[domain.mul(x, y)] != codomain.mul(map[x], map[y]) {
                    return Err(HomError::NotHom { x, y });
                }
            }
        }
        Ok(MonoidHom { domain, codomain, map })
    }

    /// The identity homomorphism on `m`.
    pub fn identity(m: &FiniteMonoid) -> Self {
        MonoidHom { domain: m.clone(), codomain: m.clone(), map: m.elements().collect() }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn domain(&self) -> &FiniteMonoid {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteMonoid {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.size()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain.size()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// Sorted list of codomain indices hit by the map.
    pub fn image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.map.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// Preimage of a codomain element, in ascending order.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(x, &fx)| (fx == y).then_some(x))
            .collect()
    }

    /// `other` after `self`; panics if the codomain does not match
    /// `other`'s domain.
    pub fn then(&self, other: &MonoidHom) -> MonoidHom {
        assert_eq!(
            self.codomain, other.domain,
            "composition requires matching monoids"
        );
        MonoidHom {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::builders::cyclic_group;

    #[test]
    fn identity_hom_on_z2() {
        let m = cyclic_group(2);
        let f = MonoidHom::new(m.clone(), m.clone(), vec![0, 1]).unwrap();
        assert!(f.is_injective() && f.is_surjective());
    }

    #[test]
    fn zero_morphism_is_a_hom() {
        let m = cyclic_group(2);
        let f = MonoidHom::new(m.clone(), m, vec![0, 0]).unwrap();
        assert_eq!(f.image(), vec![0]);
    }

    #[test]
    fn swap_map_does_not_preserve_identity() {
        let m = cyclic_group(2);
        let err = MonoidHom::new(m.clone(), m, vec![1, 0]).unwrap_err();
        assert_eq!(err, HomError::IdentityNotPreserved);
    }

    #[test]
    fn non_multiplicative_map_is_rejected() {
        let m = cyclic_group(4);
        // 1 |-> 1 but 2 |-> 3 breaks f(1+1) = f(1)+f(1).
        let err = MonoidHom::new(m.clone(), m, vec![0, 1, 3, 3]).unwrap_err();
        assert_eq!(err, HomError::NotHom { x: 1, y: 1 });
    }
}
