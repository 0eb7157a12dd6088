use thiserror::Error;

use super::monoid::FiniteMonoid;

/// A finite abelian group: a commutative monoid in which every element has
/// an inverse. The inverse table is computed and certified at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    base: FiniteMonoid,
    inverse: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not commutative: {x}*{y} != {y}*{x}")]
    NotCommutative { x: usize, y: usize },
    #[error("element {x} has no inverse")]
    NoInverse { x: usize },
}

impl FiniteAbelianGroup {
    pub fn new(base: FiniteMonoid) -> Result<Self, GroupError> {
        for x in base.elements() {
            for y in x + 1..base.size() {
                if base.mul(x, y) != base.mul(y, x) {
                    return Err(GroupError::NotCommutative { x, y });
                }
            }
        }
        let mut inverse = Vec::with_capacity(base.size());
        for x in base.elements() {
            match base.elements().find(|&y| base.mul(x, y) == base.identity()) {
                Some(y) => inverse.push(y),
                None => return Err(GroupError::NoInverse { x }),
            }
        }
        Ok(FiniteAbelianGroup { base, inverse })
    }

    /// The cyclic group of order `n` written additively, identity `0`.
    pub fn cyclic(n: usize) -> Self {
        Self::new(super::builders::cyclic_group(n)).expect("cyclic tables are abelian groups")
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn identity(&self) -> usize {
        self.base.identity()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.base.mul(a, b)
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.base.elements()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::builders::{cyclic_group, meet_semilattice};

    #[test]
    fn z2_is_a_group_with_identity_inverses() {
        let g = FiniteAbelianGroup::new(cyclic_group(2)).unwrap();
        assert_eq!(g.inverse(0), 0);
        assert_eq!(g.inverse(1), 1);
    }

    #[test]
    fn semilattice_has_no_inverses() {
        let err = FiniteAbelianGroup::new(meet_semilattice(2)).unwrap_err();
        assert_eq!(err, GroupError::NoInverse { x: 1 });
    }

    #[test]
    fn z4_inverse_table() {
        let g = FiniteAbelianGroup::cyclic(4);
        assert_eq!(g.inverse(1), 3);
        assert_eq!(g.inverse(2), 2);
    }
}
