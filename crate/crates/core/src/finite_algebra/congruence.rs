use thiserror::Error;

use super::hom::MonoidHom;
use super::monoid::FiniteMonoid;

/// A congruence on a finite monoid: an equivalence relation compatible
/// with multiplication on both sides, stored as a class-id array with ids
/// contiguous from 0 in order of first occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    monoid: FiniteMonoid,
    class_of: Vec<usize>,
    class_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("seed pair ({a},{b}) out of range for size {size}")]
    PairOutOfRange { a: usize, b: usize, size: usize },
}

impl Congruence {
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Members of each class, ascending within a class.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Same partition of the same carrier, ignoring id labels.
    pub fn same_partition(&self, other: &Congruence) -> bool {
        self.class_of.len() == other.class_of.len()
            && normalize_class_ids(&self.class_of) == normalize_class_ids(&other.class_of)
    }
}

/// Relabel class ids by first occurrence so equal partitions compare equal.
pub(crate) fn normalize_class_ids(raw: &[usize]) -> Vec<usize> {
    let mut rename: Vec<Option<usize>> = vec![None; raw.len()];
    let mut next = 0;
    raw.iter()
        .map(|&c| {
            *rename[c].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        })
        .collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Union by smaller root index so representatives stay minimal.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Smallest congruence containing the seed pairs.
///
/// Worklist closure over a union-find partition: whenever the classes of
/// `a` and `b` merge, the pairs `(xa, xb)` and `(ax, bx)` are enqueued for
/// every element `x`. The fixpoint is closed under reflexivity, symmetry,
/// transitivity and two-sided translation.
pub fn congruence_closure(
    m: &FiniteMonoid,
    seeds: &[(usize, usize)],
) -> Result<Congruence, CongruenceError> {
    let size = m.size();
    for &(a, b) in seeds {
        if a >= size || b >= size {
            return Err(CongruenceError::PairOutOfRange { a, b, size });
        }
    }
    let mut uf = UnionFind::new(size);
    let mut work: Vec<(usize, usize)> = seeds.to_vec();
    while let Some((a, b)) = work.pop() {
        if uf.union(a, b) {
            for x in m.elements() {
                work.push((m.mul(x, a), m.mul(x, b)));
                work.push((m.mul(a, x), m.mul(b, x)));
            }
        }
    }
    let roots: Vec<usize> = (0..size).map(|x| uf.find(x)).collect();
    let class_of = normalize_class_ids(&roots);
    let class_count = class_of.iter().max().map_or(0, |&c| c + 1);
    Ok(Congruence { monoid: m.clone(), class_of, class_count })
}

/// Quotient of `m` by a congruence, together with the projection.
///
/// The class representative is the smallest member index, and the induced
/// table is computed from representatives, so the output is deterministic.
pub fn quotient_monoid(m: &FiniteMonoid, c: &Congruence) -> (FiniteMonoid, MonoidHom) {
    assert_eq!(c.monoid(), m, "congruence belongs to a different monoid");
    let k = c.class_count();
    let mut rep = vec![usize::MAX; k];
    for x in m.elements() {
        let cls = c.class_of(x);
        if rep[cls] == usize::MAX {
            rep[cls] = x;
        }
    }
    let mut table = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            table[i * k + j] = c.class_of(m.mul(rep[i], rep[j]));
        }
    }
    let q = FiniteMonoid::from_flat(k, table, c.class_of(m.identity()))
        .expect("quotient of a monoid by a congruence is a monoid");
    let proj = MonoidHom::new(m.clone(), q.clone(), c.class_ids().to_vec())
        .expect("projection onto the quotient is a homomorphism");
    (q, proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::builders::{adjoin_absorbing, cyclic_group, meet_semilattice};
    use crate::finite_algebra::monoid_isomorphism;

    #[test]
    fn empty_seeds_give_discrete_congruence() {
        let m = cyclic_group(3);
        let c = congruence_closure(&m, &[]).unwrap();
        assert_eq!(c.class_count(), 3);
        assert_eq!(c.class_ids(), &[0, 1, 2]);
    }

    #[test]
    fn closure_on_z2_with_absorbing_element() {
        // Elements 0,1 add mod 2; 2 is absorbing. Translating (1,0) by 2
        // gives (2,2), so the absorbing element stays in its own class.
        let m = adjoin_absorbing(&cyclic_group(2));
        let c = congruence_closure(&m, &[(1, 0)]).unwrap();
        assert_eq!(c.classes(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn closure_on_z4() {
        let m = cyclic_group(4);
        let c = congruence_closure(&m, &[(2, 0)]).unwrap();
        assert_eq!(c.classes(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn closure_is_idempotent() {
        let m = adjoin_absorbing(&cyclic_group(2));
        let c = congruence_closure(&m, &[(1, 0)]).unwrap();
        // Re-close using all related pairs of the output.
        let mut pairs = Vec::new();
        for x in m.elements() {
            for y in m.elements() {
                if c.class_of(x) == c.class_of(y) {
                    pairs.push((x, y));
                }
            }
        }
        let again = congruence_closure(&m, &pairs).unwrap();
        assert_eq!(again.class_ids(), c.class_ids());
    }

    #[test]
    fn quotient_by_discrete_is_isomorphic() {
        let m = cyclic_group(4);
        let c = congruence_closure(&m, &[]).unwrap();
        let (q, proj) = quotient_monoid(&m, &c);
        assert_eq!(q, m);
        assert!(proj.is_injective() && proj.is_surjective());
    }

    #[test]
    fn quotient_of_absorbing_extension_is_semilattice() {
        let m = adjoin_absorbing(&cyclic_group(2));
        let c = congruence_closure(&m, &[(1, 0)]).unwrap();
        let (q, _) = quotient_monoid(&m, &c);
        assert!(monoid_isomorphism(&q, &meet_semilattice(2)).is_some());
    }

    #[test]
    fn total_congruence_gives_trivial_quotient() {
        let m = cyclic_group(3);
        let c = congruence_closure(&m, &[(0, 1), (1, 2)]).unwrap();
        let (q, _) = quotient_monoid(&m, &c);
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn out_of_range_seed_is_an_error() {
        let m = cyclic_group(2);
        let err = congruence_closure(&m, &[(0, 7)]).unwrap_err();
        assert_eq!(err, CongruenceError::PairOutOfRange { a: 0, b: 7, size: 2 });
    }
}
