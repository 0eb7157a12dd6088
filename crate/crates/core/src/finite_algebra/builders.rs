//! Builders for the small monoids the test corpora are made of.

use super::hom::MonoidHom;
use super::monoid::FiniteMonoid;

/// The cyclic group of order `n` written additively: `i * j = (i+j) mod n`,
/// identity `0`.
pub fn cyclic_group(n: usize) -> FiniteMonoid {
    assert!(n >= 1, "cyclic group needs at least one element");
    let table = (0..n * n).map(|ix| (ix / n + ix % n) % n).collect();
    FiniteMonoid::from_flat(n, table, 0).expect("modular addition is a monoid")
}

/// The meet-semilattice on a chain of length `n`, identity (top) at index
/// 0 and `x * y = max(x, y)`.
pub fn meet_semilattice(n: usize) -> FiniteMonoid {
    assert!(n >= 1, "chain needs at least one element");
    let table = (0..n * n).map(|ix| (ix / n).max(ix % n)).collect();
    FiniteMonoid::from_flat(n, table, 0).expect("max on a chain is a monoid")
}

/// Pair index `(i, j) -> i * b.size() + j`.
fn pair_index(b_size: usize, i: usize, j: usize) -> usize {
    i * b_size + j
}

/// Componentwise product on pairs, indexed `(i, j) -> i * |b| + j`.
pub fn direct_product(a: &FiniteMonoid, b: &FiniteMonoid) -> FiniteMonoid {
    let n = a.size() * b.size();
    let mut table = vec![0; n * n];
    for i1 in a.elements() {
        for j1 in b.elements() {
            let x = pair_index(b.size(), i1, j1);
            for i2 in a.elements() {
                for j2 in b.elements() {
                    let y = pair_index(b.size(), i2, j2);
                    table[x * n + y] = pair_index(b.size(), a.mul(i1, i2), b.mul(j1, j2));
                }
            }
        }
    }
    let identity = pair_index(b.size(), a.identity(), b.identity());
    FiniteMonoid::from_flat(n, table, identity).expect("product of monoids is a monoid")
}

pub fn product_projection_left(a: &FiniteMonoid, b: &FiniteMonoid) -> MonoidHom {
    let p = direct_product(a, b);
    let map = (0..p.size()).map(|x| x / b.size()).collect();
    MonoidHom::new(p, a.clone(), map).expect("projection is a homomorphism")
}

pub fn product_projection_right(a: &FiniteMonoid, b: &FiniteMonoid) -> MonoidHom {
    let p = direct_product(a, b);
    let map = (0..p.size()).map(|x| x % b.size()).collect();
    MonoidHom::new(p, b.clone(), map).expect("projection is a homomorphism")
}

pub fn product_injection_left(a: &FiniteMonoid, b: &FiniteMonoid) -> MonoidHom {
    let p = direct_product(a, b);
    let map = a.elements().map(|i| pair_index(b.size(), i, b.identity())).collect();
    MonoidHom::new(a.clone(), p, map).expect("injection is a homomorphism")
}

pub fn product_injection_right(a: &FiniteMonoid, b: &FiniteMonoid) -> MonoidHom {
    let p = direct_product(a, b);
    let map = b.elements().map(|j| pair_index(b.size(), a.identity(), j)).collect();
    MonoidHom::new(b.clone(), p, map).expect("injection is a homomorphism")
}

/// Adjoin a new absorbing element at index `m.size()`.
pub fn adjoin_absorbing(m: &FiniteMonoid) -> FiniteMonoid {
    let n = m.size() + 1;
    let sink = m.size();
    let mut table = vec![sink; n * n];
    for x in m.elements() {
        for y in m.elements() {
            table[x * n + y] = m.mul(x, y);
        }
    }
    FiniteMonoid::from_flat(n, table, m.identity())
        .expect("adjoining an absorbing element preserves the axioms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::monoid_isomorphism;

    #[test]
    fn cyclic_one_is_trivial() {
        assert_eq!(cyclic_group(1).size(), 1);
    }

    #[test]
    fn two_element_semilattice() {
        let h = meet_semilattice(2);
        assert_eq!(h.identity(), 0);
        assert_eq!(h.mul(1, 1), 1);
    }

    #[test]
    fn absorbing_adjunction_of_z2() {
        let m = adjoin_absorbing(&cyclic_group(2));
        assert_eq!(m.size(), 3);
        for x in m.elements() {
            assert_eq!(m.mul(x, 2), 2);
            assert_eq!(m.mul(2, x), 2);
        }
        assert_eq!(m.mul(1, 1), 0);
    }

    #[test]
    fn product_sizes_multiply_and_projections_are_homs() {
        let a = cyclic_group(2);
        let b = meet_semilattice(3);
        let p = direct_product(&a, &b);
        assert_eq!(p.size(), 6);
        let pl = product_projection_left(&a, &b);
        let pr = product_projection_right(&a, &b);
        assert!(pl.is_surjective());
        assert!(pr.is_surjective());
    }

    #[test]
    fn adjoining_absorbing_to_trivial_gives_semilattice() {
        let m = adjoin_absorbing(&cyclic_group(1));
        assert!(monoid_isomorphism(&m, &meet_semilattice(2)).is_some());
    }
}
