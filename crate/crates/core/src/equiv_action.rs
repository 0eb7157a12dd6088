//! Admissible equivalence relations on `N x H` and compatible actions.
//!
//! An equivalence relation on the pairs is *admissible* when
//!
//! 1. `(n,1) ~ (n',1)` implies `n = n'`,
//! 2. `(n,h) ~ (n',h')` implies `h = h'`,
//! 3. `(n,h) ~ (n',h)` implies `(xn,h) ~ (xn',h)` for all `x` in `N`,
//! 4. `(n,h) ~ (n',h)` implies `(n,hx) ~ (n',hx)` for all `x` in `H`.
//!
//! A map `phi: H x N -> N` is *compatible* with an admissible relation when
//! the six class-level action identities hold (see [`is_compatible`]). Both
//! structures are extracted from a cosetal extension by solving directly in
//! the total monoid: `E` relates `(n,h)` and `(n',h')` when
//! `k(n)s(h) = k(n')s(h')`, and `phi(h,n)` is the smallest `m` with
//! `k(m)s(h) = s(h)k(n)`. Neither depends on the section chosen, the
//! action only up to class-level equivalence.

use thiserror::Error;

use crate::extensions::{CosetalExtension, Section};
use crate::finite_algebra::{FiniteAbelianGroup, FiniteMonoid};

/// An equivalence relation on `N x H`, stored as a class-id array over the
/// flat index `n * h_size + h`, ids contiguous from 0 in order of first
/// occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPartition {
    n_size: usize,
    h_size: usize,
    class_of: Vec<usize>,
    class_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("class array has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

impl PairPartition {
    /// Build from a raw class-id array; ids are relabelled to be
    /// contiguous from 0 by first occurrence.
    pub fn new(n_size: usize, h_size: usize, raw: Vec<usize>) -> Result<Self, PartitionError> {
        if raw.len() != n_size * h_size {
            return Err(PartitionError::LengthMismatch {
                expected: n_size * h_size,
                found: raw.len(),
            });
        }
        let mut rename = std::collections::HashMap::new();
        let mut class_of = Vec::with_capacity(raw.len());
        for &c in &raw {
            let next = rename.len();
            class_of.push(*rename.entry(c).or_insert(next));
        }
        let class_count = rename.len();
        Ok(PairPartition { n_size, h_size, class_of, class_count })
    }

    /// The partition into singletons.
    pub fn discrete(n_size: usize, h_size: usize) -> Self {
        PairPartition {
            n_size,
            h_size,
            class_of: (0..n_size * h_size).collect(),
            class_count: n_size * h_size,
        }
    }

    pub fn n_size(&self) -> usize {
        self.n_size
    }

    pub fn h_size(&self) -> usize {
        self.h_size
    }

    #[inline]
    pub fn class_of(&self, n: usize, h: usize) -> usize {
        self.class_of[n * self.h_size + h]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    #[inline]
    pub fn related(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        self.class_of(a.0, a.1) == self.class_of(b.0, b.1)
    }

    /// Members `(n, h)` of each class, ascending by flat index.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.class_count];
        for n in 0..self.n_size {
            for h in 0..self.h_size {
                out[self.class_of(n, h)].push((n, h));
            }
        }
        out
    }

    /// Smallest flat-index member of a class.
    pub fn representative(&self, class: usize) -> (usize, usize) {
        let flat = self
            .class_of
            .iter()
            .position(|&c| c == class)
            .expect("class id in range");
        (flat / self.h_size, flat % self.h_size)
    }
}

/// The first admissibility condition that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AdmissibilityViolation {
    #[error("condition 1: ({n},1) ~ ({n_prime},1) with distinct kernel parts")]
    UnitColumnMerged { n: usize, n_prime: usize },
    #[error("condition 2: ({n},{h}) ~ ({n_prime},{h_prime}) across fibres")]
    CrossFiber { n: usize, h: usize, n_prime: usize, h_prime: usize },
    #[error("condition 3: left translation by {x} breaks ({n},{h}) ~ ({n_prime},{h})")]
    LeftTranslation { n: usize, n_prime: usize, h: usize, x: usize },
    #[error("condition 4: right translation by {x} breaks ({n},{h}) ~ ({n_prime},{h})")]
    RightTranslation { n: usize, n_prime: usize, h: usize, x: usize },
}

/// Check the four admissibility conditions exhaustively.
pub fn is_admissible(
    e: &PairPartition,
    n_grp: &FiniteAbelianGroup,
    h_mon: &FiniteMonoid,
) -> Result<(), AdmissibilityViolation> {
    assert_eq!(e.n_size(), n_grp.size(), "partition does not fit the kernel");
    assert_eq!(e.h_size(), h_mon.size(), "partition does not fit the quotient");
    let one_h = h_mon.identity();
    for n in n_grp.elements() {
        for n_prime in n + 1..n_grp.size() {
            if e.related((n, one_h), (n_prime, one_h)) {
                return Err(AdmissibilityViolation::UnitColumnMerged { n, n_prime });
            }
        }
    }
    for n in n_grp.elements() {
        for h in h_mon.elements() {
            for n_prime in n_grp.elements() {
                for h_prime in h_mon.elements() {
                    if h != h_prime && e.related((n, h), (n_prime, h_prime)) {
                        return Err(AdmissibilityViolation::CrossFiber {
                            n,
                            h,
                            n_prime,
                            h_prime,
                        });
                    }
                }
            }
        }
    }
    for h in h_mon.elements() {
        for n in n_grp.elements() {
            for n_prime in n_grp.elements() {
                if !e.related((n, h), (n_prime, h)) {
                    continue;
                }
                for x in n_grp.elements() {
                    if !e.related((n_grp.mul(x, n), h), (n_grp.mul(x, n_prime), h)) {
                        return Err(AdmissibilityViolation::LeftTranslation { n, n_prime, h, x });
                    }
                }
                for x in h_mon.elements() {
                    if !e.related((n, h_mon.mul(h, x)), (n_prime, h_mon.mul(h, x))) {
                        return Err(AdmissibilityViolation::RightTranslation { n, n_prime, h, x });
                    }
                }
            }
        }
    }
    Ok(())
}

/// `x * [n,h] = [xn,h]`. Well-defined on classes by admissibility
/// condition 3; computed from the smallest representative.
pub fn star_left(n_grp: &FiniteAbelianGroup, x: usize, class: usize, e: &PairPartition) -> usize {
    let (n, h) = e.representative(class);
    e.class_of(n_grp.mul(x, n), h)
}

/// `[n,h] * x = [n,hx]`. Well-defined on classes by admissibility
/// condition 4.
pub fn star_right(e: &PairPartition, class: usize, x: usize, h_mon: &FiniteMonoid) -> usize {
    let (n, h) = e.representative(class);
    e.class_of(n, h_mon.mul(h, x))
}

/// A candidate action `H x N -> N`, stored row-major by `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActionTable {
    h_size: usize,
    n_size: usize,
    map: Vec<usize>,
}

impl ActionTable {
    pub fn new(h_size: usize, n_size: usize, map: Vec<usize>) -> Self {
        assert_eq!(map.len(), h_size * n_size, "action table has wrong shape");
        assert!(map.iter().all(|&m| m < n_size), "action entry out of range");
        ActionTable { h_size, n_size, map }
    }

    /// The identity action `phi(h, n) = n`.
    pub fn trivial(h_size: usize, n_size: usize) -> Self {
        let map = (0..h_size).flat_map(|_| 0..n_size).collect();
        ActionTable { h_size, n_size, map }
    }

    pub fn h_size(&self) -> usize {
        self.h_size
    }

    pub fn n_size(&self) -> usize {
        self.n_size
    }

    #[inline]
    pub fn act(&self, h: usize, n: usize) -> usize {
        self.map[h * self.n_size + n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.map.chunks(self.n_size)
    }
}

/// The first compatibility condition that failed, numbered as in
/// [`is_compatible`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CompatibilityViolation {
    #[error("condition 1 fails at n1={n1}, n2={n2}, h={h}, n={n}")]
    RelatedTimesAction { n1: usize, n2: usize, h: usize, n: usize },
    #[error("condition 2 fails at n={n}, n_prime={n_prime}, h_prime={h_prime}, h={h}")]
    ActionOfRelated { n: usize, n_prime: usize, h_prime: usize, h: usize },
    #[error("condition 3 (multiplicativity in N) fails at h={h}, n={n}, n_prime={n_prime}")]
    NotMultiplicative { h: usize, n: usize, n_prime: usize },
    #[error("condition 4 (composition in H) fails at h={h}, h_prime={h_prime}, n={n}")]
    NotComposable { h: usize, h_prime: usize, n: usize },
    #[error("condition 5 (unit of N) fails at h={h}")]
    UnitOfKernel { h: usize },
    #[error("condition 6 (unit of H) fails at n={n}")]
    UnitOfQuotient { n: usize },
}

/// Check the six class-level action identities exhaustively:
///
/// 1. `(n1,h) ~ (n2,h)` implies `[n1 phi(h,n), h] = [n2 phi(h,n), h]`,
/// 2. `(n,h') ~ (n',h')` implies `[phi(h,n), hh'] = [phi(h,n'), hh']`,
/// 3. `[phi(h,nn'), h] = [phi(h,n) phi(h,n'), h]`,
/// 4. `[phi(hh',n), hh'] = [phi(h, phi(h',n)), hh']`,
/// 5. `[phi(h,1), h] = [1, h]`,
/// 6. `[phi(1,n), 1] = [n, 1]`.
pub fn is_compatible(
    phi: &ActionTable,
    e: &PairPartition,
    n_grp: &FiniteAbelianGroup,
    h_mon: &FiniteMonoid,
) -> Result<(), CompatibilityViolation> {
    assert_eq!(phi.h_size(), h_mon.size(), "action does not fit the quotient");
    assert_eq!(phi.n_size(), n_grp.size(), "action does not fit the kernel");
    for h in h_mon.elements() {
        for n1 in n_grp.elements() {
            for n2 in n_grp.elements() {
                if !e.related((n1, h), (n2, h)) {
                    continue;
                }
                for n in n_grp.elements() {
                    let a = n_grp.mul(n1, phi.act(h, n));
                    let b = n_grp.mul(n2, phi.act(h, n));
                    if !e.related((a, h), (b, h)) {
                        return Err(CompatibilityViolation::RelatedTimesAction { n1, n2, h, n });
                    }
                }
            }
        }
    }
    for h_prime in h_mon.elements() {
        for n in n_grp.elements() {
            for n_prime in n_grp.elements() {
                if !e.related((n, h_prime), (n_prime, h_prime)) {
                    continue;
                }
                for h in h_mon.elements() {
                    let hh = h_mon.mul(h, h_prime);
                    if !e.related((phi.act(h, n), hh), (phi.act(h, n_prime), hh)) {
                        return Err(CompatibilityViolation::ActionOfRelated {
                            n,
                            n_prime,
                            h_prime,
                            h,
                        });
                    }
                }
            }
        }
    }
    for h in h_mon.elements() {
        for n in n_grp.elements() {
            for n_prime in n_grp.elements() {
                let lhs = phi.act(h, n_grp.mul(n, n_prime));
                let rhs = n_grp.mul(phi.act(h, n), phi.act(h, n_prime));
                if !e.related((lhs, h), (rhs, h)) {
                    return Err(CompatibilityViolation::NotMultiplicative { h, n, n_prime });
                }
            }
        }
    }
    for h in h_mon.elements() {
        for h_prime in h_mon.elements() {
            let hh = h_mon.mul(h, h_prime);
            for n in n_grp.elements() {
                let lhs = phi.act(hh, n);
                let rhs = phi.act(h, phi.act(h_prime, n));
                if !e.related((lhs, hh), (rhs, hh)) {
                    return Err(CompatibilityViolation::NotComposable { h, h_prime, n });
                }
            }
        }
    }
    for h in h_mon.elements() {
        if !e.related((phi.act(h, n_grp.identity()), h), (n_grp.identity(), h)) {
            return Err(CompatibilityViolation::UnitOfKernel { h });
        }
    }
    let one_h = h_mon.identity();
    for n in n_grp.elements() {
        if !e.related((phi.act(one_h, n), one_h), (n, one_h)) {
            return Err(CompatibilityViolation::UnitOfQuotient { n });
        }
    }
    Ok(())
}

/// Two actions are equivalent when `(phi(h,n), h)` and `(phi'(h,n), h)`
/// fall in the same class for every `h` and `n`.
pub fn actions_equivalent(phi: &ActionTable, phi_prime: &ActionTable, e: &PairPartition) -> bool {
    assert_eq!(phi.h_size(), phi_prime.h_size());
    assert_eq!(phi.n_size(), phi_prime.n_size());
    (0..phi.h_size()).all(|h| {
        (0..phi.n_size()).all(|n| e.related((phi.act(h, n), h), (phi_prime.act(h, n), h)))
    })
}

/// An admissible equivalence relation together with a compatible action,
/// over a fixed kernel group and quotient monoid. The action is one chosen
/// representative of its equivalence class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    kernel: FiniteAbelianGroup,
    quotient: FiniteMonoid,
    relation: PairPartition,
    action: ActionTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DataError {
    #[error("relation is not admissible: {0}")]
    NotAdmissible(#[from] AdmissibilityViolation),
    #[error("action is not compatible: {0}")]
    NotCompatible(#[from] CompatibilityViolation),
}

impl ExtensionData {
    pub fn new(
        kernel: FiniteAbelianGroup,
        quotient: FiniteMonoid,
        relation: PairPartition,
        action: ActionTable,
    ) -> Result<Self, DataError> {
        is_admissible(&relation, &kernel, &quotient)?;
        is_compatible(&action, &relation, &kernel, &quotient)?;
        Ok(ExtensionData { kernel, quotient, relation, action })
    }

    /// Discrete relation with the identity action.
    pub fn trivial(kernel: FiniteAbelianGroup, quotient: FiniteMonoid) -> Self {
        let relation = PairPartition::discrete(kernel.size(), quotient.size());
        let action = ActionTable::trivial(quotient.size(), kernel.size());
        Self::new(kernel, quotient, relation, action)
            .expect("discrete relation with identity action is always valid")
    }

    pub fn kernel(&self) -> &FiniteAbelianGroup {
        &self.kernel
    }

    pub fn quotient(&self) -> &FiniteMonoid {
        &self.quotient
    }

    pub fn relation(&self) -> &PairPartition {
        &self.relation
    }

    pub fn action(&self) -> &ActionTable {
        &self.action
    }

    /// Same carriers, equal relations and class-equivalent actions.
    pub fn equivalent(&self, other: &ExtensionData) -> bool {
        self.kernel == other.kernel
            && self.quotient == other.quotient
            && self.relation == other.relation
            && actions_equivalent(&self.action, &other.action, &self.relation)
    }
}

/// The order on extracted data: `(E,[phi]) <= (E',[phi'])` when the two
/// actions agree up to `E'` and `E` refines `E'` fibrewise.
pub fn compare_data(d: &ExtensionData, d_prime: &ExtensionData) -> bool {
    assert_eq!(d.kernel(), d_prime.kernel(), "data built over different kernels");
    assert_eq!(d.quotient(), d_prime.quotient(), "data built over different quotients");
    let (e, e_prime) = (d.relation(), d_prime.relation());
    let (phi, phi_prime) = (d.action(), d_prime.action());
    for h in d.quotient().elements() {
        for n in d.kernel().elements() {
            if !e_prime.related((phi.act(h, n), h), (phi_prime.act(h, n), h)) {
                return false;
            }
        }
    }
    for h in d.quotient().elements() {
        for n in d.kernel().elements() {
            for n_prime in d.kernel().elements() {
                if e.related((n, h), (n_prime, h)) && !e_prime.related((n, h), (n_prime, h)) {
                    return false;
                }
            }
        }
    }
    true
}

impl CosetalExtension {
    /// The equivalence relation relating `(n,h)` and `(n',h')` exactly
    /// when `k(n)s(h) = k(n')s(h')`; admissible for any section.
    pub fn extract_equivalence(&self, s: &Section) -> PairPartition {
        let k = self.kernel_map();
        let total = self.total();
        let n_size = self.kernel().size();
        let h_size = self.quotient().size();
        let mut raw = Vec::with_capacity(n_size * h_size);
        for n in 0..n_size {
            for h in 0..h_size {
                raw.push(total.mul(k.apply(n), s.apply(h)));
            }
        }
        let e = PairPartition::new(n_size, h_size, raw).expect("shape is consistent");
        debug_assert!(is_admissible(&e, self.kernel(), self.quotient()).is_ok());
        e
    }

    /// The action `phi(h,n)` = smallest `m` with `k(m)s(h) = s(h)k(n)`.
    /// A witness exists because `e(s(h)k(n)) = e(s(h))` and the extension
    /// is cosetal; all witnesses are equivalent at class level.
    pub fn extract_action(&self, s: &Section) -> ActionTable {
        let k = self.kernel_map();
        let total = self.total();
        let n_size = self.kernel().size();
        let h_size = self.quotient().size();
        let mut map = Vec::with_capacity(h_size * n_size);
        for h in 0..h_size {
            for n in 0..n_size {
                let rhs = total.mul(s.apply(h), k.apply(n));
                let m = (0..n_size)
                    .find(|&m| total.mul(k.apply(m), s.apply(h)) == rhs)
                    .expect("cosetal extensions admit a conjugation witness");
                map.push(m);
            }
        }
        ActionTable::new(h_size, n_size, map)
    }

    /// Relation and action extracted with the same section, certified.
    pub fn extract_data(&self, s: &Section) -> ExtensionData {
        let relation = self.extract_equivalence(s);
        let action = self.extract_action(s);
        ExtensionData::new(self.kernel().clone(), self.quotient().clone(), relation, action)
            .expect("extraction from a cosetal extension yields valid data")
    }
}

/// All admissible equivalence relations on `N x H`, in lexicographic order
/// of their normalized class arrays.
///
/// Classes can only merge within a fixed `h` (condition 2), and the column
/// over the identity is discrete (condition 1), so candidates are built
/// column by column from the partitions of `N` and filtered by the two
/// translation conditions.
pub fn enumerate_admissible(
    n_grp: &FiniteAbelianGroup,
    h_mon: &FiniteMonoid,
) -> Vec<PairPartition> {
    let n_size = n_grp.size();
    let h_size = h_mon.size();
    let column_options = set_partitions(n_size);
    let mut out = Vec::new();
    let mut columns: Vec<usize> = vec![0; h_size];
    loop {
        let candidate = assemble_partition(n_size, h_size, h_mon, &columns, &column_options);
        if let Some(e) = candidate {
            if is_admissible(&e, n_grp, h_mon).is_ok() {
                out.push(e);
            }
        }
        // Odometer over column choices; identity column stays discrete.
        let mut pos = h_size;
        loop {
            if pos == 0 {
                out.sort();
                out.dedup();
                return out;
            }
            pos -= 1;
            if pos == h_mon.identity() {
                continue;
            }
            columns[pos] += 1;
            if columns[pos] < column_options.len() {
                break;
            }
            columns[pos] = 0;
        }
    }
}

fn assemble_partition(
    n_size: usize,
    h_size: usize,
    h_mon: &FiniteMonoid,
    columns: &[usize],
    column_options: &[Vec<usize>],
) -> Option<PairPartition> {
    let mut raw = vec![0usize; n_size * h_size];
    for h in 0..h_size {
        let col = if h == h_mon.identity() {
            // Discrete column.
            (0..n_size).collect::<Vec<_>>()
        } else {
            column_options[columns[h]].clone()
        };
        for n in 0..n_size {
            // Offset class ids per column to keep columns disjoint.
            raw[n * h_size + h] = h * n_size + col[n];
        }
    }
    PairPartition::new(n_size, h_size, raw).ok()
}

/// All partitions of `{0..n}` as restricted-growth strings.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    fn rec(n: usize, pos: usize, max_used: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == n {
            out.push(current.clone());
            return;
        }
        for c in 0..=max_used + 1 {
            current[pos] = c;
            rec(n, pos + 1, max_used.max(c), current, out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        current[0] = 0;
        rec(n, 1, 0, &mut current, &mut out);
    }
    out
}

/// All compatible actions for the relation, in lexicographic table order.
pub fn enumerate_compatible_actions(
    n_grp: &FiniteAbelianGroup,
    h_mon: &FiniteMonoid,
    e: &PairPartition,
) -> Vec<ActionTable> {
    let n_size = n_grp.size();
    let h_size = h_mon.size();
    let cells = h_size * n_size;
    let mut out = Vec::new();
    let mut map = vec![0usize; cells];
    loop {
        let phi = ActionTable::new(h_size, n_size, map.clone());
        if is_compatible(&phi, e, n_grp, h_mon).is_ok() {
            out.push(phi);
        }
        let mut pos = cells;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            map[pos] += 1;
            if map[pos] < n_size {
                break;
            }
            map[pos] = 0;
        }
    }
}

/// One representative per equivalence class of compatible actions, each
/// the lexicographically least member of its class.
pub fn action_class_representatives(
    actions: &[ActionTable],
    e: &PairPartition,
) -> Vec<ActionTable> {
    let mut reps: Vec<ActionTable> = Vec::new();
    for phi in actions {
        if !reps.iter().any(|r| actions_equivalent(r, phi, e)) {
            reps.push(phi.clone());
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::{enumerate_sections, CosetalExtension, ExtensionDiagram};
    use crate::finite_algebra::{
        adjoin_absorbing, cyclic_group, direct_product, meet_semilattice, MonoidHom,
        product_injection_left, product_projection_right,
    };

    fn absorbing_extension() -> CosetalExtension {
        let n = FiniteAbelianGroup::cyclic(2);
        let g = adjoin_absorbing(&cyclic_group(2));
        let h = meet_semilattice(2);
        let k = MonoidHom::new(n.monoid().clone(), g.clone(), vec![0, 1]).unwrap();
        let e = MonoidHom::new(g.clone(), h.clone(), vec![0, 0, 1]).unwrap();
        CosetalExtension::new(ExtensionDiagram::validate(n, g, h, k, e).unwrap()).unwrap()
    }

    fn z4_extension() -> CosetalExtension {
        let n = FiniteAbelianGroup::cyclic(2);
        let g = cyclic_group(4);
        let h = cyclic_group(2);
        let k = MonoidHom::new(n.monoid().clone(), g.clone(), vec![0, 2]).unwrap();
        let e = MonoidHom::new(g.clone(), h.clone(), vec![0, 1, 0, 1]).unwrap();
        CosetalExtension::new(ExtensionDiagram::validate(n, g, h, k, e).unwrap()).unwrap()
    }

    fn product_extension() -> CosetalExtension {
        let n = FiniteAbelianGroup::cyclic(2);
        let a = cyclic_group(2);
        let b = meet_semilattice(2);
        let g = direct_product(&a, &b);
        let h = meet_semilattice(2);
        let k = product_injection_left(&a, &b);
        let e = product_projection_right(&a, &b);
        CosetalExtension::new(ExtensionDiagram::validate(n, g, h, k, e).unwrap()).unwrap()
    }

    /// Singletons at h = 1, everything merged at h = h.
    fn coarse_at_h() -> PairPartition {
        PairPartition::new(2, 2, vec![0, 1, 2, 1]).unwrap()
    }

    #[test]
    fn discrete_partition_is_admissible() {
        let n = FiniteAbelianGroup::cyclic(2);
        let h = cyclic_group(2);
        assert!(is_admissible(&PairPartition::discrete(2, 2), &n, &h).is_ok());
    }

    #[test]
    fn coarse_at_h_is_admissible() {
        let n = FiniteAbelianGroup::cyclic(2);
        let h = meet_semilattice(2);
        assert!(is_admissible(&coarse_at_h(), &n, &h).is_ok());
    }

    #[test]
    fn merged_unit_column_is_rejected() {
        let n = FiniteAbelianGroup::cyclic(2);
        let h = meet_semilattice(2);
        // (0,1) and (1,1) merged: flat indices 0 and 2.
        let e = PairPartition::new(2, 2, vec![0, 1, 0, 2]).unwrap();
        assert_eq!(
            is_admissible(&e, &n, &h).unwrap_err(),
            AdmissibilityViolation::UnitColumnMerged { n: 0, n_prime: 1 }
        );
    }

    #[test]
    fn star_operations_fix_identity_and_follow_merges() {
        let n = FiniteAbelianGroup::cyclic(2);
        let h = meet_semilattice(2);
        let e = coarse_at_h();
        for class in 0..e.class_count() {
            assert_eq!(star_left(&n, n.identity(), class, &e), class);
            assert_eq!(star_right(&e, class, h.identity(), &h), class);
        }
        // [0,1] * h is the merged h-class.
        let c01 = e.class_of(0, 0);
        let merged = e.class_of(0, 1);
        assert_eq!(star_right(&e, c01, 1, &h), merged);
    }

    #[test]
    fn extraction_on_reference_extensions() {
        // Direct product: all products distinct, discrete partition.
        let ext = product_extension();
        let s = &enumerate_sections(&ext, 1 << 20).unwrap()[0];
        assert_eq!(ext.extract_equivalence(s), PairPartition::discrete(2, 2));

        // Absorbing extension: coarse at h.
        let ext = absorbing_extension();
        let s = &enumerate_sections(&ext, 1 << 20).unwrap()[0];
        assert_eq!(ext.extract_equivalence(s), coarse_at_h());

        // Z4: discrete for either section.
        let ext = z4_extension();
        for s in enumerate_sections(&ext, 1 << 20).unwrap() {
            assert_eq!(ext.extract_equivalence(&s), PairPartition::discrete(2, 2));
        }
    }

    #[test]
    fn extracted_actions() {
        let ext = absorbing_extension();
        let s = &enumerate_sections(&ext, 1 << 20).unwrap()[0];
        let phi = ext.extract_action(s);
        // phi(1, n) = n always; phi(h, n) = 0 by the smallest-witness rule.
        assert_eq!(phi.act(0, 0), 0);
        assert_eq!(phi.act(0, 1), 1);
        assert_eq!(phi.act(1, 0), 0);
        assert_eq!(phi.act(1, 1), 0);

        let ext = z4_extension();
        let s = &enumerate_sections(&ext, 1 << 20).unwrap()[0];
        let phi = ext.extract_action(s);
        for n in 0..2 {
            assert_eq!(phi.act(1, n), n, "abelian total monoid forces the identity action");
        }
    }

    #[test]
    fn extracted_data_is_certified() {
        for ext in [absorbing_extension(), z4_extension(), product_extension()] {
            let s = &enumerate_sections(&ext, 1 << 20).unwrap()[0];
            ext.extract_data(s);
        }
    }

    #[test]
    fn action_equivalence_depends_on_partition() {
        let constant = ActionTable::new(2, 2, vec![0, 1, 0, 0]);
        let identity = ActionTable::trivial(2, 2);
        // Merged h-classes make them equivalent.
        assert!(actions_equivalent(&constant, &identity, &coarse_at_h()));
        // Discrete classes tell them apart.
        assert!(!actions_equivalent(&constant, &identity, &PairPartition::discrete(2, 2)));
    }

    #[test]
    fn compatibility_examples() {
        let n = FiniteAbelianGroup::cyclic(2);
        let h2 = cyclic_group(2);
        let sl2 = meet_semilattice(2);
        let discrete = PairPartition::discrete(2, 2);
        assert!(is_compatible(&ActionTable::trivial(2, 2), &discrete, &n, &h2).is_ok());

        let ext = absorbing_extension();
        let s = &enumerate_sections(&ext, 1 << 20).unwrap()[0];
        let phi = ext.extract_action(s);
        assert!(is_compatible(&phi, &coarse_at_h(), &n, &sl2).is_ok());

        // The identity action is also compatible with the coarse relation,
        // and equivalent to the extracted one.
        let identity = ActionTable::trivial(2, 2);
        assert!(is_compatible(&identity, &coarse_at_h(), &n, &sl2).is_ok());
        assert!(actions_equivalent(&identity, &phi, &coarse_at_h()));
    }

    #[test]
    fn data_order_examples() {
        let n = FiniteAbelianGroup::cyclic(2);
        let sl2 = meet_semilattice(2);
        let fine = ExtensionData::trivial(n.clone(), sl2.clone());
        let ext = absorbing_extension();
        let s = &enumerate_sections(&ext, 1 << 20).unwrap()[0];
        let coarse = ext.extract_data(s);
        assert!(compare_data(&fine, &fine), "reflexive");
        assert!(compare_data(&coarse, &coarse), "reflexive");
        assert!(compare_data(&fine, &coarse), "discrete data sits below coarse data");
        assert!(!compare_data(&coarse, &fine), "merged classes cannot map back");
    }

    #[test]
    fn admissible_enumeration_small_cases() {
        let n = FiniteAbelianGroup::cyclic(2);
        let sl2 = meet_semilattice(2);
        let all = enumerate_admissible(&n, &sl2);
        // Either the h column is discrete or its two pairs are merged.
        assert_eq!(all.len(), 2);
        assert!(all.contains(&PairPartition::discrete(2, 2)));
        assert!(all.contains(&coarse_at_h()));

        // A trivial quotient admits only the discrete relation.
        let h1 = cyclic_group(1);
        let all = enumerate_admissible(&n, &h1);
        assert_eq!(all, vec![PairPartition::discrete(2, 1)]);
    }

    #[test]
    fn compatible_action_enumeration_degenerate_cases() {
        // Trivial kernel: one action, everything collapses to H.
        let n1 = FiniteAbelianGroup::cyclic(1);
        let sl2 = meet_semilattice(2);
        let e = PairPartition::discrete(1, 2);
        let actions = enumerate_compatible_actions(&n1, &sl2, &e);
        assert_eq!(actions.len(), 1);

        // Trivial quotient: the only compatible action is the identity.
        let n = FiniteAbelianGroup::cyclic(3);
        let h1 = cyclic_group(1);
        let e = PairPartition::discrete(3, 1);
        let actions = enumerate_compatible_actions(&n, &h1, &e);
        assert_eq!(actions, vec![ActionTable::trivial(1, 3)]);
    }

    #[test]
    fn z3_by_z2_has_two_action_classes() {
        // Identity and inversion are the two actions of Z2 on Z3 over the
        // discrete relation.
        let n = FiniteAbelianGroup::cyclic(3);
        let h = cyclic_group(2);
        let e = PairPartition::discrete(3, 2);
        let actions = enumerate_compatible_actions(&n, &h, &e);
        let reps = action_class_representatives(&actions, &e);
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0], ActionTable::trivial(2, 3));
        assert_eq!(reps[1].act(1, 1), 2, "the nontrivial action inverts");
    }
}
