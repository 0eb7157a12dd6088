//! Factor sets and the second cohomology group classifying cosetal
//! extensions with fixed data `(N, H, E, [phi])`.
//!
//! A *factor set* is a unit-normalized map `g: H x H -> N` whose cocycle
//! identity holds up to the admissible relation:
//!
//! ```text
//! (g(x,y) g(xy,z), xyz)  ~  (phi(x, g(y,z)) g(x,yz), xyz).
//! ```
//!
//! Factor sets form an abelian group under pointwise multiplication.
//! Quotienting by class-level equality of tables (the congruence `F`) and
//! by the inner factor sets `dt(h,h') = phi(h,t(h')) t(hh')^-1 t(h)` yields
//! the cohomology group. [`build_extension`] realizes a factor set as a
//! cosetal extension on the classes of `E`; [`zeta`] recovers the class of
//! a cosetal extension. The two maps are mutually inverse, and transporting
//! the group structure along them is the Baer sum.

use thiserror::Error;

use crate::equiv_action::ExtensionData;
use crate::extensions::{
    cosetal_witnesses, CosetalExtension, ExtensionDiagram, Section,
};
use crate::finite_algebra::{FiniteAbelianGroup, FiniteMonoid, MonoidHom};

/// A candidate factor set: a dense `H x H` table of `N`-indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorTable {
    h_size: usize,
    map: Vec<usize>,
}

impl FactorTable {
    pub fn new(h_size: usize, map: Vec<usize>) -> Self {
        assert_eq!(map.len(), h_size * h_size, "factor table has wrong shape");
        FactorTable { h_size, map }
    }

    /// The table constantly equal to the kernel identity.
    pub fn constant_identity(h_size: usize, identity_n: usize) -> Self {
        FactorTable { h_size, map: vec![identity_n; h_size * h_size] }
    }

    pub fn h_size(&self) -> usize {
        self.h_size
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.map[x * self.h_size + y]
    }

    pub fn entries(&self) -> &[usize] {
        &self.map
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("entry {entry} at ({x},{y}) is not a kernel element")]
    EntryOutOfRange { x: usize, y: usize, entry: usize },
    #[error("not unit-normalized at {x}")]
    NotUnitNormalized { x: usize },
    #[error("cocycle identity fails at ({x},{y},{z})")]
    CocycleViolation { x: usize, y: usize, z: usize },
    #[error("{required} candidate tables exceed the bound {bound}")]
    TooLarge { required: u128, bound: u128 },
    #[error("construction produced an ill-formed extension: {0}")]
    IllFormed(String),
    #[error("extensions have different extracted data")]
    DataMismatch,
}

/// Check unit normalization and the cocycle identity up to `E`,
/// exhaustively over all triples.
pub fn is_factor_set(g: &FactorTable, data: &ExtensionData) -> Result<(), CohomologyError> {
    let n_grp = data.kernel();
    let h_mon = data.quotient();
    assert_eq!(g.h_size(), h_mon.size(), "factor table does not fit the quotient");
    for x in h_mon.elements() {
        for y in h_mon.elements() {
            let entry = g.get(x, y);
            if entry >= n_grp.size() {
                return Err(CohomologyError::EntryOutOfRange { x, y, entry });
            }
        }
    }
    let one_h = h_mon.identity();
    let one_n = n_grp.identity();
    for x in h_mon.elements() {
        if g.get(x, one_h) != one_n || g.get(one_h, x) != one_n {
            return Err(CohomologyError::NotUnitNormalized { x });
        }
    }
    let e = data.relation();
    let phi = data.action();
    for x in h_mon.elements() {
        for y in h_mon.elements() {
            let xy = h_mon.mul(x, y);
            for z in h_mon.elements() {
                let xyz = h_mon.mul(xy, z);
                let lhs = n_grp.mul(g.get(x, y), g.get(xy, z));
                let rhs = n_grp.mul(phi.act(x, g.get(y, z)), g.get(x, h_mon.mul(y, z)));
                if !e.related((lhs, xyz), (rhs, xyz)) {
                    return Err(CohomologyError::CocycleViolation { x, y, z });
                }
            }
        }
    }
    Ok(())
}

impl CosetalExtension {
    /// The factor set of a section: the smallest `m` with
    /// `k(m)s(hh') = s(h)s(h')`, with unit rows and columns forced to the
    /// identity (the identity is always a witness there since `s(1) = 1`).
    pub fn extract_factor_set(&self, s: &Section) -> FactorTable {
        let total = self.total();
        let k = self.kernel_map();
        let h_mon = self.quotient();
        let one_h = h_mon.identity();
        let one_n = self.kernel().identity();
        let h_size = h_mon.size();
        let mut map = Vec::with_capacity(h_size * h_size);
        for x in h_mon.elements() {
            for y in h_mon.elements() {
                if x == one_h || y == one_h {
                    map.push(one_n);
                    continue;
                }
                let rhs = total.mul(s.apply(x), s.apply(y));
                let target = s.apply(h_mon.mul(x, y));
                let m = self
                    .kernel()
                    .elements()
                    .find(|&m| total.mul(k.apply(m), target) == rhs)
                    .expect("cosetal extensions have section defects in the kernel");
                map.push(m);
            }
        }
        FactorTable::new(h_size, map)
    }
}

/// The congruence `F`: tables are equivalent when their entries agree at
/// class level over the product fibre, for every argument pair.
pub fn factor_sets_equivalent(
    g: &FactorTable,
    g_prime: &FactorTable,
    data: &ExtensionData,
) -> bool {
    let h_mon = data.quotient();
    let e = data.relation();
    h_mon.elements().all(|x| {
        h_mon.elements().all(|y| {
            let xy = h_mon.mul(x, y);
            e.related((g.get(x, y), xy), (g_prime.get(x, y), xy))
        })
    })
}

/// The inner factor set of an identity-preserving `t: H -> N`:
/// `dt(h,h') = phi(h, t(h')) t(hh')^-1 t(h)`. The output is certified.
pub fn inner_factor_set(t: &[usize], data: &ExtensionData) -> FactorTable {
    let n_grp = data.kernel();
    let h_mon = data.quotient();
    let phi = data.action();
    assert_eq!(t.len(), h_mon.size(), "translation map has wrong length");
    assert_eq!(t[h_mon.identity()], n_grp.identity(), "translation must preserve the identity");
    let h_size = h_mon.size();
    let mut map = Vec::with_capacity(h_size * h_size);
    for h in h_mon.elements() {
        for h_prime in h_mon.elements() {
            let a = phi.act(h, t[h_prime]);
            let b = n_grp.inverse(t[h_mon.mul(h, h_prime)]);
            map.push(n_grp.mul(n_grp.mul(a, b), t[h]));
        }
    }
    let dt = FactorTable::new(h_size, map);
    is_factor_set(&dt, data).expect("inner factor sets satisfy the cocycle identity");
    dt
}

/// The abelian group of all factor sets for the data, under pointwise
/// multiplication. Elements are in lexicographic table order.
#[derive(Clone, Debug)]
pub struct FactorSetGroup {
    data: ExtensionData,
    elements: Vec<FactorTable>,
}

impl FactorSetGroup {
    pub fn data(&self) -> &ExtensionData {
        &self.data
    }

    pub fn elements(&self) -> &[FactorTable] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> FactorTable {
        FactorTable::constant_identity(self.data.quotient().size(), self.data.kernel().identity())
    }

    pub fn multiply(&self, a: &FactorTable, b: &FactorTable) -> FactorTable {
        pointwise_product(self.data.kernel(), a, b)
    }

    pub fn inverse(&self, a: &FactorTable) -> FactorTable {
        let n_grp = self.data.kernel();
        FactorTable::new(a.h_size(), a.entries().iter().map(|&x| n_grp.inverse(x)).collect())
    }

    /// Position in the lexicographic element list.
    pub fn index_of(&self, g: &FactorTable) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }
}

pub fn pointwise_product(
    n_grp: &FiniteAbelianGroup,
    a: &FactorTable,
    b: &FactorTable,
) -> FactorTable {
    assert_eq!(a.h_size(), b.h_size());
    let map = a
        .entries()
        .iter()
        .zip(b.entries())
        .map(|(&x, &y)| n_grp.mul(x, y))
        .collect();
    FactorTable::new(a.h_size(), map)
}

/// Scan all unit-normalized tables and keep the factor sets. The scan has
/// `|N| ^ ((|H|-1)^2)` candidates and refuses to run past `bound`.
pub fn enumerate_factor_sets(
    data: &ExtensionData,
    bound: u128,
) -> Result<FactorSetGroup, CohomologyError> {
    let n_size = data.kernel().size();
    let h_mon = data.quotient();
    let free: Vec<(usize, usize)> = h_mon
        .elements()
        .flat_map(|x| h_mon.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| x != h_mon.identity() && y != h_mon.identity())
        .collect();
    let required = (n_size as u128)
        .checked_pow(free.len() as u32)
        .unwrap_or(u128::MAX);
    if required > bound {
        return Err(CohomologyError::TooLarge { required, bound });
    }
    let one_n = data.kernel().identity();
    let h_size = h_mon.size();
    let mut elements = Vec::new();
    let mut choice = vec![0usize; free.len()];
    loop {
        let mut map = vec![one_n; h_size * h_size];
        for (i, &(x, y)) in free.iter().enumerate() {
            map[x * h_size + y] = choice[i];
        }
        let g = FactorTable::new(h_size, map);
        if is_factor_set(&g, data).is_ok() {
            elements.push(g);
        }
        let mut pos = free.len();
        loop {
            if pos == 0 {
                let group = FactorSetGroup { data: data.clone(), elements };
                certify_group_closure(&group);
                return Ok(group);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < n_size {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Products and inverses of factor sets are factor sets; the scan must
/// reflect that, and the identity table must be present.
fn certify_group_closure(group: &FactorSetGroup) {
    assert!(
        group.index_of(&group.identity()).is_some(),
        "constant identity table must be a factor set"
    );
    for a in group.elements() {
        assert!(
            group.index_of(&group.inverse(a)).is_some(),
            "pointwise inverse of a factor set must be a factor set"
        );
        for b in group.elements() {
            assert!(
                group.index_of(&group.multiply(a, b)).is_some(),
                "pointwise product of factor sets must be a factor set"
            );
        }
    }
}

/// All inner factor sets, as distinct tables in lexicographic order.
pub fn enumerate_inner_factor_sets(data: &ExtensionData) -> Vec<FactorTable> {
    let n_size = data.kernel().size();
    let h_mon = data.quotient();
    let one_n = data.kernel().identity();
    let free: Vec<usize> = h_mon.elements().filter(|&h| h != h_mon.identity()).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; free.len()];
    loop {
        let mut t = vec![one_n; h_mon.size()];
        for (i, &h) in free.iter().enumerate() {
            t[h] = choice[i];
        }
        out.push(inner_factor_set(&t, data));
        let mut pos = free.len();
        loop {
            if pos == 0 {
                out.sort();
                out.dedup();
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < n_size {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Build the cosetal extension of a factor set: the monoid on the classes
/// of `E` with multiplication `[n,h][n',h'] = [n phi(h,n') g(h,h'), hh']`,
/// `k(n) = [n,1]` and `e([n,h]) = h`.
///
/// The product table is computed from every member of every class and any
/// disagreement, as well as any failure of the monoid axioms or of the
/// extension certificates, is reported as [`CohomologyError::IllFormed`].
pub fn build_extension(
    data: &ExtensionData,
    g: &FactorTable,
) -> Result<ExtensionDiagram, CohomologyError> {
    is_factor_set(g, data)?;
    let n_grp = data.kernel();
    let h_mon = data.quotient();
    let e = data.relation();
    let phi = data.action();
    let size = e.class_count();
    let ill = |what: &str| CohomologyError::IllFormed(what.to_string());

    let mut table = vec![usize::MAX; size * size];
    for n in n_grp.elements() {
        for h in h_mon.elements() {
            let a = e.class_of(n, h);
            for n_prime in n_grp.elements() {
                for h_prime in h_mon.elements() {
                    let b = e.class_of(n_prime, h_prime);
                    let part = n_grp.mul(n_grp.mul(n, phi.act(h, n_prime)), g.get(h, h_prime));
                    let c = e.class_of(part, h_mon.mul(h, h_prime));
                    let slot = &mut table[a * size + b];
                    if *slot == usize::MAX {
                        *slot = c;
                    } else if *slot != c {
                        return Err(ill("multiplication is not well-defined on classes"));
                    }
                }
            }
        }
    }
    let identity = e.class_of(n_grp.identity(), h_mon.identity());
    let carrier = FiniteMonoid::from_flat(size, table, identity)
        .map_err(|err| CohomologyError::IllFormed(err.to_string()))?;

    let kernel_map = MonoidHom::new(
        n_grp.monoid().clone(),
        carrier.clone(),
        n_grp.elements().map(|n| e.class_of(n, h_mon.identity())).collect(),
    )
    .map_err(|err| CohomologyError::IllFormed(err.to_string()))?;
    let quotient_map = MonoidHom::new(
        carrier.clone(),
        h_mon.clone(),
        (0..size).map(|c| e.representative(c).1).collect(),
    )
    .map_err(|err| CohomologyError::IllFormed(err.to_string()))?;

    let ext = ExtensionDiagram::validate(
        n_grp.clone(),
        carrier,
        h_mon.clone(),
        kernel_map,
        quotient_map,
    )
    .map_err(|err| CohomologyError::IllFormed(err.to_string()))?;
    if cosetal_witnesses(ext.kernel_map(), ext.quotient_map()).is_err() {
        return Err(ill("constructed extension is not cosetal"));
    }
    Ok(ext)
}

/// The second cohomology group: factor sets modulo the join of the
/// congruence `F` and translation by inner factor sets.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    data: ExtensionData,
    factor_sets: FactorSetGroup,
    class_of_element: Vec<usize>,
    classes: Vec<FactorTable>,
    cayley: FiniteAbelianGroup,
    invariant_factors: Vec<usize>,
}

impl CohomologyGroup {
    pub fn data(&self) -> &ExtensionData {
        &self.data
    }

    pub fn factor_sets(&self) -> &FactorSetGroup {
        &self.factor_sets
    }

    /// Number of cohomology classes.
    pub fn order(&self) -> usize {
        self.classes.len()
    }

    /// Representative table per class: the lexicographically least member.
    pub fn classes(&self) -> &[FactorTable] {
        &self.classes
    }

    /// Class-level multiplication table as a certified abelian group.
    pub fn cayley(&self) -> &FiniteAbelianGroup {
        &self.cayley
    }

    pub fn invariant_factors(&self) -> &[usize] {
        &self.invariant_factors
    }

    /// Identity class: the class of the constant-identity table.
    pub fn identity_class(&self) -> usize {
        self.class_of(&self.factor_sets.identity())
            .expect("identity table is a factor set")
    }

    /// The class of a factor set, if it belongs to this enumeration.
    pub fn class_of(&self, g: &FactorTable) -> Option<usize> {
        self.factor_sets.index_of(g).map(|i| self.class_of_element[i])
    }
}

/// Quotient the factor set group by `F`-equivalence joined with inner
/// translation, computed in one step over the enumeration.
pub fn cohomology_group(
    data: &ExtensionData,
    bound: u128,
) -> Result<CohomologyGroup, CohomologyError> {
    let factor_sets = enumerate_factor_sets(data, bound)?;
    let inner = enumerate_inner_factor_sets(data);
    let count = factor_sets.len();
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let ra = find(parent, a);
        let rb = find(parent, b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    };
    for (i, g) in factor_sets.elements().iter().enumerate() {
        for dt in &inner {
            let translated = factor_sets.multiply(g, dt);
            let j = factor_sets
                .index_of(&translated)
                .expect("inner translation stays in the factor set group");
            union(&mut parent, i, j);
        }
        for (j, g_prime) in factor_sets.elements().iter().enumerate().skip(i + 1) {
            if factor_sets_equivalent(g, g_prime, data) {
                union(&mut parent, i, j);
            }
        }
    }
    let roots: Vec<usize> = (0..count).map(|x| find(&mut parent, x)).collect();
    let class_of_element = crate::finite_algebra::normalize_class_ids(&roots);
    let class_count = class_of_element.iter().max().map_or(0, |&c| c + 1);
    let mut classes = vec![None; class_count];
    for (i, &c) in class_of_element.iter().enumerate() {
        if classes[c].is_none() {
            classes[c] = Some(factor_sets.elements()[i].clone());
        }
    }
    let classes: Vec<FactorTable> = classes.into_iter().map(|c| c.expect("class nonempty")).collect();

    // Class-level Cayley table, checked for well-definedness over every
    // pair of members, then certified as an abelian group.
    let mut table = vec![usize::MAX; class_count * class_count];
    for (i, g) in factor_sets.elements().iter().enumerate() {
        for (j, g_prime) in factor_sets.elements().iter().enumerate() {
            let product = factor_sets.multiply(g, g_prime);
            let pid = factor_sets.index_of(&product).expect("closure certified");
            let c = class_of_element[pid];
            let slot = &mut table[class_of_element[i] * class_count + class_of_element[j]];
            if *slot == usize::MAX {
                *slot = c;
            } else if *slot != c {
                return Err(CohomologyError::IllFormed(
                    "class multiplication is not well-defined".to_string(),
                ));
            }
        }
    }
    let identity_table = factor_sets.identity();
    let identity_class = class_of_element[factor_sets
        .index_of(&identity_table)
        .expect("identity table is a factor set")];
    let cayley_monoid = FiniteMonoid::from_flat(class_count, table, identity_class)
        .map_err(|err| CohomologyError::IllFormed(err.to_string()))?;
    let cayley = FiniteAbelianGroup::new(cayley_monoid)
        .map_err(|err| CohomologyError::IllFormed(err.to_string()))?;
    let invariant_factors = invariant_factors(&cayley);

    Ok(CohomologyGroup {
        data: data.clone(),
        factor_sets,
        class_of_element,
        classes,
        cayley,
        invariant_factors,
    })
}

/// Invariant factor decomposition of a small abelian group: repeatedly
/// split off a cyclic subgroup generated by an element of maximal order.
/// Returns factors `> 1` in ascending order, each dividing the next.
pub fn invariant_factors(group: &FiniteAbelianGroup) -> Vec<usize> {
    fn rec(group: &FiniteAbelianGroup, acc: &mut Vec<usize>) {
        if group.size() == 1 {
            return;
        }
        let generator = group
            .elements()
            .max_by_key(|&a| {
                group
                    .monoid()
                    .element_order(a)
                    .expect("group elements return to the identity")
            })
            .expect("group is nonempty");
        let order = group.monoid().element_order(generator).expect("order exists");
        let closure =
            crate::finite_algebra::congruence_closure(group.monoid(), &[(generator, group.identity())])
                .expect("seed pair in range");
        let (quotient, _) = crate::finite_algebra::quotient_monoid(group.monoid(), &closure);
        let quotient =
            FiniteAbelianGroup::new(quotient).expect("quotient of an abelian group is one");
        rec(&quotient, acc);
        acc.push(order);
    }
    let mut acc = Vec::new();
    rec(group, &mut acc);
    acc
}

/// Decide isomorphism of extensions over the same kernel and quotient:
/// a bijective homomorphism of total monoids commuting with both legs.
///
/// For a pair of cosetal extensions, candidate maps are generated from the
/// identity-preserving choices of images of section values inside the
/// fibres of the target, since `g = k(n) s(e(g))` determines the rest.
/// Otherwise a constrained exhaustive bijection search is used.
pub fn extensions_isomorphic(
    a: &ExtensionDiagram,
    b: &ExtensionDiagram,
) -> Option<MonoidHom> {
    assert_eq!(a.kernel(), b.kernel(), "extensions must share the kernel");
    assert_eq!(a.quotient(), b.quotient(), "extensions must share the quotient");
    if a.total().size() != b.total().size() {
        return None;
    }
    let structured = cosetal_witnesses(a.kernel_map(), a.quotient_map())
        .is_ok()
        .then(|| structured_isomorphism(a, b))
        .flatten();
    let map = match structured {
        Some(map) => Some(map),
        None if a.is_cosetal() => None,
        None => bijection_isomorphism(a, b),
    };
    map.map(|map| {
        MonoidHom::new(a.total().clone(), b.total().clone(), map)
            .expect("search already verified the homomorphism property")
    })
}

fn structured_isomorphism(a: &ExtensionDiagram, b: &ExtensionDiagram) -> Option<Vec<usize>> {
    let s = first_section(a);
    let witnesses = cosetal_witnesses(a.kernel_map(), a.quotient_map()).ok()?;
    // Smallest n with g = k(n) s(e(g)), for each g.
    let decompose: Vec<usize> = a
        .total()
        .elements()
        .map(|g| {
            witnesses
                .witness(g, s[a.quotient_map().apply(g)])
                .expect("same fibre by construction")
        })
        .collect();
    let fibers_b = b.fibers();
    let identity_h = a.quotient().identity();
    let mut choice: Vec<usize> = vec![0; a.quotient().size()];
    search_choices(a, b, &s, &decompose, &fibers_b, identity_h, 0, &mut choice)
}

fn search_choices(
    a: &ExtensionDiagram,
    b: &ExtensionDiagram,
    s: &[usize],
    decompose: &[usize],
    fibers_b: &[Vec<usize>],
    identity_h: usize,
    h: usize,
    choice: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if h == fibers_b.len() {
        return check_choice(a, b, decompose, choice);
    }
    if h == identity_h {
        choice[h] = b.total().identity();
        return search_choices(a, b, s, decompose, fibers_b, identity_h, h + 1, choice);
    }
    for &c in &fibers_b[h] {
        choice[h] = c;
        if let Some(found) = search_choices(a, b, s, decompose, fibers_b, identity_h, h + 1, choice)
        {
            return Some(found);
        }
    }
    None
}

fn check_choice(
    a: &ExtensionDiagram,
    b: &ExtensionDiagram,
    decompose: &[usize],
    choice: &[usize],
) -> Option<Vec<usize>> {
    let bt = b.total();
    let map: Vec<usize> = a
        .total()
        .elements()
        .map(|g| {
            bt.mul(
                b.kernel_map().apply(decompose[g]),
                choice[a.quotient_map().apply(g)],
            )
        })
        .collect();
    let mut seen = vec![false; bt.size()];
    for &y in &map {
        if std::mem::replace(&mut seen[y], true) {
            return None;
        }
    }
    let at = a.total();
    for x in at.elements() {
        for y in at.elements() {
            if map[at.mul(x, y)] != bt.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    for n in a.kernel().elements() {
        if map[a.kernel_map().apply(n)] != b.kernel_map().apply(n) {
            return None;
        }
    }
    for g in at.elements() {
        if b.quotient_map().apply(map[g]) != a.quotient_map().apply(g) {
            return None;
        }
    }
    Some(map)
}

/// Fallback for non-cosetal extensions: backtracking over all bijections
/// compatible with the kernel maps and the fibres.
fn bijection_isomorphism(a: &ExtensionDiagram, b: &ExtensionDiagram) -> Option<Vec<usize>> {
    let size = a.total().size();
    let mut map = vec![usize::MAX; size];
    let mut used = vec![false; size];
    for n in a.kernel().elements() {
        let from = a.kernel_map().apply(n);
        let to = b.kernel_map().apply(n);
        if map[from] != usize::MAX && map[from] != to {
            return None;
        }
        if map[from] == usize::MAX {
            if used[to] {
                return None;
            }
            map[from] = to;
            used[to] = true;
        }
    }
    let free: Vec<usize> = (0..size).filter(|&g| map[g] == usize::MAX).collect();
    fn rec(
        a: &ExtensionDiagram,
        b: &ExtensionDiagram,
        free: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == free.len() {
            return true;
        }
        let g = free[depth];
        for c in b.total().elements() {
            if used[c] || b.quotient_map().apply(c) != a.quotient_map().apply(g) {
                continue;
            }
            map[g] = c;
            used[c] = true;
            if partial_hom_ok(a, b, map, g) && rec(a, b, free, depth + 1, map, used) {
                return true;
            }
            map[g] = usize::MAX;
            used[c] = false;
        }
        false
    }
    fn partial_hom_ok(a: &ExtensionDiagram, b: &ExtensionDiagram, map: &[usize], g: usize) -> bool {
        let at = a.total();
        let bt = b.total();
        for z in at.elements() {
            if map[z] == usize::MAX {
                continue;
            }
            let gz = at.mul(g, z);
            if map[gz] != usize::MAX && bt.mul(map[g], map[z]) != map[gz] {
                return false;
            }
            let zg = at.mul(z, g);
            if map[zg] != usize::MAX && bt.mul(map[z], map[g]) != map[zg] {
                return false;
            }
        }
        true
    }
    if rec(a, b, &free, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// The lexicographically first identity-preserving section: the smallest
/// member of each fibre.
fn first_section(ext: &ExtensionDiagram) -> Vec<usize> {
    let identity_h = ext.quotient().identity();
    ext.fibers()
        .iter()
        .enumerate()
        .map(|(h, fiber)| {
            if h == identity_h {
                ext.total().identity()
            } else {
                *fiber.first().expect("quotient map is surjective")
            }
        })
        .collect()
}

/// Canonical first section as a [`Section`] value.
pub fn canonical_section(ext: &ExtensionDiagram) -> Section {
    Section::new(ext, first_section(ext)).expect("smallest fibre members form a section")
}

/// The data and cohomology class of a cosetal extension.
#[derive(Clone, Debug)]
pub struct ZetaResult {
    pub data: ExtensionData,
    pub class_id: usize,
    pub cohomology: CohomologyGroup,
}

/// Extract data and factor set with the canonical section and locate the
/// class of the factor set in the cohomology of the extracted data.
pub fn zeta(ext: &CosetalExtension, bound: u128) -> Result<ZetaResult, CohomologyError> {
    let s = canonical_section(ext);
    let data = ext.extract_data(&s);
    let g = ext.extract_factor_set(&s);
    let cohomology = cohomology_group(&data, bound)?;
    let class_id = cohomology
        .class_of(&g)
        .expect("extracted factor sets are unit-normalized factor sets");
    Ok(ZetaResult { data, class_id, cohomology })
}

/// The Baer sum: extract the factor sets of both extensions, multiply them
/// pointwise and rebuild. Requires the two extracted data to agree (equal
/// relations and class-equivalent actions).
pub fn baer_sum(
    a: &CosetalExtension,
    b: &CosetalExtension,
) -> Result<ExtensionDiagram, CohomologyError> {
    let sa = canonical_section(a);
    let sb = canonical_section(b);
    let da = a.extract_data(&sa);
    let db = b.extract_data(&sb);
    if !da.equivalent(&db) {
        return Err(CohomologyError::DataMismatch);
    }
    let ga = a.extract_factor_set(&sa);
    let gb = b.extract_factor_set(&sb);
    let sum = pointwise_product(da.kernel(), &ga, &gb);
    build_extension(&da, &sum)
}

/// One representative extension per cohomology class. The output is
/// certified: representatives are pairwise non-isomorphic and each maps
/// back to its own class under [`zeta`].
pub fn classify(
    data: &ExtensionData,
    bound: u128,
) -> Result<Vec<(usize, ExtensionDiagram)>, CohomologyError> {
    let cohomology = cohomology_group(data, bound)?;
    let mut out = Vec::with_capacity(cohomology.order());
    for (class_id, rep) in cohomology.classes().iter().enumerate() {
        let ext = build_extension(data, rep)?;
        let cx = CosetalExtension::new(ext.clone())
            .map_err(|err| CohomologyError::IllFormed(err.to_string()))?;
        let s = canonical_section(&cx);
        let round_data = cx.extract_data(&s);
        if !round_data.equivalent(data) {
            return Err(CohomologyError::IllFormed(
                "representative extension extracts different data".to_string(),
            ));
        }
        let round_class = cohomology
            .class_of(&cx.extract_factor_set(&s))
            .expect("extracted factor set is in the enumeration");
        if round_class != class_id {
            return Err(CohomologyError::IllFormed(
                "representative extension recovers the wrong class".to_string(),
            ));
        }
        out.push((class_id, ext));
    }
    for (i, (_, a)) in out.iter().enumerate() {
        for (_, b) in out.iter().skip(i + 1) {
            if extensions_isomorphic(a, b).is_some() {
                return Err(CohomologyError::IllFormed(
                    "distinct classes produced isomorphic representatives".to_string(),
                ));
            }
        }
    }
    Ok(out)
}
