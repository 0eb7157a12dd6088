use super::monoid::FiniteMonoid;

/// Brute-force monoid isomorphism for small carriers.
///
/// Searches identity-preserving bijections by backtracking, pruning on
/// every product both of whose factors are already assigned. Returns the
/// lexicographically least isomorphism as an index map `a -> b`, or `None`.
pub fn monoid_isomorphism(a: &FiniteMonoid, b: &FiniteMonoid) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    // Assign non-identity elements in index order.
    let order: Vec<usize> = a.elements().filter(|&x| x != a.identity()).collect();
    if backtrack(a, b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Full multiplicativity check of a complete assignment. The incremental
/// pruning skips pairs whose product is assigned later, so leaves must be
/// verified in full.
fn is_morphism(a: &FiniteMonoid, b: &FiniteMonoid, map: &[usize]) -> bool {
    a.elements().all(|x| {
        a.elements().all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y]))
    })
}

fn backtrack(
    a: &FiniteMonoid,
    b: &FiniteMonoid,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return is_morphism(a, b, map);
    }
    let x = order[depth];
    for y in 0..b.size() {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(a, b, map, x) && backtrack(a, b, order, depth + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

/// Check all products involving `x` whose factors are assigned.
fn consistent(a: &FiniteMonoid, b: &FiniteMonoid, map: &[usize], x: usize) -> bool {
    for z in a.elements() {
        if map[z] == usize::MAX {
            continue;
        }
        let xz = a.mul(x, z);
        if map[xz] != usize::MAX && b.mul(map[x], map[z]) != map[xz] {
            return false;
        }
        let zx = a.mul(z, x);
        if map[zx] != usize::MAX && b.mul(map[z], map[x]) != map[zx] {
            return false;
        }
    }
    true
}
