use thiserror::Error;

/// A finite monoid given by its multiplication table.
///
/// The table is stored row-major: `table[a * size + b]` is the product
/// `a * b`. Construction validates closure, the identity law and
/// associativity for all triples, so a value of this type is always a
/// certified monoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMonoid {
    size: usize,
    identity: usize,
    table: Vec<usize>,
}

/// Why a raw table failed to be a monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("table is {rows} rows but row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("identity index {identity} out of range for size {size}")]
    IdentityOutOfRange { identity: usize, size: usize },
    #[error("entry {entry} at ({row},{col}) is out of range")]
    NotClosed { row: usize, col: usize, entry: usize },
    #[error("identity law fails at element {x}")]
    BadIdentity { x: usize },
    #[error("associativity fails at ({x},{y},{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("monoid must have at least one element")]
    Empty,
}

impl FiniteMonoid {
    /// Validate a square table given as rows. Reports the first failing
    /// axiom, checking closure, then the identity law, then associativity.
    pub fn from_rows(rows: Vec<Vec<usize>>, identity: usize) -> Result<Self, MonoidError> {
        let size = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(MonoidError::NotSquare { rows: size, row, cols: r.len() });
            }
        }
        let mut table = Vec::with_capacity(size * size);
        for r in rows {
            table.extend(r);
        }
        Self::from_flat(size, table, identity)
    }

    /// Validate a row-major flat table of length `size * size`.
    pub fn from_flat(size: usize, table: Vec<usize>, identity: usize) -> Result<Self, MonoidError> {
        if size == 0 {
            return Err(MonoidError::Empty);
        }
        assert_eq!(table.len(), size * size, "flat table length mismatch");
        if identity >= size {
            return Err(MonoidError::IdentityOutOfRange { identity, size });
        }
        for row in 0..size {
            for col in 0..size {
                let entry = table[row * size + col];
                if entry >= size {
                    return Err(MonoidError::NotClosed { row, col, entry });
                }
            }
        }
        for x in 0..size {
            if table[identity * size + x] != x || table[x * size + identity] != x {
                return Err(MonoidError::BadIdentity { x });
            }
        }
        for x in 0..size {
            for y in 0..size {
                let xy = table[x * size + y];
                for z in 0..size {
                    if table[xy * size + z] != table[x * size + table[y * size + z]] {
                        return Err(MonoidError::NotAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(FiniteMonoid { size, identity, table })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    /// Iterator over all element indices.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// The flat row-major table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `a^n` with `a^0` the identity.
    pub fn pow(&self, a: usize, n: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// The least `n >= 1` with `a^n = identity`, if the powers of `a`
    /// return to the identity at all.
    pub fn element_order(&self, a: usize) -> Option<usize> {
        let mut acc = a;
        for n in 1..=self.size {
            if acc == self.identity {
                return Some(n);
            }
            acc = self.mul(acc, a);
        }
        None
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.mul(x, x) == x).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_monoid_validates() {
        let m = FiniteMonoid::from_rows(vec![vec![0]], 0).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.identity(), 0);
    }

    #[test]
    fn z2_validates() {
        let m = FiniteMonoid::from_rows(vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        assert_eq!(m.mul(1, 1), 0);
        assert!(m.is_commutative());
    }

    #[test]
    fn wrong_identity_is_rejected() {
        // xor table, but claiming 1 is the identity: 1*0 = 1 != 0.
        let err = FiniteMonoid::from_rows(vec![vec![0, 1], vec![1, 0]], 1).unwrap_err();
        assert_eq!(err, MonoidError::BadIdentity { x: 0 });
    }

    #[test]
    fn out_of_range_entry_is_not_closed() {
        let err = FiniteMonoid::from_rows(vec![vec![0, 1], vec![1, 5]], 0).unwrap_err();
        assert_eq!(err, MonoidError::NotClosed { row: 1, col: 1, entry: 5 });
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // 1*x = x = x*1 but (2*2)*2 = 2 while 2*(2*2) needs checking:
        // pick a table where 2*2 = 0 and 0*2 = 2 but 2*0 = 1.
        let rows = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 1]];
        let err = FiniteMonoid::from_rows(rows, 0).unwrap_err();
        assert!(matches!(err, MonoidError::NotAssociative { .. }));
    }

    #[test]
    fn element_orders_in_z4() {
        let rows = (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect();
        let m = FiniteMonoid::from_rows(rows, 0).unwrap();
        assert_eq!(m.element_order(0), Some(1));
        assert_eq!(m.element_order(1), Some(4));
        assert_eq!(m.element_order(2), Some(2));
    }
}
