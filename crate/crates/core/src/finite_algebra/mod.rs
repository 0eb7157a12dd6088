//! Finite monoids, abelian groups, homomorphisms, congruences and quotients.
//!
//! Elements of a monoid are the indices `0..size`; the multiplication is a
//! dense `size x size` table. The identity index is recorded explicitly and
//! is not required to be `0`, so subobjects can keep the indices of their
//! parents. All values are immutable after construction and every operation
//! is a pure function of its inputs.

mod builders;
mod congruence;
mod group;
mod hom;
mod iso;
mod monoid;

pub use builders::{
    adjoin_absorbing, cyclic_group, direct_product, meet_semilattice, product_injection_left,
    product_injection_right, product_projection_left, product_projection_right,
};
pub(crate) use congruence::normalize_class_ids;
pub use congruence::{congruence_closure, quotient_monoid, Congruence, CongruenceError};
pub use group::{FiniteAbelianGroup, GroupError};
pub use hom::{HomError, MonoidHom};
pub use iso::monoid_isomorphism;
pub use monoid::{FiniteMonoid, MonoidError};
