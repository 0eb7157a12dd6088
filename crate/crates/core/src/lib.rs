//! Computational algebra for extensions of finite monoids by finite abelian
//! groups.
//!
//! The objects here are diagrams `N -k-> G -e-> H` where `N` is a finite
//! abelian group, `G` and `H` are finite monoids, `k` is the kernel of `e`
//! and `e` is the cokernel of `k`. An extension is *cosetal* when any two
//! elements of `G` in the same fibre of `e` differ by a kernel element on
//! the left, i.e. every fibre is a single coset `Ng`. Cosetal extensions
//! sit strictly between special Schreier extensions and arbitrary
//! extensions, and they are exactly the extensions whose kernel-equivalence
//! split extension is weakly Schreier.
//!
//! From a cosetal extension one extracts, independently of any chosen
//! section of `e`:
//!
//! * an admissible equivalence relation `E` on `N x H`,
//! * an equivalence class of compatible actions `[phi]` of `H` on `N`,
//! * a factor set `g: H x H -> N` measuring the failure of the section to
//!   be multiplicative.
//!
//! Factor sets over fixed `(N, H, E, [phi])` form a finite abelian group
//! under pointwise multiplication; quotienting by class-level equality and
//! by inner factor sets yields a second cohomology group which classifies
//! the cosetal extensions with that data. The classifying maps in both
//! directions are implemented ([`cohomology::build_extension`] and
//! [`cohomology::zeta`]), along with the induced Baer sum on isomorphism
//! classes.
//!
//! Everything is exact and deterministic: elements are table indices,
//! witnesses are chosen smallest-first, and enumerations are lexicographic.
//!
//! # Modules
//!
//! * [`finite_algebra`] — multiplication-table monoids, abelian groups,
//!   homomorphisms, congruence closure, quotients and small builders.
//! * [`extensions`] — extension diagrams, the cosetal / weakly Schreier /
//!   Schreier / special Schreier predicates, sections and the kernel
//!   equivalence.
//! * [`equiv_action`] — admissible equivalence relations on `N x H` and
//!   compatible actions, with extraction from cosetal extensions.
//! * [`cohomology`] — factor sets, inner factor sets, the cohomology
//!   group, extension (de)construction, classification and Baer sums.
//! * [`format`] — the plain-text stanza format shared by the library
//!   tests and the command-line front end.
//! * [`corpus`] — exhaustive generators for small test corpora.

pub mod cohomology;
pub mod corpus;
pub mod equiv_action;
pub mod extensions;
pub mod finite_algebra;
pub mod format;

pub use cohomology::{
    baer_sum, build_extension, canonical_section, classify, cohomology_group,
    enumerate_factor_sets, enumerate_inner_factor_sets, extensions_isomorphic,
    factor_sets_equivalent, inner_factor_set, invariant_factors, is_factor_set, zeta,
    CohomologyError, CohomologyGroup, FactorSetGroup, FactorTable, ZetaResult,
};
pub use equiv_action::{
    action_class_representatives, actions_equivalent, compare_data, enumerate_admissible,
    enumerate_compatible_actions, is_admissible, is_compatible, star_left, star_right,
    ActionTable, ExtensionData, PairPartition,
};
pub use extensions::{
    cosetal_witnesses, enumerate_sections, is_schreier, is_special_schreier, is_weakly_schreier,
    kernel_equivalence_split_extension, section_translator, CosetalExtension, CosetalWitnesses,
    Cosets, ExtensionDiagram, ExtensionError, KernelEquivalence, Section, SchreierWitnesses,
    SplitExtensionDiagram,
};
pub use finite_algebra::{
    adjoin_absorbing, congruence_closure, cyclic_group, direct_product, meet_semilattice,
    monoid_isomorphism, quotient_monoid, Congruence, FiniteAbelianGroup, FiniteMonoid, GroupError,
    HomError, MonoidError, MonoidHom,
};
