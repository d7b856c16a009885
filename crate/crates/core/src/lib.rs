//! Finite Hilbert algebras given by implication tables, and the structures
//! built on them: filters and monomial filters, multipliers, closure
//! endomorphisms and the lattice `CE`, the adjoint semilattice and the
//! minimal Brouwerian extension.
//!
//! Every structural claim is also available as a `check_*` function that
//! tests it exhaustively on one algebra and returns a
//! [`VerificationReport`]; [`enumeration`] produces the algebras of a given
//! size up to isomorphism so the checks can be run over all of them.
//!
//! Maps compose left to right: `f.then(g)` applies `f` first. The join of
//! `CE` is this composition.
//!
//! ```
//! use hilbert_core::{all_ce, fixtures, kernel};
//!
//! let fork = fixtures::implication_fork();
//! let ce = all_ce(&fork).unwrap();
//! assert_eq!(ce.len(), 4);
//! assert!(ce.lattice().is_boolean());
//! for f in ce.maps() {
//!     assert!(hilbert_core::is_filter(&fork, kernel(&fork, f)));
//! }
//! ```

pub mod adjoint;
pub mod algebra;
mod bijection;
pub mod closure;
pub mod dot;
pub mod endo;
pub mod enumeration;
pub mod error;
pub mod filters;
pub mod fixtures;
pub mod format;
pub mod lattice;
pub mod multipliers;
pub mod report;
pub mod subset;
pub mod suite;

pub use adjoint::{
    adjoint_semilattice, alpha_set, check_brouwerian, check_filter_ideal_bridge, check_impla3, check_join_density,
    check_kk2, finitely_generated_ces, ideal_lattice_of_adjoint, minimal_brouwerian_extension, principal_ces,
    subtraction, AdjointSemilattice, BrouwerianExtension,
};
pub use algebra::{validate_hilbert, Axiom, Classification, HilbertAlgebra, OrderRelation, Violation, MAX_ELEMENTS};
pub use closure::{
    all_ce, ce_from_monomial_filter, ce_from_retract, check_ce_structure, check_ff,
    check_fixpoint_filter_characterization, check_idempotent_lemma, check_isotmult2, check_kappa,
    closure_endomorphisms, implication_extras, is_closure_endomorphism, is_closure_retract, is_special, kernel,
    nabla, CeLattice, ClosureEndo,
};
pub use endo::EndoMap;
pub use enumeration::{
    are_isomorphic, canonical_form, cross_theorem_survey, endomorphism_monoid, enumerate_algebras, AlgebraCatalog,
    EndoMonoid,
};
pub use error::{Error, Result};
pub use filters::{
    all_filters, class_of, filter_generated, filter_join, is_filter, is_monomial, lower_set, principal_filter,
    FilterLattice,
};
pub use format::AlgebraFile;
pub use lattice::FiniteLattice;
pub use multipliers::{all_multipliers, check_multiplier_calculus, is_multiplier, multipliers, MultiplierAlgebra};
pub use report::{CheckResult, Status, VerificationReport};
pub use subset::ElementSubset;
pub use suite::{parse_suites, run_suite, verify, Suite};
