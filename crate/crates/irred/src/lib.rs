//! Exact combinatorial commutative algebra for monomial ideals.
//!
//! The crate computes irreducible and primary decompositions of monomial
//! ideals in a polynomial ring, socle dimensions at monomial primes, and the
//! index of reducibility `ir(I)` by two independent routes (component
//! counting and socle counting). On top of that sit power scans: the
//! sequences `ir(I^n)`, `mu(I^n)` and `Ass(I^n)`, exact rational polynomial
//! fits by finite differences, degree bounds against big height and analytic
//! spread, and symbolic powers.
//!
//! Everything is coefficient-free: no field is ever represented, no floating
//! point appears anywhere, and all fits use exact rational arithmetic. All
//! values are immutable after construction and every operation is a pure
//! function, so they can be shared freely across threads.
//!
//! The `examples/` directory of the crate is the best starting point; each
//! example exercises one capability end to end. A thin `irred` binary exposes
//! the same operations as subcommands.

pub mod cli;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod powers;
pub mod ratpoly;
pub mod report;
pub mod socle;
pub mod vars;

pub use decompose::{
    associated_primes, bight, canonical_primary_decomposition, embedded_primes, ir_at_prime,
    ir_components, irreducible_decomposition, is_irredundant_primary_decomposition,
    is_maximal_embedded_component, minimal_primes, Decomposition, IrreducibleComponent,
    PrimaryComponent, PrimeSupport,
};
pub use ideal::{DegreeBound, MonomialIdeal};
pub use monomial::Monomial;
pub use parse::parse_ideal;
pub use powers::{
    analytic_spread, ass_stabilization, ir_polynomial, ir_sequence, mu_sequence, symbolic_ir_polynomial,
    symbolic_power, ScanConfig, ScanKind, ScanReport,
};
pub use ratpoly::{fit_polynomial, RationalPolynomial};
pub use socle::{
    associated_primes_via_socle, ir, ir_socle, ir_verified, localize_at, socle_dimension_at,
    LocalizedIdeal,
};
pub use vars::VariableSet;
