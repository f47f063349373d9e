//! Exact lattice-path combinatorics: reflection-principle constructions,
//! closed-form path counts with arbitrary-precision arithmetic, q-counted
//! diagonal-step polynomials, and machine checks of the unimodality and
//! log-concavity statements those objects satisfy.
//!
//! The crate is organized around one discipline: every closed form has a
//! brute-force enumeration oracle next to it, and the [`verify`] module
//! re-runs each claimed invariant as a named battery.
//!
//! - [`lattice`]: points, steps, paths, path families, and the enumerator.
//! - [`reflection`]: mirror lines, the tail-reflection map, and the
//!   exhaustive injection verifier.
//! - [`counting`]: binomial/trinomial closed forms and product sequences.
//! - [`qpoly`]: polynomials in q, D-polynomials, Legendre/Catalan values.
//! - [`constrained`]: partitions, Ferrers-constrained counting, and the
//!   conjecture scanner.
//! - [`sequences`]: unimodality, log-concavity, q-unimodality predicates.
//! - [`verify`]: the invariant batteries behind `latpath verify`.

mod bigjson;

pub mod constrained;
pub mod counting;
pub mod error;
pub mod lattice;
pub mod qpoly;
pub mod reflection;
pub mod sequences;
pub mod verify;

pub use constrained::{
    count_constrained, lambda_derived, partitions_in_box, sagan_sequence, scan_simion,
    simion_sequence, Partition, ScanFailure, ScanReport,
};
pub use counting::{
    binomial, count_four_step, count_four_step_upper, count_two_step, product_sequence, trinomial,
    upper_product_sequence,
};
pub use error::{Error, Result};
pub use lattice::{
    enumerate, enumerate_with_budget, Path, PathFamily, Point, Step, DEFAULT_ENUMERATION_BUDGET,
};
pub use qpoly::{
    catalan, check_gessel_catalan, check_legendre_identity, diag_antidiagonal_sequence,
    diag_polynomial, diag_polynomial_oracle, legendre_value, poly_leq, ExactRational, GesselReport,
    QPolynomial,
};
pub use reflection::{
    last_intersection, perpendicular_bisector, reflect_tail, verify_injection, InjectionReport,
    ReflectionLine,
};
pub use sequences::{is_log_concave, is_q_unimodal, is_unimodal, mode_indices};
pub use verify::{verify_suite, CaseFailure, Scope, VerifyReport};
