//! Exact invariants of free polynomials over power-series rings whose
//! exponents live in a line-free rational cone.
//!
//! Given a monic polynomial f in y over such a ring (or a fractional-power
//! series root of one), the crate computes the full invariant package:
//! characteristic exponents, gcd and quotient sequences, semigroup
//! generators, pseudo-roots and approximate roots, together with the
//! preparation/blowup pipeline that turns prepared series-coefficient
//! inputs into quasi-ordinary ones.

pub mod cone;
pub mod cyclotomic;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod prepare;
pub mod report;
pub mod series;
pub mod ypoly;

pub use cone::{compatible_order, Cone, OrderSpec};
pub use cyclotomic::{CycNum, Rat};
pub use error::{Error, Result};
pub use invariants::{
    characteristic_data, contact_order, expansion_order, galois_counts, gcd_sequences,
    pseudo_roots, resultant_order, semigroup_representation, CharData, GaloisCounts, SemigroupDesc,
    SequencePack,
};
pub use prepare::{
    blowup, free_certificate, is_quasi_ordinary, prepare_shear, qo_root_expand, unblow_series,
    Certificate, PrepResult,
};
pub use report::{analyze_poly, analyze_root, Analysis, CheckOutcome, InvariantReport, OrderDesc};
pub use series::{FracExp, FracSeries, Precision, SeriesCtx};
pub use ypoly::{minimal_polynomial, SeriesPoly};
