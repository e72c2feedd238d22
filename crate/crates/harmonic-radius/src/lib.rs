//! Injectivity and sense-preservation radii for planar harmonic mappings.
//!
//! A planar harmonic mapping is f = h + conj(g) with h, g analytic on the
//! unit disk. This crate works with the family g = w·h, where w is an
//! analytic factor bounded by one on the disk. It provides:
//!
//! - expression trees for the analytic pieces ([`expr`]),
//! - construction and pointwise evaluation of mappings ([`mapping`]),
//! - closed-form and polynomial radii with certified residuals, plus the
//!   extremal bounds that make them sharp ([`radius`]),
//! - grid certification of sense-preservation, pairwise injectivity
//!   checks, boundary-curve simplicity, and classical inequality checks
//!   ([`certify`]),
//! - deterministic image sampling and SVG rendering ([`render`]).

pub mod certify;
pub mod error;
pub mod expr;
pub mod geom;
pub mod mapping;
pub mod radius;
pub mod render;
pub mod sampling;
pub mod tol;

pub use certify::{
    boundary_simple, certify_sense_preserving, check_growth_bound, check_schwarz_pick,
    check_starlike_half, infer_injectivity, injective_pairwise, Certificate, Check, GridSpec,
    Verdict, Witness, CERTIFICATE_VERSION,
};
pub use error::{Error, Result};
pub use expr::{build_catalog, AnalyticExpr, CatalogId, Cplx, Sign};
pub use mapping::{make_mapping, mapping_f1, mapping_f2, parse_mapping_spec, HarmonicMapping};
pub use radius::{
    bound_u, bound_v, du_dzeta_at_one, dv_dzeta_at_one, radius_n1, radius_n2, radius_table_csv,
    sharpness_witness, theorem_radius, AnalyticPartClass, RadiusEquation, RadiusResult,
    SharpnessOutcome,
};
pub use render::{emit_svg, sample_image, CurveSource, Polyline, PolylineImage};
pub use sampling::{disk_samples, sunflower_samples, DEFAULT_SEED};
