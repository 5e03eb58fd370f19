//! Exact computation of the generalized Bott-Cattaneo-Rossi invariants `Z_k`
//! of long knots `R^n -> R^{n+2}` from Seifert-matrix data.
//!
//! The crate computes `Z_k` two ways, by weighted traces of Seifert-matrix
//! products and by expanding the Reidemeister torsion at `t = e^h`, and checks
//! the identities relating them. Everything is exact rational arithmetic.
//!
//! ```
//! use bcr_core::{catalog, verify_consistency, rat};
//!
//! let report = verify_consistency(&catalog::trefoil(), 4).unwrap();
//! assert!(report.consistent);
//! assert_eq!(report.z_trace[&2], rat::int(-1));
//! assert_eq!(report.z_trace[&4], rat::rat(5, 12));
//! ```

pub mod algebra;
pub mod catalog;
pub mod diagrams;
pub mod error;
pub mod input;
pub mod invariants;
pub mod seifert;
pub mod sweep;
pub mod weights;

pub use algebra::{
    mat_det_laurent, parse_rat, rat, series_div, series_exp, series_log, BiSeries, HalfLaurent,
    Matrix, Poly, Rat, RatMatrix, TruncSeries, DEFAULT_ORDER,
};
pub use diagrams::{
    automorphism_count, e_theta_edges, enumerate_diagrams, gamma_k, numbering_count,
    validate_diagram, BcrDiagram, DiagramReport,
};
pub use error::{
    AlgebraError, DiagramError, InputError, InvariantError, ParseRatError, SeifertError,
    WeightError,
};
pub use input::InputDocument;
pub use invariants::{
    l_knu, verify_consistency, z_k_trace, z_series_torsion, InvariantReport,
};
pub use seifert::{
    alexander, connected_sum, dual_data, random_data, torsion, torsion_derivative_identity,
    validate, NormalizedTorsion, SeifertData, ValidationReport,
};
pub use weights::{
    check_ode, l_poly_recursive, l_series_closed, lambda_bruteforce, lambda_recursive, m_coeffs,
    LPoly, WeightTable,
};
