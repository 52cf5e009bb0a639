//! Linear maps on `M₂` and `S₂` that preserve the L-spectrum.
//!
//! Every such map is conjugation by a hyperbolic rotation
//! `P = [[α, β], [β, α]]` with `α² - β² = 1`, possibly composed with the sign
//! flip `T = diag(-1, 1)`. On `S₂` only `β = 0` survives.

mod check;
mod classify;
mod form;
mod linmap;

pub use check::{falsifies, nature_check, sample_test_preserver, MatrixMap, Verdict, TRIAL_RANGE};
pub use classify::{
    classify_preserver, classify_preserver_detailed, classify_preserver_s2,
    classify_preserver_s2_detailed, Rejection,
};
pub use form::{cone_image, make_preserver, PreserverForm, PreserverKind};
pub use linmap::{AnyLinMap, LinMapM2, LinMapS2, M2_BASIS, S2_BASIS};
