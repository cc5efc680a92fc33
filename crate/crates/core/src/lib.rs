//! Logarithmic coefficients and the second Hankel determinant
//! `H₂,₁(F_f/2) = γ1 γ3 − γ2²` for three classes of univalent functions:
//! β-spirallike functions of order α, Ozaki's class `G(ν)` and Robertson's
//! class `F₀(λ)`.
//!
//! The crate computes coefficients through two independent routes (closed
//! forms and a series solve of each class's defining relation), evaluates the
//! sharp bounds and their extremal functions, and checks the bounds by a
//! grid search over the Carathéodory parameters.
//!
//! ```
//! use loghankel::{families::FamilySpec, search::global_max};
//!
//! let starlike = FamilySpec::spirallike(0.0, 0.0).unwrap();
//! let report = global_max(&starlike, 64, 2).unwrap();
//! assert!((report.max_abs_h21 - 0.25).abs() < 5e-4);
//! assert!(report.gap >= -1e-9);
//! ```
//!
//! The guide in `book/` walks through the pieces; its code listings are
//! compiled as doctests of this crate.

pub mod caratheodory;
pub mod error;
pub mod families;
pub mod hankel;
pub mod search;
pub mod series;
pub mod ymax;

pub use caratheodory::{c_from_params, CTriple, SchurParams};
pub use error::{Error, Result};
pub use families::{CoeffTriple, FamilySpec, FamilyTag};
pub use hankel::{h21, log_coeffs, rotate, GammaTriple};
pub use search::{global_max, SearchReport};
pub use series::PowerSeries;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/caratheodory.md")]
    mod caratheodory {}
    #[doc = include_str!("../../../book/src/ymax.md")]
    mod ymax {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/hankel.md")]
    mod hankel {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
