//! Real log canonical thresholds of real hyperplane arrangements.
//!
//! For `f = L_1^{s_1} ... L_n^{s_n}` with rational linear forms `L_i`, the
//! threshold `λ` and its multiplicity `m` depend only on the intersection
//! lattice: `λ` is the least `codim(W) / s(W)` over all flats `W`, and `m`
//! is the length of the longest chain of flats attaining it. All of that is
//! computed exactly over the rationals. The [`volume`] module checks the
//! predicted law `V(ε) ~ C ε^λ (-ln ε)^(m-1)` by Monte Carlo.
//!
//! ```
//! use hyperrlct::{normalize, parse_factored_product, rlct_central, rational};
//!
//! let arr = normalize(&parse_factored_product("x*y^2*z^2*(x+y+z)")?)?;
//! let res = rlct_central(&arr)?;
//! assert_eq!(res.pair.lambda, rational::ratio(1, 2));
//! assert_eq!(res.pair.m, 3);
//! # Ok::<(), hyperrlct::Error>(())
//! ```

pub mod arrangement;
pub mod cli;
pub mod error;
pub mod input;
pub mod lattice;
pub mod oracle;
pub mod parser;
pub mod ratlinalg;
pub mod rational;
pub mod rlct;
pub mod volume;

pub use arrangement::{normalize, ArrangementSpec, NormalizedArrangement};
pub use error::{Error, Result};
pub use lattice::{build_lattice, inclusion_dag, Flat, InclusionDag, IntersectionLattice};
pub use parser::{parse_factored_product, to_factored_text};
pub use ratlinalg::{subspace_leq, RationalMatrix, Rref};
pub use rational::Rational;
pub use rlct::{
    maximal_central_localizations, pair_less, rlct_affine, rlct_central, rlct_line_arrangement_2d,
    LocalizationReport, RlctPair, RlctResult,
};
pub use volume::{estimate_volume, fit_asymptotics, AsymptoticFit, SamplingBox, VolumeSample};
