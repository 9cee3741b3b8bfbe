//! Exact jet calculus for G-structures that carry a canonical linear
//! connection.
//!
//! Everything is computed over the rationals, with no floating point
//! anywhere: module dimensions, kernel ranks and normal forms are certain,
//! not numerically estimated. The main layers are
//!
//! * [`rat`], [`matrix`], [`jet`] — exact scalars, dense rational linear
//!   algebra and truncated multivariate polynomial (jet) arithmetic;
//! * [`tensor`] — the spaces `V^{r,p}_q = S^r(V*) ⊗ (V*)^⊗p ⊗ V^⊗q`, with
//!   symmetrization, cyclic sums, the alternation and Spencer operators and
//!   the linear group action;
//! * [`lie`] — Lie subalgebras of `gl(n)`, first prolongation, the trace
//!   supplement `W` and the canonical splitting
//!   `Λ²V*⊗V = δ(V*⊗g) ⊕ W` together with the projector coefficients;
//! * [`connection`] — extraction of the canonical connection from a frame
//!   jet: flat torsion, `η`, Christoffel jets and the difference tensor `F`;
//! * [`frames`] — the group of origin-fixing diffeomorphism jets, geodesic
//!   (exponential) jets, normalization onto the normal-form slice, parallel
//!   frames and the slice membership test;
//! * [`moduli`] — the operators `Σ`, `L`, `Q`, the modules `W^{r+1}` and
//!   their supplements, order-raising sections, jet splitting and the
//!   moduli dimension tables;
//! * [`io`], [`sample`], [`verify`] — the shared JSON schemas, the seeded
//!   rational jet generator and the named invariant checks used by the
//!   command line `verify`.

pub mod connection;
pub mod error;
pub mod frames;
pub mod io;
pub mod jet;
pub mod lie;
pub mod matrix;
pub mod moduli;
pub mod rat;
pub mod sample;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use rat::Rat;
