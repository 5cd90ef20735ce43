//! Exact linear-programming upper bounds on the sizes of constant-weight
//! binary codes `A(n, d, w)` and unrestricted binary codes `A(n, d)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`combinatorics`]: binomials, Krawtchouk values and their odd/even
//!   partial sums, and the Delsarte coefficients `q(k, i, n, w)`.
//! - [`tbound`]: upper bounds on doubly-constant-weight code sizes
//!   `T(w1, n1, w2, n2, d)` from exact identities, a data table, and
//!   containment fallbacks.
//! - [`constraints`]: every family of linear inequalities on the distance
//!   distribution, each tagged with its provenance.
//! - [`lp`]: a dense exact-rational simplex solver that returns a dual
//!   certificate (or a Farkas ray when infeasible).
//! - [`engine`]: normalization, Johnson recursion, LP assembly and the
//!   size-descent loop that produces a [`engine::BoundResult`].
//! - [`oracle`]: explicit codes, exhaustive/greedy search and per-codeword
//!   lemma checks used as ground truth.
//! - [`certificate`]: the self-contained JSON certificate format.
//! - [`cli`]: the `cwbound` command-line front end.
//!
//! See `examples/` for one runnable program per capability.

pub mod certificate;
pub mod cli;
pub mod combinatorics;
pub mod constraints;
pub mod engine;
pub mod error;
pub mod lp;
pub mod oracle;
pub mod rational;
pub mod tbound;

pub use error::{Error, Result};
pub use rational::Rational;
