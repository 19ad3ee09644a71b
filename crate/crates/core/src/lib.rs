//! Exact computation and verification toolkit for (q,y)-Laguerre polynomials,
//! their moments, and the combinatorial models behind them.

pub mod cli;
pub mod combstat;
pub mod error;
pub mod laguerre;
pub mod moments;
pub mod mpoly;
pub mod qnum;
pub mod rookmatch;

pub use error::{Error, Result};
pub use laguerre::{Alpha, LagPoly};
pub use mpoly::{MPoly, Monomial, Rat, TruncationPolicy, Var};
