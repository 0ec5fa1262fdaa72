//! Exact-arithmetic kernel: number theory, combinatorics, propositional
//! logic, finite sets and algebraic structures, complex numbers, rational
//! matrices and linear systems, 3D vector geometry, and proportion/mixture
//! calculations.

pub mod arith;
pub mod cli;
pub mod complexn;
pub mod error;
pub mod finalg;
pub mod geom;
pub mod linalg;
pub mod linsys;
pub mod logic;
pub mod ratio;
pub mod rational;
pub mod render;
pub mod setrel;

pub use error::{Error, Result};
pub use rational::{Int, Rational};
