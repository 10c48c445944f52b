//! Root systems, alcove geometry, Dynkin heights and exact matrix calculus in
//! small characteristic.

pub mod alcove;
pub mod charp;
pub mod error;
pub mod heights;
pub mod rational;
pub mod rootsys;
pub mod selftest;
pub mod trials;

pub use error::{Error, Result};
pub use rational::Q;
pub use rootsys::{RootSystem, RootVec, TypeLabel, WeightVec};
