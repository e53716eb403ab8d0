//! Regular words on a two-letter alphabet, their Lie brackets in the free
//! associative algebra, and exact arithmetic in the Heisenberg-Weyl algebra.
//!
//! The modules build on one another:
//!
//! * [`words`]: the word order, regular words, factorings and exponent forms.
//! * [`freealg`]: the free associative algebra on `a`, `b`.
//! * [`lyndon`]: bracketings, the Lyndon-Shirshov basis and inclusion
//!   compositions.
//! * [`weyl`]: the algebra `AB = BA + 1` and its automorphism `φ`.
//! * [`theorems`]: bounded computational verifications of the structural
//!   results relating the two algebras.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod expr;
pub mod freealg;
pub mod linalg;
pub mod lyndon;
pub mod sparse;
pub mod theorems;
pub mod weyl;
pub mod words;

pub use error::{Error, Result};
