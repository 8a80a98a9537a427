//! Reed-Solomon decoding workbench over GF(2^m).
//!
//! Syndromeless (interpolation + partial GCD + message recovery) and
//! syndrome-based decoders, their classical and fast building blocks
//! (additive-FFT multiplication, Newton division, the fast extended Euclidean
//! algorithm), and the operation-count models used to compare them.

pub mod cantor;
pub mod complexity;
pub mod counts;
pub mod error;
pub mod euclid;
pub mod gf2m;
pub mod mulstrat;
pub mod newton;
pub mod poly;
pub mod rs;

pub use counts::{Meter, OpCounts};
pub use error::{Error, Result};
pub use gf2m::{Field, Symbol};
pub use poly::Poly;
