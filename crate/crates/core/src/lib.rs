//! Dual stable Grothendieck polynomials: tableau enumeration, determinantal
//! formulas, and the lattice-path model behind them.

pub mod detkit;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod shapes;
pub mod symfn;
pub mod tableaux;

pub use detkit::{det, g_via, Formula, PolyMatrix};
pub use error::{FormulaError, LatticeError, PolyError, ShapeError, TableauError};
pub use poly::{Monomial, MultiPoly};
pub use shapes::{parse_shape, Partition, SkewShape};
pub use tableaux::{complete_filling, enumerate_rpp, g_oracle, ReducedFilling, Rpp};
