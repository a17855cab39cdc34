//! Additive homology of polyhedral products over a field.
//!
//! Given a simplicial complex `K` on `[m]` and, for every vertex, a pointed
//! pair `(X_i, A_i)` (or just its homology data), this crate computes the
//! Hilbert–Poincaré series of the polyhedral smash product `Ẑ(K; (X, A))`
//! and of the polyhedral product `Z(K; (X, A))`, together with the explicit
//! wedge summands they split into.
//!
//! * [`simplicial`]: complexes, full subcomplexes, links, the
//!   length-lexicographic face order and reduced simplicial homology.
//! * [`series`]: exact Poincaré polynomials.
//! * [`pairs`]: pair homology and its wedge-decomposable model.
//! * [`cartan`]: the series and summands via the wedge decomposition.
//! * [`oracle`]: an independent cellular-chain computation.
//!
//! ```
//! use polyprod::{cartan, EngineOptions, SimplicialComplex, WedgeModel};
//!
//! let square = SimplicialComplex::cycle(4)?;
//! // (D², S¹): B and C contribute nothing, E = S¹
//! let disk = WedgeModel::from_series("0".parse()?, "0".parse()?, "t".parse()?)?;
//! let series = cartan::pp_series(&square, &vec![disk; 4], &EngineOptions::default())?;
//! assert_eq!(series.to_string(), "1+2t^3+t^6");
//! # Ok::<(), polyprod::Error>(())
//! ```

pub mod cartan;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod pairs;
pub mod series;
pub mod simplicial;

pub use cartan::{EngineOptions, WedgeSummand};
pub use error::{Error, Result};
pub use field::Field;
pub use oracle::{CellPair, CellPairSpec, ChainComplexOverField};
pub use pairs::{PairHomology, WedgeModel};
pub use series::GradedSeries;
pub use simplicial::{BettiVector, Face, OrderedFaceList, SimplicialComplex};
