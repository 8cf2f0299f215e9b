//! Volume entropy of geometric surface-group presentations.
//!
//! A presentation is geometric when its Cayley 2-complex is a plane. For
//! such presentations the growth rate of spheres in the Cayley graph equals
//! the growth rate of a circle map read off the boundary, and the kneading
//! determinant of that map is an integer polynomial whose least root in
//! `(0, 1)` is the reciprocal of the growth rate.
//!
//! ```
//! use surfent::{analyze, parse, AnalysisOptions};
//!
//! let genus_two = parse("abABcdCD").unwrap();
//! let report = analyze(&genus_two, &AnalysisOptions::default()).unwrap();
//! assert_eq!(report.root_factor.to_string(), "t^4 - 6t^3 - 6t^2 - 6t + 1");
//! assert!((report.lambda - 6.97983577).abs() < 1e-7);
//! ```

pub mod analysis;
pub mod bigons;
pub mod error;
pub mod kneading;
pub mod ordering;
pub mod polyalg;
pub mod presentation;
pub mod ray;
pub mod symbolic;
pub mod tiling;

pub use analysis::{analyze, AnalysisOptions, AnalysisReport, Geometry};
pub use bigons::{Bigon, MinimalBigons};
pub use error::{Error, NotGeometric, Result, SyntaxError};
pub use kneading::{EntropyEstimate, JumpVector, KneadingMatrix};
pub use ordering::{CyclicOrder, Orientation, OrientationMap};
pub use polyalg::{IntPolynomial, PolyMatrix};
pub use presentation::{parse, Letter, Presentation, Relator, Word};
pub use ray::EPRay;
pub use symbolic::{Lap, LapPart, Side, SymbolicDynamics, TurningPoint};
pub use tiling::{PlanarComplex, SphereCounts};
