//! Exact construction of the cubic symmetric comajor lamination.
//!
//! The crate works entirely with exact rational angles on `R/Z` under the
//! tripling map. Its main pieces:
//!
//! * [`angle`], [`chord`]: circle points, chords, length classes, siblings.
//! * [`orbit`]: periodic points of type B and D, block periods, chord orbits.
//! * [`legality`]: the independent legal-pair certifier.
//! * [`lavaurs`]: step-wise construction of all co-periodic comajors.
//! * [`pullback`]: finite-depth pullback laminations of a legal pair.
//! * [`io`], [`render`]: JSON/CSV serialization and SVG figures.

#![allow(clippy::result_large_err)]

pub mod angle;
pub mod chord;
pub mod error;
pub mod io;
pub mod lavaurs;
pub mod legality;
pub mod orbit;
pub mod pullback;
pub mod render;

pub use angle::{Angle, OrbitInfo};
pub use chord::{Chord, LengthClass};
pub use error::{Error, Result};
pub use lavaurs::{build, BuildState, ComajorRecord};
pub use legality::{is_comajor, is_legal_pair, LegalityVerdict};
pub use orbit::{PeriodicClass, PointType};
pub use pullback::{build_prelamination, hyperbolic_prune, Prelamination};
