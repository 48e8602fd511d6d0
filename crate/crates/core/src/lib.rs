//! Exact construction and analysis of the combined (2n+2)-point binary
//! subdivision family with a tension parameter α.
//!
//! Every mask entry is an exact polynomial in α. The analysis routines
//! return sets of α as unions of open intervals whose endpoints are
//! isolated real algebraic numbers.

pub mod analysis;
pub mod error;
pub mod inequality;
pub mod interval;
pub mod io;
pub mod laurent;
pub mod poly;
pub mod rational;
pub mod refine;
pub mod roots;
pub mod schemes;

pub use analysis::{
    BellReport, ContinuityReport, ContinuityRow, DegreeKind, DegreeReport, GibbsReport,
    ShapeReport, Support,
};
pub use error::{Error, Result};
pub use interval::{Bound, Interval, IntervalSet};
pub use io::{AnalysisReportDocument, ControlNet, Format, MaskDocument};
pub use laurent::{LaurentSymbol, UnitPoint};
pub use poly::AlphaPoly;
pub use rational::Rational;
pub use refine::{Grid, NumericMode, Polygon, RefineOptions, Topology};
pub use roots::RootEnclosure;
pub use schemes::{Alpha, MaskPair, SchemeSpec};
