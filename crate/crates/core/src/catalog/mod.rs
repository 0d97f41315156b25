//! Preset constructors for the worked examples and the JSON document
//! formats.

pub mod groups;
pub mod io;
pub mod presets;
pub mod taft;

pub use groups::{evaluation_values, function_algebra, group_algebra, GroupPresentation, SemidirectData};
pub use io::Document;
pub use presets::{catalog_build, taft_comparison, group_by_name, s3_datum, s3_projection, sl21_by_name, taft_datum, PRESETS};
pub use taft::{check_taft, cyclic_group_algebra, cyclic_pairing_values, hat_taft, taft, taft_projection, TaftParams};
