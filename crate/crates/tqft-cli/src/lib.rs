//! Command-line workbench around `tqft-core`: JSON codecs, the bundled
//! verification corpus, and the acceptance harness.

pub mod corpus;
pub mod formats;
pub mod verify;
