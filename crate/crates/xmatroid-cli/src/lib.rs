//! Library surface of the command-line workbench: spec-string parsing and
//! the reproducible experiment registry, shared by the binary and the
//! acceptance suite.

pub mod registry;
pub mod specparse;
