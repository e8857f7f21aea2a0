//! Command-line front end for the exact LLT toolkit: subcommand dispatch,
//! verification-suite orchestration, result cache and machine-readable
//! rendering.

pub mod cache;
pub mod render;
pub mod verify;
