//! Acceptance checks for the library and the command line; see
//! `tests/acceptance.rs`. This crate has no code of its own.
