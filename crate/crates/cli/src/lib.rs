//! Parsing and file formats for the `tracepoly` command line tool.
//!
//! The binary itself lives in `main.rs`; everything testable — the
//! polynomial grammar, algebra spec files, generator files — is here.

pub mod parse;
pub mod spec;
