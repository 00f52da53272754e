//! Library surface of the CLI: the table model and CSV/JSON writers, kept
//! importable so integration tests can parse what the binary emits.

pub mod output;
