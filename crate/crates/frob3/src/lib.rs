//! Library side of the command-line front end: the JSON report shape,
//! exposed separately so integration tests can round-trip it.

pub mod report;
