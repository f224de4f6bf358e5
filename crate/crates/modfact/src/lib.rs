//! Document formats, corpora, verification suites and the command line for `modfact-core`.

pub mod cli;
pub mod context;
pub mod corpus;
pub mod doc;
pub mod format;
pub mod harness;
