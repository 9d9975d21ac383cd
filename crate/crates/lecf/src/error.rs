//! Error type shared across the crate.
//!
//! Domain errors are precondition violations (and map to CLI exit code 2);
//! resource errors are hit caps (exit code 3). Parse errors carry the byte
//! position of the offending character.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition of an operation was violated.
    Domain(String),
    /// Malformed textual input; `pos` is a 0-based byte offset into `input`.
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },
    /// A configured resource cap was exceeded.
    Resource { cap: u64, msg: String },
    /// Filesystem trouble while reading or writing an artifact.
    Io(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(input: impl Into<String>, pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            pos,
            msg: msg.into(),
        }
    }

    pub fn resource(cap: u64, msg: impl Into<String>) -> Self {
        Error::Resource {
            cap,
            msg: msg.into(),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parse { input, pos, msg } => {
                write!(f, "parse error at position {pos} in {input:?}: {msg}")
            }
            Error::Resource { cap, msg } => write!(f, "resource cap {cap} exceeded: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
