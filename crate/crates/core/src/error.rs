use std::io;

use thiserror::Error;

/// Failures that can surface while a stream is being driven.
///
/// Exhaustion is never an error; it is the absent result of an ask.
#[derive(Debug, Error)]
pub enum StreamError {
    #[error("producer failed: {0}")]
    Producer(String),

    #[error("producer panicked: {0}")]
    Panicked(String),

    #[error("producer suspended without yielding a value")]
    Suspended,

    #[error("generator cannot be cloned")]
    NotClonable,

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl StreamError {
    pub fn producer(msg: impl Into<String>) -> Self {
        StreamError::Producer(msg.into())
    }
}
