pub mod alloc;
pub mod bench;
pub mod cli;
pub mod combinators;
pub mod demo;
pub mod engine;
mod error;
pub mod generator;
pub mod io;
pub mod iso;
pub mod lang;
pub mod lazy;
pub mod ops;
pub mod source;
pub mod value;

pub use error::StreamError;
pub use generator::{show, Generator, Step};
pub use value::{Sym, Value};
