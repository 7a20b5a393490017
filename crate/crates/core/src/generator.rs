//! The generator protocol.
//!
//! A [`Generator`] wraps a stateful [`Step`] and adds sticky termination:
//! the first time the step reports exhaustion (or fails, or the generator is
//! stopped) the step is dropped, releasing whatever it owns, and every later
//! ask answers `None` without calling it again.

use std::fmt;
use std::sync::Arc;

use crate::error::StreamError;
use crate::value::{render_list, Value};

/// One element at a time. `Ok(None)` means the source is exhausted.
pub trait Step: Send {
    fn step(&mut self) -> Result<Option<Value>, StreamError>;
}

impl<F> Step for F
where
    F: FnMut() -> Result<Option<Value>, StreamError> + Send,
{
    fn step(&mut self) -> Result<Option<Value>, StreamError> {
        self()
    }
}

pub(crate) type Replay = Arc<dyn Fn() -> Generator + Send + Sync>;

/// A single-consumer element source with sticky termination.
pub struct Generator {
    step: Option<Box<dyn Step>>,
    error: Option<StreamError>,
    replay: Option<Replay>,
}

impl Generator {
    pub fn new(step: impl Step + 'static) -> Self {
        Generator {
            step: Some(Box::new(step)),
            error: None,
            replay: None,
        }
    }

    /// A generator from an infallible closure.
    pub fn from_fn<F>(mut f: F) -> Self
    where
        F: FnMut() -> Option<Value> + Send + 'static,
    {
        Generator::new(move || Ok(f()))
    }

    /// The empty stream. Like every other source it only reports done after
    /// the first failed ask.
    pub fn empty() -> Self {
        Generator::from_fn(|| None)
    }

    pub(crate) fn with_replay(mut self, replay: Replay) -> Self {
        self.replay = Some(replay);
        self
    }

    pub(crate) fn replay(&self) -> Option<&Replay> {
        self.replay.as_ref()
    }

    /// Asks for the next element, surfacing step failures.
    ///
    /// A failure finishes the generator just like exhaustion does; the error
    /// is reported once and later asks return `Ok(None)`.
    pub fn try_ask(&mut self) -> Result<Option<Value>, StreamError> {
        let Some(step) = self.step.as_mut() else {
            return Ok(None);
        };
        match step.step() {
            Ok(Some(v)) => Ok(Some(v)),
            Ok(None) => {
                self.step = None;
                Ok(None)
            }
            Err(e) => {
                self.step = None;
                Err(e)
            }
        }
    }

    /// Asks for the next element. A step failure ends the stream; the error
    /// is kept and can be collected with [`Generator::take_error`].
    pub fn ask(&mut self) -> Option<Value> {
        match self.try_ask() {
            Ok(v) => v,
            Err(e) => {
                self.error = Some(e);
                None
            }
        }
    }

    /// Marks the generator done and drops its step. Idempotent.
    pub fn stop(&mut self) {
        self.step = None;
    }

    pub fn is_done(&self) -> bool {
        self.step.is_none()
    }

    /// The error that ended the stream under [`Generator::ask`], if any.
    pub fn take_error(&mut self) -> Option<StreamError> {
        self.error.take()
    }

    /// Iterates over the remaining elements.
    pub fn elements(&mut self) -> Elements<'_> {
        Elements { generator: self }
    }

    /// Collects up to `n` elements.
    pub fn take_vec(&mut self, n: usize) -> Vec<Value> {
        self.elements().take(n).collect()
    }

    /// Renders up to `n` elements as `[e1, e2, ...]`, consuming them.
    pub fn show(&mut self, n: usize) -> String {
        render_list(&self.take_vec(n))
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Generator")
            .field("done", &self.is_done())
            .field("clonable", &self.replay.is_some())
            .finish()
    }
}

/// Borrowing iterator over a generator's remaining elements.
pub struct Elements<'a> {
    generator: &'a mut Generator,
}

impl Iterator for Elements<'_> {
    type Item = Value;

    fn next(&mut self) -> Option<Value> {
        self.generator.ask()
    }
}

/// Owning iterator over a generator's elements.
pub struct IntoElements(Generator);

impl Iterator for IntoElements {
    type Item = Value;

    fn next(&mut self) -> Option<Value> {
        self.0.ask()
    }
}

impl IntoIterator for Generator {
    type Item = Value;
    type IntoIter = IntoElements;

    fn into_iter(self) -> IntoElements {
        IntoElements(self)
    }
}

/// Free-function form of [`Generator::show`].
pub fn show(n: usize, g: &mut Generator) -> String {
    g.show(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    fn counted(limit: usize, calls: Arc<AtomicUsize>) -> Generator {
        let mut n = 0;
        Generator::from_fn(move || {
            calls.fetch_add(1, Ordering::SeqCst);
            n += 1;
            (n <= limit).then_some(Value::Int(n as i64))
        })
    }

    #[test]
    fn empty_source_is_not_done_until_asked() {
        let mut g = Generator::empty();
        assert!(!g.is_done());
        assert_eq!(g.ask(), None);
        assert!(g.is_done());
    }

    #[test]
    fn done_is_sticky() {
        let calls = Arc::new(AtomicUsize::new(0));
        let mut g = counted(1, calls.clone());
        assert_eq!(g.ask(), Some(Value::Int(1)));
        assert_eq!(g.ask(), None);
        assert_eq!(g.ask(), None);
        assert_eq!(calls.load(Ordering::SeqCst), 2);
    }

    #[test]
    fn stop_is_idempotent_and_skips_the_step() {
        let calls = Arc::new(AtomicUsize::new(0));
        let mut g = counted(10, calls.clone());
        g.stop();
        g.stop();
        assert!(g.is_done());
        assert_eq!(g.ask(), None);
        assert_eq!(calls.load(Ordering::SeqCst), 0);
    }

    #[test]
    fn failure_is_reported_once_then_exhausted() {
        let mut k = 0;
        let mut g = Generator::new(move || {
            k += 1;
            if k < 3 {
                Ok(Some(Value::Int(k)))
            } else {
                Err(StreamError::producer("boom"))
            }
        });
        assert_eq!(g.take_vec(5).len(), 2);
        assert!(matches!(g.take_error(), Some(StreamError::Producer(_))));
        assert!(g.take_error().is_none());
        assert!(g.is_done());
        assert!(matches!(g.try_ask(), Ok(None)));
    }

    #[test]
    fn show_stops_early_on_exhaustion() {
        let calls = Arc::new(AtomicUsize::new(0));
        assert_eq!(counted(2, calls).show(3), "[1, 2]");
        assert_eq!(Generator::empty().show(0), "[]");
    }
}
