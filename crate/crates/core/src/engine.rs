//! Resumable producers and the answer streams built on them.
//!
//! A producer is an `async` computation handed a [`Co`] capability. Each
//! `co.yield_(v).await` suspends it and delivers `v` to whoever called
//! [`Engine::next`]; returning `Ok(())` completes it. The engine polls the
//! producer's future directly on the caller's thread with a no-op waker, so
//! producer code only runs while a `next` call is in flight, yields cost no
//! stack, and dropping a suspended producer runs its destructors exactly
//! once.
//!
//! ```
//! use lazy_streams::engine::{answer_source, Producer};
//! use lazy_streams::Value;
//!
//! let mut g = answer_source(Producer::new(|co| async move {
//!     for n in 0..3 {
//!         co.yield_(n).await;
//!     }
//!     Ok(())
//! }));
//! assert_eq!(g.take_vec(5), vec![Value::Int(0), Value::Int(1), Value::Int(2)]);
//! ```

use std::any::Any;
use std::fmt;
use std::future::Future;
use std::panic::{self, AssertUnwindSafe};
use std::pin::Pin;
use std::sync::{Arc, Mutex};
use std::task::{Context, Poll, Waker};

use crate::error::StreamError;
use crate::generator::Generator;
use crate::value::Value;

type Slot = Arc<Mutex<Option<Value>>>;
type BoxFuture = Pin<Box<dyn Future<Output = Result<(), StreamError>> + Send>>;

/// The yield capability given to a producer.
pub struct Co {
    slot: Slot,
}

impl Co {
    /// Hands `value` to the consumer and suspends until the next ask.
    pub fn yield_(&self, value: impl Into<Value>) -> Yield<'_> {
        Yield {
            co: self,
            value: Some(value.into()),
        }
    }
}

/// Future returned by [`Co::yield_`].
#[must_use = "a yield only suspends the producer when awaited"]
pub struct Yield<'a> {
    co: &'a Co,
    value: Option<Value>,
}

impl Future for Yield<'_> {
    type Output = ();

    fn poll(mut self: Pin<&mut Self>, _cx: &mut Context<'_>) -> Poll<()> {
        match self.value.take() {
            Some(v) => {
                *lock(&self.co.slot) = Some(v);
                Poll::Pending
            }
            None => Poll::Ready(()),
        }
    }
}

fn lock(slot: &Slot) -> std::sync::MutexGuard<'_, Option<Value>> {
    slot.lock().unwrap_or_else(|e| e.into_inner())
}

/// A not-yet-started resumable computation.
pub struct Producer(Box<dyn FnOnce(Co) -> BoxFuture + Send>);

impl Producer {
    pub fn new<F, Fut>(body: F) -> Self
    where
        F: FnOnce(Co) -> Fut + Send + 'static,
        Fut: Future<Output = Result<(), StreamError>> + Send + 'static,
    {
        Producer(Box::new(move |co| Box::pin(body(co))))
    }
}

impl fmt::Debug for Producer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Producer")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineStatus {
    Fresh,
    Suspended,
    Completed,
    Stopped,
}

enum Body {
    Fresh(Producer),
    Running(BoxFuture),
    Finished,
}

pub struct Engine {
    status: EngineStatus,
    body: Body,
    slot: Slot,
}

impl Engine {
    pub fn new(producer: Producer) -> Self {
        Engine {
            status: EngineStatus::Fresh,
            body: Body::Fresh(producer),
            slot: Arc::new(Mutex::new(None)),
        }
    }

    pub fn status(&self) -> EngineStatus {
        self.status
    }

    /// Resumes the producer up to its next yield.
    ///
    /// Returns `Ok(None)` once the producer has returned or the engine was
    /// stopped. A producer error (or panic) is returned once; the engine is
    /// finished afterwards.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Result<Option<Value>, StreamError> {
        if let Body::Fresh(_) = self.body {
            let Body::Fresh(producer) = std::mem::replace(&mut self.body, Body::Finished) else {
                unreachable!()
            };
            let co = Co {
                slot: self.slot.clone(),
            };
            self.body = Body::Running((producer.0)(co));
        }
        let Body::Running(fut) = &mut self.body else {
            return Ok(None);
        };

        let mut cx = Context::from_waker(Waker::noop());
        let polled = panic::catch_unwind(AssertUnwindSafe(|| fut.as_mut().poll(&mut cx)));
        let outcome = match polled {
            Ok(Poll::Pending) => match lock(&self.slot).take() {
                Some(v) => {
                    self.status = EngineStatus::Suspended;
                    return Ok(Some(v));
                }
                None => Err(StreamError::Suspended),
            },
            Ok(Poll::Ready(Ok(()))) => Ok(None),
            Ok(Poll::Ready(Err(e))) => Err(e),
            Err(payload) => Err(StreamError::Panicked(panic_message(payload))),
        };
        self.body = Body::Finished;
        self.status = EngineStatus::Completed;
        outcome
    }

    /// Drops the producer, wherever it is suspended. Idempotent; a fresh
    /// engine's producer is never started.
    pub fn stop(&mut self) {
        if self.status != EngineStatus::Completed {
            self.status = EngineStatus::Stopped;
        }
        self.body = Body::Finished;
        lock(&self.slot).take();
    }
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Engine")
            .field("status", &self.status)
            .finish()
    }
}

fn panic_message(payload: Box<dyn Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_owned()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "non-string panic payload".to_owned()
    }
}

pub fn engine_create(producer: Producer) -> Engine {
    Engine::new(producer)
}

/// Wraps a producer's yields as a generator. Stopping the generator stops
/// the engine.
pub fn answer_source(producer: Producer) -> Generator {
    let mut engine = Engine::new(producer);
    Generator::new(move || engine.next())
}

/// Like [`answer_source`], but the returned generator remembers `factory`
/// and can be restarted with [`clone_source`]. Only meaningful when the
/// producers built by `factory` are free of side effects.
pub fn clonable_source<F>(factory: F) -> Generator
where
    F: Fn() -> Producer + Send + Sync + 'static,
{
    clonable_from(Arc::new(factory))
}

fn clonable_from<F>(factory: Arc<F>) -> Generator
where
    F: Fn() -> Producer + Send + Sync + 'static,
{
    let replay = {
        let factory = factory.clone();
        Arc::new(move || clonable_from(factory.clone()))
    };
    answer_source(factory()).with_replay(replay)
}

/// A fresh generator replaying a clonable source from its first element.
/// The original is left untouched.
pub fn clone_source(g: &Generator) -> Result<Generator, StreamError> {
    g.replay()
        .map(|replay| replay())
        .ok_or(StreamError::NotClonable)
}

/// Naturals from a forward loop that yields as it goes.
pub fn and_nats() -> Producer {
    Producer::new(|co| async move {
        let mut n: i64 = 0;
        loop {
            let next = n + 1;
            co.yield_(n).await;
            n = next;
        }
    })
}

/// Naturals as the solutions of `nat_from(From, To) :- From = To ; nat_from(From + 1, To)`,
/// found by depth-first search over an explicit choice-point stack.
///
/// Each disjunction pushes its second branch as a choice point and then
/// runs the first; backtracking pops the most recent choice point. The
/// second branch is the last alternative, so its choice point is gone
/// before the recursive call runs and the stack never holds more than one
/// entry.
pub fn or_nats() -> Producer {
    enum Goal {
        NatFrom(i64),
    }
    enum Choice {
        Descend(i64),
    }
    Producer::new(|co| async move {
        let mut goal = Some(Goal::NatFrom(0));
        let mut choices: Vec<Choice> = Vec::new();
        loop {
            match goal.take() {
                Some(Goal::NatFrom(from)) => {
                    choices.push(Choice::Descend(from));
                    // first branch: From = To is a solution
                    co.yield_(from).await;
                }
                None => match choices.pop() {
                    Some(Choice::Descend(from)) => goal = Some(Goal::NatFrom(from + 1)),
                    None => return Ok(()),
                },
            }
        }
    })
}
