//! A counting global allocator.
//!
//! Install it in a binary or test target with
//!
//! ```ignore
//! #[global_allocator]
//! static ALLOC: lazy_streams::alloc::CountingAlloc = lazy_streams::alloc::CountingAlloc;
//! ```
//!
//! Counts are kept per thread, so concurrent tests do not disturb each other.
//! When the allocator is not installed, [`measure`] reports `None`.

use std::alloc::{GlobalAlloc, Layout, System};
use std::cell::Cell;
use std::sync::atomic::{AtomicBool, Ordering};

pub struct CountingAlloc;

static ACTIVE: AtomicBool = AtomicBool::new(false);

thread_local! {
    static LIVE: Cell<isize> = const { Cell::new(0) };
    static PEAK: Cell<isize> = const { Cell::new(0) };
}

fn grow(bytes: usize) {
    let _ = LIVE.try_with(|live| {
        let now = live.get() + bytes as isize;
        live.set(now);
        let _ = PEAK.try_with(|peak| {
            if now > peak.get() {
                peak.set(now);
            }
        });
    });
}

fn shrink(bytes: usize) {
    let _ = LIVE.try_with(|live| live.set(live.get() - bytes as isize));
}

unsafe impl GlobalAlloc for CountingAlloc {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = unsafe { System.alloc(layout) };
        if !p.is_null() {
            ACTIVE.store(true, Ordering::Relaxed);
            grow(layout.size());
        }
        p
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let p = unsafe { System.alloc_zeroed(layout) };
        if !p.is_null() {
            ACTIVE.store(true, Ordering::Relaxed);
            grow(layout.size());
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        unsafe { System.dealloc(ptr, layout) };
        shrink(layout.size());
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = unsafe { System.realloc(ptr, layout, new_size) };
        if !p.is_null() {
            shrink(layout.size());
            grow(new_size);
        }
        p
    }
}

/// Whether [`CountingAlloc`] is the global allocator of this process.
pub fn is_active() -> bool {
    if !ACTIVE.load(Ordering::Relaxed) {
        drop(std::hint::black_box(Box::new(0u8)));
    }
    ACTIVE.load(Ordering::Relaxed)
}

/// Runs `f` and returns its result with the peak number of bytes the current
/// thread held on top of what it held before the call.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, Option<usize>) {
    if !is_active() {
        return (f(), None);
    }
    let base = LIVE.with(Cell::get);
    PEAK.with(|p| p.set(base));
    let r = f();
    let peak = PEAK.with(Cell::get);
    (r, Some((peak - base).max(0) as usize))
}
