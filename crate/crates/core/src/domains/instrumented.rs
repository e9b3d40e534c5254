use std::cell::Cell;
use std::fmt;

use num_bigint::BigInt;

use super::{Module, Ring};

thread_local! {
    static COUNTS: Cell<OpCounts> = const { Cell::new(OpCounts::ZERO) };
}

/// Per-thread tally of the arithmetic performed on [`Counted`] values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OpCounts {
    pub additions: u64,
    pub negations: u64,
    pub scalings: u64,
    pub multiplications: u64,
}

impl OpCounts {
    const ZERO: OpCounts = OpCounts {
        additions: 0,
        negations: 0,
        scalings: 0,
        multiplications: 0,
    };

    /// Reset the current thread's counters.
    pub fn reset() {
        COUNTS.with(|c| c.set(Self::ZERO));
    }

    /// Counters accumulated on the current thread since the last reset.
    pub fn snapshot() -> OpCounts {
        COUNTS.with(Cell::get)
    }

    fn bump(f: impl FnOnce(&mut OpCounts)) {
        COUNTS.with(|c| {
            let mut counts = c.get();
            f(&mut counts);
            c.set(counts);
        });
    }
}

/// Wrapper domain that records every operation applied to it.
#[derive(Clone, PartialEq, Debug)]
pub struct Counted<T>(pub T);

impl<T: fmt::Display> fmt::Display for Counted<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<T: Module> Module for Counted<T> {
    fn zero() -> Self {
        Counted(T::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn plus(&self, rhs: &Self) -> Self {
        OpCounts::bump(|c| c.additions += 1);
        Counted(self.0.plus(&rhs.0))
    }

    fn minus(&self, rhs: &Self) -> Self {
        OpCounts::bump(|c| c.additions += 1);
        Counted(self.0.minus(&rhs.0))
    }

    fn negated(&self) -> Self {
        OpCounts::bump(|c| c.negations += 1);
        Counted(self.0.negated())
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        OpCounts::bump(|c| c.scalings += 1);
        Counted(self.0.scale_int(k))
    }

    fn scale(&self, k: i64) -> Self {
        OpCounts::bump(|c| c.scalings += 1);
        Counted(self.0.scale(k))
    }
}

impl<T: Ring> Ring for Counted<T> {
    fn one() -> Self {
        Counted(T::one())
    }

    fn times(&self, rhs: &Self) -> Self {
        OpCounts::bump(|c| c.multiplications += 1);
        Counted(self.0.times(&rhs.0))
    }
}
