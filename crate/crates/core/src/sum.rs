//! Pairwise (cascade) summation.
//!
//! Partial sums are kept on a binary-counter stack: level `i` holds the sum
//! of a block of `2^i` consecutive inputs, so each input meets `O(log n)`
//! roundings and the total work is the same as a left fold.

use alloc::vec::Vec;
use core::ops::Add;

use crate::{XComplex, XReal};

/// Streaming pairwise accumulator.
#[derive(Clone, Debug)]
pub struct PairwiseSum<T> {
    levels: Vec<Option<T>>,
    count: usize,
}

impl<T: Copy + Add<Output = T>> PairwiseSum<T> {
    pub fn new() -> Self {
        Self { levels: Vec::new(), count: 0 }
    }

    pub fn push(&mut self, x: T) {
        let mut carry = x;
        for slot in self.levels.iter_mut() {
            match slot.take() {
                Some(s) => carry = s + carry,
                None => {
                    *slot = Some(carry);
                    self.count += 1;
                    return;
                }
            }
        }
        self.levels.push(Some(carry));
        self.count += 1;
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Sum of everything pushed so far; `None` when empty.
    pub fn total(&self) -> Option<T> {
        // smallest blocks first
        self.levels.iter().flatten().copied().reduce(|acc, s| s + acc)
    }
}

impl<T: Copy + Add<Output = T>> Default for PairwiseSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Copy + Add<Output = T>> Extend<T> for PairwiseSum<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for x in iter {
            self.push(x);
        }
    }
}

pub fn pairwise_sum(xs: impl IntoIterator<Item = XReal>) -> XReal {
    let mut acc = PairwiseSum::new();
    acc.extend(xs);
    acc.total().unwrap_or(XReal::ZERO)
}

pub fn pairwise_sum_complex(xs: impl IntoIterator<Item = XComplex>) -> XComplex {
    let mut acc = PairwiseSum::new();
    acc.extend(xs);
    acc.total().unwrap_or(XComplex::ZERO)
}
