/// A closed, 1-based row interval `[lo, hi]` in a suffix-sorted matrix.
///
/// Empty intervals are represented by `lo > hi`; the canonical empty value
/// is `[1, 0]`. All index structures in this crate hand out and accept
/// intervals in this form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub const EMPTY: Interval = Interval { lo: 1, hi: 0 };

    #[inline]
    pub fn new(lo: usize, hi: usize) -> Self {
        Interval { lo, hi }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// Number of rows covered.
    #[inline]
    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    #[inline]
    pub fn contains(&self, row: usize) -> bool {
        self.lo <= row && row <= self.hi
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
