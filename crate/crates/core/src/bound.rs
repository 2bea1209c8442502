use crate::error::{Error, Result};

/// Upper limit on `n` for every exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumerationBound(usize);

impl EnumerationBound {
    pub const DEFAULT: EnumerationBound = EnumerationBound(12);

    pub fn new(max_n: usize) -> Result<Self> {
        if max_n == 0 {
            return Err(Error::ZeroSize);
        }
        Ok(EnumerationBound(max_n))
    }

    pub fn max_n(self) -> usize {
        self.0
    }

    /// Checks `1 <= n <= bound`.
    pub fn check(self, n: usize) -> Result<()> {
        if n == 0 {
            Err(Error::ZeroSize)
        } else if n > self.0 {
            Err(Error::BoundExceeded { n, bound: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationBound {
    fn default() -> Self {
        Self::DEFAULT
    }
}
