use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::HiveError;

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are dropped on construction, so two partitions compare
/// equal exactly when they agree after stripping zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self, HiveError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(HiveError::NotDecreasing(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `k`-th part, 1-based, zero past the length.
    pub fn part(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u64> {
        (1..=n).map(|k| self.part(k)).collect()
    }

    pub fn scaled(&self, factor: u64) -> Partition {
        if factor == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * factor).collect())
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition((1..=len).map(|k| self.part(k) + other.part(k)).collect())
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|k| other.part(k) <= self.part(k))
    }

    /// Strictly decreasing when padded to `n` parts.
    pub fn is_strict(&self, n: usize) -> bool {
        let p = self.padded(n);
        p.windows(2).all(|w| w[0] > w[1])
    }

    /// All partitions of `size` with at most `max_len` parts, in reverse
    /// lexicographic order.
    pub fn all_of_size(size: u64, max_len: usize) -> Vec<Partition> {
        fn go(
            rest: u64,
            max_part: u64,
            slots: usize,
            cur: &mut Vec<u64>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `max_size` with at most `max_len` parts.
    pub fn all_up_to(max_size: u64, max_len: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| Partition::all_of_size(s, max_len))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = HiveError;

    fn try_from(parts: Vec<u64>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

/// Shorthand for tests and examples: `part![3, 2, 1]`.
#[macro_export]
macro_rules! part {
    ($($p:expr),* $(,)?) => {
        $crate::Partition::new(<[u64]>::to_vec(&[$($p as u64),*])).expect("valid partition")
    };
}
