//! Partitions confined to a `k x w` box.
//!
//! These index the Schubert classes of `G(k, k + w)`. Parts are stored with
//! trailing zeros so every partition in a given box has exactly `k` entries;
//! rendering drops the zeros.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxedPartition {
    parts: Vec<usize>,
    width: usize,
}

impl BoxedPartition {
    /// Builds a partition in the `k x w` box, padding `parts` with zeros.
    pub fn new(parts: &[usize], k: usize, w: usize) -> Result<Self> {
        let invalid = || Error::InvalidPartition { parts: parts.to_vec(), k, w };
        if k == 0 || w == 0 || parts.len() > k {
            return Err(invalid());
        }
        if parts.first().is_some_and(|&p| p > w) || parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(invalid());
        }
        let mut padded = parts.to_vec();
        padded.resize(k, 0);
        Ok(Self { parts: padded, width: w })
    }

    pub fn empty(k: usize, w: usize) -> Self {
        Self { parts: vec![0; k], width: w }
    }

    /// The full box `(w, ..., w)`; its class is the point class.
    pub fn full(k: usize, w: usize) -> Self {
        Self { parts: vec![w; k], width: w }
    }

    /// The special partition `(m, 0, ..., 0)`.
    pub fn special(m: usize, k: usize, w: usize) -> Result<Self> {
        if m > w {
            return Err(Error::NotSpecial { size: m, width: w });
        }
        Self::new(&[m], k, w)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Parts with trailing zeros removed.
    pub fn nonzero_parts(&self) -> &[usize] {
        &self.parts[..self.length()]
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn same_box(&self, other: &Self) -> bool {
        self.k() == other.k() && self.width == other.width
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.same_box(other) && self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }

    /// Complement in the box, `(w - l_k, ..., w - l_1)`.
    pub fn dual(&self) -> Self {
        let parts = self.parts.iter().rev().map(|&p| self.width - p).collect();
        Self { parts, width: self.width }
    }

    /// Parses comma-separated parts (`"2,1"`); `""` and `"0"` give the empty partition.
    pub fn parse(s: &str, k: usize, w: usize) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Input(format!("partition {s:?}: {e}")))?
        };
        let trimmed: Vec<usize> = {
            let len = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
            parts[..len].to_vec()
        };
        Self::new(&trimmed, k, w)
    }
}

impl Ord for BoxedPartition {
    /// Reverse-lexicographic within a box: `(2,0)` sorts before `(1,1)`.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k(), self.width)
            .cmp(&(other.k(), other.width))
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for BoxedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoxedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero_parts();
        if nz.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = nz.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl Serialize for BoxedPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.nonzero_parts().serialize(serializer)
    }
}

/// All partitions of `m` in the `k x w` box, in reverse-lexicographic order.
///
/// An out-of-range `m` yields an empty list.
pub fn enumerate(k: usize, w: usize, m: usize) -> Vec<BoxedPartition> {
    let mut out = Vec::new();
    if k == 0 || w == 0 || m > k * w {
        return out;
    }
    let mut current = Vec::with_capacity(k);
    fill(k, w, w, m, &mut current, &mut out);
    out
}

fn fill(
    k: usize,
    width: usize,
    max_part: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<BoxedPartition>,
) {
    let slots = k - current.len();
    if slots == 0 {
        if remaining == 0 {
            out.push(BoxedPartition { parts: current.clone(), width });
        }
        return;
    }
    if remaining > slots * max_part {
        return;
    }
    // smallest first part that can still absorb the rest
    let lo = remaining.div_ceil(slots);
    for p in (lo..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(k, width, p, remaining - p, current, out);
        current.pop();
    }
}

/// All partitions in the box, grouped by size `0..=k*w`.
pub fn enumerate_box(k: usize, w: usize) -> Vec<BoxedPartition> {
    (0..=k * w).flat_map(|m| enumerate(k, w, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize], k: usize, w: usize) -> BoxedPartition {
        BoxedPartition::new(parts, k, w).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(2, 2, 2), vec![p(&[2], 2, 2), p(&[1, 1], 2, 2)]);
        assert_eq!(enumerate(2, 2, 0), vec![p(&[], 2, 2)]);
        assert_eq!(enumerate(2, 3, 3), vec![p(&[3], 2, 3), p(&[2, 1], 2, 3)]);
        assert!(enumerate(2, 2, 5).is_empty());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p(&[2], 2, 2).dual(), p(&[2], 2, 2));
        assert_eq!(p(&[1, 1], 2, 2).dual(), p(&[1, 1], 2, 2));
        assert_eq!(BoxedPartition::full(3, 4).dual(), BoxedPartition::empty(3, 4));
        assert_eq!(p(&[2, 1], 2, 3).dual(), p(&[2, 1], 2, 3));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(BoxedPartition::new(&[1, 2], 2, 3).is_err());
        assert!(BoxedPartition::new(&[4], 2, 3).is_err());
        assert!(BoxedPartition::new(&[1, 1, 1], 2, 3).is_err());
        assert!(BoxedPartition::special(3, 2, 2).is_err());
    }

    #[test]
    fn display_and_parse_drop_trailing_zeros() {
        let l = p(&[2, 1], 3, 3);
        assert_eq!(l.parts(), &[2, 1, 0]);
        assert_eq!(l.to_string(), "2,1");
        assert_eq!(BoxedPartition::parse("2,1,0", 3, 3).unwrap(), l);
        assert_eq!(BoxedPartition::parse("", 3, 3).unwrap().to_string(), "0");
        assert_eq!(serde_json::to_string(&l).unwrap(), "[2,1]");
    }

    #[test]
    fn order_is_reverse_lex() {
        let mut v = vec![p(&[1, 1], 2, 2), p(&[2], 2, 2)];
        v.sort();
        assert_eq!(v, enumerate(2, 2, 2));
    }
}
