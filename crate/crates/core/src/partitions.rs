//! Integer partitions and the Young-diagram operations used by every other
//! module: transpose, the two scalings `e×λ` (repeat parts) and `e·λ`
//! (multiply parts), their divisibility predicates, dominance and the
//! column-wise sum of diagrams that describes induced classes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A partition stored as its nonincreasing sequence of positive parts.
///
/// All constructors normalize (sort descending, drop zeros), so two
/// partitions are equal iff they have the same parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1, 1, …, 1)` with `n` ones.
    pub fn ones(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        Partition::new(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// True when every part equals 1.
    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Distinct part values with multiplicities, in increasing order of value.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Conjugate partition: `(λ^t)_i = #{j : λ_j ≥ i}`.
    pub fn transpose(&self) -> Partition {
        let width = self.largest() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// `e × λ`: every part repeated `e` times.
    pub fn times(&self, e: u32) -> Partition {
        assert!(e >= 1, "scaling factor must be positive");
        let parts = self
            .parts
            .iter()
            .flat_map(|&p| std::iter::repeat(p).take(e as usize))
            .collect();
        Partition { parts }
    }

    /// `e · λ`: every part multiplied by `e`.
    pub fn dot(&self, e: u32) -> Partition {
        assert!(e >= 1, "scaling factor must be positive");
        Partition {
            parts: self.parts.iter().map(|&p| p * e).collect(),
        }
    }

    /// `e |× λ`: every distinct part occurs with multiplicity divisible by `e`.
    pub fn divides_times(&self, e: u32) -> bool {
        assert!(e >= 1, "scaling factor must be positive");
        self.multiplicities().values().all(|&n| n % e == 0)
    }

    /// `e |· λ`: every part is divisible by `e`.
    pub fn divides_dot(&self, e: u32) -> bool {
        assert!(e >= 1, "scaling factor must be positive");
        self.parts.iter().all(|&p| p % e == 0)
    }

    /// Inverse of [`Partition::times`] when `e |× λ`.
    pub fn quotient_times(&self, e: u32) -> Option<Partition> {
        if !self.divides_times(e) {
            return None;
        }
        let parts = self.parts.iter().step_by(e as usize).copied().collect();
        Some(Partition { parts })
    }

    /// Dominance `self ≤ other`: every partial sum of `self` is at most the
    /// corresponding partial sum of `other`, shorter sequences padded by zeros.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..n {
            a += u64::from(self.parts.get(i).copied().unwrap_or(0));
            b += u64::from(other.parts.get(i).copied().unwrap_or(0));
            if a > b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n` in reverse-lexicographic order, `(n)` first.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

pub fn transpose(l: &Partition) -> Partition {
    l.transpose()
}

pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    a.dominated_by(b)
}

/// `(λ_1^t, …, λ_k^t)^t`: the transpose of the sorted concatenation of the
/// transposes, i.e. the column-wise sum of the Young diagrams.
pub fn concat_transpose<'a, I>(parts: I) -> Partition
where
    I: IntoIterator<Item = &'a Partition>,
{
    let cols: Vec<u32> = parts
        .into_iter()
        .flat_map(|l| l.transpose().parts)
        .collect();
    Partition::new(cols).transpose()
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl From<Vec<u32>> for Partition {
    fn from(v: Vec<u32>) -> Self {
        Partition::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(v: [u32; N]) -> Self {
        Partition::new(v.to_vec())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Ok(Partition::new(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(v: [u32; N]) -> Partition {
        Partition::from(v)
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p([3, 1]).transpose(), p([2, 1, 1]));
        assert_eq!(p([4, 2, 1]).transpose(), p([3, 2, 1, 1]));
    }

    #[test]
    fn scaling_examples() {
        assert_eq!(Partition::empty().times(1), Partition::empty());
        assert_eq!(p([2, 1]).times(2), p([2, 2, 1, 1]));
        assert_eq!(p([2]).times(3), p([2, 2, 2]));
        assert_eq!(p([3, 1]).dot(1), p([3, 1]));
        assert_eq!(p([2, 1]).dot(2), p([4, 2]));
        assert_eq!(p([1, 1]).dot(3), p([3, 3]));
    }

    #[test]
    fn divisibility_examples() {
        assert!(p([3, 3, 1, 1]).divides_times(2));
        assert!(!p([4]).divides_times(2));
        assert!(p([5, 2, 1]).divides_times(1));
        assert!(p([4, 2]).divides_dot(2));
        assert!(!p([3, 1]).divides_dot(2));
        assert!(p([3, 1]).divides_dot(1));
        assert_eq!(p([3, 3, 1, 1]).quotient_times(2), Some(p([3, 1])));
        assert_eq!(p([3, 1]).quotient_times(2), None);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p([2, 2]), &p([3, 1])));
        assert!(!dominance_leq(&p([3, 1]), &p([2, 2])));
        assert!(dominance_leq(&p([2, 1, 1]), &p([2, 1, 1])));
        // zero padding for unequal sizes
        assert!(dominance_leq(&p([1]), &p([2, 2])));
    }

    #[test]
    fn concat_transpose_examples() {
        assert_eq!(concat_transpose(&[p([2]), p([1, 1])]), p([3, 1]));
        let zeros = vec![p([1]); 4];
        assert_eq!(concat_transpose(&zeros), p([4]));
        assert_eq!(concat_transpose(&[p([3, 2, 2])]), p([3, 2, 2]));
        assert_eq!(concat_transpose(&[]), Partition::empty());
    }

    #[test]
    fn enumeration_order() {
        let all = Partition::all(4);
        let expect = vec![p([4]), p([3, 1]), p([2, 2]), p([2, 1, 1]), p([1, 1, 1, 1])];
        assert_eq!(all, expect);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn serde_shape() {
        let s = serde_json::to_string(&p([1, 3])).unwrap();
        assert_eq!(s, "[3,1]");
        let back: Partition = serde_json::from_str("[1,2,2]").unwrap();
        assert_eq!(back, p([2, 2, 1]));
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
    }
}
