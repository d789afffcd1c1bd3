//! Partitions and Young-diagram combinatorics.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

/// Which family of nested hooks to assemble.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HookKind {
    /// Hooks of shape (r+1, 1^(r-1)).
    SymSkew,
    /// Hooks of shape (r, 1^r).
    ExtSkew,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts increase anywhere.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("parts must be weakly decreasing: {parts:?}")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("interior zero part: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("literal partition must be weakly decreasing")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle (a^b).
    pub fn rectangle(a: u32, b: usize) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Partition(vec![a; b])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// True iff `mu` fits inside `self` row by row.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Adds `l` boxes with no two in the same row.
    pub fn add_vertical_strip(&self, l: u32, max_length: usize) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        let rows = (self.len() + l as usize).min(max_length);
        if self.len() > max_length {
            return out;
        }
        let mut cur: Vec<u32> = (0..rows).map(|i| self.part(i)).collect();
        fn rec(base: &Partition, cur: &mut Vec<u32>, row: usize, left: u32, out: &mut BTreeSet<Partition>) {
            if left == 0 {
                out.insert(Partition::new(cur.clone()).expect("strip keeps shape"));
                return;
            }
            if row >= cur.len() {
                return;
            }
            if (cur.len() - row) < left as usize {
                return;
            }
            let bound = if row == 0 { u32::MAX } else { cur[row - 1] };
            if base.part(row) < bound {
                cur[row] += 1;
                rec(base, cur, row + 1, left - 1, out);
                cur[row] -= 1;
            }
            rec(base, cur, row + 1, left, out);
        }
        rec(self, &mut cur, 0, l, &mut out);
        out
    }

    /// Adds `l` boxes with no two in the same column.
    pub fn add_horizontal_strip(&self, l: u32, max_length: usize) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        if self.len() > max_length {
            return out;
        }
        let rows = (self.len() + 1).min(max_length);
        let mut cur: Vec<u32> = (0..rows).map(|i| self.part(i)).collect();
        fn rec(base: &Partition, cur: &mut Vec<u32>, row: usize, left: u32, out: &mut BTreeSet<Partition>) {
            if row == cur.len() {
                if left == 0 {
                    out.insert(Partition::new(cur.clone()).expect("strip keeps shape"));
                }
                return;
            }
            let cap = if row == 0 { left } else { (base.part(row - 1) - base.part(row)).min(left) };
            for add in 0..=cap {
                cur[row] = base.part(row) + add;
                rec(base, cur, row + 1, left - add, out);
            }
            cur[row] = base.part(row);
        }
        rec(self, &mut cur, 0, l, &mut out);
        out
    }

    /// Partition from Frobenius coordinates (a_1 > a_2 > ... | b_1 > b_2 > ...).
    pub fn from_frobenius(arms: &[u32], legs: &[u32]) -> Result<Partition> {
        if arms.len() != legs.len() || arms.windows(2).any(|w| w[0] <= w[1]) || legs.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("bad Frobenius coordinates ({arms:?} | {legs:?})")));
        }
        let d = arms.len();
        let rows = if d == 0 { 0 } else { legs[0] as usize + 1 };
        let mut parts = vec![0u32; rows.max(d)];
        for i in 0..d {
            parts[i] = arms[i] + i as u32 + 1;
        }
        // Below the diagonal square, row r has length #{j : legs[j] + j >= r}.
        for (r, part) in parts.iter_mut().enumerate().skip(d) {
            *part = (0..d).filter(|&j| legs[j] as usize + j >= r).count() as u32;
        }
        Partition::new(parts)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        Self::bounded(n, usize::MAX, n)
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
    pub fn bounded(n: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(left: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=max_part.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        rec(n, max_part, max_len, &mut cur, &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(outer: &Partition, row: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if row == outer.len() {
                return;
            }
            for p in 1..=cap.min(outer.part(row)) {
                cur.push(p);
                rec(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(self, 0, self.first(), &mut cur, &mut out);
        out
    }

    /// Whether the shape is (2^c, 1^d); returns (c, d) if so.
    pub fn two_column(&self) -> Option<(usize, usize)> {
        if self.first() > 2 {
            return None;
        }
        let c = self.0.iter().filter(|&&p| p == 2).count();
        Some((c, self.len() - c))
    }
}

/// Distinct-part partitions of n with parts ≥ `min_part`, largest first.
fn strict_partitions(n: u32, min_part: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: u32, below: u32, min_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for r in (min_part..below.min(left + 1)).rev() {
            cur.push(r);
            rec(left - r, r, min_part, cur, out);
            cur.pop();
        }
    }
    rec(n, n + 1, min_part, &mut cur, &mut out);
    out
}

/// Partitions assembled from nested hooks along the diagonal with Σ r_i = n.
pub fn nested_hooks(n: u32, kind: HookKind) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(Partition::empty());
        return out;
    }
    for rs in strict_partitions(n, 1) {
        // The i-th hook (0-based) has arm a_i and leg b_i measured from diagonal cell (i, i).
        let (arms, legs): (Vec<u32>, Vec<u32>) = match kind {
            HookKind::SymSkew => rs.iter().map(|&r| (r, r - 1)).unzip(),
            HookKind::ExtSkew => rs.iter().map(|&r| (r - 1, r)).unzip(),
        };
        if let Ok(p) = Partition::from_frobenius(&arms, &legs) {
            out.insert(p);
        }
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPartition(format!("expected \"(p1,p2,...)\", got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::InvalidPartition(format!("bad part {x:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ps: &[&[u32]]) -> BTreeSet<Partition> {
        ps.iter().map(|p| Partition::of(p)).collect()
    }

    /// Brute force: every way to add l boxes to λ, filtered by a row/column predicate.
    fn brute_strips(lambda: &Partition, l: u32, max_len: usize, vertical: bool) -> BTreeSet<Partition> {
        let n = lambda.size() + l;
        Partition::all_of_size(n)
            .into_iter()
            .filter(|p| p.len() <= max_len && p.contains(lambda))
            .filter(|p| {
                if vertical {
                    (0..p.len()).all(|i| p.part(i) - lambda.part(i) <= 1)
                } else {
                    let (pc, lc) = (p.conjugate(), lambda.conjugate());
                    (0..pc.len()).all(|i| pc.part(i) - lc.part(i) <= 1)
                }
            })
            .collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::of(&[2, 1]).conjugate(), Partition::of(&[2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::of(&[3, 2]).conjugate(), Partition::of(&[2, 2, 1]));
    }

    #[test]
    fn contains_examples() {
        assert!(Partition::of(&[2, 1]).contains(&Partition::of(&[1])));
        assert!(!Partition::of(&[2, 1]).contains(&Partition::of(&[1, 1, 1])));
        assert!(Partition::of(&[2, 2]).contains(&Partition::of(&[2])));
    }

    #[test]
    fn vertical_strip_examples() {
        assert_eq!(Partition::of(&[1]).add_vertical_strip(1, 2), set(&[&[2], &[1, 1]]));
        assert_eq!(Partition::empty().add_vertical_strip(2, 3), set(&[&[1, 1]]));
        assert_eq!(Partition::of(&[2]).add_vertical_strip(2, 3), set(&[&[3, 1], &[2, 1, 1]]));
    }

    #[test]
    fn horizontal_strip_examples() {
        assert_eq!(Partition::of(&[1]).add_horizontal_strip(1, 2), set(&[&[2], &[1, 1]]));
        assert_eq!(Partition::of(&[2]).add_horizontal_strip(2, 2), set(&[&[4], &[3, 1], &[2, 2]]));
        assert_eq!(Partition::empty().add_horizontal_strip(3, 1), set(&[&[3]]));
    }

    #[test]
    fn strips_match_brute_force() {
        for n in 0..=5 {
            for lambda in Partition::all_of_size(n) {
                for l in 0..=3 {
                    for cap in 1..=5 {
                        assert_eq!(
                            lambda.add_vertical_strip(l, cap),
                            brute_strips(&lambda, l, cap, true),
                            "vertical {lambda} + {l} cap {cap}"
                        );
                        assert_eq!(
                            lambda.add_horizontal_strip(l, cap),
                            brute_strips(&lambda, l, cap, false),
                            "horizontal {lambda} + {l} cap {cap}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn nested_hook_examples() {
        assert_eq!(nested_hooks(2, HookKind::SymSkew), set(&[&[3, 1]]));
        assert_eq!(nested_hooks(2, HookKind::ExtSkew), set(&[&[2, 1, 1]]));
        assert_eq!(nested_hooks(0, HookKind::SymSkew), set(&[&[]]));
        assert_eq!(nested_hooks(0, HookKind::ExtSkew), set(&[&[]]));
        assert_eq!(nested_hooks(3, HookKind::SymSkew), set(&[&[4, 1, 1], &[3, 3]]));
        assert_eq!(nested_hooks(3, HookKind::ExtSkew), set(&[&[3, 1, 1, 1], &[2, 2, 2]]));
    }

    #[test]
    fn frobenius_round_trip() {
        assert_eq!(Partition::from_frobenius(&[2, 0], &[1, 0]).unwrap(), Partition::of(&[3, 2]));
        assert_eq!(Partition::from_frobenius(&[], &[]).unwrap(), Partition::empty());
    }

    #[test]
    fn text_form() {
        let p: Partition = "(3,2,1)".parse().unwrap();
        assert_eq!(p, Partition::of(&[3, 2, 1]));
        assert_eq!(p.to_string(), "(3,2,1)");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "()");
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("3,2".parse::<Partition>().is_err());
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), Partition::of(&[2, 1]));
    }

    #[test]
    fn counts_of_partitions() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
