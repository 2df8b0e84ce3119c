//! Integer partitions, the orders on them, and ordered set partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Weakly decreasing sequence of positive integers. Serializes as the plain
/// part array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for IntPartition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        IntPartition::new(parts)
    }
}

impl From<IntPartition> for Vec<usize> {
    fn from(p: IntPartition) -> Self {
        p.parts
    }
}

impl IntPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts });
        }
        Ok(IntPartition { parts })
    }

    /// Empty partition of 0.
    pub fn empty() -> Self {
        IntPartition { parts: Vec::new() }
    }

    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            IntPartition::empty()
        } else {
            IntPartition { parts: vec![n] }
        }
    }

    /// Parses the comma-separated form `"3,1"` (partitions are always
    /// comma-separated on the CLI).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in partition")))
            })
            .collect::<Result<_, _>>()?;
        IntPartition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> IntPartition {
        let cols = self.first_part();
        let parts: Vec<usize> = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        IntPartition { parts }
    }

    /// Majorization (dominance): `self >= other` iff all prefix sums dominate.
    pub fn majorizes(&self, other: &IntPartition) -> Result<bool, Error> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut sa = 0usize;
        let mut sb = 0usize;
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            sa += self.parts.get(i).copied().unwrap_or(0);
            sb += other.parts.get(i).copied().unwrap_or(0);
            if sa < sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff `self` refines `other`: `self` is obtained by replacing each
    /// part of `other` with a partition of it and re-sorting.
    pub fn refines(&self, other: &IntPartition) -> Result<bool, Error> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        // assign the parts of self to the parts of other so each group sums
        // right; parts are few, so backtracking is plenty fast
        fn assign(pool: &mut Vec<usize>, targets: &[usize]) -> bool {
            if targets.is_empty() {
                return pool.is_empty();
            }
            let t = targets[0];
            // choose a subset of the pool summing to t; always include the
            // largest remaining copy of each value first to cut symmetry
            fn subset(pool: &mut Vec<usize>, start: usize, t: usize, rest: &[usize]) -> bool {
                if t == 0 {
                    return assign(pool, rest);
                }
                let mut last = usize::MAX;
                for i in start..pool.len() {
                    let v = pool[i];
                    if v > t || v == last {
                        continue;
                    }
                    last = v;
                    let v = pool.remove(i);
                    if subset(pool, i, t - v, rest) {
                        pool.insert(i, v);
                        return true;
                    }
                    pool.insert(i, v);
                }
                false
            }
            subset(pool, 0, t, &targets[1..])
        }
        let mut pool = self.parts.clone();
        Ok(assign(&mut pool, &other.parts))
    }

    /// `z_lambda = 1^{a_1} a_1! 2^{a_2} a_2! ...` where `a_i` counts parts
    /// equal to `i`.
    pub fn z(&self) -> i64 {
        let n = self.first_part();
        let mut out: i64 = 1;
        for v in 1..=n {
            let mult = self.parts.iter().filter(|&&p| p == v).count() as i64;
            for k in 1..=mult {
                out *= k;
            }
            out *= (v as i64).pow(mult as u32);
        }
        out
    }

    /// All partitions of `n` in reverse lexicographic order: `(n)` first,
    /// `(1^n)` last. This is the canonical index order for every transition
    /// matrix in the crate.
    pub fn all(n: usize) -> Vec<IntPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
            if remaining == 0 {
                out.push(IntPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

impl fmt::Debug for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPartition{self}")
    }
}

/// Sequence of pairwise disjoint nonempty blocks covering `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedSetPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Sizes of the blocks, in block order (a composition of `n`).
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

/// All ordered set partitions of `{1..n}` with block `j` of size `sizes[j]`;
/// each block is listed in increasing order.
pub fn ordered_set_partitions(n: usize, sizes: &[usize]) -> Vec<OrderedSetPartition> {
    assert_eq!(sizes.iter().sum::<usize>(), n, "sizes must sum to n");
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut free: Vec<usize> = (1..=n).collect();
    fn rec(
        sizes: &[usize],
        free: &mut Vec<usize>,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<OrderedSetPartition>,
    ) {
        if blocks.len() == sizes.len() {
            out.push(OrderedSetPartition {
                blocks: blocks.clone(),
            });
            return;
        }
        let k = sizes[blocks.len()];
        let choices = combinations(free, k);
        for chosen in choices {
            let rest: Vec<usize> = free.iter().copied().filter(|x| !chosen.contains(x)).collect();
            let saved = std::mem::replace(free, rest);
            blocks.push(chosen);
            rec(sizes, free, blocks, out);
            blocks.pop();
            *free = saved;
        }
    }
    rec(sizes, &mut free, &mut blocks, &mut out);
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lam(parts: &[usize]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(lam(&[3, 1]).transpose(), lam(&[2, 1, 1]));
        assert_eq!(lam(&[4]).transpose(), lam(&[1, 1, 1, 1]));
    }

    #[test]
    fn z_examples() {
        assert_eq!(lam(&[5]).z(), 5);
        assert_eq!(lam(&[1, 1, 1]).z(), 6);
        assert_eq!(lam(&[3, 1]).z(), 3);
        assert_eq!(lam(&[2, 2, 1]).z(), 8);
    }

    #[test]
    fn refinement_examples() {
        assert!(lam(&[2, 1, 1]).refines(&lam(&[2, 2])).unwrap());
        assert!(!lam(&[3, 1]).refines(&lam(&[2, 2])).unwrap());
        for n in 1..=6 {
            let ones = lam(&vec![1; n]);
            for mu in IntPartition::all(n) {
                assert!(ones.refines(&mu).unwrap());
                assert!(mu.refines(&IntPartition::single_row(n)).unwrap());
            }
        }
    }

    /// Brute-force refinement oracle: enumerate all splittings of each part.
    fn refines_brute(lambda: &IntPartition, mu: &IntPartition) -> bool {
        fn all_splits(parts: &[usize]) -> Vec<Vec<usize>> {
            if parts.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for head in IntPartition::all(parts[0]) {
                for tail in all_splits(&parts[1..]) {
                    let mut v = head.parts().to_vec();
                    v.extend(tail);
                    out.push(v);
                }
            }
            out
        }
        all_splits(mu.parts()).into_iter().any(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v == lambda.parts()
        })
    }

    #[test]
    fn refinement_matches_brute_force() {
        for n in 1..=7 {
            for la in IntPartition::all(n) {
                for mu in IntPartition::all(n) {
                    assert_eq!(
                        la.refines(&mu).unwrap(),
                        refines_brute(&la, &mu),
                        "mismatch at {la} vs {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn majorization_antisymmetric() {
        for n in 1..=7 {
            for la in IntPartition::all(n) {
                for mu in IntPartition::all(n) {
                    if la.majorizes(&mu).unwrap() && mu.majorizes(&la).unwrap() {
                        assert_eq!(la, mu);
                    }
                }
            }
        }
    }

    #[test]
    fn reverse_lex_order() {
        let names: Vec<String> = IntPartition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(IntPartition::all(9).len(), 30);
    }

    #[test]
    fn osp_counts() {
        assert_eq!(ordered_set_partitions(4, &[3, 1]).len(), 4);
        assert_eq!(ordered_set_partitions(4, &[1, 1, 1, 1]).len(), 24);
        assert_eq!(ordered_set_partitions(4, &[2, 2]).len(), 6);
        let osps = ordered_set_partitions(4, &[3, 1]);
        assert!(osps.iter().all(|o| o.blocks[0].windows(2).all(|w| w[0] < w[1])));
    }

    proptest! {
        #[test]
        fn transpose_is_involution(parts in proptest::collection::vec(1usize..=6, 0..6)) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let la = IntPartition::new(parts).unwrap();
            prop_assert_eq!(la.transpose().transpose(), la);
        }
    }
}
