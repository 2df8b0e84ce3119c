//! Star networks, concatenations, zig-zag networks, and the bijection with
//! 3412/4231-avoiding permutations.

pub mod catalog;
pub mod dag;
pub mod zigzag;

pub use catalog::{
    canonical_312_rep, enumerate_networks, iota, is_descending_star, network_of, poset_equivalent,
};
pub use dag::{PathFamily, PlanarDag};
pub use zigzag::{Retention, ZigzagNetwork};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::perm::Permutation;

/// Subinterval `[lo, hi]` of `[1, n]` with at least two elements: the index
/// set of one star.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Self, Error> {
        if lo == 0 || lo >= hi {
            return Err(Error::InvalidConcatenation(format!(
                "bad interval [{lo},{hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn intersection(&self, other: &Interval) -> Option<(usize, usize)> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some((lo, hi))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.intersection(other).is_some()
    }

    /// Weak containment either way counts as nesting.
    pub fn nests_with(&self, other: &Interval) -> bool {
        (self.lo <= other.lo && other.hi <= self.hi) || (other.lo <= self.lo && self.hi <= other.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// An arbitrary left-to-right sequence of stars; not necessarily a valid
/// zig-zag recipe (augmented sequences are of this kind).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSequence {
    pub order: usize,
    pub stars: Vec<Interval>,
}

impl StarSequence {
    pub fn new(order: usize, stars: Vec<Interval>) -> Result<Self, Error> {
        if let Some(bad) = stars.iter().find(|s| s.hi > order) {
            return Err(Error::InvalidConcatenation(format!(
                "star {bad} exceeds order {order}"
            )));
        }
        Ok(StarSequence { order, stars })
    }
}

/// A validated concatenation of star networks: distinct pairwise nonnesting
/// intervals with the triple-overlap monotonicity condition.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Concatenation {
    order: usize,
    intervals: Vec<Interval>,
}

/// Plain serde image of a concatenation: `{order, intervals: [[lo,hi],...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConcatSpec {
    pub order: usize,
    pub intervals: Vec<(usize, usize)>,
}

impl Concatenation {
    pub fn new(order: usize, intervals: Vec<Interval>) -> Result<Self, Error> {
        if let Some(reason) = validation_failure(order, &intervals) {
            return Err(Error::InvalidConcatenation(reason));
        }
        Ok(Concatenation { order, intervals })
    }

    pub fn from_spec(spec: &ConcatSpec) -> Result<Self, Error> {
        let intervals = spec
            .intervals
            .iter()
            .map(|&(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>, _>>()?;
        Concatenation::new(spec.order, intervals)
    }

    pub fn to_spec(&self) -> ConcatSpec {
        ConcatSpec {
            order: self.order,
            intervals: self.intervals.iter().map(|s| (s.lo, s.hi)).collect(),
        }
    }

    pub fn empty(order: usize) -> Self {
        Concatenation {
            order,
            intervals: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn star_sequence(&self) -> StarSequence {
        StarSequence {
            order: self.order,
            stars: self.intervals.clone(),
        }
    }

    /// Covering pairs and the strict order they generate, on positions.
    pub fn cover_order(&self) -> CoverOrder {
        cover_order_of(&self.intervals)
    }

    /// Inserts the overlap star of every covering pair with overlap size
    /// greater than one immediately after the covered star. When one star is
    /// covered twice, the two overlap stars follow in the position order of
    /// the covering stars.
    pub fn augment(&self) -> StarSequence {
        let covers = self.cover_order().covers;
        let t = self.intervals.len();
        let mut inserts: Vec<Vec<Interval>> = vec![Vec::new(); t];
        for &(i, k) in &covers {
            let (lo, hi) = self.intervals[i]
                .intersection(&self.intervals[k])
                .expect("covering stars intersect");
            if hi > lo {
                inserts[i].push(Interval { lo, hi });
            }
        }
        let mut stars = Vec::with_capacity(t);
        for (i, star) in self.intervals.iter().enumerate() {
            stars.push(*star);
            stars.extend(inserts[i].iter().copied());
        }
        StarSequence {
            order: self.order,
            stars,
        }
    }

    /// Literal form `n=9;[3,7][5,8][8,9][1,2][2,4]`.
    pub fn to_literal(&self) -> String {
        let body: String = self.intervals.iter().map(|s| s.to_string()).collect();
        format!("n={};{}", self.order, body)
    }

    pub fn parse_literal(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in {s:?}")))?;
        let order: usize = head
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad order prefix in {s:?}")))?;
        let mut intervals = Vec::new();
        let body = body.trim();
        if !body.is_empty() {
            for chunk in body.split(']') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let inner = chunk
                    .strip_prefix('[')
                    .ok_or_else(|| Error::Parse(format!("bad interval chunk {chunk:?}")))?;
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad interval chunk {chunk:?}")))?;
                let lo = a
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad endpoint {a:?}")))?;
                let hi = b
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad endpoint {b:?}")))?;
                intervals.push(Interval::new(lo, hi)?);
            }
        }
        if intervals.iter().any(|s| s.hi > order) {
            return Err(Error::Parse(format!("interval exceeds order in {s:?}")));
        }
        Concatenation::new(order, intervals)
    }
}

impl fmt::Display for Concatenation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for Concatenation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Concatenation({})", self.to_literal())
    }
}

/// True iff the interval sequence satisfies the concatenation conditions.
pub fn validate_concatenation(order: usize, intervals: &[Interval]) -> bool {
    validation_failure(order, intervals).is_none()
}

fn validation_failure(order: usize, intervals: &[Interval]) -> Option<String> {
    for s in intervals {
        if s.hi > order {
            return Some(format!("interval {s} exceeds order {order}"));
        }
    }
    for i in 0..intervals.len() {
        for j in i + 1..intervals.len() {
            if intervals[i] == intervals[j] {
                return Some(format!("duplicate interval {}", intervals[i]));
            }
            if intervals[i].nests_with(&intervals[j]) {
                return Some(format!(
                    "nesting intervals {} and {}",
                    intervals[i], intervals[j]
                ));
            }
        }
    }
    for i in 0..intervals.len() {
        for j in i + 1..intervals.len() {
            for k in j + 1..intervals.len() {
                let (a, b, c) = (&intervals[i], &intervals[j], &intervals[k]);
                if a.intersects(b) && b.intersects(c) {
                    let inc = a.lo < b.lo && b.lo < c.lo;
                    let dec = a.lo > b.lo && b.lo > c.lo;
                    if !inc && !dec {
                        return Some(format!(
                            "consecutive overlaps {a}, {b}, {c} are not monotone"
                        ));
                    }
                }
            }
        }
    }
    None
}

/// The `prec` order on star positions: covering pairs plus transitive closure.
#[derive(Clone, Debug)]
pub struct CoverOrder {
    /// Covering pairs `(i, k)` of positions, `i` covered by `k`.
    pub covers: Vec<(usize, usize)>,
    /// Strict comparability: `prec[i][k]` means position `i` is below `k`.
    pub prec: Vec<Vec<bool>>,
}

impl CoverOrder {
    pub fn comparable(&self, i: usize, k: usize) -> bool {
        self.prec[i][k] || self.prec[k][i]
    }

    /// All linear extensions, as position sequences.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let t = self.prec.len();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut placed = vec![false; t];
        fn rec(
            prec: &[Vec<bool>],
            placed: &mut Vec<bool>,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let t = prec.len();
            if cur.len() == t {
                out.push(cur.clone());
                return;
            }
            for x in 0..t {
                if placed[x] {
                    continue;
                }
                if (0..t).any(|y| !placed[y] && prec[y][x]) {
                    continue;
                }
                placed[x] = true;
                cur.push(x);
                rec(prec, placed, cur, out);
                cur.pop();
                placed[x] = false;
            }
        }
        rec(&self.prec, &mut placed, &mut cur, &mut out);
        out
    }
}

pub(crate) fn cover_order_of(intervals: &[Interval]) -> CoverOrder {
    let t = intervals.len();
    let mut covers = Vec::new();
    for i in 0..t {
        for k in i + 1..t {
            if !intervals[i].intersects(&intervals[k]) {
                continue;
            }
            let blocked = (i + 1..k).any(|j| {
                intervals[i]
                    .intersection(&intervals[j])
                    .and_then(|(lo, hi)| {
                        Interval { lo, hi }.intersection(&intervals[k])
                    })
                    .is_some()
            });
            if !blocked {
                covers.push((i, k));
            }
        }
    }
    let mut prec = vec![vec![false; t]; t];
    for &(i, k) in &covers {
        prec[i][k] = true;
    }
    for m in 0..t {
        for i in 0..t {
            if prec[i][m] {
                for k in 0..t {
                    if prec[m][k] {
                        prec[i][k] = true;
                    }
                }
            }
        }
    }
    CoverOrder { covers, prec }
}

/// Follows every source straight through each star (the point reflection
/// `i -> lo + hi - i` on the star's interval) and reads off the permutation.
pub fn straight_through_perm(seq: &StarSequence) -> Permutation {
    let n = seq.order;
    let word: Vec<usize> = (1..=n)
        .map(|i| {
            let mut x = i;
            for star in &seq.stars {
                if star.contains(x) {
                    x = star.lo + star.hi - x;
                }
            }
            x
        })
        .collect();
    Permutation::from_one_line(word).expect("reflections compose to a permutation")
}
