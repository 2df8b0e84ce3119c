//! Permutations in one-line notation, Bruhat order, and pattern avoidance.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::IntPartition;

/// A permutation of `{1..n}` in one-line notation. Serializes as the plain
/// word array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self, Error> {
        Permutation::from_one_line(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl Permutation {
    pub fn from_one_line(word: Vec<usize>) -> Result<Self, Error> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation { n, word });
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `w_0 = n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    /// Parses `"3421"` (contiguous digits, n <= 9), `"3,4,2,1"`, or `"e5"` /
    /// `"e(5)"` for the identity.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('e') {
            let rest = rest.trim_start_matches('(').trim_end_matches(')');
            let n: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad identity order in {s:?}")))?;
            return Ok(Permutation::identity(n));
        }
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in permutation")))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in permutation")))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_one_line(word)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Coxeter length = number of inversion pairs.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &x) in self.word.iter().enumerate() {
            word[x - 1] = i + 1;
        }
        Permutation { word }
    }

    /// `w0 * self * w0`, conjugation by the longest element.
    pub fn conjugate_by_longest(&self) -> Permutation {
        let n = self.n();
        let word = (1..=n).map(|i| n + 1 - self.word[n - i]).collect();
        Permutation { word }
    }

    /// True iff no subsequence of `self` is order-isomorphic to `pattern`.
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        let w = &self.word;
        let p = pattern.word();
        let k = p.len();
        if k > w.len() {
            return true;
        }
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
        while let Some((start, chosen)) = stack.pop() {
            if chosen.len() == k {
                if order_isomorphic(&chosen, p) {
                    return false;
                }
                continue;
            }
            let need = k - chosen.len();
            for i in start..=w.len().saturating_sub(need) {
                let mut next = chosen.clone();
                next.push(w[i]);
                // prune on partial order type
                if order_isomorphic_prefix(&next, p) {
                    stack.push((i + 1, next));
                }
            }
        }
        true
    }

    /// True iff `self` avoids both 3412 and 4231 (the indexing condition for
    /// the modified Kazhdan-Lusztig combinatorics in this crate).
    pub fn is_smooth(&self) -> bool {
        let p3412 = Permutation::from_one_line(vec![3, 4, 1, 2]).unwrap();
        let p4231 = Permutation::from_one_line(vec![4, 2, 3, 1]).unwrap();
        self.avoids(&p3412) && self.avoids(&p4231)
    }

    pub fn check_smooth(&self) -> Result<(), Error> {
        for pat in [vec![3, 4, 1, 2], vec![4, 2, 3, 1]] {
            let p = Permutation::from_one_line(pat).unwrap();
            if !self.avoids(&p) {
                return Err(Error::PatternViolation {
                    pattern: p.to_string(),
                    word: self.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Bruhat comparison by the rank-matrix dominance criterion:
    /// `v <= w` iff `#{k <= i : v_k >= j} <= #{k <= i : w_k >= j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool, Error> {
        let n = self.n();
        if n != other.n() {
            return Err(Error::SizeMismatch {
                left: n,
                right: other.n(),
            });
        }
        let rv = rank_matrix(&self.word);
        let rw = rank_matrix(&other.word);
        Ok(rv
            .iter()
            .zip(rw.iter())
            .all(|(a, b)| a.iter().zip(b.iter()).all(|(x, y)| x <= y)))
    }

    /// All `v <= self` in Bruhat order.
    pub fn bruhat_ideal(&self) -> Vec<Permutation> {
        let n = self.n();
        let rw = rank_matrix(&self.word);
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        // depth-first over one-line words with dominance pruning per prefix row
        fn rec(
            n: usize,
            rw: &[Vec<usize>],
            word: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Permutation>,
        ) {
            let i = word.len();
            if i == n {
                out.push(Permutation {
                    word: word.clone(),
                });
                return;
            }
            for x in 1..=n {
                if used[x] {
                    continue;
                }
                word.push(x);
                used[x] = true;
                // row i of the rank matrix for the prefix must be dominated
                let ok = (1..=n).all(|j| {
                    let cnt = word.iter().filter(|&&v| v >= j).count();
                    cnt <= rw[i][j - 1]
                });
                if ok {
                    rec(n, rw, word, used, out);
                }
                used[x] = false;
                word.pop();
            }
        }
        rec(n, &rw, &mut word, &mut used, &mut out);
        out.sort();
        out
    }

    /// Cycle type as a partition of `n`.
    pub fn cycle_type(&self) -> IntPartition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.word[cur - 1];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition::new(parts).expect("cycle lengths form a partition")
    }

    /// Shape of the Robinson-Schensted insertion tableau.
    pub fn rsk_shape(&self) -> IntPartition {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for &x in &self.word {
            let mut cur = x;
            let mut placed = false;
            for row in rows.iter_mut() {
                match row.iter().position(|&y| y > cur) {
                    Some(p) => std::mem::swap(&mut row[p], &mut cur),
                    None => {
                        row.push(cur);
                        placed = true;
                        break;
                    }
                }
            }
            if !placed {
                rows.push(vec![cur]);
            }
        }
        IntPartition::new(rows.iter().map(|r| r.len()).collect())
            .expect("row lengths weakly decrease")
    }

    /// Length of the longest strictly decreasing subsequence.
    pub fn longest_decreasing_run(&self) -> usize {
        let w = &self.word;
        let n = w.len();
        if n == 0 {
            return 0;
        }
        let mut best = vec![1usize; n];
        for i in 0..n {
            for j in 0..i {
                if w[j] > w[i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap()
    }

    /// All permutations of `S_n`.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, word: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if word.len() == n {
                out.push(Permutation { word: word.clone() });
                return;
            }
            for x in 1..=n {
                if !used[x] {
                    used[x] = true;
                    word.push(x);
                    rec(n, word, used, out);
                    word.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut word, &mut used, &mut out);
        out
    }

    /// All 3412/4231-avoiding permutations of `S_n`.
    pub fn all_smooth(n: usize) -> Vec<Permutation> {
        Permutation::all(n).into_iter().filter(|w| w.is_smooth()).collect()
    }
}

fn order_isomorphic(a: &[usize], b: &[usize]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if (a[i] < a[j]) != (b[i] < b[j]) {
                return false;
            }
        }
    }
    true
}

fn order_isomorphic_prefix(a: &[usize], b: &[usize]) -> bool {
    let k = a.len();
    for i in 0..k {
        for j in i + 1..k {
            if (a[i] < a[j]) != (b[i] < b[j]) {
                return false;
            }
        }
    }
    true
}

/// `r[i][j] = #{k <= i : w_k >= j+1}` (0-based storage of the 1-based criterion).
fn rank_matrix(word: &[usize]) -> Vec<Vec<usize>> {
    let n = word.len();
    let mut r = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prev = if i == 0 { 0 } else { r[i - 1][j] };
            r[i][j] = prev + usize::from(word[i] >= j + 1);
        }
    }
    r
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &x in &self.word {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
            f.write_str(&strs.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(p("3421").length(), 5);
        assert_eq!(Permutation::identity(7).length(), 0);
        assert_eq!(p("419763258").length(), 17);
    }

    #[test]
    fn pattern_examples() {
        assert!(p("3421").avoids(&p("3412")));
        assert!(p("3421").avoids(&p("4231")));
        assert!(!p("3412").avoids(&p("3412")));
        assert!(p("3421").avoids(&p("312")));
        assert!(p("3421").is_smooth());
        assert!(!p("4231").is_smooth());
    }

    #[test]
    fn bruhat_examples() {
        let w = p("3421");
        for v in Permutation::all(4) {
            assert!(Permutation::identity(4).bruhat_leq(&v).unwrap());
        }
        assert!(Permutation::identity(4).bruhat_leq(&w).unwrap());
        assert!(w.bruhat_leq(&w).unwrap());
        assert_eq!(w.bruhat_ideal().len(), 18);
        // independent route: brute-force the criterion over S_4
        let brute = Permutation::all(4)
            .into_iter()
            .filter(|v| v.bruhat_leq(&w).unwrap())
            .count();
        assert_eq!(brute, 18);
        assert_eq!(Permutation::identity(3).bruhat_ideal(), vec![Permutation::identity(3)]);
        assert_eq!(Permutation::longest(3).bruhat_ideal().len(), 6);
    }

    #[test]
    fn bruhat_is_partial_order_small() {
        for n in 1..=5 {
            let all = Permutation::all(n);
            let m = all.len();
            let mut leq = vec![vec![false; m]; m];
            for i in 0..m {
                for j in 0..m {
                    leq[i][j] = all[i].bruhat_leq(&all[j]).unwrap();
                }
            }
            for i in 0..m {
                assert!(leq[i][i], "not reflexive at {}", all[i]);
                for j in 0..m {
                    if leq[i][j] && leq[j][i] {
                        assert_eq!(i, j, "not antisymmetric");
                    }
                    for k in 0..m {
                        if leq[i][j] && leq[j][k] {
                            assert!(leq[i][k], "not transitive");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(
            Permutation::identity(4).cycle_type().parts(),
            &[1, 1, 1, 1]
        );
        assert_eq!(p("3421").cycle_type().parts(), &[4]);
        assert_eq!(p("21435").cycle_type().parts(), &[2, 2, 1]);
        assert_eq!(p("13245").cycle_type().parts(), &[2, 1, 1, 1]);
    }

    #[test]
    fn rsk_examples() {
        assert_eq!(Permutation::identity(5).rsk_shape().parts(), &[5]);
        assert_eq!(p("3421").rsk_shape().parts(), &[2, 1, 1]);
        assert_eq!(Permutation::longest(4).rsk_shape().parts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn longest_decreasing_examples() {
        assert_eq!(p("3421").longest_decreasing_run(), 3);
        assert_eq!(Permutation::identity(4).longest_decreasing_run(), 1);
        // longest decreasing run equals the number of rows of the RSK shape
        for w in Permutation::all(5) {
            assert_eq!(
                w.longest_decreasing_run(),
                w.rsk_shape().parts().len(),
                "mismatch for {w}"
            );
        }
    }

    #[test]
    fn length_complement_identity() {
        for n in 1..=6 {
            let w0 = Permutation::longest(n);
            for w in Permutation::all(n) {
                let comp_word: Vec<usize> = w.word().iter().map(|&x| w0.apply(x)).collect();
                let comp = Permutation::from_one_line(comp_word).unwrap();
                assert_eq!(w.length() + comp.length(), n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("e4"), Permutation::identity(4));
        assert_eq!(p("e(4)"), Permutation::identity(4));
        assert_eq!(p("3,4,2,1"), p("3421"));
        assert!(Permutation::parse("3441").is_err());
        assert_eq!(p("419763258").to_string(), "419763258");
    }
}
