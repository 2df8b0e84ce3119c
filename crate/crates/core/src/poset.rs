//! Finite strict partial orders on `{1..n}`, unit interval order tests, and
//! the natural labeling used by the chromatic machinery.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Strict partial order on labels `1..n`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    n: usize,
    /// `lt[i][j]` means `i+1 <_P j+1`.
    lt: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds a poset from generating relations `a <_P b` (1-based), taking
    /// the transitive closure and rejecting cycles.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, Error> {
        let mut lt = vec![vec![false; n]; n];
        for &(a, b) in relations {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::Parse(format!("bad relation ({a},{b}) for n={n}")));
            }
            lt[a - 1][b - 1] = true;
        }
        // Floyd-Warshall closure
        for k in 0..n {
            for i in 0..n {
                if lt[i][k] {
                    for j in 0..n {
                        if lt[k][j] {
                            lt[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, row) in lt.iter().enumerate() {
            if row[i] {
                return Err(Error::Parse("relations contain a cycle".into()));
            }
        }
        Ok(Poset { n, lt })
    }

    /// Directly from an already-transitive strict relation matrix.
    pub(crate) fn from_lt_matrix(lt: Vec<Vec<bool>>) -> Self {
        let n = lt.len();
        let p = Poset { n, lt };
        debug_assert!(p.is_transitive_irreflexive());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.lt[a - 1][b - 1]
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && !self.less(a, b) && !self.less(b, a)
    }

    /// Strict order pairs `(a, b)` with `a <_P b`.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.less(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn is_transitive_irreflexive(&self) -> bool {
        for i in 1..=self.n {
            if self.less(i, i) {
                return false;
            }
            for j in 1..=self.n {
                if self.less(i, j) && self.less(j, i) {
                    return false;
                }
                for k in 1..=self.n {
                    if self.less(i, j) && self.less(j, k) && !self.less(i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn down_set_size(&self, a: usize) -> usize {
        (1..=self.n).filter(|&z| self.less(z, a)).count()
    }

    pub fn up_set_size(&self, a: usize) -> usize {
        (1..=self.n).filter(|&z| self.less(a, z)).count()
    }

    /// No induced subposet is a disjoint union of an `a`-chain and a `b`-chain.
    pub fn is_ab_free(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        let k = a + b;
        if k > n {
            return true;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let sub: Vec<usize> = idx.iter().map(|&i| i + 1).collect();
            if self.has_split_chains(&sub, a) {
                return false;
            }
            // next k-combination of {0..n-1}
            let mut i = k;
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                if idx[i] != i + n - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Does the induced subposet on `sub` split as an `a`-chain plus a
    /// `(|sub|-a)`-chain with no cross relations?
    fn has_split_chains(&self, sub: &[usize], a: usize) -> bool {
        let k = sub.len();
        for mask in 0u32..(1 << k) {
            if mask.count_ones() as usize != a {
                continue;
            }
            let first: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| sub[i]).collect();
            let second: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 0).map(|i| sub[i]).collect();
            if self.is_chain(&first)
                && self.is_chain(&second)
                && first
                    .iter()
                    .all(|&x| second.iter().all(|&y| self.incomparable(x, y)))
            {
                return true;
            }
        }
        false
    }

    fn is_chain(&self, elems: &[usize]) -> bool {
        elems
            .iter()
            .all(|&x| elems.iter().all(|&y| x == y || !self.incomparable(x, y)))
    }

    /// Unit interval orders are exactly the (3+1)-free and (2+2)-free posets.
    pub fn is_unit_interval_order(&self) -> bool {
        self.is_ab_free(3, 1) && self.is_ab_free(2, 2)
    }

    /// Natural labeling: `a <_P b` implies `a < b` as integers.
    pub fn is_naturally_labeled(&self) -> bool {
        self.relation_pairs().iter().all(|&(a, b)| a < b)
    }

    /// Whenever `|down(x)| - |up(x)| < |down(y)| - |up(y)|`, the label of `x`
    /// is below the label of `y`.
    pub fn respects_altitude(&self) -> bool {
        let key = |x: usize| self.down_set_size(x) as i64 - self.up_set_size(x) as i64;
        for x in 1..=self.n {
            for y in 1..=self.n {
                if key(x) < key(y) && x > y {
                    return false;
                }
            }
        }
        true
    }

    /// Relabels elements by increasing `|down| - |up|` (ties broken by the
    /// original label). For a unit interval order this produces the labeling
    /// required by the chromatic quasisymmetric machinery.
    pub fn naturally_relabel(&self) -> Poset {
        let mut order: Vec<usize> = (1..=self.n).collect();
        order.sort_by_key(|&x| {
            (
                self.down_set_size(x) as i64 - self.up_set_size(x) as i64,
                x,
            )
        });
        // order[k] = old label of new label k+1
        let mut lt = vec![vec![false; self.n]; self.n];
        for (new_a, &old_a) in order.iter().enumerate() {
            for (new_b, &old_b) in order.iter().enumerate() {
                lt[new_a][new_b] = self.less(old_a, old_b);
            }
        }
        Poset { n: self.n, lt }
    }

    /// Maximal antichains, each as a sorted vector of labels.
    pub fn maximal_antichains(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out: Vec<Vec<usize>> = Vec::new();
        let all: Vec<usize> = (1..=n).collect();
        'subsets: for mask in 1u32..(1 << n) {
            let sub: Vec<usize> = all.iter().copied().filter(|&x| mask >> (x - 1) & 1 == 1).collect();
            for i in 0..sub.len() {
                for j in i + 1..sub.len() {
                    if !self.incomparable(sub[i], sub[j]) {
                        continue 'subsets;
                    }
                }
            }
            let extendable = all
                .iter()
                .any(|&x| !sub.contains(&x) && sub.iter().all(|&y| self.incomparable(x, y)));
            if !extendable {
                out.push(sub);
            }
        }
        out.sort();
        out
    }

    /// Brute-force poset isomorphism (sizes here are tiny).
    pub fn isomorphic_to(&self, other: &Poset) -> bool {
        if self.n != other.n {
            return false;
        }
        if self.relation_pairs().len() != other.relation_pairs().len() {
            return false;
        }
        fn rec(a: &Poset, b: &Poset, x: usize, assign: &mut [usize], used: &mut [bool]) -> bool {
            let n = a.n();
            if x > n {
                return true;
            }
            'cand: for y in 1..=n {
                if used[y] {
                    continue;
                }
                for z in 1..x {
                    let zy = assign[z];
                    if a.less(z, x) != b.less(zy, y) || a.less(x, z) != b.less(y, zy) {
                        continue 'cand;
                    }
                }
                assign[x] = y;
                used[y] = true;
                if rec(a, b, x + 1, assign, used) {
                    return true;
                }
                used[y] = false;
            }
            false
        }
        let mut assign = vec![0usize; self.n + 1];
        let mut used = vec![false; self.n + 1];
        rec(self, other, 1, &mut assign, &mut used)
    }

    pub fn chain(n: usize) -> Poset {
        let mut lt = vec![vec![false; n]; n];
        for i in 0..n {
            for item in lt[i].iter_mut().skip(i + 1) {
                *item = true;
            }
        }
        Poset { n, lt }
    }

    pub fn antichain(n: usize) -> Poset {
        Poset {
            n,
            lt: vec![vec![false; n]; n],
        }
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, {:?})", self.n, self.relation_pairs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_antichain() {
        assert!(Poset::chain(5).is_unit_interval_order());
        assert!(Poset::antichain(5).is_unit_interval_order());
        assert!(Poset::chain(5).is_naturally_labeled());
        assert_eq!(Poset::antichain(3).maximal_antichains(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn three_plus_one_detected() {
        // chain 1<2<3 together with isolated 4
        let p = Poset::from_relations(4, &[(1, 2), (2, 3)]).unwrap();
        assert!(!p.is_ab_free(3, 1));
        assert!(p.is_ab_free(2, 2));
        assert!(!p.is_unit_interval_order());
    }

    #[test]
    fn two_plus_two_detected() {
        let p = Poset::from_relations(4, &[(1, 3), (2, 4)]).unwrap();
        assert!(!p.is_ab_free(2, 2));
        assert!(p.is_ab_free(3, 1));
        assert!(!p.is_unit_interval_order());
    }

    #[test]
    fn relabeling_is_natural() {
        let p = Poset::from_relations(4, &[(4, 1), (4, 2), (3, 1)]).unwrap();
        let q = p.naturally_relabel();
        assert!(q.is_naturally_labeled());
        assert!(q.respects_altitude());
        assert!(p.isomorphic_to(&q));
    }

    #[test]
    fn isomorphism_brute() {
        let a = Poset::from_relations(3, &[(1, 2)]).unwrap();
        let b = Poset::from_relations(3, &[(2, 3)]).unwrap();
        let c = Poset::chain(3);
        assert!(a.isomorphic_to(&b));
        assert!(!a.isomorphic_to(&c));
    }

    #[test]
    fn cycles_rejected() {
        assert!(Poset::from_relations(3, &[(1, 2), (2, 1)]).is_err());
        assert!(Poset::from_relations(3, &[(1, 2), (2, 3), (3, 1)]).is_err());
    }
}
