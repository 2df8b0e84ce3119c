//! Transition matrices between the five class-function bases, the
//! Murnaghan-Nakayama character recursion, and classical (`q = 1`) class
//! function values.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::rational::BigRational;
use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::IntPartition;
use crate::perm::Permutation;

/// The five trace / class-function families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceFamily {
    Eta,
    Epsilon,
    Chi,
    Psi,
    Phi,
}

impl TraceFamily {
    pub const ALL: [TraceFamily; 5] = [
        TraceFamily::Eta,
        TraceFamily::Epsilon,
        TraceFamily::Chi,
        TraceFamily::Psi,
        TraceFamily::Phi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TraceFamily::Eta => "eta",
            TraceFamily::Epsilon => "epsilon",
            TraceFamily::Chi => "chi",
            TraceFamily::Psi => "psi",
            TraceFamily::Phi => "phi",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "eta" => Ok(TraceFamily::Eta),
            "epsilon" => Ok(TraceFamily::Epsilon),
            "chi" => Ok(TraceFamily::Chi),
            "psi" => Ok(TraceFamily::Psi),
            "phi" => Ok(TraceFamily::Phi),
            other => Err(Error::Parse(format!("unknown trace family {other:?}"))),
        }
    }
}

/// All transition data for partitions of a fixed `n`, indexed in reverse
/// lexicographic order (`(n)` first, `(1^n)` last).
pub struct TransitionTables {
    n: usize,
    parts: Vec<IntPartition>,
    index: HashMap<Vec<usize>, usize>,
    transpose_of: Vec<usize>,
    kostka: Vec<Vec<i64>>,
    kostka_inv: Vec<Vec<i64>>,
    ell: Vec<Vec<i64>>,
    ell_inv: Vec<Vec<BigRational>>,
    z: Vec<i64>,
    chars: Vec<Vec<i64>>,
}

impl TransitionTables {
    pub fn new(n: usize) -> Self {
        let parts = IntPartition::all(n);
        let m = parts.len();
        let index: HashMap<Vec<usize>, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.parts().to_vec(), i))
            .collect();
        let transpose_of: Vec<usize> = parts
            .iter()
            .map(|p| index[p.transpose().parts()])
            .collect();

        let mut kostka = vec![vec![0i64; m]; m];
        for (i, la) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                kostka[i][j] = count_ssyt(la.parts(), mu.parts());
            }
        }
        let kostka_inv = invert_unitriangular(&kostka);

        let mut ell = vec![vec![0i64; m]; m];
        for (i, la) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                ell[i][j] = count_row_constant(la.parts(), mu.parts());
            }
        }
        let ell_inv = invert_rational(&ell);

        let z: Vec<i64> = parts.iter().map(|p| p.z()).collect();

        let mut memo = HashMap::new();
        let mut chars = vec![vec![0i64; m]; m];
        for (i, la) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                chars[i][j] = mn_rec(la.parts(), mu.parts(), &mut memo);
            }
        }

        TransitionTables {
            n,
            parts,
            index,
            transpose_of,
            kostka,
            kostka_inv,
            ell,
            ell_inv,
            z,
            chars,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[IntPartition] {
        &self.parts
    }

    pub fn index_of(&self, la: &IntPartition) -> usize {
        self.index[la.parts()]
    }

    pub fn transpose_index(&self, i: usize) -> usize {
        self.transpose_of[i]
    }

    /// `K[la][mu]`, the number of semistandard tableaux of shape `la` and
    /// content `mu`.
    pub fn kostka(&self, la: usize, mu: usize) -> i64 {
        self.kostka[la][mu]
    }

    pub fn kostka_inv(&self, la: usize, mu: usize) -> i64 {
        self.kostka_inv[la][mu]
    }

    /// `L[la][mu]`, the number of row-constant fillings of shape `la` with
    /// content `mu`.
    pub fn ell(&self, la: usize, mu: usize) -> i64 {
        self.ell[la][mu]
    }

    pub fn ell_inv(&self, la: usize, mu: usize) -> &BigRational {
        &self.ell_inv[la][mu]
    }

    pub fn z_of(&self, la: usize) -> i64 {
        self.z[la]
    }

    /// Irreducible character value `chi^la` on class `mu`.
    pub fn character(&self, la: usize, mu: usize) -> i64 {
        self.chars[la][mu]
    }

    /// Coefficients of the named family on the irreducible character basis:
    /// `theta^la = sum_mu coeff[mu] * chi^mu`.
    pub fn irreducible_expansion(&self, family: TraceFamily, la: usize) -> Vec<i64> {
        let m = self.parts.len();
        match family {
            TraceFamily::Chi => {
                let mut v = vec![0; m];
                v[la] = 1;
                v
            }
            TraceFamily::Eta => (0..m).map(|mu| self.kostka[mu][la]).collect(),
            TraceFamily::Epsilon => (0..m)
                .map(|mu| self.kostka[self.transpose_of[mu]][la])
                .collect(),
            TraceFamily::Phi => (0..m).map(|mu| self.kostka_inv[la][mu]).collect(),
            TraceFamily::Psi => {
                // psi^la = sum_nu L[la][nu] phi^nu
                let mut v = vec![0; m];
                for nu in 0..m {
                    let l = self.ell[la][nu];
                    if l == 0 {
                        continue;
                    }
                    for (mu, item) in v.iter_mut().enumerate() {
                        *item += l * self.kostka_inv[nu][mu];
                    }
                }
                v
            }
        }
    }

    /// Classical class-function value `theta^la(v)`, computed through the
    /// irreducible-character expansion and the Murnaghan-Nakayama table.
    pub fn class_value(&self, family: TraceFamily, la: &IntPartition, v: &Permutation) -> i64 {
        assert_eq!(la.n(), v.n(), "partition and permutation sizes differ");
        let ct = self.index_of(&v.cycle_type());
        let la = self.index_of(la);
        self.irreducible_expansion(family, la)
            .iter()
            .enumerate()
            .map(|(mu, c)| c * self.chars[mu][ct])
            .sum()
    }
}

/// Shared tables for order `n`, built once and cached.
pub fn tables(n: usize) -> Arc<TransitionTables> {
    static STORE: OnceLock<Mutex<HashMap<usize, Arc<TransitionTables>>>> = OnceLock::new();
    let store = STORE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = store.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(TransitionTables::new(n));
    let mut guard = store.lock().unwrap();
    Arc::clone(guard.entry(n).or_insert(built))
}

/// Standalone Murnaghan-Nakayama character value `chi^la(mu)`.
pub fn mn_character(la: &IntPartition, mu: &IntPartition) -> Result<i64, Error> {
    if la.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: la.n(),
            right: mu.n(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(la.parts(), mu.parts(), &mut memo))
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

fn mn_rec(la: &[usize], mu: &[usize], memo: &mut MnMemo) -> i64 {
    if mu.is_empty() {
        return i64::from(la.is_empty());
    }
    let key = (la.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    // beta-set encoding: border strips of size k are moves b -> b-k
    let m = la.len();
    let beta: Vec<usize> = (0..m).map(|i| la[i] + (m - 1 - i)).collect();
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossings = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[pos] = b - k;
        nb.sort_unstable_by(|a, c| c.cmp(a));
        let mut nla: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &v)| v - (m - 1 - i))
            .collect();
        while nla.last() == Some(&0) {
            nla.pop();
        }
        total += sign * mn_rec(&nla, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Number of semistandard Young tableaux of shape `la` and content `mu`
/// (rows weakly increase, columns strictly increase).
fn count_ssyt(la: &[usize], mu: &[usize]) -> i64 {
    if la.is_empty() {
        return i64::from(mu.is_empty());
    }
    let rows = la.len();
    let mut filling: Vec<Vec<usize>> = la.iter().map(|&len| vec![0; len]).collect();
    let mut remaining: Vec<usize> = mu.to_vec();
    fn rec(
        la: &[usize],
        filling: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        r: usize,
        c: usize,
        rows: usize,
    ) -> i64 {
        if r == rows {
            return 1;
        }
        let (nr, nc) = if c + 1 < la[r] { (r, c + 1) } else { (r + 1, 0) };
        let lo = {
            let mut lo = 1;
            if c > 0 {
                lo = lo.max(filling[r][c - 1]);
            }
            if r > 0 {
                lo = lo.max(filling[r - 1][c] + 1);
            }
            lo
        };
        let mut total = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            filling[r][c] = v;
            total += rec(la, filling, remaining, nr, nc, rows);
            remaining[v - 1] += 1;
        }
        filling[r][c] = 0;
        total
    }
    rec(la, &mut filling, &mut remaining, 0, 0, rows)
}

/// Number of fillings of shape `la` with each row constant and value `j`
/// used `mu[j-1]` times in total.
fn count_row_constant(la: &[usize], mu: &[usize]) -> i64 {
    fn rec(la: &[usize], remaining: &mut Vec<usize>, row: usize) -> i64 {
        if row == la.len() {
            return i64::from(remaining.iter().all(|&r| r == 0));
        }
        let size = la[row];
        let mut total = 0;
        for j in 0..remaining.len() {
            if remaining[j] >= size {
                remaining[j] -= size;
                total += rec(la, remaining, row + 1);
                remaining[j] += size;
            }
        }
        total
    }
    let mut remaining = mu.to_vec();
    rec(la, &mut remaining, 0)
}

/// Inverse of an integer matrix that is upper triangular with unit diagonal
/// in the stored index order.
fn invert_unitriangular(mat: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = mat.len();
    let mut inv = vec![vec![0i64; m]; m];
    for j in 0..m {
        inv[j][j] = 1;
        for i in (0..j).rev() {
            let mut acc = 0i64;
            for k in i + 1..=j {
                acc += mat[i][k] * inv[k][j];
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

/// Exact inverse of an integer matrix over the rationals (Gauss-Jordan).
pub fn invert_rational(mat: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let m = mat.len();
    let mut a: Vec<Vec<BigRational>> = mat
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..m {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..m {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..m {
                let av = &a[col][j] * &f;
                a[r][j] = &a[r][j] - &av;
                let iv = &inv[col][j] * &f;
                inv[r][j] = &inv[r][j] - &iv;
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[usize]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn kostka_basics() {
        let t = TransitionTables::new(2);
        let i2 = t.index_of(&lam(&[2]));
        let i11 = t.index_of(&lam(&[1, 1]));
        assert_eq!(t.kostka(i2, i2), 1);
        assert_eq!(t.kostka(i2, i11), 1);
        assert_eq!(t.kostka(i11, i2), 0);
        assert_eq!(t.kostka_inv(i2, i11), -1);
        for n in 1..=7 {
            let t = TransitionTables::new(n);
            let m = t.partitions().len();
            for i in 0..m {
                assert_eq!(t.kostka(i, i), 1);
                for j in 0..m {
                    let dot: i64 = (0..m).map(|k| t.kostka(i, k) * t.kostka_inv(k, j)).sum();
                    assert_eq!(dot, i64::from(i == j));
                    if t.kostka(i, j) != 0 {
                        assert!(t.partitions()[i].majorizes(&t.partitions()[j]).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn row_constant_examples() {
        let t = TransitionTables::new(3);
        let i21 = t.index_of(&lam(&[2, 1]));
        let i111 = t.index_of(&lam(&[1, 1, 1]));
        assert_eq!(t.ell(i21, i21), 1);
        assert_eq!(t.ell(i21, i111), 0);
        assert_eq!(t.ell(i111, i111), 6);
        for n in 1..=7 {
            let t = TransitionTables::new(n);
            let m = t.partitions().len();
            for i in 0..m {
                for j in 0..m {
                    let dot: BigRational = (0..m)
                        .map(|k| BigRational::from(BigInt::from(t.ell(i, k))) * t.ell_inv(k, j))
                        .sum();
                    let expect = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(dot, expect);
                }
            }
        }
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_character(&lam(&[4]), &lam(&[2, 1, 1])).unwrap(), 1);
        assert_eq!(mn_character(&lam(&[1, 1]), &lam(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&lam(&[2, 1]), &lam(&[1, 1, 1])).unwrap(), 2);
        for n in 1..=6 {
            for mu in IntPartition::all(n) {
                assert_eq!(mn_character(&IntPartition::single_row(n), &mu).unwrap(), 1);
            }
        }
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=7 {
            let t = TransitionTables::new(n);
            let m = t.partitions().len();
            let fact: i64 = (1..=n as i64).product();
            for a in 0..m {
                for b in 0..m {
                    let mut acc = 0i64;
                    for c in 0..m {
                        let class_size = fact / t.z_of(c);
                        acc += class_size * t.character(a, c) * t.character(b, c);
                    }
                    assert_eq!(acc, if a == b { fact } else { 0 });
                }
            }
        }
    }

    #[test]
    fn class_values() {
        let t = TransitionTables::new(4);
        let e = Permutation::identity(4);
        // eta^{(n)} is identically 1
        for v in Permutation::all(4) {
            assert_eq!(t.class_value(TraceFamily::Eta, &lam(&[4]), &v), 1);
        }
        // epsilon^{1^n} is the regular character
        assert_eq!(t.class_value(TraceFamily::Epsilon, &lam(&[1, 1, 1, 1]), &e), 24);
        for v in Permutation::all(4) {
            if !v.is_identity() {
                assert_eq!(t.class_value(TraceFamily::Epsilon, &lam(&[1, 1, 1, 1]), &v), 0);
            }
        }
        // psi^la(v) = z_la [ctype(v) = la]
        for n in 1..=5 {
            let t = TransitionTables::new(n);
            for la in IntPartition::all(n) {
                for v in Permutation::all(n) {
                    let expect = if v.cycle_type() == la { la.z() } else { 0 };
                    assert_eq!(t.class_value(TraceFamily::Psi, &la, &v), expect, "{la} {v}");
                }
            }
        }
    }

    #[test]
    fn eta_dimension_at_identity() {
        let t = TransitionTables::new(4);
        let e = Permutation::identity(4);
        // eta^la(e) = multinomial(n; la)
        let cases = [(vec![4], 1), (vec![3, 1], 4), (vec![2, 2], 6), (vec![2, 1, 1], 12), (vec![1, 1, 1, 1], 24)];
        for (parts, expect) in cases {
            assert_eq!(t.class_value(TraceFamily::Eta, &lam(&parts), &e), expect);
        }
    }
}
