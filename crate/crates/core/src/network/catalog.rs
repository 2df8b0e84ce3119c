//! One zig-zag network per 3412/4231-avoiding permutation: canonical
//! enumeration of concatenations, the memoized `w -> F_w` map, and the
//! operations that need it (restriction helpers, `iota`, equivalence).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Error;
use crate::network::zigzag::ZigzagNetwork;
use crate::network::{straight_through_perm, Concatenation, Interval};
use crate::perm::Permutation;
use crate::DEFAULT_MAX_ORDER;

/// All networks of one order, keyed by their permutations.
pub struct Catalog {
    n: usize,
    by_w: HashMap<Permutation, Concatenation>,
}

impl Catalog {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.by_w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_w.is_empty()
    }

    pub fn concat_of(&self, w: &Permutation) -> Option<&Concatenation> {
        self.by_w.get(w)
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = self.by_w.keys().cloned().collect();
        v.sort();
        v
    }
}

fn catalog_store() -> &'static Mutex<HashMap<usize, Arc<Catalog>>> {
    static STORE: OnceLock<Mutex<HashMap<usize, Arc<Catalog>>>> = OnceLock::new();
    STORE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The shared catalog for order `n`, built on first use.
pub fn catalog(n: usize) -> Result<Arc<Catalog>, Error> {
    catalog_bounded(n, DEFAULT_MAX_ORDER)
}

pub fn catalog_bounded(n: usize, max_order: usize) -> Result<Arc<Catalog>, Error> {
    if n == 0 || n > max_order {
        return Err(Error::OrderBound { n, max: max_order });
    }
    if let Some(c) = catalog_store().lock().unwrap().get(&n) {
        return Ok(Arc::clone(c));
    }
    let built = Arc::new(build_catalog(n)?);
    let mut guard = catalog_store().lock().unwrap();
    let entry = guard.entry(n).or_insert_with(|| Arc::clone(&built));
    Ok(Arc::clone(entry))
}

fn build_catalog(n: usize) -> Result<Catalog, Error> {
    let mut by_w = HashMap::new();
    let mut seq: Vec<Interval> = Vec::new();
    let mut prec: Vec<Vec<bool>> = Vec::new();
    enumerate(n, &mut seq, &mut prec, &mut by_w)?;
    Ok(Catalog { n, by_w })
}

/// Depth-first search over canonical concatenations. Every node of the tree
/// is itself a canonical concatenation and is recorded. Canonical means: the
/// lexicographically smallest linear extension of its own cover order, which
/// picks exactly one sequence per network.
fn enumerate(
    n: usize,
    seq: &mut Vec<Interval>,
    prec: &mut Vec<Vec<bool>>,
    by_w: &mut HashMap<Permutation, Concatenation>,
) -> Result<(), Error> {
    let concat = Concatenation::new(n, seq.clone())
        .map_err(|e| Error::Internal(format!("enumeration produced invalid sequence: {e}")))?;
    let w = straight_through_perm(&concat.augment());
    if by_w.insert(w.clone(), concat).is_some() {
        return Err(Error::Internal(format!(
            "two canonical concatenations map to {w}"
        )));
    }

    let t = seq.len();
    for lo in 1..n {
        if seq.iter().any(|s| s.lo == lo) {
            continue;
        }
        'cand: for hi in lo + 1..=n {
            if seq.iter().any(|s| s.hi == hi) {
                continue;
            }
            let cand = Interval { lo, hi };
            // pairwise nonnesting (distinct lo/hi already ensured)
            for s in seq.iter() {
                if s.nests_with(&cand) {
                    continue 'cand;
                }
            }
            // triple monotonicity with the candidate in last position
            for j in 0..t {
                if !seq[j].intersects(&cand) {
                    continue;
                }
                for i in 0..j {
                    if seq[i].intersects(&seq[j]) {
                        let inc = seq[i].lo < seq[j].lo && seq[j].lo < cand.lo;
                        let dec = seq[i].lo > seq[j].lo && seq[j].lo > cand.lo;
                        if !inc && !dec {
                            continue 'cand;
                        }
                    }
                }
            }
            // cover order row for the candidate: which positions precede it
            let mut below = vec![false; t];
            for i in 0..t {
                if !seq[i].intersects(&cand) {
                    continue;
                }
                let blocked = (i + 1..t).any(|j| {
                    seq[i]
                        .intersection(&seq[j])
                        .map(|(lo2, hi2)| Interval { lo: lo2, hi: hi2 }.intersects(&cand))
                        .unwrap_or(false)
                        && seq[j].intersects(&cand)
                });
                if !blocked {
                    // i is covered by the candidate; everything below i too
                    below[i] = true;
                    for (m, item) in below.iter_mut().enumerate().take(t) {
                        if prec[m][i] {
                            *item = true;
                        }
                    }
                }
            }
            // lex-min pruning: reject if the candidate could be moved before
            // some lex-larger earlier star while staying a linear extension
            let mut all_incomparable = true;
            let mut reject = false;
            for j in (0..t).rev() {
                if below[j] {
                    all_incomparable = false;
                }
                if all_incomparable && cand < seq[j] {
                    reject = true;
                    break;
                }
            }
            if reject {
                continue 'cand;
            }

            seq.push(cand);
            for (m, p) in prec.iter_mut().enumerate() {
                p.push(below[m]);
            }
            prec.push(vec![false; t + 1]);
            enumerate(n, seq, prec, by_w)?;
            prec.pop();
            for p in prec.iter_mut() {
                p.pop();
            }
            seq.pop();
        }
    }
    Ok(())
}

/// The zig-zag network of a 3412/4231-avoiding permutation.
pub fn network_of(w: &Permutation) -> Result<ZigzagNetwork, Error> {
    network_of_bounded(w, DEFAULT_MAX_ORDER)
}

pub fn network_of_bounded(w: &Permutation, max_order: usize) -> Result<ZigzagNetwork, Error> {
    w.check_smooth()?;
    let cat = catalog_bounded(w.n(), max_order)?;
    let concat = cat
        .concat_of(w)
        .ok_or_else(|| Error::Internal(format!("no network found for smooth {w}")))?;
    ZigzagNetwork::build(concat.clone())
}

/// One network per 3412/4231-avoiding permutation of order `n`, sorted by
/// permutation; `descending_only` keeps the descending star networks (the
/// 312-avoiding permutations).
pub fn enumerate_networks(
    n: usize,
    descending_only: bool,
    max_order: usize,
) -> Result<Vec<(Permutation, ZigzagNetwork)>, Error> {
    let cat = catalog_bounded(n, max_order)?;
    let mut out = Vec::with_capacity(cat.len());
    for w in cat.permutations() {
        let net = ZigzagNetwork::build(cat.concat_of(&w).unwrap().clone())?;
        if descending_only && !is_descending_star(&net) {
            continue;
        }
        out.push((w, net));
    }
    Ok(out)
}

/// A network is a descending star network iff its stars can be listed with
/// strictly decreasing lower endpoints, i.e. every comparable pair already
/// has decreasing lower endpoints along the order.
pub fn is_descending_star(net: &ZigzagNetwork) -> bool {
    let ivs = net.concat().intervals();
    let prec = &net.covers().prec;
    for i in 0..ivs.len() {
        for k in 0..ivs.len() {
            if prec[i][k] && ivs[i].lo < ivs[k].lo {
                return false;
            }
        }
    }
    true
}

/// The unique 312-avoiding representative of `w`'s path-poset equivalence
/// class: sort the stars of `F_w` by decreasing lower endpoint.
pub fn canonical_312_rep(w: &Permutation) -> Result<Permutation, Error> {
    w.check_smooth()?;
    let cat = catalog(w.n())?;
    let concat = cat
        .concat_of(w)
        .ok_or_else(|| Error::Internal(format!("no network found for smooth {w}")))?;
    let mut ivs = concat.intervals().to_vec();
    ivs.sort_by(|a, b| b.lo.cmp(&a.lo));
    let sorted = Concatenation::new(w.n(), ivs)
        .map_err(|e| Error::Internal(format!("descending arrangement invalid: {e}")))?;
    let rep = straight_through_perm(&sorted.augment());
    debug_assert!(rep.avoids(&Permutation::from_one_line(vec![3, 1, 2]).unwrap()));
    Ok(rep)
}

/// `v ~ w` iff the path posets `P(F_v)` and `P(F_w)` are isomorphic.
pub fn poset_equivalent(v: &Permutation, w: &Permutation) -> Result<bool, Error> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    Ok(canonical_312_rep(v)? == canonical_312_rep(w)?)
}

/// Deletes the source-`n`-to-sink-`n` path of a connected `F_w` (contracting
/// the two merged star centers when their overlap was `{n-1}`-high) and
/// returns the order-`(n-1)` permutation of the resulting network.
pub fn iota(w: &Permutation) -> Result<Permutation, Error> {
    w.check_smooth()?;
    let n = w.n();
    let net = network_of(w)?;
    if n < 2 || !net.is_connected() {
        return Err(Error::Disconnected(n));
    }
    let ivs = net.concat().intervals();
    if ivs.len() == 1 {
        // single star [1, n]
        let shrunk = if n - 1 >= 2 {
            vec![Interval { lo: 1, hi: n - 1 }]
        } else {
            vec![]
        };
        let c = Concatenation::new(n - 1, shrunk)
            .map_err(|e| Error::Internal(format!("iota produced invalid recipe: {e}")))?;
        return Ok(straight_through_perm(&c.augment()));
    }
    let x_pos = ivs
        .iter()
        .position(|s| s.contains(n))
        .ok_or_else(|| Error::Internal("connected network misses its top row".into()))?;
    // at most one other star reaches n-1 exactly; it absorbs the deleted star
    let absorber = ivs.iter().enumerate().any(|(k, s)| k != x_pos && s.hi == n - 1);
    let mut new_ivs: Vec<Interval> = Vec::new();
    for (k, s) in ivs.iter().enumerate() {
        if k == x_pos {
            if !absorber && s.lo < n - 1 {
                new_ivs.push(Interval { lo: s.lo, hi: n - 1 });
            }
            // otherwise the star is dropped (contraction case)
        } else {
            new_ivs.push(*s);
        }
    }
    let c = Concatenation::new(n - 1, new_ivs)
        .map_err(|e| Error::Internal(format!("iota produced invalid recipe: {e}")))?;
    Ok(straight_through_perm(&c.augment()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn catalog_counts() {
        // one network per 3412/4231-avoiding permutation
        for n in 1..=6 {
            let cat = catalog(n).unwrap();
            assert_eq!(cat.len(), Permutation::all_smooth(n).len(), "n={n}");
        }
        assert_eq!(catalog(4).unwrap().len(), 22);
    }

    #[test]
    fn round_trip_small() {
        for n in 1..=6 {
            for w in Permutation::all_smooth(n) {
                let net = network_of(&w).unwrap();
                assert_eq!(net.w(), &w, "round trip failed at {w}");
            }
        }
    }

    #[test]
    fn known_networks() {
        assert_eq!(
            network_of(&p("3421")).unwrap().concat().intervals(),
            &[Interval { lo: 2, hi: 4 }, Interval { lo: 1, hi: 3 }]
        );
        let f = network_of(&p("419763258")).unwrap();
        assert_eq!(f.w(), &p("419763258"));
        let ivs: Vec<(usize, usize)> = f.concat().intervals().iter().map(|s| (s.lo, s.hi)).collect();
        // same stars as the worked example, in canonical order
        let mut sorted = ivs.clone();
        sorted.sort();
        assert_eq!(sorted, vec![(1, 2), (2, 4), (3, 7), (5, 8), (8, 9)]);
        assert!(network_of(&p("3412")).is_err());
        assert!(network_of(&p("e3")).unwrap().w().is_identity());
        // order-9 examples from the restriction machinery
        assert_eq!(
            network_of(&p("246531")).unwrap().concat().intervals().len(),
            3
        );
    }

    #[test]
    fn catalog_bound_respected() {
        assert!(matches!(
            catalog_bounded(10, 9),
            Err(Error::OrderBound { n: 10, max: 9 })
        ));
    }

    #[test]
    fn descending_counts() {
        let all = enumerate_networks(4, false, 9).unwrap();
        assert_eq!(all.len(), 22);
        let desc = enumerate_networks(4, true, 9).unwrap();
        assert_eq!(desc.len(), 14);
        // descending equals 312-avoiding
        for (w, net) in &all {
            let avoids312 = w.avoids(&p("312"));
            assert_eq!(is_descending_star(net), avoids312, "mismatch at {w}");
        }
        assert_eq!(enumerate_networks(1, false, 9).unwrap().len(), 1);
    }

    #[test]
    fn canonical_rep_examples() {
        // already 312-avoiding permutations are their own representative
        for n in 1..=5 {
            for w in Permutation::all_smooth(n) {
                if w.avoids(&p("312")) {
                    assert_eq!(canonical_312_rep(&w).unwrap(), w);
                }
            }
        }
        // w ~ w^{-1}
        for n in 1..=5 {
            for w in Permutation::all_smooth(n) {
                assert!(poset_equivalent(&w, &w.inverse()).unwrap(), "at {w}");
            }
        }
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(&p("256431")).unwrap(), p("25431"));
        assert_eq!(iota(&p("246531")).unwrap(), p("24531"));
        // single star: reversal of [1,n] drops to reversal of [1,n-1]
        assert_eq!(iota(&p("4321")).unwrap(), p("321"));
        assert_eq!(iota(&p("21")).unwrap(), Permutation::identity(1));
        // disconnected input rejected
        assert!(iota(&p("2143")).is_err());
        assert!(iota(&p("1432")).is_err());
    }

    #[test]
    fn iota_matches_restriction() {
        for n in 2..=6 {
            for w in Permutation::all_smooth(n) {
                let net = network_of(&w).unwrap();
                if !net.is_connected() {
                    continue;
                }
                let sub: Vec<usize> = (1..n).collect();
                let restricted = net.restrict(&sub).unwrap();
                assert_eq!(
                    iota(&w).unwrap(),
                    restricted.w().clone(),
                    "iota disagrees with restriction at {w}"
                );
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let f = network_of(&p("3421")).unwrap();
        let o123 = f.restrict(&[1, 2, 3]).unwrap().o_polynomial();
        assert_eq!(o123.coeffs(), &[1, 1]);
        let o124 = f.restrict(&[1, 2, 4]).unwrap().o_polynomial();
        assert_eq!(o124.coeffs(), &[1]);
        let o134 = f.restrict(&[1, 3, 4]).unwrap().o_polynomial();
        assert_eq!(o134.coeffs(), &[1]);
        let o234 = f.restrict(&[2, 3, 4]).unwrap().o_polynomial();
        assert_eq!(o234.coeffs(), &[1, 1]);
        // singleton restriction is the order-1 identity network
        let single = f.restrict(&[2]).unwrap();
        assert_eq!(single.order(), 1);
        assert_eq!(single.o_polynomial(), crate::qpoly::QPoly::one());
    }
}
