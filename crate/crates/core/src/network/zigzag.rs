//! Zig-zag networks: pruned star concatenations with unique source-to-sink
//! paths, path posets, restriction, and the `O(F)` polynomial.

use crate::error::Error;
use crate::network::dag::{Bits256, Path, PathFamily, PlanarDag, VertexKind};
use crate::network::{straight_through_perm, Concatenation, CoverOrder, Interval};
use crate::partition::IntPartition;
use crate::perm::Permutation;
use crate::poset::Poset;
use crate::qpoly::{q_factorial, QPoly};

/// Which of the parallel center-to-center paths survives pruning.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Retention {
    /// Keep the path through the lowest row of the overlap (the default).
    #[default]
    Lowest,
    /// Keep the path through the highest row (only used to property-test that
    /// the choice does not matter).
    Highest,
}

/// Record of one unique source-to-sink path.
#[derive(Clone, Debug)]
pub struct PathInfo {
    pub source: usize,
    pub sink: usize,
    pub vertices: Vec<u32>,
    vbits: Bits256,
    ebits: Bits256,
}

impl PathInfo {
    pub fn as_path(&self) -> Path {
        Path {
            source: self.source,
            sink: self.sink,
            vertices: self.vertices.clone(),
        }
    }
}

/// A zig-zag network with all path data cached; immutable once built.
pub struct ZigzagNetwork {
    concat: Concatenation,
    covers: CoverOrder,
    dag: PlanarDag,
    w: Permutation,
    paths: Vec<PathInfo>,
    path_at: Vec<Vec<Option<u32>>>,
    intersects: Vec<Vec<bool>>,
}

impl ZigzagNetwork {
    pub fn build(concat: Concatenation) -> Result<Self, Error> {
        ZigzagNetwork::build_with(concat, Retention::Lowest)
    }

    pub fn build_with(concat: Concatenation, retention: Retention) -> Result<Self, Error> {
        let n = concat.order();
        let covers = concat.cover_order();
        let mut dag = PlanarDag::from_stars(&concat.star_sequence());
        prune_parallel_paths(&mut dag, &concat, &covers, retention);

        let mut paths = Vec::new();
        let mut path_at = vec![vec![None; n]; n];
        for i in 1..=n {
            for p in dag.all_paths_from(i) {
                let existing = &mut path_at[i - 1][p.sink - 1];
                if existing.is_some() {
                    return Err(Error::Internal(format!(
                        "multiple paths from source {i} to sink {} in {}",
                        p.sink,
                        concat.to_literal()
                    )));
                }
                *existing = Some(paths.len() as u32);
                let vbits = dag.vertex_bits(&p);
                let ebits = dag.edge_bits(&p);
                paths.push(PathInfo {
                    source: p.source,
                    sink: p.sink,
                    vertices: p.vertices,
                    vbits,
                    ebits,
                });
            }
        }
        for i in 1..=n {
            if path_at[i - 1][i - 1].is_none() {
                return Err(Error::Internal(format!(
                    "missing source-to-sink path at {i} in {}",
                    concat.to_literal()
                )));
            }
        }
        let m = paths.len();
        let mut intersects = vec![vec![false; m]; m];
        for a in 0..m {
            for b in 0..m {
                intersects[a][b] = a != b && paths[a].vbits.intersects(&paths[b].vbits);
            }
        }
        let w = straight_through_perm(&concat.augment());
        Ok(ZigzagNetwork {
            concat,
            covers,
            dag,
            w,
            paths,
            path_at,
            intersects,
        })
    }

    pub fn order(&self) -> usize {
        self.concat.order()
    }

    /// The 3412/4231-avoiding permutation this network encodes, computed by
    /// the straight-through reading of the augmented concatenation.
    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn concat(&self) -> &Concatenation {
        &self.concat
    }

    pub fn covers(&self) -> &CoverOrder {
        &self.covers
    }

    pub fn dag(&self) -> &PlanarDag {
        &self.dag
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, id: u32) -> &PathInfo {
        &self.paths[id as usize]
    }

    pub fn path_id(&self, i: usize, j: usize) -> Option<u32> {
        self.path_at[i - 1][j - 1]
    }

    /// The unique source-`i` to sink-`j` path, when one exists.
    pub fn unique_path(&self, i: usize, j: usize) -> Option<&PathInfo> {
        self.path_id(i, j).map(|id| self.path(id))
    }

    pub fn paths_intersect(&self, a: u32, b: u32) -> bool {
        self.intersects[a as usize][b as usize]
    }

    /// 0/1 path matrix.
    pub fn path_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.order())
            .map(|i| {
                (0..self.order())
                    .map(|j| i64::from(self.path_at[i][j].is_some()))
                    .collect()
            })
            .collect()
    }

    /// Path existence predicted from the concatenation alone: a path from
    /// source `i` to sink `j` exists iff `i = j`, or `i` and `j` share a
    /// star interval, or `i`'s star strictly precedes `j`'s star.
    pub fn path_exists_by_intervals(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        let ivs = self.concat.intervals();
        for (k, a) in ivs.iter().enumerate() {
            if !a.contains(i) {
                continue;
            }
            for (l, b) in ivs.iter().enumerate() {
                if !b.contains(j) {
                    continue;
                }
                if k == l || self.covers.prec[k][l] {
                    return true;
                }
            }
        }
        false
    }

    /// Path ids of the unique type-`e` family `(pi_1, ..., pi_n)`.
    pub fn type_e_family(&self) -> Vec<u32> {
        (1..=self.order())
            .map(|i| self.path_id(i, i).expect("type-e paths always exist"))
            .collect()
    }

    /// The family of unique paths realizing type `v`, if every path exists.
    pub fn family_of_type(&self, v: &Permutation) -> Option<PathFamily> {
        let mut paths = Vec::with_capacity(self.order());
        for i in 1..=self.order() {
            paths.push(self.unique_path(i, v.apply(i))?.as_path());
        }
        Some(PathFamily { paths })
    }

    /// All path families covering the network. Types of these families form
    /// the Bruhat ideal below `w`.
    pub fn covering_families(&self) -> Vec<PathFamily> {
        let mut out = Vec::new();
        for v in Permutation::all(self.order()) {
            if let Some(fam) = self.family_of_type(&v) {
                let mut union = Bits256::empty();
                for (i, _) in fam.paths.iter().enumerate() {
                    let id = self.path_id(i + 1, v.apply(i + 1)).unwrap();
                    union.or_assign(&self.paths[id as usize].ebits);
                }
                if union == self.dag.live_edge_bits() {
                    out.push(fam);
                }
            }
        }
        out
    }

    /// `w` recomputed as the Bruhat-maximal type of a covering family; must
    /// agree with the straight-through route.
    pub fn w_from_covering_families(&self) -> Result<Permutation, Error> {
        let types: Vec<Permutation> = self
            .covering_families()
            .iter()
            .map(|f| f.family_type())
            .collect();
        let best = types
            .iter()
            .max_by_key(|t| t.length())
            .ok_or_else(|| Error::Internal("no covering family".into()))?;
        for t in &types {
            if !t.bruhat_leq(best)? {
                return Err(Error::Internal(
                    "covering family types are not a principal ideal".into(),
                ));
            }
        }
        Ok(best.clone())
    }

    /// The poset `P(F)` on `1..n`: `i < j` iff `i < j` as integers and the
    /// type-e paths at `i` and `j` share no vertex.
    pub fn path_poset(&self) -> Poset {
        let n = self.order();
        let fam = self.type_e_family();
        let mut lt = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                lt[i][j] = !self.paths_intersect(fam[i], fam[j]);
            }
        }
        Poset::from_lt_matrix(lt)
    }

    /// Connected components as consecutive source intervals.
    pub fn components(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        let mut start = 1;
        for i in 1..n {
            // i and i+1 are joined iff some star contains both
            let joined = self
                .concat
                .intervals()
                .iter()
                .any(|s| s.contains(i) && s.contains(i + 1));
            if !joined {
                out.push((start, i));
                start = i + 1;
            }
        }
        if n > 0 {
            out.push((start, n));
        }
        out
    }

    pub fn component_sizes(&self) -> IntPartition {
        let mut sizes: Vec<usize> = self
            .components()
            .iter()
            .map(|&(a, b)| b - a + 1)
            .collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition::new(sizes).expect("component sizes are positive")
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `O(F)`: product of `[hi-lo]_q!` over stars divided by
    /// `[overlap-1]_q!` over covering pairs; zero when disconnected.
    pub fn o_polynomial(&self) -> QPoly {
        if !self.is_connected() {
            return QPoly::zero();
        }
        let mut num = QPoly::one();
        for s in self.concat.intervals() {
            num = &num * &q_factorial(s.hi - s.lo);
        }
        for &(i, k) in &self.covers.covers {
            let (lo, hi) = self.concat.intervals()[i]
                .intersection(&self.concat.intervals()[k])
                .expect("covering stars intersect");
            num = num
                .div_exact(&q_factorial(hi - lo))
                .expect("O(F) is a polynomial");
        }
        num
    }

    /// The subnetwork covered by the type-e paths at `sources`, relabeled to
    /// order `|sources|`.
    pub fn restrict(&self, sources: &[usize]) -> Result<ZigzagNetwork, Error> {
        let mut s: Vec<usize> = sources.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() || s.iter().any(|&i| i == 0 || i > self.order()) {
            return Err(Error::Internal("restriction set out of range".into()));
        }
        let k = s.len();
        // union of the chosen type-e paths
        let mut vbits = Bits256::empty();
        let mut ebits = Bits256::empty();
        for &i in &s {
            let p = &self.paths[self.path_id(i, i).unwrap() as usize];
            vbits.or_assign(&p.vbits);
            ebits.or_assign(&p.ebits);
        }
        // path counts within the union subnetwork
        let mut b = vec![vec![0i64; k]; k];
        for (bi, &i) in s.iter().enumerate() {
            for (bj, &j) in s.iter().enumerate() {
                b[bi][bj] = self.count_paths_within(i, j, &vbits, &ebits);
            }
        }
        if b.iter().flatten().any(|&x| x > 1) {
            return Err(Error::Internal(
                "restriction produced a non-zig-zag path matrix".into(),
            ));
        }
        // the restricted network is the zig-zag network of the Bruhat-maximal
        // type supported by the sub path matrix
        let w_sub = bruhat_max_supported(&b)?;
        let net = crate::network::catalog::network_of(&w_sub)?;
        debug_assert_eq!(net.path_matrix(), b, "restriction path matrix mismatch");
        Ok(net)
    }

    fn count_paths_within(&self, i: usize, j: usize, vbits: &Bits256, ebits: &Bits256) -> i64 {
        // any path inside the union is a path of the full network, and those
        // are unique per (i, j); so just test containment of the unique path
        match self.unique_path(i, j) {
            None => 0,
            Some(p) => {
                let inside =
                    p.vertices.iter().all(|&v| vbits.test(v as usize)) && subset(&p.ebits, ebits);
                i64::from(inside)
            }
        }
    }

    /// Star positions actually visited by the type-e path at `i`.
    pub fn stars_on_type_e_path(&self, i: usize) -> Vec<usize> {
        let p = &self.paths[self.path_id(i, i).unwrap() as usize];
        p.vertices
            .iter()
            .filter_map(|&v| match self.dag.kind(v) {
                VertexKind::Center { star } => Some(star),
                _ => None,
            })
            .collect()
    }
}

fn subset(a: &Bits256, b: &Bits256) -> bool {
    let mut o = *a;
    o.or_assign(b);
    o == *b
}

/// The Bruhat-maximal permutation `v` with `b[i][v_i] = 1` for all `i`.
fn bruhat_max_supported(b: &[Vec<i64>]) -> Result<Permutation, Error> {
    let k = b.len();
    let mut best: Option<(usize, Permutation)> = None;
    let mut word = Vec::with_capacity(k);
    let mut used = vec![false; k + 1];
    fn rec(
        b: &[Vec<i64>],
        word: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut Option<(usize, Permutation)>,
    ) {
        let k = b.len();
        let i = word.len();
        if i == k {
            let v = Permutation::from_one_line(word.clone()).unwrap();
            let len = v.length();
            match best {
                Some((l, _)) if *l >= len => {}
                _ => *best = Some((len, v)),
            }
            return;
        }
        for j in 1..=k {
            if !used[j] && b[i][j - 1] == 1 {
                used[j] = true;
                word.push(j);
                rec(b, word, used, best);
                word.pop();
                used[j] = false;
            }
        }
    }
    rec(b, &mut word, &mut used, &mut best);
    best.map(|(_, v)| v)
        .ok_or_else(|| Error::Internal("no permutation supported by path matrix".into()))
}

/// Deletes all but one of the parallel paths between the centers of every
/// covering pair.
fn prune_parallel_paths(
    dag: &mut PlanarDag,
    concat: &Concatenation,
    covers: &CoverOrder,
    retention: Retention,
) {
    let ivs: &[Interval] = concat.intervals();
    for &(i, k) in &covers.covers {
        let (lo, hi) = ivs[i].intersection(&ivs[k]).expect("cover intersects");
        if lo == hi {
            continue;
        }
        let keep = match retention {
            Retention::Lowest => lo,
            Retention::Highest => hi,
        };
        for row in lo..=hi {
            if row == keep {
                continue;
            }
            // corridor: center_i -> (i+1,row) -> ... -> (k,row) -> center_k
            let center_i = center_vertex(dag, i);
            let center_k = center_vertex(dag, k);
            let first = boundary_vertex(dag, i + 1, row);
            dag.remove_edge(center_i, first);
            for stage in i + 1..k {
                let u = boundary_vertex(dag, stage, row);
                let v = boundary_vertex(dag, stage + 1, row);
                dag.remove_edge(u, v);
            }
            let last = boundary_vertex(dag, k, row);
            dag.remove_edge(last, center_k);
        }
    }
}

fn center_vertex(dag: &PlanarDag, star: usize) -> u32 {
    (0..dag.vertex_count() as u32)
        .find(|&v| dag.kind(v) == VertexKind::Center { star })
        .expect("center exists")
}

fn boundary_vertex(dag: &PlanarDag, stage: usize, row: usize) -> u32 {
    (0..dag.vertex_count() as u32)
        .find(|&v| dag.kind(v) == VertexKind::Boundary { stage, row })
        .expect("boundary exists")
}
