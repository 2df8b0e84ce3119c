//! Planar network DAGs: star concatenations as explicit graphs, path
//! enumeration, path matrices, path families, and nonintersecting counts.

use std::collections::HashMap;

use crate::network::StarSequence;
use crate::perm::Permutation;

/// 256-bit set, wide enough for every vertex/edge set this crate builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Bits256([u64; 4]);

impl Bits256 {
    pub fn empty() -> Self {
        Bits256([0; 4])
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < 256, "bitset overflow");
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn test(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn or_assign(&mut self, other: &Bits256) {
        for k in 0..4 {
            self.0[k] |= other.0[k];
        }
    }

    pub fn intersects(&self, other: &Bits256) -> bool {
        (0..4).any(|k| self.0[k] & other.0[k] != 0)
    }
}

/// Vertex roles inside a star-concatenation DAG.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    /// Boundary vertex at `stage` (0 = sources, t = sinks) in `row`.
    Boundary { stage: usize, row: usize },
    /// Central vertex of the star at position `star` (0-based).
    Center { star: usize },
}

/// A source-to-sink path, stored as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub source: usize,
    pub sink: usize,
    pub vertices: Vec<u32>,
}

/// A family of source-to-sink paths, one per source.
#[derive(Clone, Debug)]
pub struct PathFamily {
    pub paths: Vec<Path>,
}

impl PathFamily {
    /// The permutation sending each source to its path's sink.
    pub fn family_type(&self) -> Permutation {
        Permutation::from_one_line(self.paths.iter().map(|p| p.sink).collect())
            .expect("family sinks form a permutation")
    }
}

/// Explicit acyclic planar network with `n` sources and `n` sinks.
#[derive(Clone)]
pub struct PlanarDag {
    n: usize,
    kinds: Vec<VertexKind>,
    out: Vec<Vec<u32>>,
    sources: Vec<u32>,
    sinks: Vec<u32>,
    edge_ids: HashMap<(u32, u32), usize>,
    live_edges: Bits256,
    edge_count: usize,
}

impl PlanarDag {
    /// Materializes a star sequence: stage boundaries 0..=t, one center per
    /// star, horizontal edges off the star interval.
    pub fn from_stars(seq: &StarSequence) -> Self {
        let n = seq.order;
        let t = seq.stars.len();
        let mut kinds = Vec::new();
        let mut boundary = vec![vec![0u32; n + 1]; t + 1];
        for (stage, row_map) in boundary.iter_mut().enumerate() {
            for (row, slot) in row_map.iter_mut().enumerate().skip(1) {
                *slot = kinds.len() as u32;
                kinds.push(VertexKind::Boundary { stage, row });
            }
        }
        let centers: Vec<u32> = (0..t)
            .map(|star| {
                let id = kinds.len() as u32;
                kinds.push(VertexKind::Center { star });
                id
            })
            .collect();
        let mut dag = PlanarDag {
            n,
            out: vec![Vec::new(); kinds.len()],
            kinds,
            sources: (1..=n).map(|row| boundary[0][row]).collect(),
            sinks: (1..=n).map(|row| boundary[t][row]).collect(),
            edge_ids: HashMap::new(),
            live_edges: Bits256::empty(),
            edge_count: 0,
        };
        for (k, star) in seq.stars.iter().enumerate() {
            for row in 1..=n {
                if star.contains(row) {
                    dag.add_edge(boundary[k][row], centers[k]);
                    dag.add_edge(centers[k], boundary[k + 1][row]);
                } else {
                    dag.add_edge(boundary[k][row], boundary[k + 1][row]);
                }
            }
        }
        dag
    }

    /// A custom network from explicit edges over `stages` boundary columns;
    /// only used to realize arbitrary planar examples in tests and suites.
    pub fn from_boundary_edges(n: usize, stages: usize, edges: &[((usize, usize), (usize, usize))]) -> Self {
        let mut kinds = Vec::new();
        let mut boundary = vec![vec![0u32; n + 1]; stages];
        for (stage, row_map) in boundary.iter_mut().enumerate() {
            for (row, slot) in row_map.iter_mut().enumerate().skip(1) {
                *slot = kinds.len() as u32;
                kinds.push(VertexKind::Boundary { stage, row });
            }
        }
        let mut dag = PlanarDag {
            n,
            out: vec![Vec::new(); kinds.len()],
            kinds,
            sources: (1..=n).map(|row| boundary[0][row]).collect(),
            sinks: (1..=n).map(|row| boundary[stages - 1][row]).collect(),
            edge_ids: HashMap::new(),
            live_edges: Bits256::empty(),
            edge_count: 0,
        };
        for &((s1, r1), (s2, r2)) in edges {
            dag.add_edge(boundary[s1][r1], boundary[s2][r2]);
        }
        dag
    }

    fn add_edge(&mut self, u: u32, v: u32) {
        let id = self.edge_count;
        self.edge_count += 1;
        self.edge_ids.insert((u, v), id);
        self.live_edges.set(id);
        self.out[u as usize].push(v);
    }

    pub fn remove_edge(&mut self, u: u32, v: u32) {
        if self.edge_ids.remove(&(u, v)).is_some() {
            let mut live = Bits256::empty();
            for &eid in self.edge_ids.values() {
                live.set(eid);
            }
            self.live_edges = live;
            self.out[u as usize].retain(|&x| x != v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, v: u32) -> VertexKind {
        self.kinds[v as usize]
    }

    pub fn source_vertex(&self, i: usize) -> u32 {
        self.sources[i - 1]
    }

    pub fn sink_vertex(&self, j: usize) -> u32 {
        self.sinks[j - 1]
    }

    /// Index of the sink a vertex represents, if any.
    fn sink_index(&self, v: u32) -> Option<usize> {
        self.sinks.iter().position(|&s| s == v).map(|k| k + 1)
    }

    /// Path counts `b[i][j]` by dynamic programming.
    pub fn path_matrix(&self) -> Vec<Vec<i64>> {
        (1..=self.n)
            .map(|i| {
                let counts = self.count_from(self.source_vertex(i));
                (1..=self.n)
                    .map(|j| counts[self.sink_vertex(j) as usize])
                    .collect()
            })
            .collect()
    }

    fn count_from(&self, start: u32) -> Vec<i64> {
        // memoized count of paths from each vertex into each vertex reachable
        let mut counts = vec![0i64; self.vertex_count()];
        counts[start as usize] = 1;
        // vertices were created so that edges go to strictly later stages or
        // centers between them; a simple repeated relaxation over a topo sort
        let order = self.topo_order();
        for &v in &order {
            if counts[v as usize] == 0 {
                continue;
            }
            for &w in &self.out[v as usize] {
                counts[w as usize] += counts[v as usize];
            }
        }
        counts
    }

    fn topo_order(&self) -> Vec<u32> {
        let m = self.vertex_count();
        let mut indeg = vec![0usize; m];
        for outs in &self.out {
            for &w in outs {
                indeg[w as usize] += 1;
            }
        }
        let mut stack: Vec<u32> = (0..m as u32).filter(|&v| indeg[v as usize] == 0).collect();
        let mut order = Vec::with_capacity(m);
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &self.out[v as usize] {
                indeg[w as usize] -= 1;
                if indeg[w as usize] == 0 {
                    stack.push(w);
                }
            }
        }
        debug_assert_eq!(order.len(), m, "network must be acyclic");
        order
    }

    /// All source-`i` to sink-`j` paths (possibly many in a raw star DAG).
    pub fn paths_between(&self, i: usize, j: usize) -> Vec<Path> {
        self.all_paths_from(i)
            .into_iter()
            .filter(|p| p.sink == j)
            .collect()
    }

    /// All source-to-sink paths starting at source `i`.
    pub fn all_paths_from(&self, i: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![self.source_vertex(i)];
        self.dfs_paths(i, &mut stack, &mut out);
        out
    }

    fn dfs_paths(&self, i: usize, stack: &mut Vec<u32>, out: &mut Vec<Path>) {
        let v = *stack.last().unwrap();
        if let Some(j) = self.sink_index(v) {
            out.push(Path {
                source: i,
                sink: j,
                vertices: stack.clone(),
            });
            return;
        }
        for &w in &self.out[v as usize] {
            stack.push(w);
            self.dfs_paths(i, stack, out);
            stack.pop();
        }
    }

    pub fn vertex_bits(&self, path: &Path) -> Bits256 {
        let mut b = Bits256::empty();
        for &v in &path.vertices {
            b.set(v as usize);
        }
        b
    }

    pub fn edge_bits(&self, path: &Path) -> Bits256 {
        let mut b = Bits256::empty();
        for w in path.vertices.windows(2) {
            b.set(self.edge_ids[&(w[0], w[1])]);
        }
        b
    }

    pub fn live_edge_bits(&self) -> Bits256 {
        self.live_edges
    }

    /// Every family of source-to-sink paths (one per source) whose sinks form
    /// a permutation and whose union is the whole network.
    pub fn covering_families(&self) -> Vec<PathFamily> {
        let per_source: Vec<Vec<Path>> = (1..=self.n).map(|i| self.all_paths_from(i)).collect();
        let mut out = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        fn rec(
            dag: &PlanarDag,
            per_source: &[Vec<Path>],
            chosen: &mut Vec<usize>,
            used_sinks: &mut Vec<bool>,
            union: Bits256,
            out: &mut Vec<PathFamily>,
        ) {
            let i = chosen.len();
            if i == per_source.len() {
                if union == dag.live_edge_bits() {
                    out.push(PathFamily {
                        paths: chosen
                            .iter()
                            .enumerate()
                            .map(|(s, &k)| per_source[s][k].clone())
                            .collect(),
                    });
                }
                return;
            }
            for (k, path) in per_source[i].iter().enumerate() {
                if used_sinks[path.sink] {
                    continue;
                }
                used_sinks[path.sink] = true;
                chosen.push(k);
                let mut u = union;
                u.or_assign(&dag.edge_bits(path));
                rec(dag, per_source, chosen, used_sinks, u, out);
                chosen.pop();
                used_sinks[path.sink] = false;
            }
        }
        let mut used = vec![false; self.n + 1];
        rec(
            self,
            &per_source,
            &mut chosen,
            &mut used,
            Bits256::empty(),
            &mut out,
        );
        out
    }

    /// Number of families of pairwise vertex-disjoint paths joining sources
    /// `is` (increasing) to sinks `js` (increasing), in order.
    pub fn nonintersecting_families(&self, is: &[usize], js: &[usize]) -> i64 {
        assert_eq!(is.len(), js.len(), "index sets must have equal size");
        let lists: Vec<Vec<(Path, Bits256)>> = is
            .iter()
            .zip(js.iter())
            .map(|(&i, &j)| {
                self.paths_between(i, j)
                    .into_iter()
                    .map(|p| {
                        let b = self.vertex_bits(&p);
                        (p, b)
                    })
                    .collect()
            })
            .collect();
        fn rec(lists: &[Vec<(Path, Bits256)>], k: usize, used: Bits256) -> i64 {
            if k == lists.len() {
                return 1;
            }
            let mut total = 0;
            for (_, bits) in &lists[k] {
                if !bits.intersects(&used) {
                    let mut u = used;
                    u.or_assign(bits);
                    total += rec(lists, k + 1, u);
                }
            }
            total
        }
        rec(&lists, 0, Bits256::empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::Interval;

    fn iv(lo: usize, hi: usize) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn identity_network() {
        let dag = PlanarDag::from_stars(&StarSequence::new(3, vec![]).unwrap());
        assert_eq!(
            dag.path_matrix(),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn star_concatenation_counts() {
        // G_{[2,4]} o G_{[1,3]}: entries may exceed 1
        let seq = StarSequence::new(4, vec![iv(2, 4), iv(1, 3)]).unwrap();
        let dag = PlanarDag::from_stars(&seq);
        let b = dag.path_matrix();
        assert_eq!(
            b,
            vec![
                vec![1, 1, 1, 0],
                vec![2, 2, 2, 1],
                vec![2, 2, 2, 1],
                vec![2, 2, 2, 1],
            ]
        );
        // row sums equal path counts from each source
        for i in 1..=4 {
            let total: i64 = b[i - 1].iter().sum();
            assert_eq!(total, dag.all_paths_from(i).len() as i64);
        }
    }

    #[test]
    fn covering_families_of_star_pair() {
        // the network G_{[2,4]} o G_{[1,3]} is covered by families including
        // two of type e and two of type 2341
        let seq = StarSequence::new(4, vec![iv(2, 4), iv(1, 3)]).unwrap();
        let dag = PlanarDag::from_stars(&seq);
        let fams = dag.covering_families();
        let e = Permutation::identity(4);
        let t2341 = Permutation::parse("2341").unwrap();
        let count_e = fams.iter().filter(|f| f.family_type() == e).count();
        let count_2341 = fams.iter().filter(|f| f.family_type() == t2341).count();
        assert_eq!(count_e, 2);
        assert_eq!(count_2341, 2);
    }

    #[test]
    fn lindstrom_chip_example() {
        // bridge chips realizing B = [[1,1,0],[1,2,1],[0,1,2]]
        let mut edges: Vec<((usize, usize), (usize, usize))> = Vec::new();
        for stage in 0..4 {
            for row in 1..=3 {
                edges.push(((stage, row), (stage + 1, row)));
            }
        }
        edges.push(((0, 2), (1, 1))); // down-bridge 2 -> 1
        edges.push(((1, 3), (2, 2))); // down-bridge 3 -> 2
        edges.push(((2, 2), (3, 3))); // up-bridge 2 -> 3
        edges.push(((3, 1), (4, 2))); // up-bridge 1 -> 2
        let dag = PlanarDag::from_boundary_edges(3, 5, &edges);
        assert_eq!(
            dag.path_matrix(),
            vec![vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]
        );
        // det(B_{23,13}) = 2 counts the two disjoint families {2,3} -> {1,3}
        assert_eq!(dag.nonintersecting_families(&[2, 3], &[1, 3]), 2);
        assert_eq!(dag.nonintersecting_families(&[2], &[2]), 2);
        assert_eq!(dag.nonintersecting_families(&[1], &[1]), 1);
    }
}
