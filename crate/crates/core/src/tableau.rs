//! Path tableaux: Young-diagram fillings whose cells are source-to-sink
//! paths, the structural property catalog, the `inv`/`rinv` statistics, and
//! enumerators for every tableau class a trace formula needs.
//!
//! Tableaux are stored in French convention with row 1 (the longest) first;
//! rendering is a display concern. Arrangements (row concatenations,
//! reversed rows, transposes) are plain cell sequences whose positions are
//! the column positions.

use serde::Serialize;

use crate::error::Error;
use crate::network::ZigzagNetwork;
use crate::partition::{ordered_set_partitions, IntPartition, OrderedSetPartition};
use crate::perm::Permutation;
use crate::poset::Poset;
use crate::qpoly::QPoly;

/// One tableau cell: a path with its endpoints copied inline.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Cell {
    #[serde(skip)]
    pub path: u32,
    pub src: usize,
    pub snk: usize,
}

/// Bijective filling of a Young diagram by paths.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PathTableau {
    pub shape: IntPartition,
    pub rows: Vec<Vec<Cell>>,
}

impl PathTableau {
    /// Sources of the cells, row by row.
    pub fn left_tableau(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|c| c.src).collect())
            .collect()
    }

    /// Sinks of the cells, row by row.
    pub fn right_tableau(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|c| c.snk).collect())
            .collect()
    }

    /// `U_1 o ... o U_r`: rows concatenated in increasing row order.
    pub fn concat_rows(&self) -> Vec<Cell> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `U_r o ... o U_1`.
    pub fn concat_rows_reversed_order(&self) -> Vec<Cell> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `U_1^R o ... o U_r^R`: each row reversed, rows in increasing order.
    pub fn concat_reversed_rows(&self) -> Vec<Cell> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }
}

/// Intersection oracle: tableau predicates and statistics only need to know
/// when two cells' paths share a vertex.
pub trait CellOracle {
    fn cells_intersect(&self, a: &Cell, b: &Cell) -> bool;

    /// `a <_Q b`: smaller source and disjoint paths.
    fn q_less(&self, a: &Cell, b: &Cell) -> bool {
        a.src < b.src && !self.cells_intersect(a, b)
    }
}

impl CellOracle for ZigzagNetwork {
    fn cells_intersect(&self, a: &Cell, b: &Cell) -> bool {
        self.paths_intersect(a.path, b.path)
    }
}

/// Cells drawn from an abstract poset: intersection means incomparability.
pub struct PosetCells<'a>(pub &'a Poset);

impl CellOracle for PosetCells<'_> {
    fn cells_intersect(&self, a: &Cell, b: &Cell) -> bool {
        self.0.incomparable(a.src, b.src)
    }
}

/// The structural properties of the tableau catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TabProperty {
    ColumnStrict,
    RowStrict,
    RowSemistrict,
    CyclicallyRowSemistrict,
    Standard,
    RecordFree,
    LeftAnchored,
    RightAnchored,
    RowClosed,
    LeftRowStrict,
    Cylindrical,
}

impl TabProperty {
    pub const ALL: [TabProperty; 11] = [
        TabProperty::ColumnStrict,
        TabProperty::RowStrict,
        TabProperty::RowSemistrict,
        TabProperty::CyclicallyRowSemistrict,
        TabProperty::Standard,
        TabProperty::RecordFree,
        TabProperty::LeftAnchored,
        TabProperty::RightAnchored,
        TabProperty::RowClosed,
        TabProperty::LeftRowStrict,
        TabProperty::Cylindrical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TabProperty::ColumnStrict => "column-strict",
            TabProperty::RowStrict => "row-strict",
            TabProperty::RowSemistrict => "row-semistrict",
            TabProperty::CyclicallyRowSemistrict => "cyclically-row-semistrict",
            TabProperty::Standard => "standard",
            TabProperty::RecordFree => "record-free",
            TabProperty::LeftAnchored => "left-anchored",
            TabProperty::RightAnchored => "right-anchored",
            TabProperty::RowClosed => "row-closed",
            TabProperty::LeftRowStrict => "left-row-strict",
            TabProperty::Cylindrical => "cylindrical",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        TabProperty::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown tableau property {s:?}")))
    }
}

/// Tests one property of a tableau.
pub fn has_property<O: CellOracle + ?Sized>(
    oracle: &O,
    tab: &PathTableau,
    prop: TabProperty,
) -> bool {
    match prop {
        TabProperty::ColumnStrict => {
            for r in 0..tab.rows.len().saturating_sub(1) {
                for c in 0..tab.rows[r + 1].len() {
                    if !oracle.q_less(&tab.rows[r][c], &tab.rows[r + 1][c]) {
                        return false;
                    }
                }
            }
            true
        }
        TabProperty::RowStrict => tab
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| oracle.q_less(&w[0], &w[1]))),
        TabProperty::RowSemistrict => tab
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| !oracle.q_less(&w[1], &w[0]))),
        TabProperty::CyclicallyRowSemistrict => {
            has_property(oracle, tab, TabProperty::RowSemistrict)
                && tab.rows.iter().all(|row| {
                    row.len() < 2 || !oracle.q_less(&row[0], &row[row.len() - 1])
                })
        }
        TabProperty::Standard => {
            has_property(oracle, tab, TabProperty::ColumnStrict)
                && has_property(oracle, tab, TabProperty::RowSemistrict)
        }
        TabProperty::RecordFree => tab.rows.iter().all(|row| {
            (1..row.len()).all(|p| {
                // p is a nontrivial record iff it is above every earlier cell
                !(0..p).all(|q| oracle.q_less(&row[q], &row[p]))
            })
        }),
        TabProperty::LeftAnchored => tab.rows.iter().all(|row| {
            row.first()
                .map(|f| row.iter().all(|c| f.src <= c.src))
                .unwrap_or(true)
        }),
        TabProperty::RightAnchored => tab.rows.iter().all(|row| {
            row.last()
                .map(|l| row.iter().all(|c| l.src <= c.src))
                .unwrap_or(true)
        }),
        TabProperty::RowClosed => tab.rows.iter().all(|row| {
            let mut srcs: Vec<usize> = row.iter().map(|c| c.src).collect();
            let mut snks: Vec<usize> = row.iter().map(|c| c.snk).collect();
            srcs.sort_unstable();
            snks.sort_unstable();
            srcs == snks
        }),
        TabProperty::LeftRowStrict => tab
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0].src < w[1].src)),
        TabProperty::Cylindrical => tab.rows.iter().all(|row| {
            (0..row.len()).all(|p| row[p].snk == row[(p + 1) % row.len()].src)
        }),
    }
}

pub fn has_all_properties<O: CellOracle + ?Sized>(
    oracle: &O,
    tab: &PathTableau,
    props: &[TabProperty],
) -> bool {
    props.iter().all(|&p| has_property(oracle, tab, p))
}

/// Left inversions of a cell sequence read with increasing column positions:
/// pairs in distinct columns whose paths intersect with descending sources.
pub fn inv_word<O: CellOracle + ?Sized>(oracle: &O, cells: &[Cell]) -> usize {
    count_pairs(cells, |a, b| a.src > b.src && oracle.cells_intersect(a, b))
}

/// Right inversions: descending sinks instead of sources.
pub fn rinv_word<O: CellOracle + ?Sized>(oracle: &O, cells: &[Cell]) -> usize {
    count_pairs(cells, |a, b| a.snk > b.snk && oracle.cells_intersect(a, b))
}

fn count_pairs(cells: &[Cell], pred: impl Fn(&Cell, &Cell) -> bool) -> usize {
    let mut count = 0;
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            if pred(&cells[a], &cells[b]) {
                count += 1;
            }
        }
    }
    count
}

/// Tableau-level `inv`: pairs in strictly increasing columns (any rows).
pub fn inv_tableau<O: CellOracle + ?Sized>(oracle: &O, tab: &PathTableau) -> usize {
    cross_column_pairs(tab, |a, b| a.src > b.src && oracle.cells_intersect(a, b))
}

pub fn rinv_tableau<O: CellOracle + ?Sized>(oracle: &O, tab: &PathTableau) -> usize {
    cross_column_pairs(tab, |a, b| a.snk > b.snk && oracle.cells_intersect(a, b))
}

fn cross_column_pairs(tab: &PathTableau, pred: impl Fn(&Cell, &Cell) -> bool) -> usize {
    let mut count = 0;
    for row_a in &tab.rows {
        for (ca, a) in row_a.iter().enumerate() {
            for row_b in &tab.rows {
                for (cb, b) in row_b.iter().enumerate() {
                    if ca < cb && pred(a, b) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// `inv(U^tr)`: the transpose swaps rows and columns, so pairs in strictly
/// increasing rows count.
pub fn inv_transpose<O: CellOracle + ?Sized>(oracle: &O, tab: &PathTableau) -> usize {
    cross_row_pairs(tab, |a, b| a.src > b.src && oracle.cells_intersect(a, b))
}

pub fn rinv_transpose<O: CellOracle + ?Sized>(oracle: &O, tab: &PathTableau) -> usize {
    cross_row_pairs(tab, |a, b| a.snk > b.snk && oracle.cells_intersect(a, b))
}

fn cross_row_pairs(tab: &PathTableau, pred: impl Fn(&Cell, &Cell) -> bool) -> usize {
    let mut count = 0;
    for (ra, row_a) in tab.rows.iter().enumerate() {
        for a in row_a {
            for row_b in tab.rows.iter().skip(ra + 1) {
                for b in row_b {
                    if pred(a, b) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Verifies the row-concatenation decomposition for both statistics:
/// `inv(U_1 o ... o U_r) = inv(U_1) + ... + inv(U_r) + inv(U^tr)`.
pub fn decomposition_identity_check<O: CellOracle + ?Sized>(oracle: &O, tab: &PathTableau) -> bool {
    let concat = tab.concat_rows();
    let row_invs: usize = tab.rows.iter().map(|r| inv_word(oracle, r)).sum();
    let row_rinvs: usize = tab.rows.iter().map(|r| rinv_word(oracle, r)).sum();
    inv_word(oracle, &concat) == row_invs + inv_transpose(oracle, tab)
        && rinv_word(oracle, &concat) == row_rinvs + rinv_transpose(oracle, tab)
}

fn shape_rows(shape: &IntPartition) -> &[usize] {
    shape.parts()
}

fn check_shape(net_order: usize, shape: &IntPartition) -> Result<(), Error> {
    if shape.n() != net_order {
        return Err(Error::ShapeMismatch {
            shape_sum: shape.n(),
            expected: net_order,
        });
    }
    Ok(())
}

fn rows_from_flat(shape: &IntPartition, cells: &[Cell]) -> PathTableau {
    let mut rows = Vec::with_capacity(shape.len());
    let mut at = 0;
    for &len in shape_rows(shape) {
        rows.push(cells[at..at + len].to_vec());
        at += len;
    }
    PathTableau {
        shape: shape.clone(),
        rows,
    }
}

fn type_e_cell(net: &ZigzagNetwork, i: usize) -> Cell {
    let id = net.path_id(i, i).expect("type-e path exists");
    Cell {
        path: id,
        src: i,
        snk: i,
    }
}

fn cell_of(net: &ZigzagNetwork, i: usize, j: usize) -> Option<Cell> {
    net.path_id(i, j).map(|id| Cell {
        path: id,
        src: i,
        snk: j,
    })
}

/// All bijective fillings of `shape` by the type-e paths, in lexicographic
/// order of the flat source word.
pub fn type_e_tableaux(net: &ZigzagNetwork, shape: &IntPartition) -> Result<Vec<PathTableau>, Error> {
    check_shape(net.order(), shape)?;
    let n = net.order();
    Ok(Permutation::all(n)
        .into_iter()
        .map(|p| {
            let cells: Vec<Cell> = p.word().iter().map(|&i| type_e_cell(net, i)).collect();
            rows_from_flat(shape, &cells)
        })
        .collect())
}

/// All arrangements of the unique path family of type `v` (empty when no
/// such family exists).
pub fn tableaux_of_type(
    net: &ZigzagNetwork,
    shape: &IntPartition,
    v: &Permutation,
) -> Result<Vec<PathTableau>, Error> {
    check_shape(net.order(), shape)?;
    if v.n() != net.order() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: net.order(),
        });
    }
    let n = net.order();
    let mut family = Vec::with_capacity(n);
    for i in 1..=n {
        match cell_of(net, i, v.apply(i)) {
            Some(c) => family.push(c),
            None => return Ok(Vec::new()),
        }
    }
    Ok(Permutation::all(n)
        .into_iter()
        .map(|p| {
            let cells: Vec<Cell> = p.word().iter().map(|&i| family[i - 1]).collect();
            rows_from_flat(shape, &cells)
        })
        .collect())
}

/// Row-closed tableaux: each row's sinks permute its sources. With
/// `left_row_strict` the sources of each row appear in increasing order.
pub fn row_closed_tableaux(
    net: &ZigzagNetwork,
    shape: &IntPartition,
    left_row_strict: bool,
) -> Result<Vec<PathTableau>, Error> {
    check_shape(net.order(), shape)?;
    let mut out = Vec::new();
    for osp in ordered_set_partitions(net.order(), shape_rows(shape)) {
        let mut per_row: Vec<Vec<Vec<Cell>>> = Vec::new();
        for block in &osp.blocks {
            per_row.push(row_closed_rows_for_block(net, block, left_row_strict));
        }
        cartesian_rows(shape, &per_row, &mut out);
    }
    Ok(out)
}

/// All row fillings over `block`: sinks range over permutations of the block
/// with every path present; sources sorted increasingly, or permuted freely
/// when `left_row_strict` is false.
fn row_closed_rows_for_block(
    net: &ZigzagNetwork,
    block: &[usize],
    left_row_strict: bool,
) -> Vec<Vec<Cell>> {
    let k = block.len();
    let mut sink_choices: Vec<Vec<Cell>> = Vec::new();
    let mut cur: Vec<Cell> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(
        net: &ZigzagNetwork,
        block: &[usize],
        used: &mut [bool],
        cur: &mut Vec<Cell>,
        out: &mut Vec<Vec<Cell>>,
    ) {
        let p = cur.len();
        if p == block.len() {
            out.push(cur.clone());
            return;
        }
        for (q, &snk) in block.iter().enumerate() {
            if used[q] {
                continue;
            }
            if let Some(c) = cell_of(net, block[p], snk) {
                used[q] = true;
                cur.push(c);
                rec(net, block, used, cur, out);
                cur.pop();
                used[q] = false;
            }
        }
    }
    rec(net, block, &mut used, &mut cur, &mut sink_choices);
    if left_row_strict {
        return sink_choices;
    }
    // free cell order within the row
    let mut out = Vec::new();
    for row in sink_choices {
        for p in Permutation::all(k) {
            out.push(p.word().iter().map(|&i| row[i - 1]).collect());
        }
    }
    out
}

/// Cylindrical tableaux: determined by the left tableau; row `(i_1..i_k)`
/// holds the paths `i_1 -> i_2, ..., i_k -> i_1`, all of which must exist.
pub fn cylindrical_tableaux(
    net: &ZigzagNetwork,
    shape: &IntPartition,
) -> Result<Vec<PathTableau>, Error> {
    check_shape(net.order(), shape)?;
    let mut out = Vec::new();
    for osp in ordered_set_partitions(net.order(), shape_rows(shape)) {
        let mut per_row: Vec<Vec<Vec<Cell>>> = Vec::new();
        for block in &osp.blocks {
            per_row.push(cylindrical_rows_for_block(net, block));
        }
        cartesian_rows(shape, &per_row, &mut out);
    }
    Ok(out)
}

fn cylindrical_rows_for_block(net: &ZigzagNetwork, block: &[usize]) -> Vec<Vec<Cell>> {
    let k = block.len();
    let mut out = Vec::new();
    for p in Permutation::all(k) {
        let order: Vec<usize> = p.word().iter().map(|&i| block[i - 1]).collect();
        let mut row = Vec::with_capacity(k);
        let mut ok = true;
        for idx in 0..k {
            match cell_of(net, order[idx], order[(idx + 1) % k]) {
                Some(c) => row.push(c),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.push(row);
        }
    }
    out
}

fn cartesian_rows(shape: &IntPartition, per_row: &[Vec<Vec<Cell>>], out: &mut Vec<PathTableau>) {
    fn rec(
        shape: &IntPartition,
        per_row: &[Vec<Vec<Cell>>],
        r: usize,
        rows: &mut Vec<Vec<Cell>>,
        out: &mut Vec<PathTableau>,
    ) {
        if r == per_row.len() {
            out.push(PathTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for row in &per_row[r] {
            rows.push(row.clone());
            rec(shape, per_row, r + 1, rows, out);
            rows.pop();
        }
    }
    let mut rows = Vec::new();
    rec(shape, per_row, 0, &mut rows, out);
}

/// All bijective fillings of `shape` by the elements of a poset (cells carry
/// the element as both endpoints); used by the chromatic machinery.
pub fn poset_tableaux(poset: &Poset, shape: &IntPartition) -> Result<Vec<PathTableau>, Error> {
    let n = poset.n();
    check_shape(n, shape)?;
    Ok(Permutation::all(n)
        .into_iter()
        .map(|p| {
            let cells: Vec<Cell> = p
                .word()
                .iter()
                .map(|&i| Cell {
                    path: i as u32,
                    src: i,
                    snk: i,
                })
                .collect();
            rows_from_flat(shape, &cells)
        })
        .collect())
}

/// General enumeration entry point. With a type constraint the base set is
/// the arrangements of that family; otherwise the base is chosen by the
/// requested properties (cylindrical and row-closed classes have their own
/// generators; poset-property filters apply to type-e fillings).
pub fn enumerate(
    net: &ZigzagNetwork,
    shape: &IntPartition,
    props: &[TabProperty],
    type_constraint: Option<&Permutation>,
) -> Result<Vec<PathTableau>, Error> {
    let base: Vec<PathTableau> = if let Some(v) = type_constraint {
        tableaux_of_type(net, shape, v)?
    } else if props.contains(&TabProperty::Cylindrical) {
        cylindrical_tableaux(net, shape)?
    } else if props.contains(&TabProperty::RowClosed) {
        row_closed_tableaux(net, shape, props.contains(&TabProperty::LeftRowStrict))?
    } else {
        type_e_tableaux(net, shape)?
    };
    Ok(base
        .into_iter()
        .filter(|t| has_all_properties(net, t, props))
        .collect())
}

/// The unique row-semistrict type-e tableau whose left tableau lists block
/// `j` increasingly in row `j`.
pub fn osp_tableau(
    net: &ZigzagNetwork,
    osp: &OrderedSetPartition,
) -> Result<PathTableau, Error> {
    let sizes = osp.block_sizes();
    let shape = IntPartition::new(sizes.clone()).map_err(|_| {
        Error::ShapeMismatch {
            shape_sum: sizes.iter().sum(),
            expected: net.order(),
        }
    })?;
    check_shape(net.order(), &shape)?;
    let rows: Vec<Vec<Cell>> = osp
        .blocks
        .iter()
        .map(|block| {
            let mut b = block.clone();
            b.sort_unstable();
            b.into_iter().map(|i| type_e_cell(net, i)).collect()
        })
        .collect();
    Ok(PathTableau { shape, rows })
}

/// Generating function `sum q^stat(U)` over a tableau list.
pub fn generating_function(stats: impl IntoIterator<Item = usize>) -> QPoly {
    let mut coeffs: Vec<i64> = Vec::new();
    for s in stats {
        if coeffs.len() <= s {
            coeffs.resize(s + 1, 0);
        }
        coeffs[s] += 1;
    }
    QPoly::from_coeffs(coeffs)
}

/// The per-row cycle-notation bijection from row-closed left-row-strict
/// tableaux to row-semistrict type-e tableaux, for 312-avoiding `w`.
pub fn drop_parens_forward(net: &ZigzagNetwork, tab: &PathTableau) -> Result<PathTableau, Error> {
    check_drop_parens_pre(net)?;
    let mut rows = Vec::with_capacity(tab.rows.len());
    for row in &tab.rows {
        let members: Vec<usize> = row.iter().map(|c| c.src).collect();
        if row.windows(2).any(|w| w[0].src >= w[1].src) {
            return Err(Error::Internal("row is not left row-strict".into()));
        }
        // sink word as ranks in the row's index set
        let rank = |x: usize| members.iter().position(|&m| m == x).unwrap() + 1;
        let w_word: Vec<usize> = row.iter().map(|c| rank(c.snk)).collect();
        let w = Permutation::from_one_line(w_word)
            .map_err(|_| Error::Internal("row is not row-closed".into()))?;
        let x = canonical_cycle_word(&w.inverse());
        rows.push(
            x.into_iter()
                .map(|r| type_e_cell(net, members[r - 1]))
                .collect(),
        );
    }
    Ok(PathTableau {
        shape: tab.shape.clone(),
        rows,
    })
}

/// The inverse bijection, recovering the row-closed left-row-strict tableau
/// from the records of each row's index word.
pub fn drop_parens_inverse(net: &ZigzagNetwork, tab: &PathTableau) -> Result<PathTableau, Error> {
    check_drop_parens_pre(net)?;
    let mut rows = Vec::with_capacity(tab.rows.len());
    for row in &tab.rows {
        let mut members: Vec<usize> = row.iter().map(|c| c.src).collect();
        members.sort_unstable();
        let rank = |x: usize| members.iter().position(|&m| m == x).unwrap() + 1;
        let x_word: Vec<usize> = row.iter().map(|c| rank(c.src)).collect();
        let w_inv = permutation_from_record_cycles(&x_word)?.inverse();
        let cells = (0..members.len())
            .map(|p| {
                cell_of(net, members[p], members[w_inv.apply(p + 1) - 1]).ok_or_else(|| {
                    Error::Internal("missing path for drop-parens inverse".into())
                })
            })
            .collect::<Result<Vec<Cell>, Error>>()?;
        rows.push(cells);
    }
    Ok(PathTableau {
        shape: tab.shape.clone(),
        rows,
    })
}

fn check_drop_parens_pre(net: &ZigzagNetwork) -> Result<(), Error> {
    let p312 = Permutation::from_one_line(vec![3, 1, 2]).unwrap();
    if !net.w().avoids(&p312) {
        return Err(Error::PatternViolation {
            pattern: "312".into(),
            word: net.w().to_string(),
        });
    }
    Ok(())
}

/// Cycle notation with each cycle led by its greatest element and cycles
/// ordered by increasing leaders; parentheses dropped.
fn canonical_cycle_word(w: &Permutation) -> Vec<usize> {
    let n = w.n();
    let mut seen = vec![false; n + 1];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cyc.push(cur);
            cur = w.apply(cur);
        }
        // rotate so the greatest element leads
        let top = cyc
            .iter()
            .enumerate()
            .max_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        cyc.rotate_left(top);
        cycles.push(cyc);
    }
    cycles.sort_by_key(|c| c[0]);
    cycles.into_iter().flatten().collect()
}

/// Rebuilds the permutation whose canonical cycle word (segments split at
/// the records) is `x`.
fn permutation_from_record_cycles(x: &[usize]) -> Result<Permutation, Error> {
    let n = x.len();
    let mut word = vec![0usize; n];
    let mut start = 0;
    let mut running_max = 0;
    for p in 0..=n {
        let is_record = p == n || x[p] > running_max;
        if is_record && p > start {
            // close the cycle x[start..p]
            for q in start..p {
                let from = x[q];
                let to = x[if q + 1 < p { q + 1 } else { start }];
                word[from - 1] = to;
            }
            start = p;
        }
        if p < n {
            running_max = running_max.max(x[p]);
        }
    }
    Permutation::from_one_line(word)
        .map_err(|_| Error::Internal("record segments do not form a permutation".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::network_of;

    fn net(w: &str) -> ZigzagNetwork {
        network_of(&Permutation::parse(w).unwrap()).unwrap()
    }

    fn lam(parts: &[usize]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn f3421_counts() {
        let f = net("3421");
        let rc = enumerate(
            &f,
            &lam(&[3, 1]),
            &[TabProperty::RowClosed, TabProperty::LeftRowStrict],
            None,
        )
        .unwrap();
        assert_eq!(rc.len(), 20);

        let e = Permutation::identity(4);
        let cs31 = enumerate(&f, &lam(&[3, 1]), &[TabProperty::ColumnStrict], Some(&e)).unwrap();
        assert_eq!(cs31.len(), 2);
        let cs4 = enumerate(&f, &lam(&[4]), &[TabProperty::ColumnStrict], Some(&e)).unwrap();
        assert_eq!(cs4.len(), 24);
        let std4 = enumerate(&f, &lam(&[4]), &[TabProperty::Standard], Some(&e)).unwrap();
        assert_eq!(std4.len(), 18);

        let cyl = enumerate(&f, &lam(&[3, 1]), &[TabProperty::Cylindrical], None).unwrap();
        assert_eq!(cyl.len(), 18);
        let lcyl = enumerate(
            &f,
            &lam(&[3, 1]),
            &[TabProperty::Cylindrical, TabProperty::LeftAnchored],
            None,
        )
        .unwrap();
        assert_eq!(lcyl.len(), 6);

        let rf = enumerate(
            &f,
            &lam(&[3, 1]),
            &[TabProperty::RecordFree, TabProperty::RowSemistrict],
            Some(&e),
        )
        .unwrap();
        assert_eq!(rf.len(), 18);
        let ra = enumerate(
            &f,
            &lam(&[3, 1]),
            &[TabProperty::RightAnchored, TabProperty::RowSemistrict],
            Some(&e),
        )
        .unwrap();
        assert_eq!(ra.len(), 6);
    }

    #[test]
    fn column_strict_inversions_31() {
        // the two column-strict type-e tableaux of shape (3,1) carry 2 and 3
        // inversions
        let f = net("3421");
        let e = Permutation::identity(4);
        let tabs = enumerate(&f, &lam(&[3, 1]), &[TabProperty::ColumnStrict], Some(&e)).unwrap();
        let mut invs: Vec<usize> = tabs.iter().map(|t| inv_tableau(&f, t)).collect();
        invs.sort_unstable();
        assert_eq!(invs, vec![2, 3]);
    }

    #[test]
    fn row_semistrict_excludes_pi4_before_pi1() {
        let f = net("3421");
        let e = Permutation::identity(4);
        let all = enumerate(&f, &lam(&[4]), &[], Some(&e)).unwrap();
        assert_eq!(all.len(), 24);
        let bad: Vec<&PathTableau> = all
            .iter()
            .filter(|t| !has_property(&f, t, TabProperty::RowSemistrict))
            .collect();
        assert_eq!(bad.len(), 6);
        for t in bad {
            let srcs: Vec<usize> = t.rows[0].iter().map(|c| c.src).collect();
            let p4 = srcs.iter().position(|&s| s == 4).unwrap();
            assert_eq!(srcs.get(p4 + 1), Some(&1));
        }
    }

    #[test]
    fn lr_tableaux_and_cylindrical_rule() {
        let f = net("3421");
        let cyl = enumerate(&f, &lam(&[3, 1]), &[TabProperty::Cylindrical], None).unwrap();
        for t in &cyl {
            let l = t.left_tableau();
            let r = t.right_tableau();
            for (lr, rr) in l.iter().zip(r.iter()) {
                let mut rotated = lr.clone();
                rotated.rotate_left(1);
                assert_eq!(&rotated, rr);
            }
            assert!(has_property(&f, t, TabProperty::RowClosed));
        }
    }

    #[test]
    fn type_e_left_equals_right() {
        let f = net("3421");
        let e = Permutation::identity(4);
        for t in enumerate(&f, &lam(&[2, 2]), &[], Some(&e)).unwrap() {
            assert_eq!(t.left_tableau(), t.right_tableau());
        }
    }

    #[test]
    fn decomposition_identity_samples() {
        let f = net("3421");
        for shape in [lam(&[3, 1]), lam(&[2, 2]), lam(&[2, 1, 1])] {
            for t in enumerate(&f, &shape, &[], Some(&Permutation::identity(4))).unwrap() {
                assert!(decomposition_identity_check(&f, &t));
            }
            for t in enumerate(&f, &shape, &[TabProperty::Cylindrical], None).unwrap() {
                assert!(decomposition_identity_check(&f, &t));
            }
        }
        let g = net("3142");
        for t in enumerate(&g, &lam(&[2, 2]), &[TabProperty::Cylindrical], None).unwrap() {
            assert!(decomposition_identity_check(&g, &t));
        }
    }

    #[test]
    fn osp_tableau_inversions() {
        // the four ordered set partitions of type (3,1) give concatenation
        // inversions 0, 1, 2, 2
        let f = net("3421");
        let mut counts = Vec::new();
        for osp in ordered_set_partitions(4, &[3, 1]) {
            let v = osp_tableau(&f, &osp).unwrap();
            counts.push(inv_word(&f, &v.concat_rows()));
        }
        counts.sort_unstable();
        assert_eq!(counts, vec![0, 1, 2, 2]);
    }

    #[test]
    fn drop_parens_round_trip() {
        for w in ["3421", "321", "1234", "4321", "23154"] {
            let f = net(w);
            let n = f.order();
            for shape in IntPartition::all(n) {
                let rc = enumerate(
                    &f,
                    &shape,
                    &[TabProperty::RowClosed, TabProperty::LeftRowStrict],
                    None,
                )
                .unwrap();
                let rss = enumerate(
                    &f,
                    &shape,
                    &[TabProperty::RowSemistrict],
                    Some(&Permutation::identity(n)),
                )
                .unwrap();
                assert_eq!(rc.len(), rss.len(), "counts at w={w} shape={shape}");
                for t in &rc {
                    let image = drop_parens_forward(&f, t).unwrap();
                    assert!(has_property(&f, &image, TabProperty::RowSemistrict));
                    assert!(rss.contains(&image));
                    let back = drop_parens_inverse(&f, &image).unwrap();
                    assert_eq!(&back, t);
                }
                for t in &rss {
                    let pre = drop_parens_inverse(&f, t).unwrap();
                    let fwd = drop_parens_forward(&f, &pre).unwrap();
                    assert_eq!(&fwd, t);
                }
            }
        }
        // precondition: 312 must be avoided
        let f = net("3142");
        let t = enumerate(
            &f,
            &lam(&[4]),
            &[TabProperty::RowClosed, TabProperty::LeftRowStrict],
            None,
        )
        .unwrap();
        assert!(drop_parens_forward(&f, &t[0]).is_err());
    }

    #[test]
    fn fixed_point_identity_row() {
        let f = net("3421");
        let row: Vec<Cell> = (1..=4).map(|i| type_e_cell(&f, i)).collect();
        let tab = PathTableau {
            shape: lam(&[4]),
            rows: vec![row],
        };
        let image = drop_parens_forward(&f, &tab).unwrap();
        assert_eq!(image, tab);
    }

    #[test]
    fn enumeration_deterministic() {
        let f = net("3421");
        let a = enumerate(&f, &lam(&[3, 1]), &[TabProperty::Cylindrical], None).unwrap();
        let b = enumerate(&f, &lam(&[3, 1]), &[TabProperty::Cylindrical], None).unwrap();
        assert_eq!(a, b);
    }
}
