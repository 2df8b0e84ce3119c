//! Chromatic quasisymmetric functions of naturally labeled unit interval
//! orders, computed by direct coloring sums and by column-strict P-tableaux,
//! with basis expansions that tie back to the trace evaluations.

use num::rational::BigRational;
use num::{FromPrimitive, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::network::{straight_through_perm, Concatenation, Interval};
use crate::partition::{ordered_set_partitions, IntPartition};
use crate::perm::Permutation;
use crate::poset::Poset;
use crate::qpoly::QPoly;
use crate::tableau::{self, poset_tableaux, PosetCells, TabProperty};
use crate::transition::tables;

/// Symmetric function bases for the expansion of `X_{P,q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymBasis {
    M,
    E,
    S,
    P,
    F,
}

impl SymBasis {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "m" => Ok(SymBasis::M),
            "e" => Ok(SymBasis::E),
            "s" => Ok(SymBasis::S),
            "p" => Ok(SymBasis::P),
            "f" => Ok(SymBasis::F),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SymBasis::M => "m",
            SymBasis::E => "e",
            SymBasis::S => "s",
            SymBasis::P => "p",
            SymBasis::F => "f",
        }
    }
}

/// Coefficients of `X_{P,q}` on one basis, in canonical partition order.
///
/// For the power-sum basis the stored polynomial is the signed, `z_lambda`-
/// scaled coefficient `(-1)^(n-l(lambda)) z_lambda [p_lambda] X_{P,q}` (the
/// form whose nonnegativity is the Athanasiadis theorem); for every other
/// basis it is the plain coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct ChromaticExpansion {
    pub basis: SymBasis,
    pub coeffs: Vec<(Vec<usize>, QPoly)>,
}

impl ChromaticExpansion {
    pub fn coeff(&self, la: &IntPartition) -> Option<&QPoly> {
        self.coeffs
            .iter()
            .find(|(parts, _)| parts == la.parts())
            .map(|(_, q)| q)
    }
}

/// Precondition shared by the chromatic operations: a unit interval order
/// whose labels respect the altitude rule.
pub fn check_labeled_uio(p: &Poset) -> Result<(), Error> {
    if !p.is_unit_interval_order() {
        return Err(Error::LabelingViolation(
            "poset is not a unit interval order".into(),
        ));
    }
    if !p.is_naturally_labeled() || !p.respects_altitude() {
        return Err(Error::LabelingViolation(
            "labels do not respect the altitude rule".into(),
        ));
    }
    Ok(())
}

/// Edges of the incomparability graph, as sorted pairs.
pub fn incomparability_graph(p: &Poset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=p.n() {
        for b in a + 1..=p.n() {
            if p.incomparable(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// `sum q^{asc(kappa)}` over proper colorings in which color `i` is assigned
/// to a chain of size `sizes[i-1]`. No labeling precondition; this is the raw
/// monomial-coefficient extraction.
pub fn coloring_coefficient(p: &Poset, sizes: &[usize]) -> QPoly {
    let n = p.n();
    assert_eq!(sizes.iter().sum::<usize>(), n, "sizes must sum to n");
    let mut stats = Vec::new();
    'outer: for osp in ordered_set_partitions(n, sizes) {
        // each color class must be a chain
        let mut color = vec![0usize; n + 1];
        for (ci, block) in osp.blocks.iter().enumerate() {
            for i in 0..block.len() {
                for j in i + 1..block.len() {
                    if p.incomparable(block[i], block[j]) {
                        continue 'outer;
                    }
                }
            }
            for &x in block {
                color[x] = ci + 1;
            }
        }
        let mut asc = 0;
        for u in 1..=n {
            for v in u + 1..=n {
                if p.incomparable(u, v) && color[u] < color[v] {
                    asc += 1;
                }
            }
        }
        stats.push(asc);
    }
    tableau::generating_function(stats)
}

/// Coefficient of `m_lambda` in `X_{P,q}`: the coefficient of
/// `x_1^{lambda_r} x_2^{lambda_{r-1}} ... x_r^{lambda_1}`.
pub fn chromatic_coeff(p: &Poset, la: &IntPartition) -> Result<QPoly, Error> {
    check_labeled_uio(p)?;
    if la.n() != p.n() {
        return Err(Error::ShapeMismatch {
            shape_sum: la.n(),
            expected: p.n(),
        });
    }
    let sizes: Vec<usize> = la.parts().iter().rev().copied().collect();
    Ok(coloring_coefficient(p, &sizes))
}

/// The same coefficient by the tableau route: `sum q^{inv(U)}` over
/// column-strict P-tableaux of the transposed shape.
pub fn chromatic_coeff_tableaux(p: &Poset, la: &IntPartition) -> Result<QPoly, Error> {
    check_labeled_uio(p)?;
    if la.n() != p.n() {
        return Err(Error::ShapeMismatch {
            shape_sum: la.n(),
            expected: p.n(),
        });
    }
    let oracle = PosetCells(p);
    let tabs = poset_tableaux(p, &la.transpose())?;
    Ok(tableau::generating_function(
        tabs.iter()
            .filter(|t| tableau::has_property(&oracle, t, TabProperty::ColumnStrict))
            .map(|t| tableau::inv_tableau(&oracle, t)),
    ))
}

/// Stanley's `q = 1` coefficient: ordered set partitions of `P` into chains
/// of sizes `lambda_1, lambda_2, ...`.
pub fn stanley_chain_count(p: &Poset, la: &IntPartition) -> i64 {
    let mut count = 0i64;
    'outer: for osp in ordered_set_partitions(p.n(), la.parts()) {
        for block in &osp.blocks {
            for i in 0..block.len() {
                for j in i + 1..block.len() {
                    if p.incomparable(block[i], block[j]) {
                        continue 'outer;
                    }
                }
            }
        }
        count += 1;
    }
    count
}

/// True iff the coefficient extracted from the rearranged exponent pattern
/// agrees with the canonical one (symmetry of `X_{P,q}` in its variables).
/// Runs on any poset, reporting asymmetry rather than erroring.
pub fn symmetry_probe(p: &Poset, la: &IntPartition, exponents: &[usize]) -> bool {
    let mut sorted: Vec<usize> = exponents.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != la.parts() || la.n() != p.n() {
        return false;
    }
    let canonical: Vec<usize> = la.parts().iter().rev().copied().collect();
    coloring_coefficient(p, &canonical) == coloring_coefficient(p, exponents)
}

/// The 312-avoiding permutation whose zig-zag network realizes `P` as its
/// path poset: stars are the maximal antichains of size at least two, sorted
/// by decreasing lower endpoint.
pub fn zeta_permutation(p: &Poset) -> Result<Permutation, Error> {
    check_labeled_uio(p)?;
    let n = p.n();
    let mut stars: Vec<Interval> = Vec::new();
    for ac in p.maximal_antichains() {
        let lo = *ac.first().unwrap();
        let hi = *ac.last().unwrap();
        if ac.len() != hi - lo + 1 {
            return Err(Error::LabelingViolation(format!(
                "maximal antichain {ac:?} is not an interval"
            )));
        }
        if ac.len() >= 2 {
            stars.push(Interval { lo, hi });
        }
    }
    stars.sort_by(|a, b| b.lo.cmp(&a.lo));
    let concat = Concatenation::new(n, stars)
        .map_err(|e| Error::Internal(format!("antichain stars are not a concatenation: {e}")))?;
    Ok(straight_through_perm(&concat.augment()))
}

type RatPoly = Vec<BigRational>;

fn qpoly_to_rat(q: &QPoly, len: usize) -> RatPoly {
    (0..len)
        .map(|k| BigRational::from_i64(q.coeff(k)).unwrap())
        .collect()
}

fn rat_to_qpoly(r: &RatPoly) -> Result<QPoly, Error> {
    let mut coeffs = Vec::with_capacity(r.len());
    for c in r {
        if !c.is_integer() {
            return Err(Error::Internal(format!(
                "expansion coefficient {c} is not an integer polynomial"
            )));
        }
        let v = c.to_integer().to_i64().ok_or_else(|| {
            Error::Internal("expansion coefficient overflows i64".into())
        })?;
        coeffs.push(v);
    }
    Ok(QPoly::from_coeffs(coeffs))
}

fn rat_scale_sub(acc: &mut RatPoly, other: &RatPoly, scale: &BigRational) {
    for (a, o) in acc.iter_mut().zip(other.iter()) {
        *a -= o * scale;
    }
}

/// Expands `X_{P,q}` on the requested basis by converting the m-coefficients
/// through the classical transition matrices.
pub fn expansion(p: &Poset, basis: SymBasis) -> Result<ChromaticExpansion, Error> {
    check_labeled_uio(p)?;
    let n = p.n();
    let t = tables(n);
    let parts = t.partitions();
    let m = parts.len();
    let m_coeffs: Vec<QPoly> = parts
        .iter()
        .map(|la| chromatic_coeff(p, la))
        .collect::<Result<_, _>>()?;
    let deg = m_coeffs
        .iter()
        .filter_map(|c| c.degree())
        .max()
        .unwrap_or(0)
        + 1;

    let out: Vec<QPoly> = match basis {
        SymBasis::M => m_coeffs.clone(),
        SymBasis::S => schur_coeffs(&t, &m_coeffs)?,
        SymBasis::F => {
            // f-coefficient at la is sum_mu K[mu^tr][la] s_mu
            let s = schur_coeffs(&t, &m_coeffs)?;
            (0..m)
                .map(|la| {
                    let mut acc = QPoly::zero();
                    for (mu, sv) in s.iter().enumerate() {
                        let k = t.kostka(t.transpose_index(mu), la);
                        acc.add_assign_scaled(sv, k);
                    }
                    acc
                })
                .collect()
        }
        SymBasis::P => {
            // solve sum_la b[la] L[la][mu] = c[mu]; report the signed,
            // z-scaled coefficients
            let mut b: Vec<RatPoly> = vec![vec![BigRational::zero(); deg]; m];
            for mu in (0..m).rev() {
                let mut acc = qpoly_to_rat(&m_coeffs[mu], deg);
                for la in mu + 1..m {
                    let l = t.ell(la, mu);
                    if l != 0 {
                        let scale = BigRational::from_i64(l).unwrap();
                        let other = b[la].clone();
                        rat_scale_sub(&mut acc, &other, &scale);
                    }
                }
                let diag = BigRational::from_i64(t.ell(mu, mu)).unwrap();
                for a in acc.iter_mut() {
                    *a /= diag.clone();
                }
                b[mu] = acc;
            }
            (0..m)
                .map(|la| {
                    let ell_la = parts[la].len();
                    let sign = if (n - ell_la) % 2 == 0 { 1 } else { -1 };
                    let scale =
                        BigRational::from_i64(sign * t.z_of(la)).unwrap();
                    let scaled: RatPoly = b[la].iter().map(|c| c * scale.clone()).collect();
                    rat_to_qpoly(&scaled)
                })
                .collect::<Result<_, _>>()?
        }
        SymBasis::E => {
            // E[la][nu] = sum_mu K[mu^tr][la] K[mu][nu]; solve E^T d = c
            let mut e_mat = vec![vec![0i64; m]; m];
            for la in 0..m {
                for nu in 0..m {
                    let mut acc = 0;
                    for mu in 0..m {
                        acc += t.kostka(t.transpose_index(mu), la) * t.kostka(mu, nu);
                    }
                    e_mat[la][nu] = acc;
                }
            }
            let inv = crate::transition::invert_rational(&e_mat);
            // d = (E^T)^{-1} c = (E^{-1})^T c, i.e. d[la] = sum_mu inv[mu][la] c[mu]
            (0..m)
                .map(|la| {
                    let mut acc: RatPoly = vec![BigRational::zero(); deg];
                    for mu in 0..m {
                        let scale = inv[mu][la].clone();
                        if scale.is_zero() {
                            continue;
                        }
                        let other = qpoly_to_rat(&m_coeffs[mu], deg);
                        for (a, o) in acc.iter_mut().zip(other.iter()) {
                            *a += o * scale.clone();
                        }
                    }
                    rat_to_qpoly(&acc)
                })
                .collect::<Result<_, _>>()?
        }
    };
    Ok(ChromaticExpansion {
        basis,
        coeffs: parts
            .iter()
            .zip(out)
            .map(|(la, q)| (la.parts().to_vec(), q))
            .collect(),
    })
}

/// Solve `K^T a = c` by forward substitution over the unitriangular Kostka
/// matrix; `a[la]` is the coefficient of `s_la`.
fn schur_coeffs(
    t: &crate::transition::TransitionTables,
    m_coeffs: &[QPoly],
) -> Result<Vec<QPoly>, Error> {
    let m = m_coeffs.len();
    let mut a: Vec<QPoly> = vec![QPoly::zero(); m];
    for i in 0..m {
        // c[i] = sum_{j <= i} K[j][i] a[j], K[i][i] = 1
        let mut acc = m_coeffs[i].clone();
        for j in 0..i {
            let k = t.kostka(j, i);
            if k != 0 {
                acc.add_assign_scaled(&a[j], -k);
            }
        }
        a[i] = acc;
    }
    Ok(a)
}
