//! The five trace evaluators at modified Kazhdan-Lusztig basis elements,
//! every alternative formula the theory provides, the classical `q = 1`
//! oracle, and the vanishing predicates.

use serde::Serialize;

use crate::error::Error;
use crate::network::{network_of, ZigzagNetwork};
use crate::partition::{ordered_set_partitions, IntPartition};
use crate::perm::Permutation;
use crate::qpoly::{q_int, QPoly};
use crate::tableau::{
    self, enumerate, osp_tableau, TabProperty,
};
use crate::transition::{tables, TraceFamily};

/// The five interchangeable formulas for `psi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PsiMethod {
    RecordFree,
    RightAnchored,
    OFormula,
    Cylindrical,
    LeftAnchoredCylindrical,
}

impl PsiMethod {
    pub const ALL: [PsiMethod; 5] = [
        PsiMethod::RecordFree,
        PsiMethod::RightAnchored,
        PsiMethod::OFormula,
        PsiMethod::Cylindrical,
        PsiMethod::LeftAnchoredCylindrical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PsiMethod::RecordFree => "record-free",
            PsiMethod::RightAnchored => "right-anchored",
            PsiMethod::OFormula => "O-formula",
            PsiMethod::Cylindrical => "cylindrical",
            PsiMethod::LeftAnchoredCylindrical => "left-anchored-cylindrical",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        PsiMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

/// One trace evaluation with its consistency annotations.
#[derive(Clone, Debug, Serialize)]
pub struct EvalReport {
    pub family: TraceFamily,
    pub lambda: Vec<usize>,
    pub w: String,
    pub method: String,
    pub coeffs: Vec<i64>,
    pub display: String,
    pub symmetric: bool,
    pub unimodal: bool,
    /// Nonnegativity of the coefficients; recorded rather than asserted
    /// because for phi it is conjectural.
    pub nonnegative: bool,
    /// Tableau counts per power of `q`, present for the direct enumeration
    /// formulas where the coefficients literally count tableaux.
    pub witnesses: Option<Vec<i64>>,
}

fn check_partition(net_order: usize, la: &IntPartition) -> Result<(), Error> {
    if la.n() != net_order {
        return Err(Error::ShapeMismatch {
            shape_sum: la.n(),
            expected: net_order,
        });
    }
    Ok(())
}

/// `eta_q^lambda`: right inversions of the row concatenation, summed over
/// row-closed left row-strict tableaux of shape `lambda`.
pub fn eval_eta(net: &ZigzagNetwork, la: &IntPartition) -> Result<QPoly, Error> {
    check_partition(net.order(), la)?;
    let tabs = enumerate(
        net,
        la,
        &[TabProperty::RowClosed, TabProperty::LeftRowStrict],
        None,
    )?;
    Ok(tableau::generating_function(
        tabs.iter().map(|t| tableau::rinv_word(net, &t.concat_rows())),
    ))
}

/// `epsilon_q^lambda`: inversions over column-strict type-e tableaux of the
/// transposed shape.
pub fn eval_epsilon(net: &ZigzagNetwork, la: &IntPartition) -> Result<QPoly, Error> {
    check_partition(net.order(), la)?;
    let e = Permutation::identity(net.order());
    let tabs = enumerate(net, &la.transpose(), &[TabProperty::ColumnStrict], Some(&e))?;
    Ok(tableau::generating_function(
        tabs.iter().map(|t| tableau::inv_tableau(net, t)),
    ))
}

/// `chi_q^lambda`: inversions over standard type-e tableaux of shape `lambda`.
pub fn eval_chi(net: &ZigzagNetwork, la: &IntPartition) -> Result<QPoly, Error> {
    check_partition(net.order(), la)?;
    let e = Permutation::identity(net.order());
    let tabs = enumerate(net, la, &[TabProperty::Standard], Some(&e))?;
    Ok(tableau::generating_function(
        tabs.iter().map(|t| tableau::inv_tableau(net, t)),
    ))
}

fn q_int_product(la: &IntPartition) -> QPoly {
    let mut out = QPoly::one();
    for &p in la.parts() {
        out = &out * &q_int(p);
    }
    out
}

/// `psi_q^lambda` by any of its five formulas; all must agree.
pub fn eval_psi(net: &ZigzagNetwork, la: &IntPartition, method: PsiMethod) -> Result<QPoly, Error> {
    check_partition(net.order(), la)?;
    let e = Permutation::identity(net.order());
    match method {
        PsiMethod::RecordFree => {
            let tabs = enumerate(
                net,
                la,
                &[TabProperty::RecordFree, TabProperty::RowSemistrict],
                Some(&e),
            )?;
            Ok(tableau::generating_function(
                tabs.iter().map(|t| tableau::inv_word(net, &t.concat_rows())),
            ))
        }
        PsiMethod::RightAnchored => {
            let tabs = enumerate(
                net,
                la,
                &[TabProperty::RightAnchored, TabProperty::RowSemistrict],
                Some(&e),
            )?;
            let inner = tableau::generating_function(
                tabs.iter()
                    .map(|t| tableau::inv_word(net, &t.concat_reversed_rows())),
            );
            Ok(&q_int_product(la) * &inner)
        }
        PsiMethod::Cylindrical => {
            let tabs = enumerate(net, la, &[TabProperty::Cylindrical], None)?;
            Ok(tableau::generating_function(
                tabs.iter().map(|t| tableau::inv_word(net, &t.concat_rows())),
            ))
        }
        PsiMethod::LeftAnchoredCylindrical => {
            let tabs = enumerate(
                net,
                la,
                &[TabProperty::Cylindrical, TabProperty::LeftAnchored],
                None,
            )?;
            let inner = tableau::generating_function(
                tabs.iter().map(|t| tableau::inv_word(net, &t.concat_rows())),
            );
            Ok(&q_int_product(la) * &inner)
        }
        PsiMethod::OFormula => {
            let mut total = QPoly::zero();
            for osp in ordered_set_partitions(net.order(), la.parts()) {
                let mut term = QPoly::one();
                for block in &osp.blocks {
                    let o = if block.len() == 1 {
                        QPoly::one()
                    } else {
                        net.restrict(block)?.o_polynomial()
                    };
                    if o.is_zero() {
                        term = QPoly::zero();
                        break;
                    }
                    term = &term * &o;
                }
                if term.is_zero() {
                    continue;
                }
                let v = osp_tableau(net, &osp)?;
                let shift = tableau::inv_word(net, &v.concat_rows());
                total = &total + &(&term * &QPoly::monomial(1, shift));
            }
            Ok(&q_int_product(la) * &total)
        }
    }
}

/// Haiman's product formula for `psi_q^{(n)}` at 312-avoiding `w`:
/// `[n]_q [f(1)-1]_q ... [f(n-1)-(n-1)]_q` with `f(j) = max(w_1..w_j)`.
pub fn haiman_psi_n(w: &Permutation) -> Result<QPoly, Error> {
    let p312 = Permutation::from_one_line(vec![3, 1, 2]).unwrap();
    if !w.avoids(&p312) {
        return Err(Error::PatternViolation {
            pattern: "312".into(),
            word: w.to_string(),
        });
    }
    let n = w.n();
    let mut out = q_int(n);
    let mut f = 0;
    for j in 1..n {
        f = f.max(w.apply(j));
        out = &out * &q_int(f - j);
    }
    Ok(out)
}

/// `phi_q^lambda` through the inverse Kostka expansion over `chi_q`.
pub fn eval_phi(net: &ZigzagNetwork, la: &IntPartition) -> Result<QPoly, Error> {
    check_partition(net.order(), la)?;
    let t = tables(net.order());
    let li = t.index_of(la);
    let mut out = QPoly::zero();
    for (mi, mu) in t.partitions().iter().enumerate() {
        let c = t.kostka_inv(li, mi);
        if c == 0 {
            continue;
        }
        out.add_assign_scaled(&eval_chi(net, mu)?, c);
    }
    Ok(out)
}

/// The direct column-strict formula for `phi_q^lambda` when `lambda_1 <= 2`:
/// the generating function when every strictly majorized shape carries no
/// column-strict type-e tableau, zero otherwise. `None` when `lambda_1 > 2`.
pub fn eval_phi_direct_small(
    net: &ZigzagNetwork,
    la: &IntPartition,
) -> Result<Option<QPoly>, Error> {
    check_partition(net.order(), la)?;
    if la.first_part() > 2 {
        return Ok(None);
    }
    let e = Permutation::identity(net.order());
    for mu in IntPartition::all(net.order()) {
        if mu == *la || !la.majorizes(&mu)? {
            continue;
        }
        if !enumerate(net, &mu, &[TabProperty::ColumnStrict], Some(&e))?.is_empty() {
            return Ok(Some(QPoly::zero()));
        }
    }
    let tabs = enumerate(net, la, &[TabProperty::ColumnStrict], Some(&e))?;
    Ok(Some(tableau::generating_function(
        tabs.iter().map(|t| tableau::inv_tableau(net, t)),
    )))
}

/// `eta_q^lambda = sum_mu K[mu][lambda] chi_q^mu`, for cross-checks.
pub fn eta_via_kostka(net: &ZigzagNetwork, la: &IntPartition) -> Result<QPoly, Error> {
    let t = tables(net.order());
    let li = t.index_of(la);
    let mut out = QPoly::zero();
    for (mi, mu) in t.partitions().iter().enumerate() {
        let c = t.kostka(mi, li);
        if c != 0 {
            out.add_assign_scaled(&eval_chi(net, mu)?, c);
        }
    }
    Ok(out)
}

/// `epsilon_q^lambda = sum_mu K[mu^tr][lambda] chi_q^mu`, for cross-checks.
pub fn epsilon_via_kostka(net: &ZigzagNetwork, la: &IntPartition) -> Result<QPoly, Error> {
    let t = tables(net.order());
    let li = t.index_of(la);
    let mut out = QPoly::zero();
    for (mi, mu) in t.partitions().iter().enumerate() {
        let c = t.kostka(t.transpose_index(mi), li);
        if c != 0 {
            out.add_assign_scaled(&eval_chi(net, mu)?, c);
        }
    }
    Ok(out)
}

/// Classical value `theta^lambda(C'_w(1))`: the Bruhat-ideal character sum,
/// cross-checked against the Littlewood-Merris-Watkins minor/permanent sums
/// (epsilon, eta) and the power-sum formula (psi) on the path matrix.
pub fn classical_oracle(
    w: &Permutation,
    family: TraceFamily,
    la: &IntPartition,
) -> Result<i64, Error> {
    w.check_smooth()?;
    check_partition(w.n(), la)?;
    let t = tables(w.n());
    let ideal = w.bruhat_ideal();
    let by_characters: i64 = ideal.iter().map(|v| t.class_value(family, la, v)).sum();

    let net = network_of(w)?;
    let b = net.path_matrix();
    let second: Option<i64> = match family {
        TraceFamily::Epsilon => Some(lmw_sum(&b, la, det_i64)),
        TraceFamily::Eta => Some(lmw_sum(&b, la, permanent_i64)),
        TraceFamily::Psi => {
            let count = ideal.iter().filter(|v| v.cycle_type() == *la).count() as i64;
            Some(la.z() * count)
        }
        TraceFamily::Chi | TraceFamily::Phi => None,
    };
    if let Some(s) = second {
        if s != by_characters {
            return Err(Error::Internal(format!(
                "classical oracle mismatch for {} {la} at {w}: {by_characters} vs {s}",
                family.name()
            )));
        }
    }
    Ok(by_characters)
}

/// Littlewood-Merris-Watkins sum: over ordered set partitions of type
/// `lambda`, the product of `f` applied to the principal submatrices.
fn lmw_sum(b: &[Vec<i64>], la: &IntPartition, f: fn(&[Vec<i64>]) -> i64) -> i64 {
    ordered_set_partitions(b.len(), la.parts())
        .iter()
        .map(|osp| {
            osp.blocks
                .iter()
                .map(|block| f(&submatrix(b, block, block)))
                .product::<i64>()
        })
        .sum()
}

fn submatrix(b: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| b[i - 1][j - 1]).collect())
        .collect()
}

/// Exact integer determinant by Laplace expansion (matrices here are tiny).
pub fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for (j, &top) in m[0].iter().enumerate() {
        if top == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * top * det_i64(&minor);
    }
    total
}

/// Exact integer permanent by expansion.
pub fn permanent_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for (j, &top) in m[0].iter().enumerate() {
        if top == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        total += top * permanent_i64(&minor);
    }
    total
}

/// True when a vanishing theorem forces the evaluation to zero. For psi the
/// condition is exact (an iff); for the others it is sufficient.
pub fn vanishing_predicate(
    w: &Permutation,
    family: TraceFamily,
    la: &IntPartition,
) -> Result<bool, Error> {
    w.check_smooth()?;
    check_partition(w.n(), la)?;
    let dec = w.longest_decreasing_run();
    Ok(match family {
        TraceFamily::Eta => false,
        TraceFamily::Epsilon => dec > la.len(),
        TraceFamily::Chi => dec > la.first_part(),
        TraceFamily::Psi => {
            let sizes = network_of(w)?.component_sizes();
            !la.refines(&sizes)?
        }
        TraceFamily::Phi => {
            let sizes = network_of(w)?.component_sizes();
            dec > la.first_part() || !la.refines(&sizes)?
        }
    })
}

/// Support of the modified Kazhdan-Lusztig basis element in the natural
/// basis: the Bruhat ideal below `w`, each with multiplicity one.
pub fn kl_expansion(w: &Permutation) -> Result<Vec<Permutation>, Error> {
    w.check_smooth()?;
    Ok(w.bruhat_ideal())
}

/// Palindromicity about `ell/2` and single-peakedness of the coefficients.
pub fn check_symmetry_unimodality(poly: &QPoly, ell: usize) -> (bool, bool) {
    (poly.is_symmetric_about(ell), poly.is_unimodal_to(ell))
}

/// Evaluates one trace with the default method for its family.
pub fn trace_eval(
    w: &Permutation,
    family: TraceFamily,
    la: &IntPartition,
) -> Result<QPoly, Error> {
    evaluate(w, family, la, None).map(|r| QPoly::from_coeffs(r.coeffs))
}

/// Full evaluation entry point used by the CLI.
pub fn evaluate(
    w: &Permutation,
    family: TraceFamily,
    la: &IntPartition,
    method: Option<PsiMethod>,
) -> Result<EvalReport, Error> {
    w.check_smooth()?;
    check_partition(w.n(), la)?;
    if family != TraceFamily::Psi && method.is_some() {
        return Err(Error::UnknownMethod(format!(
            "method selection only applies to psi, not {}",
            family.name()
        )));
    }
    let net = network_of(w)?;
    let (value, method_name, witnesses): (QPoly, String, Option<Vec<i64>>) = match family {
        TraceFamily::Eta => {
            let v = eval_eta(&net, la)?;
            let wit = v.coeffs().to_vec();
            (v, "row-closed-left-row-strict".into(), Some(wit))
        }
        TraceFamily::Epsilon => {
            let v = eval_epsilon(&net, la)?;
            let wit = v.coeffs().to_vec();
            (v, "column-strict".into(), Some(wit))
        }
        TraceFamily::Chi => {
            let v = eval_chi(&net, la)?;
            let wit = v.coeffs().to_vec();
            (v, "standard".into(), Some(wit))
        }
        TraceFamily::Psi => {
            let m = method.unwrap_or(PsiMethod::OFormula);
            let v = eval_psi(&net, la, m)?;
            let wit = matches!(m, PsiMethod::RecordFree | PsiMethod::Cylindrical)
                .then(|| v.coeffs().to_vec());
            (v, m.name().into(), wit)
        }
        TraceFamily::Phi => (eval_phi(&net, la)?, "inverse-kostka".into(), None),
    };
    let ell = w.length();
    let (symmetric, unimodal) = check_symmetry_unimodality(&value, ell);
    Ok(EvalReport {
        family,
        lambda: la.parts().to_vec(),
        w: w.to_string(),
        method: method_name,
        coeffs: value.coeffs().to_vec(),
        display: value.display_string(),
        symmetric,
        unimodal,
        nonnegative: value.has_nonnegative_coeffs(),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn lam(parts: &[usize]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    fn net(w: &str) -> ZigzagNetwork {
        network_of(&p(w)).unwrap()
    }

    #[test]
    fn eta_golden() {
        let f = net("3421");
        assert_eq!(eval_eta(&f, &lam(&[3, 1])).unwrap().coeffs(), &[1, 3, 6, 6, 3, 1]);
        let e1 = net("e1");
        assert_eq!(eval_eta(&e1, &lam(&[1])).unwrap(), QPoly::one());
    }

    #[test]
    fn epsilon_golden() {
        let f = net("3421");
        assert_eq!(eval_epsilon(&f, &lam(&[2, 1, 1])).unwrap().coeffs(), &[0, 0, 1, 1]);
        assert_eq!(
            eval_epsilon(&f, &lam(&[1, 1, 1, 1])).unwrap().coeffs(),
            &[1, 3, 8, 8, 3, 1]
        );
        assert!(eval_epsilon(&f, &lam(&[2, 2])).unwrap().is_zero());
        assert!(eval_epsilon(&f, &lam(&[3, 1])).unwrap().is_zero());
        assert!(eval_epsilon(&f, &lam(&[4])).unwrap().is_zero());
    }

    #[test]
    fn chi_golden() {
        let f = net("3421");
        assert_eq!(eval_chi(&f, &lam(&[3, 1])).unwrap().coeffs(), &[0, 0, 1, 1]);
        assert_eq!(
            eval_chi(&f, &lam(&[4])).unwrap().coeffs(),
            &[1, 3, 5, 5, 3, 1]
        );
        assert!(eval_chi(&f, &lam(&[2, 2])).unwrap().is_zero());
        assert!(eval_chi(&f, &lam(&[2, 1, 1])).unwrap().is_zero());
        assert!(eval_chi(&f, &lam(&[1, 1, 1, 1])).unwrap().is_zero());
    }

    #[test]
    fn psi_golden_all_methods() {
        let f = net("3421");
        let expect = [1i64, 3, 5, 5, 3, 1];
        for m in PsiMethod::ALL {
            assert_eq!(
                eval_psi(&f, &lam(&[3, 1]), m).unwrap().coeffs(),
                &expect,
                "method {}",
                m.name()
            );
        }
        // the right-anchored inner sum before the [3]_q [1]_q prefactor
        let tabs = enumerate(
            &f,
            &lam(&[3, 1]),
            &[TabProperty::RightAnchored, TabProperty::RowSemistrict],
            Some(&Permutation::identity(4)),
        )
        .unwrap();
        let inner = tableau::generating_function(
            tabs.iter()
                .map(|t| tableau::inv_word(&f, &t.concat_reversed_rows())),
        );
        assert_eq!(inner.coeffs(), &[1, 2, 2, 1]);
    }

    #[test]
    fn haiman_examples() {
        // [4]_q [2]_q [2]_q [1]_q
        let h = haiman_psi_n(&p("3421")).unwrap();
        assert_eq!(h.coeffs(), &[1, 3, 4, 4, 3, 1]);
        let f = net("3421");
        assert_eq!(eval_psi(&f, &lam(&[4]), PsiMethod::Cylindrical).unwrap(), h);
        // f(k) = k for a proper prefix forces zero
        assert!(haiman_psi_n(&p("2134")).unwrap().is_zero());
        // the reversal gives [n]_q!
        let r = haiman_psi_n(&p("4321")).unwrap();
        assert_eq!(r, crate::qpoly::q_factorial(4).div_exact(&QPoly::one()).unwrap());
        assert!(haiman_psi_n(&p("3142")).is_err());
    }

    #[test]
    fn phi_golden() {
        let f = net("3142");
        assert_eq!(eval_phi(&f, &lam(&[2, 2])).unwrap().coeffs(), &[0, 1, 1]);
        // phi^{1^n} = epsilon^{(n)}
        for w in ["3421", "3142", "2143", "4321"] {
            let f = net(w);
            assert_eq!(
                eval_phi(&f, &lam(&[1, 1, 1, 1])).unwrap(),
                eval_epsilon(&f, &lam(&[4])).unwrap(),
                "at {w}"
            );
        }
        // decreasing run longer than lambda_1 forces zero
        let f = net("4321");
        assert!(eval_phi(&f, &lam(&[2, 2])).unwrap().is_zero());
    }

    #[test]
    fn phi_direct_small_agrees() {
        for w in ["3421", "3142", "2143", "4321", "1234", "21354"] {
            let f = net(w);
            for la in IntPartition::all(f.order()) {
                if let Some(direct) = eval_phi_direct_small(&f, &la).unwrap() {
                    assert_eq!(direct, eval_phi(&f, &la).unwrap(), "at {w} {la}");
                }
            }
        }
    }

    #[test]
    fn classical_oracle_golden() {
        assert_eq!(
            classical_oracle(&p("3421"), TraceFamily::Epsilon, &lam(&[1, 1, 1, 1])).unwrap(),
            24
        );
        assert_eq!(
            classical_oracle(&p("3421"), TraceFamily::Eta, &lam(&[3, 1])).unwrap(),
            20
        );
        // eta^{(n)} counts the Bruhat ideal
        for w in ["3421", "4321", "1234", "3142"] {
            assert_eq!(
                classical_oracle(&p(w), TraceFamily::Eta, &lam(&[4])).unwrap(),
                p(w).bruhat_ideal().len() as i64
            );
        }
    }

    #[test]
    fn q1_matches_oracle_sample() {
        for w in ["3421", "3142", "2143", "4321", "1234"] {
            let perm = p(w);
            let f = net(w);
            for la in IntPartition::all(4) {
                let pairs: [(TraceFamily, QPoly); 5] = [
                    (TraceFamily::Eta, eval_eta(&f, &la).unwrap()),
                    (TraceFamily::Epsilon, eval_epsilon(&f, &la).unwrap()),
                    (TraceFamily::Chi, eval_chi(&f, &la).unwrap()),
                    (TraceFamily::Psi, eval_psi(&f, &la, PsiMethod::OFormula).unwrap()),
                    (TraceFamily::Phi, eval_phi(&f, &la).unwrap()),
                ];
                for (fam, poly) in pairs {
                    assert_eq!(
                        poly.eval_at_one(),
                        classical_oracle(&perm, fam, &la).unwrap(),
                        "family {} at {w} {la}",
                        fam.name()
                    );
                }
            }
        }
    }

    #[test]
    fn vanishing_examples() {
        assert!(vanishing_predicate(&p("3421"), TraceFamily::Epsilon, &lam(&[2, 2])).unwrap());
        assert!(!vanishing_predicate(&p("3421"), TraceFamily::Psi, &lam(&[3, 1])).unwrap());
        // (4) does not refine the component sizes (2,2) of F_2143
        assert!(vanishing_predicate(&p("2143"), TraceFamily::Psi, &lam(&[4])).unwrap());
    }

    #[test]
    fn kl_expansion_examples() {
        assert_eq!(kl_expansion(&p("e3")).unwrap(), vec![Permutation::identity(3)]);
        let exp = kl_expansion(&p("3421")).unwrap();
        assert_eq!(exp.len(), 18);
        for v in &exp {
            assert!(v.bruhat_leq(&p("3421")).unwrap());
        }
        assert!(kl_expansion(&p("4231")).is_err());
    }

    #[test]
    fn symmetry_unimodality_examples() {
        let eta = QPoly::from_coeffs(vec![1, 3, 6, 6, 3, 1]);
        assert_eq!(check_symmetry_unimodality(&eta, 5), (true, true));
        let eps = QPoly::from_coeffs(vec![0, 0, 1, 1]);
        assert_eq!(check_symmetry_unimodality(&eps, 5), (true, true));
        let dip = QPoly::from_coeffs(vec![1, 0, 0, 1]);
        assert_eq!(check_symmetry_unimodality(&dip, 3), (true, false));
    }

    #[test]
    fn report_fields() {
        let r = evaluate(&p("3421"), TraceFamily::Eta, &lam(&[3, 1]), None).unwrap();
        assert_eq!(r.coeffs, vec![1, 3, 6, 6, 3, 1]);
        assert!(r.symmetric && r.unimodal && r.nonnegative);
        assert_eq!(r.witnesses, Some(vec![1, 3, 6, 6, 3, 1]));
        assert_eq!(r.display, "1 + 3q + 6q^2 + 6q^3 + 3q^4 + q^5");
        assert!(evaluate(&p("3412"), TraceFamily::Eta, &lam(&[3, 1]), None).is_err());
        assert!(evaluate(
            &p("3421"),
            TraceFamily::Eta,
            &lam(&[3, 1]),
            Some(PsiMethod::OFormula)
        )
        .is_err());
    }

    #[test]
    fn conjugation_invariance_sample() {
        for w in ["3421", "3142", "23154"] {
            let perm = p(w);
            let conj = perm.conjugate_by_longest();
            let f1 = network_of(&perm).unwrap();
            let f2 = network_of(&conj).unwrap();
            for la in IntPartition::all(perm.n()) {
                assert_eq!(
                    eval_eta(&f1, &la).unwrap(),
                    eval_eta(&f2, &la).unwrap(),
                    "eta differs at {w} / {conj} for {la}"
                );
            }
        }
    }
}
