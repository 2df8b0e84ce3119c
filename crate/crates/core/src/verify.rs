//! Named verification suites: each runs a family of identities at a given
//! order bound and reports pass/fail with minimal counterexamples.

use std::collections::HashMap;

use serde::Serialize;

use crate::chromatic::{
    chromatic_coeff, chromatic_coeff_tableaux, expansion, stanley_chain_count, zeta_permutation,
    SymBasis,
};
use crate::error::Error;
use crate::network::dag::PlanarDag;
use crate::network::{canonical_312_rep, enumerate_networks, network_of, Interval, StarSequence};
use crate::partition::IntPartition;
use crate::perm::Permutation;
use crate::qpoly::{q_int, QPoly};
use crate::tableau::{self, enumerate, TabProperty};
use crate::traces::{
    classical_oracle, det_i64, eval_chi, eval_epsilon, eval_eta, eval_phi, eval_psi, haiman_psi_n,
    vanishing_predicate, PsiMethod,
};
use crate::transition::TraceFamily;

/// The suites the CLI exposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PsiAgreement,
    Oracle,
    ChromaticBridge,
    Symmetry,
    Lindstrom,
    BijectionRoundtrip,
    OPolynomial,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::PsiAgreement,
        Suite::Oracle,
        Suite::ChromaticBridge,
        Suite::Symmetry,
        Suite::Lindstrom,
        Suite::BijectionRoundtrip,
        Suite::OPolynomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PsiAgreement => "psi-agreement",
            Suite::Oracle => "oracle",
            Suite::ChromaticBridge => "chromatic-bridge",
            Suite::Symmetry => "symmetry",
            Suite::Lindstrom => "lindstrom",
            Suite::BijectionRoundtrip => "bijection-roundtrip",
            Suite::OPolynomial => "o-polynomial",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|su| su.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_order: usize,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Observations that are reported but never asserted (conjectural
    /// unimodality).
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, max_order: usize) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            max_order,
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 16 {
            self.failures.push(describe());
        }
    }
}

/// Runs one suite for all orders `1..=max_order` (suites clamp internally
/// where the acceptance bounds say so).
pub fn run_suite(suite: Suite, max_order: usize) -> Result<SuiteReport, Error> {
    match suite {
        Suite::PsiAgreement => psi_agreement(max_order),
        Suite::Oracle => oracle(max_order),
        Suite::ChromaticBridge => chromatic_bridge(max_order),
        Suite::Symmetry => symmetry(max_order),
        Suite::Lindstrom => lindstrom(max_order),
        Suite::BijectionRoundtrip => bijection_roundtrip(max_order),
        Suite::OPolynomial => o_polynomial(max_order),
    }
}

fn psi_agreement(max_order: usize) -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new(Suite::PsiAgreement, max_order);
    let p312 = Permutation::parse("312").unwrap();
    for n in 1..=max_order {
        for w in Permutation::all_smooth(n) {
            let net = network_of(&w)?;
            for la in IntPartition::all(n) {
                let base = eval_psi(&net, &la, PsiMethod::RecordFree)?;
                for m in PsiMethod::ALL {
                    let v = eval_psi(&net, &la, m)?;
                    rep.check(v == base, || {
                        format!("psi methods disagree at w={w} lambda={la}: {base} vs {v} ({})", m.name())
                    });
                }
            }
            if w.avoids(&p312) {
                let h = haiman_psi_n(&w)?;
                let direct = eval_psi(&net, &IntPartition::single_row(n), PsiMethod::OFormula)?;
                rep.check(h == direct, || {
                    format!("haiman product disagrees at w={w}: {h} vs {direct}")
                });
            }
        }
    }
    Ok(rep)
}

fn oracle(max_order: usize) -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new(Suite::Oracle, max_order);
    for n in 1..=max_order {
        // exhaustive through order 5, deterministic sample beyond
        let mut perms = Permutation::all_smooth(n);
        if n >= 6 {
            let stride = (perms.len() / 24).max(1);
            perms = perms.into_iter().step_by(stride).collect();
        }
        for w in perms {
            let net = network_of(&w)?;
            for la in IntPartition::all(n) {
                let values = [
                    (TraceFamily::Eta, eval_eta(&net, &la)?),
                    (TraceFamily::Epsilon, eval_epsilon(&net, &la)?),
                    (TraceFamily::Chi, eval_chi(&net, &la)?),
                    (TraceFamily::Psi, eval_psi(&net, &la, PsiMethod::OFormula)?),
                    (TraceFamily::Phi, eval_phi(&net, &la)?),
                ];
                for (fam, poly) in values {
                    let classical = classical_oracle(&w, fam, &la)?;
                    rep.check(poly.eval_at_one() == classical, || {
                        format!(
                            "q=1 mismatch for {} at w={w} lambda={la}: {} vs {classical}",
                            fam.name(),
                            poly.eval_at_one()
                        )
                    });
                }
            }
        }
    }
    Ok(rep)
}

fn chromatic_bridge(max_order: usize) -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new(Suite::ChromaticBridge, max_order);
    let p312 = Permutation::parse("312").unwrap();
    for n in 1..=max_order {
        for v in Permutation::all_smooth(n) {
            if !v.avoids(&p312) {
                continue;
            }
            // each unit interval order appears exactly once this way
            let net = network_of(&v)?;
            let poset = net.path_poset();
            rep.check(poset.is_unit_interval_order(), || {
                format!("path poset of {v} is not a unit interval order")
            });
            rep.check(zeta_permutation(&poset)? == v, || {
                format!("zeta round trip failed at {v}")
            });
            for la in IntPartition::all(n) {
                let coeff = chromatic_coeff(&poset, &la)?;
                let eps = eval_epsilon(&net, &la)?;
                rep.check(coeff == eps, || {
                    format!("bridge mismatch at v={v} lambda={la}: X coeff {coeff} vs epsilon {eps}")
                });
                let tab = chromatic_coeff_tableaux(&poset, &la)?;
                rep.check(coeff == tab, || {
                    format!("coloring vs tableau mismatch at v={v} lambda={la}")
                });
                rep.check(coeff.eval_at_one() == stanley_chain_count(&poset, &la), || {
                    format!("q=1 chain count mismatch at v={v} lambda={la}")
                });
            }
            let s = expansion(&poset, SymBasis::S)?;
            let f = expansion(&poset, SymBasis::F)?;
            let pp = expansion(&poset, SymBasis::P)?;
            let ee = expansion(&poset, SymBasis::E)?;
            for la in IntPartition::all(n) {
                let schur = s.coeff(&la).unwrap();
                let chi = eval_chi(&net, &la.transpose())?;
                rep.check(schur == &chi, || {
                    format!("s-coefficient mismatch at v={v} lambda={la}")
                });
                rep.check(schur.has_nonnegative_coeffs(), || {
                    format!("schur coefficient negative at v={v} lambda={la}")
                });
                let forg = f.coeff(&la).unwrap();
                let eta = eval_eta(&net, &la)?;
                rep.check(forg == &eta, || {
                    format!("f-coefficient mismatch at v={v} lambda={la}")
                });
                let power = pp.coeff(&la).unwrap();
                let psi = eval_psi(&net, &la, PsiMethod::OFormula)?;
                rep.check(power == &psi, || {
                    format!("p-coefficient mismatch at v={v} lambda={la}")
                });
                rep.check(power.has_nonnegative_coeffs(), || {
                    format!("signed p-coefficient negative at v={v} lambda={la}")
                });
                let elem = ee.coeff(&la).unwrap();
                let phi = eval_phi(&net, &la)?;
                rep.check(elem == &phi, || {
                    format!("e-coefficient mismatch at v={v} lambda={la}")
                });
            }
        }
    }
    Ok(rep)
}

/// Per-permutation table of all evaluations, reused across the symmetry
/// checks.
fn eval_table(
    net: &crate::network::ZigzagNetwork,
    parts: &[IntPartition],
) -> Result<Vec<Vec<QPoly>>, Error> {
    let mut out = Vec::with_capacity(5);
    for fam in TraceFamily::ALL {
        let mut row = Vec::with_capacity(parts.len());
        for la in parts {
            row.push(match fam {
                TraceFamily::Eta => eval_eta(net, la)?,
                TraceFamily::Epsilon => eval_epsilon(net, la)?,
                TraceFamily::Chi => eval_chi(net, la)?,
                TraceFamily::Psi => eval_psi(net, la, PsiMethod::OFormula)?,
                TraceFamily::Phi => eval_phi(net, la)?,
            });
        }
        out.push(row);
    }
    Ok(out)
}

fn symmetry(max_order: usize) -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new(Suite::Symmetry, max_order);
    for n in 1..=max_order {
        let parts = IntPartition::all(n);
        // exhaustive through order 5, deterministic sample at 6 and beyond
        let mut perms = Permutation::all_smooth(n);
        if n >= 6 {
            let stride = (perms.len() / 40).max(1);
            perms = perms.into_iter().step_by(stride).collect();
        }
        let mut tables: HashMap<Permutation, Vec<Vec<QPoly>>> = HashMap::new();
        for w in &perms {
            let net = network_of(w)?;
            tables.insert(w.clone(), eval_table(&net, &parts)?);
        }
        for w in &perms {
            let ell = w.length();
            let table = &tables[w];
            for (fi, fam) in TraceFamily::ALL.iter().enumerate() {
                for (li, la) in parts.iter().enumerate() {
                    let poly = &table[fi][li];
                    rep.check(poly.is_symmetric_about(ell), || {
                        format!("{} at w={w} lambda={la} is not palindromic: {poly}", fam.name())
                    });
                    match fam {
                        TraceFamily::Eta | TraceFamily::Epsilon | TraceFamily::Chi => {
                            rep.check(poly.is_unimodal_to(ell), || {
                                format!("{} at w={w} lambda={la} is not unimodal: {poly}", fam.name())
                            });
                        }
                        TraceFamily::Psi | TraceFamily::Phi => {
                            // conjectural: recorded, never asserted
                            if !poly.is_unimodal_to(ell) {
                                rep.notes.push(format!(
                                    "unimodality observation fails for {} at w={w} lambda={la}: {poly}",
                                    fam.name()
                                ));
                            }
                        }
                    }
                    // vanishing predicates force zeros; for psi exactly
                    let pred = vanishing_predicate(w, *fam, la)?;
                    if pred {
                        rep.check(poly.is_zero(), || {
                            format!(
                                "vanishing predicate true but {} at w={w} lambda={la} is {poly}",
                                fam.name()
                            )
                        });
                    }
                    if *fam == TraceFamily::Psi {
                        rep.check(pred == poly.is_zero(), || {
                            format!("psi vanishing is not exact at w={w} lambda={la}")
                        });
                    }
                    // sharper vanishing from the insertion shape
                    let sh = w.rsk_shape();
                    if *fam == TraceFamily::Epsilon && !poly.is_zero() {
                        rep.check(sh.majorizes(la)?, || {
                            format!("epsilon nonzero above sh(w) at w={w} lambda={la}")
                        });
                    }
                    if *fam == TraceFamily::Chi && !poly.is_zero() {
                        rep.check(la.majorizes(&sh.transpose())?, || {
                            format!("chi nonzero below sh(w)^tr at w={w} lambda={la}")
                        });
                    }
                }
            }
            // conjugation invariance
            let conj = w.conjugate_by_longest();
            if let Some(other) = tables.get(&conj) {
                rep.check(table == other, || {
                    format!("conjugation by w0 changes evaluations at w={w}")
                });
            }
            // poset equivalence invariance
            let rep312 = canonical_312_rep(w)?;
            if let Some(other) = tables.get(&rep312) {
                rep.check(table == other, || {
                    format!("equivalent permutations {w} ~ {rep312} evaluate differently")
                });
            }
            // basis consistency through the Kostka matrix
            for (li, la) in parts.iter().enumerate() {
                let net = network_of(w)?;
                let eta = crate::traces::eta_via_kostka(&net, la)?;
                rep.check(eta == table[0][li], || {
                    format!("eta Kostka recombination fails at w={w} lambda={la}")
                });
                let eps = crate::traces::epsilon_via_kostka(&net, la)?;
                rep.check(eps == table[1][li], || {
                    format!("epsilon Kostka recombination fails at w={w} lambda={la}")
                });
            }
        }
    }
    Ok(rep)
}

fn lindstrom(max_order: usize) -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new(Suite::Lindstrom, max_order);
    let cap = max_order.min(5);
    for n in 2..=cap {
        let mut intervals = Vec::new();
        for lo in 1..n {
            for hi in lo + 1..=n {
                intervals.push(Interval { lo, hi });
            }
        }
        let mut sequences: Vec<Vec<Interval>> = vec![vec![]];
        for len in 1..=3usize {
            let mut next = Vec::new();
            fn extend(
                intervals: &[Interval],
                cur: &mut Vec<Interval>,
                len: usize,
                out: &mut Vec<Vec<Interval>>,
            ) {
                if cur.len() == len {
                    out.push(cur.clone());
                    return;
                }
                for &iv in intervals {
                    cur.push(iv);
                    extend(intervals, cur, len, out);
                    cur.pop();
                }
            }
            extend(&intervals, &mut Vec::new(), len, &mut next);
            sequences.extend(next);
        }
        let subsets: Vec<Vec<usize>> = all_subsets(n);
        for stars in sequences {
            let dag = PlanarDag::from_stars(&StarSequence {
                order: n,
                stars,
            });
            let b = dag.path_matrix();
            for is in &subsets {
                for js in &subsets {
                    if is.len() != js.len() || is.is_empty() {
                        continue;
                    }
                    let minor: Vec<Vec<i64>> = is
                        .iter()
                        .map(|&i| js.iter().map(|&j| b[i - 1][j - 1]).collect())
                        .collect();
                    let det = det_i64(&minor);
                    let fams = dag.nonintersecting_families(is, js);
                    rep.check(det == fams, || {
                        format!("Lindstrom mismatch: det {det} vs {fams} families at I={is:?} J={js:?}")
                    });
                }
            }
        }
    }
    Ok(rep)
}

fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        out.push((1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect());
    }
    out
}

fn bijection_roundtrip(max_order: usize) -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new(Suite::BijectionRoundtrip, max_order);
    for n in 1..=max_order {
        for (w, net) in enumerate_networks(n, false, max_order.max(crate::DEFAULT_MAX_ORDER))? {
            rep.check(net.w() == &w, || format!("w_of(network_of({w})) differs"));
            // both w_of routes agree (the covering route enumerates S_n, so
            // keep it to small orders)
            if n <= 6 {
                let via_covers = net.w_from_covering_families()?;
                rep.check(via_covers == w, || {
                    format!("covering-family route gives {via_covers} for {w}")
                });
                let mut types: Vec<Permutation> = net
                    .covering_families()
                    .iter()
                    .map(|f| f.family_type())
                    .collect();
                types.sort();
                rep.check(types == w.bruhat_ideal(), || {
                    format!("covering types differ from the Bruhat ideal at {w}")
                });
            }
            // path existence matches the interval criteria
            for i in 1..=n {
                for j in 1..=n {
                    rep.check(
                        net.unique_path(i, j).is_some() == net.path_exists_by_intervals(i, j),
                        || format!("path existence mismatch at w={w} ({i},{j})"),
                    );
                }
            }
        }
    }
    Ok(rep)
}

fn o_polynomial(max_order: usize) -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new(Suite::OPolynomial, max_order);
    for n in 1..=max_order {
        for w in Permutation::all_smooth(n) {
            let net = network_of(&w)?;
            let o = net.o_polynomial();
            rep.check(o.has_nonnegative_coeffs(), || {
                format!("O(F_{w}) has a negative coefficient: {o}")
            });
            let e = Permutation::identity(n);
            let row = IntPartition::single_row(n);
            // right-anchored row-semistrict one-row tableaux generate O(F)
            let z = enumerate(
                &net,
                &row,
                &[TabProperty::RightAnchored, TabProperty::RowSemistrict],
                Some(&e),
            )?;
            let ranch = tableau::generating_function(
                z.iter()
                    .map(|t| tableau::inv_word(&net, &t.concat_reversed_rows())),
            );
            rep.check(ranch == o, || {
                format!("right-anchored generating function differs from O at w={w}: {ranch} vs {o}")
            });
            // cylindrical one-row tableaux generate [m]_q O(F)
            let cyl = enumerate(&net, &row, &[TabProperty::Cylindrical], None)?;
            let cyl_gf = tableau::generating_function(
                cyl.iter().map(|t| tableau::inv_word(&net, &t.concat_rows())),
            );
            let expect = &q_int(n) * &o;
            rep.check(cyl_gf == expect, || {
                format!("cylindrical one-row sum differs at w={w}: {cyl_gf} vs {expect}")
            });
            let lcyl = enumerate(
                &net,
                &row,
                &[TabProperty::Cylindrical, TabProperty::LeftAnchored],
                None,
            )?;
            let lcyl_gf = tableau::generating_function(
                lcyl.iter().map(|t| tableau::inv_word(&net, &t.concat_rows())),
            );
            rep.check(lcyl_gf == o, || {
                format!("left-anchored cylindrical sum differs at w={w}: {lcyl_gf} vs {o}")
            });
        }
    }
    Ok(rep)
}
