//! Classical (`q = 1`) counting interpretations and conjecture reports.

use hecke_traces::network::network_of;
use hecke_traces::partition::IntPartition;
use hecke_traces::perm::Permutation;
use hecke_traces::tableau::{enumerate, TabProperty};
use hecke_traces::traces::{classical_oracle, eval_phi, eval_psi, PsiMethod};
use hecke_traces::transition::TraceFamily;

/// Every counting interpretation of the classical evaluations, checked
/// against the character-sum oracle: exhaustive through order 5 and sampled
/// at order 6.
#[test]
fn classical_counts_match_tableau_classes() {
    for n in 1..=6 {
        let mut perms = Permutation::all_smooth(n);
        if n == 6 {
            let stride = (perms.len() / 10).max(1);
            perms = perms.into_iter().step_by(stride).collect();
        }
        for w in perms {
            let net = network_of(&w).unwrap();
            let e = Permutation::identity(n);
            for la in IntPartition::all(n) {
                let count = |props: &[TabProperty], shape: &IntPartition, type_e: bool| {
                    enumerate(&net, shape, props, type_e.then_some(&e))
                        .unwrap()
                        .len() as i64
                };

                // epsilon: column-strict of type e, transposed shape
                let eps = classical_oracle(&w, TraceFamily::Epsilon, &la).unwrap();
                assert_eq!(
                    eps,
                    count(&[TabProperty::ColumnStrict], &la.transpose(), true),
                    "epsilon count at w={w} lambda={la}"
                );

                // eta: row-closed left-row-strict, and row-semistrict type e
                let eta = classical_oracle(&w, TraceFamily::Eta, &la).unwrap();
                assert_eq!(
                    eta,
                    count(
                        &[TabProperty::RowClosed, TabProperty::LeftRowStrict],
                        &la,
                        false
                    ),
                    "eta row-closed count at w={w} lambda={la}"
                );
                assert_eq!(
                    eta,
                    count(&[TabProperty::RowSemistrict], &la, true),
                    "eta row-semistrict count at w={w} lambda={la}"
                );

                // chi: standard type e
                let chi = classical_oracle(&w, TraceFamily::Chi, &la).unwrap();
                assert_eq!(
                    chi,
                    count(&[TabProperty::Standard], &la, true),
                    "chi count at w={w} lambda={la}"
                );

                // psi: four counting interpretations
                let psi = classical_oracle(&w, TraceFamily::Psi, &la).unwrap();
                assert_eq!(
                    psi,
                    count(&[TabProperty::Cylindrical], &la, false),
                    "psi cylindrical count at w={w} lambda={la}"
                );
                assert_eq!(
                    psi,
                    count(&[TabProperty::CyclicallyRowSemistrict], &la, true),
                    "psi cyclically-row-semistrict count at w={w} lambda={la}"
                );
                assert_eq!(
                    psi,
                    count(
                        &[TabProperty::RecordFree, TabProperty::RowSemistrict],
                        &la,
                        true
                    ),
                    "psi record-free count at w={w} lambda={la}"
                );
                let product: i64 = la.parts().iter().map(|&x| x as i64).product();
                assert_eq!(
                    psi,
                    product
                        * count(
                            &[TabProperty::RightAnchored, TabProperty::RowSemistrict],
                            &la,
                            true
                        ),
                    "psi right-anchored count at w={w} lambda={la}"
                );

                // phi on rectangles: column-strict cylindrical
                let rectangular = la.parts().windows(2).all(|x| x[0] == x[1]);
                if rectangular {
                    let phi = classical_oracle(&w, TraceFamily::Phi, &la).unwrap();
                    assert_eq!(
                        phi,
                        count(
                            &[TabProperty::ColumnStrict, TabProperty::Cylindrical],
                            &la,
                            false
                        ),
                        "phi rectangular count at w={w} lambda={la}"
                    );
                }
            }
        }
    }
}

/// The monomial-trace nonnegativity conjecture holds at desk scale; the
/// evaluator reports rather than asserts it, so assert the report here.
#[test]
fn phi_nonnegative_through_order_six() {
    for n in 1..=6 {
        for w in Permutation::all_smooth(n) {
            let net = network_of(&w).unwrap();
            for la in IntPartition::all(n) {
                let phi = eval_phi(&net, &la).unwrap();
                assert!(
                    phi.has_nonnegative_coeffs(),
                    "phi coefficient conjecture violated at w={w} lambda={la}: {phi}"
                );
            }
        }
    }
}

/// psi vanishes exactly when lambda fails to refine the component sizes.
#[test]
fn psi_vanishing_is_exact() {
    for n in 1..=6 {
        for w in Permutation::all_smooth(n) {
            let net = network_of(&w).unwrap();
            let sizes = net.component_sizes();
            for la in IntPartition::all(n) {
                let refines = la.refines(&sizes).unwrap();
                let value = eval_psi(&net, &la, PsiMethod::OFormula).unwrap();
                assert_eq!(
                    value.is_zero(),
                    !refines,
                    "psi vanishing mismatch at w={w} lambda={la}"
                );
            }
        }
    }
}
