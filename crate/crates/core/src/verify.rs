//! One-stop verification bundle: every closed form in the crate compared
//! against its brute-force counterpart for a single Hessenberg function,
//! collected into a [`CheckReport`].  This is what the `check` and `sweep`
//! subcommands run per function.

use num::BigInt;

use crate::error::Result;
use crate::hess::HessFn;
use crate::report::CheckReport;
use crate::{betti, cohom, components, gkm};

/// Runs every formula/oracle pair and structural invariant for one h.
/// The cohomology and GKM cross-checks are genuinely expensive, so they
/// only join the bundle for small n where they finish promptly; the
/// combinatorial pairs run at every supported rank.
pub fn verify_h(h: &HessFn) -> Result<CheckReport> {
    let mut report = CheckReport::new();

    let p = betti::poincare(h)?;
    let oracle = betti::poincare_bruteforce(h)?;
    report.record("poincare formula matches oracle", p == oracle, || {
        format!("formula {p} vs oracle {oracle}")
    });

    let euler = betti::euler_number(h)?;
    let count = betti::fixed_points(h)?.len();
    let at_one = p.eval_one();
    report.record(
        "euler number equals fixed-point count",
        euler == BigInt::from(count) && euler == at_one,
        || format!("euler {euler}, fixed points {count}, P(1) = {at_one}"),
    );

    let dim = betti::dimension(h)?;
    report.record(
        "dimension matches top cohomological degree",
        p.degree() == Some(2 * dim),
        || format!("dimension {dim}, top degree {:?}", p.degree()),
    );

    report.record(
        "components match bruhat-maximal fixed points",
        components::components_match_oracle(h)?,
        || {
            let corner: Vec<String> = components::components(h)
                .map(|cs| cs.iter().map(|c| c.word.to_string()).collect())
                .unwrap_or_default();
            let brute: Vec<String> = components::components_bruteforce(h)
                .map(|ws| ws.iter().map(|w| w.to_string()).collect())
                .unwrap_or_default();
            format!("corner words {corner:?} vs maximal fixed points {brute:?}")
        },
    );
    report.record(
        "component words pairwise incomparable",
        components::pairwise_incomparable(h)?,
        || "two corner words are Bruhat comparable".to_string(),
    );

    report.merge(betti::structural_checks(h)?);

    if h.n() <= 4 {
        report.merge(cohom::ideal_property_check(h)?);
    }
    if h.n() <= 3 {
        report.merge(cohom::equivariant_rank_check(h, 2, gkm::DEFAULT_DEGREE_CAP)?);
    }

    Ok(report)
}
