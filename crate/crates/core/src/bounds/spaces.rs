//! Theorem-driven bound facts per space family.
//!
//! Branch logic for a lens space L^{2n+1}(m):
//!
//! * **high torsion** (m does not divide C(2n, n)) - TC is exactly 4n+2,
//!   and TCS lies in [4n+2, 4n+3];
//! * **low torsion, even m** - TC ≤ 4n, with equality exactly when m does
//!   not divide C(2n−1, n);
//! * **low torsion, odd m** - only the one-sided upper bound
//!   TC ≤ TCS ≤ 2(2n+1)+1 is emitted; no exactness is ever claimed.
//!
//! Every fact carries the provenance of the theorem or table that justifies
//! it; one-sided knowledge is reported one-sided.

use crate::bilinear::BilinearMapSpec;
use crate::bounds::arith::divides_binomial;
use crate::bounds::data::KnownResults;
use crate::bounds::facts::{push_dedup, BoundReport, Fact, Quantity};
use crate::bounds::tables::table1_entry;
use crate::error::Error;
use crate::geometry::SpaceDescriptor;
use crate::relations::RelationId;
use crate::report::VerificationReport;

pub(crate) const PROV_HIGH_TORSION: &str = "high-torsion lens TC theorem";
pub(crate) const PROV_LOW_TORSION_UPPER: &str = "even low-torsion TC upper bound";
pub(crate) const PROV_LOW_TORSION_EXACT: &str = "even low-torsion TC equality criterion";
pub(crate) const PROV_CHAIN_DIM: &str = "chain inequality TC <= TCS with the 2d+1 dimension bound";
pub(crate) const PROV_DIM_BOUND: &str = "dimension upper bound 2d+1 for closed smooth manifolds";
pub(crate) const PROV_HIGH_TCS_LOWER: &str = "high-torsion TCS lower bound";
pub(crate) const PROV_CHAIN: &str = "chain inequality TC <= TCS";
pub(crate) const PROV_BSNM: &str = "symmetric biequivariant map characterization";
pub(crate) const PROV_TABLE1: &str = "tabulated TCS bounds for low r";
pub(crate) const PROV_EMB_RELATION: &str = "embedding-dimension characterization";
pub(crate) const PROV_LEVEL_RELATION: &str = "level characterization of symmetric planning";
pub(crate) const PROV_CP: &str = "complex projective TCS computation";
pub(crate) const PROV_SPHERE_DIFF: &str = "sphere TCS/TC parity difference";
pub(crate) const PROV_WITNESS: &str = "numerically verified symmetric axial witness";

/// TC facts for L^{2n+1}(m).
pub fn lens_tc_facts(n: u64, m: u64) -> Result<Vec<Fact>, Error> {
    if m < 2 {
        return Err(Error::Parse(format!("lens torsion must be >= 2, got {m}")));
    }
    let n_i = n as i64;
    let high_torsion = !divides_binomial(m, 2 * n, n)?;
    let mut facts = Vec::new();
    if high_torsion {
        facts.push(Fact::exact(Quantity::Tc, 4 * n_i + 2, PROV_HIGH_TORSION));
    } else if m.is_multiple_of(2) {
        // Low torsion forces n >= 1 (m >= 2 never divides C(0,0) = 1).
        if !divides_binomial(m, 2 * n - 1, n)? {
            facts.push(Fact::exact(Quantity::Tc, 4 * n_i, PROV_LOW_TORSION_EXACT));
        } else {
            facts.push(Fact::upper(Quantity::Tc, 4 * n_i, PROV_LOW_TORSION_UPPER));
        }
    } else {
        facts.push(Fact::upper(Quantity::Tc, 4 * n_i + 3, PROV_CHAIN_DIM));
    }
    Ok(facts)
}

/// TCS facts for L^{2n+1}(m): the dimension upper bound always, the
/// high-torsion lower bound when it applies, the chain lower bound from any
/// exact TC value, and (for even m) the induced lower bound on the smallest
/// symmetric biequivariant target parameter.
pub fn lens_tcs_facts(n: u64, m: u64) -> Result<Vec<Fact>, Error> {
    let n_i = n as i64;
    let mut facts = Vec::new();
    facts.push(Fact::upper(Quantity::Tcs, 4 * n_i + 3, PROV_DIM_BOUND));
    if !divides_binomial(m, 2 * n, n)? {
        facts.push(Fact::lower(Quantity::Tcs, 4 * n_i + 2, PROV_HIGH_TCS_LOWER));
    }
    for fact in lens_tc_facts(n, m)? {
        if fact.kind == crate::bounds::facts::FactKind::Exact {
            if let Some(v) = fact.value.as_int() {
                push_dedup(&mut facts, Fact::lower(Quantity::Tcs, v, PROV_CHAIN));
            }
        }
    }
    if m.is_multiple_of(2) {
        let best_lower = facts
            .iter()
            .filter(|f| {
                f.quantity == Quantity::Tcs && f.kind == crate::bounds::facts::FactKind::Lower
            })
            .filter_map(|f| f.value.as_int())
            .max();
        if let Some(l) = best_lower {
            facts.push(Fact::lower(Quantity::BSnm, l.div_euclid(2), PROV_BSNM));
        }
    }
    Ok(facts)
}

/// The r-values where the symmetric complexity of P^r is characterized by
/// the embedding dimension.
pub fn rp_characterized(r: u64) -> bool {
    r > 15 || matches!(r, 1 | 2 | 4 | 8 | 9 | 13)
}

/// TCS facts for real projective r-space: tabulated bounds where available,
/// the symbolic characterizations elsewhere, concretized when the user
/// supplies an embedding-dimension record.
pub fn rp_tcs_facts(r: u64, known: &KnownResults) -> Vec<Fact> {
    let mut facts = Vec::new();
    if let Some((upper, lower)) = table1_entry(r as u32) {
        if upper == lower {
            facts.push(Fact::exact(Quantity::Tcs, upper as i64, PROV_TABLE1));
        } else {
            facts.push(Fact::lower(Quantity::Tcs, lower as i64, PROV_TABLE1));
            facts.push(Fact::upper(Quantity::Tcs, upper as i64, PROV_TABLE1));
        }
    }
    if rp_characterized(r) {
        match known.emb_dim(r) {
            Some((e, source)) => facts.push(Fact::exact(
                Quantity::Tcs,
                e + 1,
                &format!("{PROV_EMB_RELATION} (E({r}) from {source})"),
            )),
            None => facts.push(Fact::relation(Quantity::Tcs, "E(r)+1", PROV_EMB_RELATION)),
        }
        facts.push(Fact::relation(
            Quantity::Tcs,
            "level(P^r x P^r - diagonal, Z/2) + 1",
            PROV_LEVEL_RELATION,
        ));
    }
    facts
}

/// TCS (and TC) of complex projective n-space: both exactly 2n+1.
pub fn cp_tcs_facts(n: u64) -> Vec<Fact> {
    let v = 2 * n as i64 + 1;
    vec![
        Fact::exact(Quantity::Tcs, v, PROV_CP),
        Fact::exact(Quantity::Tc, v, PROV_CP),
    ]
}

/// TCS(S^r) − TC(S^r): zero for even r, one for odd r.
pub fn sphere_tcs_difference(r: u64) -> i64 {
    if r.is_multiple_of(2) {
        0
    } else {
        1
    }
}

/// Sphere facts: the classical TC value (an external constant), the parity
/// difference relation, and the resulting exact TCS.
pub fn sphere_tcs_facts(r: u64, known: &KnownResults) -> Vec<Fact> {
    let mut facts = Vec::new();
    let diff = sphere_tcs_difference(r);
    facts.push(Fact::relation(
        Quantity::Tcs,
        &format!("TC(S^{r}) + {diff}"),
        PROV_SPHERE_DIFF,
    ));
    if let Some((tc, source)) = known.sphere_tc(r) {
        facts.push(Fact::exact(
            Quantity::Tc,
            tc,
            &format!("external constant ({source})"),
        ));
        facts.push(Fact::exact(
            Quantity::Tcs,
            tc + diff,
            &format!("{PROV_SPHERE_DIFF} applied to the external constant"),
        ));
    }
    facts
}

/// Upper bound on TCS(P^r) from a verified symmetric nonsingular witness
/// into S^s: s+2 rules suffice. Requires passing SYM and AXIAL2 reports for
/// exactly this map; refuses to emit otherwise.
pub fn witness_upper(
    spec: &BilinearMapSpec,
    r: u64,
    reports: &[VerificationReport],
) -> Result<Fact, Error> {
    if spec.domain_dim as u64 != r {
        return Err(Error::DimensionMismatch {
            expected: r as usize + 1,
            got: spec.domain_dim + 1,
        });
    }
    for rel in [RelationId::Sym, RelationId::Axial2] {
        let ok = reports
            .iter()
            .any(|rep| rep.map == spec.name && rep.relation == rel.label() && rep.pass);
        if !ok {
            return Err(Error::UnverifiedWitness(format!(
                "map `{}` has no passing {} report",
                spec.name,
                rel.label()
            )));
        }
    }
    let s = spec.target_sphere_dim() as i64;
    Ok(Fact::upper(Quantity::Tcs, s + 2, PROV_WITNESS))
}

/// Full bound report for one space.
pub fn bound_report(space: SpaceDescriptor, known: &KnownResults) -> Result<BoundReport, Error> {
    let facts = match space {
        SpaceDescriptor::Sphere { r } => sphere_tcs_facts(r as u64, known),
        SpaceDescriptor::RealProjective { r } => rp_tcs_facts(r as u64, known),
        SpaceDescriptor::ComplexProjective { n } => cp_tcs_facts(n as u64),
        SpaceDescriptor::Lens { n, m } => {
            let mut facts = lens_tc_facts(n as u64, m as u64)?;
            facts.extend(lens_tcs_facts(n as u64, m as u64)?);
            facts
        }
    };
    let report = BoundReport::new(space, facts);
    report
        .check_consistency()
        .map_err(|e| Error::Parse(format!("inconsistent bound facts for {space}: {e}")))?;
    Ok(report)
}
