//! Compatibility of spectra with operads, relevant subgroups, the norm
//! obstruction and the combined verdict on lifted model structures.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gset::HSetStructure;
use crate::isotropy::{is_free, isotropy, Spectrum, SpectrumExpr};
use crate::lattice::SubgroupId;
use crate::operad::{FamilyMember, OperadKind, OperadModel};

/// Anchor strings attached to verdicts.
pub mod citation {
    pub const LIFTING: &str = "lifting theorem for O-compatible spectra";
    pub const MINIMAL_OPERAD: &str = "every spectrum is E∞¹-compatible";
    pub const FREE_SPECTRUM: &str = "free spectra are compatible with every N∞-operad";
    pub const LITTLE_DISC: &str = "little-disc operad on C6/C2: admissible sets embed in the universe";
    pub const NORM_OBSTRUCTION: &str = "norm obstruction: no lifted structure on idempotent-local E∞^F-algebras";
    pub const RATIONAL: &str = "commutative algebras in rational spectra (weak equivalences are rational equivalences)";
    pub const UNKNOWN: &str = "compatibility is sufficient but not necessary; no criterion applies";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Finite check over single orbits `H/K`, `K < H`, `H` in the isotropy.
    OrbitReduction,
    /// Materialize `F_n(O)` for each `n <= n_max`.
    DirectPerN,
}

/// A nontrivial admissible orbit `H/K` over a subgroup in the isotropy,
/// with the least arity at which it was seen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompatibilityViolation {
    pub subgroup: SubgroupId,
    pub orbit: SubgroupId,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub compatible: bool,
    pub violations: Vec<CompatibilityViolation>,
    pub method: Method,
    /// Largest arity inspected (direct mode only).
    pub n_checked: Option<usize>,
}

fn same_group(operad: &OperadModel, spectrum: &Spectrum) -> Result<()> {
    if operad.lattice().same_group(spectrum.lattice()) {
        Ok(())
    } else {
        Err(Error::domain("operad and spectrum are over different groups"))
    }
}

/// Whether every graph subgroup of `F_n(O)` projecting into the isotropy of
/// `spectrum` has trivial `Σn` component, for all `n`.
pub fn check_compatibility(
    operad: &OperadModel,
    spectrum: &Spectrum,
    method: Method,
    n_max: usize,
) -> Result<CompatibilityReport> {
    same_group(operad, spectrum)?;
    let lattice = operad.lattice();
    let ig = isotropy(spectrum);
    let mut violations: Vec<CompatibilityViolation> = Vec::new();
    let mut n_checked = None;
    match method {
        Method::OrbitReduction => {
            for c in ig.classes() {
                let h = lattice.representative(c);
                for class in lattice.classes_within(h).iter() {
                    let k = class[0];
                    if k != h && operad.admissible_orbit(h, k) {
                        violations.push(CompatibilityViolation {
                            subgroup: h,
                            orbit: k,
                            n: lattice.index(k, h),
                        });
                    }
                }
            }
        }
        Method::DirectPerN => {
            let mut least: BTreeMap<(SubgroupId, SubgroupId), usize> = BTreeMap::new();
            for n in 1..=n_max {
                for member in operad.family(n)?.members.iter() {
                    if !ig.contains(member.class) || member.graph.is_product_with_trivial() {
                        continue;
                    }
                    for k in member.hset.nontrivial_orbits() {
                        least.entry((member.subgroup, k)).or_insert(n);
                    }
                }
            }
            violations = least
                .into_iter()
                .map(|((subgroup, orbit), n)| CompatibilityViolation { subgroup, orbit, n })
                .collect();
            n_checked = Some(n_max);
        }
    }
    // Orbits conjugate under N_G(H) give conjugate graph subgroups.
    let mut canonical: BTreeMap<(SubgroupId, SubgroupId), usize> = BTreeMap::new();
    for v in violations {
        let orbit = HSetStructure::orbit(lattice, v.subgroup, v.orbit)?.canonical(lattice).orbits()[0];
        let n = canonical.entry((v.subgroup, orbit)).or_insert(v.n);
        *n = (*n).min(v.n);
    }
    let violations: Vec<CompatibilityViolation> = canonical
        .into_iter()
        .map(|((subgroup, orbit), n)| CompatibilityViolation { subgroup, orbit, n })
        .collect();
    Ok(CompatibilityReport {
        compatible: violations.is_empty(),
        violations,
        method,
        n_checked,
    })
}

/// `{Γ in F_n(O) : p_G Γ in Ig(E)}` up to conjugacy.
pub fn relevant_subgroups(operad: &OperadModel, spectrum: &Spectrum, n: usize) -> Result<Vec<FamilyMember>> {
    same_group(operad, spectrum)?;
    let ig = isotropy(spectrum);
    Ok(operad
        .family(n)?
        .members
        .iter()
        .filter(|m| ig.contains(m.class))
        .cloned()
        .collect())
}

/// A subgroup `K` in the isotropy whose free orbit `K/1` is admissible:
/// algebras then carry a norm `N_1^K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormWitness {
    pub subgroup: SubgroupId,
    pub orbit: HSetStructure,
    pub n: usize,
}

/// Present when the spectrum is non-equivariantly trivial and some `K` in
/// its isotropy admits the free orbit `K/1`.
pub fn norm_witness(operad: &OperadModel, spectrum: &Spectrum) -> Result<Option<NormWitness>> {
    same_group(operad, spectrum)?;
    let lattice = operad.lattice();
    let ig = isotropy(spectrum);
    let trivial = lattice.trivial();
    if ig.contains(lattice.class_of(trivial)) {
        return Ok(None);
    }
    for c in ig.classes() {
        let k = lattice.representative(c);
        if operad.admissible_orbit(k, trivial) {
            return Ok(Some(NormWitness {
                subgroup: k,
                orbit: HSetStructure::orbit(lattice, k, trivial)?,
                n: lattice.subgroup(k).order(),
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictTag {
    GuaranteedCompatible,
    GuaranteedRational,
    Obstructed,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub tag: VerdictTag,
    pub citation: String,
    pub witness: Option<NormWitness>,
}

/// Whether the `E`-local model structure lifts to `O`-algebras, in priority
/// order: the rational sphere, compatibility, the norm obstruction, unknown.
pub fn lifting_verdict(operad: &OperadModel, spectrum: &Spectrum) -> Result<Verdict> {
    same_group(operad, spectrum)?;
    if *spectrum.expr() == SpectrumExpr::RationalSphere {
        return Ok(Verdict {
            tag: VerdictTag::GuaranteedRational,
            citation: citation::RATIONAL.into(),
            witness: None,
        });
    }
    let report = check_compatibility(operad, spectrum, Method::OrbitReduction, 0)?;
    if report.compatible {
        let reason = match operad.kind() {
            OperadKind::MinimalE => citation::MINIMAL_OPERAD,
            _ if is_free(spectrum) => citation::FREE_SPECTRUM,
            OperadKind::Geometric(_) => citation::LITTLE_DISC,
            _ => "",
        };
        let citation = if reason.is_empty() {
            citation::LIFTING.to_string()
        } else {
            format!("{}; {}", citation::LIFTING, reason)
        };
        return Ok(Verdict {
            tag: VerdictTag::GuaranteedCompatible,
            citation,
            witness: None,
        });
    }
    if let Some(w) = norm_witness(operad, spectrum)? {
        return Ok(Verdict {
            tag: VerdictTag::Obstructed,
            citation: citation::NORM_OBSTRUCTION.into(),
            witness: Some(w),
        });
    }
    Ok(Verdict {
        tag: VerdictTag::Unknown,
        citation: citation::UNKNOWN.into(),
        witness: None,
    })
}
