//! The algebraic model of rational G-spectra at descriptor level: one
//! factor `Ch(Q[W_G H])` per subgroup class, plus geometric fixed points of
//! orbit wedges as Weyl-group sets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gset::{fixed_points, GSet};
use crate::isotropy::{Spectrum, SpectrumExpr};
use crate::lattice::{ClassId, SubgroupId, SubgroupLattice, WeylGroup};

#[derive(Debug, Clone)]
pub struct ModelFactor {
    pub class: ClassId,
    pub subgroup: SubgroupId,
    pub weyl: Arc<WeylGroup>,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct AlgebraicModelDescriptor {
    pub factors: Vec<ModelFactor>,
}

pub fn algebraic_model(lattice: &SubgroupLattice) -> Result<AlgebraicModelDescriptor> {
    let factors = lattice
        .classes()
        .iter()
        .enumerate()
        .map(|(c, class)| {
            let weyl = lattice.weyl_group(class.representative)?;
            Ok(ModelFactor {
                class: c,
                subgroup: class.representative,
                label: format!("Ch(Q[W_{}({})])", lattice.group().label(), class.label),
                weyl,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraicModelDescriptor { factors })
}

/// `Φ^H X` for a wedge of orbits, as the `W_G H`-set `⊔ (G/K)^H`.
#[derive(Debug, Clone)]
pub struct FixedPointModule {
    pub class: ClassId,
    pub weyl: Arc<WeylGroup>,
    pub w_set: GSet,
    /// Rational dimension in degree 0.
    pub dimension: usize,
    pub orbit_count: usize,
}

/// Orbit stabilizers of a wedge of orbit leaves; `Point` is the empty wedge.
pub fn orbit_summands(spectrum: &Spectrum) -> Result<Vec<SubgroupId>> {
    fn go(e: &SpectrumExpr, out: &mut Vec<SubgroupId>) -> Result<()> {
        match e {
            SpectrumExpr::Orbit(k) => {
                out.push(*k);
                Ok(())
            }
            SpectrumExpr::Point => Ok(()),
            SpectrumExpr::Wedge(a, b) => {
                go(a, out)?;
                go(b, out)
            }
            _ => Err(Error::domain(
                "geometric fixed-point modules need a wedge of orbit spectra",
            )),
        }
    }
    let mut out = Vec::new();
    go(spectrum.expr(), &mut out)?;
    Ok(out)
}

pub fn fixed_point_module(spectrum: &Spectrum, class: ClassId) -> Result<FixedPointModule> {
    let lattice = spectrum.lattice();
    if class >= lattice.classes().len() {
        return Err(Error::domain(format!("no subgroup class #{class}")));
    }
    let h = lattice.representative(class);
    let weyl = lattice.weyl_group(h)?;
    let parts = orbit_summands(spectrum)?
        .into_iter()
        .map(|k| {
            let x = GSet::cosets(lattice, k)?;
            Ok(fixed_points(&x, lattice, h)?.action)
        })
        .collect::<Result<Vec<_>>>()?;
    let w_set = if parts.is_empty() {
        GSet::trivial(weyl.group.clone(), 0)
    } else {
        GSet::disjoint_union(&parts)?
    };
    Ok(FixedPointModule {
        class,
        dimension: w_set.len(),
        orbit_count: w_set.orbits().len(),
        w_set,
        weyl,
    })
}

/// `Σ_(H)` of the number of `W_G H`-orbits on `Φ^H X`.
pub fn pi0_rank(spectrum: &Spectrum) -> Result<usize> {
    (0..spectrum.lattice().classes().len())
        .map(|c| fixed_point_module(spectrum, c).map(|m| m.orbit_count))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_group;
    use crate::Limits;

    fn lattice(name: &str) -> Arc<SubgroupLattice> {
        let l = Limits::default();
        SubgroupLattice::new(parse_group(name, &l).unwrap(), &l).unwrap()
    }

    fn weyl_orders(name: &str) -> Vec<usize> {
        algebraic_model(&lattice(name))
            .unwrap()
            .factors
            .iter()
            .map(|f| f.weyl.group.order())
            .collect()
    }

    #[test]
    fn model_factors() {
        assert_eq!(weyl_orders("C1"), [1]);
        assert_eq!(weyl_orders("C6"), [6, 3, 2, 1]);
        assert_eq!(weyl_orders("S3"), [6, 1, 2, 1]);
        let s3 = algebraic_model(&lattice("S3")).unwrap();
        assert_eq!(s3.factors[1].label, "Ch(Q[W_S3(C2)])");
    }

    #[test]
    fn s3_modules() {
        let s3 = lattice("S3");
        let x = Spectrum::parse(&s3, "orbit:S3/C2").unwrap();
        let m1 = fixed_point_module(&x, 0).unwrap();
        assert_eq!((m1.dimension, m1.orbit_count), (3, 1));
        let m3 = fixed_point_module(&x, 2).unwrap();
        assert_eq!(m3.dimension, 0);
        assert_eq!(pi0_rank(&x).unwrap(), 2);
        let top = Spectrum::parse(&s3, "orbit:S3/S3").unwrap();
        for c in 0..4 {
            let m = fixed_point_module(&top, c).unwrap();
            assert_eq!((m.dimension, m.orbit_count), (1, 1));
        }
        assert_eq!(pi0_rank(&top).unwrap(), 4);
        assert_eq!(pi0_rank(&Spectrum::point(&s3)).unwrap(), 0);
    }

    #[test]
    fn non_orbit_leaves_rejected() {
        let s3 = lattice("S3");
        for e in ["SQ", "idem:(C2)", "orbit:S3/C2 ^ orbit:S3/C3"] {
            let x = Spectrum::parse(&s3, e).unwrap();
            assert!(matches!(fixed_point_module(&x, 0), Err(Error::Domain(_))));
        }
    }
}
