mod common;

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use ninfty::burnside::{burnside_product, table_of_marks, BurnsideElement};
use ninfty::catalog::catalog_up_to;
use ninfty::compat::{check_compatibility, Method};
use ninfty::gset::hset_structures;
use ninfty::isotropy::{isotropy, Spectrum};
use ninfty::operad::OperadModel;
use ninfty::{Limits, SubgroupLattice};

fn small_lattices() -> &'static Vec<Arc<SubgroupLattice>> {
    static CELL: OnceLock<Vec<Arc<SubgroupLattice>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let limits = Limits::default();
        catalog_up_to(12)
            .into_iter()
            .map(|g| SubgroupLattice::new(g, &limits).unwrap())
            .collect()
    })
}

#[derive(Debug, Clone)]
enum Tree {
    Orbit(usize),
    Idem(usize),
    Sq,
    Pt,
    Wedge(Box<Tree>, Box<Tree>),
    Smash(Box<Tree>, Box<Tree>),
}

fn tree() -> impl Strategy<Value = Tree> {
    let leaf = prop_oneof![
        any::<usize>().prop_map(Tree::Orbit),
        any::<usize>().prop_map(Tree::Idem),
        Just(Tree::Sq),
        Just(Tree::Pt),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Tree::Wedge(a.into(), b.into())),
            (inner.clone(), inner).prop_map(|(a, b)| Tree::Smash(a.into(), b.into())),
        ]
    })
}

fn build(lattice: &Arc<SubgroupLattice>, t: &Tree) -> Spectrum {
    match t {
        Tree::Orbit(i) => Spectrum::orbit(lattice, i % lattice.len()).unwrap(),
        Tree::Idem(i) => Spectrum::idempotent(lattice, i % lattice.classes().len()).unwrap(),
        Tree::Sq => Spectrum::rational_sphere(lattice),
        Tree::Pt => Spectrum::point(lattice),
        Tree::Wedge(a, b) => build(lattice, a).wedge(build(lattice, b)).unwrap(),
        Tree::Smash(a, b) => build(lattice, a).smash(build(lattice, b)).unwrap(),
    }
}

fn element(lattice: &SubgroupLattice, coeffs: &[i64]) -> BurnsideElement {
    let tom = table_of_marks(lattice);
    let c = (0..tom.len())
        .map(|i| BigRational::from_integer(BigInt::from(coeffs[i % coeffs.len()])))
        .collect();
    BurnsideElement::from_coefficients(&tom, c).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn marks_are_a_ring_homomorphism(
        g in 0usize..64,
        a in prop::collection::vec(-5i64..5, 1..8),
        b in prop::collection::vec(-5i64..5, 1..8),
    ) {
        let lattice = &small_lattices()[g % small_lattices().len()];
        let x = element(lattice, &a);
        let y = element(lattice, &b);
        let product = burnside_product(&x, &y).unwrap();
        let pointwise: Vec<BigRational> = x.marks().iter().zip(y.marks()).map(|(p, q)| p * q).collect();
        prop_assert_eq!(product.marks(), pointwise);
        let sum: Vec<BigRational> = x.marks().iter().zip(y.marks()).map(|(p, q)| p + q).collect();
        prop_assert_eq!(x.add(&y).unwrap().marks(), sum);
        let one = BurnsideElement::one(x.table());
        prop_assert_eq!(burnside_product(&one, &x).unwrap(), x);
    }

    #[test]
    fn isotropy_laws(g in 0usize..64, a in tree(), b in tree()) {
        let lattice = &small_lattices()[g % small_lattices().len()];
        let x = build(lattice, &a);
        let y = build(lattice, &b);
        let pt = Spectrum::point(lattice);
        let sq = Spectrum::rational_sphere(lattice);
        prop_assert_eq!(isotropy(&x.clone().wedge(pt.clone()).unwrap()), isotropy(&x));
        prop_assert_eq!(isotropy(&x.clone().smash(sq).unwrap()), isotropy(&x));
        prop_assert!(isotropy(&x.clone().smash(pt).unwrap()).is_empty());
        prop_assert_eq!(
            isotropy(&x.clone().wedge(y.clone()).unwrap()),
            isotropy(&y.clone().wedge(x.clone()).unwrap())
        );
        prop_assert!(isotropy(&x.clone().smash(y.clone()).unwrap()).is_subset(&isotropy(&x)));
        prop_assert!(isotropy(&x).is_subset(&isotropy(&x.clone().wedge(y).unwrap())));
    }

    #[test]
    fn expressions_round_trip_through_text(g in 0usize..64, a in tree()) {
        let lattice = &small_lattices()[g % small_lattices().len()];
        let x = build(lattice, &a);
        let reparsed = Spectrum::parse(lattice, &x.to_string()).unwrap();
        prop_assert_eq!(isotropy(&reparsed), isotropy(&x));
        prop_assert_eq!(reparsed.to_string(), x.to_string());
    }

    #[test]
    fn operads_are_sandwiched_and_families_are_sigma_free(g in 0usize..64, k in any::<usize>(), n in 1usize..5) {
        let lattice = &small_lattices()[g % small_lattices().len()];
        let k = lattice.representative(k % lattice.classes().len());
        let geometric = OperadModel::geometric(lattice.clone(), &[k]).unwrap();
        let minimal = OperadModel::minimal(lattice.clone());
        let maximal = OperadModel::maximal(lattice.clone());
        prop_assert!(minimal.is_contained_in(&geometric, n).unwrap());
        prop_assert!(geometric.is_contained_in(&maximal, n).unwrap());
        for m in geometric.family(n).unwrap().members.iter() {
            prop_assert!(m.graph.meets_sigma_trivially());
            prop_assert_eq!(m.graph.projection(), m.subgroup);
        }
        for h in 0..lattice.len() {
            for t in hset_structures(lattice, h, n).unwrap() {
                if t.is_trivial() {
                    prop_assert!(geometric.admissible(&t));
                }
            }
        }
    }
}

/// Direct materialization sees exactly the admissible orbits of size at
/// most `n_max`.
#[test]
fn direct_mode_is_orbit_reduction_truncated_at_n_max() {
    let limits = Limits::default();
    for g in catalog_up_to(16) {
        let lattice = SubgroupLattice::new(g, &limits).unwrap();
        let e = Spectrum::rational_sphere(&lattice);
        for operad in [OperadModel::maximal(lattice.clone()), OperadModel::geometric(lattice.clone(), &[lattice.trivial()]).unwrap()] {
            for n_max in 1..=6 {
                let orbit = check_compatibility(&operad, &e, Method::OrbitReduction, n_max).unwrap();
                let direct = check_compatibility(&operad, &e, Method::DirectPerN, n_max).unwrap();
                let truncated: Vec<_> = orbit.violations.iter().filter(|v| v.n <= n_max).cloned().collect();
                assert_eq!(direct.violations, truncated, "{} n_max = {n_max}", lattice.group().label());
            }
        }
    }
}

#[test]
fn single_leaves_get_definite_verdicts_under_extreme_operads() {
    use ninfty::compat::{lifting_verdict, VerdictTag};
    for lattice in small_lattices() {
        let mut leaves: Vec<Spectrum> = (0..lattice.classes().len())
            .map(|c| Spectrum::idempotent(lattice, c).unwrap())
            .collect();
        leaves.push(Spectrum::rational_sphere(lattice));
        leaves.push(Spectrum::point(lattice));
        leaves.push(Spectrum::orbit(lattice, lattice.trivial()).unwrap());
        for operad in [OperadModel::minimal(lattice.clone()), OperadModel::maximal(lattice.clone())] {
            for e in &leaves {
                let v = lifting_verdict(&operad, e).unwrap();
                assert_ne!(v.tag, VerdictTag::Unknown, "{} {e}", operad.kind().name());
                assert!(!v.citation.is_empty());
            }
        }
    }
}
