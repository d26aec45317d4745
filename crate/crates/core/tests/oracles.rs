mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use common::{actions_up_to_iso, members, Oracle, Set};
use ninfty::burnside::{burnside_product, idempotents, table_of_marks, BurnsideElement};
use ninfty::catalog::{catalog_up_to, parse_group};
use ninfty::gset::hset_structures;
use ninfty::{Limits, SubgroupLattice};

fn lattices(max_order: usize) -> Vec<std::sync::Arc<SubgroupLattice>> {
    let limits = Limits::default();
    catalog_up_to(max_order)
        .into_iter()
        .map(|g| SubgroupLattice::new(g, &limits).unwrap())
        .collect()
}

fn class_sets(lattice: &SubgroupLattice) -> BTreeSet<BTreeSet<Set>> {
    lattice
        .classes()
        .iter()
        .map(|c| c.members.iter().map(|&id| members(lattice, id)).collect())
        .collect()
}

#[test]
fn subgroups_and_classes_match_generating_set_closures() {
    for lattice in lattices(24) {
        let o = Oracle::new(lattice.group());
        let ours: Vec<Set> = (0..lattice.len()).map(|i| members(&lattice, i)).collect();
        let oracle = o.subgroups();
        assert_eq!(ours, oracle, "{}", lattice.group().label());
        for s in &ours {
            assert_eq!(o.order() % s.len(), 0);
        }
        let oracle_classes: BTreeSet<BTreeSet<Set>> = o
            .classes(&oracle, &o.whole())
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        assert_eq!(class_sets(&lattice), oracle_classes, "{}", lattice.group().label());
    }
}

#[test]
fn subgroups_match_literal_subset_check() {
    for lattice in lattices(12) {
        let o = Oracle::new(lattice.group());
        let ours: Vec<Set> = (0..lattice.len()).map(|i| members(&lattice, i)).collect();
        assert_eq!(ours, o.subgroups_literal(), "{}", lattice.group().label());
    }
}

#[test]
fn mobius_and_normalizers_match_recursion() {
    for lattice in lattices(12) {
        let o = Oracle::new(lattice.group());
        let subs: Vec<Set> = (0..lattice.len()).map(|i| members(&lattice, i)).collect();
        for k in 0..lattice.len() {
            assert_eq!(members(&lattice, lattice.normalizer(k)), o.normalizer(&subs[k]));
            for h in 0..lattice.len() {
                match lattice.mobius(k, h) {
                    Ok(m) => assert_eq!(m, o.mobius(&subs, &subs[k], &subs[h])),
                    Err(_) => assert!(!subs[k].is_subset(&subs[h])),
                }
            }
            let w = lattice.weyl_group(k).unwrap();
            assert_eq!(w.group.order() * subs[k].len(), o.normalizer(&subs[k]).len());
        }
    }
}

#[test]
fn marks_match_explicit_cosets() {
    for lattice in lattices(24) {
        let o = Oracle::new(lattice.group());
        let tom = table_of_marks(&lattice);
        let reps: Vec<Set> = lattice.classes().iter().map(|c| members(&lattice, c.representative)).collect();
        for i in 0..reps.len() {
            for j in 0..reps.len() {
                assert_eq!(tom.mark(i, j) as usize, o.mark(&reps[j], &reps[i]));
            }
        }
    }
}

#[test]
fn idempotents_match_gluck_formula() {
    for lattice in lattices(24) {
        let o = Oracle::new(lattice.group());
        let subs: Vec<Set> = (0..lattice.len()).map(|i| members(&lattice, i)).collect();
        let tom = table_of_marks(&lattice);
        for (c, e) in idempotents(&tom).iter().enumerate() {
            let h = &subs[lattice.representative(c)];
            let n = o.normalizer(h).len() as i64;
            let mut expected = vec![BigRational::from_integer(BigInt::from(0)); tom.len()];
            for (k, sub) in subs.iter().enumerate() {
                if sub.is_subset(h) {
                    let term = sub.len() as i64 * o.mobius(&subs, sub, h);
                    expected[lattice.class_of(k)] += BigRational::new(term.into(), n.into());
                }
            }
            assert_eq!(e.coefficients(), expected.as_slice(), "{} e_({})", lattice.group().label(), c);
        }
    }
}

/// `G/A x G/B` decomposed by explicit orbits of coset pairs.
#[test]
fn products_match_orbit_decomposition() {
    for lattice in lattices(12) {
        let o = Oracle::new(lattice.group());
        let tom = table_of_marks(&lattice);
        let class_of = |s: &Set| {
            (0..lattice.classes().len())
                .find(|&c| lattice.class(c).members.iter().any(|&id| &members(&lattice, id) == s))
                .unwrap()
        };
        for a in 0..tom.len() {
            for b in 0..tom.len() {
                let ca = o.cosets(&members(&lattice, lattice.representative(a)));
                let cb = o.cosets(&members(&lattice, lattice.representative(b)));
                let act = |g: usize, c: &Set| -> Set { c.iter().map(|&x| o.mul[g][x]).collect() };
                let mut seen = BTreeSet::new();
                let mut counts = vec![0i64; tom.len()];
                for x in &ca {
                    for y in &cb {
                        if seen.contains(&(x.clone(), y.clone())) {
                            continue;
                        }
                        for g in 0..o.order() {
                            seen.insert((act(g, x), act(g, y)));
                        }
                        let stab: Set = (0..o.order()).filter(|&g| act(g, x) == *x && act(g, y) == *y).collect();
                        counts[class_of(&stab)] += 1;
                    }
                }
                let product = burnside_product(&BurnsideElement::basis(&tom, a), &BurnsideElement::basis(&tom, b)).unwrap();
                let expected: Vec<BigRational> = counts.iter().map(|&c| BigRational::from_integer(c.into())).collect();
                assert_eq!(product.coefficients(), expected.as_slice());
            }
        }
    }
}

#[test]
fn hset_counts_match_homomorphisms_into_symmetric_groups() {
    let limits = Limits::default();
    let mut cases: Vec<(std::sync::Arc<SubgroupLattice>, usize)> = lattices(8)
        .into_iter()
        .map(|l| {
            let w = l.whole();
            (l, w)
        })
        .collect();
    let s4 = SubgroupLattice::new(parse_group("S4", &limits).unwrap(), &limits).unwrap();
    for c in s4.classes() {
        if c.order <= 8 {
            cases.push((s4.clone(), c.representative));
        }
    }
    for (lattice, h) in cases {
        let o = Oracle::new(lattice.group());
        let gens = lattice.subgroup(h).generators().to_vec();
        for n in 1..=5 {
            assert_eq!(
                hset_structures(&lattice, h, n).unwrap().len(),
                actions_up_to_iso(&o, &gens, n),
                "{} in {}, n = {n}",
                lattice.label(h),
                lattice.group().label()
            );
        }
    }
}
