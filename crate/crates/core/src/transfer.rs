//! Transfer systems on a subgroup lattice.
//!
//! A transfer system is a reflexive sub-relation of inclusion that is closed
//! under conjugation, restriction and composition. They form a closure
//! system, so they are enumerated with Ganter's NextClosure algorithm, which
//! visits every closed set exactly once in lectic order.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::limits::Limits;

/// The non-reflexive pairs `(K, L)`, `K < L`, of a transfer system, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransferSystem {
    pub pairs: Vec<(SubgroupId, SubgroupId)>,
}

impl TransferSystem {
    pub fn contains(&self, k: SubgroupId, l: SubgroupId) -> bool {
        k == l || self.pairs.binary_search(&(k, l)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

struct PairSpace<'a> {
    lattice: &'a SubgroupLattice,
    pairs: Vec<(SubgroupId, SubgroupId)>,
    index: HashMap<(SubgroupId, SubgroupId), usize>,
    conjugators: Vec<usize>,
}

impl<'a> PairSpace<'a> {
    fn new(lattice: &'a SubgroupLattice) -> Self {
        let mut pairs = Vec::new();
        for l in 0..lattice.len() {
            for &k in lattice.below(l) {
                if k != l {
                    pairs.push((k, l));
                }
            }
        }
        pairs.sort_unstable();
        let index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        PairSpace {
            lattice,
            pairs,
            index,
            conjugators: lattice.group().generator_indices(),
        }
    }

    fn insert(&self, set: &mut FixedBitSet, queue: &mut Vec<usize>, k: SubgroupId, l: SubgroupId) {
        if k == l {
            return;
        }
        let i = self.index[&(k, l)];
        if !set.contains(i) {
            set.insert(i);
            queue.push(i);
        }
    }

    /// Smallest transfer system containing `seed`.
    fn close(&self, seed: &FixedBitSet) -> FixedBitSet {
        let lattice = self.lattice;
        let mut set = seed.clone();
        let mut queue: Vec<usize> = seed.ones().collect();
        while let Some(i) = queue.pop() {
            let (k, l) = self.pairs[i];
            for &g in &self.conjugators {
                self.insert(&mut set, &mut queue, lattice.conjugate(k, g), lattice.conjugate(l, g));
            }
            for &m in lattice.below(l) {
                self.insert(&mut set, &mut queue, lattice.intersection(k, m), m);
            }
            // compose with every known pair on either side
            let known: Vec<usize> = set.ones().collect();
            for j in known {
                let (a, b) = self.pairs[j];
                if b == k {
                    self.insert(&mut set, &mut queue, a, l);
                }
                if a == l {
                    self.insert(&mut set, &mut queue, k, b);
                }
            }
        }
        set
    }

    fn to_system(&self, set: &FixedBitSet) -> TransferSystem {
        TransferSystem {
            pairs: set.ones().map(|i| self.pairs[i]).collect(),
        }
    }
}

/// All transfer systems on the lattice, in lectic order of their pair sets.
pub fn enumerate_transfer_systems(lattice: &SubgroupLattice, limits: &Limits) -> Result<Vec<TransferSystem>> {
    if lattice.len() > limits.transfer_subgroup_cap {
        return Err(Error::resource(format!(
            "transfer-system enumeration is capped at {} subgroups (lattice has {})",
            limits.transfer_subgroup_cap,
            lattice.len()
        )));
    }
    let space = PairSpace::new(lattice);
    let m = space.pairs.len();
    let mut out = Vec::new();
    let mut current = space.close(&FixedBitSet::with_capacity(m));
    out.push(space.to_system(&current));
    'next: loop {
        for i in (0..m).rev() {
            if current.contains(i) {
                continue;
            }
            let mut seed = FixedBitSet::with_capacity(m);
            seed.extend(current.ones().filter(|&j| j < i));
            seed.insert(i);
            let closed = space.close(&seed);
            if closed.ones().take_while(|&j| j < i).eq(current.ones().take_while(|&j| j < i)) {
                current = closed;
                out.push(space.to_system(&current));
                continue 'next;
            }
        }
        break;
    }
    Ok(out)
}
