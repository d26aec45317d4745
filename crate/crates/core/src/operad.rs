//! N∞-operads presented by their admissible sets.
//!
//! An operad is kept only through its families `F_n(O)` of graph subgroups
//! of `G x Σn`, which are in turn decided by an admissibility oracle on
//! H-sets. Families are materialized per arity on demand and cached.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::gset::{graph_subgroup, hset_structures, GSet, GraphSubgroup, HSetStructure};
use crate::lattice::{ClassId, SubgroupId, SubgroupLattice};
use crate::limits::Limits;

/// A sum of permutation representations `R[S]`, each with infinite
/// multiplicity. The trivial representation is always implicitly present.
#[derive(Clone, Debug)]
pub struct PermutationUniverse {
    generators: Vec<GSet>,
}

impl PermutationUniverse {
    pub fn new(generators: Vec<GSet>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::domain("a universe needs at least one generator"))?;
        if generators.iter().any(|s| !s.group().same_group(first.group())) {
            return Err(Error::domain("universe generators over different groups"));
        }
        Ok(PermutationUniverse { generators })
    }

    /// The universe generated by the orbits `G/K` for the given subgroups.
    pub fn from_orbits(lattice: &SubgroupLattice, stabilizers: &[SubgroupId]) -> Result<Self> {
        let generators = stabilizers
            .iter()
            .map(|&k| GSet::cosets(lattice, k))
            .collect::<Result<Vec<_>>>()?;
        Self::new(generators)
    }

    pub fn generators(&self) -> &[GSet] {
        &self.generators
    }

    pub fn labels(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|s| s.label().unwrap_or("?").to_string())
            .collect()
    }
}

pub type Oracle = dyn Fn(&SubgroupLattice, &HSetStructure) -> bool + Send + Sync;

/// A user-supplied admissibility predicate.
#[derive(Clone)]
pub struct CustomOracle {
    pub name: String,
    oracle: Arc<Oracle>,
}

impl CustomOracle {
    pub fn new(
        name: impl Into<String>,
        oracle: impl Fn(&SubgroupLattice, &HSetStructure) -> bool + Send + Sync + 'static,
    ) -> Self {
        CustomOracle {
            name: name.into(),
            oracle: Arc::new(oracle),
        }
    }
}

impl fmt::Debug for CustomOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CustomOracle({})", self.name)
    }
}

#[derive(Clone, Debug)]
pub enum OperadKind {
    /// `E∞¹`: only trivial H-sets are admissible.
    MinimalE,
    /// `E∞^G`: every H-set is admissible.
    MaximalE,
    /// Little discs or linear isometries on a permutation universe.
    Geometric(PermutationUniverse),
    Custom(CustomOracle),
}

impl OperadKind {
    pub fn name(&self) -> String {
        match self {
            OperadKind::MinimalE => "e1".into(),
            OperadKind::MaximalE => "eG".into(),
            OperadKind::Geometric(u) => format!("geometric[{}]", u.labels().join(",")),
            OperadKind::Custom(c) => format!("custom[{}]", c.name),
        }
    }
}

/// One conjugacy class of admissible graph subgroups in `F_n(O)`.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub class: ClassId,
    pub subgroup: SubgroupId,
    pub hset: HSetStructure,
    pub graph: GraphSubgroup,
}

/// The admissible graph subgroups of `G x Σn`, up to conjugacy.
#[derive(Clone, Debug)]
pub struct Family {
    pub n: usize,
    pub members: Vec<FamilyMember>,
}

pub struct OperadModel {
    lattice: Arc<SubgroupLattice>,
    kind: OperadKind,
    limits: Limits,
    /// Geometric only: orbit counts of each subgroup on each generator.
    orbit_counts: Vec<Vec<usize>>,
    orbit_memo: Mutex<HashMap<(SubgroupId, SubgroupId), bool>>,
    set_memo: Mutex<HashMap<HSetStructure, bool>>,
    families: Mutex<HashMap<usize, Arc<Family>>>,
}

impl fmt::Debug for OperadModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperadModel")
            .field("group", &self.lattice.group().label())
            .field("kind", &self.kind.name())
            .finish()
    }
}

impl OperadModel {
    pub fn new(lattice: Arc<SubgroupLattice>, kind: OperadKind, limits: Limits) -> Result<Self> {
        let orbit_counts = match &kind {
            OperadKind::Geometric(u) => {
                if !u.generators[0].group().same_group(lattice.group()) {
                    return Err(Error::domain("universe is over a different group"));
                }
                u.generators
                    .iter()
                    .map(|s| lattice.subgroups().iter().map(|h| s.orbit_count(h)).collect())
                    .collect()
            }
            _ => Vec::new(),
        };
        Ok(OperadModel {
            lattice,
            kind,
            limits,
            orbit_counts,
            orbit_memo: Mutex::new(HashMap::new()),
            set_memo: Mutex::new(HashMap::new()),
            families: Mutex::new(HashMap::new()),
        })
    }

    pub fn minimal(lattice: Arc<SubgroupLattice>) -> Self {
        Self::new(lattice, OperadKind::MinimalE, Limits::default()).expect("no universe")
    }

    pub fn maximal(lattice: Arc<SubgroupLattice>) -> Self {
        Self::new(lattice, OperadKind::MaximalE, Limits::default()).expect("no universe")
    }

    /// The geometric operad on the universe generated by `G/K` for each
    /// listed subgroup.
    pub fn geometric(lattice: Arc<SubgroupLattice>, stabilizers: &[SubgroupId]) -> Result<Self> {
        let universe = PermutationUniverse::from_orbits(&lattice, stabilizers)?;
        Self::new(lattice, OperadKind::Geometric(universe), Limits::default())
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn kind(&self) -> &OperadKind {
        &self.kind
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Whether the H-set `t` (over `H = t.subgroup()`) is admissible.
    pub fn admissible(&self, t: &HSetStructure) -> bool {
        match &self.kind {
            OperadKind::MinimalE => t.is_trivial(),
            OperadKind::MaximalE => true,
            OperadKind::Geometric(_) => t
                .nontrivial_orbits()
                .all(|k| self.admissible_orbit(t.subgroup(), k)),
            OperadKind::Custom(c) => {
                if let Some(&v) = self.set_memo.lock().expect("memo").get(t) {
                    return v;
                }
                let v = (c.oracle)(&self.lattice, t);
                self.set_memo.lock().expect("memo").insert(t.clone(), v);
                v
            }
        }
    }

    /// Whether the single orbit `H/K` is admissible.
    pub fn admissible_orbit(&self, h: SubgroupId, k: SubgroupId) -> bool {
        if h == k {
            return true;
        }
        match &self.kind {
            OperadKind::MinimalE => false,
            OperadKind::MaximalE => true,
            OperadKind::Geometric(_) => {
                if let Some(&v) = self.orbit_memo.lock().expect("memo").get(&(h, k)) {
                    return v;
                }
                let v = self.embeds(h, k);
                self.orbit_memo.lock().expect("memo").insert((h, k), v);
                v
            }
            OperadKind::Custom(_) => match HSetStructure::orbit(&self.lattice, h, k) {
                Ok(t) => self.admissible(&t),
                Err(_) => false,
            },
        }
    }

    /// `H/K` embeds in the universe iff a vector with stabilizer exactly `K`
    /// exists, i.e. iff for every `K < L <= H` some generator `S` has
    /// strictly fewer `L`-orbits than `K`-orbits.
    fn embeds(&self, h: SubgroupId, k: SubgroupId) -> bool {
        let lattice = &self.lattice;
        lattice.below(h).iter().all(|&l| {
            l == k
                || !lattice.is_contained(k, l)
                || self.orbit_counts.iter().any(|counts| counts[l] < counts[k])
        })
    }

    /// `F_n(O)` as conjugacy classes of admissible graph subgroups.
    pub fn family(&self, n: usize) -> Result<Arc<Family>> {
        if n == 0 {
            return Err(Error::domain("arity must be positive"));
        }
        if n > self.limits.n_max {
            return Err(Error::resource(format!(
                "arity {n} exceeds n_max = {}",
                self.limits.n_max
            )));
        }
        if let Some(f) = self.families.lock().expect("family cache").get(&n) {
            return Ok(f.clone());
        }
        let lattice = &self.lattice;
        let mut members = Vec::new();
        for (c, class) in lattice.classes().iter().enumerate() {
            let h = class.representative;
            let canonical: BTreeSet<HSetStructure> = hset_structures(lattice, h, n)?
                .into_iter()
                .map(|t| t.canonical(lattice))
                .collect();
            for t in canonical {
                if self.admissible(&t) {
                    members.push(FamilyMember {
                        class: c,
                        subgroup: h,
                        graph: graph_subgroup(lattice, &t),
                        hset: t,
                    });
                }
            }
        }
        let family = Arc::new(Family { n, members });
        self.families
            .lock()
            .expect("family cache")
            .insert(n, family.clone());
        Ok(family)
    }

    /// Pairs `K < H` with `H/K` admissible: the transfer system of the operad.
    pub fn transfer_pairs(&self) -> Vec<(SubgroupId, SubgroupId)> {
        let mut out = Vec::new();
        for h in 0..self.lattice.len() {
            for &k in self.lattice.below(h) {
                if k != h && self.admissible_orbit(h, k) {
                    out.push((k, h));
                }
            }
        }
        out
    }

    /// Whether every H-set of size at most `n_max` admissible for `self` is
    /// admissible for `other`.
    pub fn is_contained_in(&self, other: &OperadModel, n_max: usize) -> Result<bool> {
        if !self.lattice.same_group(&other.lattice) {
            return Err(Error::domain("operads over different groups"));
        }
        for h in 0..self.lattice.len() {
            for n in 1..=n_max {
                for t in hset_structures(&self.lattice, h, n)? {
                    if self.admissible(&t) && !other.admissible(&t) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Closure property checked by [`validate_indexing_system`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    TrivialSets,
    Suborbits,
    Restriction,
    Conjugation,
    DisjointUnion,
    MinimalHasNoNorms,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub subgroup: SubgroupId,
    pub hset: HSetStructure,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub n_max: usize,
    pub sets_checked: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the closure properties of the admissible sets of `operad` on all
/// H-sets of size at most `n_max`, for every subgroup `H`.
pub fn validate_indexing_system(operad: &OperadModel, n_max: usize) -> Result<ValidationReport> {
    let lattice = &*operad.lattice;
    let gens = lattice.group().generator_indices();
    let mut violations = Vec::new();
    let mut sets_checked = 0;
    let mut push = |axiom, t: &HSetStructure, detail: String| {
        violations.push(Violation {
            axiom,
            subgroup: t.subgroup(),
            hset: t.clone(),
            detail,
        })
    };
    let minimal = matches!(operad.kind, OperadKind::MinimalE);
    for h in 0..lattice.len() {
        let mut admissible = Vec::new();
        for n in 1..=n_max {
            for t in hset_structures(lattice, h, n)? {
                sets_checked += 1;
                let ok = operad.admissible(&t);
                if t.is_trivial() && !ok {
                    push(Axiom::TrivialSets, &t, "trivial set rejected".into());
                }
                if ok {
                    if minimal && !t.is_trivial() {
                        push(Axiom::MinimalHasNoNorms, &t, "nontrivial set admitted".into());
                    }
                    admissible.push(t);
                }
            }
        }
        for t in &admissible {
            for i in 0..t.orbits().len() {
                if i > 0 && t.orbits()[i] == t.orbits()[i - 1] {
                    continue;
                }
                if let Some(s) = t.without_orbit(lattice, i) {
                    if !operad.admissible(&s) {
                        push(Axiom::Suborbits, t, format!("subset {} rejected", s.label(lattice)));
                    }
                }
            }
            for &k in lattice.below(h) {
                if k == h {
                    continue;
                }
                let r = t.restrict(lattice, k)?;
                if !operad.admissible(&r) {
                    push(
                        Axiom::Restriction,
                        t,
                        format!("restriction {} rejected", r.label(lattice)),
                    );
                }
            }
            for &x in &gens {
                let c = t.conjugate(lattice, x);
                if !operad.admissible(&c) {
                    push(
                        Axiom::Conjugation,
                        t,
                        format!("conjugate {} rejected", c.label(lattice)),
                    );
                }
            }
        }
        for (i, a) in admissible.iter().enumerate() {
            for b in &admissible[i..] {
                if a.size() + b.size() > n_max {
                    continue;
                }
                let u = a.union(b)?;
                if !operad.admissible(&u) {
                    push(
                        Axiom::DisjointUnion,
                        a,
                        format!("union with {} rejected", b.label(lattice)),
                    );
                }
            }
        }
    }
    Ok(ValidationReport {
        n_max,
        sets_checked,
        violations,
    })
}
