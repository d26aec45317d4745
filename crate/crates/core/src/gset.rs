//! Finite G-sets, fixed points, H-set structures of size n and the graph
//! subgroups of `G x Σn` they determine.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::{Subgroup, SubgroupId, SubgroupLattice, WeylGroup};
use crate::perm::Perm;

/// A finite G-set with an explicit action table.
#[derive(Clone)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    size: usize,
    action: Vec<u32>,
    label: Option<String>,
}

impl GSet {
    /// Builds a G-set from an action function, checking that the identity
    /// acts trivially and that the action is compatible with products.
    pub fn new(
        group: Arc<FiniteGroup>,
        size: usize,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut action = Vec::with_capacity(group.order() * size);
        for g in 0..group.order() {
            for x in 0..size {
                let y = act(g, x);
                if y >= size {
                    return Err(Error::domain(format!("action sends {x} outside the set")));
                }
                action.push(y as u32);
            }
        }
        let set = GSet {
            group,
            size,
            action,
            label: None,
        };
        set.validate()?;
        Ok(set)
    }

    fn validate(&self) -> Result<()> {
        let g = &*self.group;
        for x in 0..self.size {
            if self.act(FiniteGroup::IDENTITY, x) != x {
                return Err(Error::domain("identity does not act trivially"));
            }
        }
        for s in g.generator_indices() {
            for a in 0..g.order() {
                let gs = g.mul(a, s);
                for x in 0..self.size {
                    if self.act(gs, x) != self.act(a, self.act(s, x)) {
                        return Err(Error::domain("action is not compatible with products"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Left cosets `G/K`, ordered by their least element.
    pub fn cosets(lattice: &SubgroupLattice, k: SubgroupId) -> Result<Self> {
        lattice.check_id(k)?;
        let group = lattice.group().clone();
        let (coset_of, reps) = left_cosets(&group, group.order(), lattice.subgroup(k));
        let g = &*group;
        let mut action = Vec::with_capacity(g.order() * reps.len());
        for x in 0..g.order() {
            for &r in &reps {
                action.push(coset_of[g.mul(x, r)]);
            }
        }
        Ok(GSet {
            size: reps.len(),
            action,
            label: Some(format!("{}/{}", group.label(), lattice.label(k))),
            group,
        })
    }

    /// `n` fixed points.
    pub fn trivial(group: Arc<FiniteGroup>, n: usize) -> Self {
        let action = (0..group.order())
            .flat_map(|_| 0..n as u32)
            .collect();
        GSet {
            group,
            size: n,
            action,
            label: None,
        }
    }

    pub fn disjoint_union(parts: &[GSet]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::domain("empty disjoint union"))?;
        let group = first.group.clone();
        if parts.iter().any(|p| !p.group.same_group(&group)) {
            return Err(Error::domain("G-sets over different groups"));
        }
        let size: usize = parts.iter().map(|p| p.size).sum();
        let mut action = Vec::with_capacity(group.order() * size);
        for g in 0..group.order() {
            let mut offset = 0;
            for p in parts {
                action.extend((0..p.size).map(|x| (p.act(g, x) + offset) as u32));
                offset += p.size;
            }
        }
        let label = parts
            .iter()
            .map(|p| p.label.clone().unwrap_or_else(|| "?".into()))
            .collect::<Vec<_>>()
            .join(" + ");
        Ok(GSet {
            group,
            size,
            action,
            label: Some(label),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    /// Orbits of the whole group, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        self.orbits_under(&self.group.generator_indices())
    }

    fn orbits_under(&self, generators: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for &g in generators {
                    let y = self.act(g, x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Number of orbits of the subgroup `h` (the dimension of the
    /// `h`-fixed subspace of the permutation representation).
    pub fn orbit_count(&self, h: &Subgroup) -> usize {
        self.orbits_under(h.generators()).len()
    }

    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| self.act(g, x) == x).collect()
    }

    /// Points fixed by every element of `h`.
    pub fn fixed_by(&self, h: &Subgroup) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| h.generators().iter().all(|&g| self.act(g, x) == x))
            .collect()
    }
}

impl fmt::Debug for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GSet")
            .field("label", &self.label)
            .field("size", &self.size)
            .finish()
    }
}

/// `coset_of[x]` for every `x` in `0..universe` that lies in a coset
/// (others map to `u32::MAX`), plus the least element of each coset.
fn left_cosets(g: &FiniteGroup, universe: usize, k: &Subgroup) -> (Vec<u32>, Vec<usize>) {
    let mut coset_of = vec![u32::MAX; universe];
    let mut reps = Vec::new();
    for x in 0..universe {
        if coset_of[x] == u32::MAX {
            for y in k.members() {
                coset_of[g.mul(x, y)] = reps.len() as u32;
            }
            reps.push(x);
        }
    }
    (coset_of, reps)
}

/// `X^H` with the residual action of `W_G(H)`.
#[derive(Debug, Clone)]
pub struct FixedPoints {
    pub subgroup: SubgroupId,
    /// Points of the original set, ascending.
    pub points: Vec<usize>,
    pub weyl: Arc<WeylGroup>,
    /// The fixed points as a `W_G(H)`-set, indexed like `points`.
    pub action: GSet,
}

pub fn fixed_points(x: &GSet, lattice: &SubgroupLattice, h: SubgroupId) -> Result<FixedPoints> {
    lattice.check_id(h)?;
    if !x.group.same_group(lattice.group()) {
        return Err(Error::domain("G-set and subgroup belong to different groups"));
    }
    let points = x.fixed_by(lattice.subgroup(h));
    let weyl = lattice.weyl_group(h)?;
    let normalizer = lattice.subgroup(weyl.normalizer);
    let mut lift = vec![usize::MAX; weyl.group.order()];
    for n in normalizer.members() {
        let w = weyl.project(n).expect("normalizer element");
        if lift[w] == usize::MAX {
            lift[w] = n;
        }
    }
    let position: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let action = GSet::new(weyl.group.clone(), points.len(), |w, i| {
        position[&x.act(lift[w], points[i])]
    })?;
    Ok(FixedPoints {
        subgroup: h,
        points,
        weyl,
        action,
    })
}

/// An H-set of size n up to isomorphism: a multiset of orbit types `H/K`,
/// each `K` the representative of its `H`-conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HSetStructure {
    subgroup: SubgroupId,
    orbits: Vec<SubgroupId>,
    size: usize,
}

impl HSetStructure {
    /// Normalizes the stabilizers to `H`-class representatives.
    pub fn new(lattice: &SubgroupLattice, h: SubgroupId, stabilizers: &[SubgroupId]) -> Result<Self> {
        lattice.check_id(h)?;
        let mut orbits = Vec::with_capacity(stabilizers.len());
        for &k in stabilizers {
            lattice.check_id(k)?;
            if !lattice.is_contained(k, h) {
                return Err(Error::domain(format!(
                    "{} is not a subgroup of {}",
                    lattice.label(k),
                    lattice.label(h)
                )));
            }
            orbits.push(lattice.representative_within(h, k));
        }
        if orbits.is_empty() {
            return Err(Error::domain("an H-set structure needs at least one orbit"));
        }
        orbits.sort_unstable();
        let size = orbits.iter().map(|&k| lattice.index(k, h)).sum();
        Ok(HSetStructure {
            subgroup: h,
            orbits,
            size,
        })
    }

    pub fn orbit(lattice: &SubgroupLattice, h: SubgroupId, k: SubgroupId) -> Result<Self> {
        Self::new(lattice, h, &[k])
    }

    pub fn trivial(lattice: &SubgroupLattice, h: SubgroupId, n: usize) -> Result<Self> {
        Self::new(lattice, h, &vec![h; n])
    }

    pub fn subgroup(&self) -> SubgroupId {
        self.subgroup
    }

    /// Stabilizer representatives, one per orbit, ascending.
    pub fn orbits(&self) -> &[SubgroupId] {
        &self.orbits
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.orbits.iter().all(|&k| k == self.subgroup)
    }

    /// Orbits other than fixed points.
    pub fn nontrivial_orbits(&self) -> impl Iterator<Item = SubgroupId> + '_ {
        self.orbits.iter().copied().filter(move |&k| k != self.subgroup)
    }

    pub fn union(&self, other: &HSetStructure) -> Result<Self> {
        if self.subgroup != other.subgroup {
            return Err(Error::domain("disjoint union of sets over different subgroups"));
        }
        let mut orbits = self.orbits.clone();
        orbits.extend_from_slice(&other.orbits);
        orbits.sort_unstable();
        Ok(HSetStructure {
            subgroup: self.subgroup,
            orbits,
            size: self.size + other.size,
        })
    }

    /// The set with the orbit at position `i` removed; `None` if that would
    /// leave the empty set.
    pub fn without_orbit(&self, lattice: &SubgroupLattice, i: usize) -> Option<Self> {
        if self.orbits.len() < 2 {
            return None;
        }
        let mut orbits = self.orbits.clone();
        let k = orbits.remove(i);
        Some(HSetStructure {
            subgroup: self.subgroup,
            orbits,
            size: self.size - lattice.index(k, self.subgroup),
        })
    }

    /// Restriction along `K <= H`.
    pub fn restrict(&self, lattice: &SubgroupLattice, k: SubgroupId) -> Result<Self> {
        if !lattice.is_contained(k, self.subgroup) {
            return Err(Error::domain("restriction to a subgroup not contained in H"));
        }
        let g = &**lattice.group();
        let h = lattice.subgroup(self.subgroup);
        let ks = lattice.subgroup(k);
        let mut stabilizers = Vec::new();
        for &l in &self.orbits {
            let (coset_of, reps) = left_cosets_within(g, h, lattice.subgroup(l));
            let mut seen = vec![false; reps.len()];
            for (c, &r) in reps.iter().enumerate() {
                if seen[c] {
                    continue;
                }
                for y in ks.members() {
                    seen[coset_of[&g.mul(y, r)]] = true;
                }
                // stabilizer in K of rL is K ∩ rLr^-1
                let conj = lattice.conjugate(l, r);
                stabilizers.push(lattice.intersection(k, conj));
            }
        }
        Self::new(lattice, k, &stabilizers)
    }

    /// Transport along conjugation by `g`: an H-set becomes a `gHg^-1`-set.
    pub fn conjugate(&self, lattice: &SubgroupLattice, g: usize) -> Self {
        let h2 = lattice.conjugate(self.subgroup, g);
        let stabilizers: Vec<_> = self.orbits.iter().map(|&k| lattice.conjugate(k, g)).collect();
        Self::new(lattice, h2, &stabilizers).expect("conjugate of a subgroup chain")
    }

    /// Least form under twisting by the normalizer of `H`; two structures
    /// give conjugate graph subgroups of `G x Σn` iff these agree.
    pub fn canonical(&self, lattice: &SubgroupLattice) -> Self {
        let n = lattice.subgroup(lattice.normalizer(self.subgroup));
        n.members()
            .map(|x| self.conjugate(lattice, x))
            .min()
            .expect("normalizer is nonempty")
    }

    /// Label such as `[C2/1]` or `[C2/C2 + C2/C2]`.
    pub fn label(&self, lattice: &SubgroupLattice) -> String {
        let parts: Vec<String> = self
            .orbits
            .iter()
            .map(|&k| orbit_label(lattice, self.subgroup, k))
            .collect();
        format!("[{}]", parts.join(" + "))
    }
}

/// `H/K`, disambiguating `H`-classes that share a `G`-class label.
pub fn orbit_label(lattice: &SubgroupLattice, h: SubgroupId, k: SubgroupId) -> String {
    let within = lattice.classes_within(h);
    let k_label = lattice.label(k);
    let same: Vec<SubgroupId> = within
        .iter()
        .map(|c| c[0])
        .filter(|&r| lattice.label(r) == k_label)
        .collect();
    let k_rep = lattice.representative_within(h, k);
    if same.len() > 1 {
        let pos = same.iter().position(|&r| r == k_rep).expect("k in h");
        format!("{}/{}~{}", lattice.label(h), k_label, pos + 1)
    } else {
        format!("{}/{}", lattice.label(h), k_label)
    }
}

fn left_cosets_within(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> (HashMap<usize, usize>, Vec<usize>) {
    let mut coset_of = HashMap::new();
    let mut reps = Vec::new();
    for x in h.members() {
        if !coset_of.contains_key(&x) {
            for y in k.members() {
                coset_of.insert(g.mul(x, y), reps.len());
            }
            reps.push(x);
        }
    }
    (coset_of, reps)
}

/// All H-sets of size `n` up to isomorphism.
pub fn hset_structures(lattice: &SubgroupLattice, h: SubgroupId, n: usize) -> Result<Vec<HSetStructure>> {
    lattice.check_id(h)?;
    if n == 0 {
        return Err(Error::domain("H-set size must be positive"));
    }
    let types: Vec<(SubgroupId, usize)> = lattice
        .classes_within(h)
        .iter()
        .map(|c| (c[0], lattice.index(c[0], h)))
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(&types, 0, n, &mut current, &mut |orbits| {
        out.push(HSetStructure {
            subgroup: h,
            orbits: orbits.to_vec(),
            size: n,
        })
    });
    out.sort();
    Ok(out)
}

fn fill(
    types: &[(SubgroupId, usize)],
    from: usize,
    remaining: usize,
    current: &mut Vec<SubgroupId>,
    emit: &mut impl FnMut(&[SubgroupId]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for t in from..types.len() {
        let (k, size) = types[t];
        if size <= remaining {
            current.push(k);
            fill(types, t, remaining - size, current, emit);
            current.pop();
        }
    }
}

/// The graph `{(h, f(h))}` of the homomorphism `f: H -> Σn` encoding an
/// H-set structure.
#[derive(Clone, Debug)]
pub struct GraphSubgroup {
    hset: HSetStructure,
    pairs: Vec<(usize, Perm)>,
}

/// Realizes the graph subgroup of an H-set structure. Points are laid out
/// orbit by orbit; within an orbit `H/K` the cosets are ordered by their
/// least element.
pub fn graph_subgroup(lattice: &SubgroupLattice, hset: &HSetStructure) -> GraphSubgroup {
    let g = &**lattice.group();
    let h = lattice.subgroup(hset.subgroup);
    let blocks: Vec<_> = hset
        .orbits
        .iter()
        .map(|&k| left_cosets_within(g, h, lattice.subgroup(k)))
        .collect();
    let pairs: Vec<(usize, Perm)> = h
        .members()
        .map(|x| {
            let mut images = Vec::with_capacity(hset.size);
            let mut offset = 0;
            for (coset_of, reps) in &blocks {
                images.extend(reps.iter().map(|&r| (offset + coset_of[&g.mul(x, r)]) as u32));
                offset += reps.len();
            }
            (x, Perm::from_images(images).expect("H permutes its cosets"))
        })
        .collect();
    let graph = GraphSubgroup {
        hset: hset.clone(),
        pairs,
    };
    assert!(graph.meets_sigma_trivially(), "graph subgroups are admissible");
    graph
}

impl GraphSubgroup {
    pub fn hset(&self) -> &HSetStructure {
        &self.hset
    }

    /// Elements `(h, f(h))`, ordered by `h`.
    pub fn pairs(&self) -> &[(usize, Perm)] {
        &self.pairs
    }

    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    pub fn degree(&self) -> usize {
        self.hset.size
    }

    /// `p_G(Γ)`.
    pub fn projection(&self) -> SubgroupId {
        self.hset.subgroup
    }

    /// `Γ ∩ ({e} x Σn) = {(e, e)}`.
    pub fn meets_sigma_trivially(&self) -> bool {
        self.pairs
            .iter()
            .filter(|(x, _)| *x == FiniteGroup::IDENTITY)
            .all(|(_, p)| p.is_identity())
    }

    /// Whether `Γ = p_G(Γ) x {e}`.
    pub fn is_product_with_trivial(&self) -> bool {
        self.pairs.iter().all(|(_, p)| p.is_identity())
    }

    pub fn image(&self, element: usize) -> Option<&Perm> {
        self.pairs
            .binary_search_by_key(&element, |(x, _)| *x)
            .ok()
            .map(|i| &self.pairs[i].1)
    }
}
