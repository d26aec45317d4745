//! Subgroups, conjugacy classes of subgroups, normalizers, Weyl groups and
//! the Möbius function of the subgroup lattice.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;
use crate::perm::Perm;

/// Index of a subgroup inside its [`SubgroupLattice`].
pub type SubgroupId = usize;
/// Index of a conjugacy class of subgroups inside its [`SubgroupLattice`].
pub type ClassId = usize;

/// A subgroup of a [`FiniteGroup`], stored as a sorted set of element indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<u32>,
    bits: FixedBitSet,
    generators: Vec<usize>,
}

impl Subgroup {
    /// The subgroup generated by the given elements.
    pub fn generated_by(group: &FiniteGroup, generators: &[usize]) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert(FiniteGroup::IDENTITY);
        Self::close(group, bits, vec![FiniteGroup::IDENTITY], generators.to_vec())
    }

    /// `<self, extra>`.
    pub fn join_element(&self, group: &FiniteGroup, extra: usize) -> Subgroup {
        let mut gens = self.generators.clone();
        gens.push(extra);
        let queue = self.members.iter().map(|&m| m as usize).collect();
        Self::close(group, self.bits.clone(), queue, gens)
    }

    fn close(
        group: &FiniteGroup,
        mut bits: FixedBitSet,
        queue: Vec<usize>,
        generators: Vec<usize>,
    ) -> Subgroup {
        let mut queue: VecDeque<usize> = queue.into();
        while let Some(x) = queue.pop_front() {
            for &g in &generators {
                let y = group.mul(x, g);
                if !bits.contains(y) {
                    bits.insert(y);
                    queue.push_back(y);
                }
            }
        }
        let members = bits.ones().map(|i| i as u32).collect();
        let generators = generators
            .into_iter()
            .filter(|&g| g != FiniteGroup::IDENTITY)
            .collect();
        Subgroup {
            members,
            bits,
            generators,
        }
    }

    /// Validates an explicit member set: it must contain the identity and be
    /// closed under products and inverses.
    pub fn from_members(group: &FiniteGroup, members: &[usize]) -> Result<Subgroup> {
        let mut bits = FixedBitSet::with_capacity(group.order());
        for &m in members {
            if m >= group.order() {
                return Err(Error::domain(format!("element {m} is not in the group")));
            }
            bits.insert(m);
        }
        if !bits.contains(FiniteGroup::IDENTITY) {
            return Err(Error::domain("member set lacks the identity"));
        }
        for a in bits.ones() {
            if !bits.contains(group.inv(a)) {
                return Err(Error::domain("member set is not closed under inverses"));
            }
            for b in bits.ones() {
                if !bits.contains(group.mul(a, b)) {
                    return Err(Error::domain("member set is not closed under products"));
                }
            }
        }
        let mut gens: Vec<usize> = Vec::new();
        let mut span = Subgroup::generated_by(group, &gens);
        for m in bits.ones() {
            if !span.contains(m) {
                gens.push(m);
                span = span.join_element(group, m);
            }
        }
        Ok(span)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.members.iter().map(|&m| m as usize)
    }

    pub fn contains(&self, element: usize) -> bool {
        self.bits.contains(element)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    fn sort_key(&self) -> (usize, &[u32]) {
        (self.members.len(), &self.members)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

/// One conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    /// Member with the lexicographically least member set.
    pub representative: SubgroupId,
    pub members: Vec<SubgroupId>,
    pub order: usize,
    pub label: String,
}

/// The quotient `N_G(H)/H` acting on the cosets of `H` in its normalizer.
pub struct WeylGroup {
    pub subgroup: SubgroupId,
    pub normalizer: SubgroupId,
    pub group: Arc<FiniteGroup>,
    projection: Vec<u32>,
}

impl WeylGroup {
    /// Image in the Weyl group of an element of the normalizer.
    pub fn project(&self, element: usize) -> Option<usize> {
        match self.projection[element] {
            u32::MAX => None,
            w => Some(w as usize),
        }
    }
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("subgroup", &self.subgroup)
            .field("normalizer", &self.normalizer)
            .field("group", &self.group)
            .finish()
    }
}

/// All subgroups of a finite group with their conjugacy classes, inclusion
/// order, normalizers and Möbius function.
///
/// Subgroups are sorted by order and then by member set, and classes by
/// their representatives, so every index is deterministic.
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<FixedBitSet, SubgroupId>,
    class_of: Vec<ClassId>,
    classes: Vec<SubgroupClass>,
    below: Vec<Vec<SubgroupId>>,
    mobius: Vec<i64>,
    normalizers: Vec<SubgroupId>,
    subconjugate: Vec<FixedBitSet>,
    within: Vec<OnceLock<Arc<Vec<Vec<SubgroupId>>>>>,
    weyl: Vec<OnceLock<Arc<WeylGroup>>>,
}

/// Enumerates every subgroup of `group`.
///
/// Starts from the cyclic subgroups and repeatedly joins each newly found
/// subgroup with every cyclic subgroup it does not contain; every subgroup
/// is the join of its cyclic subgroups, so the process is exhaustive.
pub fn enumerate_subgroups(group: Arc<FiniteGroup>, limits: &Limits) -> Result<SubgroupLattice> {
    if group.order() > limits.subgroup_order_cap {
        return Err(Error::resource(format!(
            "subgroup enumeration is capped at order {} (group has order {})",
            limits.subgroup_order_cap,
            group.order()
        )));
    }
    let g = &*group;
    let mut found: Vec<Subgroup> = Vec::new();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut cyclic_generators = Vec::new();
    for x in 0..g.order() {
        let c = Subgroup::generated_by(g, &[x]);
        if !seen.contains_key(&c.bits) {
            seen.insert(c.bits.clone(), found.len());
            found.push(c);
            cyclic_generators.push(x);
        }
    }
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &h in &frontier {
            for &x in &cyclic_generators {
                if found[h].contains(x) {
                    continue;
                }
                let joined = found[h].join_element(g, x);
                if !seen.contains_key(&joined.bits) {
                    seen.insert(joined.bits.clone(), found.len());
                    next.push(found.len());
                    found.push(joined);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(SubgroupLattice::from_subgroups(group, found))
}

impl SubgroupLattice {
    /// Convenience constructor returning a shared lattice.
    pub fn new(group: FiniteGroup, limits: &Limits) -> Result<Arc<Self>> {
        enumerate_subgroups(Arc::new(group), limits).map(Arc::new)
    }

    fn from_subgroups(group: Arc<FiniteGroup>, subgroups: Vec<Subgroup>) -> Self {
        let g = &*group;
        let s = subgroups.len();
        let lookup: HashMap<FixedBitSet, SubgroupId> = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.bits.clone(), i))
            .collect();

        // conjugacy classes: orbits of the generators acting by conjugation
        let gens = g.generator_indices();
        let mut class_of = vec![usize::MAX; s];
        let mut classes: Vec<SubgroupClass> = Vec::new();
        for start in 0..s {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut k = 0;
            while k < members.len() {
                let h = members[k];
                for &x in &gens {
                    let c = conjugate_in(g, &lookup, &subgroups[h], x);
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        members.push(c);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(SubgroupClass {
                representative: start,
                order: subgroups[start].order(),
                members,
                label: String::new(),
            });
        }

        let below: Vec<Vec<SubgroupId>> = (0..s)
            .map(|h| {
                (0..=h)
                    .filter(|&k| {
                        subgroups[h].order().is_multiple_of(subgroups[k].order())
                            && subgroups[k].is_subset(&subgroups[h])
                    })
                    .collect()
            })
            .collect();

        // mu(K, H) by the recursion over the interval [K, H]
        let mut mobius = vec![0i64; s * s];
        let mut above: Vec<Vec<SubgroupId>> = vec![Vec::new(); s];
        for (h, ks) in below.iter().enumerate() {
            for &k in ks {
                above[k].push(h);
            }
        }
        for k in 0..s {
            mobius[k * s + k] = 1;
            for &h in &above[k] {
                if h == k {
                    continue;
                }
                let sum: i64 = below[h]
                    .iter()
                    .filter(|&&m| m != h && subgroups[k].is_subset(&subgroups[m]))
                    .map(|&m| mobius[k * s + m])
                    .sum();
                mobius[k * s + h] = -sum;
            }
        }

        let normalizers: Vec<SubgroupId> = subgroups
            .iter()
            .map(|h| {
                let normal: Vec<usize> = (0..g.order())
                    .filter(|&x| h.generators.iter().all(|&y| h.contains(g.conjugate(x, y))))
                    .collect();
                let mut bits = FixedBitSet::with_capacity(g.order());
                bits.extend(normal);
                lookup[&bits]
            })
            .collect();

        let mut subconjugate = vec![FixedBitSet::with_capacity(classes.len()); classes.len()];
        for (d, class) in classes.iter().enumerate() {
            for &k in &below[class.representative] {
                subconjugate[d].insert(class_of[k]);
            }
        }

        let mut lattice = SubgroupLattice {
            within: (0..s).map(|_| OnceLock::new()).collect(),
            weyl: (0..s).map(|_| OnceLock::new()).collect(),
            group,
            subgroups,
            lookup,
            class_of,
            classes,
            below,
            mobius,
            normalizers,
            subconjugate,
        };
        lattice.assign_labels();
        lattice
    }

    fn assign_labels(&mut self) {
        let whole = self.subgroups.len() - 1;
        let bases: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                if c.representative == whole {
                    if let Some(name) = self.group.name() {
                        return name.to_string();
                    }
                }
                structure_name(&self.group, &self.subgroups[c.representative])
            })
            .collect();
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for b in &bases {
            *counts.entry(b).or_default() += 1;
        }
        let mut used: HashMap<&str, usize> = HashMap::new();
        let labels: Vec<String> = bases
            .iter()
            .map(|b| {
                if counts[b.as_str()] == 1 {
                    b.clone()
                } else {
                    let k = used.entry(b).or_default();
                    *k += 1;
                    format!("{b}{}", suffix(*k))
                }
            })
            .collect();
        for (c, l) in self.classes.iter_mut().zip(labels) {
            c.label = l;
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroup(&self, id: SubgroupId) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn trivial(&self) -> SubgroupId {
        0
    }

    pub fn whole(&self) -> SubgroupId {
        self.subgroups.len() - 1
    }

    /// Id of the subgroup with the given member set, if it is one.
    pub fn find(&self, members: &FixedBitSet) -> Option<SubgroupId> {
        self.lookup.get(members).copied()
    }

    pub fn check_id(&self, id: SubgroupId) -> Result<()> {
        if id < self.subgroups.len() {
            Ok(())
        } else {
            Err(Error::domain(format!("subgroup #{id} is not in the lattice")))
        }
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, c: ClassId) -> &SubgroupClass {
        &self.classes[c]
    }

    pub fn class_of(&self, id: SubgroupId) -> ClassId {
        self.class_of[id]
    }

    pub fn representative(&self, c: ClassId) -> SubgroupId {
        self.classes[c].representative
    }

    pub fn label(&self, id: SubgroupId) -> &str {
        &self.classes[self.class_of[id]].label
    }

    /// Looks up a class by label (case-insensitive), by `#index`, or by the
    /// aliases `1`/`e` (trivial subgroup) and `G` (whole group).
    pub fn find_class(&self, label: &str) -> Result<ClassId> {
        let label = label.trim();
        if let Some(k) = label.strip_prefix('#') {
            return k
                .parse::<usize>()
                .ok()
                .filter(|&k| k < self.classes.len())
                .ok_or_else(|| Error::domain(format!("no subgroup class {label}")));
        }
        if let Some(c) = self
            .classes
            .iter()
            .position(|c| c.label.eq_ignore_ascii_case(label))
        {
            return Ok(c);
        }
        match label {
            "1" | "e" | "E" => Ok(0),
            "G" | "g" => Ok(self.classes.len() - 1),
            _ if self.group.name().is_some_and(|n| n.eq_ignore_ascii_case(label)) => {
                Ok(self.classes.len() - 1)
            }
            _ => Err(Error::domain(format!(
                "no subgroup class labelled {label:?} in {}",
                self.group.label()
            ))),
        }
    }

    /// `K <= H`.
    pub fn is_contained(&self, k: SubgroupId, h: SubgroupId) -> bool {
        self.subgroups[k].is_subset(&self.subgroups[h])
    }

    /// Subgroups of `h` (including `h`), ascending.
    pub fn below(&self, h: SubgroupId) -> &[SubgroupId] {
        &self.below[h]
    }

    /// Whether some member of class `c` lies in some member of class `d`.
    pub fn is_subconjugate(&self, c: ClassId, d: ClassId) -> bool {
        self.subconjugate[d].contains(c)
    }

    /// `g H g^-1`.
    pub fn conjugate(&self, h: SubgroupId, g: usize) -> SubgroupId {
        conjugate_in(&self.group, &self.lookup, &self.subgroups[h], g)
    }

    pub fn intersection(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let mut bits = self.subgroups[a].bits.clone();
        bits.intersect_with(&self.subgroups[b].bits);
        self.lookup[&bits]
    }

    pub fn normalizer(&self, h: SubgroupId) -> SubgroupId {
        self.normalizers[h]
    }

    /// Möbius function of the subgroup lattice.
    pub fn mobius(&self, k: SubgroupId, h: SubgroupId) -> Result<i64> {
        self.check_id(k)?;
        self.check_id(h)?;
        if !self.is_contained(k, h) {
            return Err(Error::domain(format!(
                "subgroup #{k} is not contained in subgroup #{h}"
            )));
        }
        Ok(self.mobius[k * self.subgroups.len() + h])
    }

    /// Index `[H : K]` for `K <= H`.
    pub fn index(&self, k: SubgroupId, h: SubgroupId) -> usize {
        self.subgroups[h].order() / self.subgroups[k].order()
    }

    /// Partition of the subgroups of `h` into `h`-conjugacy classes. Each
    /// class is sorted and its first entry is the representative; classes
    /// are sorted by representative.
    pub fn classes_within(&self, h: SubgroupId) -> Arc<Vec<Vec<SubgroupId>>> {
        self.within[h]
            .get_or_init(|| {
                let hs = &self.subgroups[h];
                let mut assigned: HashMap<SubgroupId, usize> = HashMap::new();
                let mut out: Vec<Vec<SubgroupId>> = Vec::new();
                for &k in &self.below[h] {
                    if assigned.contains_key(&k) {
                        continue;
                    }
                    let id = out.len();
                    let mut members = vec![k];
                    assigned.insert(k, id);
                    let mut i = 0;
                    while i < members.len() {
                        let m = members[i];
                        for &x in hs.generators() {
                            let c = self.conjugate(m, x);
                            if let std::collections::hash_map::Entry::Vacant(e) = assigned.entry(c) {
                                e.insert(id);
                                members.push(c);
                            }
                        }
                        i += 1;
                    }
                    members.sort_unstable();
                    out.push(members);
                }
                Arc::new(out)
            })
            .clone()
    }

    /// Representative of the `h`-conjugacy class of `k <= h`.
    pub fn representative_within(&self, h: SubgroupId, k: SubgroupId) -> SubgroupId {
        self.classes_within(h)
            .iter()
            .find(|c| c.binary_search(&k).is_ok())
            .map(|c| c[0])
            .expect("subgroup of h")
    }

    /// `W_G(H) = N_G(H)/H` as a permutation group on the cosets of `H` in
    /// its normalizer.
    pub fn weyl_group(&self, h: SubgroupId) -> Result<Arc<WeylGroup>> {
        self.check_id(h)?;
        Ok(self.weyl[h].get_or_init(|| Arc::new(self.build_weyl(h))).clone())
    }

    fn build_weyl(&self, h: SubgroupId) -> WeylGroup {
        let g = &*self.group;
        let hs = &self.subgroups[h];
        let n = self.normalizers[h];
        let ns = &self.subgroups[n];
        let mut coset_of = vec![u32::MAX; g.order()];
        let mut reps = Vec::new();
        for x in ns.members() {
            if coset_of[x] == u32::MAX {
                for y in hs.members() {
                    coset_of[g.mul(x, y)] = reps.len() as u32;
                }
                reps.push(x);
            }
        }
        let degree = reps.len();
        let action = |x: usize| {
            Perm::from_images(reps.iter().map(|&r| coset_of[g.mul(x, r)]).collect())
                .expect("normalizer permutes cosets")
        };
        let gens: Vec<Perm> = ns.generators().iter().map(|&x| action(x)).collect();
        let limits = Limits {
            order_cap: usize::MAX,
            ..Limits::default()
        };
        let name = format!("W({})", self.label(h));
        let weyl = FiniteGroup::from_generators(degree, gens, Some(name), &limits)
            .expect("quotient of a finite group");
        let mut projection = vec![u32::MAX; g.order()];
        for x in ns.members() {
            projection[x] = weyl.index_of(&action(x)).expect("image in quotient") as u32;
        }
        WeylGroup {
            subgroup: h,
            normalizer: n,
            group: Arc::new(weyl),
            projection,
        }
    }

    /// Covering pairs `(K, H)` of the inclusion order.
    pub fn hasse_covers(&self) -> Vec<(SubgroupId, SubgroupId)> {
        let mut out = Vec::new();
        for h in 0..self.len() {
            for &k in &self.below[h] {
                if k == h {
                    continue;
                }
                let covered = !self.below[h]
                    .iter()
                    .any(|&m| m != h && m != k && self.is_contained(k, m));
                if covered {
                    out.push((k, h));
                }
            }
        }
        out
    }

    /// Same underlying group as `other`.
    pub fn same_group(&self, other: &SubgroupLattice) -> bool {
        std::ptr::eq(self, other) || self.group.same_group(&other.group)
    }
}

impl fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group)
            .field("subgroups", &self.subgroups.len())
            .field(
                "classes",
                &self.classes.iter().map(|c| c.label.as_str()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

fn conjugate_in(
    g: &FiniteGroup,
    lookup: &HashMap<FixedBitSet, SubgroupId>,
    h: &Subgroup,
    x: usize,
) -> SubgroupId {
    let mut bits = FixedBitSet::with_capacity(g.order());
    bits.extend(h.members().map(|y| g.conjugate(x, y)));
    lookup[&bits]
}

fn suffix(k: usize) -> String {
    let mut k = k;
    let mut s = Vec::new();
    while k > 0 {
        k -= 1;
        s.push(b'a' + (k % 26) as u8);
        k /= 26;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

/// A short isomorphism-type guess from order statistics; labels are only
/// used for display and lookup, never for isomorphism decisions.
fn structure_name(g: &FiniteGroup, h: &Subgroup) -> String {
    let n = h.order();
    if n == 1 {
        return "1".into();
    }
    let orders: Vec<usize> = h.members().map(|x| g.element_order(x)).collect();
    let max = orders.iter().copied().max().unwrap_or(1);
    if max == n {
        return format!("C{n}");
    }
    let gens = h.generators();
    let abelian = gens
        .iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    if abelian {
        if max == 2 {
            return if n == 4 { "V4".into() } else { format!("E{n}") };
        }
        return format!("Ab{n}");
    }
    if n == 8 && involutions == 1 {
        return "Q8".into();
    }
    if max == n / 2 && involutions >= n / 2 {
        return if n == 6 { "S3".into() } else { format!("D{}", n / 2) };
    }
    match (n, max, involutions) {
        (12, 3, 3) => "A4".into(),
        (24, 4, 9) => "S4".into(),
        (60, 5, 15) => "A5".into(),
        (120, 6, 25) => "S5".into(),
        (20, 5, 5) => "F20".into(),
        _ => format!("G{n}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn lattice(name: &str) -> Arc<SubgroupLattice> {
        let l = Limits::default();
        SubgroupLattice::new(catalog::parse_group(name, &l).unwrap(), &l).unwrap()
    }

    fn labels(l: &SubgroupLattice) -> Vec<&str> {
        l.classes().iter().map(|c| c.label.as_str()).collect()
    }

    #[test]
    fn trivial_group() {
        let l = lattice("C1");
        assert_eq!(l.len(), 1);
        assert_eq!(l.classes().len(), 1);
    }

    #[test]
    fn c6_and_s3_counts() {
        let c6 = lattice("C6");
        assert_eq!(c6.len(), 4);
        assert_eq!(labels(&c6), ["1", "C2", "C3", "C6"]);
        let s3 = lattice("S3");
        assert_eq!(s3.len(), 6);
        assert_eq!(labels(&s3), ["1", "C2", "C3", "S3"]);
        assert_eq!(s3.class(1).members.len(), 3);
    }

    #[test]
    fn s4_labels_are_unique() {
        let s4 = lattice("S4");
        assert_eq!(s4.len(), 30);
        assert_eq!(s4.classes().len(), 11);
        let ls = labels(&s4);
        let mut dedup = ls.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ls.len());
        assert!(ls.contains(&"A4"));
        assert!(ls.contains(&"D4"));
        assert!(ls.contains(&"S3"));
    }

    #[test]
    fn s5_and_a5_sizes() {
        assert_eq!(lattice("S5").len(), 156);
        assert_eq!(lattice("S5").classes().len(), 19);
        assert_eq!(lattice("A5").len(), 59);
        assert_eq!(lattice("A5").classes().len(), 9);
    }

    #[test]
    fn mobius_examples() {
        let c4 = lattice("C4");
        assert_eq!(c4.mobius(0, 0).unwrap(), 1);
        assert_eq!(c4.mobius(0, 1).unwrap(), -1);
        assert_eq!(c4.mobius(0, 2).unwrap(), 0);
        let c2 = lattice("C2");
        assert_eq!(c2.mobius(0, 1).unwrap(), -1);
        // mu(1, S3) = 3 (three atoms C2, one C3)
        let s3 = lattice("S3");
        assert_eq!(s3.mobius(0, s3.whole()).unwrap(), 3);
        // K not in H
        let c2a = s3.class(1).members[0];
        let c3 = s3.representative(2);
        assert!(matches!(s3.mobius(c2a, c3), Err(Error::Domain(_))));
    }

    #[test]
    fn weyl_examples() {
        let s3 = lattice("S3");
        assert_eq!(s3.weyl_group(0).unwrap().group.order(), 6);
        assert_eq!(s3.weyl_group(s3.whole()).unwrap().group.order(), 1);
        let c2 = s3.representative(1);
        assert_eq!(s3.normalizer(c2), c2);
        assert_eq!(s3.weyl_group(c2).unwrap().group.order(), 1);
        assert_eq!(s3.weyl_group(s3.representative(2)).unwrap().group.order(), 2);
        assert!(matches!(s3.weyl_group(99), Err(Error::Domain(_))));
    }

    #[test]
    fn find_class_aliases() {
        let c6 = lattice("C6");
        assert_eq!(c6.find_class("c2").unwrap(), 1);
        assert_eq!(c6.find_class("#2").unwrap(), 2);
        assert_eq!(c6.find_class("e").unwrap(), 0);
        assert_eq!(c6.find_class("G").unwrap(), 3);
        assert!(c6.find_class("C5").is_err());
    }

    #[test]
    fn from_members_validates() {
        let g = catalog::cyclic(4, &Limits::default()).unwrap();
        assert!(Subgroup::from_members(&g, &[0, 1]).is_err());
        let sq = g.mul(1, 1);
        assert_eq!(Subgroup::from_members(&g, &[0, sq]).unwrap().order(), 2);
        assert!(Subgroup::from_members(&g, &[1]).is_err());
    }
}
