//! Brute-force oracles that work on raw permutation images and share no
//! code with the library beyond reading off the element list.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use ninfty::{FiniteGroup, SubgroupLattice};

pub type Set = BTreeSet<usize>;

pub struct Oracle {
    pub elems: Vec<Vec<u32>>,
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

impl Oracle {
    pub fn new(group: &FiniteGroup) -> Self {
        let elems: Vec<Vec<u32>> = group.elements().iter().map(|p| p.images().to_vec()).collect();
        let index: HashMap<&[u32], usize> = elems.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
        let mul = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let c: Vec<u32> = b.iter().map(|&x| a[x as usize]).collect();
                        index[c.as_slice()]
                    })
                    .collect()
            })
            .collect();
        let identity = elems
            .iter()
            .position(|e| e.iter().enumerate().all(|(i, &x)| i == x as usize))
            .unwrap();
        Oracle { elems, mul, identity }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul[a][b] == self.identity).unwrap()
    }

    pub fn closure(&self, gens: &[usize]) -> Set {
        let mut set: Set = [self.identity].into();
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul[x][g];
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Closures of every generating set of size at most 4; enough for any
    /// group of order below 32.
    pub fn subgroups(&self) -> Vec<Set> {
        let n = self.order();
        assert!(n < 32);
        let mut found = BTreeSet::new();
        let mut chosen = Vec::new();
        fn rec(o: &Oracle, start: usize, chosen: &mut Vec<usize>, found: &mut BTreeSet<Set>) {
            found.insert(o.closure(chosen));
            if chosen.len() == 4 {
                return;
            }
            for g in start..o.order() {
                chosen.push(g);
                rec(o, g + 1, chosen, found);
                chosen.pop();
            }
        }
        rec(self, 0, &mut chosen, &mut found);
        let _ = n;
        sorted(found)
    }

    /// Every subset containing the identity and closed under products.
    pub fn subgroups_literal(&self) -> Vec<Set> {
        let n = self.order();
        assert!(n <= 12);
        let others: Vec<usize> = (0..n).filter(|&x| x != self.identity).collect();
        let mut found = BTreeSet::new();
        for mask in 0u32..(1 << others.len()) {
            let mut set: Set = [self.identity].into();
            set.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
            if set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul[a][b]))) {
                found.insert(set);
            }
        }
        sorted(found)
    }

    pub fn conjugate(&self, s: &Set, g: usize) -> Set {
        let gi = self.inv(g);
        s.iter().map(|&x| self.mul[self.mul[g][x]][gi]).collect()
    }

    /// Conjugacy classes of `subs` under the elements of `ambient`.
    pub fn classes(&self, subs: &[Set], ambient: &Set) -> Vec<Vec<Set>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in subs {
            if seen.contains(s) {
                continue;
            }
            let class: BTreeSet<Set> = ambient.iter().map(|&g| self.conjugate(s, g)).collect();
            seen.extend(class.iter().cloned());
            out.push(class.into_iter().collect());
        }
        out
    }

    pub fn whole(&self) -> Set {
        (0..self.order()).collect()
    }

    pub fn normalizer(&self, s: &Set) -> Set {
        (0..self.order()).filter(|&g| &self.conjugate(s, g) == s).collect()
    }

    /// Left cosets `gK` as explicit sets.
    pub fn cosets(&self, k: &Set) -> Vec<Set> {
        let mut seen = BTreeSet::new();
        for g in 0..self.order() {
            seen.insert(k.iter().map(|&x| self.mul[g][x]).collect::<Set>());
        }
        seen.into_iter().collect()
    }

    /// `|(G/K)^H|`, counting cosets with `hgK = gK` for all `h` in `H`.
    pub fn mark(&self, h: &Set, k: &Set) -> usize {
        self.cosets(k)
            .iter()
            .filter(|c| {
                h.iter()
                    .all(|&x| c.iter().map(|&y| self.mul[x][y]).collect::<Set>() == **c)
            })
            .count()
    }

    pub fn mobius(&self, subs: &[Set], k: &Set, h: &Set) -> i64 {
        if !k.is_subset(h) {
            return 0;
        }
        if k == h {
            return 1;
        }
        -subs
            .iter()
            .filter(|m| m.is_subset(h) && k.is_subset(m) && *m != h)
            .map(|m| self.mobius(subs, k, m))
            .sum::<i64>()
    }
}

fn sorted(found: BTreeSet<Set>) -> Vec<Set> {
    let mut v: Vec<Set> = found.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

pub fn members(lattice: &SubgroupLattice, id: usize) -> Set {
    lattice.subgroup(id).members().collect()
}

/// Transfer systems by testing every sub-relation of inclusion.
pub fn brute_force_transfer_systems(o: &Oracle, subs: &[Set]) -> BTreeSet<BTreeSet<(Set, Set)>> {
    let idx: HashMap<&Set, usize> = subs.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let pairs: Vec<(usize, usize)> = (0..subs.len())
        .flat_map(|i| (0..subs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && subs[i].is_subset(&subs[j]))
        .collect();
    assert!(pairs.len() <= 20);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut rel: BTreeSet<(usize, usize)> = (0..subs.len()).map(|i| (i, i)).collect();
        rel.extend(pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p));
        let ok = rel.iter().all(|&(k, l)| {
            let conj = (0..o.order())
                .all(|g| rel.contains(&(idx[&o.conjugate(&subs[k], g)], idx[&o.conjugate(&subs[l], g)])));
            let restr = (0..subs.len())
                .filter(|&m| subs[m].is_subset(&subs[l]))
                .all(|m| {
                    let meet: Set = subs[k].intersection(&subs[m]).copied().collect();
                    rel.contains(&(idx[&meet], m))
                });
            let trans = rel.iter().filter(|&&(a, _)| a == l).all(|&(_, b)| rel.contains(&(k, b)));
            conj && restr && trans
        });
        if ok {
            out.insert(
                rel.iter()
                    .filter(|(a, b)| a != b)
                    .map(|&(a, b)| (subs[a].clone(), subs[b].clone()))
                    .collect(),
            );
        }
    }
    out
}

/// Homomorphisms from the group generated by `gens` (elements of `o`) into
/// `Σn`, counted up to conjugation in `Σn`.
pub fn actions_up_to_iso(o: &Oracle, gens: &[usize], n: usize) -> usize {
    let sym: Vec<Vec<usize>> = permutations(n);
    let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
    let mut classes = BTreeSet::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        // Extend g -> choice over words; reject if inconsistent.
        let mut image: HashMap<usize, Vec<usize>> = HashMap::new();
        image.insert(o.identity, (0..n).collect());
        let mut frontier = vec![o.identity];
        let mut ok = true;
        'bfs: while let Some(x) = frontier.pop() {
            for (i, &g) in gens.iter().enumerate() {
                let y = o.mul[x][g];
                let py = compose(&image[&x], &sym[choice[i]]);
                match image.get(&y) {
                    Some(existing) if *existing != py => {
                        ok = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                    None => {
                        image.insert(y, py);
                        frontier.push(y);
                    }
                }
            }
        }
        if ok {
            let tuple: Vec<&Vec<usize>> = choice.iter().map(|&c| &sym[c]).collect();
            let canon = sym
                .iter()
                .map(|s| {
                    let si: Vec<usize> = {
                        let mut v = vec![0; n];
                        for (i, &x) in s.iter().enumerate() {
                            v[x] = i;
                        }
                        v
                    };
                    tuple.iter().map(|t| compose(&compose(s, t), &si)).collect::<Vec<_>>()
                })
                .min()
                .unwrap();
            classes.insert(canon);
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return classes.len();
            }
            choice[i] += 1;
            if choice[i] < sym.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
