//! Finite permutation groups with fully enumerated elements.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Perm;

/// Multiplication tables are cached below this order.
const TABLE_THRESHOLD: usize = 1024;

/// A finite group realized by permutations of `{0, .., degree-1}`.
///
/// Elements are enumerated breadth-first from the identity, so element 0 is
/// always the identity and the element order is a deterministic function of
/// the generator list.
pub struct FiniteGroup {
    name: Option<String>,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl FiniteGroup {
    pub fn from_generators(
        degree: usize,
        generators: Vec<Perm>,
        name: Option<String>,
        limits: &Limits,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::domain("permutation degree must be positive"));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::domain(format!(
                    "generator {g} has degree {} but group degree is {degree}",
                    g.degree()
                )));
            }
        }
        let generators: Vec<Perm> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0);
        let mut next = 0;
        while next < elements.len() {
            for g in &generators {
                let p = elements[next].compose(g);
                if !index.contains_key(&p) {
                    if elements.len() >= limits.order_cap {
                        return Err(Error::resource(format!(
                            "group order exceeds the cap of {}",
                            limits.order_cap
                        )));
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            next += 1;
        }
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut group = FiniteGroup {
            name,
            degree,
            generators,
            elements,
            index,
            inverses,
            table: None,
        };
        if group.order() <= TABLE_THRESHOLD {
            let n = group.order();
            let mut table = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    table.push(group.mul_uncached(a, b) as u32);
                }
            }
            group.table = Some(table);
        }
        Ok(group)
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_generators(1, Vec::new(), Some("C1".into()), &Limits::default())
            .expect("trivial group")
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or `"G"` for an anonymous group.
    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("G")
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    /// Index of the product `a * b` (apply `b` first).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_uncached(a, b),
        }
    }

    fn mul_uncached(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != Self::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Same underlying permutation group (element lists agree).
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other) || (self.degree == other.degree && self.elements == other.elements)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize) -> FiniteGroup {
        let g = Perm::from_cycles(n, &[(0..n).collect()]).unwrap();
        FiniteGroup::from_generators(n, vec![g], None, &Limits::default()).unwrap()
    }

    #[test]
    fn closure_is_a_group() {
        let g = cyc(6);
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..6 {
                let p = g.element(a).compose(g.element(b));
                assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let limits = Limits {
            order_cap: 5,
            ..Limits::default()
        };
        let g = Perm::from_cycles(6, &[(0..6).collect()]).unwrap();
        let err = FiniteGroup::from_generators(6, vec![g], None, &limits).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn mismatched_degree_rejected() {
        let g = Perm::identity(3);
        assert!(FiniteGroup::from_generators(4, vec![g], None, &Limits::default()).is_err());
    }
}
