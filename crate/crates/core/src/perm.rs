//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Composition follows the functional convention: `a.compose(&b)` is the
//! permutation `x -> a(b(x))`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u32]>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::domain(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::domain(format!("point {a} outside 0..{degree}")));
                }
                if touched[a] {
                    return Err(Error::domain(format!("point {a} appears twice in cycles")));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv.into_boxed_slice())
    }

    /// Extends the permutation to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut images = self.0.to_vec();
        images.extend(self.degree() as u32..degree as u32);
        Perm(images.into_boxed_slice())
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| num_integer_lcm(acc, c.len()))
    }
}

fn num_integer_lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

/// Parses a comma-separated list of generators in disjoint-cycle notation,
/// e.g. `"(0 1)(2 3), (0 2)(1 3)"`. Points may be separated by spaces or
/// commas inside a cycle. The degree is one more than the largest point.
pub fn parse_generators(input: &str) -> Result<(usize, Vec<Vec<Vec<usize>>>)> {
    let bytes = input.as_bytes();
    let mut pos = 0;
    let mut gens: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    let mut max_point: Option<usize> = None;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        match bytes[pos] {
            b'(' => {
                pos += 1;
                let mut cycle = Vec::new();
                loop {
                    while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
                        pos += 1;
                    }
                    if pos >= bytes.len() {
                        return Err(Error::parse(pos, "unterminated cycle"));
                    }
                    if bytes[pos] == b')' {
                        pos += 1;
                        break;
                    }
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(Error::parse(pos, format!("unexpected character {:?}", bytes[pos] as char)));
                    }
                    let point: usize = input[start..pos]
                        .parse()
                        .map_err(|_| Error::parse(start, "point number out of range"))?;
                    if cycle.contains(&point) {
                        return Err(Error::parse(start, format!("point {point} repeated in cycle")));
                    }
                    max_point = Some(max_point.map_or(point, |m| m.max(point)));
                    cycle.push(point);
                }
                current.push(cycle);
            }
            b',' => {
                if current.is_empty() {
                    return Err(Error::parse(pos, "empty generator"));
                }
                gens.push(std::mem::take(&mut current));
                pos += 1;
            }
            c => return Err(Error::parse(pos, format!("unexpected character {:?}", c as char))),
        }
    }
    if current.is_empty() {
        return Err(Error::parse(pos, "expected a cycle"));
    }
    gens.push(current);
    Ok((max_point.map_or(1, |m| m + 1), gens))
}
