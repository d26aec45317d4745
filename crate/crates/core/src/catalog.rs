//! Named groups and the group-spec parser.
//!
//! Catalog names are case-insensitive: `Cn` (cyclic, order n), `Dn`
//! (dihedral, order 2n), `Sn` and `An` (symmetric and alternating on n
//! points) and `Q8`. Anything starting with `(` is read as a list of
//! generators in disjoint-cycle notation.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;
use crate::perm::{parse_generators, Perm};

fn check_order(name: &str, order: Option<u128>, limits: &Limits) -> Result<()> {
    match order {
        Some(o) if o <= limits.order_cap as u128 => Ok(()),
        _ => Err(Error::resource(format!(
            "{name} has order larger than the cap of {}",
            limits.order_cap
        ))),
    }
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

pub fn cyclic(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::domain("C0 is not a group"));
    }
    let name = format!("C{n}");
    check_order(&name, Some(n as u128), limits)?;
    let gens = if n == 1 {
        Vec::new()
    } else {
        vec![Perm::from_cycles(n, &[(0..n).collect()])?]
    };
    FiniteGroup::from_generators(n, gens, Some(name), limits)
}

/// Dihedral group of order `2n`: symmetries of the n-gon for `n >= 3`,
/// the Klein four-group for `n = 2` and `C2` for `n = 1`.
pub fn dihedral(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::domain("D0 is not a group"));
    }
    let name = format!("D{n}");
    check_order(&name, (n as u128).checked_mul(2), limits)?;
    let (degree, gens) = match n {
        1 => (2, vec![Perm::from_cycles(2, &[vec![0, 1]])?]),
        2 => (
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]])?,
                Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]])?,
            ],
        ),
        _ => {
            let rotation = Perm::from_cycles(n, &[(0..n).collect()])?;
            let reflection =
                Perm::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
            (n, vec![rotation, reflection])
        }
    };
    FiniteGroup::from_generators(degree, gens, Some(name), limits)
}

pub fn symmetric(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::domain("S0 is not supported"));
    }
    let name = format!("S{n}");
    check_order(&name, factorial(n), limits)?;
    let gens = if n == 1 {
        Vec::new()
    } else {
        vec![
            Perm::from_cycles(n, &[vec![0, 1]])?,
            Perm::from_cycles(n, &[(0..n).collect()])?,
        ]
    };
    FiniteGroup::from_generators(n, gens, Some(name), limits)
}

pub fn alternating(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::domain("A0 is not supported"));
    }
    let name = format!("A{n}");
    check_order(&name, factorial(n).map(|f| (f / 2).max(1)), limits)?;
    let gens = (2..n)
        .map(|k| Perm::from_cycles(n, &[vec![0, 1, k]]))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_generators(n, gens, Some(name), limits)
}

/// Quaternion group in its left regular representation.
///
/// Point `2u + s` stands for the unit `±u` with `u` in `1, i, j, k` and
/// `s = 1` for the negative sign.
pub fn quaternion(limits: &Limits) -> Result<FiniteGroup> {
    // unit products u*v = sign * w, indexed [u][v] -> (negative, w)
    const MUL: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let left = |u: usize| {
        let images = (0..8)
            .map(|p| {
                let (v, s) = (p / 2, p % 2 == 1);
                let (neg, w) = MUL[u][v];
                (2 * w + usize::from(neg ^ s)) as u32
            })
            .collect();
        Perm::from_images(images)
    };
    FiniteGroup::from_generators(8, vec![left(1)?, left(2)?], Some("Q8".into()), limits)
}

/// Parses a catalog name or a cycle-notation generator list.
pub fn parse_group(spec: &str, limits: &Limits) -> Result<FiniteGroup> {
    let trimmed = spec.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(0, "empty group spec"));
    }
    if trimmed.starts_with('(') {
        let offset = spec.len() - spec.trim_start().len();
        let (degree, gens) = parse_generators(trimmed).map_err(|e| match e {
            Error::Parse { position, message } => Error::parse(position + offset, message),
            other => other,
        })?;
        let perms = gens
            .iter()
            .map(|cycles| Perm::from_cycles(degree, cycles))
            .collect::<Result<Vec<_>>>()?;
        return FiniteGroup::from_generators(degree, perms, None, limits);
    }
    let upper = trimmed.to_ascii_uppercase();
    if upper == "Q8" {
        return quaternion(limits);
    }
    if upper == "V4" {
        let mut v4 = dihedral(2, limits)?;
        v4.set_name("V4");
        return Ok(v4);
    }
    let (kind, digits) = upper.split_at(1);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(0, format!("unknown group {trimmed:?}")));
    }
    let n: usize = match digits.parse() {
        Ok(n) => n,
        Err(_) => {
            return Err(Error::resource(format!("{trimmed} is beyond every cap")));
        }
    };
    match kind {
        "C" => cyclic(n, limits),
        "D" => dihedral(n, limits),
        "S" => symmetric(n, limits),
        "A" => alternating(n, limits),
        _ => Err(Error::parse(0, format!("unknown group family {kind:?}"))),
    }
}

/// Every catalog group of order at most `max_order`, in a fixed order:
/// cyclic, dihedral, symmetric, alternating, then `Q8`.
pub fn catalog_up_to(max_order: usize) -> Vec<FiniteGroup> {
    let limits = Limits::default();
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(cyclic(n, &limits).unwrap());
    }
    for n in 1..=max_order / 2 {
        out.push(dihedral(n, &limits).unwrap());
    }
    for n in 1.. {
        if factorial(n).unwrap() > max_order as u128 {
            break;
        }
        out.push(symmetric(n, &limits).unwrap());
    }
    for n in 1.. {
        if (factorial(n).unwrap() / 2).max(1) > max_order as u128 {
            break;
        }
        out.push(alternating(n, &limits).unwrap());
    }
    if max_order >= 8 {
        out.push(quaternion(&limits).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let l = Limits::default();
        assert_eq!(cyclic(6, &l).unwrap().order(), 6);
        assert_eq!(dihedral(4, &l).unwrap().order(), 8);
        assert_eq!(dihedral(2, &l).unwrap().order(), 4);
        assert_eq!(dihedral(1, &l).unwrap().order(), 2);
        assert_eq!(symmetric(4, &l).unwrap().order(), 24);
        assert_eq!(alternating(5, &l).unwrap().order(), 60);
        assert_eq!(alternating(2, &l).unwrap().order(), 1);
        assert_eq!(quaternion(&l).unwrap().order(), 8);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion(&Limits::default()).unwrap();
        let involutions = (0..8).filter(|&a| q.element_order(a) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn parse_catalog_and_cycles() {
        let l = Limits::default();
        let c6 = parse_group("c6", &l).unwrap();
        assert_eq!(c6.order(), 6);
        assert_eq!(c6.name(), Some("C6"));
        let v4 = parse_group("(0 1)(2 3), (0 2)(1 3)", &l).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert_eq!(v4.name(), None);
    }

    #[test]
    fn parse_errors() {
        let l = Limits::default();
        assert!(matches!(parse_group("C999999", &l), Err(Error::Resource(_))));
        assert!(matches!(parse_group("S9", &l), Err(Error::Resource(_))));
        assert!(matches!(parse_group("X3", &l), Err(Error::Parse { .. })));
        assert!(matches!(parse_group("Cx", &l), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_group("  (0 1", &l),
            Err(Error::Parse { position: 6, .. })
        ));
    }

    #[test]
    fn catalog_sweep_is_bounded() {
        let all = catalog_up_to(24);
        assert!(all.iter().all(|g| g.order() <= 24));
        assert!(all.iter().any(|g| g.name() == Some("S4")));
        assert!(all.iter().any(|g| g.name() == Some("Q8")));
        assert!(!all.iter().any(|g| g.name() == Some("A5")));
    }
}
