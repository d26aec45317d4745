//! Spectrum expressions and their geometric isotropy.
//!
//! Leaves are suspension spectra of orbits `Σ∞G/K₊`, idempotent pieces
//! `e_(H) S_Q` of the rational sphere, the rational sphere itself and the
//! point. Isotropy of a wedge is the union, of a smash the intersection.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{ClassId, SubgroupId, SubgroupLattice};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumExpr {
    Orbit(SubgroupId),
    Idempotent(ClassId),
    RationalSphere,
    Point,
    Wedge(Box<SpectrumExpr>, Box<SpectrumExpr>),
    Smash(Box<SpectrumExpr>, Box<SpectrumExpr>),
}

impl SpectrumExpr {
    pub fn is_leaf(&self) -> bool {
        !matches!(self, SpectrumExpr::Wedge(..) | SpectrumExpr::Smash(..))
    }
}

/// A spectrum expression bound to the subgroup lattice of its group.
#[derive(Clone)]
pub struct Spectrum {
    lattice: Arc<SubgroupLattice>,
    expr: SpectrumExpr,
}

impl PartialEq for Spectrum {
    fn eq(&self, other: &Self) -> bool {
        self.lattice.same_group(&other.lattice) && self.expr == other.expr
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spectrum({})", self)
    }
}

impl Spectrum {
    pub fn new(lattice: Arc<SubgroupLattice>, expr: SpectrumExpr) -> Result<Self> {
        fn check(l: &SubgroupLattice, e: &SpectrumExpr) -> Result<()> {
            match e {
                SpectrumExpr::Orbit(k) => l.check_id(*k),
                SpectrumExpr::Idempotent(c) if *c >= l.classes().len() => {
                    Err(Error::domain(format!("no subgroup class #{c}")))
                }
                SpectrumExpr::Wedge(a, b) | SpectrumExpr::Smash(a, b) => {
                    check(l, a)?;
                    check(l, b)
                }
                _ => Ok(()),
            }
        }
        check(&lattice, &expr)?;
        Ok(Spectrum { lattice, expr })
    }

    pub fn orbit(lattice: &Arc<SubgroupLattice>, k: SubgroupId) -> Result<Self> {
        Self::new(lattice.clone(), SpectrumExpr::Orbit(k))
    }

    pub fn idempotent(lattice: &Arc<SubgroupLattice>, class: ClassId) -> Result<Self> {
        Self::new(lattice.clone(), SpectrumExpr::Idempotent(class))
    }

    pub fn rational_sphere(lattice: &Arc<SubgroupLattice>) -> Self {
        Spectrum {
            lattice: lattice.clone(),
            expr: SpectrumExpr::RationalSphere,
        }
    }

    pub fn point(lattice: &Arc<SubgroupLattice>) -> Self {
        Spectrum {
            lattice: lattice.clone(),
            expr: SpectrumExpr::Point,
        }
    }

    fn combine(
        self,
        other: Spectrum,
        node: fn(Box<SpectrumExpr>, Box<SpectrumExpr>) -> SpectrumExpr,
    ) -> Result<Self> {
        if !self.lattice.same_group(&other.lattice) {
            return Err(Error::domain("spectra over different groups"));
        }
        Ok(Spectrum {
            expr: node(Box::new(self.expr), Box::new(other.expr)),
            lattice: self.lattice,
        })
    }

    pub fn wedge(self, other: Spectrum) -> Result<Self> {
        self.combine(other, SpectrumExpr::Wedge)
    }

    pub fn smash(self, other: Spectrum) -> Result<Self> {
        self.combine(other, SpectrumExpr::Smash)
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn expr(&self) -> &SpectrumExpr {
        &self.expr
    }

    /// Parses the expression syntax: leaves `orbit:G/K`, `idem:(K)`, `SQ`,
    /// `pt`; infix `v` (wedge) and `^` (smash, binding tighter); parentheses.
    pub fn parse(lattice: &Arc<SubgroupLattice>, input: &str) -> Result<Self> {
        let tokens = tokenize(input)?;
        let mut parser = Parser {
            lattice,
            tokens,
            pos: 0,
            end: input.len(),
        };
        let expr = parser.wedge()?;
        if let Some((at, t)) = parser.tokens.get(parser.pos) {
            return Err(Error::parse(*at, format!("unexpected {t:?}")));
        }
        Ok(Spectrum {
            lattice: lattice.clone(),
            expr,
        })
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(l: &SubgroupLattice, e: &SpectrumExpr, f: &mut fmt::Formatter<'_>, in_smash: bool) -> fmt::Result {
            match e {
                SpectrumExpr::Orbit(k) => write!(f, "orbit:{}/{}", l.group().label(), l.label(*k)),
                SpectrumExpr::Idempotent(c) => write!(f, "idem:({})", l.class(*c).label),
                SpectrumExpr::RationalSphere => f.write_str("SQ"),
                SpectrumExpr::Point => f.write_str("pt"),
                SpectrumExpr::Wedge(a, b) => {
                    if in_smash {
                        f.write_str("(")?;
                    }
                    go(l, a, f, false)?;
                    f.write_str(" v ")?;
                    go(l, b, f, false)?;
                    if in_smash {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
                SpectrumExpr::Smash(a, b) => {
                    go(l, a, f, true)?;
                    f.write_str(" ^ ")?;
                    match **b {
                        SpectrumExpr::Smash(..) => {
                            f.write_str("(")?;
                            go(l, b, f, true)?;
                            f.write_str(")")
                        }
                        _ => go(l, b, f, true),
                    }
                }
            }
        }
        go(&self.lattice, &self.expr, f, false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Orbit(String),
    Idem(String),
    Sphere,
    Point,
    Wedge,
    Smash,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let word_char = |c: u8| c.is_ascii_alphanumeric() || matches!(c, b':' | b'/' | b'#' | b'_');
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                out.push((i, Token::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Token::Close));
                i += 1;
            }
            b'^' => {
                out.push((i, Token::Smash));
                i += 1;
            }
            _ if word_char(c) => {
                let start = i;
                while i < bytes.len() && word_char(bytes[i]) {
                    i += 1;
                }
                let word = &input[start..i];
                let lower = word.to_ascii_lowercase();
                let token = if lower == "v" {
                    Token::Wedge
                } else if lower == "sq" {
                    Token::Sphere
                } else if lower == "pt" {
                    Token::Point
                } else if lower.starts_with("orbit:") {
                    Token::Orbit(word["orbit:".len()..].to_string())
                } else if lower == "idem:" {
                    // idem:(K)
                    if bytes.get(i) != Some(&b'(') {
                        return Err(Error::parse(i, "expected '(' after idem:"));
                    }
                    let open = i;
                    let close = input[open..]
                        .find(')')
                        .map(|k| open + k)
                        .ok_or_else(|| Error::parse(open, "unterminated idem:(...)"))?;
                    i = close + 1;
                    Token::Idem(input[open + 1..close].trim().to_string())
                } else {
                    return Err(Error::parse(start, format!("unknown token {word:?}")));
                };
                out.push((start, token));
            }
            _ => return Err(Error::parse(i, format!("unexpected character {:?}", c as char))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    lattice: &'a SubgroupLattice,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn wedge(&mut self) -> Result<SpectrumExpr> {
        let mut lhs = self.smash()?;
        while self.peek() == Some(&Token::Wedge) {
            self.pos += 1;
            let rhs = self.smash()?;
            lhs = SpectrumExpr::Wedge(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn smash(&mut self) -> Result<SpectrumExpr> {
        let mut lhs = self.atom()?;
        while self.peek() == Some(&Token::Smash) {
            self.pos += 1;
            let rhs = self.atom()?;
            lhs = SpectrumExpr::Smash(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<SpectrumExpr> {
        let at = self.at();
        let token = self
            .tokens
            .get(self.pos)
            .map(|(_, t)| t.clone())
            .ok_or_else(|| Error::parse(at, "unexpected end of expression"))?;
        self.pos += 1;
        let class = |label: &str| {
            self.lattice
                .find_class(label)
                .map_err(|e| Error::parse(at, e.to_string()))
        };
        match token {
            Token::Sphere => Ok(SpectrumExpr::RationalSphere),
            Token::Point => Ok(SpectrumExpr::Point),
            Token::Idem(label) => Ok(SpectrumExpr::Idempotent(class(&label)?)),
            Token::Orbit(body) => {
                let (prefix, k) = body
                    .split_once('/')
                    .ok_or_else(|| Error::parse(at, "orbit leaves look like orbit:G/K"))?;
                let group = self.lattice.group();
                let prefix_ok = prefix.eq_ignore_ascii_case("G")
                    || group.name().is_some_and(|n| n.eq_ignore_ascii_case(prefix));
                if !prefix_ok {
                    return Err(Error::parse(
                        at,
                        format!("orbit of {prefix:?} but the group is {}", group.label()),
                    ));
                }
                Ok(SpectrumExpr::Orbit(self.lattice.representative(class(k)?)))
            }
            Token::Open => {
                let inner = self.wedge()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::parse(self.at(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            t => Err(Error::parse(at, format!("unexpected {t:?}"))),
        }
    }
}

/// A conjugation-closed set of subgroups, stored as class indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IsotropySet {
    classes: BTreeSet<ClassId>,
}

impl IsotropySet {
    pub fn from_classes(classes: impl IntoIterator<Item = ClassId>) -> Self {
        IsotropySet {
            classes: classes.into_iter().collect(),
        }
    }

    pub fn contains(&self, class: ClassId) -> bool {
        self.classes.contains(&class)
    }

    pub fn classes(&self) -> impl Iterator<Item = ClassId> + '_ {
        self.classes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_subset(&self, other: &IsotropySet) -> bool {
        self.classes.is_subset(&other.classes)
    }

    pub fn labels(&self, lattice: &SubgroupLattice) -> Vec<String> {
        self.classes
            .iter()
            .map(|&c| lattice.class(c).label.clone())
            .collect()
    }
}

/// Geometric isotropy `{H : Φ^H E ≄ *}` of a spectrum expression.
pub fn isotropy(spectrum: &Spectrum) -> IsotropySet {
    fn go(l: &SubgroupLattice, e: &SpectrumExpr) -> BTreeSet<ClassId> {
        match e {
            SpectrumExpr::Orbit(k) => {
                let d = l.class_of(*k);
                (0..l.classes().len()).filter(|&c| l.is_subconjugate(c, d)).collect()
            }
            SpectrumExpr::Idempotent(c) => BTreeSet::from([*c]),
            SpectrumExpr::RationalSphere => (0..l.classes().len()).collect(),
            SpectrumExpr::Point => BTreeSet::new(),
            SpectrumExpr::Wedge(a, b) => &go(l, a) | &go(l, b),
            SpectrumExpr::Smash(a, b) => &go(l, a) & &go(l, b),
        }
    }
    IsotropySet {
        classes: go(&spectrum.lattice, &spectrum.expr),
    }
}

/// Whether the isotropy is contained in `{(1)}`.
pub fn is_free(spectrum: &Spectrum) -> bool {
    isotropy(spectrum).classes().all(|c| c == 0)
}
