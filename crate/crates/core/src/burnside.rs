//! Table of marks and the rational Burnside ring.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{ClassId, SubgroupLattice};

/// Marks `m[i][j] = |(G/H_i)^{H_j}|` over the subgroup classes in lattice
/// order (ascending by order, ties by representative member set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableOfMarks {
    labels: Vec<String>,
    orders: Vec<usize>,
    matrix: Vec<Vec<u64>>,
}

impl TableOfMarks {
    pub fn new(lattice: &SubgroupLattice) -> Self {
        let g = lattice.group();
        let reps: Vec<_> = lattice
            .classes()
            .iter()
            .map(|c| lattice.subgroup(c.representative))
            .collect();
        let matrix = reps
            .iter()
            .map(|hi| {
                reps.iter()
                    .map(|hj| {
                        // gH_i is fixed by H_j  <=>  g^-1 H_j g <= H_i
                        let count = (0..g.order())
                            .filter(|&x| {
                                let xi = g.inv(x);
                                hj.generators().iter().all(|&y| hi.contains(g.conjugate(xi, y)))
                            })
                            .count();
                        (count / hi.order()) as u64
                    })
                    .collect()
            })
            .collect();
        TableOfMarks {
            labels: lattice.classes().iter().map(|c| c.label.clone()).collect(),
            orders: lattice.classes().iter().map(|c| c.order).collect(),
            matrix,
        }
    }

    pub fn len(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn mark(&self, i: ClassId, j: ClassId) -> u64 {
        self.matrix[i][j]
    }

    /// Coefficients in the basis `[G/H_i]` of the element with the given
    /// mark vector, by back substitution on the triangular system.
    fn solve(&self, marks: &[BigRational]) -> Vec<BigRational> {
        let n = self.len();
        let mut coeffs = vec![BigRational::zero(); n];
        for j in (0..n).rev() {
            let mut rest = marks[j].clone();
            for (i, c) in coeffs.iter().enumerate().skip(j + 1) {
                if self.matrix[i][j] != 0 && !c.is_zero() {
                    rest -= c * rational(self.matrix[i][j]);
                }
            }
            coeffs[j] = rest / rational(self.matrix[j][j]);
        }
        coeffs
    }
}

fn rational(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the table of marks of the lattice's group.
pub fn table_of_marks(lattice: &SubgroupLattice) -> Arc<TableOfMarks> {
    Arc::new(TableOfMarks::new(lattice))
}

/// An element of the rational Burnside ring, as exact coefficients in the
/// basis of transitive G-sets `[G/H]`.
#[derive(Clone)]
pub struct BurnsideElement {
    table: Arc<TableOfMarks>,
    coefficients: Vec<BigRational>,
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.coefficients == other.coefficients
    }
}

fn same_table(a: &Arc<TableOfMarks>, b: &Arc<TableOfMarks>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl BurnsideElement {
    pub fn zero(table: &Arc<TableOfMarks>) -> Self {
        BurnsideElement {
            table: table.clone(),
            coefficients: vec![BigRational::zero(); table.len()],
        }
    }

    /// The unit `[G/G]`.
    pub fn one(table: &Arc<TableOfMarks>) -> Self {
        Self::basis(table, table.len() - 1)
    }

    /// The transitive G-set `[G/H_i]`.
    pub fn basis(table: &Arc<TableOfMarks>, i: ClassId) -> Self {
        let mut e = Self::zero(table);
        e.coefficients[i] = BigRational::one();
        e
    }

    pub fn from_coefficients(table: &Arc<TableOfMarks>, coefficients: Vec<BigRational>) -> Result<Self> {
        if coefficients.len() != table.len() {
            return Err(Error::domain(format!(
                "expected {} coefficients, got {}",
                table.len(),
                coefficients.len()
            )));
        }
        Ok(BurnsideElement {
            table: table.clone(),
            coefficients,
        })
    }

    /// The element whose mark vector is `marks`.
    pub fn from_marks(table: &Arc<TableOfMarks>, marks: &[BigRational]) -> Result<Self> {
        if marks.len() != table.len() {
            return Err(Error::domain("mark vector has the wrong length"));
        }
        Ok(BurnsideElement {
            table: table.clone(),
            coefficients: table.solve(marks),
        })
    }

    pub fn table(&self) -> &Arc<TableOfMarks> {
        &self.table
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: ClassId) -> &BigRational {
        &self.coefficients[i]
    }

    /// `mark_j(x) = sum_i x_i m[i][j]`.
    pub fn marks(&self) -> Vec<BigRational> {
        let n = self.table.len();
        (0..n)
            .map(|j| {
                let mut acc = BigRational::zero();
                for (i, c) in self.coefficients.iter().enumerate().skip(j) {
                    if !c.is_zero() && self.table.matrix[i][j] != 0 {
                        acc += c * rational(self.table.matrix[i][j]);
                    }
                }
                acc
            })
            .collect()
    }

    fn check_parent(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::domain("Burnside elements belong to different groups"))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        Ok(BurnsideElement {
            table: self.table.clone(),
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        BurnsideElement {
            table: self.table.clone(),
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Exact coefficient strings such as `"-1/2"`.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, label) in self.coefficients.iter().zip(&self.table.labels) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}[G/{label}]")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Product in the Burnside ring: multiply mark vectors pointwise and invert
/// the mark map.
pub fn burnside_product(a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
    a.check_parent(b)?;
    let marks: Vec<BigRational> = a
        .marks()
        .into_iter()
        .zip(b.marks())
        .map(|(x, y)| x * y)
        .collect();
    BurnsideElement::from_marks(&a.table, &marks)
}

/// The primitive idempotents `e_(H)`, one per subgroup class, each with the
/// indicator of its class as mark vector.
pub fn idempotents(table: &Arc<TableOfMarks>) -> Vec<BurnsideElement> {
    (0..table.len())
        .map(|k| {
            let indicator: Vec<BigRational> = (0..table.len())
                .map(|j| if j == k { BigRational::one() } else { BigRational::zero() })
                .collect();
            BurnsideElement::from_marks(table, &indicator).expect("square system")
        })
        .collect()
}
