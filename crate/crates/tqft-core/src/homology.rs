//! Simplicial chain homology over the rationals, absolute and relative.
//!
//! Only ranks (Betti numbers) are computed — torsion never enters the Euler
//! characteristic or any other quantity used here. Ranks come from
//! fraction-free Gaussian elimination (Bareiss) over arbitrary-precision
//! integers, so every result is exact.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::complex::{MarkedComplex, Simplex, SimplicialComplex};

/// A dense integer matrix. Boundary operators have entries in {−1, 0, +1};
/// rank computation promotes to big integers internally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: alloc::vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Matrix product; panics on shape mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    ///
    /// Entries are promoted to `BigInt`; the division in the Bareiss update
    /// is exact by construction, so no rounding can occur.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        let mut rank = 0usize;
        let mut prev = BigInt::from(1);
        let mut row = 0usize;
        for col in 0..self.cols {
            // Choose the smallest-magnitude nonzero pivot to limit growth.
            let pivot = (row..self.rows)
                .filter(|&r| !m[r][col].is_zero())
                .min_by_key(|&r| m[r][col].abs());
            let Some(p) = pivot else { continue };
            m.swap(row, p);
            for r in row + 1..self.rows {
                for c in col + 1..self.cols {
                    let val = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                    m[r][c] = val;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }
}

/// Bases and boundary operators of a simplicial chain complex.
///
/// `boundaries[n]` maps `n`-chains to `(n−1)`-chains: its columns are indexed
/// by the sorted basis of `n`-simplices and rows by the `(n−1)`-basis. The
/// row count of `boundaries[0]` is zero.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub bases: Vec<Vec<Simplex>>,
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Number of chain degrees (top dimension + 1); zero for the empty
    /// complex.
    pub fn degrees(&self) -> usize {
        self.bases.len()
    }

    /// Checks `∂ ∘ ∂ = 0` in every degree.
    pub fn boundary_squared_is_zero(&self) -> bool {
        (1..self.boundaries.len())
            .all(|n| self.boundaries[n - 1].mul(&self.boundaries[n]).is_zero())
    }
}

/// Betti numbers `b[n] = rank H_n`; dimensions above the top are zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiVector(pub Vec<u64>);

impl BettiVector {
    /// Alternating sum `Σ (−1)^n b[n]`: the homological Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn get(&self, n: usize) -> u64 {
        self.0.get(n).copied().unwrap_or(0)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Errors from the relative-homology operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    /// `rel` is not a subcomplex of the given complex.
    NotASubcomplex { simplex: Simplex },
    /// A named boundary component does not exist.
    UnknownComponent { name: String },
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::NotASubcomplex { simplex } => {
                write!(f, "not a subcomplex: {simplex:?} is missing from the ambient complex")
            }
            HomologyError::UnknownComponent { name } => {
                write!(f, "unknown boundary component `{name}`")
            }
        }
    }
}

/// Sorted basis of `n`-simplices, skipping those belonging to `rel`.
fn basis(c: &SimplicialComplex, rel: Option<&SimplicialComplex>, n: usize) -> Vec<Simplex> {
    c.simplices()
        .iter()
        .filter(|s| s.dim() == n)
        .filter(|s| rel.is_none_or(|r| !r.contains(s)))
        .cloned()
        .collect()
}

fn boundary_matrix(lower: &[Simplex], upper: &[Simplex]) -> IntMatrix {
    let index: BTreeMap<&Simplex, usize> = lower.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    for (j, s) in upper.iter().enumerate() {
        // The face deleting the i-th sorted vertex carries sign (−1)^i.
        for (i, face) in s.facets().iter().enumerate() {
            if let Some(&r) = index.get(face) {
                m.set(r, j, if i % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    m
}

fn chain_complex_with_rel(c: &SimplicialComplex, rel: Option<&SimplicialComplex>) -> ChainComplex {
    let top = match c.dim() {
        Some(d) => d,
        None => return ChainComplex { bases: Vec::new(), boundaries: Vec::new() },
    };
    let bases: Vec<Vec<Simplex>> = (0..=top).map(|n| basis(c, rel, n)).collect();
    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(IntMatrix::zeros(0, bases[0].len()));
    for n in 1..=top {
        boundaries.push(boundary_matrix(&bases[n - 1], &bases[n]));
    }
    ChainComplex { bases, boundaries }
}

/// The chain complex of a simplicial complex, with sorted bases and
/// alternating-sign boundary operators.
pub fn boundary_matrices(c: &SimplicialComplex) -> ChainComplex {
    chain_complex_with_rel(c, None)
}

/// Betti numbers of `c`, or of the pair `(c, rel)` when `rel` is given.
///
/// The relative case deletes `rel`'s simplices from every basis (the
/// quotient chain complex); this is valid because `rel` is required to be a
/// genuine subcomplex.
pub fn betti(
    c: &SimplicialComplex,
    rel: Option<&SimplicialComplex>,
) -> Result<BettiVector, HomologyError> {
    if let Some(r) = rel {
        if let Some(s) = r.simplices().iter().find(|s| !c.contains(s)) {
            return Err(HomologyError::NotASubcomplex { simplex: s.clone() });
        }
    }
    let chain = chain_complex_with_rel(c, rel);
    if chain.degrees() == 0 {
        return Ok(BettiVector::default());
    }
    let ranks: Vec<usize> = chain.boundaries.iter().map(IntMatrix::rank).collect();
    let mut b = Vec::with_capacity(chain.degrees());
    for n in 0..chain.degrees() {
        let dim_n = chain.bases[n].len();
        let kernel = dim_n - ranks[n];
        let image_above = if n + 1 < chain.degrees() { ranks[n + 1] } else { 0 };
        b.push((kernel - image_above) as u64);
    }
    Ok(BettiVector(b))
}

/// Relative Euler characteristic `χ(M, union of selected components)` via
/// homology ranks. With no selection this is the absolute homological χ.
pub fn euler_relative(m: &MarkedComplex, components: &[String]) -> Result<i64, HomologyError> {
    let rel = m
        .named_union(components)
        .map_err(|name| HomologyError::UnknownComponent { name })?;
    let b = if rel.is_empty() {
        betti(&m.complex, None)?
    } else {
        betti(&m.complex, Some(&rel))?
    };
    Ok(b.euler_characteristic())
}
