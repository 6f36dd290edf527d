//! The dimension-zero vector-space theory over exact rationals.
//!
//! A signed point configuration is assigned the tensor power `V^{⊗k}` of a
//! chosen `n`-dimensional space (dual factors have the same dimension; the
//! sign pattern is retained for pairing bookkeeping). The bent interval
//! gives the cup and cap elements, whose composite evaluates the circle:
//! `Z_{S¹} = n`. Self-gluing the ends of a cylinder over `Σ` computes a
//! trace, so the closed value of an identity is the dimension of `V_Σ`.
//!
//! Tensor bases are ordered lexicographically with the left factor most
//! significant, which pins every matrix layout exactly.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Orientation sign of a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A finite disjoint union of oriented points.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SignedPointConfig(pub Vec<Sign>);

/// A vector space over the rationals, tracked by dimension together with
/// the sign pattern it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactVectorSpace {
    pub dimension: usize,
    pub signs: SignedPointConfig,
}

/// The space assigned to a configuration when the positive point carries an
/// `n`-dimensional space: dimension `n^{#points}`. The empty configuration
/// gives the ground field.
pub fn space_of(config: &SignedPointConfig, n: usize) -> ExactVectorSpace {
    assert!(n >= 1, "the point space must have dimension at least 1");
    ExactVectorSpace {
        dimension: n.pow(config.0.len() as u32),
        signs: config.clone(),
    }
}

/// A dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Errors from linear-map operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VectError {
    NotSquare { rows: usize, cols: usize },
}

impl fmt::Display for VectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectError::NotSquare { rows, cols } => {
                write!(f, "not-square: matrix is {rows}x{cols}")
            }
        }
    }
}

impl LinearMap {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap { rows, cols, data: alloc::vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = LinearMap::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        LinearMap { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    /// Matrix product `self · other`; panics on shape mismatch.
    pub fn mul(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.rows, "shape mismatch in composition");
        let mut out = LinearMap::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Kronecker (tensor) product, left factor most significant.
    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Rational, VectError> {
        if self.rows != self.cols {
            return Err(VectError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        Ok(acc)
    }

    /// Rank by Gaussian elimination over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else { continue };
            for c in 0..m.cols {
                let tmp = m.get(row, c).clone();
                let other = m.get(p, c).clone();
                m.set(row, c, other);
                m.set(p, c, tmp);
            }
            let inv = Rational::one() / m.get(row, col).clone();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &factor * m.get(row, c);
                        m.set(r, c, v);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }
}

/// The cup element `1 ↦ Σ_i e_i ⊗ e_i*` as an `n²×1` column.
pub fn cup(n: usize) -> LinearMap {
    assert!(n >= 1);
    let mut m = LinearMap::zeros(n * n, 1);
    for i in 0..n {
        m.set(i * n + i, 0, Rational::one());
    }
    m
}

/// The cap pairing `e_i ⊗ e_j* ↦ δ_ij` as a `1×n²` row.
pub fn cap(n: usize) -> LinearMap {
    assert!(n >= 1);
    let mut m = LinearMap::zeros(1, n * n);
    for i in 0..n {
        m.set(0, i * n + i, Rational::one());
    }
    m
}

/// The circle value `cap ∘ cup` applied to 1: always the dimension `n`.
pub fn circle_invariant(n: usize) -> Rational {
    cap(n).mul(&cup(n)).get(0, 0).clone()
}

/// The closed value of an endomorphism: gluing the two ends of the cylinder
/// over `Σ` computes the trace, so an identity returns `dim V_Σ`.
pub fn trace_closure(z: &LinearMap) -> Result<Rational, VectError> {
    z.trace()
}

/// Does `(cap ⊗ id) ∘ (id ⊗ cup) = id` hold on the nose at dimension `n`?
pub fn snake_identity_holds(n: usize) -> bool {
    let id = LinearMap::identity(n);
    let left = cap(n).kron(&id);
    let right = id.kron(&cup(n));
    left.mul(&right) == id
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};
    use crate::rng::SplitMix64;
    use alloc::vec;

    #[test]
    fn space_dimensions_follow_the_sign_count() {
        assert_eq!(space_of(&SignedPointConfig(vec![Sign::Plus]), 2).dimension, 2);
        assert_eq!(space_of(&SignedPointConfig(vec![]), 5).dimension, 1);
        assert_eq!(
            space_of(&SignedPointConfig(vec![Sign::Plus, Sign::Minus]), 3).dimension,
            9
        );
    }

    #[test]
    fn cup_and_cap_have_the_pinned_layouts() {
        let c = cup(2);
        assert_eq!((c.rows(), c.cols()), (4, 1));
        let col: Vec<Rational> = (0..4).map(|i| c.get(i, 0).clone()).collect();
        assert_eq!(col, vec![rat(1), rat(0), rat(0), rat(1)]);

        let k = cap(2);
        assert_eq!((k.rows(), k.cols()), (1, 4));
        let row: Vec<Rational> = (0..4).map(|j| k.get(0, j).clone()).collect();
        assert_eq!(row, vec![rat(1), rat(0), rat(0), rat(1)]);

        assert_eq!(cup(1).get(0, 0), &rat(1));
        let c3 = cup(3);
        for i in 0..9 {
            let expected = if i % 4 == 0 { rat(1) } else { rat(0) };
            assert_eq!(c3.get(i, 0), &expected, "entry {i}");
        }
    }

    #[test]
    fn circle_invariant_is_the_dimension() {
        assert_eq!(circle_invariant(2), rat(2));
        assert_eq!(circle_invariant(1), rat(1));
        assert_eq!(circle_invariant(5), rat(5));
    }

    #[test]
    fn snake_identity_for_small_dimensions() {
        for n in 1..=8 {
            assert!(snake_identity_holds(n), "snake failed at n = {n}");
        }
    }

    #[test]
    fn trace_closure_of_identities_and_composites() {
        assert_eq!(trace_closure(&LinearMap::identity(4)).unwrap(), rat(4));
        // cup ∘ cap is an n²×n² matrix of trace n.
        let m = cup(2).mul(&cap(2));
        assert_eq!((m.rows(), m.cols()), (4, 4));
        assert_eq!(trace_closure(&m).unwrap(), rat(2));
        assert!(matches!(
            trace_closure(&cup(2)),
            Err(VectError::NotSquare { rows: 4, cols: 1 })
        ));
    }

    #[test]
    fn multiplicative_over_disjoint_circles() {
        // k disjoint circles: (cap ⊗ … ⊗ cap)(cup ⊗ … ⊗ cup) = n^k.
        for n in [2usize, 3] {
            let mut caps = cap(n);
            let mut cups = cup(n);
            for k in 2..=3 {
                caps = caps.kron(&cap(n));
                cups = cups.kron(&cup(n));
                assert_eq!(caps.mul(&cups).get(0, 0), &rat(n.pow(k) as i64));
            }
        }
    }

    #[test]
    fn trace_closure_matches_tensor_dimension() {
        let config = SignedPointConfig(vec![Sign::Plus, Sign::Minus, Sign::Plus]);
        let space = space_of(&config, 2);
        assert_eq!(space.dimension, 8);
        assert_eq!(trace_closure(&LinearMap::identity(space.dimension)).unwrap(), rat(8));
    }

    /// Random idempotent of rank k: P = A (B A)⁻¹ B with A n×k, B k×n.
    fn random_idempotent(n: usize, k: usize, rng: &mut SplitMix64) -> Option<LinearMap> {
        let mut a = LinearMap::zeros(n, k);
        let mut b = LinearMap::zeros(k, n);
        for r in 0..n {
            for c in 0..k {
                a.set(r, c, rat(rng.next_range_i64(-3, 3)));
                b.set(c, r, rat(rng.next_range_i64(-3, 3)));
            }
        }
        let ba = b.mul(&a);
        let inv = invert(&ba)?;
        Some(a.mul(&inv).mul(&b))
    }

    /// Gauss–Jordan inverse; `None` for singular input.
    fn invert(m: &LinearMap) -> Option<LinearMap> {
        let n = m.rows();
        if m.cols() != n {
            return None;
        }
        let mut work = m.clone();
        let mut inv = LinearMap::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work.get(r, col).is_zero())?;
            for c in 0..n {
                let (a, b) = (work.get(col, c).clone(), work.get(pivot, c).clone());
                work.set(col, c, b);
                work.set(pivot, c, a);
                let (a, b) = (inv.get(col, c).clone(), inv.get(pivot, c).clone());
                inv.set(col, c, b);
                inv.set(pivot, c, a);
            }
            let scale = Rational::one() / work.get(col, col).clone();
            for c in 0..n {
                let w = work.get(col, c) * &scale;
                work.set(col, c, w);
                let v = inv.get(col, c) * &scale;
                inv.set(col, c, v);
            }
            for r in 0..n {
                if r != col && !work.get(r, col).is_zero() {
                    let factor = work.get(r, col).clone();
                    for c in 0..n {
                        let w = work.get(r, c) - &factor * work.get(col, c);
                        work.set(r, c, w);
                        let v = inv.get(r, c) - &factor * inv.get(col, c);
                        inv.set(r, c, v);
                    }
                }
            }
        }
        Some(inv)
    }

    #[test]
    fn full_rank_idempotents_are_the_identity() {
        let mut rng = SplitMix64::new(2024);
        let mut full_rank_seen = 0;
        let mut proper_seen = 0;
        for _ in 0..60 {
            let n = 2 + rng.next_below(3) as usize;
            let k = 1 + rng.next_below(n as u64) as usize;
            let Some(p) = random_idempotent(n, k, &mut rng) else { continue };
            // Idempotence by construction.
            assert_eq!(p.mul(&p), p);
            assert_eq!(p.rank(), k);
            if k == n {
                assert_eq!(p, LinearMap::identity(n), "full-rank idempotent must be id");
                full_rank_seen += 1;
            } else {
                assert_ne!(p, LinearMap::identity(n));
                proper_seen += 1;
            }
        }
        assert!(full_rank_seen > 0 && proper_seen > 0, "both cases must be exercised");
    }

    #[test]
    fn rank_handles_fractions() {
        let m = LinearMap::from_rows(vec![
            vec![frac(1, 2), frac(1, 3)],
            vec![frac(3, 2), rat(1)],
        ]);
        assert_eq!(m.rank(), 1);
        assert_eq!(LinearMap::identity(3).rank(), 3);
        assert_eq!(LinearMap::zeros(2, 5).rank(), 0);
    }
}
