//! Linear codes over GF(q) and minimum-distance engines.

mod exhaustive;
mod isd;
mod random;
mod result;
mod vectors;

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldRef};
use crate::linalg::{dot, Matrix};

pub use exhaustive::{min_distance_exhaustive, ExhaustiveOptions, DEFAULT_EXHAUSTIVE_BUDGET};
pub use isd::{min_distance_isd, IsdOptions, DEFAULT_ISD_BUDGET};
pub use random::{min_weight_random, RandomOptions};
pub use result::{Certainty, DistanceResult};

/// A linear code held by its reduced row echelon generator matrix.
#[derive(Clone)]
pub struct LinearCode {
    generator: Matrix,
    pivots: Vec<usize>,
    parity: Arc<OnceLock<Matrix>>,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}] code over {}", self.length(), self.dimension(), self.field())
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}

impl LinearCode {
    /// The row space of `m`. Fails on the zero matrix.
    pub fn from_generator(m: &Matrix) -> Result<LinearCode> {
        let code = Self::from_generator_allow_zero(m);
        if code.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        Ok(code)
    }

    fn from_generator_allow_zero(m: &Matrix) -> LinearCode {
        let rr = m.rref();
        let generator = rr.matrix.select_rows(&(0..rr.rank).collect::<Vec<_>>());
        LinearCode { generator, pivots: rr.pivots, parity: Arc::new(OnceLock::new()) }
    }

    pub fn field(&self) -> &FieldRef {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// The k×n generator in reduced row echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Pivot columns of the generator, an information set.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// (n−k)×n parity-check matrix, computed on first use.
    pub fn parity_check(&self) -> &Matrix {
        self.parity.get_or_init(|| self.generator.nullspace())
    }

    /// The orthogonal code under the standard dot product. The dual of the
    /// full space is the zero code, whose distance is reported as absent.
    pub fn dual(&self) -> LinearCode {
        Self::from_generator_allow_zero(self.parity_check())
    }

    /// Removes the coordinates in `positions`.
    pub fn puncture(&self, positions: &[usize]) -> Result<LinearCode> {
        let n = self.length();
        let mut drop = vec![false; n];
        for &p in positions {
            if p >= n {
                return Err(Error::PositionOutOfRange(p));
            }
            drop[p] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&c| !drop[c]).collect();
        if keep.is_empty() {
            return Err(Error::PunctureAll);
        }
        Ok(Self::from_generator_allow_zero(&self.generator.select_columns(&keep)?))
    }

    /// Keeps only the coordinates in `positions`, in that order.
    pub fn restrict(&self, positions: &[usize]) -> Result<LinearCode> {
        if positions.is_empty() {
            return Err(Error::PunctureAll);
        }
        if let Some(&p) = positions.iter().find(|&&p| p >= self.length()) {
            return Err(Error::PositionOutOfRange(p));
        }
        Ok(Self::from_generator_allow_zero(&self.generator.select_columns(positions)?))
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        if word.len() != self.length() {
            return false;
        }
        let h = self.parity_check();
        let f = self.field();
        (0..h.rows()).all(|r| dot(f, h.row(r), word) == 0)
    }

    /// `msg · G`
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.dimension() {
            return Err(Error::ShapeMismatch(format!(
                "message of length {} for a code of dimension {}",
                msg.len(),
                self.dimension()
            )));
        }
        let f = self.field();
        let mut out = vec![0; self.length()];
        for (r, &m) in msg.iter().enumerate() {
            if m != 0 {
                crate::linalg::axpy(f, &mut out, m, self.generator.row(r));
            }
        }
        Ok(out)
    }

    /// Whether the coordinate permutation `perm` (position i goes to
    /// `perm[i]`) maps the code onto itself.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.length();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        let mut img = vec![0; n];
        (0..self.dimension()).all(|r| {
            for (i, &v) in self.generator.row(r).iter().enumerate() {
                img[perm[i]] = v;
            }
            self.contains(&img)
        })
    }

    /// Whether the permutations generate a group acting transitively on
    /// the coordinates.
    pub fn generates_transitive_group(n: usize, perms: &[Vec<usize>]) -> bool {
        if n == 0 {
            return true;
        }
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for p in perms {
                let j = p[i];
                if !reached[j] {
                    reached[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == n
    }
}

/// Hamming weight.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}
