//! Square matrices of curves under the min-plus matrix operations.
//!
//! Addition is the entrywise minimum, multiplication composes through
//! `C[i][j] = min_k A[i][k] ∗ B[k][j]`, and the Kleene star
//! `A* = I ⊕ A ⊕ A² ⊕ …` collects the cheapest way to route a flow along
//! any chain of entries. Entries are whole [`Curve`]s, so a single matrix
//! describes how every input counter of a small system bounds every output
//! counter.

use crate::curve::{convolve, equiv, minimum, sub_additive_closure, Curve, CurveError};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveMatrix {
    n: usize,
    // row-major
    entries: Vec<Curve>,
}

impl CurveMatrix {
    /// All-`ε` matrix: the zero of the algebra.
    pub fn epsilon(n: usize) -> CurveMatrix {
        assert!(n > 0, "matrix dimension must be positive");
        CurveMatrix { n, entries: vec![Curve::epsilon(); n * n] }
    }

    /// Identity: the convolution identity on the diagonal, `ε` elsewhere.
    pub fn identity(n: usize) -> CurveMatrix {
        let mut m = CurveMatrix::epsilon(n);
        for i in 0..n {
            m[(i, i)] = Curve::conv_identity();
        }
        m
    }

    /// Build from rows; every row must have the same length as there are
    /// rows.
    pub fn from_rows(rows: Vec<Vec<Curve>>) -> CurveMatrix {
        let n = rows.len();
        assert!(n > 0, "matrix dimension must be positive");
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        CurveMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entrywise minimum.
    pub fn min(&self, other: &CurveMatrix) -> CurveMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| minimum(a, b))
            .collect();
        CurveMatrix { n: self.n, entries }
    }

    /// Min-plus product: `C[i][j] = min_k self[i][k] ∗ other[k][j]`.
    pub fn mul(&self, other: &CurveMatrix) -> CurveMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = CurveMatrix::epsilon(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Curve::epsilon();
                for k in 0..n {
                    let a = &self[(i, k)];
                    let b = &other[(k, j)];
                    // ε absorbs convolution; skipping keeps products sparse
                    if a.is_epsilon() || b.is_epsilon() {
                        continue;
                    }
                    acc = minimum(&acc, &convolve(a, b));
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// Entrywise equivalence as functions (representations may differ).
    pub fn equiv(&self, other: &CurveMatrix) -> bool {
        self.n == other.n
            && self.entries.iter().zip(&other.entries).all(|(a, b)| equiv(a, b))
    }

    /// Kleene star by single-node elimination: nodes are absorbed one at a
    /// time, each one folding its self-loop closure into every path that
    /// passes through it. Fails if some self-loop has no closure (a cycle
    /// that pays a strictly negative amount can be pumped forever).
    pub fn star(&self) -> Result<CurveMatrix, CurveError> {
        let n = self.n;
        let mut m = self.clone();
        for k in 0..n {
            let loop_k = sub_additive_closure(&m[(k, k)])?;
            let mut next = m.clone();
            for i in 0..n {
                for j in 0..n {
                    let via = convolve(&m[(i, k)], &convolve(&loop_k, &m[(k, j)]));
                    next[(i, j)] = minimum(&m[(i, j)], &via);
                }
            }
            m = next;
        }
        Ok(m.min(&CurveMatrix::identity(n)))
    }

    /// `self ∗ self` iterated: the `k`-th min-plus power.
    pub fn pow(&self, k: u32) -> CurveMatrix {
        let mut acc = CurveMatrix::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Index<(usize, usize)> for CurveMatrix {
    type Output = Curve;
    fn index(&self, (i, j): (usize, usize)) -> &Curve {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of bounds for dim {}", self.n);
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CurveMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Curve {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of bounds for dim {}", self.n);
        &mut self.entries[i * self.n + j]
    }
}

impl fmt::Debug for CurveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CurveMatrix {}×{} [", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                writeln!(f, "  [{i}][{j}] = {:?}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}
