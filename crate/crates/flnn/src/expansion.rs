//! Polynomial input expansion for functional-link networks.
//!
//! A raw feature vector is augmented with product terms over distinct
//! feature indices up to a configured order: all first-order terms
//! `x[i]`, then all pairs `x[i]*x[j]` with `i < j`, then all triples
//! with `i < j < k`, and so on. The expanded vector is what the single
//! trainable layer of the network sees, so the ordering here fixes the
//! weight layout everywhere else.
//!
//! Term count grows as `sum of C(n, r) for r = 1..=order`; second order
//! is cheap, but each extra order multiplies the width roughly by
//! `n / order`, so keep the order small for wide inputs.

use crate::error::{Error, Result};

/// How index tuples for product terms are generated.
///
/// Only strictly increasing tuples are implemented; the variant with
/// repeated indices (squares, cubes) would slot in here if ever needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[non_exhaustive]
pub enum IndexPolicy {
    /// Strictly increasing index tuples (`i < j < k`): no squares, no repeats.
    DistinctIndices,
}

/// Defines which product terms augment the raw input vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionSpec {
    input_dim: usize,
    order: usize,
    index_policy: IndexPolicy,
}

impl ExpansionSpec {
    /// Expansion over `input_dim` raw features with product terms up to
    /// `order`, using distinct indices. Both arguments must be >= 1.
    pub fn new(input_dim: usize, order: usize) -> Result<Self> {
        if input_dim == 0 {
            return Err(Error::Config("expansion input_dim must be >= 1".into()));
        }
        if order == 0 {
            return Err(Error::Config("expansion order must be >= 1".into()));
        }
        Ok(Self {
            input_dim,
            order,
            index_policy: IndexPolicy::DistinctIndices,
        })
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index_policy(&self) -> IndexPolicy {
        self.index_policy
    }

    /// Number of enhanced input features (bias not included).
    pub fn expanded_dim(&self) -> usize {
        (1..=self.order)
            .map(|r| binomial(self.input_dim, r))
            .sum()
    }

    /// Maps a raw feature vector to the enhanced vector.
    ///
    /// Ordering is canonical and stable: order-1 terms in index order,
    /// then order-2 terms in lexicographic index order, then order-3,
    /// etc. The term for an index set `{i, j}` is `x[i] * x[j]`.
    pub fn expand(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                got: x.len(),
            });
        }
        let mut out = Vec::with_capacity(self.expanded_dim());
        out.extend_from_slice(x);
        for r in 2..=self.order {
            for_each_combination(self.input_dim, r, |indices| {
                out.push(indices.iter().map(|&i| x[i]).product());
            });
        }
        Ok(out)
    }
}

/// C(n, r) without overflow surprises for the sizes this crate meets.
fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut c: u128 = 1;
    for i in 1..=r {
        c = c * (n - r + i) as u128 / i as u128;
    }
    c as usize
}

/// Visits all r-combinations of `0..n` in lexicographic order.
fn for_each_combination(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    if r > n || r == 0 {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        f(&idx);
        // Rightmost index that can still advance.
        let mut i = r;
        while i > 0 && idx[i - 1] == n - r + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
