//! Linear codes held as canonical reduced row-echelon bases.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::matrix::Matrix;

/// Default cap on the number of codewords any enumeration may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 22;

/// A `k`-dimensional subspace of GF(q)^n.
///
/// The basis is the unique RREF generator matrix without zero rows, so
/// structural equality is code equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearCode {
    n: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// `counts[w]` is the number of codewords of Hamming weight `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightEnumerator {
    pub counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight present.
    pub fn min_weight(&self) -> Option<usize> {
        self.counts
            .iter()
            .skip(1)
            .position(|&c| c > 0)
            .map(|w| w + 1)
    }
}

pub(crate) fn value_json(ctx: &FieldCtx, v: u32) -> Value {
    if ctx.is_prime_field() {
        json!(v)
    } else {
        json!(ctx.format_value(v))
    }
}

impl LinearCode {
    /// The row space of `m`.
    pub fn from_rows(m: &Matrix) -> LinearCode {
        let (r, pivots) = m.rref();
        let k = pivots.len();
        let basis = Matrix::new(
            r.ctx(),
            k,
            m.cols(),
            (0..k).flat_map(|i| r.row(i).to_vec()).collect(),
        )
        .expect("rows taken from a valid matrix");
        LinearCode {
            n: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_row_vecs(ctx: &FieldCtx, n: usize, rows: &[Vec<u32>]) -> Result<LinearCode> {
        Ok(Self::from_rows(&Matrix::from_rows(ctx, n, rows)?))
    }

    pub fn zero(ctx: &FieldCtx, n: usize) -> LinearCode {
        Self::from_rows(&Matrix::zeros(ctx, 0, n))
    }

    pub fn full(ctx: &FieldCtx, n: usize) -> LinearCode {
        Self::from_rows(&Matrix::identity(ctx, n))
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.basis.ctx()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.ctx() != other.ctx() {
            return Err(Error::ContextMismatch(
                self.ctx().to_string(),
                other.ctx().to_string(),
            ));
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Null space under the Euclidean inner product.
    pub fn dual(&self) -> LinearCode {
        let f = self.ctx();
        let is_pivot: Vec<bool> = (0..self.n).map(|c| self.pivots.contains(&c)).collect();
        let rows: Vec<Vec<u32>> = (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.n];
                v[free] = 1;
                for (i, &p) in self.pivots.iter().enumerate() {
                    v[p] = f.neg(self.basis.get(i, free));
                }
                v
            })
            .collect();
        Self::from_row_vecs(f, self.n, &rows).expect("rows have length n")
    }

    /// Membership by elimination against the RREF basis.
    pub fn contains_vector(&self, v: &[u32]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = self.ctx();
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c == 0 {
                continue;
            }
            for (j, wj) in w.iter_mut().enumerate() {
                *wj = f.sub(*wj, f.mul(c, self.basis.get(i, j)));
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Whether `other` is a subcode of `self`.
    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        Ok((0..other.dimension()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    /// `msg * G` for a message of length k.
    pub fn encode(&self, msg: &[u32]) -> Vec<u32> {
        let f = self.ctx();
        let mut out = vec![0u32; self.n];
        for (i, &m) in msg.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(m, self.basis.get(i, j)));
            }
        }
        out
    }

    /// `q^k`, or `None` if it does not fit in `u128`.
    pub fn size(&self) -> Option<u128> {
        (self.ctx().order() as u128).checked_pow(self.dimension() as u32)
    }

    fn check_budget(&self, budget: u64) -> Result<()> {
        match self.size() {
            Some(s) if s <= budget as u128 => Ok(()),
            s => Err(Error::BudgetExceeded {
                needed: s.unwrap_or(u128::MAX),
                budget,
            }),
        }
    }

    /// Visits every codeword once, the zero word first. Consecutive messages
    /// differ in few positions, so each step is an `O(n)` row update.
    pub fn for_each_codeword<F: FnMut(&[u32])>(&self, budget: u64, mut visit: F) -> Result<()> {
        self.check_budget(budget)?;
        let f = self.ctx();
        let q = f.order();
        let k = self.dimension();
        let mut digits = vec![0u32; k];
        let mut word = vec![0u32; self.n];
        visit(&word);
        loop {
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(());
                }
                let old = digits[i];
                let new = if old + 1 == q { 0 } else { old + 1 };
                digits[i] = new;
                let delta = f.sub(new, old);
                let row = self.basis.row(i);
                for (w, &g) in word.iter_mut().zip(row) {
                    if g != 0 {
                        *w = f.add(*w, f.mul(delta, g));
                    }
                }
                if new != 0 {
                    break;
                }
                i += 1;
            }
            visit(&word);
        }
    }

    /// Collects all codewords; `q^k` must not exceed `budget`.
    pub fn codewords(&self, budget: u64) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        self.for_each_codeword(budget, |w| out.push(w.to_vec()))?;
        Ok(out)
    }

    pub fn weight_enumerator(&self, budget: u64) -> Result<WeightEnumerator> {
        let mut counts = vec![0u64; self.n + 1];
        self.for_each_codeword(budget, |w| {
            counts[w.iter().filter(|&&x| x != 0).count()] += 1;
        })?;
        Ok(WeightEnumerator { counts })
    }

    /// Minimum Hamming weight of a nonzero codeword; `None` for the zero
    /// code.
    pub fn min_distance(&self, budget: u64) -> Result<Option<usize>> {
        Ok(self.weight_enumerator(budget)?.min_weight())
    }

    /// Image under the monomial map sending coordinate `i` to `perm[i]` with
    /// multiplier `scalars[i]`.
    pub fn apply_monomial(&self, perm: &[usize], scalars: &[u32]) -> Result<LinearCode> {
        if perm.len() != self.n || scalars.len() != self.n {
            return Err(Error::LengthMismatch(self.n, perm.len().min(scalars.len())));
        }
        let f = self.ctx();
        let mut seen = vec![false; self.n];
        for (&p, &s) in perm.iter().zip(scalars) {
            if p >= self.n || seen[p] || s == 0 || s >= f.order() {
                return Err(Error::Consistency("not a monomial map".into()));
            }
            seen[p] = true;
        }
        let rows: Vec<Vec<u32>> = (0..self.dimension())
            .map(|r| {
                let mut v = vec![0u32; self.n];
                for (i, &g) in self.basis.row(r).iter().enumerate() {
                    v[perm[i]] = f.mul(scalars[i], g);
                }
                v
            })
            .collect();
        Self::from_row_vecs(f, self.n, &rows)
    }

    /// Coordinate reversal `(c_{n-1}, ..., c_0)`.
    pub fn reversed(&self) -> LinearCode {
        let perm: Vec<usize> = (0..self.n).map(|i| self.n - 1 - i).collect();
        self.apply_monomial(&perm, &vec![1; self.n])
            .expect("reversal is a permutation")
    }

    /// `{n, k, basis, pivots}`.
    pub fn to_json(&self) -> Value {
        let f = self.ctx();
        let basis: Vec<Vec<Value>> = (0..self.dimension())
            .map(|r| {
                self.basis
                    .row(r)
                    .iter()
                    .map(|&v| value_json(f, v))
                    .collect()
            })
            .collect();
        json!({
            "n": self.n,
            "k": self.dimension(),
            "basis": basis,
            "pivots": self.pivots,
        })
    }
}

/// Smallest `t <= max_t` such that some `t` columns of the parity-check
/// matrix `h` are linearly dependent. The minimum distance of the code with
/// parity-check matrix `h` is exactly that `t`.
pub fn dependent_column_count(h: &Matrix, max_t: usize) -> Option<usize> {
    fn subsets(n: usize, t: usize, start: usize, cur: &mut Vec<usize>, h: &Matrix) -> bool {
        if cur.len() == t {
            return h.select_columns(cur).rank() < t;
        }
        for c in start..n {
            cur.push(c);
            if subsets(n, t, c + 1, cur, h) {
                return true;
            }
            cur.pop();
        }
        false
    }
    (1..=max_t.min(h.cols())).find(|&t| subsets(h.cols(), t, 0, &mut Vec::new(), h))
}
