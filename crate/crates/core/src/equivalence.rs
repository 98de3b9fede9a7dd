//! Monomial equivalence of linear codes by backtracking search.
//!
//! A monomial map sends coordinate `i` to `perm[i]` and multiplies it by
//! `scalars[i]`. The search assigns target coordinates one at a time. For the
//! partial assignment it keeps the columns of both generator matrices, and of
//! both parity-check matrices (scaled by the inverse multipliers), in
//! incremental echelon form. Two codes agree on a set of coordinates exactly
//! when their columns there satisfy the same linear relations, so a candidate
//! survives only if it is dependent on the earlier columns in the same way on
//! both sides. When a column is dependent the relation also fixes its
//! multiplier, so scalars are only enumerated for columns independent in both
//! the code and its dual.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::FieldCtx;

/// Default node budget for [`find_equivalence`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Codes with at most this many codewords get weight-profile invariants.
const PROFILE_BUDGET: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialMap {
    /// Coordinate `i` of the source lands on coordinate `perm[i]`.
    pub perm: Vec<usize>,
    /// Encoded nonzero multiplier applied to source coordinate `i`.
    pub scalars: Vec<u32>,
}

impl MonomialMap {
    pub fn identity(n: usize) -> Self {
        MonomialMap {
            perm: (0..n).collect(),
            scalars: vec![1; n],
        }
    }

    pub fn reversal(n: usize) -> Self {
        MonomialMap {
            perm: (0..n).rev().collect(),
            scalars: vec![1; n],
        }
    }

    pub fn is_permutation(&self) -> bool {
        self.scalars.iter().all(|&s| s == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EquivalenceStatus {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

impl fmt::Display for EquivalenceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceStatus::Equivalent => "Equivalent",
            EquivalenceStatus::NotEquivalent => "NotEquivalent",
            EquivalenceStatus::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub status: EquivalenceStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MonomialMap>,
    /// Name of the invariant that separates the codes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<String>,
    pub nodes_explored: u64,
}

impl EquivalenceVerdict {
    pub fn is_equivalent(&self) -> bool {
        self.status == EquivalenceStatus::Equivalent
    }

    fn not_equivalent(separator: &str, nodes: u64) -> Self {
        EquivalenceVerdict {
            status: EquivalenceStatus::NotEquivalent,
            witness: None,
            separator: Some(separator.to_string()),
            nodes_explored: nodes,
        }
    }
}

/// Whether `map` carries the row space of `from` exactly onto `to`.
pub fn verify_witness(from: &LinearCode, to: &LinearCode, map: &MonomialMap) -> bool {
    from.ctx() == to.ctx()
        && from.len() == to.len()
        && from
            .apply_monomial(&map.perm, &map.scalars)
            .map(|img| &img == to)
            .unwrap_or(false)
}

/// Insertion-ordered echelon basis of a growing list of column vectors.
/// Each stored vector remembers how it combines the accepted independent
/// columns, so a dependent column can be expressed in those columns.
struct Span {
    ctx: FieldCtx,
    /// (pivot, reduced vector, combination over independent columns)
    rows: Vec<(usize, Vec<u32>, Vec<u32>)>,
}

enum Reduced {
    /// Coefficients over the independent columns accepted so far.
    Dependent(Vec<u32>),
    Independent(usize, Vec<u32>, Vec<u32>),
}

impl Span {
    fn new(ctx: &FieldCtx) -> Self {
        Span {
            ctx: ctx.clone(),
            rows: Vec::new(),
        }
    }

    fn reduce(&self, x: &[u32]) -> Reduced {
        let f = &self.ctx;
        let r = self.rows.len();
        let mut v = x.to_vec();
        let mut coef = vec![0u32; r];
        for (pivot, row, combo) in &self.rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (vi, &ri) in v.iter_mut().zip(row) {
                if ri != 0 {
                    *vi = f.sub(*vi, f.mul(c, ri));
                }
            }
            for (a, &b) in coef.iter_mut().zip(combo) {
                if b != 0 {
                    *a = f.add(*a, f.mul(c, b));
                }
            }
        }
        match v.iter().position(|&e| e != 0) {
            None => Reduced::Dependent(coef),
            Some(p) => {
                let inv = f.inv(v[p]);
                for e in v.iter_mut() {
                    *e = f.mul(*e, inv);
                }
                // new = (x - sum coef_b x_b) / v[p]
                let mut combo: Vec<u32> = coef.iter().map(|&c| f.neg(f.mul(c, inv))).collect();
                combo.push(inv);
                Reduced::Independent(p, v, combo)
            }
        }
    }

    fn push(&mut self, reduced: Reduced) {
        if let Reduced::Independent(p, v, mut combo) = reduced {
            for (_, _, c) in self.rows.iter_mut() {
                c.push(0);
            }
            combo.resize(self.rows.len() + 1, 0);
            self.rows.push((p, v, combo));
        }
    }

    fn pop_to(&mut self, len: usize) {
        self.rows.truncate(len);
        for (_, _, c) in self.rows.iter_mut() {
            c.truncate(len);
        }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

/// Scalar constraint from one pair of checks.
enum Scalar {
    Any,
    Exactly(u32),
    Impossible,
}

fn matched_scalar(ctx: &FieldCtx, src: &Reduced, dst: &Reduced) -> Scalar {
    match (src, dst) {
        (Reduced::Independent(..), Reduced::Independent(..)) => Scalar::Any,
        (Reduced::Dependent(a), Reduced::Dependent(b)) => {
            // need b = lambda * a
            match a.iter().position(|&x| x != 0) {
                None => {
                    if b.iter().all(|&x| x == 0) {
                        Scalar::Any
                    } else {
                        Scalar::Impossible
                    }
                }
                Some(j) => {
                    let lambda = ctx.div(b[j], a[j]);
                    if lambda != 0 && a.iter().zip(b).all(|(&x, &y)| ctx.mul(lambda, x) == y) {
                        Scalar::Exactly(lambda)
                    } else {
                        Scalar::Impossible
                    }
                }
            }
        }
        _ => Scalar::Impossible,
    }
}

fn scale(ctx: &FieldCtx, v: &[u32], s: u32) -> Vec<u32> {
    v.iter().map(|&x| ctx.mul(x, s)).collect()
}

/// Per-coordinate invariant: for each weight, how many codewords of that
/// weight are nonzero at the coordinate. Returns `None` when the code is too
/// large to enumerate.
fn coordinate_profiles(code: &LinearCode) -> Option<Vec<Vec<u64>>> {
    let n = code.len();
    let mut prof = vec![vec![0u64; n + 1]; n];
    code.for_each_codeword(PROFILE_BUDGET, |w| {
        let wt = w.iter().filter(|&&x| x != 0).count();
        for (j, &x) in w.iter().enumerate() {
            if x != 0 {
                prof[j][wt] += 1;
            }
        }
    })
    .ok()?;
    Some(prof)
}

struct Search<'a> {
    ctx: FieldCtx,
    n: usize,
    src_g: Vec<Vec<u32>>,
    src_h: Vec<Vec<u32>>,
    dst_g: Vec<Vec<u32>>,
    dst_h: Vec<Vec<u32>>,
    src_color: &'a [usize],
    dst_color: &'a [usize],
    order: Vec<usize>,
    xg: Span,
    yg: Span,
    xh: Span,
    yh: Span,
    used: Vec<bool>,
    assignment: Vec<(usize, u32)>,
    nodes: u64,
    budget: u64,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Outcome {
        if depth == self.n {
            return Outcome::Found;
        }
        let f = self.ctx.clone();
        let target = self.order[depth];
        let yg_red = self.yg.reduce(&self.dst_g[target]);
        let yh_red = self.yh.reduce(&self.dst_h[target]);
        let marks = (self.xg.len(), self.yg.len(), self.xh.len(), self.yh.len());

        for src in 0..self.n {
            if self.used[src] || self.src_color[src] != self.dst_color[target] {
                continue;
            }
            let xg_red = self.xg.reduce(&self.src_g[src]);
            let xh_red = self.xh.reduce(&self.src_h[src]);
            // Generator columns scale by lambda, parity columns by 1/lambda.
            let from_g = matched_scalar(&f, &xg_red, &yg_red);
            let from_h = match matched_scalar(&f, &xh_red, &yh_red) {
                Scalar::Exactly(mu) => Scalar::Exactly(f.inv(mu)),
                other => other,
            };
            let candidates: Vec<u32> = match (from_g, from_h) {
                (Scalar::Impossible, _) | (_, Scalar::Impossible) => continue,
                (Scalar::Exactly(a), Scalar::Exactly(b)) if a != b => continue,
                (Scalar::Exactly(a), _) | (_, Scalar::Exactly(a)) => vec![a],
                (Scalar::Any, Scalar::Any) if depth == 0 => vec![1],
                (Scalar::Any, Scalar::Any) => f.nonzero_values().collect(),
            };
            for lambda in candidates {
                if depth == 0 && lambda != 1 {
                    // A global rescaling never changes the image code.
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Outcome::OutOfBudget;
                }
                let inv = f.inv(lambda);
                self.xg
                    .push(self.xg.reduce(&scale(&f, &self.src_g[src], lambda)));
                self.yg.push(self.yg.reduce(&self.dst_g[target]));
                self.xh
                    .push(self.xh.reduce(&scale(&f, &self.src_h[src], inv)));
                self.yh.push(self.yh.reduce(&self.dst_h[target]));
                self.used[src] = true;
                self.assignment.push((src, lambda));

                match self.run(depth + 1) {
                    Outcome::Exhausted => {}
                    done => return done,
                }

                self.assignment.pop();
                self.used[src] = false;
                self.xg.pop_to(marks.0);
                self.yg.pop_to(marks.1);
                self.xh.pop_to(marks.2);
                self.yh.pop_to(marks.3);
            }
        }
        Outcome::Exhausted
    }
}

/// Target coordinates ordered so that linear relations show up early:
/// prefer columns dependent on those already chosen (in the code or its
/// dual), then columns from rarer colour classes.
fn search_order(ctx: &FieldCtx, g: &[Vec<u32>], h: &[Vec<u32>], color: &[usize]) -> Vec<usize> {
    let n = g.len();
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in color {
        *class_size.entry(c).or_default() += 1;
    }
    let mut sg = Span::new(ctx);
    let mut sh = Span::new(ctx);
    let mut chosen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&j| !chosen[j])
            .min_by_key(|&j| {
                let dep_g = matches!(sg.reduce(&g[j]), Reduced::Dependent(_));
                let dep_h = matches!(sh.reduce(&h[j]), Reduced::Dependent(_));
                let free = 2 - dep_g as usize - dep_h as usize;
                (free, class_size[&color[j]], j)
            })
            .expect("a column remains");
        chosen[best] = true;
        sg.push(sg.reduce(&g[best]));
        sh.push(sh.reduce(&h[best]));
        order.push(best);
    }
    order
}

fn columns(code: &LinearCode) -> Vec<Vec<u32>> {
    (0..code.len()).map(|c| code.basis().column(c)).collect()
}

/// Decides whether `c1` and `c2` are monomially equivalent. An `Equivalent`
/// verdict always carries a witness that has been re-checked with
/// [`verify_witness`].
pub fn find_equivalence(
    c1: &LinearCode,
    c2: &LinearCode,
    budget: u64,
) -> Result<EquivalenceVerdict> {
    if c1.ctx() != c2.ctx() {
        return Err(Error::ContextMismatch(
            c1.ctx().to_string(),
            c2.ctx().to_string(),
        ));
    }
    if c1.len() != c2.len() {
        return Err(Error::LengthMismatch(c1.len(), c2.len()));
    }
    let n = c1.len();
    if c1.dimension() != c2.dimension() {
        return Ok(EquivalenceVerdict::not_equivalent("dimension", 0));
    }
    let ctx = c1.ctx().clone();
    let (d1, d2) = (c1.dual(), c2.dual());

    if let (Ok(w1), Ok(w2)) = (
        c1.weight_enumerator(PROFILE_BUDGET),
        c2.weight_enumerator(PROFILE_BUDGET),
    ) {
        if w1 != w2 {
            return Ok(EquivalenceVerdict::not_equivalent("weight enumerator", 0));
        }
    }

    // Colour classes from the profiles of the code and of its dual.
    let profile = |c: &LinearCode, d: &LinearCode| -> Vec<Vec<u64>> {
        let a = coordinate_profiles(c);
        let b = coordinate_profiles(d);
        (0..n)
            .map(|j| {
                let mut key = a.as_ref().map_or(vec![], |p| p[j].clone());
                key.extend(b.as_ref().map_or(vec![], |p| p[j].clone()));
                key
            })
            .collect()
    };
    let (p1, p2) = (profile(c1, &d1), profile(c2, &d2));
    let mut palette: HashMap<Vec<u64>, usize> = HashMap::new();
    for key in p1.iter().chain(&p2) {
        let next = palette.len();
        palette.entry(key.clone()).or_insert(next);
    }
    let color1: Vec<usize> = p1.iter().map(|k| palette[k]).collect();
    let color2: Vec<usize> = p2.iter().map(|k| palette[k]).collect();
    let (mut s1, mut s2) = (color1.clone(), color2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(EquivalenceVerdict::not_equivalent(
            "coordinate weight profile",
            0,
        ));
    }

    let (g1, h1, g2, h2) = (columns(c1), columns(&d1), columns(c2), columns(&d2));
    let order = search_order(&ctx, &g2, &h2, &color2);
    let mut search = Search {
        ctx: ctx.clone(),
        n,
        src_g: g1,
        src_h: h1,
        dst_g: g2,
        dst_h: h2,
        src_color: &color1,
        dst_color: &color2,
        order,
        xg: Span::new(&ctx),
        yg: Span::new(&ctx),
        xh: Span::new(&ctx),
        yh: Span::new(&ctx),
        used: vec![false; n],
        assignment: Vec::with_capacity(n),
        nodes: 0,
        budget,
    };
    let outcome = search.run(0);
    let nodes = search.nodes.min(budget);
    match outcome {
        Outcome::Found => {
            let mut map = MonomialMap::identity(n);
            for (depth, &(src, lambda)) in search.assignment.iter().enumerate() {
                map.perm[src] = search.order[depth];
                map.scalars[src] = lambda;
            }
            if !verify_witness(c1, c2, &map) {
                return Err(Error::Consistency(
                    "equivalence witness failed verification".into(),
                ));
            }
            Ok(EquivalenceVerdict {
                status: EquivalenceStatus::Equivalent,
                witness: Some(map),
                separator: None,
                nodes_explored: nodes,
            })
        }
        Outcome::Exhausted => Ok(EquivalenceVerdict::not_equivalent(
            "exhaustive search",
            nodes,
        )),
        Outcome::OutOfBudget => Ok(EquivalenceVerdict {
            status: EquivalenceStatus::Inconclusive,
            witness: None,
            separator: None,
            nodes_explored: nodes,
        }),
    }
}

/// Whether `code` is monomially equivalent to its dual.
pub fn is_isodual(code: &LinearCode, budget: u64) -> Result<EquivalenceVerdict> {
    if 2 * code.dimension() != code.len() {
        return Ok(EquivalenceVerdict::not_equivalent("dimension", 0));
    }
    find_equivalence(code, &code.dual(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn code(text: &str, f: &FieldCtx) -> LinearCode {
        LinearCode::from_rows(&Matrix::parse(text, f).unwrap())
    }

    #[test]
    fn finds_scaled_permutation() {
        let f5 = FieldCtx::prime(5).unwrap();
        let c1 = code("1 0 2 3 1; 0 1 4 1 1", &f5);
        let map = MonomialMap {
            perm: vec![3, 0, 4, 1, 2],
            scalars: vec![2, 3, 1, 4, 2],
        };
        let c2 = c1.apply_monomial(&map.perm, &map.scalars).unwrap();
        let v = find_equivalence(&c1, &c2, DEFAULT_NODE_BUDGET).unwrap();
        assert!(v.is_equivalent());
        assert!(verify_witness(&c1, &c2, v.witness.as_ref().unwrap()));
    }

    #[test]
    fn separates_by_dimension_and_weights() {
        let f2 = FieldCtx::prime(2).unwrap();
        let a = code("1 1 0 0", &f2);
        let b = code("1 1 1 0", &f2);
        let c = code("1 1 0 0; 0 0 1 1", &f2);
        let v = find_equivalence(&a, &c, 100).unwrap();
        assert_eq!(v.separator.as_deref(), Some("dimension"));
        let v = find_equivalence(&a, &b, 100).unwrap();
        assert_eq!(v.status, EquivalenceStatus::NotEquivalent);
        assert_eq!(v.separator.as_deref(), Some("weight enumerator"));
    }

    #[test]
    fn isodual_small_binary() {
        // g = x^2+x+1 | x^4+x^2+1 over GF(2): rows of the band matrix.
        let f2 = FieldCtx::prime(2).unwrap();
        let c = code("1 1 1 0; 0 1 1 1", &f2);
        let v = is_isodual(&c, DEFAULT_NODE_BUDGET).unwrap();
        assert!(v.is_equivalent());
        assert!(v.witness.unwrap().is_permutation());
        let odd = code("1 1 1", &f2);
        assert_eq!(
            is_isodual(&odd, 10).unwrap().status,
            EquivalenceStatus::NotEquivalent
        );
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let f3 = FieldCtx::prime(3).unwrap();
        let c1 = code("1 0 0 1 2 1; 0 1 0 2 1 1; 0 0 1 1 1 2", &f3);
        let c2 = c1
            .apply_monomial(&[5, 4, 3, 2, 1, 0], &[1, 2, 1, 2, 1, 2])
            .unwrap();
        let v = find_equivalence(&c1, &c2, 2).unwrap();
        assert_eq!(v.status, EquivalenceStatus::Inconclusive);
        assert!(v.witness.is_none());
    }

    #[test]
    fn span_expresses_dependencies() {
        let f3 = FieldCtx::prime(3).unwrap();
        let mut s = Span::new(&f3);
        s.push(s.reduce(&[1, 1, 0]));
        s.push(s.reduce(&[0, 1, 1]));
        match s.reduce(&[1, 2, 1]) {
            Reduced::Dependent(c) => assert_eq!(c, vec![1, 1]),
            _ => panic!("expected dependency"),
        }
        match s.reduce(&[2, 0, 1]) {
            Reduced::Dependent(c) => assert_eq!(c, vec![2, 1]),
            _ => panic!("expected dependency"),
        }
        assert!(matches!(s.reduce(&[0, 0, 1]), Reduced::Independent(..)));
    }
}
