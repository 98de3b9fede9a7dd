//! Brute-force oracles. These use only scalar field arithmetic from the
//! library and reimplement everything above it naively.

#![allow(dead_code)]

use std::collections::BTreeSet;

use polycode::FieldCtx;

pub type Poly = Vec<u32>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn mul(f: &FieldCtx, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder by schoolbook long division.
pub fn divmod(f: &FieldCtx, a: &[u32], b: &[u32]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - b.len() + 1];
    let lead_inv = f.inv(*b.last().unwrap());
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(*r.last().unwrap(), lead_inv);
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = f.sub(r[shift + j], f.mul(c, bj));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn divides(f: &FieldCtx, d: &[u32], a: &[u32]) -> bool {
    divmod(f, a, d).1.is_empty()
}

/// Monic polynomials of exactly degree `d`, counting through the lower
/// coefficients as base-q digits.
pub fn monics_of_degree(f: &FieldCtx, d: usize) -> Vec<Poly> {
    let q = f.order() as u64;
    (0..q.pow(d as u32))
        .map(|mut idx| {
            let mut p = vec![0; d + 1];
            for c in p.iter_mut().take(d) {
                *c = (idx % q) as u32;
                idx /= q;
            }
            p[d] = 1;
            p
        })
        .collect()
}

/// Factorization of a monic polynomial by trial division with monic
/// polynomials of increasing degree. Factors come out sorted by degree then
/// coefficient order, each paired with its multiplicity.
pub fn trial_factor(f: &FieldCtx, poly: &[u32]) -> Vec<(Poly, usize)> {
    let mut rest = trim(poly.to_vec());
    assert_eq!(rest.last(), Some(&1), "oracle expects monic input");
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let mut d = 1;
    while 2 * d < rest.len() {
        for cand in monics_of_degree(f, d) {
            let mut mult = 0;
            while divides(f, &cand, &rest) {
                rest = divmod(f, &rest, &cand).0;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        match out.iter_mut().find(|(p, _)| *p == rest) {
            Some(entry) => entry.1 += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    out
}

/// Least `e >= 1` with `x^e = 1` modulo `poly` after removing `x` factors,
/// found by repeated multiplication by `x`.
pub fn order_by_iteration(f: &FieldCtx, poly: &[u32], limit: u64) -> Option<u64> {
    let mut p = trim(poly.to_vec());
    while p.first() == Some(&0) {
        p.remove(0);
    }
    if p.len() <= 1 {
        return Some(1);
    }
    let one = vec![1u32];
    let mut cur = divmod(f, &[0, 1], &p).1;
    for e in 1..=limit {
        if cur == one {
            return Some(e);
        }
        cur = divmod(f, &mul(f, &cur, &[0, 1]), &p).1;
    }
    None
}

pub fn reciprocal(p: &[u32]) -> Poly {
    let mut r = trim(p.to_vec());
    r.reverse();
    trim(r)
}

/// Every codeword spanned by `rows`.
pub fn span(f: &FieldCtx, rows: &[Vec<u32>], n: usize) -> BTreeSet<Vec<u32>> {
    let mut words = BTreeSet::new();
    words.insert(vec![0; n]);
    for row in rows {
        let mut next = BTreeSet::new();
        for w in &words {
            for c in 0..f.order() {
                let v: Vec<u32> = w
                    .iter()
                    .zip(row)
                    .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                    .collect();
                next.insert(v);
            }
        }
        words = next;
    }
    words
}

pub fn dot(f: &FieldCtx, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// All of GF(q)^n.
pub fn all_vectors(f: &FieldCtx, n: usize) -> Vec<Vec<u32>> {
    let q = f.order() as u64;
    (0..q.pow(n as u32))
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let c = (idx % q) as u32;
                    idx /= q;
                    c
                })
                .collect()
        })
        .collect()
}

/// Vectors orthogonal to every row, by exhaustive search.
pub fn dual_words(f: &FieldCtx, rows: &[Vec<u32>], n: usize) -> BTreeSet<Vec<u32>> {
    all_vectors(f, n)
        .into_iter()
        .filter(|v| rows.iter().all(|r| dot(f, r, v) == 0))
        .collect()
}

pub fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&c| c != 0).count()
}

pub fn min_distance(words: &BTreeSet<Vec<u32>>) -> Option<usize> {
    words.iter().map(|w| weight(w)).filter(|&w| w > 0).min()
}

/// Banded generator rows of `g` for length `n`.
pub fn band_rows(g: &[u32], n: usize) -> Vec<Vec<u32>> {
    let s = g.len() - 1;
    (0..n - s)
        .map(|r| {
            let mut row = vec![0; n];
            row[r..r + s + 1].copy_from_slice(g);
            row
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Whether some monomial map (permutation plus nonzero column scalars)
/// carries `a` onto `b`, tried exhaustively.
pub fn monomially_equivalent(
    f: &FieldCtx,
    a: &BTreeSet<Vec<u32>>,
    b: &BTreeSet<Vec<u32>>,
    n: usize,
) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let scalings: Vec<Vec<u32>> = all_vectors(f, n)
        .into_iter()
        .filter(|v| v.iter().all(|&c| c != 0))
        .collect();
    permutations(n).iter().any(|perm| {
        scalings.iter().any(|s| {
            a.iter().all(|w| {
                let mut img = vec![0; n];
                for i in 0..n {
                    img[perm[i]] = f.mul(s[i], w[i]);
                }
                b.contains(&img)
            })
        })
    })
}
