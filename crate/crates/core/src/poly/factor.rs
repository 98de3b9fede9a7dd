//! Complete factorization over GF(q): squarefree decomposition, then
//! distinct-degree factorization, then seeded equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Seed used by [`factorize`].
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// `unit * prod(factor^multiplicity)`, factors monic irreducible and sorted by
/// degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Polynomial {
        let ctx = self.unit.ctx();
        let mut acc = Polynomial::constant(ctx, self.unit.value());
        for (p, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(p);
            }
        }
        acc
    }

    /// Number of monic divisors, `prod(e_i + 1)`.
    pub fn divisor_count(&self) -> usize {
        self.factors.iter().map(|(_, m)| m + 1).product()
    }
}

pub fn factorize(f: &Polynomial) -> Result<Factorization> {
    factorize_with_seed(f, DEFAULT_SEED)
}

pub fn factorize_with_seed(f: &Polynomial, seed: u64) -> Result<Factorization> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let ctx = f.ctx().clone();
    let unit = ctx.element(f.leading())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic())? {
        for (block, d) in distinct_degree(&part)? {
            for irr in equal_degree(&block, d, &mut rng)? {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by_key(|(p, m)| (p.sort_key(), *m));
    Ok(Factorization { unit, factors })
}

/// Pairs `(g_i, i)` with `f = prod g_i^i` and each `g_i` squarefree.
/// Input must be monic.
fn squarefree_decomposition(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    let ctx = f.ctx();
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative())?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let fac = w.div_exact(&y)?;
        if !fac.is_one() {
            out.push((fac, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w)?;
    }
    if !c.is_one() {
        // What is left is a p-th power.
        let p = ctx.characteristic() as usize;
        let root: Vec<u32> = c
            .raw_coeffs()
            .iter()
            .step_by(p)
            .map(|&a| ctx.pth_root(a))
            .collect();
        for (g, m) in squarefree_decomposition(&Polynomial::new(ctx, root))? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

/// Splits a squarefree monic polynomial into blocks whose irreducible factors
/// share a degree.
fn distinct_degree(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    let ctx = f.ctx();
    let q = ctx.order() as u128;
    let x = Polynomial::x(ctx);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(q, &rest)?;
        let g = h.sub(&x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct monic irreducibles
/// of degree `d`.
fn equal_degree(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Polynomial>> {
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return Ok(vec![f.clone()]);
    }
    let ctx = f.ctx();
    let q = ctx.order();
    let even = ctx.characteristic() == 2;
    loop {
        let coeffs: Vec<u32> = (0..n).map(|_| rng.random_range(0..q)).collect();
        let a = Polynomial::new(ctx, coeffs);
        if a.is_constant() {
            continue;
        }
        let b = if even {
            // Absolute trace: a + a^2 + ... + a^(2^(m*d - 1)).
            let steps = ctx.degree() as usize * d;
            let mut t = a.rem(f)?;
            let mut acc = t.clone();
            for _ in 1..steps {
                t = t.mul(&t).rem(f)?;
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((q^d - 1)/2) = (prod_j a^(q^j))^((q - 1)/2)
            let mut frob = a.rem(f)?;
            let mut norm = frob.clone();
            for _ in 1..d {
                frob = frob.pow_mod(q as u128, f)?;
                norm = norm.mul(&frob).rem(f)?;
            }
            norm.pow_mod(((q - 1) / 2) as u128, f)?
                .sub(&Polynomial::one(ctx))
        };
        let g = b.gcd(f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&f.div_exact(&g)?, d, rng)?);
            return Ok(out);
        }
    }
}

/// Every monic divisor of `f`, sorted by degree then coefficients.
pub fn monic_divisors(f: &Polynomial) -> Result<Vec<Polynomial>> {
    let fac = factorize(f)?;
    let mut divisors = vec![Polynomial::one(f.ctx())];
    for (p, m) in &fac.factors {
        let mut next = Vec::with_capacity(divisors.len() * (m + 1));
        for d in &divisors {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..*m {
                cur = cur.mul(p);
                next.push(cur.clone());
            }
        }
        divisors = next;
    }
    divisors.sort_by_key(|d| d.sort_key());
    Ok(divisors)
}
