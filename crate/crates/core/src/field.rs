//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! A [`FieldCtx`] is an immutable, cheaply clonable handle. Elements are
//! stored as `u32` values holding the base-`p` encoding of their coordinate
//! vector, `c0 + c1*p + ... + c_{m-1}*p^(m-1)`, where `c_i` is the coefficient
//! of `t^i` in the polynomial basis. The zero element is always `0` and the
//! one element is always `1`.
//!
//! Polynomials and matrices work with these raw values directly through the
//! `add`/`mul`/... methods on the context. [`FieldElement`] pairs a value with
//! its context for the checked, user-facing API.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Debug)]
struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus over GF(p), ascending coefficients, length m + 1.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a fixed primitive element `g`, `i < q - 1`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
}

/// A finite field GF(p^m).
#[derive(Clone)]
pub struct FieldCtx(Arc<Inner>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldCtx {}

impl Hash for FieldCtx {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(
                f,
                "GF({}^{};modulus={})",
                self.0.p,
                self.0.m,
                format_prime_poly(&self.0.modulus, 't')
            )
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub(crate) fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over GF(p) as plain coefficient vectors. Used only while
// bootstrapping an extension field, before any FieldCtx exists for it.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn prime_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = pow_mod(b[db] as u64, p as u64 - 2, p as u64) as u32;
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn digits(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible_prime_poly(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    if n <= 1 {
        return n == 1;
    }
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut cand = digits(low as u32, p, d as u32);
            cand.push(1);
            if prime_poly_rem(f, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn format_prime_poly(coeffs: &[u32], var: char) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        terms.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl FieldCtx {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Self::with_modulus(p, &[0, 1])
    }

    /// GF(p^m) with the smallest monic irreducible modulus of degree `m`,
    /// ordering candidates by the base-p value of their lower coefficients.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::BadModulus { expected: 1 });
        }
        let q = (p as u128).pow(m);
        if q > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(q));
        }
        if m == 1 {
            return Self::prime(p);
        }
        for low in 0..(q as u32) {
            let mut cand = digits(low, p, m);
            cand.push(1);
            if cand[0] != 0 && is_irreducible_prime_poly(&cand, p) {
                return Self::with_modulus(p, &cand);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// GF(p^m) defined by an explicit modulus (ascending coefficients, monic,
    /// degree m). For m = 1 any monic linear modulus is accepted.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let mut modulus = modulus.to_vec();
        trim(&mut modulus);
        if modulus.len() < 2 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus {
                expected: modulus.len().saturating_sub(1).max(1) as u32,
            });
        }
        let m = (modulus.len() - 1) as u32;
        if *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulus { expected: m });
        }
        let q128 = (p as u128).pow(m);
        if q128 > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(q128));
        }
        if m == 1 {
            // GF(p) is canonical; the linear modulus carries no information.
            modulus = vec![0, 1];
        } else if !is_irreducible_prime_poly(&modulus, p) {
            return Err(Error::ReducibleModulus(format_prime_poly(&modulus, 't')));
        }
        let q = q128 as u32;

        let slow_mul = |a: u32, b: u32| -> u32 {
            let da = digits(a, p, m);
            let db = digits(b, p, m);
            let mut prod = vec![0u32; (2 * m - 1) as usize];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
                }
            }
            let mut r = prime_poly_rem(&prod, &modulus, p);
            r.resize(m as usize, 0);
            undigits(&r, p)
        };
        let slow_pow = |a: u32, mut e: u128| -> u32 {
            let (mut acc, mut base) = (1u32, a);
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, base);
                }
                base = slow_mul(base, base);
                e >>= 1;
            }
            acc
        };

        let group = (q - 1) as u128;
        let factors = prime_factors(group);
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&r| slow_pow(g, group / r) != 1))
            .expect("multiplicative group is cyclic");

        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = slow_mul(x, generator);
        }

        Ok(FieldCtx(Arc::new(Inner {
            p,
            m,
            q,
            modulus,
            exp,
            log,
        })))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    /// Number of elements q = p^m.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients over GF(p), ascending, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.m == 1
    }

    // ---- raw arithmetic on encoded values ----

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            a ^ b
        } else if self.0.m == 1 {
            let s = a + b;
            if s >= p {
                s - p
            } else {
                s
            }
        } else {
            let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
            while a > 0 || b > 0 {
                out += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if p == 2 || a == 0 {
            a
        } else if self.0.m == 1 {
            p - a
        } else {
            let (mut a, mut out, mut place) = (a, 0, 1);
            while a > 0 {
                out += ((p - a % p) % p) * place;
                a /= p;
                place *= p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        let s = inner.log[a as usize] + inner.log[b as usize];
        let n = inner.q - 1;
        inner.exp[(if s >= n { s - n } else { s }) as usize]
    }

    /// Multiplicative inverse. Panics on zero; use [`FieldElement::inv`] for
    /// the checked variant.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let inner = &*self.0;
        let n = inner.q - 1;
        let l = inner.log[a as usize];
        inner.exp[((n - l) % n) as usize]
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let inner = &*self.0;
        let n = (inner.q - 1) as u64;
        let l = inner.log[a as usize] as u64;
        inner.exp[((l * (e % n)) % n) as usize]
    }

    /// `a * k` where `k` is an integer (repeated addition).
    pub fn mul_int(&self, a: u32, k: u64) -> u32 {
        let k = (k % self.0.p as u64) as u32;
        self.mul(a, k)
    }

    /// The unique p-th root (Frobenius is a bijection).
    pub fn pth_root(&self, a: u32) -> u32 {
        // a^(q/p) is the inverse of the Frobenius map a -> a^p.
        self.pow(a, (self.0.q / self.0.p) as u64)
    }

    /// Some square root of `a` if one exists; the smaller encoding when there
    /// are two.
    pub fn sqrt(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return Some(0);
        }
        if self.0.p == 2 {
            return Some(self.pth_root(a));
        }
        let l = self.0.log[a as usize];
        if l % 2 == 1 {
            return None;
        }
        let r = self.0.exp[(l / 2) as usize];
        Some(r.min(self.neg(r)))
    }

    /// Coordinates of an encoded value, little-endian in the generator `t`.
    pub fn coords(&self, v: u32) -> Vec<u32> {
        digits(v, self.0.p, self.0.m)
    }

    pub fn from_coords_raw(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() > self.0.m as usize || coords.iter().any(|&c| c >= self.0.p) {
            return Err(Error::OutOfRange {
                value: format!("{coords:?}"),
                field: self.to_string(),
            });
        }
        Ok(undigits(coords, self.0.p))
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.0.p as i64) as u32
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            ctx: self.clone(),
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            ctx: self.clone(),
            value: 1,
        }
    }

    /// Wraps an encoded value.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value >= self.0.q {
            return Err(Error::OutOfRange {
                value: value.to_string(),
                field: self.to_string(),
            });
        }
        Ok(FieldElement {
            ctx: self.clone(),
            value,
        })
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElement> {
        let value = self.from_coords_raw(coords)?;
        self.element(value)
    }

    /// All q elements, zero first, in increasing encoded order.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.0.q)
            .map(|value| FieldElement {
                ctx: self.clone(),
                value,
            })
            .collect()
    }

    /// Nonzero encoded values in increasing order.
    pub fn nonzero_values(&self) -> impl Iterator<Item = u32> {
        1..self.0.q
    }

    /// Formats an encoded value: an integer for prime fields, `[c0,c1,...]`
    /// otherwise.
    pub fn format_value(&self, v: u32) -> String {
        if self.0.m == 1 {
            v.to_string()
        } else {
            let c: Vec<String> = self.coords(v).iter().map(|d| d.to_string()).collect();
            format!("[{}]", c.join(","))
        }
    }

    /// Symbolic form in the generator `t`, e.g. `t+1`.
    pub fn format_symbolic(&self, v: u32) -> String {
        format_prime_poly(&self.coords(v), 't')
    }

    /// Parses an integer (prime-subfield element) or a bracketed coordinate
    /// tuple.
    pub fn parse_value(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        let err = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg}: {s:?}"),
        };
        if let Some(body) = s.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| err("unclosed tuple"))?;
            let coords = body
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| err("bad coordinate")))
                .collect::<Result<Vec<_>>>()?;
            self.from_coords_raw(&coords)
        } else {
            let k: u64 = s.parse().map_err(|_| err("bad field element"))?;
            if k >= self.0.p as u64 {
                return Err(Error::OutOfRange {
                    value: s.to_string(),
                    field: self.to_string(),
                });
            }
            Ok(k as u32)
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let value = self.parse_value(s)?;
        self.element(value)
    }

    fn check_same(&self, other: &FieldCtx) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl FromStr for FieldCtx {
    type Err = Error;

    /// Accepts `GF(p)`, `GF(q)` for a prime power q, `GF(p^m)` and
    /// `GF(p^m;modulus=<poly>)` with the modulus written in `t` or `x`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in field spec {s:?}"),
        };
        let body = compact
            .strip_prefix("GF(")
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| err("expected GF(...)"))?;
        let (size, modulus) = match body.split_once(';') {
            Some((size, rest)) => {
                let m = rest
                    .strip_prefix("modulus=")
                    .ok_or_else(|| err("expected modulus="))?;
                (size, Some(m))
            }
            None => (body, None),
        };
        let (p, m) = match size.split_once('^') {
            Some((p, m)) => (
                p.parse::<u32>().map_err(|_| err("bad characteristic"))?,
                m.parse::<u32>().map_err(|_| err("bad degree"))?,
            ),
            None => {
                let q: u32 = size.parse().map_err(|_| err("bad order"))?;
                let factors = prime_factors(q as u128);
                if factors.len() != 1 {
                    return Err(err("order is not a prime power"));
                }
                let p = factors[0] as u32;
                let mut m = 0;
                let mut r = q;
                while r > 1 {
                    r /= p;
                    m += 1;
                }
                (p, m)
            }
        };
        match modulus {
            None => FieldCtx::new(p, m),
            Some(text) => {
                let base = FieldCtx::prime(p)?;
                let text = text.replace('t', "x");
                let poly = crate::poly::Polynomial::parse(&text, &base)?;
                let coeffs = poly.raw_coeffs().to_vec();
                if coeffs.len() != m as usize + 1 {
                    return Err(Error::BadModulus { expected: m });
                }
                FieldCtx::with_modulus(p, &coeffs)
            }
        }
    }
}

/// A field value bound to its context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    ctx: FieldCtx,
    value: u32,
}

impl FieldElement {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// Encoded value.
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coords(&self) -> Vec<u32> {
        self.ctx.coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn with(&self, value: u32) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.with(self.ctx.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.with(self.ctx.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.with(self.ctx.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.ctx.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with(self.ctx.inv(self.value)))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.ctx.pow(self.value, e))
    }

    pub fn symbolic(&self) -> String {
        self.ctx.format_symbolic(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ctx.format_value(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ctx)
    }
}
