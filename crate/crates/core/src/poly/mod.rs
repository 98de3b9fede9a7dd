//! Dense univariate polynomials over a [`FieldCtx`].

mod factor;
mod order;

pub use factor::{factorize, factorize_with_seed, monic_divisors, Factorization, DEFAULT_SEED};
pub use order::{poly_order, poly_order_brute_force};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// A polynomial with coefficients in ascending degree order.
///
/// Canonical form: the last stored coefficient is nonzero, or the vector is
/// empty (the zero polynomial, whose degree is `None`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: FieldCtx,
    coeffs: Vec<u32>,
}

impl Polynomial {
    /// Builds a polynomial from encoded coefficient values. Trailing zeros are
    /// dropped.
    pub fn new(ctx: &FieldCtx, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < ctx.order()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn from_elements(ctx: &FieldCtx, coeffs: &[FieldElement]) -> Result<Self> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.ctx() != ctx {
                return Err(Error::ContextMismatch(ctx.to_string(), c.ctx().to_string()));
            }
            raw.push(c.value());
        }
        Ok(Self::new(ctx, raw))
    }

    /// Reads small signed integers into the prime subfield, e.g.
    /// `from_ints(&f3, &[-1, 1, 0, 1])` is `x^3 + x - 1`.
    pub fn from_ints(ctx: &FieldCtx, coeffs: &[i64]) -> Self {
        Self::new(ctx, coeffs.iter().map(|&c| ctx.from_int(c)).collect())
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Self::new(ctx, Vec::new())
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::new(ctx, vec![1])
    }

    pub fn constant(ctx: &FieldCtx, c: u32) -> Self {
        Self::new(ctx, vec![c])
    }

    pub fn x(ctx: &FieldCtx) -> Self {
        Self::monomial(ctx, 1, 1)
    }

    /// `c * x^k`.
    pub fn monomial(ctx: &FieldCtx, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(ctx, coeffs)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn raw_coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        self.coeffs
            .iter()
            .map(|&c| self.ctx.element(c).expect("canonical coefficient"))
            .collect()
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(0)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn same_ctx(&self, other: &Polynomial) {
        assert!(
            self.ctx == other.ctx,
            "polynomials over different fields: {} vs {}",
            self.ctx,
            other.ctx
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.same_ctx(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.ctx.add(self.coeff(i), other.coeff(i)))
            .collect();
        Polynomial::new(&self.ctx, c)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.same_ctx(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.ctx.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Polynomial::new(&self.ctx, c)
    }

    pub fn neg(&self) -> Polynomial {
        let c = self.coeffs.iter().map(|&a| self.ctx.neg(a)).collect();
        Polynomial::new(&self.ctx, c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.same_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let f = &self.ctx;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Polynomial::new(f, out)
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = self.coeffs.iter().map(|&a| self.ctx.mul(a, c)).collect();
        Polynomial::new(&self.ctx, c)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        Polynomial::new(&self.ctx, c)
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.coeffs.last() {
            None | Some(&1) => self.clone(),
            Some(&lead) => self.scale(self.ctx.inv(lead)),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.same_ctx(divisor);
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.ctx;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Polynomial::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.leading());
        let mut q = vec![0u32; r.len() - db];
        for shift in (0..q.len()).rev() {
            let top = r[shift + db];
            if top == 0 {
                continue;
            }
            let c = f.mul(top, lead_inv);
            q[shift] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, b));
            }
        }
        r.truncate(db);
        Ok((Polynomial::new(f, q), Polynomial::new(f, r)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Exact quotient; fails when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor {
                g: divisor.to_string(),
                f: self.to_string(),
            })
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ctx(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Coefficient sequence reversed, then canonicalized: `x^deg * g(1/x)`.
    pub fn reciprocal(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Ok(Polynomial::new(&self.ctx, c))
    }

    pub fn derivative(&self) -> Polynomial {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| self.ctx.mul_int(a, i as u64))
            .collect();
        Polynomial::new(&self.ctx, c)
    }

    /// Substitutes `x -> x^k`.
    pub fn inflate(&self, k: usize) -> Polynomial {
        assert!(k >= 1);
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; (self.coeffs.len() - 1) * k + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i * k] = a;
        }
        Polynomial::new(&self.ctx, c)
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.ctx.add(self.ctx.mul(acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Polynomial) -> Result<Polynomial> {
        let mut base = self.rem(modulus)?;
        let mut acc = Polynomial::one(&self.ctx).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Splits `self = x^h * rest` with `rest(0) != 0`.
    pub fn strip_x_power(&self) -> (usize, Polynomial) {
        let h = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if self.is_zero() {
            return (0, self.clone());
        }
        (h, Polynomial::new(&self.ctx, self.coeffs[h..].to_vec()))
    }

    /// Lexicographic sort key: degree first, then coefficients from the top.
    pub(crate) fn sort_key(&self) -> (usize, Vec<u32>) {
        (
            self.coeffs.len(),
            self.coeffs.iter().rev().copied().collect(),
        )
    }

    /// Parses the polynomial grammar: terms `c`, `x`, `c*x^k`, `x^k` joined
    /// by `+` or `-`. Coefficients are integers or bracketed coordinate
    /// tuples; whitespace is ignored.
    pub fn parse(text: &str, ctx: &FieldCtx) -> Result<Polynomial> {
        Parser::new(text, ctx).parse()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let coef = self.ctx.format_value(c);
            match k {
                0 => f.write_str(&coef)?,
                _ => {
                    if c != 1 {
                        write!(f, "{coef}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.ctx)
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    ctx: &'a FieldCtx,
    len: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &str, ctx: &'a FieldCtx) -> Self {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            i: 0,
            ctx,
            len: text.len(),
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map(|&(p, _)| p).unwrap_or(self.len)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.i;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return self.err("expected a number");
        }
        let s: String = self.chars[start..self.i].iter().map(|&(_, c)| c).collect();
        match s.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.i = start;
                self.err("number too large")
            }
        }
    }

    fn coefficient(&mut self) -> Result<Option<u32>> {
        let pos = self.pos();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = self.number()?;
                if v >= self.ctx.characteristic() as u64 {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("coefficient {v} out of range for {}", self.ctx),
                    });
                }
                Ok(Some(v as u32))
            }
            Some('[') => {
                let start = self.i;
                while !matches!(self.peek(), Some(']') | None) {
                    self.i += 1;
                }
                if self.peek().is_none() {
                    return self.err("unclosed '['");
                }
                self.i += 1;
                let s: String = self.chars[start..self.i].iter().map(|&(_, c)| c).collect();
                self.ctx
                    .parse_value(&s)
                    .map(Some)
                    .map_err(|e| Error::Parse {
                        pos,
                        msg: e.to_string(),
                    })
            }
            _ => Ok(None),
        }
    }

    fn parse(mut self) -> Result<Polynomial> {
        if self.chars.is_empty() {
            return self.err("empty polynomial");
        }
        let f = self.ctx.clone();
        let mut coeffs: Vec<u32> = Vec::new();
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some('+') => {
                    self.i += 1;
                    false
                }
                Some('-') | Some('\u{2212}') => {
                    self.i += 1;
                    true
                }
                _ if first => false,
                _ => return self.err("expected '+' or '-'"),
            };
            first = false;
            let coef = self.coefficient()?;
            let mut degree = 0usize;
            let mut has_x = false;
            if coef.is_some() && self.peek() == Some('*') {
                self.i += 1;
                if self.peek() != Some('x') {
                    return self.err("expected 'x' after '*'");
                }
            }
            if self.peek() == Some('x') {
                self.i += 1;
                has_x = true;
                degree = 1;
                if self.peek() == Some('^') {
                    self.i += 1;
                    degree = self.number()? as usize;
                }
            }
            if coef.is_none() && !has_x {
                return self.err("expected a term");
            }
            let mut c = coef.unwrap_or(1);
            if negative {
                c = f.neg(c);
            }
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            coeffs[degree] = f.add(coeffs[degree], c);
        }
        Ok(Polynomial::new(&f, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    fn parse(s: &str, f: &FieldCtx) -> Polynomial {
        Polynomial::parse(s, f).unwrap()
    }

    #[test]
    fn parse_examples() {
        let f3 = gf(3);
        let p = parse("x^10+x^8+1", &f3);
        assert_eq!(p.raw_coeffs(), &[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1]);
        assert!(parse("0", &f3).is_zero());
        assert_eq!(parse("2*x+2", &f3).raw_coeffs(), &[2, 2]);
        assert_eq!(parse(" x^3 + x - 1 ", &f3).raw_coeffs(), &[2, 1, 0, 1]);
        assert_eq!(parse("-x^2", &f3).raw_coeffs(), &[0, 0, 2]);
        assert_eq!(parse("2x", &f3).raw_coeffs(), &[0, 2]);
        let f4 = FieldCtx::new(2, 2).unwrap();
        let q = parse("x^2+[0,1]*x+[1,1]", &f4);
        assert_eq!(q.raw_coeffs(), &[3, 2, 1]);
        assert_eq!(q.to_string(), "x^2+[0,1]*x+[1,1]");
    }

    #[test]
    fn parse_errors() {
        let f3 = gf(3);
        assert!(matches!(
            Polynomial::parse("x^2+3", &f3),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            Polynomial::parse("x^", &f3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Polynomial::parse("x x", &f3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Polynomial::parse("", &f3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Polynomial::parse("1*", &f3),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn display() {
        let f3 = gf(3);
        assert_eq!(parse("x^3+x-1", &f3).to_string(), "x^3+x+2");
        assert_eq!(parse("2*x^2+1", &f3).to_string(), "2*x^2+1");
        assert_eq!(Polynomial::zero(&f3).to_string(), "0");
    }

    #[test]
    fn arithmetic_examples() {
        let f2 = gf(2);
        let a = parse("x^2+x+1", &f2);
        let b = parse("x^3+x+1", &f2);
        let prod = a.mul(&b);
        assert_eq!(prod, parse("x^5+x^4+1", &f2));
        let (q, r) = prod.divmod(&a).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(a.mul(&Polynomial::one(&f2)), a);
        assert_eq!(a.divmod(&Polynomial::zero(&f2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let f2 = gf(2);
        let g = parse("x^5+1", &f2).gcd(&parse("x^5+x^2+1", &f2)).unwrap();
        assert!(g.is_one());
        let f5 = gf(5);
        let a = parse("x^4+4*x^2+4", &f5);
        let b = parse("x^2+2", &f5);
        assert_eq!(a.gcd(&b).unwrap(), b);
        let c = parse("3*x^2+1", &f5);
        assert_eq!(c.gcd(&c).unwrap(), c.monic());
        assert_eq!(
            Polynomial::zero(&f5).gcd(&Polynomial::zero(&f5)),
            Err(Error::UndefinedGcd)
        );
    }

    #[test]
    fn reciprocal_examples() {
        let f2 = gf(2);
        assert_eq!(
            parse("x^3+x+1", &f2).reciprocal().unwrap(),
            parse("x^3+x^2+1", &f2)
        );
        assert_eq!(
            parse("x^2+x+1", &f2).reciprocal().unwrap(),
            parse("x^2+x+1", &f2)
        );
        let r = parse("x^2+x", &f2).reciprocal().unwrap();
        assert_eq!(r, parse("x+1", &f2));
        assert_eq!(r.degree(), Some(1));
        assert_eq!(
            Polynomial::zero(&f2).reciprocal(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn derivative_examples() {
        let f3 = gf(3);
        assert_eq!(
            parse("x^10+x^8+1", &f3).derivative(),
            parse("x^9+2*x^7", &f3)
        );
        assert!(parse("2", &f3).derivative().is_zero());
        assert!(parse("x^3", &f3).derivative().is_zero());
    }

    #[test]
    fn degree_of_zero_is_none() {
        let f = gf(7);
        assert_eq!(Polynomial::zero(&f).degree(), None);
        assert_eq!(Polynomial::one(&f).degree(), Some(0));
    }

    #[test]
    fn pow_mod_and_inflate() {
        let f2 = gf(2);
        let m = parse("x^3+x+1", &f2);
        let x = Polynomial::x(&f2);
        assert!(x.pow_mod(7, &m).unwrap().is_one());
        assert_eq!(parse("x^2+x+1", &f2).inflate(3), parse("x^6+x^3+1", &f2));
    }
}
