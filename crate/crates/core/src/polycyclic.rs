//! Polycyclic codes: ideals of GF(q)[x]/(f) given by a monic divisor `g | f`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::LinearCode;
use crate::equivalence::{find_equivalence, verify_witness, EquivalenceVerdict, MonomialMap};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::matrix::Matrix;
use crate::poly::{factorize, monic_divisors, poly_order, Polynomial};

/// The code generated by `g` inside GF(q)[x]/(f), with `f = x^n - v(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolycyclicCode {
    f: Polynomial,
    g: Polynomial,
    code: LinearCode,
}

/// The banded `k x n` matrix whose rows are shifts of `g`'s coefficients.
pub fn band_matrix(g: &Polynomial, n: usize) -> Matrix {
    let ctx = g.ctx();
    let s = g.degree().expect("nonzero generator");
    let k = n - s;
    let mut m = Matrix::zeros(ctx, k, n);
    for r in 0..k {
        for (j, &c) in g.raw_coeffs().iter().enumerate() {
            m.set(r, r + j, c);
        }
    }
    m
}

impl PolycyclicCode {
    /// Builds the code from an associate polynomial `f` (monic, degree >= 1)
    /// and a monic generator `g | f`. `g = 1` gives the full space and
    /// `g = f` the zero code.
    pub fn new(f: &Polynomial, g: &Polynomial) -> Result<PolycyclicCode> {
        if f.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if !f.is_monic() {
            return Err(Error::NotMonic(f.to_string()));
        }
        if !g.is_monic() {
            return Err(Error::NotMonic(g.to_string()));
        }
        if !g.divides(f) {
            return Err(Error::NotADivisor {
                g: g.to_string(),
                f: f.to_string(),
            });
        }
        let n = f.degree().expect("nonconstant");
        let code = LinearCode::from_rows(&band_matrix(g, n));
        Ok(PolycyclicCode {
            f: f.clone(),
            g: g.clone(),
            code,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.f.ctx()
    }

    pub fn associate(&self) -> &Polynomial {
        &self.f
    }

    pub fn generator(&self) -> &Polynomial {
        &self.g
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.code.dimension()
    }

    /// `v(x) = x^n - f(x)`, of degree below `n`.
    pub fn shift_polynomial(&self) -> Polynomial {
        Polynomial::monomial(self.ctx(), 1, self.len()).sub(&self.f)
    }

    /// The generator matrix in banded (non-canonical) form.
    pub fn generator_matrix(&self) -> Matrix {
        band_matrix(&self.g, self.len())
    }

    /// Parity-check matrix built from `h = (x^e - 1)/g` with `e = ord(f)`:
    /// an `s x n` band whose first row lists `h`'s coefficients from the top
    /// down, truncated to the first `n` columns. Checked against the dual
    /// code before it is returned.
    pub fn parity_check_from_order(&self) -> Result<Matrix> {
        let ctx = self.ctx().clone();
        if self.f.constant_term() == 0 {
            return Err(Error::ZeroConstantTerm(self.f.to_string()));
        }
        let s = self.g.degree().expect("nonzero generator");
        if s == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let n = self.len();
        let e = poly_order(&self.f)?;
        if e < n as u64 {
            return Err(Error::Consistency(format!("order {e} below length {n}")));
        }
        // The quotient x^e / g has its top coefficients equal to the power
        // series of 1 / (y^s g(1/y)); the -1 in x^e - 1 never reaches them.
        let g = self.g.raw_coeffs();
        let top = (e as usize - s + 1).min(n);
        let mut series = vec![0u32; n];
        for j in 0..top {
            let mut c = if j == 0 { 1 } else { 0 };
            for t in 1..=j.min(s) {
                c = ctx.sub(c, ctx.mul(g[s - t], series[j - t]));
            }
            series[j] = c;
        }
        let mut h = Matrix::zeros(&ctx, s, n);
        for r in 0..s {
            for (j, &c) in series[..n - r].iter().enumerate() {
                h.set(r, r + j, c);
            }
        }

        let gt = self.generator_matrix();
        if !gt.mul(&h.transpose())?.is_zero() {
            return Err(Error::Consistency("G * H^T != 0".into()));
        }
        if h.rank() != s || LinearCode::from_rows(&h) != self.code.dual() {
            return Err(Error::Consistency(
                "order-based parity check does not span the dual".into(),
            ));
        }
        Ok(h)
    }

    /// The reversed code, generated by `g(0)^-1 g*` inside
    /// GF(q)[x]/(f(0)^-1 f*).
    pub fn reversed(&self) -> Result<PolycyclicCode> {
        let ctx = self.ctx();
        for p in [&self.f, &self.g] {
            if p.constant_term() == 0 {
                return Err(Error::ZeroConstantTerm(p.to_string()));
            }
        }
        let f2 = self.f.reciprocal()?.scale(ctx.inv(self.f.constant_term()));
        let g2 = self.g.reciprocal()?.scale(ctx.inv(self.g.constant_term()));
        let rev = PolycyclicCode::new(&f2, &g2)?;
        if rev.code != self.code.reversed() {
            return Err(Error::Consistency(
                "reciprocal generator does not give the reversed code".into(),
            ));
        }
        Ok(rev)
    }

    /// `(g, n, k, min_distance)` summary used by family reports.
    pub fn summary(&self, budget: u64) -> CodeSummary {
        CodeSummary {
            g: self.g.to_string(),
            n: self.len(),
            k: self.dimension(),
            min_distance: self.code.min_distance(budget).ok().flatten(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeSummary {
    pub g: String,
    pub n: usize,
    pub k: usize,
    /// `None` for the zero code or when enumeration exceeds the budget.
    pub min_distance: Option<usize>,
}

/// Whether `code` is closed under the right polycyclic shift
/// `c -> (0, c_0, ..., c_{n-2}) + c_{n-1} v`. Checking the basis suffices.
pub fn is_polycyclic_wrt(code: &LinearCode, v: &Polynomial) -> Result<bool> {
    let n = code.len();
    if v.ctx() != code.ctx() {
        return Err(Error::ContextMismatch(
            code.ctx().to_string(),
            v.ctx().to_string(),
        ));
    }
    if let Some(d) = v.degree() {
        if d >= n {
            return Err(Error::LengthMismatch(n, d + 1));
        }
    }
    let f = code.ctx();
    Ok((0..code.dimension()).all(|r| {
        let c = code.basis().row(r);
        let last = c[n - 1];
        let shifted: Vec<u32> = (0..n)
            .map(|j| {
                let prev = if j == 0 { 0 } else { c[j - 1] };
                f.add(prev, f.mul(last, v.coeff(j)))
            })
            .collect();
        code.contains_vector(&shifted)
    }))
}

/// One code per monic divisor of `f`, in divisor order.
pub fn enumerate_family(f: &Polynomial) -> Result<Vec<PolycyclicCode>> {
    let f = f.monic();
    let family = monic_divisors(&f)?
        .par_iter()
        .map(|g| PolycyclicCode::new(&f, g))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = HashMap::new();
    for (i, c) in family.iter().enumerate() {
        if let Some(j) = seen.insert(c.code.clone(), i) {
            return Err(Error::Consistency(format!(
                "divisors {} and {} give the same code",
                family[j].g, c.g
            )));
        }
    }
    Ok(family)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub factor: String,
    pub multiplicity: usize,
}

/// `{f, order, factorization, codes}` for the whole family of `f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub field: String,
    pub f: String,
    pub order: u64,
    pub factorization: Vec<FactorEntry>,
    pub codes: Vec<CodeSummary>,
}

pub fn family_report(f: &Polynomial, enumeration_budget: u64) -> Result<FamilyReport> {
    let f = f.monic();
    let factorization = factorize(&f)?
        .factors
        .into_iter()
        .map(|(p, e)| FactorEntry {
            factor: p.to_string(),
            multiplicity: e,
        })
        .collect();
    Ok(FamilyReport {
        field: f.ctx().to_string(),
        f: f.to_string(),
        order: poly_order(&f)?,
        factorization,
        codes: enumerate_family(&f)?
            .iter()
            .map(|c| c.summary(enumeration_budget))
            .collect(),
    })
}

/// `x^n - a x^i - b` with `a, b` nonzero and `0 < i < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trinomial {
    pub n: usize,
    pub i: usize,
    /// Encoded `a`.
    pub a: u32,
    /// Encoded `b`.
    pub b: u32,
}

impl Trinomial {
    pub fn parse(f: &Polynomial) -> Option<Trinomial> {
        let ctx = f.ctx();
        let n = f.degree()?;
        if !f.is_monic() || f.term_count() != 3 || f.constant_term() == 0 {
            return None;
        }
        let i = (1..n).find(|&i| f.coeff(i) != 0)?;
        Some(Trinomial {
            n,
            i,
            a: ctx.neg(f.coeff(i)),
            b: ctx.neg(f.constant_term()),
        })
    }

    pub fn to_polynomial(&self, ctx: &FieldCtx) -> Polynomial {
        let mut c = vec![0u32; self.n + 1];
        c[self.n] = 1;
        c[self.i] = ctx.neg(self.a);
        c[0] = ctx.neg(self.b);
        Polynomial::new(ctx, c)
    }
}

#[derive(Clone, Debug)]
pub struct CorrespondencePair {
    pub source: PolycyclicCode,
    pub image: PolycyclicCode,
    /// Index of `image` within the family of `f2`.
    pub image_index: usize,
    pub verdict: EquivalenceVerdict,
    /// Coordinate reversal maps `source` onto `image`.
    pub reversal_verified: bool,
}

/// The reversed-code correspondence between the families of `f1` and of
/// its normalized reciprocal `f2 = f1(0)^-1 f1*`.
#[derive(Clone, Debug)]
pub struct FamilyCorrespondence {
    pub f1: Polynomial,
    pub f2: Polynomial,
    pub pairs: Vec<CorrespondencePair>,
    pub family2_size: usize,
    pub bijective: bool,
    pub all_equivalent: bool,
}

pub fn family_correspondence(f1: &Polynomial, budget: u64) -> Result<FamilyCorrespondence> {
    if Trinomial::parse(f1).is_none() {
        return Err(Error::NotTrinomial(f1.to_string()));
    }
    let ctx = f1.ctx();
    let f2 = f1.reciprocal()?.scale(ctx.inv(f1.constant_term()));
    let s1 = enumerate_family(f1)?;
    let s2 = enumerate_family(&f2)?;
    let index2: HashMap<&LinearCode, usize> =
        s2.iter().enumerate().map(|(i, c)| (&c.code, i)).collect();

    let pairs = s1
        .par_iter()
        .map(|c| -> Result<CorrespondencePair> {
            let image = c.reversed()?;
            let image_index = *index2.get(&image.code).ok_or_else(|| {
                Error::Consistency(format!("reversed code of {} missing from family", c.g))
            })?;
            let verdict = find_equivalence(&c.code, &image.code, budget)?;
            let reversal_verified =
                verify_witness(&c.code, &image.code, &MonomialMap::reversal(c.len()));
            Ok(CorrespondencePair {
                source: c.clone(),
                image,
                image_index,
                verdict,
                reversal_verified,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut hit = vec![false; s2.len()];
    for p in &pairs {
        hit[p.image_index] = true;
    }
    let bijective = pairs.len() == s2.len() && hit.iter().all(|&h| h);
    let all_equivalent = pairs.iter().all(|p| p.verdict.is_equivalent());
    Ok(FamilyCorrespondence {
        f1: f1.clone(),
        f2,
        family2_size: s2.len(),
        pairs,
        bijective,
        all_equivalent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::DEFAULT_NODE_BUDGET;

    fn parse(s: &str, f: &FieldCtx) -> Polynomial {
        Polynomial::parse(s, f).unwrap()
    }

    #[test]
    fn build_examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        let c = PolycyclicCode::new(&parse("x^3+x-1", &f3), &parse("x+1", &f3)).unwrap();
        assert_eq!(
            c.generator_matrix(),
            Matrix::parse("1 1 0; 0 1 1", &f3).unwrap()
        );
        assert_eq!((c.len(), c.dimension()), (3, 2));

        let f = parse("x^3+x-1", &f3);
        let full = PolycyclicCode::new(&f, &Polynomial::one(&f3)).unwrap();
        assert_eq!(full.code(), &LinearCode::full(&f3, 3));
        let zero = PolycyclicCode::new(&f, &f).unwrap();
        assert_eq!(zero.dimension(), 0);

        let f5 = FieldCtx::prime(5).unwrap();
        let sd = PolycyclicCode::new(&parse("x^4+4*x^2+4", &f5), &parse("x^2+2", &f5)).unwrap();
        assert_eq!(
            sd.generator_matrix(),
            Matrix::parse("2 0 1 0; 0 2 0 1", &f5).unwrap()
        );
    }

    #[test]
    fn build_errors() {
        let f3 = FieldCtx::prime(3).unwrap();
        let f = parse("x^3+x-1", &f3);
        assert!(matches!(
            PolycyclicCode::new(&f, &parse("x+2", &f3)),
            Err(Error::NotADivisor { .. })
        ));
        assert!(matches!(
            PolycyclicCode::new(&f, &parse("2*x+2", &f3)),
            Err(Error::NotMonic(_))
        ));
    }

    #[test]
    fn closure_examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        let c = PolycyclicCode::new(&parse("x^3+x-1", &f3), &parse("x+1", &f3)).unwrap();
        assert!(is_polycyclic_wrt(c.code(), &c.shift_polynomial()).unwrap());

        let f5 = FieldCtx::prime(5).unwrap();
        let sd = PolycyclicCode::new(&parse("x^4+4*x^2+4", &f5), &parse("x^2+2", &f5)).unwrap();
        let minus_one = Polynomial::constant(&f5, 4);
        assert!(is_polycyclic_wrt(sd.code(), &minus_one).unwrap());

        let f2 = FieldCtx::prime(2).unwrap();
        let c = LinearCode::from_row_vecs(&f2, 2, &[vec![1, 0]]).unwrap();
        assert!(!is_polycyclic_wrt(&c, &Polynomial::x(&f2)).unwrap());
        assert!(is_polycyclic_wrt(&c, &parse("x^2", &f2)).is_err());
    }

    #[test]
    fn parity_check_examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        let c = PolycyclicCode::new(&parse("x^3+x-1", &f3), &parse("x+1", &f3)).unwrap();
        assert_eq!(
            c.parity_check_from_order().unwrap(),
            Matrix::parse("1 2 1", &f3).unwrap()
        );
        let f = parse("x^3+x-1", &f3);
        let zero = PolycyclicCode::new(&f, &f).unwrap();
        assert_eq!(zero.parity_check_from_order().unwrap().rank(), 3);
        let full = PolycyclicCode::new(&f, &Polynomial::one(&f3)).unwrap();
        assert_eq!(
            full.parity_check_from_order(),
            Err(Error::ConstantPolynomial)
        );

        let f5 = FieldCtx::prime(5).unwrap();
        let sd = PolycyclicCode::new(&parse("x^4+4*x^2+4", &f5), &parse("x^2+2", &f5)).unwrap();
        let h = sd.parity_check_from_order().unwrap();
        assert_eq!(&LinearCode::from_rows(&h), sd.code());

        let f2 = FieldCtx::prime(2).unwrap();
        let g = parse("x^2+x", &f2);
        let c = PolycyclicCode::new(&g, &Polynomial::x(&f2)).unwrap();
        assert!(matches!(
            c.parity_check_from_order(),
            Err(Error::ZeroConstantTerm(_))
        ));
    }

    #[test]
    fn family_sizes() {
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(
            enumerate_family(&parse("x^10+x^8+1", &f3)).unwrap().len(),
            18
        );
        assert_eq!(
            enumerate_family(&parse("x^10+x^2+2", &f3)).unwrap().len(),
            12
        );
        let f2 = FieldCtx::prime(2).unwrap();
        let fam = enumerate_family(&parse("x^5+x^4+1", &f2)).unwrap();
        let gens: Vec<String> = fam.iter().map(|c| c.generator().to_string()).collect();
        assert_eq!(gens, vec!["1", "x^2+x+1", "x^3+x+1", "x^5+x^4+1"]);
    }

    #[test]
    fn reversal_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let c = PolycyclicCode::new(&parse("x^5+x^4+1", &f2), &parse("x^3+x+1", &f2)).unwrap();
        let r = c.reversed().unwrap();
        assert_eq!(r.generator(), &parse("x^3+x^2+1", &f2));
        assert_eq!(r.associate(), &parse("x^5+x+1", &f2));
        assert_eq!(r.reversed().unwrap(), c);

        let pal = PolycyclicCode::new(&parse("x^4+x^2+1", &f2), &parse("x^2+x+1", &f2)).unwrap();
        assert_eq!(pal.reversed().unwrap().code(), pal.code());

        let f3 = FieldCtx::prime(3).unwrap();
        let c = PolycyclicCode::new(&parse("x^3+x-1", &f3), &parse("x+1", &f3)).unwrap();
        let r = c.reversed().unwrap();
        assert_eq!(r.generator(), &parse("x+1", &f3));
        assert_eq!(r.associate(), &parse("x^3+2*x^2+2", &f3));
        let mut words: Vec<Vec<u32>> = c
            .code()
            .codewords(100)
            .unwrap()
            .into_iter()
            .map(|mut w| {
                w.reverse();
                w
            })
            .collect();
        words.sort();
        let mut expect = r.code().codewords(100).unwrap();
        expect.sort();
        assert_eq!(words, expect);
    }

    #[test]
    fn correspondence_small() {
        let f2 = FieldCtx::prime(2).unwrap();
        let fc = family_correspondence(&parse("x^5+x^4+1", &f2), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(fc.f2, parse("x^5+x+1", &f2));
        assert_eq!(fc.pairs.len(), 4);
        assert!(fc.bijective && fc.all_equivalent);
        assert!(fc.pairs.iter().all(|p| p.reversal_verified));

        // x^4+x^2+1 is its own reciprocal, so the pairing stays inside S1.
        let fc = family_correspondence(&parse("x^4+x^2+1", &f2), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(fc.f1, fc.f2);
        assert!(fc.bijective);

        assert!(matches!(
            family_correspondence(&parse("x^5+x^3+x+1", &f2), 10),
            Err(Error::NotTrinomial(_))
        ));
    }

    #[test]
    fn trinomial_shape() {
        let f3 = FieldCtx::prime(3).unwrap();
        let t = Trinomial::parse(&parse("x^3+x-1", &f3)).unwrap();
        assert_eq!(
            t,
            Trinomial {
                n: 3,
                i: 1,
                a: 2,
                b: 1
            }
        );
        assert_eq!(t.to_polynomial(&f3), parse("x^3+x-1", &f3));
        assert!(Trinomial::parse(&parse("x^3+1", &f3)).is_none());
        assert!(Trinomial::parse(&parse("x^3+x^2+x", &f3)).is_none());
    }
}
