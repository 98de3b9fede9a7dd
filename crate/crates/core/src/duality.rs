//! Duality properties of polycyclic codes and the square-root and inflation
//! constructions for isodual codes.

use serde::{Serialize, Serializer};

use crate::code::{LinearCode, DEFAULT_ENUMERATION_BUDGET};
use crate::equivalence::{is_isodual, EquivalenceVerdict};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{monic_divisors, poly_order, Polynomial};
use crate::polycyclic::{is_polycyclic_wrt, PolycyclicCode, Trinomial};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DualityFlags {
    pub self_dual: bool,
    pub self_orthogonal: bool,
    pub dual_containing: bool,
    /// Dual-containing because the code is the whole space (`g = 1`).
    pub dual_containing_trivial: bool,
}

/// Containment flags of a code against its dual.
pub fn code_duality_flags(code: &LinearCode) -> DualityFlags {
    let dual = code.dual();
    let self_orthogonal = dual.contains(code).expect("same field and length");
    let dual_containing = code.contains(&dual).expect("same field and length");
    DualityFlags {
        self_dual: self_orthogonal && dual_containing,
        self_orthogonal,
        dual_containing,
        dual_containing_trivial: code.dimension() == code.len(),
    }
}

pub fn duality_flags(p: &PolycyclicCode) -> DualityFlags {
    let mut flags = code_duality_flags(p.code());
    flags.dual_containing_trivial = p.generator().is_one();
    flags
}

/// Minimum distance as reported: exact, undefined for the zero code, or not
/// computed because enumeration would exceed its budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinDistance {
    Exact(usize),
    ZeroCode,
    BudgetExceeded,
}

impl MinDistance {
    pub fn of(code: &LinearCode, budget: u64) -> Result<MinDistance> {
        match code.min_distance(budget) {
            Ok(Some(d)) => Ok(MinDistance::Exact(d)),
            Ok(None) => Ok(MinDistance::ZeroCode),
            Err(Error::BudgetExceeded { .. }) => Ok(MinDistance::BudgetExceeded),
            Err(e) => Err(e),
        }
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            MinDistance::Exact(d) => Some(d),
            _ => None,
        }
    }
}

impl Serialize for MinDistance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MinDistance::Exact(d) => s.serialize_u64(*d as u64),
            MinDistance::ZeroCode => s.serialize_none(),
            MinDistance::BudgetExceeded => s.serialize_str("budget exceeded"),
        }
    }
}

fn serialize_element<S: Serializer>(
    e: &Option<FieldElement>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match e {
        Some(e) => s.serialize_str(&e.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub f: String,
    pub g: String,
    pub n: usize,
    pub k: usize,
    #[serde(flatten)]
    pub flags: DualityFlags,
    pub isodual: EquivalenceVerdict,
    /// First `λ` in element order for which the code is closed under the
    /// `λ`-constacyclic shift.
    #[serde(serialize_with = "serialize_element")]
    pub constacyclic_for: Option<FieldElement>,
    pub min_distance: MinDistance,
}

/// First nonzero `λ` (in element order) such that the code is `λ`-constacyclic.
pub fn constacyclic_constant(code: &LinearCode) -> Option<FieldElement> {
    let ctx = code.ctx();
    ctx.nonzero_values()
        .find(|&l| is_polycyclic_wrt(code, &Polynomial::constant(ctx, l)).expect("constant shift"))
        .map(|l| ctx.element(l).expect("field value"))
}

pub fn duality_report(p: &PolycyclicCode, node_budget: u64) -> Result<DualityReport> {
    Ok(DualityReport {
        f: p.associate().to_string(),
        g: p.generator().to_string(),
        n: p.len(),
        k: p.dimension(),
        flags: duality_flags(p),
        isodual: is_isodual(p.code(), node_budget)?,
        constacyclic_for: constacyclic_constant(p.code()),
        min_distance: MinDistance::of(p.code(), DEFAULT_ENUMERATION_BUDGET)?,
    })
}

/// The monic `g` with `g^2 = f`, if there is one.
pub fn sqrt_generator(f: &Polynomial) -> Option<Polynomial> {
    let ctx = f.ctx();
    let n = f.degree()?;
    if n == 0 || n % 2 == 1 || !f.is_monic() {
        return None;
    }
    let m = n / 2;
    let g = if ctx.characteristic() == 2 {
        if (1..n).step_by(2).any(|j| f.coeff(j) != 0) {
            return None;
        }
        let roots = (0..=m).map(|j| ctx.sqrt(f.coeff(2 * j)).expect("char 2"));
        Polynomial::new(ctx, roots.collect())
    } else {
        // Match coefficients of g^2 from the top: x^(n-j) fixes g_(m-j).
        let half = ctx.inv(ctx.from_int(2));
        let mut g = vec![0u32; m + 1];
        g[m] = 1;
        for j in 1..=m {
            let mut s = f.coeff(n - j);
            for t in 1..j {
                s = ctx.sub(s, ctx.mul(g[m - t], g[m - j + t]));
            }
            g[m - j] = ctx.mul(s, half);
        }
        Polynomial::new(ctx, g)
    };
    (g.mul(&g) == *f).then_some(g)
}

/// How a square trinomial's root looks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SquareShape {
    /// Odd characteristic: `x^(n/2) ± c` with the middle term at `n/2`.
    CentralBinomial,
    /// Characteristic 2: `x^(n/2) + a' x^(i/2) + b'`.
    FrobeniusTrinomial,
    Other,
}

pub fn square_shape(f: &Polynomial, g: &Polynomial) -> SquareShape {
    let (Some(t), Some(n)) = (Trinomial::parse(f), f.degree()) else {
        return SquareShape::Other;
    };
    let odd = f.ctx().characteristic() != 2;
    let m = n / 2;
    if odd && t.i == m && g.term_count() == 2 && g.constant_term() != 0 {
        SquareShape::CentralBinomial
    } else if !odd && t.i % 2 == 0 && g.term_count() == 3 && g.coeff(t.i / 2) != 0 {
        SquareShape::FrobeniusTrinomial
    } else {
        SquareShape::Other
    }
}

/// `x^m + a x^i + b` becomes `x^(km) + a x^(ki) + b`. Characteristic 2 only.
pub fn inflate_generator(g: &Polynomial, k: usize) -> Result<Polynomial> {
    let ctx = g.ctx();
    if ctx.characteristic() != 2 {
        return Err(Error::WrongCharacteristic {
            expected: 2,
            got: ctx.characteristic(),
        });
    }
    if Trinomial::parse(g).is_none() {
        return Err(Error::NotTrinomial(g.to_string()));
    }
    if k == 0 {
        return Err(Error::InvalidArgument(
            "inflation factor must be at least 1".into(),
        ));
    }
    Ok(g.inflate(k))
}

/// Whether a binary polynomial has an even number of terms. A binary
/// self-orthogonal generator must.
pub fn self_orthogonal_term_parity_check(g: &Polynomial) -> Result<bool> {
    let p = g.ctx().characteristic();
    if p != 2 || !g.ctx().is_prime_field() {
        return Err(Error::WrongCharacteristic {
            expected: 2,
            got: p,
        });
    }
    Ok(g.term_count().is_multiple_of(2))
}

/// The self-dual shape conditions for a divisor `g` of a trinomial: `n = 2k`,
/// middle exponent `i = k`, `g = x^k - a` with `a^2 = -1`, and
/// `ord(f) >= 3k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfDualCertificate {
    pub n: usize,
    pub i: usize,
    pub k: usize,
    /// `a` when `g = x^k - a`.
    pub a: Option<String>,
    pub a_squared_is_minus_one: bool,
    pub order: u64,
    pub order_at_least_3k: bool,
}

impl SelfDualCertificate {
    pub fn new(t: &Trinomial, g: &Polynomial, order: u64) -> SelfDualCertificate {
        let ctx = g.ctx();
        let k = g.degree().expect("nonzero divisor");
        let a = (k > 0 && g.term_count() == 2 && g.constant_term() != 0)
            .then(|| ctx.neg(g.constant_term()));
        SelfDualCertificate {
            n: t.n,
            i: t.i,
            k,
            a: a.map(|a| ctx.format_value(a)),
            a_squared_is_minus_one: a.is_some_and(|a| ctx.mul(a, a) == ctx.neg(1)),
            order,
            order_at_least_3k: order >= 3 * k as u64,
        }
    }

    pub fn holds(&self) -> bool {
        self.n == 2 * self.k
            && self.i == self.k
            && self.a.is_some()
            && self.a_squared_is_minus_one
            && self.order_at_least_3k
    }
}

#[derive(Clone, Debug)]
pub struct ClassifiedDivisor {
    pub code: PolycyclicCode,
    pub self_dual: bool,
    pub certificate: SelfDualCertificate,
}

/// Every divisor of a trinomial with its self-dual flag and shape certificate.
pub fn classify_divisors(f: &Polynomial) -> Result<Vec<ClassifiedDivisor>> {
    let t = Trinomial::parse(f).ok_or_else(|| Error::NotTrinomial(f.to_string()))?;
    let order = poly_order(f)?;
    monic_divisors(f)?
        .into_iter()
        .map(|g| {
            let code = PolycyclicCode::new(f, &g)?;
            Ok(ClassifiedDivisor {
                self_dual: duality_flags(&code).self_dual,
                certificate: SelfDualCertificate::new(&t, &g, order),
                code,
            })
        })
        .collect()
}

/// The self-dual codes in the family of a trinomial, each with its shape
/// certificate.
pub fn classify_self_dual(f: &Polynomial) -> Result<Vec<(Polynomial, SelfDualCertificate)>> {
    Ok(classify_divisors(f)?
        .into_iter()
        .filter(|d| d.self_dual)
        .map(|d| (d.code.generator().clone(), d.certificate))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::DEFAULT_NODE_BUDGET;
    use crate::field::FieldCtx;

    fn parse(s: &str, f: &FieldCtx) -> Polynomial {
        Polynomial::parse(s, f).unwrap()
    }

    fn pc(f: &str, g: &str, ctx: &FieldCtx) -> PolycyclicCode {
        PolycyclicCode::new(&parse(f, ctx), &parse(g, ctx)).unwrap()
    }

    #[test]
    fn flags_examples() {
        let f5 = FieldCtx::prime(5).unwrap();
        let flags = duality_flags(&pc("x^4+4*x^2+4", "x^2+2", &f5));
        assert!(flags.self_dual && flags.self_orthogonal && flags.dual_containing);

        let f3 = FieldCtx::prime(3).unwrap();
        let flags = duality_flags(&pc("x^3+x-1", "x+1", &f3));
        assert!(flags.dual_containing && !flags.self_dual && !flags.dual_containing_trivial);

        let flags = duality_flags(&pc("x^3+x-1", "1", &f3));
        assert!(flags.dual_containing && flags.dual_containing_trivial);
    }

    #[test]
    fn report_for_self_dual_example() {
        let f5 = FieldCtx::prime(5).unwrap();
        let r = duality_report(&pc("x^4+4*x^2+4", "x^2+2", &f5), DEFAULT_NODE_BUDGET).unwrap();
        assert!(r.isodual.is_equivalent());
        assert_eq!(r.min_distance, MinDistance::Exact(2));
        assert_eq!(r.constacyclic_for.as_ref().unwrap().value(), 4);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["self_dual"], true);
        assert_eq!(json["min_distance"], 2);

        let f3 = FieldCtx::prime(3).unwrap();
        let r = duality_report(&pc("x^3+x-1", "x^3+x-1", &f3), 10).unwrap();
        assert_eq!(r.min_distance, MinDistance::ZeroCode);
        assert!(r.flags.self_orthogonal && !r.flags.dual_containing);
    }

    #[test]
    fn square_roots() {
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(
            sqrt_generator(&parse("x^4+4*x^2+4", &f5)),
            Some(parse("x^2+2", &f5))
        );
        let f4 = FieldCtx::new(2, 2).unwrap();
        // a = t, b = t+1: a^2 = t+1, b^2 = t.
        let f = parse("x^10+[1,1]*x^4+[0,1]", &f4);
        assert_eq!(sqrt_generator(&f), Some(parse("x^5+[0,1]*x^2+[1,1]", &f4)));
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(sqrt_generator(&parse("x^5+x^4+1", &f2)), None);
        assert_eq!(sqrt_generator(&parse("x^4+x^3+1", &f2)), None);
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(sqrt_generator(&parse("x^2+1", &f3)), None);
    }

    #[test]
    fn shapes() {
        let f5 = FieldCtx::prime(5).unwrap();
        let f = parse("x^4+4*x^2+4", &f5);
        assert_eq!(
            square_shape(&f, &sqrt_generator(&f).unwrap()),
            SquareShape::CentralBinomial
        );
        let f2 = FieldCtx::prime(2).unwrap();
        let f = parse("x^6+x^2+1", &f2);
        assert_eq!(
            square_shape(&f, &sqrt_generator(&f).unwrap()),
            SquareShape::FrobeniusTrinomial
        );
    }

    #[test]
    fn inflation() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let g = parse("x^5+[0,1]*x^2+[1,1]", &f4);
        assert_eq!(
            inflate_generator(&g, 2).unwrap(),
            parse("x^10+[0,1]*x^4+[1,1]", &f4)
        );
        assert_eq!(inflate_generator(&g, 1).unwrap(), g);
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(
            inflate_generator(&parse("x^2+x+1", &f2), 3).unwrap(),
            parse("x^6+x^3+1", &f2)
        );
        assert!(inflate_generator(&parse("x^2+1", &f2), 2).is_err());
        let f3 = FieldCtx::prime(3).unwrap();
        assert!(inflate_generator(&parse("x^2+x+1", &f3), 2).is_err());
    }

    #[test]
    fn term_parity() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert!(!self_orthogonal_term_parity_check(&parse("x^2+x+1", &f2)).unwrap());
        assert!(self_orthogonal_term_parity_check(&parse("x^3+x", &f2)).unwrap());
    }

    #[test]
    fn self_dual_classification() {
        let f5 = FieldCtx::prime(5).unwrap();
        let found = classify_self_dual(&parse("x^4+4*x^2+4", &f5)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].0, parse("x^2+2", &f5));
        assert_eq!(found[0].1.a.as_deref(), Some("3"));
        assert!(found[0].1.holds());

        let found = classify_self_dual(&parse("x^4-4*x^2+4", &f5)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].0, parse("x^2-2", &f5));
        assert_eq!(found[0].1.a.as_deref(), Some("2"));

        assert!(matches!(
            classify_self_dual(&parse("x^4+x^2", &f5)),
            Err(Error::NotTrinomial(_))
        ));
    }
}
