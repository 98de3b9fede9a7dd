//! Exhaustive scans over trinomial families. Instances run in parallel and
//! are merged in input order, so reports are byte-stable.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::DEFAULT_ENUMERATION_BUDGET;
use crate::duality::{
    classify_divisors, duality_flags, self_orthogonal_term_parity_check, sqrt_generator,
    square_shape, MinDistance, SquareShape,
};
use crate::equivalence::{is_isodual, EquivalenceStatus, MonomialMap};
use crate::error::{Error, Result};
use crate::field::{is_prime, FieldCtx};
use crate::poly::{monic_divisors, Polynomial};
use crate::polycyclic::{is_polycyclic_wrt, PolycyclicCode, Trinomial};

pub const SCHEMA: &str = "polycode/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub f: String,
    pub g: String,
    pub property: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial_witness: Option<MonomialMap>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Finding {
    pub fn new(f: &Polynomial, g: &Polynomial, property: &str) -> Finding {
        Finding {
            f: f.to_string(),
            g: g.to_string(),
            property: property.to_string(),
            monomial_witness: None,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Finding {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub schema: &'static str,
    pub scan: &'static str,
    pub field: String,
    pub n_range: (usize, usize),
    pub instances_checked: u64,
    pub violations: Vec<Finding>,
    /// Instances whose check could not finish within its budget.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inconclusive: Vec<Finding>,
    pub witnesses: Vec<Finding>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub stats: BTreeMap<String, u64>,
}

impl ScanReport {
    fn new(scan: &'static str, ctx: &FieldCtx, n_range: (usize, usize)) -> ScanReport {
        ScanReport {
            schema: SCHEMA,
            scan,
            field: ctx.to_string(),
            n_range,
            instances_checked: 0,
            violations: Vec::new(),
            inconclusive: Vec::new(),
            witnesses: Vec::new(),
            stats: BTreeMap::new(),
        }
    }

    /// No violations and nothing left undecided.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.inconclusive.is_empty()
    }

    fn bump(&mut self, key: &str, by: u64) {
        *self.stats.entry(key.to_string()).or_default() += by;
    }

    fn absorb(&mut self, part: ScanReport) {
        self.instances_checked += part.instances_checked;
        self.violations.extend(part.violations);
        self.inconclusive.extend(part.inconclusive);
        self.witnesses.extend(part.witnesses);
        for (k, v) in part.stats {
            self.bump(&k, v);
        }
    }

    fn merge(
        scan: &'static str,
        ctx: &FieldCtx,
        n_range: (usize, usize),
        parts: Vec<ScanReport>,
    ) -> ScanReport {
        let mut report = ScanReport::new(scan, ctx, n_range);
        for p in parts {
            report.absorb(p);
        }
        report
    }
}

/// All `x^n - a x^i - b` with `a, b` nonzero, `lo <= n <= hi`, in scan order
/// (n, then i, then a, then b).
pub fn trinomials(ctx: &FieldCtx, lo: usize, hi: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for n in lo.max(2)..=hi {
        for i in 1..n {
            for a in ctx.nonzero_values() {
                for b in ctx.nonzero_values() {
                    out.push(Trinomial { n, i, a, b }.to_polynomial(ctx));
                }
            }
        }
    }
    out
}

/// Binary trinomials `x^n + x^i + 1`: no self-orthogonal, self-dual or
/// nontrivial dual-containing codes, and `gcd(x^n + 1, f) = 1`.
pub fn binary_trinomial_scan(n_max: usize) -> Result<ScanReport> {
    let ctx = FieldCtx::prime(2)?;
    let fs = trinomials(&ctx, 2, n_max);
    let parts = fs
        .par_iter()
        .map(|f| binary_instance(&ctx, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::merge(
        "binary-impossibility",
        &ctx,
        (2, n_max),
        parts,
    ))
}

fn binary_instance(ctx: &FieldCtx, f: &Polynomial) -> Result<ScanReport> {
    let mut r = ScanReport::new("", ctx, (0, 0));
    let n = f.degree().expect("trinomial");
    let binomial = Polynomial::monomial(ctx, 1, n).add(&Polynomial::one(ctx));
    r.bump("gcd_checks", 1);
    if !f.gcd(&binomial)?.is_one() {
        r.violations
            .push(Finding::new(f, &binomial, "gcd with x^n+1 is not 1"));
    }
    for g in monic_divisors(f)? {
        let code = PolycyclicCode::new(f, &g)?;
        let flags = duality_flags(&code);
        r.instances_checked += 1;
        if self_orthogonal_term_parity_check(&g)? {
            r.violations.push(Finding::new(f, &g, "even term count"));
        }
        // The zero code sits inside every code; the claim concerns k >= 1.
        let nonzero = code.dimension() > 0;
        if flags.self_dual {
            r.violations.push(Finding::new(f, &g, "self-dual"));
        }
        if flags.self_orthogonal && nonzero {
            r.violations.push(Finding::new(f, &g, "self-orthogonal"));
        }
        if flags.dual_containing && !flags.dual_containing_trivial {
            r.violations
                .push(Finding::new(f, &g, "nontrivial dual-containing"));
        }
        if flags.dual_containing_trivial {
            r.bump("trivial_dual_containing", 1);
        }
    }
    Ok(r)
}

/// Self-dual codes in trinomial families over `ctx` with even `n <= n_max`:
/// self-dual exactly when the shape certificate holds, and every self-dual
/// code has distance 2 and is closed under the `-1`-constacyclic shift.
pub fn self_dual_classification_scan(ctx: &FieldCtx, n_max: usize) -> Result<ScanReport> {
    let fs: Vec<Polynomial> = trinomials(ctx, 2, n_max)
        .into_iter()
        .filter(|f| f.degree().unwrap() % 2 == 0)
        .collect();
    let minus_one = Polynomial::constant(ctx, ctx.neg(1));
    let parts = fs
        .par_iter()
        .map(|f| -> Result<ScanReport> {
            let mut r = ScanReport::new("", ctx, (0, 0));
            r.bump("trinomials", 1);
            for d in classify_divisors(f)? {
                r.instances_checked += 1;
                let g = d.code.generator();
                let cert = serde_json::to_string(&d.certificate).expect("serializable");
                if d.self_dual != d.certificate.holds() {
                    r.violations.push(
                        Finding::new(f, g, "self-dual iff shape certificate").with_detail(cert),
                    );
                    continue;
                }
                if !d.self_dual {
                    continue;
                }
                let code = d.code.code();
                match MinDistance::of(code, DEFAULT_ENUMERATION_BUDGET)? {
                    MinDistance::Exact(2) => {}
                    MinDistance::BudgetExceeded => {
                        r.inconclusive.push(Finding::new(f, g, "minimum distance"))
                    }
                    other => r.violations.push(
                        Finding::new(f, g, "minimum distance 2").with_detail(format!("{other:?}")),
                    ),
                }
                if !is_polycyclic_wrt(code, &minus_one)? {
                    r.violations
                        .push(Finding::new(f, g, "closed under -1-constacyclic shift"));
                }
                r.witnesses
                    .push(Finding::new(f, g, "self-dual").with_detail(cert));
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::merge(
        "self-dual-classify",
        ctx,
        (2, n_max),
        parts,
    ))
}

/// Which trinomials a dual-containing search visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrinomialFilter {
    /// `x^n - a x^i - b` for all `a` (including 0) and nonzero `b`.
    All,
    /// Only `a = 0`, i.e. constacyclic associates `x^n - b`.
    ConstacyclicOnly,
}

/// Nontrivial dual-containing codes of prime length `n` associated with
/// trinomials (and binomials `x^n - b`). Over GF(2) any hit is a violation.
pub fn prime_length_dual_containing_search(
    ctx: &FieldCtx,
    n: usize,
    filter: TrinomialFilter,
) -> Result<ScanReport> {
    if !is_prime(n as u64) {
        return Err(Error::NotPrime(n as u64));
    }
    let mut fs = match filter {
        TrinomialFilter::All => trinomials(ctx, n, n),
        TrinomialFilter::ConstacyclicOnly => Vec::new(),
    };
    let xn = Polynomial::monomial(ctx, 1, n);
    fs.extend(
        ctx.nonzero_values()
            .map(|b| xn.sub(&Polynomial::constant(ctx, b))),
    );
    let binary = ctx.order() == 2;
    let parts = fs
        .par_iter()
        .map(|f| -> Result<ScanReport> {
            let mut r = ScanReport::new("", ctx, (0, 0));
            for g in monic_divisors(f)? {
                r.instances_checked += 1;
                let flags = duality_flags(&PolycyclicCode::new(f, &g)?);
                if flags.dual_containing && !flags.dual_containing_trivial {
                    let hit = Finding::new(f, &g, "dual-containing");
                    if binary {
                        r.violations.push(hit.clone());
                    }
                    r.witnesses.push(hit);
                }
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::merge(
        "prime-counterexample",
        ctx,
        (n, n),
        parts,
    ))
}

/// Every monic `g` of degree `k <= k_max` dividing both `x^(2k) + 1` and a
/// trinomial `x^(2k) - b x^i - c` has `i = k`, `g = x^k - a` with `a != 0`,
/// and `c + 1 != 0`.
pub fn common_divisor_shape_scan(ctx: &FieldCtx, k_max: usize) -> Result<ScanReport> {
    let fs: Vec<Polynomial> = (1..=k_max)
        .flat_map(|k| trinomials(ctx, 2 * k, 2 * k))
        .collect();
    let parts = fs
        .par_iter()
        .map(|f| -> Result<ScanReport> {
            let mut r = ScanReport::new("", ctx, (0, 0));
            let t = Trinomial::parse(f).expect("trinomial");
            let k = t.n / 2;
            let binomial = Polynomial::monomial(ctx, 1, t.n).add(&Polynomial::one(ctx));
            let common = f.gcd(&binomial)?;
            r.instances_checked += 1;
            if common.degree().unwrap() < k {
                return Ok(r);
            }
            for g in monic_divisors(&common)? {
                if g.degree() != Some(k) {
                    continue;
                }
                r.bump("common_divisors", 1);
                let ok = t.i == k
                    && g.term_count() == 2
                    && g.constant_term() != 0
                    && ctx.add(t.b, 1) != 0;
                if ok {
                    r.witnesses
                        .push(Finding::new(f, &g, "common divisor x^k - a"));
                } else {
                    r.violations
                        .push(Finding::new(f, &g, "common divisor shape"));
                }
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::merge(
        "common-divisor-shape",
        ctx,
        (2, 2 * k_max),
        parts,
    ))
}

/// For every trinomial `f` with `n <= n_max` that is the square of a monic
/// `g`, the code generated by `g` must be isodual, and its weight enumerator
/// must equal its dual's. Squares of an unexpected shape are reported as
/// witnesses with property `"unexpected square shape"`.
pub fn square_isodual_scan(ctx: &FieldCtx, n_max: usize, node_budget: u64) -> Result<ScanReport> {
    let fs = trinomials(ctx, 2, n_max);
    let parts = fs
        .par_iter()
        .map(|f| -> Result<ScanReport> {
            let mut r = ScanReport::new("", ctx, (0, 0));
            let Some(g) = sqrt_generator(f) else {
                return Ok(r);
            };
            r.instances_checked += 1;
            let shape = square_shape(f, &g);
            if shape == SquareShape::Other {
                r.witnesses
                    .push(Finding::new(f, &g, "unexpected square shape"));
            }
            let code = PolycyclicCode::new(f, &g)?;
            let verdict = is_isodual(code.code(), node_budget)?;
            let mut hit = Finding::new(f, &g, "isodual");
            match verdict.status {
                EquivalenceStatus::Equivalent => {
                    hit.monomial_witness = verdict.witness;
                    r.witnesses.push(hit);
                }
                EquivalenceStatus::NotEquivalent => r
                    .violations
                    .push(hit.with_detail(verdict.separator.unwrap_or_default())),
                EquivalenceStatus::Inconclusive => r.inconclusive.push(hit),
            }
            let c = code.code();
            match (
                c.weight_enumerator(DEFAULT_ENUMERATION_BUDGET),
                c.dual().weight_enumerator(DEFAULT_ENUMERATION_BUDGET),
            ) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(_), Ok(_)) => {
                    r.violations
                        .push(Finding::new(f, &g, "weight enumerator equals dual's"))
                }
                _ => r
                    .inconclusive
                    .push(Finding::new(f, &g, "weight enumerator")),
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::merge("square-isodual", ctx, (2, n_max), parts))
}

/// Binary trinomial divisors of degree `n/2` with `g^2 != f` that are
/// nevertheless isodual. Nothing is asserted; the witnesses are the hits.
pub fn non_square_isodual_survey(n_max: usize, node_budget: u64) -> Result<ScanReport> {
    let ctx = FieldCtx::prime(2)?;
    let fs: Vec<Polynomial> = trinomials(&ctx, 2, n_max)
        .into_iter()
        .filter(|f| f.degree().unwrap() % 2 == 0)
        .collect();
    let parts = fs
        .par_iter()
        .map(|f| -> Result<ScanReport> {
            let mut r = ScanReport::new("", &ctx, (0, 0));
            let half = f.degree().unwrap() / 2;
            for g in monic_divisors(f)? {
                if g.degree() != Some(half) || g.mul(&g) == *f {
                    continue;
                }
                r.instances_checked += 1;
                let code = PolycyclicCode::new(f, &g)?;
                let verdict = is_isodual(code.code(), node_budget)?;
                match verdict.status {
                    EquivalenceStatus::Equivalent => {
                        let mut hit = Finding::new(f, &g, "isodual, g^2 != f");
                        hit.monomial_witness = verdict.witness;
                        r.witnesses.push(hit);
                    }
                    EquivalenceStatus::NotEquivalent => r.bump("not_isodual", 1),
                    EquivalenceStatus::Inconclusive => {
                        r.inconclusive.push(Finding::new(f, &g, "isodual"))
                    }
                }
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport::merge(
        "non-square-isodual",
        &ctx,
        (2, n_max),
        parts,
    ))
}
