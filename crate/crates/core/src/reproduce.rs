//! Re-runs the worked examples and classification results against expected
//! values stored in `data/reproduce.json`.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::duality::{classify_self_dual, duality_flags, sqrt_generator, MinDistance};
use crate::equivalence::{is_isodual, verify_witness};
use crate::error::{Error, Result};
use crate::field::{is_prime, FieldCtx};
use crate::poly::{factorize, poly_order, Polynomial};
use crate::polycyclic::{
    enumerate_family, family_correspondence, is_polycyclic_wrt, PolycyclicCode,
};
use crate::scan::{
    binary_trinomial_scan, prime_length_dual_containing_search, self_dual_classification_scan,
    TrinomialFilter, SCHEMA,
};

const EXPECTATIONS: &str = include_str!("../data/reproduce.json");

fn expectations() -> Map<String, Value> {
    match serde_json::from_str(EXPECTATIONS) {
        Ok(Value::Object(m)) => m,
        _ => unreachable!("embedded expectations are a JSON object"),
    }
}

/// Known reproduction ids, in sorted order.
pub fn ids() -> Vec<String> {
    expectations().keys().cloned().collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reproduction {
    pub schema: &'static str,
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Reproduction {
    /// `-`/`+` lines for every failing check.
    pub fn diff(&self) -> String {
        let mut out = String::new();
        for c in self.checks.iter().filter(|c| !c.ok) {
            out.push_str(&format!("{}:\n- {}\n+ {}\n", c.name, c.expected, c.actual));
        }
        out
    }
}

pub fn reproduce(id: &str, node_budget: u64) -> Result<Reproduction> {
    let all = expectations();
    let entry = all
        .get(id)
        .ok_or_else(|| Error::UnknownItem(id.to_string()))?;
    let actual = compute(id, node_budget)?;
    let expect = entry["expect"].as_object().expect("expect object");
    let checks: Vec<Check> = expect
        .iter()
        .map(|(name, expected)| {
            let actual = actual.get(name).cloned().unwrap_or(Value::Null);
            Check {
                name: name.clone(),
                ok: actual == *expected,
                expected: expected.clone(),
                actual,
            }
        })
        .collect();
    Ok(Reproduction {
        schema: SCHEMA,
        id: id.to_string(),
        title: entry["title"].as_str().unwrap_or_default().to_string(),
        passed: checks.iter().all(|c| c.ok),
        checks,
    })
}

fn poly(text: &str, ctx: &FieldCtx) -> Result<Polynomial> {
    Polynomial::parse(text, ctx)
}

fn factor_strings(f: &Polynomial) -> Result<Vec<String>> {
    let mut v: Vec<String> = factorize(f)?
        .factors
        .iter()
        .map(|(p, e)| format!("({p})^{e}"))
        .collect();
    v.sort();
    Ok(v)
}

fn compute(id: &str, budget: u64) -> Result<Map<String, Value>> {
    let value = match id {
        "3.1" => {
            let f3 = FieldCtx::prime(3)?;
            let t1 = poly("x^10+x^8+1", &f3)?;
            let t2 = poly("x^10+x^2+2", &f3)?;
            json!({
                "order_t1": poly_order(&t1)?,
                "order_t2": poly_order(&t2)?,
                "factors_t1": factor_strings(&t1)?,
                "factors_t2": factor_strings(&t2)?,
                "family_size_t1": enumerate_family(&t1)?.len(),
                "family_size_t2": enumerate_family(&t2)?.len(),
            })
        }
        "3.2" => {
            let f2 = FieldCtx::prime(2)?;
            let fc = family_correspondence(&poly("x^5+x^4+1", &f2)?, budget)?;
            let gens = |image: bool| -> Vec<String> {
                fc.pairs
                    .iter()
                    .map(|p| {
                        let c = if image { &p.image } else { &p.source };
                        c.generator().to_string()
                    })
                    .collect()
            };
            json!({
                "f2": fc.f2.to_string(),
                "pairs": fc.pairs.len(),
                "bijective": fc.bijective,
                "all_equivalent": fc.all_equivalent,
                "reversal_verified": fc.pairs.iter().all(|p| p.reversal_verified),
                "s1_generators": gens(false),
                "s2_generators": gens(true),
            })
        }
        "4.1" => {
            let mut out = Map::new();
            for m in [2, 3, 4] {
                let ctx = FieldCtx::new(2, m)?;
                // a = t and b = t + 1 in the encoding sum c_i 2^i.
                let (a, b) = (2, 3);
                let g = Polynomial::new(&ctx, vec![b, 0, a, 0, 0, 1]);
                let mut fc = vec![0; 11];
                fc[10] = 1;
                fc[4] = ctx.mul(a, a);
                fc[0] = ctx.mul(b, b);
                let f = Polynomial::new(&ctx, fc);
                let code = PolycyclicCode::new(&f, &g)?;
                let v = is_isodual(code.code(), budget)?;
                out.insert(
                    format!("q={}", ctx.order()),
                    json!({
                        "square_root_matches": sqrt_generator(&f).as_ref() == Some(&g),
                        "n": code.len(),
                        "k": code.dimension(),
                        "isodual": v.status.to_string(),
                    }),
                );
            }
            Value::Object(out)
        }
        "4.2" => {
            let f2 = FieldCtx::prime(2)?;
            let f = poly("x^20+x^10+1", &f2)?;
            let a = poly("x^2+x+1", &f2)?;
            let b = poly("x^4+x+1", &f2)?;
            let g = a.mul(&b).mul(&b);
            let code = PolycyclicCode::new(&f, &g)?;
            let v = is_isodual(code.code(), budget)?;
            let w = v.witness.as_ref();
            json!({
                "n": code.len(),
                "k": code.dimension(),
                "g_squared_equals_f": g.mul(&g) == f,
                "isodual": v.status.to_string(),
                "witness_is_permutation": w.is_some_and(|w| w.is_permutation()),
                "witness_verified": w.is_some_and(|w| verify_witness(code.code(), &code.code().dual(), w)),
            })
        }
        "5.1" | "5.2" => {
            let f5 = FieldCtx::prime(5)?;
            let (f, g) = if id == "5.1" {
                ("x^4+4*x^2+4", "x^2+2")
            } else {
                ("x^4-4*x^2+4", "x^2-2")
            };
            let (f, g) = (poly(f, &f5)?, poly(g, &f5)?);
            let code = PolycyclicCode::new(&f, &g)?;
            let found = classify_self_dual(&f)?;
            let cert = found.iter().find(|(h, _)| *h == g).map(|(_, c)| c);
            let minus_one = Polynomial::constant(&f5, f5.neg(1));
            json!({
                "self_dual": duality_flags(&code).self_dual,
                "min_distance": MinDistance::of(code.code(), 1 << 20)?,
                "a": cert.and_then(|c| c.a.clone()),
                "certificate_holds": cert.is_some_and(|c| c.holds()),
                "constacyclic_minus_one": is_polycyclic_wrt(code.code(), &minus_one)?,
                "isodual": is_isodual(code.code(), budget)?.status.to_string(),
            })
        }
        "6.1" => {
            let f3 = FieldCtx::prime(3)?;
            let (f, g) = (poly("x^3+x-1", &f3)?, poly("x+1", &f3)?);
            let code = PolycyclicCode::new(&f, &g)?;
            let flags = duality_flags(&code);
            let search = prime_length_dual_containing_search(&f3, 3, TrinomialFilter::All)?;
            json!({
                "parity_check": code.parity_check_from_order()?.to_string(),
                "dual_containing": flags.dual_containing,
                "dual_containing_trivial": flags.dual_containing_trivial,
                "self_dual": flags.self_dual,
                "length_is_prime": is_prime(code.len() as u64),
                "found_by_search": search
                    .witnesses
                    .iter()
                    .any(|w| w.f == f.to_string() && w.g == g.to_string()),
            })
        }
        "thm5.1" => {
            let mut out = Map::new();
            for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
                let ctx = FieldCtx::new(p, m)?;
                let r = self_dual_classification_scan(&ctx, 10)?;
                out.insert(
                    format!("q={}", ctx.order()),
                    json!({
                        "violations": r.violations.len(),
                        "inconclusive": r.inconclusive.len(),
                        "self_dual_codes": r.witnesses.len(),
                    }),
                );
            }
            Value::Object(out)
        }
        "thm6.1" => {
            let r = binary_trinomial_scan(14)?;
            json!({
                "violations": r.violations.len(),
                "gcd_checks": r.stats.get("gcd_checks"),
                "trivial_dual_containing": r.stats.get("trivial_dual_containing"),
            })
        }
        other => return Err(Error::UnknownItem(other.to_string())),
    };
    Ok(match value {
        Value::Object(m) => m,
        _ => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::DEFAULT_NODE_BUDGET;

    #[test]
    fn every_id_reproduces() {
        for id in ids() {
            let r = reproduce(&id, DEFAULT_NODE_BUDGET).unwrap();
            assert!(r.passed, "{id}\n{}", r.diff());
        }
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            reproduce("9.9", 10).unwrap_err(),
            Error::UnknownItem("9.9".into())
        );
    }

    #[test]
    fn diff_lists_failures() {
        let r = Reproduction {
            schema: SCHEMA,
            id: "x".into(),
            title: String::new(),
            passed: false,
            checks: vec![Check {
                name: "order".into(),
                expected: json!(156),
                actual: json!(78),
                ok: false,
            }],
        };
        assert_eq!(r.diff(), "order:\n- 156\n+ 78\n");
    }
}
