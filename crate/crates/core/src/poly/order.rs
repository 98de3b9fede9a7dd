//! Order of a polynomial: the least `e >= 1` with `f | x^e - 1`, after
//! removing any power of `x`.

use super::{factorize, Polynomial};
use crate::error::{Error, Result};
use crate::field::prime_factors;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> Result<u64> {
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::OrderOverflow)
}

fn check_input(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(f.strip_x_power().1)
}

/// Order of `x` in GF(q)[x]/(p) for a monic irreducible `p` with `p(0) != 0`.
fn irreducible_order(p: &Polynomial) -> Result<u64> {
    let ctx = p.ctx();
    let d = p.degree().expect("nonzero") as u32;
    let group = (ctx.order() as u128)
        .checked_pow(d)
        .filter(|&n| n <= u64::MAX as u128)
        .ok_or(Error::OrderOverflow)?
        - 1;
    let x = Polynomial::x(ctx);
    let mut e = group;
    for r in prime_factors(group) {
        while e % r == 0 && x.pow_mod(e / r, p)?.is_one() {
            e /= r;
        }
    }
    Ok(e as u64)
}

/// Order via factorization: `lcm_i ord(p_i) * p^t_i` with `t_i` the least
/// integer such that `p^t_i >= e_i`.
pub fn poly_order(f: &Polynomial) -> Result<u64> {
    let f0 = check_input(f)?;
    if f0.is_constant() {
        return Ok(1);
    }
    let p = f.ctx().characteristic() as u64;
    let mut acc = 1u64;
    for (irr, mult) in factorize(&f0)?.factors {
        let mut lift = 1u64;
        while lift < mult as u64 {
            lift = lift.checked_mul(p).ok_or(Error::OrderOverflow)?;
        }
        let ord = irreducible_order(&irr)?
            .checked_mul(lift)
            .ok_or(Error::OrderOverflow)?;
        acc = lcm(acc, ord)?;
    }
    Ok(acc)
}

/// Order by iterating `x^k mod f` until it reaches 1. Gives up with
/// [`Error::OrderOverflow`] after `limit` steps.
pub fn poly_order_brute_force(f: &Polynomial, limit: u64) -> Result<u64> {
    let f0 = check_input(f)?;
    if f0.is_constant() {
        return Ok(1);
    }
    let x = Polynomial::x(f.ctx()).rem(&f0)?;
    let mut cur = x.clone();
    for e in 1..=limit {
        if cur.is_one() {
            return Ok(e);
        }
        cur = cur.mul(&x).rem(&f0)?;
    }
    Err(Error::OrderOverflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn parse(s: &str, f: &FieldCtx) -> Polynomial {
        Polynomial::parse(s, f).unwrap()
    }

    #[test]
    fn example_orders() {
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(poly_order(&parse("x^10+x^8+1", &f3)).unwrap(), 156);
        assert_eq!(poly_order(&parse("x^10+x^2+2", &f3)).unwrap(), 156);
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(poly_order(&parse("x-1", &f5)).unwrap(), 1);
    }

    #[test]
    fn binary_cubic_matches_brute_force() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f = parse("x^3+x+1", &f2);
        assert_eq!(poly_order_brute_force(&f, 100).unwrap(), 7);
        assert_eq!(poly_order(&f).unwrap(), 7);
    }

    #[test]
    fn strips_powers_of_x() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(poly_order(&parse("x^5+x^3+x^2", &f2)).unwrap(), 7);
        assert_eq!(poly_order(&parse("x^4", &f2)).unwrap(), 1);
    }

    #[test]
    fn rejects_constants() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(
            poly_order(&Polynomial::one(&f2)),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            poly_order(&Polynomial::zero(&f2)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn repeated_factors() {
        // (x+1)^2 over GF(2): x^2+1 divides x^2-1, order 2.
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(poly_order(&parse("x^2+1", &f2)).unwrap(), 2);
        // (x+1)^3 over GF(2) needs x^4-1.
        assert_eq!(poly_order(&parse("x^3+x^2+x+1", &f2)).unwrap(), 4);
    }
}
