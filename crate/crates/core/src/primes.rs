use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{input, Result};

/// The first `k` primes.
pub fn first_primes(k: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(k);
    let mut c = 2u64;
    while primes.len() < k {
        if primes.iter().take_while(|&&p| p * p <= c).all(|&p| !c.is_multiple_of(p)) {
            primes.push(c);
        }
        c += 1;
    }
    primes
}

/// Trial divisors tried before giving up on a cofactor.
const TRIAL_LIMIT: u64 = 1 << 22;

/// Prime factorization as ascending `(prime, exponent)` pairs.
///
/// Trial division; a cofactor left after dividing out everything below
/// `2^22` is accepted as prime only if it is below `2^44`.
pub fn factorize(n: &BigUint) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return input("cannot factor zero");
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while !rest.is_one() {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            out.push((rest.clone(), 1));
            break;
        }
        if p > TRIAL_LIMIT {
            return input(format!("{n} has a prime factor too large to find by trial division"));
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Ok(out)
}

/// Distinct prime factors, ascending.
pub fn prime_factors(n: &BigUint) -> Result<Vec<BigUint>> {
    Ok(factorize(n)?.into_iter().map(|(p, _)| p).collect())
}

pub fn is_square_free(n: &BigUint) -> Result<bool> {
    Ok(factorize(n)?.iter().all(|&(_, e)| e == 1))
}
