//! Integer helpers: prime factorisation and divisor lists.

use num_bigint::{BigInt, BigUint};
use num_prime::nt_funcs;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Prime factorisation of `|n|` as `(prime, exponent)` pairs, ascending.
/// `n` must be nonzero.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let n = n.magnitude();
    if let Some(small) = n.to_u64() {
        return nt_funcs::factorize64(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e as u32))
            .collect();
    }
    nt_funcs::factorize(n.clone())
        .into_iter()
        .map(|(p, e): (BigUint, usize)| (BigInt::from(p), e as u32))
        .collect()
}

/// Distinct primes dividing `n`, ascending.
pub fn prime_support(n: &BigInt) -> Vec<BigInt> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Positive divisors of `|n|`, ascending. `n` must be nonzero.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let base = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            divs.extend(base.iter().map(|d| d * &pk));
        }
    }
    divs.sort();
    divs
}

pub fn divisor_count(n: &BigInt) -> usize {
    factorize(n).iter().map(|&(_, e)| e as usize + 1).product()
}

pub fn is_prime(n: &BigInt) -> bool {
    n.is_positive() && nt_funcs::is_prime(n.magnitude(), None).probably()
}
