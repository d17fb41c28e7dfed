//! Degree patterns of factorisations modulo small primes.
//!
//! If `p` has a factor of degree `k` over the integers and the prime does not
//! divide the leading coefficient, then `k` is a sum of some of the factor
//! degrees of `p mod prime`. Intersecting those subset sums over several
//! primes gives a set that must contain every possible integer factor degree;
//! an empty intersection proves irreducibility.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exact_poly::IntPoly;

const PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
const MAX_USABLE_PRIMES: usize = 6;

/// Dense polynomial over F_p, ascending, trimmed (empty is zero).
type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime and tiny, so Fermat is fine.
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn reduce(poly: &IntPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(
        poly.coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect(),
    )
}

fn rem(a: &Fp, m: &Fp, p: u64) -> Fp {
    let mut r = a.clone();
    let dm = m.len() - 1;
    let inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let q = r[top] * inv % p;
        if q != 0 {
            for (j, &c) in m.iter().enumerate() {
                let idx = top - dm + j;
                r[idx] = (r[idx] + p - q * c % p) % p;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn div(a: &Fp, m: &Fp, p: u64) -> Fp {
    let mut r = a.clone();
    let dm = m.len() - 1;
    let inv = inv_mod(m[dm], p);
    let mut q = vec![0; r.len() - dm];
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * inv % p;
        q[top - dm] = c;
        for (j, &mc) in m.iter().enumerate() {
            let idx = top - dm + j;
            r[idx] = (r[idx] + p - c * mc % p) % p;
        }
        r.pop();
    }
    trim(q)
}

fn mul_mod(a: &Fp, b: &Fp, m: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&trim(out), m, p)
}

fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn derivative(a: &Fp, p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn sub_x(a: &Fp, p: u64) -> Fp {
    let mut a = a.clone();
    if a.len() < 2 {
        a.resize(2, 0);
    }
    a[1] = (a[1] + p - 1) % p;
    trim(a)
}

/// Degrees of the irreducible factors of `poly mod p`, or `None` when the
/// prime divides the leading coefficient or the reduction is not squarefree.
fn factor_degrees(poly: &IntPoly, p: u64) -> Option<Vec<usize>> {
    let f = reduce(poly, p);
    if f.len() != poly.degree() + 1 {
        return None;
    }
    if gcd(&f, &derivative(&f, p), p).len() != 1 {
        return None;
    }
    let mut degrees = Vec::new();
    let mut rest = f;
    let mut h: Fp = vec![0, 1];
    let mut i = 0;
    while rest.len() > 1 {
        i += 1;
        if 2 * i > rest.len() - 1 {
            degrees.push(rest.len() - 1);
            break;
        }
        // h <- h^p mod rest
        let mut acc: Fp = vec![1];
        let mut base = rem(&h, &rest, p);
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, &rest, p);
            }
            base = mul_mod(&base, &base, &rest, p);
            e >>= 1;
        }
        h = acc;
        let g = gcd(&sub_x(&h, p), &rest, p);
        let dg = g.len() - 1;
        if dg > 0 {
            degrees.extend(std::iter::repeat_n(i, dg / i));
            rest = div(&rest, &g, p);
            h = rem(&h, &rest, p);
        }
    }
    Some(degrees)
}

fn subset_sums(degrees: &[usize], n: usize) -> BTreeSet<usize> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    (1..n).filter(|&s| reach[s]).collect()
}

/// Factor degrees in `[1, n-1]` not ruled out by any of the sampled primes.
pub(super) fn feasible_factor_degrees(poly: &IntPoly) -> BTreeSet<usize> {
    let n = poly.degree();
    let mut feasible: BTreeSet<usize> = (1..n).collect();
    let mut used = 0;
    for &p in &PRIMES {
        if used == MAX_USABLE_PRIMES || feasible.is_empty() {
            break;
        }
        if (poly.leading() % p).is_zero() {
            continue;
        }
        if let Some(degs) = factor_degrees(poly, p) {
            used += 1;
            let sums = subset_sums(&degs, n);
            feasible.retain(|d| sums.contains(d));
        }
    }
    feasible
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::poly;

    #[test]
    fn degree_patterns() {
        // x^2 + 1 splits mod 5, stays irreducible mod 3.
        assert_eq!(factor_degrees(&poly(&[1, 0, 1]), 5), Some(vec![1, 1]));
        assert_eq!(factor_degrees(&poly(&[1, 0, 1]), 3), Some(vec![2]));
        // x^2 + 1 = (x + 1)^2 mod 2.
        assert_eq!(factor_degrees(&poly(&[1, 0, 1]), 2), None);
        // x^4 + x + 1 is irreducible mod 2.
        assert_eq!(factor_degrees(&poly(&[1, 0, 0, 1, 1]), 2), Some(vec![4]));
        // (x^2+x+1)(x^3+x+1) mod 2
        let p = poly(&[1, 1, 1]).mul(&poly(&[1, 0, 1, 1]));
        let mut d = factor_degrees(&p, 2).unwrap();
        d.sort();
        assert_eq!(d, vec![2, 3]);
    }

    #[test]
    fn reducible_keeps_true_degree() {
        // x^4 + 4 = (x^2-2x+2)(x^2+2x+2): degree 2 can never be excluded.
        assert!(feasible_factor_degrees(&poly(&[1, 0, 0, 0, 4])).contains(&2));
    }

    #[test]
    fn proven_irreducible() {
        // x^4 + x + 1 is irreducible mod 2 hence over Z.
        assert!(feasible_factor_degrees(&poly(&[1, 0, 0, 1, 1])).is_empty());
    }
}
