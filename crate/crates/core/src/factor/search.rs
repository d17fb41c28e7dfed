//! Complete search for a factor of a given degree.
//!
//! A factor `f` of degree `k` with positive leading coefficient is pinned down
//! by its leading coefficient `a` (a divisor of `lc(p)`) and its values at `k`
//! distinct integer points `x_j`, where `f(x_j)` divides `p(x_j)`:
//!
//! ```text
//! f(x) = a * prod_j (x - x_j) + sum_j f(x_j) * prod_{i != j} (x - x_i) / (x_j - x_i)
//! ```
//!
//! Every such candidate is built, rejected if it is non-integral or its height
//! exceeds the coefficient bound, and otherwise divided into `p` exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisor_count, positive_divisors};
use crate::exact_poly::IntPoly;

/// `2^n * H(p) * (n + 1)`, an envelope over the Mignotte bound for the
/// coefficients of any factor of `p`.
pub fn factor_height_bound(p: &IntPoly) -> BigInt {
    let n = p.degree();
    (BigInt::one() << n) * p.height() * (n + 1)
}

struct Node {
    x: BigInt,
    /// Signed divisors of p(x).
    values: Vec<BigInt>,
}

fn signed_divisors(v: &BigInt) -> Vec<BigInt> {
    positive_divisors(v)
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .collect()
}

/// Picks `k` interpolation points with the fewest divisors of `p(x)`, plus a
/// distinct check point. `p` has no rational roots, so `p(x) != 0`.
fn choose_points(p: &IntPoly, k: usize) -> (Vec<Node>, BigInt) {
    let pool = 2 * p.degree() + 3;
    let mut cands: Vec<(usize, usize, BigInt, BigInt)> = (0..pool)
        .map(|i| {
            // 0, 1, -1, 2, -2, ...
            let x = if i % 2 == 1 {
                BigInt::from(i.div_ceil(2))
            } else {
                -BigInt::from(i / 2)
            };
            let v = p.eval_int(&x);
            (divisor_count(&v), i, x, v)
        })
        .collect();
    cands.sort_by_key(|a| (a.0, a.1));
    let check = cands[k].2.clone();
    let nodes = cands
        .into_iter()
        .take(k)
        .map(|(_, _, x, v)| Node {
            values: signed_divisors(&v),
            x,
        })
        .collect();
    (nodes, check)
}

fn linear_product(roots: impl Iterator<Item = BigInt>) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for r in roots {
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &r;
        }
        acc = next;
    }
    acc
}

fn eval(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Searches for a factor of `p` of degree `k`. `p` must be primitive with no
/// rational roots and `1 <= k < deg p`.
pub(crate) fn find_factor_of_degree(p: &IntPoly, k: usize) -> Option<IntPoly> {
    let bound = factor_height_bound(p);
    let (nodes, check) = choose_points(p, k);
    let p_check = p.eval_int(&check);

    // prod_j (x - x_j), and for each j: prod_{i != j}(x - x_i) scaled by lcm / D_j.
    let full = linear_product(nodes.iter().map(|n| n.x.clone()));
    let denoms: Vec<BigInt> = (0..k)
        .map(|j| {
            (0..k)
                .filter(|&i| i != j)
                .map(|i| &nodes[j].x - &nodes[i].x)
                .product()
        })
        .collect();
    let lcm = denoms.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
    let basis: Vec<Vec<BigInt>> = (0..k)
        .map(|j| {
            let w = &lcm / &denoms[j];
            linear_product((0..k).filter(|&i| i != j).map(|i| nodes[i].x.clone()))
                .into_iter()
                .map(|c| c * &w)
                .collect()
        })
        .collect();

    // Values at the check point, for a cheap scalar prefilter.
    let full_at_check = eval(&full, &check);
    let basis_at_check: Vec<BigInt> = basis.iter().map(|b| eval(b, &check)).collect();

    let leads = positive_divisors(p.leading());
    let mut choice = vec![0usize; k];
    for a in &leads {
        let lead_part_check = a * &lcm * &full_at_check;
        loop {
            let mut at_check = lead_part_check.clone();
            for j in 0..k {
                at_check += &nodes[j].values[choice[j]] * &basis_at_check[j];
            }
            if at_check.is_multiple_of(&lcm) {
                let f_check = &at_check / &lcm;
                if !f_check.is_zero() && p_check.is_multiple_of(&f_check) {
                    if let Some(f) =
                        build_candidate(a, &lcm, &full, &basis, &nodes, &choice, &bound)
                    {
                        if p.div_exact(&f).is_some() {
                            return Some(f);
                        }
                    }
                }
            }
            if !advance(&mut choice, &nodes) {
                break;
            }
        }
        choice.iter_mut().for_each(|c| *c = 0);
    }
    None
}

fn advance(choice: &mut [usize], nodes: &[Node]) -> bool {
    for j in 0..choice.len() {
        choice[j] += 1;
        if choice[j] < nodes[j].values.len() {
            return true;
        }
        choice[j] = 0;
    }
    false
}

fn build_candidate(
    a: &BigInt,
    lcm: &BigInt,
    full: &[BigInt],
    basis: &[Vec<BigInt>],
    nodes: &[Node],
    choice: &[usize],
    bound: &BigInt,
) -> Option<IntPoly> {
    let mut coeffs: Vec<BigInt> = full.iter().map(|c| c * a * lcm).collect();
    for (j, b) in basis.iter().enumerate() {
        let v = &nodes[j].values[choice[j]];
        for (i, c) in b.iter().enumerate() {
            coeffs[i] += c * v;
        }
    }
    for c in coeffs.iter_mut() {
        let (q, r) = c.div_rem(lcm);
        if !r.is_zero() || q.abs() > *bound {
            return None;
        }
        *c = q;
    }
    debug_assert!(coeffs.last().is_some_and(|c| c == a));
    IntPoly::from_coeffs(coeffs).ok()
}
