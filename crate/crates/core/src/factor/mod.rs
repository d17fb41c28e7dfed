//! Irreducibility over the integers for primitive polynomials of small degree.
//!
//! Degrees 2 and 3 are decided by the rational root theorem. From degree 4 on,
//! a polynomial without rational roots is first screened modulo small primes;
//! whatever the screen cannot rule out is settled by an exhaustive factor
//! search with a Mignotte-style coefficient envelope.

mod modp;
mod search;

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::positive_divisors;
use crate::error::{Error, Result};
use crate::exact_poly::{content, eval_rat, IntPoly, Rat};

pub use search::factor_height_bound;

pub const DEFAULT_DEGREE_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    /// A nontrivial factor, present exactly when `irreducible` is false.
    pub witness: Option<IntPoly>,
}

impl IrreducibilityVerdict {
    fn irreducible() -> Self {
        IrreducibilityVerdict {
            irreducible: true,
            witness: None,
        }
    }

    fn reducible(witness: IntPoly) -> Self {
        IrreducibilityVerdict {
            irreducible: false,
            witness: Some(witness),
        }
    }
}

/// Every rational root of `p`, in lowest terms.
pub fn rational_roots(p: &IntPoly) -> BTreeSet<Rat> {
    let mut roots = BTreeSet::new();
    let coeffs = p.coeffs();
    let low = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    if low > 0 {
        roots.insert(Rat::zero());
    }
    if low == p.degree() {
        return roots;
    }
    let nums = positive_divisors(&coeffs[low]);
    let dens = positive_divisors(p.leading());
    for s in &nums {
        for t in &dens {
            if !s.gcd(t).is_one() {
                continue;
            }
            for s in [s.clone(), -s] {
                let r = Rat::new(s, t.clone());
                if eval_rat(p, &r).is_zero() {
                    roots.insert(r);
                }
            }
        }
    }
    roots
}

/// `den * x - num` for a root in lowest terms.
fn linear_factor(root: &Rat) -> IntPoly {
    IntPoly::from_coeffs(vec![-root.numer(), root.denom().clone()]).expect("nonzero denominator")
}

/// Irreducibility tester with a configurable degree cap.
#[derive(Clone, Copy, Debug)]
pub struct IrreducibilityTest {
    pub degree_cap: usize,
    /// Run the modular screen before the exhaustive search.
    pub prescreen: bool,
}

impl Default for IrreducibilityTest {
    fn default() -> Self {
        IrreducibilityTest {
            degree_cap: DEFAULT_DEGREE_CAP,
            prescreen: true,
        }
    }
}

impl IrreducibilityTest {
    pub fn check(&self, p: &IntPoly) -> Result<IrreducibilityVerdict> {
        let n = p.degree();
        if n == 0 {
            return Err(Error::invalid(
                "constant polynomials have no irreducibility verdict",
            ));
        }
        if n > self.degree_cap {
            return Err(Error::UnsupportedDegree {
                degree: n,
                cap: self.degree_cap,
            });
        }
        if !content(p).is_one() {
            return Err(Error::invalid(format!("{p} is not primitive")));
        }
        if n == 1 {
            return Ok(IrreducibilityVerdict::irreducible());
        }
        if let Some(root) = rational_roots(p).first() {
            return Ok(IrreducibilityVerdict::reducible(linear_factor(root)));
        }
        if n <= 3 {
            return Ok(IrreducibilityVerdict::irreducible());
        }

        let degrees: Vec<usize> = if self.prescreen {
            modp::feasible_factor_degrees(p)
                .into_iter()
                .map(|k| k.min(n - k))
                .filter(|&k| k >= 2)
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        } else {
            (2..=n / 2).collect()
        };
        for k in degrees {
            if let Some(f) = search::find_factor_of_degree(p, k) {
                let q = p.div_exact(&f).ok_or_else(|| {
                    Error::TheoremViolation(format!("search returned non-divisor {f} of {p}"))
                })?;
                let witness = if q.degree() == f.degree() && q.leading().is_positive() {
                    lex_min(f, q)
                } else {
                    f
                };
                return Ok(IrreducibilityVerdict::reducible(witness));
            }
        }
        Ok(IrreducibilityVerdict::irreducible())
    }
}

fn lex_min(a: IntPoly, b: IntPoly) -> IntPoly {
    if b.descending().lt(a.descending()) {
        b
    } else {
        a
    }
}

/// [`IrreducibilityTest::check`] with the default degree cap.
pub fn is_irreducible(p: &IntPoly) -> Result<IrreducibilityVerdict> {
    IrreducibilityTest::default().check(p)
}
