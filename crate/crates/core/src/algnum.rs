//! Denominator, leading coefficient, numerator and norm of an algebraic
//! number, computed exactly from its minimal polynomial over the integers.
//!
//! For `gamma` with minimal polynomial `g = c_n x^n + ... + c_0`:
//!
//! * the leading coefficient `c(gamma)` is `c_n`;
//! * the denominator `d(gamma)` is the least `d >= 1` with `d * gamma` an
//!   algebraic integer. It divides `c_n`, and `d` works exactly when
//!   `c_n | c_{n-i} d^i` for every `i`;
//! * the numerator `theta = d(gamma) * gamma` has monic minimal polynomial
//!   `f`, and its norm is `(-1)^n f(0)`.
//!
//! `gamma` is an *Arno number* when `c(gamma) = d(gamma)`. An Arno number of
//! degree `n >= 2` satisfies `d^(n-1) | N(theta)`, which bounds the Arno
//! numbers sharing a numerator; [`arno_members_of_class`] enumerates them.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{is_prime, positive_divisors, prime_support};
use crate::error::{Error, Result};
use crate::exact_poly::{content, primitive_part, scale_root, unscale_root, BigInt, IntPoly, Rat};
use crate::factor::is_irreducible;
use crate::json;

/// Primitive, irreducible, positive leading coefficient, degree at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MinPoly {
    poly: IntPoly,
}

impl MinPoly {
    /// Caller guarantees the canonical-form invariants.
    pub(crate) fn new_unchecked(poly: IntPoly) -> Self {
        debug_assert!(poly.degree() >= 1 && poly.leading().is_positive());
        debug_assert!(content(&poly).is_one());
        MinPoly { poly }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn into_poly(self) -> IntPoly {
        self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn leading(&self) -> &BigInt {
        self.poly.leading()
    }

    pub fn is_monic(&self) -> bool {
        self.poly.is_monic()
    }
}

impl fmt::Display for MinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl std::str::FromStr for MinPoly {
    type Err = Error;

    /// Parses and canonicalizes.
    fn from_str(s: &str) -> Result<Self> {
        canonicalize(&s.parse()?)
    }
}

/// Minimal polynomial over the integers of any root of `p`, provided `p` is
/// irreducible up to content and sign.
pub fn canonicalize(p: &IntPoly) -> Result<MinPoly> {
    if p.degree() == 0 {
        return Err(Error::invalid(format!("{p} is constant")));
    }
    let mut q = primitive_part(p);
    if q.leading().is_negative() {
        q = q.neg();
    }
    let verdict = is_irreducible(&q)?;
    match verdict.witness {
        None => Ok(MinPoly { poly: q }),
        Some(witness) => Err(Error::NotMinimal { witness }),
    }
}

/// `c_n | c_{n-i} e^i` for all `i = 1..n`, i.e. `e * gamma` is integral.
fn clears(g: &IntPoly, e: &BigInt) -> bool {
    let n = g.degree();
    let lead = g.leading();
    let mut e_pow = BigInt::one();
    for i in 1..=n {
        e_pow *= e;
        let c = &g.coeffs()[n - i];
        if !(c * &e_pow).is_multiple_of(lead) {
            return false;
        }
    }
    true
}

/// `d(gamma)`: the first divisor of `c_n`, in ascending order, that clears
/// every coefficient.
pub fn denominator(g: &MinPoly) -> BigInt {
    positive_divisors(g.leading())
        .into_iter()
        .find(|e| clears(&g.poly, e))
        .expect("c_n always clears")
}

/// Every `e` in `[1, c_n]` for which `e * gamma` is integral. The result is
/// exactly the multiples of [`denominator`] in that range.
pub fn clearing_multipliers(g: &MinPoly) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut e = BigInt::one();
    while &e <= g.leading() {
        if clears(&g.poly, &e) {
            out.push(e.clone());
        }
        e += 1u32;
    }
    out
}

/// Monic minimal polynomial of the numerator `theta = d(gamma) * gamma`.
pub fn numerator_min_poly(g: &MinPoly) -> Result<IntPoly> {
    numerator_with(g, &denominator(g))
}

fn numerator_with(g: &MinPoly, d: &BigInt) -> Result<IntPoly> {
    let f = scale_root(&g.poly, d)?;
    if !f.is_monic() {
        return Err(Error::TheoremViolation(format!(
            "numerator polynomial {f} of {g} is not monic (denominator {d})"
        )));
    }
    Ok(f)
}

/// Norm of an algebraic integer from its monic minimal polynomial: `(-1)^n f(0)`.
pub fn norm_of_numerator(f: &IntPoly) -> Result<BigInt> {
    if f.degree() == 0 || !f.is_monic() {
        return Err(Error::invalid(format!(
            "{f} is not a monic polynomial of degree >= 1"
        )));
    }
    let a0 = f.constant().clone();
    Ok(if f.degree().is_multiple_of(2) {
        a0
    } else {
        -a0
    })
}

/// Least positive `k` with `k * s_i` integral for every elementary symmetric
/// function `s_i` of the conjugates, where `s_k = (-1)^k c_{n-k} / c_n`.
pub fn j_generator(g: &MinPoly) -> BigInt {
    let n = g.degree();
    let lead = g.leading();
    (1..=n).fold(BigInt::one(), |acc, k| {
        let mut c = g.poly.coeffs()[n - k].clone();
        if k % 2 == 1 {
            c = -c;
        }
        acc.lcm(Rat::new(c, lead.clone()).denom())
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgProfile {
    pub degree: usize,
    #[serde(serialize_with = "json::big")]
    pub height: BigInt,
    #[serde(serialize_with = "json::big")]
    pub denom: BigInt,
    #[serde(serialize_with = "json::big")]
    pub lead: BigInt,
    pub arno: bool,
    pub numerator_poly: IntPoly,
    #[serde(serialize_with = "json::big")]
    pub norm: BigInt,
}

pub fn profile(g: &MinPoly) -> Result<AlgProfile> {
    let denom = denominator(g);
    let numerator_poly = numerator_with(g, &denom)?;
    let norm = norm_of_numerator(&numerator_poly)?;
    let lead = g.leading().clone();
    Ok(AlgProfile {
        degree: g.degree(),
        height: g.poly.height(),
        arno: denom == lead,
        denom,
        lead,
        numerator_poly,
        norm,
    })
}

/// Checks `d | c`, `c | d^n`, equal prime supports, and that the symmetric
/// function ideal is generated by `c`.
pub fn check_prop1(g: &MinPoly, prof: &AlgProfile) -> Result<()> {
    let fail = |what: &str| {
        Err(Error::TheoremViolation(format!(
            "{what} fails for {g} (d = {}, c = {})",
            prof.denom, prof.lead
        )))
    };
    if !prof.lead.is_multiple_of(&prof.denom) {
        return fail("d | c");
    }
    if !num_traits::pow(prof.denom.clone(), prof.degree).is_multiple_of(&prof.lead) {
        return fail("c | d^n");
    }
    if prime_support(&prof.denom) != prime_support(&prof.lead) {
        return fail("equal prime support");
    }
    if j_generator(g) != prof.lead {
        return fail("J generated by c");
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Prop2Verdict {
    /// Arno of degree `n >= 2` and `d^(n-1)` divides the norm.
    Holds,
    NotApplicable,
}

pub fn check_prop2(g: &MinPoly) -> Result<Prop2Verdict> {
    check_prop2_on(&profile(g)?)
}

/// [`check_prop2`] for an already computed profile.
pub fn check_prop2_on(prof: &AlgProfile) -> Result<Prop2Verdict> {
    if !prof.arno || prof.degree < 2 {
        return Ok(Prop2Verdict::NotApplicable);
    }
    let bound = num_traits::pow(prof.denom.clone(), prof.degree - 1);
    if prof.norm.is_multiple_of(&bound) {
        Ok(Prop2Verdict::Holds)
    } else {
        Err(Error::TheoremViolation(format!(
            "d^(n-1) = {bound} does not divide N(theta) = {}",
            prof.norm
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    #[serde(serialize_with = "json::big")]
    pub q: BigInt,
    pub minpoly: MinPoly,
}

/// Arno numbers `theta / q` sharing the numerator `theta`, plus a few non-Arno
/// numbers of the same class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassScan {
    pub numerator_poly: MinPoly,
    #[serde(serialize_with = "json::big")]
    pub norm: BigInt,
    pub members: Vec<ClassEntry>,
    pub witnesses: Vec<ClassEntry>,
}

/// Number of non-Arno witnesses attached to a [`ClassScan`].
pub const CLASS_SCAN_WITNESSES: usize = 3;

/// Scans the class of `theta`, the root of the monic `f`.
///
/// Candidates are the `q > 0` with `q^(n-1) | N(theta)`; `q` is kept when
/// `theta / q` has denominator exactly `q` and is Arno. With
/// `require_monic = false` a non-monic `f` is replaced by the minimal
/// polynomial of its numerator.
pub fn arno_members_of_class(f: &MinPoly, require_monic: bool) -> Result<ClassScan> {
    if f.degree() == 1 {
        return Err(Error::InfiniteClass);
    }
    let f = if f.is_monic() {
        f.clone()
    } else if require_monic {
        return Err(Error::invalid(format!(
            "{f} is not monic, so its roots are not algebraic integers"
        )));
    } else {
        MinPoly::new_unchecked(numerator_min_poly(f)?)
    };
    let n = f.degree();
    let norm = norm_of_numerator(&f.poly)?;
    let mut members = Vec::new();
    for q in positive_divisors(&norm) {
        if !norm.is_multiple_of(&num_traits::pow(q.clone(), n - 1)) {
            continue;
        }
        let g = canonicalize(&unscale_root(&f.poly, &q)?)?;
        let prof = profile(&g)?;
        if prof.denom == q && prof.arno {
            members.push(ClassEntry { q, minpoly: g });
        }
    }
    let witnesses = nonarno_witnesses(&f, CLASS_SCAN_WITNESSES)?;
    Ok(ClassScan {
        numerator_poly: f,
        norm,
        members,
        witnesses,
    })
}

/// `theta / p` for the first `count` primes `p` not dividing `N(theta)`.
/// Each is checked to have the degree of `theta`, denominator `p`, and to be
/// non-Arno.
pub fn nonarno_witnesses(f: &MinPoly, count: usize) -> Result<Vec<ClassEntry>> {
    if f.degree() < 2 || !f.is_monic() {
        return Err(Error::invalid(format!("{f} must be monic of degree >= 2")));
    }
    if count == 0 {
        return Err(Error::invalid("witness count must be at least 1"));
    }
    let norm = norm_of_numerator(&f.poly)?;
    let mut out = Vec::with_capacity(count);
    let mut p = BigInt::one();
    while out.len() < count {
        p += 1u32;
        if !is_prime(&p) || norm.is_multiple_of(&p) {
            continue;
        }
        let g = canonicalize(&unscale_root(&f.poly, &p)?)?;
        let prof = profile(&g)?;
        if prof.arno || prof.degree != f.degree() || prof.denom != p {
            return Err(Error::TheoremViolation(format!(
                "theta/{p} for theta a root of {f} should be non-Arno with denominator {p}"
            )));
        }
        out.push(ClassEntry {
            q: p.clone(),
            minpoly: g,
        });
    }
    Ok(out)
}

/// One row of the `sqrt(2) / (q 2^k)` family: the closed forms for `g`, `d`
/// and `c` next to the values computed from `2^(2k) q^2 x^2 - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sqrt2Row {
    pub q: u64,
    pub k: u32,
    pub expected_poly: IntPoly,
    #[serde(serialize_with = "json::big")]
    pub expected_denom: BigInt,
    #[serde(serialize_with = "json::big")]
    pub expected_lead: BigInt,
    pub computed_poly: MinPoly,
    #[serde(serialize_with = "json::big")]
    pub computed_denom: BigInt,
    #[serde(serialize_with = "json::big")]
    pub computed_lead: BigInt,
    pub arno: bool,
    pub matches: bool,
}

/// `q` must be odd and positive.
pub fn sqrt2_family_row(q: u64, k: u32) -> Result<Sqrt2Row> {
    if q == 0 || q.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "q must be odd and positive, got {q}"
        )));
    }
    let qb = BigInt::from(q);
    let q2 = &qb * &qb;
    let pow2 = |e: u32| BigInt::one() << e;
    let (expected_poly, expected_denom, expected_lead) = match k {
        0 => (
            IntPoly::from_descending([q2.clone(), BigInt::zero(), BigInt::from(-2)])?,
            qb.clone(),
            q2.clone(),
        ),
        _ => {
            let lead = pow2(2 * k - 1) * &q2;
            (
                IntPoly::from_descending([lead.clone(), BigInt::zero(), BigInt::from(-1)])?,
                pow2(k) * &qb,
                lead,
            )
        }
    };
    let raw = IntPoly::from_descending([pow2(2 * k) * &q2, BigInt::zero(), BigInt::from(-2)])?;
    let g = canonicalize(&raw)?;
    let prof = profile(&g)?;
    let matches =
        *g.poly() == expected_poly && prof.denom == expected_denom && prof.lead == expected_lead;
    Ok(Sqrt2Row {
        q,
        k,
        expected_poly,
        expected_denom,
        expected_lead,
        arno: prof.arno,
        computed_poly: g,
        computed_denom: prof.denom,
        computed_lead: prof.lead,
        matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::poly;

    fn mp(desc: &[i64]) -> MinPoly {
        canonicalize(&poly(desc)).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(mp(&[4, 0, -2]).poly(), &poly(&[2, 0, -1]));
        assert_eq!(mp(&[-1, 2]).poly(), &poly(&[1, -2]));
        assert!(matches!(
            canonicalize(&poly(&[1, 0, -1])),
            Err(Error::NotMinimal { .. })
        ));
        assert!(matches!(
            canonicalize(&poly(&[3])),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(mp(&[-6, 0, 3]).poly(), &poly(&[2, 0, -1]));
    }

    #[test]
    fn denominator_examples() {
        assert_eq!(denominator(&mp(&[1, 0, -2])), big(1));
        assert_eq!(denominator(&mp(&[9, 0, -2])), big(3));
        assert_eq!(denominator(&mp(&[18, 0, -1])), big(6));
        assert_eq!(denominator(&mp(&[8, 0, -1])), big(4));
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(
            numerator_min_poly(&mp(&[9, 0, -2])).unwrap(),
            poly(&[1, 0, -2])
        );
        assert_eq!(
            numerator_min_poly(&mp(&[1, 0, -2])).unwrap(),
            poly(&[1, 0, -2])
        );
        assert_eq!(
            numerator_min_poly(&mp(&[18, 0, -1])).unwrap(),
            poly(&[1, 0, -2])
        );
    }

    #[test]
    fn numerator_roots_numerically() {
        // 3 * (sqrt2 / 3) and 6 * (sqrt2 / 6) are roots of x^2 - 2.
        for (g, d) in [(mp(&[9, 0, -2]), 3.0), (mp(&[18, 0, -1]), 6.0)] {
            let root = 2f64.sqrt() / d;
            let f = numerator_min_poly(&g).unwrap();
            let x = d * root;
            let v: f64 = f.descending().fold(0.0, |acc, c| {
                acc * x + num_traits::ToPrimitive::to_f64(c).unwrap()
            });
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_of_numerator(&poly(&[1, 0, -2])).unwrap(), big(-2));
        assert_eq!(norm_of_numerator(&poly(&[1, -5])).unwrap(), big(5));
        assert_eq!(norm_of_numerator(&poly(&[1, 0, -1, -1])).unwrap(), big(1));
        assert!(norm_of_numerator(&poly(&[2, 0, -1])).is_err());
    }

    #[test]
    fn j_generator_examples() {
        assert_eq!(j_generator(&mp(&[1, 0, -2])), big(1));
        assert_eq!(j_generator(&mp(&[9, 0, -2])), big(9));
        assert_eq!(j_generator(&mp(&[2, 0, -1])), big(2));
    }

    #[test]
    fn profile_examples() {
        let p = profile(&mp(&[2, 0, -1])).unwrap();
        assert_eq!(
            p,
            AlgProfile {
                degree: 2,
                height: big(2),
                denom: big(2),
                lead: big(2),
                arno: true,
                numerator_poly: poly(&[1, 0, -2]),
                norm: big(-2),
            }
        );
        let p = profile(&mp(&[9, 0, -2])).unwrap();
        assert_eq!(
            (
                p.degree,
                p.height.clone(),
                p.denom.clone(),
                p.lead.clone(),
                p.arno
            ),
            (2, big(9), big(3), big(9), false)
        );
        // gamma = 2/3, theta = 2, f = x - 2.
        let p = profile(&mp(&[3, -2])).unwrap();
        assert_eq!(
            (
                p.degree,
                p.denom.clone(),
                p.lead.clone(),
                p.arno,
                p.norm.clone()
            ),
            (1, big(3), big(3), true, big(2))
        );
        assert_eq!(p.numerator_poly, poly(&[1, -2]));
    }

    #[test]
    fn norm_divisibility_examples() {
        assert_eq!(check_prop2(&mp(&[2, 0, -1])).unwrap(), Prop2Verdict::Holds);
        assert_eq!(
            check_prop2(&mp(&[9, 0, -2])).unwrap(),
            Prop2Verdict::NotApplicable
        );
        assert_eq!(
            check_prop2(&mp(&[3, -2])).unwrap(),
            Prop2Verdict::NotApplicable
        );
        let mut forged = profile(&mp(&[2, 0, -1])).unwrap();
        forged.norm = big(-3);
        assert!(matches!(
            check_prop2_on(&forged),
            Err(Error::TheoremViolation(_))
        ));
    }

    #[test]
    fn class_scan_examples() {
        let scan = arno_members_of_class(&mp(&[1, 0, -2]), true).unwrap();
        let members: Vec<(BigInt, IntPoly)> = scan
            .members
            .iter()
            .map(|e| (e.q.clone(), e.minpoly.poly().clone()))
            .collect();
        assert_eq!(
            members,
            vec![(big(1), poly(&[1, 0, -2])), (big(2), poly(&[2, 0, -1]))]
        );
        assert_eq!(scan.norm, big(-2));

        // 3x^2 - 1: c_2 = 3, and e = 3 gives 3 | 0 and 3 | -9, e = 1 fails, so d = 3 = c.
        let g = mp(&[3, 0, -1]);
        assert!(!clears(g.poly(), &big(1)) && clears(g.poly(), &big(3)));
        let scan = arno_members_of_class(&mp(&[1, 0, -3]), true).unwrap();
        let qs: Vec<BigInt> = scan.members.iter().map(|e| e.q.clone()).collect();
        assert_eq!(qs, vec![big(1), big(3)]);
        assert_eq!(scan.members[1].minpoly.poly(), &poly(&[3, 0, -1]));

        assert_eq!(
            arno_members_of_class(&mp(&[1, -7]), true),
            Err(Error::InfiniteClass)
        );
        assert!(matches!(
            arno_members_of_class(&mp(&[2, 0, -1]), true),
            Err(Error::InvalidInput(_))
        ));
        let via_numerator = arno_members_of_class(&mp(&[2, 0, -1]), false).unwrap();
        assert_eq!(via_numerator.numerator_poly.poly(), &poly(&[1, 0, -2]));
        assert_eq!(via_numerator.members.len(), 2);
    }

    #[test]
    fn class_scan_excludes_other_numerators() {
        // theta = 2 sqrt2, N = -8. q = 2 gives sqrt2, whose numerator is sqrt2 itself.
        let scan = arno_members_of_class(&mp(&[1, 0, -8]), true).unwrap();
        for e in &scan.members {
            assert_eq!(denominator(&e.minpoly), e.q);
        }
        assert!(scan.members.iter().all(|e| e.q != big(2)));
    }

    #[test]
    fn witness_examples() {
        let w = nonarno_witnesses(&mp(&[1, 0, -2]), 2).unwrap();
        assert_eq!(
            w.iter().map(|e| e.q.clone()).collect::<Vec<_>>(),
            vec![big(3), big(5)]
        );
        assert_eq!(w[0].minpoly.poly(), &poly(&[9, 0, -2]));

        let w = nonarno_witnesses(&mp(&[1, 0, -3]), 1).unwrap();
        assert_eq!(w[0].q, big(2));
        assert_eq!(w[0].minpoly.poly(), &poly(&[4, 0, -3]));
        let p = profile(&w[0].minpoly).unwrap();
        assert_eq!((p.denom, p.lead), (big(2), big(4)));

        let w = nonarno_witnesses(&mp(&[1, 0, -1, -1]), 1).unwrap();
        assert_eq!(w[0].q, big(2));
        assert_eq!(w[0].minpoly.poly(), &poly(&[8, 0, -2, -1]));
        assert!(!profile(&w[0].minpoly).unwrap().arno);

        assert!(nonarno_witnesses(&mp(&[1, 0, -2]), 0).is_err());
    }

    #[test]
    fn clearing_multipliers_are_an_ideal() {
        for desc in [[12, 0, -3], [8, 0, -1], [36, 6, 1], [4, 2, 1]] {
            let Ok(g) = canonicalize(&poly(&desc)) else {
                continue;
            };
            let d = denominator(&g);
            let expected: Vec<BigInt> = (1..=num_traits::ToPrimitive::to_i64(g.leading()).unwrap())
                .map(BigInt::from)
                .filter(|e| e.is_multiple_of(&d))
                .collect();
            assert_eq!(clearing_multipliers(&g), expected, "{g}");
        }
    }

    #[test]
    fn sqrt2_rows() {
        for (q, k) in [(1, 0), (3, 0), (1, 1), (3, 1), (1, 2), (5, 3)] {
            let row = sqrt2_family_row(q, k).unwrap();
            assert!(row.matches, "{row:?}");
        }
        assert!(sqrt2_family_row(1, 0).unwrap().arno);
        assert!(sqrt2_family_row(1, 1).unwrap().arno);
        assert!(!sqrt2_family_row(3, 1).unwrap().arno);
        assert!(sqrt2_family_row(2, 1).is_err());
    }
}
