//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored low-to-high: `coeffs[i]` multiplies `x^i`. The zero
//! polynomial cannot be constructed, so every `IntPoly` has a well-defined
//! degree and a nonzero leading coefficient.
//!
//! The text form used throughout the crate lists coefficients in *descending*
//! power order separated by commas, so `"9,0,-2"` is `9x^2 - 2`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Exact rational number, always held in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from coefficients in ascending power order.
    /// Trailing zeros are dropped; an all-zero input is rejected.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::invalid("the zero polynomial is not allowed"));
        }
        Ok(IntPoly { coeffs })
    }

    /// Builds a polynomial from coefficients in descending power order.
    pub fn from_descending<I, T>(coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut v: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        v.reverse();
        Self::from_coeffs(v)
    }

    /// Caller guarantees a nonzero leading coefficient.
    pub(crate) fn from_coeffs_unchecked(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(coeffs.last().is_some_and(|c| !c.is_zero()));
        IntPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients in ascending power order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients in descending power order.
    pub fn descending(&self) -> impl Iterator<Item = &BigInt> {
        self.coeffs.iter().rev()
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn constant(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// `max |c_i|`.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(BigInt::abs)
            .max()
            .expect("nonzero polynomial")
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs_unchecked(out)
    }

    /// Exact quotient `self / divisor` in `Z[x]`, or `None` when the division
    /// leaves a remainder or needs non-integral coefficients.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let n = self.degree();
        let m = divisor.degree();
        if m > n {
            return None;
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs_unchecked(quot))
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// Gcd of all coefficients, always positive.
pub fn content(p: &IntPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in &p.coeffs {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `p / content(p)`. The sign of the leading coefficient is kept.
pub fn primitive_part(p: &IntPoly) -> IntPoly {
    let g = content(p);
    if g.is_one() {
        return p.clone();
    }
    IntPoly::from_coeffs_unchecked(p.coeffs.iter().map(|c| c / &g).collect())
}

fn require_positive(m: &BigInt) -> Result<()> {
    if m.is_positive() {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "scaling factor must be positive, got {m}"
        )))
    }
}

/// Primitive part of `sum c_i m^(n-i) x^i`: the roots are multiplied by `m`.
pub fn scale_root(p: &IntPoly, m: &BigInt) -> Result<IntPoly> {
    require_positive(m)?;
    let n = p.degree();
    let mut factor = BigInt::one();
    let mut out = vec![BigInt::zero(); n + 1];
    for i in (0..=n).rev() {
        out[i] = &p.coeffs[i] * &factor;
        factor *= m;
    }
    Ok(primitive_part(&IntPoly::from_coeffs_unchecked(out)))
}

/// Primitive part of `p(m x)`: the roots are divided by `m`.
pub fn unscale_root(p: &IntPoly, m: &BigInt) -> Result<IntPoly> {
    require_positive(m)?;
    let mut factor = BigInt::one();
    let mut out = Vec::with_capacity(p.coeffs.len());
    for c in &p.coeffs {
        out.push(c * &factor);
        factor *= m;
    }
    Ok(primitive_part(&IntPoly::from_coeffs_unchecked(out)))
}

/// Exact value of `p` at a rational point.
pub fn eval_rat(p: &IntPoly, x: &Rat) -> Rat {
    // Homogenised Horner: sum c_i num^i den^(n-i), then divide by den^n.
    let num = x.numer();
    let den = x.denom();
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for c in p.coeffs.iter().rev() {
        acc = acc * num + c * &den_pow;
        den_pow *= den;
    }
    // den_pow overshot by one factor of den.
    Rat::new(acc, den_pow / den)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.descending().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let coeffs = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<BigInt>()
                    .map_err(|_| err(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() > 1 && coeffs[0].is_zero() {
            return Err(err("leading coefficient is zero".into()));
        }
        IntPoly::from_descending(coeffs).map_err(|e| err(e.to_string()))
    }
}

/// Serialized as a descending coefficient array. Coefficients that fit in
/// `i64` become JSON numbers, larger ones decimal strings.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in self.descending() {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

#[cfg(test)]
pub(crate) fn poly(desc: &[i64]) -> IntPoly {
    IntPoly::from_descending(desc.iter().copied()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(big(n), big(d))
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(
            IntPoly::from_descending([0, 0]),
            Err(Error::InvalidInput(_))
        ));
        assert!("0".parse::<IntPoly>().is_err());
    }

    #[test]
    fn trailing_zero_trim() {
        let p = IntPoly::from_coeffs(vec![big(1), big(2), big(0)]).unwrap();
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(&poly(&[4, 0, -2])), big(2));
        assert_eq!(content(&poly(&[9, 0, -2])), big(1));
        assert_eq!(content(&poly(&[-6, 9])), big(3));
    }

    #[test]
    fn primitive_part_examples() {
        assert_eq!(primitive_part(&poly(&[4, 0, -2])), poly(&[2, 0, -1]));
        assert_eq!(primitive_part(&poly(&[-4, 0, 2])), poly(&[-2, 0, 1]));
        assert_eq!(primitive_part(&poly(&[1, 0, -2])), poly(&[1, 0, -2]));
    }

    #[test]
    fn scale_root_examples() {
        assert_eq!(
            scale_root(&poly(&[9, 0, -2]), &big(3)).unwrap(),
            poly(&[1, 0, -2])
        );
        assert_eq!(
            scale_root(&poly(&[2, 0, -1]), &big(2)).unwrap(),
            poly(&[1, 0, -2])
        );
        let p = poly(&[4, 6, -2]);
        assert_eq!(scale_root(&p, &big(1)).unwrap(), primitive_part(&p));
        assert!(scale_root(&p, &big(0)).is_err());
        assert!(scale_root(&p, &big(-2)).is_err());
    }

    #[test]
    fn scale_root_moves_roots_numerically() {
        // sqrt(2)/3 is a root of 9x^2-2, so 3 * sqrt(2)/3 must be a root of the output.
        let out = scale_root(&poly(&[9, 0, -2]), &big(3)).unwrap();
        let root = 3.0 * 2f64.sqrt() / 3.0;
        let value: f64 = out
            .descending()
            .fold(0.0, |acc, c| acc * root + c.to_f64().unwrap());
        assert!(value.abs() < 1e-12);
    }

    #[test]
    fn unscale_root_examples() {
        assert_eq!(
            unscale_root(&poly(&[1, 0, -2]), &big(2)).unwrap(),
            poly(&[2, 0, -1])
        );
        assert_eq!(
            unscale_root(&poly(&[1, 0, -3]), &big(3)).unwrap(),
            poly(&[3, 0, -1])
        );
        let p = poly(&[6, 0, 3]);
        assert_eq!(unscale_root(&p, &big(1)).unwrap(), primitive_part(&p));
        assert!(unscale_root(&p, &big(0)).is_err());

        let out = unscale_root(&poly(&[1, 0, -3]), &big(3)).unwrap();
        let root = 3f64.sqrt() / 3.0;
        let value: f64 = out
            .descending()
            .fold(0.0, |acc, c| acc * root + c.to_f64().unwrap());
        assert!(value.abs() < 1e-12);
    }

    #[test]
    fn eval_rat_examples() {
        assert_eq!(eval_rat(&poly(&[1, 0, -2]), &rat(3, 2)), rat(1, 4));
        assert_eq!(eval_rat(&poly(&[2, 0, -1]), &rat(1, 2)), rat(-1, 2));
        assert_eq!(eval_rat(&poly(&[9, 0, -2]), &rat(0, 1)), rat(-2, 1));
    }

    #[test]
    fn text_format() {
        let p: IntPoly = "9,0,-2".parse().unwrap();
        assert_eq!(p, poly(&[9, 0, -2]));
        assert_eq!(p.to_string(), "9,0,-2");
        assert_eq!(" 3 , -1".parse::<IntPoly>().unwrap().to_string(), "3,-1");
        assert!("9,x,-2".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
        assert!("0,1".parse::<IntPoly>().is_err());
        assert_eq!("-7".parse::<IntPoly>().unwrap().degree(), 0);
    }

    #[test]
    fn json_array() {
        let p: IntPoly = "9,0,-2".parse().unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[9,0,-2]");
        let huge: IntPoly = "1,100000000000000000000".parse().unwrap();
        assert_eq!(
            serde_json::to_string(&huge).unwrap(),
            r#"[1,"100000000000000000000"]"#
        );
    }

    #[test]
    fn exact_division() {
        let f = poly(&[1, -2, 2]);
        let g = poly(&[1, 2, 2]);
        let p = f.mul(&g);
        assert_eq!(p, poly(&[1, 0, 0, 0, 4]));
        assert_eq!(p.div_exact(&f), Some(g));
        assert_eq!(p.div_exact(&poly(&[1, 0, 1])), None);
        assert_eq!(poly(&[1, 0, -1]).div_exact(&poly(&[2, 2])), None);
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        (
            prop::collection::vec(-50i64..=50, 0..6),
            1i64..=30,
            prop::bool::ANY,
        )
            .prop_map(|(mut rest, lead, neg)| {
                rest.insert(0, if neg { -lead } else { lead });
                poly(&rest)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig {
            cases: 256,
            rng_seed: prop::test_runner::RngSeed::Fixed(0x5eed_0001),
            ..ProptestConfig::default()
        })]

        #[test]
        fn primitive_part_has_unit_content(p in arb_poly()) {
            prop_assert_eq!(content(&primitive_part(&p)), BigInt::one());
        }

        #[test]
        fn gauss_multiplicativity(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(content(&p.mul(&q)), content(&p) * content(&q));
        }

        #[test]
        fn scaling_round_trip(p in arb_poly(), m in 1i64..=40) {
            let m = BigInt::from(m);
            let back = unscale_root(&scale_root(&p, &m).unwrap(), &m).unwrap();
            prop_assert_eq!(back, primitive_part(&p));
        }

        #[test]
        fn scale_root_maps_rational_roots(
            roots in prop::collection::vec((-9i64..=9, 1i64..=9), 1..4),
            extra in prop::collection::vec(-5i64..=5, 0..3),
            m in 1i64..=12,
        ) {
            // Build p = prod (den x - num) * (extra with lead 1) so the rational roots are known.
            let mut p = poly(&[1]);
            for &(n, d) in &roots {
                p = p.mul(&poly(&[d, -n]));
            }
            let mut tail = vec![1];
            tail.extend(extra);
            p = p.mul(&poly(&tail));
            let m = BigInt::from(m);
            let scaled = scale_root(&p, &m).unwrap();
            for &(n, d) in &roots {
                let r = rat(n, d);
                prop_assert!(eval_rat(&p, &r).is_zero());
                let moved = &r * Rat::from_integer(m.clone());
                prop_assert!(eval_rat(&scaled, &moved).is_zero());
            }
        }

        #[test]
        fn text_round_trip(p in arb_poly()) {
            let s = p.to_string();
            prop_assert_eq!(s.parse::<IntPoly>().unwrap(), p);
        }
    }
}
