//! Machine-integer classification of coefficient tuples for the enumeration.
//!
//! This is the hot path of [`super::enumerate_canonical`] and
//! [`super::count_row`]. It only decides two things about a tuple: whether
//! it is a canonical minimal polynomial, and if so whether it is Arno. Degree
//! 2 goes through the discriminant, degree 3 through the rational root
//! theorem in `i128`; higher degrees defer to [`crate::factor`].
//!
//! The Arno test uses that the multipliers `e` which clear `g` are exactly
//! the multiples of `d(gamma)`, so `d < c` iff some `c / p`, `p | c` prime,
//! clears.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::Result;
use crate::exact_poly::IntPoly;
use crate::factor::IrreducibilityTest;

/// Largest height for which the degree-3 `i128` evaluation cannot overflow:
/// `|c_i s^i t^(3-i)| <= H^4` summed four times stays below `2^127`.
const CUBIC_HEIGHT_LIMIT: i64 = 1 << 30;
const DIVISOR_TABLE_LIMIT: i64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Class {
    NotCanonical,
    Canonical { arno: bool },
}

pub(crate) struct Kernel {
    /// Smallest prime factor of each `n <= height`.
    spf: Vec<u32>,
    divisors: Option<Vec<Vec<i64>>>,
    irreducibility: IrreducibilityTest,
}

impl Kernel {
    pub(crate) fn new(height: i64, degree: usize, irreducibility: IrreducibilityTest) -> Self {
        let limit = height.max(1) as usize;
        let mut spf = vec![0u32; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                for j in (i..=limit).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                }
            }
        }
        let divisors = (degree == 3 && height <= DIVISOR_TABLE_LIMIT).then(|| {
            let mut table = vec![Vec::new(); limit + 1];
            for d in 1..=limit {
                for m in (d..=limit).step_by(d) {
                    table[m].push(d as i64);
                }
            }
            table
        });
        Kernel {
            spf,
            divisors,
            irreducibility,
        }
    }

    fn primes_of(&self, mut n: i64) -> impl Iterator<Item = i64> + '_ {
        let mut last = 0;
        std::iter::from_fn(move || {
            while n > 1 {
                let p = self.spf[n as usize] as i64;
                n /= p;
                if p != last {
                    last = p;
                    return Some(p);
                }
            }
            None
        })
    }

    fn divisors_of(&self, n: i64) -> std::borrow::Cow<'_, [i64]> {
        if let Some(table) = &self.divisors {
            return std::borrow::Cow::Borrowed(&table[n as usize]);
        }
        let mut out = Vec::new();
        let mut d = 1;
        while d * d <= n {
            if n % d == 0 {
                out.push(d);
                if d * d != n {
                    out.push(n / d);
                }
            }
            d += 1;
        }
        std::borrow::Cow::Owned(out)
    }

    /// `desc` holds descending coefficients with `desc[0] >= 1` and every
    /// `|c_i|` within the kernel's height.
    pub(crate) fn classify(&self, desc: &[i64]) -> Result<Class> {
        if desc.iter().fold(0i64, |g, &c| g.gcd(&c)) != 1 {
            return Ok(Class::NotCanonical);
        }
        let irreducible = match desc.len() - 1 {
            1 => true,
            2 => quadratic_irreducible(desc),
            3 => self.cubic_irreducible(desc)?,
            _ => self.general_irreducible(desc)?,
        };
        if !irreducible {
            return Ok(Class::NotCanonical);
        }
        Ok(Class::Canonical {
            arno: self.is_arno(desc),
        })
    }

    fn is_arno(&self, desc: &[i64]) -> bool {
        let lead = desc[0];
        if lead == 1 {
            return true;
        }
        !self.primes_of(lead).any(|p| clears_mod(desc, lead / p))
    }

    fn cubic_irreducible(&self, desc: &[i64]) -> Result<bool> {
        let (c3, c2, c1, c0) = (desc[0], desc[1], desc[2], desc[3]);
        if c0 == 0 {
            return Ok(false);
        }
        if c3.abs().max(c0.abs()) > CUBIC_HEIGHT_LIMIT {
            return self.general_irreducible(desc);
        }
        let (c3w, c2w, c1w, c0w) = (c3 as i128, c2 as i128, c1 as i128, c0 as i128);
        let nums = self.divisors_of(c0.abs());
        let dens = self.divisors_of(c3);
        for &t in dens.iter() {
            let tw = t as i128;
            for &s in nums.iter() {
                if s.gcd(&t) != 1 {
                    continue;
                }
                for sw in [s as i128, -(s as i128)] {
                    let v = ((c3w * sw + c2w * tw) * sw + c1w * tw * tw) * sw + c0w * tw * tw * tw;
                    if v == 0 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    fn general_irreducible(&self, desc: &[i64]) -> Result<bool> {
        let p = IntPoly::from_descending(desc.iter().map(|&c| BigInt::from(c)))?;
        Ok(self.irreducibility.check(&p)?.irreducible)
    }
}

fn quadratic_irreducible(desc: &[i64]) -> bool {
    let (a, b, c) = (desc[0] as i128, desc[1] as i128, desc[2] as i128);
    let disc = b * b - 4 * a * c;
    if disc < 0 {
        return true;
    }
    let r = (disc as u128).isqrt();
    r * r != disc as u128
}

/// `lead | c_{n-i} e^i` for every `i`, computed modulo `lead`.
fn clears_mod(desc: &[i64], e: i64) -> bool {
    let m = desc[0] as i128;
    let e = e as i128 % m;
    let mut e_pow = 1i128;
    for &c in &desc[1..] {
        e_pow = e_pow * e % m;
        if (c as i128 % m) * e_pow % m != 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::{canonicalize, profile};
    use crate::error::Error;

    fn reference(desc: &[i64]) -> Class {
        let p = IntPoly::from_descending(desc.iter().copied()).unwrap();
        match canonicalize(&p) {
            Ok(g) if g.poly() == &p => Class::Canonical {
                arno: profile(&g).unwrap().arno,
            },
            Ok(_) | Err(Error::NotMinimal { .. }) => Class::NotCanonical,
            Err(e) => panic!("{e}"),
        }
    }

    fn all_tuples(degree: usize, h: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for pos in 0..=degree {
            let range: Vec<i64> = if pos == 0 {
                (1..=h).collect()
            } else {
                (-h..=h).collect()
            };
            out = out
                .into_iter()
                .flat_map(|t| {
                    range.iter().map(move |&c| {
                        let mut t = t.clone();
                        t.push(c);
                        t
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn agrees_with_reference_path() {
        for (degree, h) in [(1, 12), (2, 9), (3, 5), (4, 2)] {
            let kernel = Kernel::new(h, degree, IrreducibilityTest::default());
            for t in all_tuples(degree, h) {
                assert_eq!(kernel.classify(&t).unwrap(), reference(&t), "{t:?}");
            }
        }
    }

    #[test]
    fn divisor_fallback_matches_table() {
        let with_table = Kernel::new(40, 3, IrreducibilityTest::default());
        let mut without = Kernel::new(40, 3, IrreducibilityTest::default());
        without.divisors = None;
        for n in 1..=40 {
            let mut a = with_table.divisors_of(n).into_owned();
            let mut b = without.divisors_of(n).into_owned();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn arno_spot_checks() {
        let k = Kernel::new(20, 2, IrreducibilityTest::default());
        assert_eq!(
            k.classify(&[2, 0, -1]).unwrap(),
            Class::Canonical { arno: true }
        );
        assert_eq!(
            k.classify(&[9, 0, -2]).unwrap(),
            Class::Canonical { arno: false }
        );
        assert_eq!(
            k.classify(&[18, 0, -1]).unwrap(),
            Class::Canonical { arno: false }
        );
        assert_eq!(k.classify(&[4, 0, -2]).unwrap(), Class::NotCanonical);
        assert_eq!(k.classify(&[1, 0, -1]).unwrap(), Class::NotCanonical);
    }
}
