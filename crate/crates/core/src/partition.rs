//! A partition of the integers `m >= 2` into infinite classes
//!
//! ```text
//! E_i = {2i} ∪ {2^i k + 1 : k >= 1 odd},   i >= 1
//! ```
//!
//! Each class contains exactly one even number, yet the evens have natural
//! density 1/2 in the whole set. Classes are never materialised beyond a
//! requested limit.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ClassId(u64);

impl ClassId {
    pub fn new(i: u64) -> Result<Self> {
        if i == 0 {
            return Err(Error::invalid("class index must be at least 1"));
        }
        Ok(ClassId(i))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// The class holding `m`: `m / 2` for even `m`, the 2-adic valuation of
/// `m - 1` for odd `m`.
pub fn class_index(m: u64) -> Result<ClassId> {
    if m < 2 {
        return Err(Error::invalid(format!("{m} is not in the partitioned set")));
    }
    Ok(ClassId(if m.is_multiple_of(2) {
        m / 2
    } else {
        u64::from((m - 1).trailing_zeros())
    }))
}

/// Members of `E_i` up to `limit`, ascending.
pub fn class_members(i: ClassId, limit: u64) -> Result<Vec<u64>> {
    if limit < 2 {
        return Err(Error::invalid(format!(
            "limit must be at least 2, got {limit}"
        )));
    }
    let i = i.get();
    let mut out = Vec::new();
    if i < 64 {
        let step = 1u64 << i;
        let mut k = 1u64;
        while let Some(x) = step
            .checked_mul(k)
            .and_then(|v| v.checked_add(1))
            .filter(|&x| x <= limit)
        {
            out.push(x);
            k += 2;
        }
    }
    if let Some(even) = i.checked_mul(2).filter(|&e| e <= limit) {
        let pos = out.partition_point(|&x| x < even);
        out.insert(pos, even);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `m` appears in `count` classes instead of one.
    Coverage {
        m: u64,
        count: u32,
    },
    /// `m` is listed in class `listed` but [`class_index`] says otherwise.
    WrongClass {
        m: u64,
        listed: u64,
        indexed: u64,
    },
    /// A class other than `E_{m/2}` holds the even number `m`, or holds more
    /// than one even number.
    ExtraEven {
        class: u64,
        m: u64,
    },
    OutOfRange {
        class: u64,
        m: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub limit: u64,
    pub classes: u64,
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Exhaustively checks the partition on `[2, limit]`: every element lies in
/// exactly one class, that class is its [`class_index`], and each class's only
/// even element is `2i`.
pub fn verify_partition(limit: u64) -> Result<PartitionReport> {
    if limit < 2 {
        return Err(Error::invalid(format!(
            "limit must be at least 2, got {limit}"
        )));
    }
    // Every class meeting [2, limit] has 2i <= limit or 2^i + 1 <= limit; the
    // latter forces i <= log2(limit) <= limit / 2.
    let classes = limit / 2;
    let per_class: Vec<(u64, Vec<u64>)> = (1..=classes)
        .into_par_iter()
        .map(|i| (i, class_members(ClassId(i), limit).expect("limit >= 2")))
        .collect();

    let mut violations = Vec::new();
    let mut seen = vec![0u32; limit as usize + 1];
    for (i, members) in &per_class {
        let mut evens = 0;
        for &m in members {
            if !(2..=limit).contains(&m) {
                violations.push(Violation::OutOfRange { class: *i, m });
                continue;
            }
            seen[m as usize] += 1;
            let indexed = class_index(m)?.get();
            if indexed != *i {
                violations.push(Violation::WrongClass {
                    m,
                    listed: *i,
                    indexed,
                });
            }
            if m % 2 == 0 {
                evens += 1;
                if m != 2 * i || evens > 1 {
                    violations.push(Violation::ExtraEven { class: *i, m });
                }
            }
        }
    }
    for (m, &count) in seen.iter().enumerate().skip(2) {
        if count != 1 {
            violations.push(Violation::Coverage { m: m as u64, count });
        }
    }
    Ok(PartitionReport {
        limit,
        classes,
        ok: violations.is_empty(),
        violations,
    })
}

/// Share of even numbers in `[2, limit]`, exact.
pub fn evens_density(limit: u64) -> Result<Ratio<u64>> {
    if limit < 2 {
        return Err(Error::invalid(format!(
            "limit must be at least 2, got {limit}"
        )));
    }
    Ok(Ratio::new(limit / 2, limit - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn id(i: u64) -> ClassId {
        ClassId::new(i).unwrap()
    }

    #[test]
    fn index_examples() {
        assert_eq!(class_index(2).unwrap(), id(1));
        assert_eq!(class_index(13).unwrap(), id(2));
        assert_eq!(class_index(9).unwrap(), id(3));
        assert_eq!(class_index(7).unwrap(), id(1));
        assert!(class_index(1).is_err());
        assert!(class_index(0).is_err());
        assert!(ClassId::new(0).is_err());
        // 2^63 + 1
        assert_eq!(class_index((1 << 63) + 1).unwrap(), id(63));
    }

    #[test]
    fn member_examples() {
        assert_eq!(class_members(id(2), 30).unwrap(), vec![4, 5, 13, 21, 29]);
        assert_eq!(class_members(id(1), 10).unwrap(), vec![2, 3, 7]);
        assert_eq!(class_members(id(5), 10).unwrap(), vec![10]);
        assert_eq!(class_members(id(40), 10).unwrap(), Vec::<u64>::new());
        assert_eq!(
            class_members(id(3), 100).unwrap(),
            vec![6, 9, 25, 41, 57, 73, 89]
        );
        assert!(class_members(id(1), 1).is_err());
        assert_eq!(class_members(id(70), u64::MAX).unwrap(), vec![140]);
        let top = class_members(id(63), u64::MAX).unwrap();
        assert_eq!(top, vec![126, (1 << 63) + 1]);
    }

    #[test]
    fn verify_examples() {
        let r = verify_partition(10_000).unwrap();
        assert!(r.ok, "{:?}", &r.violations[..r.violations.len().min(5)]);
        let r = verify_partition(100).unwrap();
        assert!(r.ok);
        let class1 = class_members(id(1), 100).unwrap();
        assert_eq!(
            class1.iter().filter(|&&m| m % 2 == 0).collect::<Vec<_>>(),
            vec![&2]
        );
        let r = verify_partition(2).unwrap();
        assert!(r.ok);
        assert_eq!(r.classes, 1);
        assert!(verify_partition(1).is_err());
    }

    #[test]
    fn density_examples() {
        assert_eq!(
            evens_density(1_000_000).unwrap(),
            Ratio::new(500_000, 999_999)
        );
        assert_eq!(*evens_density(1_000_000).unwrap().numer(), 500_000);
        assert_eq!(evens_density(2).unwrap(), Ratio::new(1, 1));
        assert_eq!(evens_density(11).unwrap(), Ratio::new(1, 2));
        assert!(evens_density(1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig {
            cases: 256,
            rng_seed: prop::test_runner::RngSeed::Fixed(0x5eed_0003),
            ..ProptestConfig::default()
        })]

        #[test]
        fn member_of_own_class(m in 2u64..1_000_000) {
            let i = class_index(m).unwrap();
            prop_assert!(class_members(i, m).unwrap().contains(&m));
        }

        #[test]
        fn single_even_per_class(i in 1u64..200, limit in 2u64..5_000) {
            let evens: Vec<u64> = class_members(id(i), limit)
                .unwrap()
                .into_iter()
                .filter(|m| m % 2 == 0)
                .collect();
            let expected: Vec<u64> = if 2 * i <= limit { vec![2 * i] } else { vec![] };
            prop_assert_eq!(evens, expected);
        }

        #[test]
        fn density_bound(n in 2u64..10_000_000) {
            let r = evens_density(n).unwrap();
            let r = Ratio::new(*r.numer() as i128, *r.denom() as i128);
            let dev = r - Ratio::new(1, 2);
            let dev = if dev < Ratio::from_integer(0) { -dev } else { dev };
            prop_assert!(dev <= Ratio::new(1, 2 * (n as i128 - 1)));
        }
    }
}
