//! Counting algebraic numbers of bounded degree and height.
//!
//! `A_d(H)` is the set of algebraic numbers of degree `d` whose minimal
//! polynomial has every coefficient in `[-H, H]`, and `Â_d(H)` its Arno
//! subset. The coefficient space is split into independent work units (one
//! per pair of leading coefficients), each scanned in lexicographic order;
//! partial counts are merged by addition, so results never depend on the
//! number of worker threads.

mod kernel;
mod report;
mod zeta;

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algnum::MinPoly;
use crate::error::{Error, Result};
use crate::exact_poly::{IntPoly, Rat};
use crate::factor::IrreducibilityTest;
use crate::json;
use kernel::{Class, Kernel};

pub use report::{decimal, DensityReport, ReportOptions, CSV_HEADER};
pub use zeta::{zeta3_inverse, zeta3_terms, MIN_TOLERANCE};

/// How an irreducible polynomial of degree `d` is counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Weight {
    /// Each polynomial stands for its `d` conjugate roots.
    #[default]
    Roots,
    Polys,
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Weight::Roots => "roots",
            Weight::Polys => "polys",
        })
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "roots" => Ok(Weight::Roots),
            "polys" => Ok(Weight::Polys),
            other => Err(Error::invalid(format!(
                "unknown weight {other:?}, expected roots or polys"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub degree: usize,
    pub num_polys: u64,
    pub num_algnums: u64,
    pub arno_polys: u64,
    pub arno_algnums: u64,
    /// `arno / total`; the same under both weightings.
    #[serde(serialize_with = "json::rat")]
    pub ratio: Rat,
}

impl CountRow {
    fn new(degree: usize, num_polys: u64, arno_polys: u64) -> Self {
        let d = degree as u64;
        CountRow {
            degree,
            num_polys,
            num_algnums: d * num_polys,
            arno_polys,
            arno_algnums: d * arno_polys,
            ratio: ratio(arno_polys, num_polys),
        }
    }

    pub fn counts(&self, weight: Weight) -> (u64, u64) {
        match weight {
            Weight::Roots => (self.num_algnums, self.arno_algnums),
            Weight::Polys => (self.num_polys, self.arno_polys),
        }
    }
}

pub(crate) fn ratio(num: u64, den: u64) -> Rat {
    if den == 0 {
        Rat::zero()
    } else {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }
}

fn validate(degree: usize, height: u64, test: &IrreducibilityTest) -> Result<i64> {
    if degree < 1 || height < 1 {
        return Err(Error::invalid(format!(
            "degree and height must be at least 1, got degree {degree}, height {height}"
        )));
    }
    if degree > test.degree_cap {
        return Err(Error::UnsupportedDegree {
            degree,
            cap: test.degree_cap,
        });
    }
    i64::try_from(height)
        .ok()
        .filter(|h| h.checked_mul(4).is_some())
        .ok_or_else(|| Error::invalid(format!("height {height} is too large")))
}

/// One work unit: all tuples with a fixed leading coefficient and, for
/// degree >= 2, a fixed second coefficient.
#[derive(Clone, Copy)]
struct Unit {
    lead: i64,
    second: i64,
}

fn units(degree: usize, h: i64) -> Vec<Unit> {
    debug_assert!(degree >= 1);
    (1..=h)
        .flat_map(|lead| (-h..=h).map(move |second| Unit { lead, second }))
        .collect()
}

/// Visits the tuples of `unit` in lexicographic order, stopping at the
/// first error.
fn scan_unit(
    degree: usize,
    h: i64,
    unit: Unit,
    kernel: &Kernel,
    mut visit: impl FnMut(&[i64], bool) -> Result<()>,
) -> Result<()> {
    let mut tuple = vec![-h; degree + 1];
    tuple[0] = unit.lead;
    tuple[1] = unit.second;
    loop {
        if let Class::Canonical { arno } = kernel.classify(&tuple)? {
            visit(&tuple, arno)?;
        }
        // Odometer over positions 2..=degree.
        let mut pos = degree;
        loop {
            if pos < 2 {
                return Ok(());
            }
            if tuple[pos] < h {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = -h;
            pos -= 1;
        }
    }
}

fn to_minpoly(tuple: &[i64]) -> MinPoly {
    MinPoly::new_unchecked(
        IntPoly::from_descending(tuple.iter().map(|&c| BigInt::from(c))).expect("lead >= 1"),
    )
}

/// Every canonical minimal polynomial of degree `degree` and height at most
/// `height`, in lexicographic order of the descending coefficient tuple.
pub fn enumerate_canonical(degree: usize, height: u64) -> Result<Vec<MinPoly>> {
    enumerate_canonical_with(degree, height, &IrreducibilityTest::default())
}

pub fn enumerate_canonical_with(
    degree: usize,
    height: u64,
    test: &IrreducibilityTest,
) -> Result<Vec<MinPoly>> {
    let h = validate(degree, height, test)?;
    let kernel = Kernel::new(h, degree, *test);
    let chunks: Vec<Vec<MinPoly>> = units(degree, h)
        .into_par_iter()
        .map(|unit| {
            let mut out = Vec::new();
            scan_unit(degree, h, unit, &kernel, |t, _| {
                out.push(to_minpoly(t));
                Ok(())
            })?;
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// Runs `visit` on every canonical polynomial of the given degree and height
/// bound, together with its Arno flag, in parallel and in no particular order.
pub fn try_for_each_canonical<F>(degree: usize, height: u64, visit: F) -> Result<()>
where
    F: Fn(MinPoly, bool) -> Result<()> + Sync,
{
    let test = IrreducibilityTest::default();
    let h = validate(degree, height, &test)?;
    let kernel = Kernel::new(h, degree, test);
    units(degree, h).into_par_iter().try_for_each(|unit| {
        scan_unit(degree, h, unit, &kernel, |t, arno| {
            visit(to_minpoly(t), arno)
        })
    })
}

/// Polynomial and root counts of `A_d(H)` and `Â_d(H)`.
pub fn count_row(degree: usize, height: u64) -> Result<CountRow> {
    count_row_with(degree, height, &IrreducibilityTest::default())
}

pub fn count_row_with(degree: usize, height: u64, test: &IrreducibilityTest) -> Result<CountRow> {
    let h = validate(degree, height, test)?;
    let kernel = Kernel::new(h, degree, *test);
    let (total, arno) = units(degree, h)
        .into_par_iter()
        .map(|unit| {
            let mut counts = (0u64, 0u64);
            scan_unit(degree, h, unit, &kernel, |_, arno| {
                counts.0 += 1;
                counts.1 += u64::from(arno);
                Ok(())
            })?;
            Ok(counts)
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(CountRow::new(degree, total, arno))
}

/// `(|A_d(H)|, |Â_d(H)|)` under `weight`.
pub fn count_sets(degree: usize, height: u64, weight: Weight) -> Result<(u64, u64)> {
    Ok(count_row(degree, height)?.counts(weight))
}

pub fn density_report(max_degree: usize, height: u64, weight: Weight) -> Result<DensityReport> {
    DensityReport::build(&ReportOptions {
        max_degree,
        height,
        weight,
        ..ReportOptions::default()
    })
}
