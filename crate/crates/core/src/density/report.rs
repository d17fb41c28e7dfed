use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::{count_row_with, ratio, zeta3_inverse, CountRow, Weight};
use crate::error::{Error, Result};
use crate::exact_poly::Rat;
use crate::factor::IrreducibilityTest;
use crate::json::{self, fraction};

pub const CSV_HEADER: &str =
    "degree,num_polys,num_algnums,arno_polys,arno_algnums,ratio,cumulative_ratio,zeta3_inv,delta";

/// Tolerance for the reference constant carried by every report.
const REPORT_ZETA_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportOptions {
    pub max_degree: usize,
    pub height: u64,
    pub weight: Weight,
    /// Whether degree one takes part in the union over degrees.
    pub include_degree_1: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            max_degree: 1,
            height: 1,
            weight: Weight::Roots,
            include_degree_1: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    #[serde(flatten)]
    pub counts: CountRow,
    /// Ratio over the union of all reported degrees up to this one.
    #[serde(serialize_with = "json::rat")]
    pub cumulative_ratio: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cumulative {
    pub num_polys: u64,
    pub num_algnums: u64,
    pub arno_polys: u64,
    pub arno_algnums: u64,
    /// Under the report's weighting.
    #[serde(serialize_with = "json::rat")]
    pub ratio: Rat,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub config: ReportOptions,
    pub rows: Vec<ReportRow>,
    pub cumulative: Cumulative,
    pub zeta3_inv: f64,
    /// `|cumulative ratio - 1/zeta(3)|`.
    pub delta: f64,
}

/// `r` rounded half-up to `places` decimals. `r` must be non-negative.
pub fn decimal(r: &Rat, places: u32) -> String {
    assert!(!r.is_negative(), "decimal expects a non-negative ratio");
    let scale = num_traits::pow(BigInt::from(10u32), places as usize);
    let (q, rem) = (r.numer() * &scale).div_rem(r.denom());
    let q = if rem * 2u32 >= *r.denom() {
        q + 1u32
    } else {
        q
    };
    let digits = q.to_string();
    let places = places as usize;
    if places == 0 {
        return digits;
    }
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = padded.split_at(padded.len() - places);
    format!("{int}.{frac}")
}

impl DensityReport {
    pub fn build(opts: &ReportOptions) -> Result<Self> {
        Self::build_with(opts, &IrreducibilityTest::default())
    }

    pub fn build_with(opts: &ReportOptions, test: &IrreducibilityTest) -> Result<Self> {
        let first = if opts.include_degree_1 { 1 } else { 2 };
        if opts.max_degree < first {
            return Err(Error::invalid(format!(
                "max degree {} leaves no degrees to report",
                opts.max_degree
            )));
        }
        let zeta3_inv = zeta3_inverse(REPORT_ZETA_TOLERANCE)?;
        let mut rows = Vec::new();
        let mut cum = Cumulative {
            num_polys: 0,
            num_algnums: 0,
            arno_polys: 0,
            arno_algnums: 0,
            ratio: ratio(0, 0),
        };
        for degree in first..=opts.max_degree {
            let counts = count_row_with(degree, opts.height, test)?;
            cum.num_polys += counts.num_polys;
            cum.num_algnums += counts.num_algnums;
            cum.arno_polys += counts.arno_polys;
            cum.arno_algnums += counts.arno_algnums;
            cum.ratio = cum.weighted_ratio(opts.weight);
            rows.push(ReportRow {
                counts,
                cumulative_ratio: cum.ratio.clone(),
            });
        }
        let delta = (cum.ratio.to_f64().expect("finite ratio") - zeta3_inv).abs();
        Ok(DensityReport {
            config: opts.clone(),
            rows,
            cumulative: cum,
            zeta3_inv,
            delta,
        })
    }

    /// One line per degree and a final `all` line, ratios to six places.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_HEADER);
        out.push('\n');
        let zeta = format!("{:.6}", self.zeta3_inv);
        let delta_of = |r: &Rat| format!("{:.6}", (r.to_f64().unwrap() - self.zeta3_inv).abs());
        for row in &self.rows {
            let c = &row.counts;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                c.degree,
                c.num_polys,
                c.num_algnums,
                c.arno_polys,
                c.arno_algnums,
                decimal(&c.ratio, 6),
                decimal(&row.cumulative_ratio, 6),
                zeta,
                delta_of(&row.cumulative_ratio),
            )
            .unwrap();
        }
        let c = &self.cumulative;
        writeln!(
            out,
            "all,{},{},{},{},{},{},{},{:.6}",
            c.num_polys,
            c.num_algnums,
            c.arno_polys,
            c.arno_algnums,
            decimal(&c.ratio, 6),
            decimal(&c.ratio, 6),
            zeta,
            self.delta,
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "height {}  weight {}  degrees {}..={}",
            self.config.height,
            self.config.weight,
            self.rows.first().map_or(0, |r| r.counts.degree),
            self.config.max_degree
        )
        .unwrap();
        writeln!(
            out,
            "{:>6} {:>12} {:>12} {:>10} {:>10}",
            "degree", "polys", "arno", "ratio", "cumul"
        )
        .unwrap();
        for row in &self.rows {
            let c = &row.counts;
            writeln!(
                out,
                "{:>6} {:>12} {:>12} {:>10} {:>10}",
                c.degree,
                c.num_polys,
                c.arno_polys,
                decimal(&c.ratio, 6),
                decimal(&row.cumulative_ratio, 6)
            )
            .unwrap();
        }
        writeln!(
            out,
            "cumulative {} = {}  1/zeta(3) = {:.6}  delta = {:.6}",
            fraction(&self.cumulative.ratio),
            decimal(&self.cumulative.ratio, 6),
            self.zeta3_inv,
            self.delta
        )
        .unwrap();
        out
    }
}

impl Cumulative {
    fn weighted_ratio(&self, weight: Weight) -> Rat {
        match weight {
            Weight::Roots => ratio(self.arno_algnums, self.num_algnums),
            Weight::Polys => ratio(self.arno_polys, self.num_polys),
        }
    }
}
