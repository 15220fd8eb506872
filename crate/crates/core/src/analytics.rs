//! Distributions along the genderedness continuum: spectra, cumulative
//! shares, citation-minus-article differences, concentration at the ends
//! of the continuum, and plot-axis rescaling.
//!
//! All statistics are exact rationals. Floats only appear when a value is
//! written out.

use std::io::{self, BufRead, Write};

use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::biblio::{Role, RoleDataset};
use crate::error::{Error, Result};
use crate::table::{GenderTable, Genderedness};

pub const ANALYSIS_FORMAT_VERSION: u32 = 1;

/// Exact share in [0, 1].
pub type Share = Ratio<u128>;
/// Exact signed difference of two shares.
pub type Diff = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumPoint {
    pub g: Genderedness,
    pub types: u64,
    pub tokens: u64,
    pub articles: u64,
    pub citations: u64,
}

impl SpectrumPoint {
    pub fn get(&self, m: Measure) -> u64 {
        match m {
            Measure::Types => self.types,
            Measure::Tokens => self.tokens,
            Measure::Articles => self.articles,
            Measure::Citations => self.citations,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Types,
    Tokens,
    Articles,
    Citations,
}

/// One point per distinct genderedness value, ascending.
pub fn spectrum(ds: &RoleDataset) -> Vec<SpectrumPoint> {
    ds.buckets
        .iter()
        .map(|(g, b)| SpectrumPoint {
            g: *g,
            types: b.types.len() as u64,
            tokens: b.tokens,
            articles: b.articles,
            citations: b.citations,
        })
        .collect()
}

/// Spectrum of the genderedness table itself: one type per name, one token
/// per (entity, name) pair. There are no articles or citations.
pub fn table_spectrum(table: &GenderTable) -> Vec<SpectrumPoint> {
    let mut by_g: std::collections::BTreeMap<Genderedness, (u64, u64)> = Default::default();
    for (name, counts) in table.iter() {
        let g = table.score(name).expect("name is in table");
        let slot = by_g.entry(g).or_default();
        slot.0 += 1;
        slot.1 += counts.total();
    }
    by_g.into_iter()
        .map(|(g, (types, tokens))| SpectrumPoint {
            g,
            types,
            tokens,
            articles: 0,
            citations: 0,
        })
        .collect()
}

pub fn total(points: &[SpectrumPoint], m: Measure) -> u64 {
    points.iter().map(|p| p.get(m)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulativeSeries {
    pub measure: Measure,
    pub points: Vec<(Genderedness, Share)>,
}

/// Running share of a measure up to and including each point.
pub fn cumulative_share(points: &[SpectrumPoint], m: Measure) -> Result<CumulativeSeries> {
    let total = total(points, m);
    if total == 0 {
        return Err(Error::contract(format!("{m:?} total is zero")));
    }
    let mut running = 0u128;
    let points = points
        .iter()
        .map(|p| {
            running += u128::from(p.get(m));
            (p.g, Ratio::new(running, u128::from(total)))
        })
        .collect();
    Ok(CumulativeSeries { measure: m, points })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSeries {
    pub points: Vec<(Genderedness, Diff)>,
}

impl DifferenceSeries {
    pub fn min(&self) -> Option<(Genderedness, Diff)> {
        self.points
            .iter()
            .copied()
            .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
    }

    pub fn max(&self) -> Option<(Genderedness, Diff)> {
        self.points
            .iter()
            .copied()
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
    }
}

/// Cumulative citation share minus cumulative article share at each point.
pub fn cumulative_difference(points: &[SpectrumPoint]) -> Result<DifferenceSeries> {
    let cit_total = i128::from(total(points, Measure::Citations));
    let art_total = i128::from(total(points, Measure::Articles));
    if cit_total == 0 || art_total == 0 {
        return Err(Error::contract(
            "cumulative difference needs non-zero citation and article totals",
        ));
    }
    let den = cit_total * art_total;
    let (mut cit, mut art) = (0i128, 0i128);
    let points = points
        .iter()
        .map(|p| {
            cit += i128::from(p.citations);
            art += i128::from(p.articles);
            // c/C - a/A over the common denominator C*A
            let num = cit
                .checked_mul(art_total)
                .zip(art.checked_mul(cit_total))
                .map(|(x, y)| x - y)
                .ok_or_else(|| Error::contract("cumulative difference overflows i128"))?;
            Ok((p.g, Ratio::new(num, den)))
        })
        .collect::<Result<_>>()?;
    Ok(DifferenceSeries { points })
}

/// Validates a concentration threshold: `0 < alpha < 1/2`.
pub fn check_alpha(alpha: Ratio<u64>) -> Result<()> {
    if alpha.is_zero() || alpha >= Ratio::new(1, 2) {
        return Err(Error::contract(format!(
            "alpha must lie strictly between 0 and 1/2, got {alpha}"
        )));
    }
    Ok(())
}

/// Share of a measure held by points with `g < alpha` or `g > 1 - alpha`.
pub fn top_share(points: &[SpectrumPoint], m: Measure, alpha: Ratio<u64>) -> Result<Share> {
    check_alpha(alpha)?;
    let total = total(points, m);
    if total == 0 {
        return Err(Error::contract(format!("{m:?} total is zero")));
    }
    let upper = Ratio::one() - alpha;
    let inside: u64 = points
        .iter()
        .filter(|p| p.g.as_ratio() < alpha || p.g.as_ratio() > upper)
        .map(|p| p.get(m))
        .sum();
    Ok(Ratio::new(u128::from(inside), u128::from(total)))
}

/// Share of a measure held by points with `g >= threshold`.
pub fn share_at_least(
    points: &[SpectrumPoint],
    m: Measure,
    threshold: Ratio<u64>,
) -> Result<Share> {
    let total = total(points, m);
    if total == 0 {
        return Err(Error::contract(format!("{m:?} total is zero")));
    }
    let above: u64 = points
        .iter()
        .filter(|p| p.g.as_ratio() >= threshold)
        .map(|p| p.get(m))
        .sum();
    Ok(Ratio::new(u128::from(above), u128::from(total)))
}

/// Arcsine rescaling of the genderedness axis, normalized to [0, 1].
pub fn arcsine_x(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::contract(format!("x = {x} is outside [0, 1]")));
    }
    Ok(x.sqrt().asin() / std::f64::consts::FRAC_PI_2)
}

/// Square-root rescaling of a non-negative y value.
pub fn sqrt_y(y: f64) -> Result<f64> {
    if !y.is_finite() || y < 0.0 {
        return Err(Error::contract(format!(
            "y = {y} must be finite and non-negative"
        )));
    }
    Ok(y.sqrt())
}

pub fn transform_axes(series: &[(f64, f64)]) -> Result<Vec<(f64, f64)>> {
    series
        .iter()
        .map(|&(x, y)| Ok((arcsine_x(x)?, sqrt_y(y)?)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TransformMode {
    None,
    #[default]
    Paper,
}

impl std::str::FromStr for TransformMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(TransformMode::None),
            "paper" => Ok(TransformMode::Paper),
            _ => Err(Error::Usage(format!(
                "unknown transform {s:?} (none|paper)"
            ))),
        }
    }
}

impl TransformMode {
    pub fn as_str(self) -> &'static str {
        match self {
            TransformMode::None => "none",
            TransformMode::Paper => "paper",
        }
    }
}

/// Parses a plain decimal such as `0.005` into an exact fraction.
pub fn parse_decimal(s: &str) -> Result<Ratio<u64>> {
    let bad = || Error::Usage(format!("not a plain decimal number: {s:?}"));
    let s = s.trim();
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty()
        || !int.bytes().all(|b| b.is_ascii_digit())
        || !frac.bytes().all(|b| b.is_ascii_digit())
        || frac.len() > 18
    {
        return Err(bad());
    }
    let scale = 10u64.pow(frac.len() as u32);
    let int: u64 = if int.is_empty() {
        0
    } else {
        int.parse().map_err(|_| bad())?
    };
    let frac: u64 = if frac.is_empty() {
        0
    } else {
        frac.parse().map_err(|_| bad())?
    };
    let num = int
        .checked_mul(scale)
        .and_then(|v| v.checked_add(frac))
        .ok_or_else(bad)?;
    Ok(Ratio::new(num, scale))
}

/// Formats a float with 12 significant digits, shortest representation.
pub fn fmt_float(v: f64) -> String {
    let rounded: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        return "0".to_string();
    }
    format!("{rounded}")
}

fn round12(v: f64) -> f64 {
    format!("{v:.11e}").parse().expect("formatted float parses")
}

fn share_f64(s: &Share) -> f64 {
    s.to_f64().expect("finite share")
}

fn diff_f64(d: &Diff) -> f64 {
    d.to_f64().expect("finite difference")
}

/// A named spectrum ready for emission.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub name: String,
    /// What one token stands for in this dataset.
    pub token_unit: &'static str,
    /// Distinct entities behind the tokens, when tokens are (entity, name)
    /// pairs and the two countings differ.
    pub entities: Option<u64>,
    pub points: Vec<SpectrumPoint>,
}

impl Dataset {
    pub fn from_role(role: Role, ds: &RoleDataset) -> Dataset {
        Dataset {
            name: role.as_str().to_string(),
            token_unit: "authorships",
            entities: None,
            points: spectrum(ds),
        }
    }

    pub fn from_table(table: &GenderTable) -> Dataset {
        Dataset {
            name: "wikidata".to_string(),
            token_unit: "entity_name_pairs",
            entities: Some(table.provenance.entity_count),
            points: table_spectrum(table),
        }
    }
}

fn opt_series(points: &[SpectrumPoint], m: Measure) -> Option<Vec<Share>> {
    cumulative_share(points, m)
        .ok()
        .map(|s| s.points.into_iter().map(|(_, v)| v).collect())
}

/// Writes the per-dataset plot table. Columns whose totals are zero are
/// written as `NA`.
pub fn write_analysis<W: Write + ?Sized>(
    w: &mut W,
    ds: &Dataset,
    mode: TransformMode,
) -> Result<()> {
    let points = &ds.points;
    let types = opt_series(points, Measure::Types);
    let tokens = opt_series(points, Measure::Tokens);
    let cits = opt_series(points, Measure::Citations);
    let diff = cumulative_difference(points).ok();

    let mut columns = vec![
        "g_float",
        "g_transformed",
        "types",
        "tokens",
        "citations",
        "cum_type_share",
        "cum_token_share",
        "cum_citation_share",
        "D",
    ];
    if mode == TransformMode::Paper {
        columns.extend([
            "sqrt_cum_type_share",
            "sqrt_cum_token_share",
            "sqrt_cum_citation_share",
        ]);
    }
    writeln!(w, "# format_version={ANALYSIS_FORMAT_VERSION}")?;
    writeln!(w, "# dataset={}", ds.name)?;
    writeln!(w, "# token_unit={}", ds.token_unit)?;
    writeln!(w, "# transform={}", mode.as_str())?;
    writeln!(w, "# columns={}", columns.join("\t"))?;

    let cell = |s: &Option<Vec<Share>>, i: usize| {
        s.as_ref()
            .map_or_else(|| "NA".to_string(), |v| fmt_float(share_f64(&v[i])))
    };
    let sqrt_cell = |s: &Option<Vec<Share>>, i: usize| -> Result<String> {
        Ok(match s {
            Some(v) => fmt_float(sqrt_y(share_f64(&v[i]))?),
            None => "NA".to_string(),
        })
    };
    for (i, p) in points.iter().enumerate() {
        let g = p.g.to_f64();
        let gx = match mode {
            TransformMode::None => g,
            TransformMode::Paper => arcsine_x(g)?,
        };
        let d = diff
            .as_ref()
            .map_or_else(|| "NA".to_string(), |d| fmt_float(diff_f64(&d.points[i].1)));
        write!(
            w,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            fmt_float(g),
            fmt_float(gx),
            p.types,
            p.tokens,
            p.citations,
            cell(&types, i),
            cell(&tokens, i),
            cell(&cits, i),
            d
        )?;
        if mode == TransformMode::Paper {
            write!(
                w,
                "\t{}\t{}\t{}",
                sqrt_cell(&types, i)?,
                sqrt_cell(&tokens, i)?,
                sqrt_cell(&cits, i)?
            )?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// A fraction as both an exact string and a rounded float.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Exact {
    pub value: f64,
    pub exact: String,
}

impl Exact {
    fn share(s: Share) -> Exact {
        Exact {
            value: round12(share_f64(&s)),
            exact: format!("{}/{}", s.numer(), s.denom()),
        }
    }

    fn diff(d: Diff) -> Exact {
        Exact {
            value: round12(diff_f64(&d)),
            exact: format!("{}/{}", d.numer(), d.denom()),
        }
    }

    fn genderedness(g: Genderedness) -> Exact {
        Exact {
            value: round12(g.to_f64()),
            exact: g.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extremum {
    pub g: Exact,
    pub d: Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DatasetSummary {
    pub dataset: String,
    pub token_unit: String,
    pub points: usize,
    pub total_types: u64,
    pub total_tokens: u64,
    pub total_entities: Option<u64>,
    pub total_articles: u64,
    pub total_citations: u64,
    pub top_type_share: Option<Exact>,
    pub top_token_share: Option<Exact>,
    pub top_article_share: Option<Exact>,
    pub top_citation_share: Option<Exact>,
    /// Share of distinct names with genderedness of at least 9999/10000.
    pub type_share_at_least_9999: Option<Exact>,
    pub d_min: Option<Extremum>,
    pub d_max: Option<Extremum>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub format_version: u32,
    pub alpha: Exact,
    pub datasets: Vec<DatasetSummary>,
}

pub fn summarize(ds: &Dataset, alpha: Ratio<u64>) -> Result<DatasetSummary> {
    check_alpha(alpha)?;
    let p = &ds.points;
    let top = |m| top_share(p, m, alpha).ok().map(Exact::share);
    let diff = cumulative_difference(p).ok();
    let ext = |e: Option<(Genderedness, Diff)>| {
        e.map(|(g, d)| Extremum {
            g: Exact::genderedness(g),
            d: Exact::diff(d),
        })
    };
    Ok(DatasetSummary {
        dataset: ds.name.clone(),
        token_unit: ds.token_unit.to_string(),
        points: p.len(),
        total_types: total(p, Measure::Types),
        total_tokens: total(p, Measure::Tokens),
        total_entities: ds.entities,
        total_articles: total(p, Measure::Articles),
        total_citations: total(p, Measure::Citations),
        top_type_share: top(Measure::Types),
        top_token_share: top(Measure::Tokens),
        top_article_share: top(Measure::Articles),
        top_citation_share: top(Measure::Citations),
        type_share_at_least_9999: share_at_least(p, Measure::Types, Ratio::new(9999, 10000))
            .ok()
            .map(Exact::share),
        d_min: ext(diff.as_ref().and_then(DifferenceSeries::min)),
        d_max: ext(diff.as_ref().and_then(DifferenceSeries::max)),
    })
}

/// Summary over every dataset. At least one dataset must be non-empty.
pub fn report(datasets: &[Dataset], alpha: Ratio<u64>) -> Result<Summary> {
    if datasets.iter().all(|d| d.points.is_empty()) {
        return Err(Error::contract(
            "report needs at least one non-empty dataset",
        ));
    }
    Ok(Summary {
        format_version: ANALYSIS_FORMAT_VERSION,
        alpha: Exact {
            value: round12(alpha.to_f64().expect("finite alpha")),
            exact: format!("{}/{}", alpha.numer(), alpha.denom()),
        },
        datasets: datasets
            .iter()
            .map(|d| summarize(d, alpha))
            .collect::<Result<_>>()?,
    })
}

/// Reads a merged role TSV back into a dataset.
pub fn read_merged<R: BufRead>(reader: R, fallback_name: &str) -> Result<Dataset> {
    let mut name = fallback_name.to_string();
    let mut points: Vec<SpectrumPoint> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if let Some(meta) = line.strip_prefix('#') {
            if let Some((k, v)) = meta.trim().split_once('=') {
                match k {
                    "role" => name = v.to_string(),
                    "format_version" if v != crate::biblio::MERGED_FORMAT_VERSION.to_string() => {
                        return Err(Error::format(format!(
                            "unsupported merged format_version {v}"
                        )))
                    }
                    _ => {}
                }
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let bad = |why: &str| Error::format(format!("merged line {}: {why}: {line:?}", idx + 1));
        let cols: Vec<u64> = line
            .split('\t')
            .map(|c| c.parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("expected unsigned integers"))?;
        let [num, den, types, tokens, articles, citations] = cols[..] else {
            return Err(bad("expected 6 columns"));
        };
        let g = Genderedness::new(num, den).map_err(|_| bad("genderedness outside [0, 1]"))?;
        if points.last().is_some_and(|prev| prev.g >= g) {
            return Err(bad("genderedness values not strictly ascending"));
        }
        if types == 0 {
            return Err(bad("point without any type"));
        }
        points.push(SpectrumPoint {
            g,
            types,
            tokens,
            articles,
            citations,
        });
    }
    Ok(Dataset {
        name,
        token_unit: "authorships",
        entities: None,
        points,
    })
}

pub fn write_summary<W: Write + ?Sized>(w: &mut W, summary: &Summary) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, summary)?;
    writeln!(w)
}
