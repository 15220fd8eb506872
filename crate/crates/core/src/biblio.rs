//! Authorship ingestion, the corresponding-author default, and the
//! two-step join of author first names onto the genderedness table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{self, Read, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::normalize::{clean, CleanName, NormalizeOptions};
use crate::table::{score, GenderTable, Genderedness, SexCounts};

pub const MERGED_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Single,
    First,
    Middle,
    Last,
    Corresponding,
}

impl Role {
    pub const ALL: [Role; 5] = [
        Role::Single,
        Role::First,
        Role::Middle,
        Role::Last,
        Role::Corresponding,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Role::Single => "single",
            Role::First => "first",
            Role::Middle => "middle",
            Role::Last => "last",
            Role::Corresponding => "corresponding",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Role> {
        Role::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::format(format!("unknown role {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuthorshipRecord {
    pub article_id: String,
    pub role: Role,
    pub raw_first_name: String,
    pub citations: u64,
    pub year: Option<i32>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IngestOptions {
    /// Inclusive publication-year window; rows without a year are dropped
    /// when it is set.
    pub year_range: Option<(i32, i32)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IngestStats {
    pub rows_read: u64,
    pub rows_skipped_invalid: u64,
    pub rows_outside_year_range: u64,
}

const REQUIRED_COLUMNS: [&str; 4] = ["article_id", "role", "first_name", "citations"];

/// Reads the authorship CSV. A missing required column is fatal; rows that
/// fail validation are skipped and counted.
pub fn ingest<R: Read>(
    reader: R,
    opts: &IngestOptions,
) -> Result<(Vec<AuthorshipRecord>, IngestStats)> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    let mut stats = IngestStats::default();
    if headers.is_empty() {
        return Ok((Vec::new(), stats));
    }
    let column = |name: &str| {
        headers.iter().position(|h| {
            h.trim()
                .trim_start_matches('\u{feff}')
                .eq_ignore_ascii_case(name)
        })
    };
    let mut idx = [0usize; 4];
    for (slot, name) in idx.iter_mut().zip(REQUIRED_COLUMNS) {
        *slot = column(name)
            .ok_or_else(|| Error::format(format!("authorship file lacks column {name:?}")))?;
    }
    let [id_col, role_col, name_col, cit_col] = idx;
    let year_col = column("year");

    let mut records = Vec::new();
    let mut row = csv::StringRecord::new();
    while rdr.read_record(&mut row)? {
        stats.rows_read += 1;
        let parsed = (|| {
            let article_id = row.get(id_col)?.trim();
            if article_id.is_empty() {
                return None;
            }
            let role = row.get(role_col)?.parse().ok()?;
            let raw_first_name = row.get(name_col)?.to_string();
            let citations = row.get(cit_col)?.trim().parse::<u64>().ok()?;
            let year = match year_col.and_then(|c| row.get(c)).map(str::trim) {
                None | Some("") => None,
                Some(y) => Some(y.parse::<i32>().ok()?),
            };
            Some(AuthorshipRecord {
                article_id: article_id.to_string(),
                role,
                raw_first_name,
                citations,
                year,
            })
        })();
        let Some(record) = parsed else {
            stats.rows_skipped_invalid += 1;
            continue;
        };
        if let Some((lo, hi)) = opts.year_range {
            if !record.year.is_some_and(|y| (lo..=hi).contains(&y)) {
                stats.rows_outside_year_range += 1;
                continue;
            }
        }
        records.push(record);
    }
    Ok((records, stats))
}

/// Applies the corresponding-author default to one article's records.
///
/// Without an explicit corresponding author, every single author (or, if
/// there is none, every first author) is duplicated as corresponding.
pub fn derive_corresponding(article: &[AuthorshipRecord]) -> Vec<AuthorshipRecord> {
    let mut out = article.to_vec();
    if article.iter().any(|r| r.role == Role::Corresponding) {
        return out;
    }
    let source = if article.iter().any(|r| r.role == Role::Single) {
        Role::Single
    } else {
        Role::First
    };
    out.extend(
        article
            .iter()
            .filter(|r| r.role == source)
            .map(|r| AuthorshipRecord {
                role: Role::Corresponding,
                ..r.clone()
            }),
    );
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ArticleStats {
    pub articles: u64,
    pub articles_dropped_inconsistent_citations: u64,
    pub corresponding_derived: u64,
}

/// Groups records by article (in article-id order, file order within an
/// article) and applies [`derive_corresponding`] to each group. Articles
/// whose rows disagree on the citation count are dropped.
pub fn group_articles(records: Vec<AuthorshipRecord>) -> (Vec<AuthorshipRecord>, ArticleStats) {
    let mut groups: BTreeMap<String, Vec<AuthorshipRecord>> = BTreeMap::new();
    for r in records {
        groups.entry(r.article_id.clone()).or_default().push(r);
    }
    let mut stats = ArticleStats::default();
    let mut out = Vec::new();
    for group in groups.into_values() {
        let citations = group[0].citations;
        if group.iter().any(|r| r.citations != citations) {
            stats.articles_dropped_inconsistent_citations += 1;
            continue;
        }
        stats.articles += 1;
        let expanded = derive_corresponding(&group);
        stats.corresponding_derived += (expanded.len() - group.len()) as u64;
        out.extend(expanded);
    }
    (out, stats)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredAuthorship {
    pub record: AuthorshipRecord,
    pub clean_name: CleanName,
    pub sex_counts: SexCounts,
    pub genderedness: Genderedness,
}

/// Why a record did not get a score.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unscored {
    EmptyName,
    Unmatched,
}

/// Looks up the full cleaned name and, for compound names, its first token;
/// the counts of every hit are summed.
pub fn attach_genderedness(
    record: &AuthorshipRecord,
    table: &GenderTable,
    opts: &NormalizeOptions,
) -> Result<ScoredAuthorship, Unscored> {
    let clean_name = clean(&record.raw_first_name, opts).ok_or(Unscored::EmptyName)?;
    let full = table.get(clean_name.as_str());
    let first = if clean_name.is_compound() {
        table.get(clean_name.first_token())
    } else {
        None
    };
    let sex_counts = match (full, first) {
        (None, None) => return Err(Unscored::Unmatched),
        (a, b) => a.unwrap_or_default() + b.unwrap_or_default(),
    };
    let genderedness = score(sex_counts).expect("table entries have non-zero totals");
    Ok(ScoredAuthorship {
        record: record.clone(),
        clean_name,
        sex_counts,
        genderedness,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MergeStats {
    pub records_in: u64,
    pub scored: u64,
    pub dropped_empty_name: u64,
    pub dropped_unmatched: u64,
}

pub fn score_all(
    records: &[AuthorshipRecord],
    table: &GenderTable,
    opts: &NormalizeOptions,
) -> (Vec<ScoredAuthorship>, MergeStats) {
    let mut stats = MergeStats {
        records_in: records.len() as u64,
        ..Default::default()
    };
    let mut scored = Vec::with_capacity(records.len());
    for r in records {
        match attach_genderedness(r, table, opts) {
            Ok(s) => scored.push(s),
            Err(Unscored::EmptyName) => stats.dropped_empty_name += 1,
            Err(Unscored::Unmatched) => stats.dropped_unmatched += 1,
        }
    }
    stats.scored = scored.len() as u64;
    (scored, stats)
}

/// Aggregates at one genderedness value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoleBucket {
    pub types: BTreeSet<String>,
    pub tokens: u64,
    pub articles: u64,
    pub citations: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoleDataset {
    pub role: Option<Role>,
    pub buckets: BTreeMap<Genderedness, RoleBucket>,
}

impl RoleDataset {
    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    pub fn merge(mut self, other: RoleDataset) -> RoleDataset {
        for (g, b) in other.buckets {
            let slot = self.buckets.entry(g).or_default();
            slot.types.extend(b.types);
            slot.tokens += b.tokens;
            slot.articles += b.articles;
            slot.citations += b.citations;
        }
        self
    }
}

/// Per-genderedness aggregates for one role. One authorship occurrence
/// counts as one article occurrence.
pub fn build_role_dataset(scored: &[ScoredAuthorship], role: Role) -> RoleDataset {
    let mut ds = RoleDataset {
        role: Some(role),
        buckets: BTreeMap::new(),
    };
    for s in scored.iter().filter(|s| s.record.role == role) {
        let b = ds.buckets.entry(s.genderedness).or_default();
        if !b.types.contains(s.clean_name.as_str()) {
            b.types.insert(s.clean_name.as_str().to_string());
        }
        b.tokens += 1;
        b.articles += 1;
        b.citations += s.record.citations;
    }
    ds
}

/// `genderedness_num, genderedness_den, types, tokens, articles, citations`
/// rows, ascending by genderedness.
pub fn write_merged<W: Write + ?Sized>(w: &mut W, ds: &RoleDataset) -> io::Result<()> {
    writeln!(w, "# format_version={MERGED_FORMAT_VERSION}")?;
    if let Some(role) = ds.role {
        writeln!(w, "# role={role}")?;
    }
    writeln!(
        w,
        "# columns=genderedness_num\tgenderedness_den\ttypes\ttokens\tarticles\tcitations"
    )?;
    for (g, b) in &ds.buckets {
        writeln!(
            w,
            "{}\t{}\t{}\t{}\t{}\t{}",
            g.numerator(),
            g.denominator(),
            b.types.len(),
            b.tokens,
            b.articles,
            b.citations
        )?;
    }
    Ok(())
}
