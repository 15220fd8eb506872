//! Per-name male/female entity counts and the genderedness score.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{self, BufRead, Write};
use std::ops::Add;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::extract::{HumanEntityRecord, Sex};
use crate::normalize::{clean, NormalizeOptions};

pub const TABLE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SexCounts {
    pub male: u64,
    pub female: u64,
}

impl SexCounts {
    pub fn new(male: u64, female: u64) -> Self {
        SexCounts { male, female }
    }

    pub fn total(&self) -> u64 {
        self.male + self.female
    }

    fn bump(&mut self, sex: Sex) {
        match sex {
            Sex::Male => self.male += 1,
            Sex::Female => self.female += 1,
        }
    }
}

impl Add for SexCounts {
    type Output = SexCounts;

    fn add(self, rhs: SexCounts) -> SexCounts {
        SexCounts {
            male: self.male + rhs.male,
            female: self.female + rhs.female,
        }
    }
}

/// Share of male bearers of a name, kept as a reduced fraction in [0, 1].
///
/// Ordering and equality are exact, so proportional counts collapse onto one
/// value and `1/3` never drifts away from `2/6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Genderedness(Ratio<u64>);

impl Genderedness {
    pub const ZERO: Genderedness = Genderedness(Ratio::new_raw(0, 1));
    pub const ONE: Genderedness = Genderedness(Ratio::new_raw(1, 1));

    /// `numerator / denominator`, reduced. Fails unless
    /// `0 <= numerator <= denominator` and `denominator > 0`.
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 || numerator > denominator {
            return Err(Error::contract(format!(
                "genderedness {numerator}/{denominator} is outside [0, 1]"
            )));
        }
        Ok(Genderedness(Ratio::new(numerator, denominator)))
    }

    pub fn numerator(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> u64 {
        *self.0.denom()
    }

    pub fn as_ratio(&self) -> Ratio<u64> {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("finite ratio")
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numerator() == self.denominator()
    }
}

impl fmt::Display for Genderedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

/// Male frequency over total frequency.
pub fn score(counts: SexCounts) -> Result<Genderedness> {
    if counts.total() == 0 {
        return Err(Error::contract("cannot score a name with zero bearers"));
    }
    Genderedness::new(counts.male, counts.total())
}

/// Where a table came from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Provenance {
    pub dumps: BTreeSet<String>,
    pub dump_dates: BTreeSet<String>,
    pub entity_count: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenderTable {
    counts: BTreeMap<String, SexCounts>,
    pub provenance: Provenance,
}

impl GenderTable {
    pub fn new() -> Self {
        GenderTable::default()
    }

    pub fn get(&self, name: &str) -> Option<SexCounts> {
        self.counts.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Entries in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, SexCounts)> {
        self.counts.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Adds counts to one name. Zero-total additions are ignored so that no
    /// stored entry ever has zero bearers.
    pub fn insert_counts(&mut self, name: impl Into<String>, counts: SexCounts) {
        if counts.total() == 0 {
            return;
        }
        let entry = self.counts.entry(name.into()).or_default();
        *entry = *entry + counts;
    }

    pub fn score(&self, name: &str) -> Option<Genderedness> {
        self.get(name)
            .map(|c| score(c).expect("stored entries are non-empty"))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AccumulateStats {
    pub entities_counted: u64,
    pub names_skipped_empty: u64,
}

/// Counts every (entity, distinct cleaned name) pair once, under the
/// entity's sex.
pub fn accumulate<'a, I>(records: I, opts: &NormalizeOptions) -> (GenderTable, AccumulateStats)
where
    I: IntoIterator<Item = &'a HumanEntityRecord>,
{
    let mut table = GenderTable::new();
    let mut stats = AccumulateStats::default();
    for record in records {
        let mut names = BTreeSet::new();
        for raw in &record.given_names {
            match clean(raw, opts) {
                Some(name) => {
                    names.insert(name.into_string());
                }
                None => stats.names_skipped_empty += 1,
            }
        }
        if names.is_empty() {
            continue;
        }
        stats.entities_counted += 1;
        for name in names {
            table.counts.entry(name).or_default().bump(record.sex);
        }
    }
    table.provenance.entity_count = stats.entities_counted;
    (table, stats)
}

/// Sums counts per name and unions provenance.
pub fn merge_tables(mut a: GenderTable, b: GenderTable) -> GenderTable {
    for (name, counts) in b.counts {
        a.insert_counts(name, counts);
    }
    a.provenance.dumps.extend(b.provenance.dumps);
    a.provenance.dump_dates.extend(b.provenance.dump_dates);
    a.provenance.entity_count += b.provenance.entity_count;
    a
}

pub fn write_table<W: Write + ?Sized>(w: &mut W, table: &GenderTable) -> io::Result<()> {
    writeln!(w, "# format_version={TABLE_FORMAT_VERSION}")?;
    for dump in &table.provenance.dumps {
        writeln!(w, "# dump={dump}")?;
    }
    for date in &table.provenance.dump_dates {
        writeln!(w, "# dump_date={date}")?;
    }
    writeln!(w, "# entities={}", table.provenance.entity_count)?;
    writeln!(w, "# names={}", table.len())?;
    writeln!(w, "# columns=name\tmale\tfemale")?;
    for (name, c) in table.iter() {
        writeln!(w, "{name}\t{}\t{}", c.male, c.female)?;
    }
    Ok(())
}

fn valid_key(name: &str) -> bool {
    !name.is_empty()
        && name.split(' ').all(|t| {
            !t.is_empty()
                && t.bytes()
                    .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
        })
}

pub fn read_table<R: BufRead>(reader: R) -> Result<GenderTable> {
    let mut table = GenderTable::new();
    let mut previous: Option<String> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if let Some(meta) = line.strip_prefix('#') {
            if let Some((k, v)) = meta.trim().split_once('=') {
                match k {
                    "format_version" if v != TABLE_FORMAT_VERSION.to_string() => {
                        return Err(Error::format(format!(
                            "unsupported table format_version {v}"
                        )))
                    }
                    "dump" => {
                        table.provenance.dumps.insert(v.to_string());
                    }
                    "dump_date" => {
                        table.provenance.dump_dates.insert(v.to_string());
                    }
                    "entities" => {
                        table.provenance.entity_count = v
                            .parse()
                            .map_err(|_| Error::format(format!("bad entities count {v:?}")))?;
                    }
                    _ => {}
                }
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let bad = |why: &str| Error::format(format!("table line {}: {why}: {line:?}", idx + 1));
        let cols: Vec<&str> = line.split('\t').collect();
        let [name, male, female] = cols[..] else {
            return Err(bad("expected 3 columns"));
        };
        if !valid_key(name) {
            return Err(bad("name is not a cleaned name"));
        }
        let male: u64 = male.parse().map_err(|_| bad("bad male count"))?;
        let female: u64 = female.parse().map_err(|_| bad("bad female count"))?;
        if male + female == 0 {
            return Err(bad("zero total"));
        }
        if let Some(prev) = &previous {
            if prev.as_str().cmp(name) != Ordering::Less {
                return Err(bad("names not strictly sorted"));
            }
        }
        previous = Some(name.to_string());
        table
            .counts
            .insert(name.to_string(), SexCounts::new(male, female));
    }
    Ok(table)
}

pub fn read_table_file(path: &std::path::Path) -> Result<GenderTable> {
    read_table(crate::io::open_input(path)?)
}
