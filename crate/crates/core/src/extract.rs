//! Two-pass extraction of (given names, sex) records for human entities
//! from a Wikidata truthy N-Triples dump.
//!
//! Pass 1 collects humanness markers, given-name links and sex statements.
//! Pass 2 resolves labels, but only for the given-name items seen in pass 1.
//! Each pass reads the dump in line-aligned chunks; lines inside a chunk are
//! parsed in parallel into partial accumulators that are merged afterwards.
//! Every accumulator is a commutative monoid, so the result does not depend
//! on chunk boundaries or thread count.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::{decode_maybe_gzip, HashingReader};
use crate::ntriples::{classify, Object, RawLine, Triple};

pub const ENTITY_PREFIX: &str = "http://www.wikidata.org/entity/";
pub const DIRECT_CLAIM_PREFIX: &str = "http://www.wikidata.org/prop/direct/";
pub const RDFS_LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";

const INSTANCE_OF: &str = "P31";
const GIVEN_NAME: &str = "P735";
const SEX_OR_GENDER: &str = "P21";
const HUMAN: Qid = Qid(5);
const MALE: Qid = Qid(6_581_097);
const FEMALE: Qid = Qid(6_581_072);

pub const ENTITIES_FORMAT_VERSION: u32 = 1;

/// Wikidata item identifier (`Q` followed by digits).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Qid(pub u64);

impl Qid {
    /// Parses `Q123`.
    pub fn parse(s: &str) -> Option<Qid> {
        let digits = s.strip_prefix('Q')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse().ok().map(Qid)
    }

    /// Parses `http://www.wikidata.org/entity/Q123`.
    pub fn from_iri(iri: &str) -> Option<Qid> {
        Qid::parse(iri.strip_prefix(ENTITY_PREFIX)?)
    }
}

impl fmt::Display for Qid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sex {
    Male,
    Female,
}

impl Sex {
    pub fn code(self) -> char {
        match self {
            Sex::Male => 'M',
            Sex::Female => 'F',
        }
    }

    pub fn from_code(s: &str) -> Option<Sex> {
        match s {
            "M" => Some(Sex::Male),
            "F" => Some(Sex::Female),
            _ => None,
        }
    }

    fn bit(self) -> u8 {
        match self {
            Sex::Male => 1,
            Sex::Female => 2,
        }
    }
}

/// A statement from the dump that the extraction cares about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelevantFact {
    HumanMarker(Qid),
    GivenNameLink {
        entity: Qid,
        name_item: Qid,
    },
    Sex(Qid, Sex),
    NameLabel {
        name_item: Qid,
        label: String,
        lang: String,
    },
}

/// Maps a triple onto the facts used downstream; everything else is `None`.
///
/// Labels are returned for any item subject; pass 2 narrows them down to
/// given-name items.
pub fn filter_relevant(triple: &Triple<'_>) -> Option<RelevantFact> {
    let subject = Qid::from_iri(&triple.subject)?;
    if triple.predicate == RDFS_LABEL {
        let Object::Literal(lit) = &triple.object else {
            return None;
        };
        let lang = lit.lang.as_ref()?;
        return Some(RelevantFact::NameLabel {
            name_item: subject,
            label: lit.lexical.to_string(),
            lang: lang.to_string(),
        });
    }

    let property = triple.predicate.strip_prefix(DIRECT_CLAIM_PREFIX)?;
    let Object::Iri(object) = &triple.object else {
        return None;
    };
    let object = Qid::from_iri(object)?;
    match property {
        INSTANCE_OF if object == HUMAN => Some(RelevantFact::HumanMarker(subject)),
        GIVEN_NAME => Some(RelevantFact::GivenNameLink {
            entity: subject,
            name_item: object,
        }),
        SEX_OR_GENDER if object == MALE => Some(RelevantFact::Sex(subject, Sex::Male)),
        SEX_OR_GENDER if object == FEMALE => Some(RelevantFact::Sex(subject, Sex::Female)),
        _ => None,
    }
}

/// One extracted human with their resolved given-name labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HumanEntityRecord {
    pub entity: Qid,
    pub given_names: BTreeSet<String>,
    pub sex: Sex,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExtractionStats {
    pub lines_read: u64,
    pub lines_skipped_malformed: u64,
    pub triples_matched: u64,
    pub human_entities: u64,
    pub entities_emitted: u64,
    pub entities_dropped_no_label: u64,
    pub entities_dropped_conflicting_sex: u64,
    pub entities_dropped_no_sex: u64,
    /// How many given-name items had their label taken from each language.
    pub label_languages: BTreeMap<String, u64>,
}

/// Pass-1 state: humanness, given-name links and sex bits per subject.
#[derive(Debug, Default, Clone)]
pub struct FactAccumulator {
    humans: HashSet<Qid>,
    given_names: HashMap<Qid, Vec<Qid>>,
    sexes: HashMap<Qid, u8>,
    matched: u64,
}

impl FactAccumulator {
    pub fn add(&mut self, fact: RelevantFact) {
        match fact {
            RelevantFact::HumanMarker(q) => {
                self.humans.insert(q);
            }
            RelevantFact::GivenNameLink { entity, name_item } => {
                self.given_names.entry(entity).or_default().push(name_item);
            }
            RelevantFact::Sex(q, sex) => {
                *self.sexes.entry(q).or_default() |= sex.bit();
            }
            RelevantFact::NameLabel { .. } => return,
        }
        self.matched += 1;
    }

    pub fn merge(mut self, mut other: FactAccumulator) -> FactAccumulator {
        if self.humans.len() + self.given_names.len() < other.humans.len() + other.given_names.len()
        {
            std::mem::swap(&mut self, &mut other);
        }
        self.humans.extend(other.humans);
        for (q, names) in other.given_names {
            self.given_names.entry(q).or_default().extend(names);
        }
        for (q, bits) in other.sexes {
            *self.sexes.entry(q).or_default() |= bits;
        }
        self.matched += other.matched;
        self
    }

    /// Given-name items linked from human entities.
    pub fn wanted_name_items(&self) -> HashSet<Qid> {
        self.humans
            .iter()
            .filter_map(|q| self.given_names.get(q))
            .flatten()
            .copied()
            .collect()
    }
}

/// Best label seen so far for one given-name item. Smaller is better.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct LabelChoice {
    rank: u8,
    lang: String,
    label: String,
}

#[derive(Debug, Default)]
struct LabelAccumulator {
    best: HashMap<Qid, LabelChoice>,
    matched: u64,
}

impl LabelAccumulator {
    fn offer(&mut self, item: Qid, choice: LabelChoice) {
        self.matched += 1;
        self.choose(item, choice);
    }

    fn choose(&mut self, item: Qid, choice: LabelChoice) {
        match self.best.get_mut(&item) {
            Some(current) if *current <= choice => {}
            Some(current) => *current = choice,
            None => {
                self.best.insert(item, choice);
            }
        }
    }

    fn merge(mut self, other: LabelAccumulator) -> LabelAccumulator {
        for (item, choice) in other.best {
            self.choose(item, choice);
        }
        self.matched += other.matched;
        self
    }
}

fn label_rank(lang: &str, preferred: &str) -> u8 {
    if lang == preferred {
        0
    } else if lang == "mul" {
        1
    } else {
        2
    }
}

/// Builds records from both passes' state. Output is sorted by entity.
pub fn assemble_entities(
    facts: &FactAccumulator,
    labels: &HashMap<Qid, (String, String)>,
) -> (Vec<HumanEntityRecord>, ExtractionStats) {
    let mut stats = ExtractionStats {
        human_entities: facts.humans.len() as u64,
        ..Default::default()
    };
    let mut humans: Vec<Qid> = facts.humans.iter().copied().collect();
    humans.sort_unstable();

    let mut used_items = BTreeSet::new();
    let mut records = Vec::new();
    for entity in humans {
        let sex = match facts.sexes.get(&entity).copied().unwrap_or(0) {
            1 => Sex::Male,
            2 => Sex::Female,
            3 => {
                stats.entities_dropped_conflicting_sex += 1;
                continue;
            }
            _ => {
                stats.entities_dropped_no_sex += 1;
                continue;
            }
        };
        let mut given_names = BTreeSet::new();
        for item in facts.given_names.get(&entity).into_iter().flatten() {
            if let Some((label, _)) = labels.get(item) {
                given_names.insert(label.clone());
                used_items.insert(*item);
            }
        }
        if given_names.is_empty() {
            stats.entities_dropped_no_label += 1;
            continue;
        }
        records.push(HumanEntityRecord {
            entity,
            given_names,
            sex,
        });
    }
    stats.entities_emitted = records.len() as u64;
    for item in used_items {
        let (_, lang) = &labels[&item];
        *stats.label_languages.entry(lang.clone()).or_default() += 1;
    }
    (records, stats)
}

/// Where the dump comes from.
#[derive(Debug, Clone)]
pub enum DumpSource {
    Path(PathBuf),
    Stdin,
}

#[derive(Debug, Clone)]
pub struct ExtractOptions {
    pub labels_lang: String,
    pub threads: usize,
    pub chunk_bytes: usize,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            labels_lang: "en".to_string(),
            threads: 1,
            chunk_bytes: 8 << 20,
        }
    }
}

#[derive(Debug)]
pub struct Extraction {
    pub records: Vec<HumanEntityRecord>,
    pub stats: ExtractionStats,
    /// Hex SHA-256 of the raw (possibly compressed) dump bytes.
    pub dump_sha256: String,
}

/// Line count and decoded byte count of one pass, compared across passes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct PassShape {
    lines: u64,
    bytes: u64,
}

/// Runs both passes over the dump and assembles entity records.
pub fn extract_dump(source: &DumpSource, opts: &ExtractOptions) -> Result<Extraction> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.max(1))
        .build()
        .map_err(|e| Error::Usage(format!("cannot build thread pool: {e}")))?;

    // stdin cannot be rewound, so it is spooled to disk during pass 1
    let mut spool = None;
    let (raw, digest): (Box<dyn io::Read + Send>, _) = match source {
        DumpSource::Path(p) => {
            let file = std::fs::File::open(p).map_err(|e| Error::io(p, e))?;
            let (r, d) = HashingReader::new(file);
            (Box::new(r), d)
        }
        DumpSource::Stdin => {
            let tmp = tempfile::NamedTempFile::new()?;
            let tee = TeeReader {
                inner: io::stdin(),
                copy: io::BufWriter::new(tmp.reopen()?),
            };
            spool = Some(tmp);
            let (r, d) = HashingReader::new(tee);
            (Box::new(r), d)
        }
    };

    let reader = decode_maybe_gzip(raw)?;
    let mut parse_stats = (0u64, 0u64);
    let (facts, shape1) = scan_chunks(
        reader,
        opts.chunk_bytes,
        &pool,
        || (FactAccumulator::default(), 0u64),
        |(acc, malformed), raw| match classify(raw) {
            RawLine::Empty => {}
            RawLine::Malformed => *malformed += 1,
            RawLine::Triple(t) => {
                if let Some(fact) = filter_relevant(&t) {
                    acc.add(fact);
                }
            }
        },
        |(a, ma), (b, mb)| (a.merge(b), ma + mb),
    )?;
    let (facts, malformed) = facts;
    parse_stats.0 = shape1.lines;
    parse_stats.1 = malformed;
    let dump_sha256 = digest.hex();

    let wanted = facts.wanted_name_items();
    let preferred = opts.labels_lang.as_str();
    let reader: Box<dyn BufRead + Send> = match (source, &spool) {
        (DumpSource::Path(p), _) => crate::io::open_input(p)?,
        (DumpSource::Stdin, Some(tmp)) => decode_maybe_gzip(tmp.reopen()?)?,
        (DumpSource::Stdin, None) => unreachable!("stdin is always spooled"),
    };
    let label_marker = RDFS_LABEL.as_bytes();
    let (labels, shape2) = scan_chunks(
        reader,
        opts.chunk_bytes,
        &pool,
        LabelAccumulator::default,
        |acc, raw| {
            if !contains(raw, label_marker) {
                return;
            }
            let RawLine::Triple(t) = classify(raw) else {
                return;
            };
            if let Some(RelevantFact::NameLabel {
                name_item,
                label,
                lang,
            }) = filter_relevant(&t)
            {
                if wanted.contains(&name_item) {
                    let rank = label_rank(&lang, preferred);
                    acc.offer(name_item, LabelChoice { rank, lang, label });
                }
            }
        },
        LabelAccumulator::merge,
    )?;
    if shape1 != shape2 {
        return Err(Error::Inconsistent(format!(
            "pass 1 read {} lines / {} bytes but pass 2 read {} lines / {} bytes",
            shape1.lines, shape1.bytes, shape2.lines, shape2.bytes
        )));
    }

    let resolved: HashMap<Qid, (String, String)> = labels
        .best
        .into_iter()
        .map(|(q, c)| (q, (c.label, c.lang)))
        .collect();
    let (records, mut stats) = assemble_entities(&facts, &resolved);
    stats.lines_read = parse_stats.0;
    stats.lines_skipped_malformed = parse_stats.1;
    stats.triples_matched = facts.matched + labels.matched;
    Ok(Extraction {
        records,
        stats,
        dump_sha256,
    })
}

struct TeeReader<R, W> {
    inner: R,
    copy: W,
}

impl<R: io::Read, W: Write> io::Read for TeeReader<R, W> {
    fn read(&mut self, buf: &mut [u8]) -> io::Result<usize> {
        let n = self.inner.read(buf)?;
        if n == 0 {
            self.copy.flush()?;
        } else {
            self.copy.write_all(&buf[..n])?;
        }
        Ok(n)
    }
}

fn contains(haystack: &[u8], needle: &[u8]) -> bool {
    haystack.windows(needle.len()).any(|w| w == needle)
}

/// Reads line-aligned chunks of roughly `chunk_bytes` and folds every line
/// of a chunk in parallel. Memory is one chunk plus the accumulators.
fn scan_chunks<A, I, F, M>(
    mut reader: Box<dyn BufRead + Send>,
    chunk_bytes: usize,
    pool: &rayon::ThreadPool,
    init: I,
    per_line: F,
    merge: M,
) -> Result<(A, PassShape)>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[u8]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let mut total = init();
    let mut shape = PassShape::default();
    let mut chunk: Vec<u8> = Vec::with_capacity(chunk_bytes + 4096);
    loop {
        chunk.clear();
        while chunk.len() < chunk_bytes {
            if reader.read_until(b'\n', &mut chunk)? == 0 {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        shape.bytes += chunk.len() as u64;
        let body = chunk.strip_suffix(b"\n").unwrap_or(&chunk);
        let part = pool.install(|| {
            body.par_split(|&b| b == b'\n')
                .fold(
                    || (init(), 0u64),
                    |(mut acc, n), line| {
                        per_line(&mut acc, line);
                        (acc, n + 1)
                    },
                )
                .reduce(|| (init(), 0u64), |(a, na), (b, nb)| (merge(a, b), na + nb))
        });
        shape.lines += part.1;
        total = merge(total, part.0);
    }
    Ok((total, shape))
}

/// Replaces the characters that would break the entities TSV layout.
fn sanitize_name(name: &str) -> String {
    name.chars()
        .map(|c| {
            if matches!(c, ';' | '\t' | '\n' | '\r') {
                ' '
            } else {
                c
            }
        })
        .collect()
}

/// Header metadata of an entities file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EntitiesHeader {
    pub dump: String,
    pub dump_sha256: String,
}

/// Writes `qid<TAB>M|F<TAB>name1;name2` lines after a `#` header block.
pub fn write_entities<W: Write + ?Sized>(
    w: &mut W,
    header: &EntitiesHeader,
    records: &[HumanEntityRecord],
) -> io::Result<()> {
    writeln!(w, "# format_version={ENTITIES_FORMAT_VERSION}")?;
    writeln!(w, "# dump={}", header.dump)?;
    writeln!(w, "# dump_sha256={}", header.dump_sha256)?;
    for r in records {
        let names: Vec<String> = r.given_names.iter().map(|n| sanitize_name(n)).collect();
        writeln!(w, "{}\t{}\t{}", r.entity, r.sex.code(), names.join(";"))?;
    }
    Ok(())
}

/// Reads an entities file written by [`write_entities`].
pub fn read_entities<R: BufRead>(reader: R) -> Result<(EntitiesHeader, Vec<HumanEntityRecord>)> {
    let mut header = EntitiesHeader::default();
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if let Some(meta) = line.strip_prefix('#') {
            if let Some((k, v)) = meta.trim().split_once('=') {
                match k {
                    "dump" => header.dump = v.to_string(),
                    "dump_sha256" => header.dump_sha256 = v.to_string(),
                    _ => {}
                }
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let bad = || Error::format(format!("entities line {}: {line:?}", idx + 1));
        let mut cols = line.split('\t');
        let (Some(qid), Some(sex), Some(names), None) =
            (cols.next(), cols.next(), cols.next(), cols.next())
        else {
            return Err(bad());
        };
        let entity = Qid::parse(qid).ok_or_else(bad)?;
        let sex = Sex::from_code(sex).ok_or_else(bad)?;
        let given_names: BTreeSet<String> = names
            .split(';')
            .filter(|n| !n.is_empty())
            .map(str::to_string)
            .collect();
        if given_names.is_empty() {
            return Err(bad());
        }
        records.push(HumanEntityRecord {
            entity,
            given_names,
            sex,
        });
    }
    Ok((header, records))
}

/// Human-readable stats block for standard error.
pub fn write_stats_summary<W: Write>(w: &mut W, stats: &ExtractionStats) -> io::Result<()> {
    writeln!(w, "lines read:                  {}", stats.lines_read)?;
    writeln!(
        w,
        "malformed lines skipped:     {}",
        stats.lines_skipped_malformed
    )?;
    writeln!(w, "relevant triples:            {}", stats.triples_matched)?;
    writeln!(w, "human entities:              {}", stats.human_entities)?;
    writeln!(w, "entities emitted:            {}", stats.entities_emitted)?;
    writeln!(
        w,
        "dropped (no given name):     {}",
        stats.entities_dropped_no_label
    )?;
    writeln!(
        w,
        "dropped (conflicting sex):   {}",
        stats.entities_dropped_conflicting_sex
    )?;
    writeln!(
        w,
        "dropped (no tracked sex):    {}",
        stats.entities_dropped_no_sex
    )?;
    for (lang, n) in &stats.label_languages {
        writeln!(w, "labels from {lang:<16} {n}")?;
    }
    Ok(())
}

pub fn dump_name(source: &DumpSource) -> String {
    match source {
        DumpSource::Path(p) => p
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| p.display().to_string()),
        DumpSource::Stdin => "-".to_string(),
    }
}

pub fn stats_to_json(stats: &ExtractionStats) -> String {
    serde_json::to_string_pretty(stats).expect("stats serialize")
}

pub fn read_entities_file(path: &Path) -> Result<(EntitiesHeader, Vec<HumanEntityRecord>)> {
    read_entities(crate::io::open_input(path)?)
}
