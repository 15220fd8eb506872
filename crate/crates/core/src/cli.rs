//! `onomast` command line: stage subcommands, the chained `pipeline`, and
//! run manifests.
//!
//! Settings resolve as command-line flag, then `--config` file
//! (`key=value` lines), then built-in default.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

use crate::analytics::{self, Dataset, TransformMode};
use crate::biblio::{self, IngestOptions, Role};
use crate::error::{Error, Result};
use crate::extract::{self, DumpSource, EntitiesHeader, ExtractOptions};
use crate::io::{sha256_file, write_atomic};
use crate::normalize::{clean, NormalizeOptions};
use crate::table;

pub const VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    " (formats: entities 1, table 1, merged 1, analysis 1)"
);

#[derive(Debug, Parser)]
#[command(name = "onomast", version = VERSION, about = "First-name genderedness and citation distribution pipeline")]
pub struct Cli {
    /// `key=value` configuration file; flags take precedence over it
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Worker threads for dump parsing
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extract human entity records from a truthy N-Triples dump
    Extract(ExtractArgs),
    /// Build the name genderedness table from entity records
    BuildTable(BuildTableArgs),
    /// Clean names read one per line from standard input
    Normalize(NormalizeArgs),
    /// Attach genderedness to authorship records and aggregate per role
    Merge(MergeArgs),
    /// Cumulative distributions and concentration summary
    Analyze(AnalyzeArgs),
    /// Run every stage in sequence
    Pipeline(PipelineArgs),
}

#[derive(Debug, Args, Default)]
pub struct ExtractArgs {
    /// Dump path (plain or gzip), or `-` for standard input
    #[arg(long)]
    pub dump: Option<PathBuf>,
    #[arg(long)]
    pub labels_lang: Option<String>,
    /// Entity TSV destination; standard output when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub stats_out: Option<PathBuf>,
}

#[derive(Debug, Args, Default)]
pub struct BuildTableArgs {
    #[arg(long)]
    pub entities: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub initials_max_len: Option<usize>,
    /// Date of the dump, recorded in the table header
    #[arg(long)]
    pub dump_date: Option<String>,
}

#[derive(Debug, Args, Default)]
pub struct NormalizeArgs {
    #[arg(long)]
    pub initials_max_len: Option<usize>,
}

#[derive(Debug, Args, Default)]
pub struct MergeArgs {
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long)]
    pub authors: Option<PathBuf>,
    /// A role name, or `all` to write one file per role into `--out`
    #[arg(long)]
    pub role: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub initials_max_len: Option<usize>,
    #[arg(long)]
    pub year_min: Option<i32>,
    #[arg(long)]
    pub year_max: Option<i32>,
}

#[derive(Debug, Args, Default)]
pub struct AnalyzeArgs {
    #[arg(long, num_args = 1..)]
    pub merged: Vec<PathBuf>,
    /// Genderedness table, analyzed as an extra `wikidata` dataset
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[arg(long)]
    pub transform: Option<String>,
}

#[derive(Debug, Args, Default)]
pub struct PipelineArgs {
    #[arg(long)]
    pub dump: Option<PathBuf>,
    #[arg(long)]
    pub authors: Option<PathBuf>,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[arg(long)]
    pub labels_lang: Option<String>,
    #[arg(long)]
    pub initials_max_len: Option<usize>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub year_min: Option<i32>,
    #[arg(long)]
    pub year_max: Option<i32>,
    #[arg(long)]
    pub role: Option<String>,
    #[arg(long)]
    pub transform: Option<String>,
    #[arg(long)]
    pub dump_date: Option<String>,
}

/// Fully resolved settings shared by all stages.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub dump_path: Option<PathBuf>,
    pub labels_language: String,
    pub initials_max_len: usize,
    pub alpha: Ratio<u64>,
    pub alpha_text: String,
    pub year_range: Option<(i32, i32)>,
    pub roles: Vec<Role>,
    pub role_text: String,
    pub out_dir: Option<PathBuf>,
    pub transform: TransformMode,
    pub threads: usize,
    pub dump_date: Option<String>,
}

impl PipelineConfig {
    pub fn normalize_options(&self) -> NormalizeOptions {
        NormalizeOptions {
            initials_max_len: self.initials_max_len,
        }
    }

    /// Flattened view recorded in manifests.
    pub fn snapshot(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        if let Some(p) = &self.dump_path {
            m.insert("dump".into(), p.display().to_string());
        }
        m.insert("labels_lang".into(), self.labels_language.clone());
        m.insert("initials_max_len".into(), self.initials_max_len.to_string());
        m.insert("alpha".into(), self.alpha_text.clone());
        if let Some((lo, hi)) = self.year_range {
            m.insert("year_min".into(), lo.to_string());
            m.insert("year_max".into(), hi.to_string());
        }
        m.insert("role".into(), self.role_text.clone());
        if let Some(p) = &self.out_dir {
            m.insert("out_dir".into(), p.display().to_string());
        }
        m.insert("transform".into(), self.transform.as_str().into());
        m.insert("threads".into(), self.threads.to_string());
        if let Some(d) = &self.dump_date {
            m.insert("dump_date".into(), d.clone());
        }
        m
    }
}

const CONFIG_KEYS: [&str; 10] = [
    "labels_lang",
    "initials_max_len",
    "alpha",
    "year_min",
    "year_max",
    "role",
    "transform",
    "threads",
    "dump_date",
    "dump",
];

/// Parses a `key=value` config file. Blank lines and `#` comments are
/// ignored; unknown keys are an error.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("config line {}: expected key=value", idx + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        if !CONFIG_KEYS.contains(&k) {
            return Err(Error::Usage(format!(
                "config line {}: unknown key {k:?}",
                idx + 1
            )));
        }
        out.insert(k.to_string(), v.to_string());
    }
    Ok(out)
}

/// Raw per-setting values as given on the command line.
#[derive(Debug, Default)]
struct Flags {
    dump: Option<PathBuf>,
    labels_lang: Option<String>,
    initials_max_len: Option<usize>,
    alpha: Option<String>,
    year_min: Option<i32>,
    year_max: Option<i32>,
    role: Option<String>,
    out_dir: Option<PathBuf>,
    transform: Option<String>,
    threads: Option<usize>,
    dump_date: Option<String>,
}

fn pick<T: std::str::FromStr>(
    flag: Option<T>,
    file: &BTreeMap<String, String>,
    key: &str,
) -> Result<Option<T>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match file.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Error::Usage(format!("config value for {key} is invalid: {v:?}"))),
    }
}

fn parse_roles(text: &str) -> Result<Vec<Role>> {
    if text.eq_ignore_ascii_case("all") {
        Ok(Role::ALL.to_vec())
    } else {
        text.parse::<Role>()
            .map(|r| vec![r])
            .map_err(|_| Error::Usage(format!("unknown role {text:?}")))
    }
}

fn resolve(flags: Flags, file: &BTreeMap<String, String>) -> Result<PipelineConfig> {
    let alpha_text = pick(flags.alpha, file, "alpha")?.unwrap_or_else(|| "0.005".into());
    let alpha = analytics::parse_decimal(&alpha_text)?;
    analytics::check_alpha(alpha)?;

    let year_min = pick(flags.year_min, file, "year_min")?;
    let year_max = pick(flags.year_max, file, "year_max")?;
    let year_range = match (year_min, year_max) {
        (None, None) => None,
        (lo, hi) => {
            let (lo, hi) = (lo.unwrap_or(i32::MIN), hi.unwrap_or(i32::MAX));
            if lo > hi {
                return Err(Error::contract(format!("year range {lo}..{hi} is empty")));
            }
            Some((lo, hi))
        }
    };

    let role_text = pick(flags.role, file, "role")?.unwrap_or_else(|| "all".into());
    let roles = parse_roles(&role_text)?;
    let transform = pick(flags.transform, file, "transform")?
        .map(|t: String| t.parse())
        .transpose()?
        .unwrap_or_default();
    let threads = pick(flags.threads, file, "threads")?.unwrap_or(1);
    if threads == 0 {
        return Err(Error::contract("--threads must be at least 1"));
    }

    Ok(PipelineConfig {
        dump_path: pick(flags.dump, file, "dump")?,
        labels_language: pick(flags.labels_lang, file, "labels_lang")?
            .unwrap_or_else(|| "en".into()),
        initials_max_len: pick(flags.initials_max_len, file, "initials_max_len")?.unwrap_or(3),
        alpha,
        alpha_text,
        year_range,
        roles,
        role_text,
        out_dir: flags.out_dir,
        transform,
        threads,
        dump_date: pick(flags.dump_date, file, "dump_date")?,
    })
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::Usage(format!("missing required flag --{flag}")))
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Provenance record written next to every run's outputs.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub config: BTreeMap<String, String>,
    pub stages: serde_json::Value,
    pub started_at: String,
    pub finished_at: String,
}

fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn digest(path: &Path) -> Result<InputDigest> {
    Ok(InputDigest {
        path: path.display().to_string(),
        sha256: sha256_file(path)?,
    })
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    write_atomic(path, |w| {
        serde_json::to_writer_pretty(&mut *w, value).map_err(io::Error::from)?;
        writeln!(w)?;
        Ok(())
    })
}

fn manifest_path_for(out: &Path) -> PathBuf {
    let mut name = out.file_name().map(OsString::from).unwrap_or_default();
    name.push(".manifest.json");
    out.with_file_name(name)
}

struct Run<'a> {
    command: &'a str,
    config: &'a PipelineConfig,
    started_at: String,
    inputs: Vec<InputDigest>,
    stages: serde_json::Map<String, serde_json::Value>,
}

impl<'a> Run<'a> {
    fn new(command: &'a str, config: &'a PipelineConfig) -> Self {
        Run {
            command,
            config,
            started_at: now(),
            inputs: Vec::new(),
            stages: serde_json::Map::new(),
        }
    }

    fn stage(&mut self, name: &str, stats: serde_json::Value) {
        self.stages.insert(name.to_string(), stats);
    }

    fn finish(self, path: &Path) -> Result<()> {
        let manifest = RunManifest {
            tool: "onomast",
            version: VERSION,
            command: self.command.to_string(),
            inputs: self.inputs,
            config: self.config.snapshot(),
            stages: serde_json::Value::Object(self.stages),
            started_at: self.started_at,
            finished_at: now(),
        };
        write_json(path, &manifest)
    }
}

// ---- stages -------------------------------------------------------------

/// Extracts entity records and writes them as TSV.
pub fn stage_extract(
    source: &DumpSource,
    config: &PipelineConfig,
    out: &mut dyn Write,
) -> Result<(extract::ExtractionStats, String)> {
    let opts = ExtractOptions {
        labels_lang: config.labels_language.clone(),
        threads: config.threads,
        ..Default::default()
    };
    eprintln!("extract: scanning {}", extract::dump_name(source));
    let extraction = extract::extract_dump(source, &opts)?;
    let header = EntitiesHeader {
        dump: extract::dump_name(source),
        dump_sha256: extraction.dump_sha256.clone(),
    };
    extract::write_entities(out, &header, &extraction.records)?;
    let mut err = io::stderr().lock();
    extract::write_stats_summary(&mut err, &extraction.stats)?;
    Ok((extraction.stats, extraction.dump_sha256))
}

pub fn stage_build_table(
    entities: &Path,
    out: &Path,
    config: &PipelineConfig,
) -> Result<serde_json::Value> {
    let (header, records) = extract::read_entities_file(entities)?;
    let (mut table, stats) = table::accumulate(&records, &config.normalize_options());
    if !header.dump.is_empty() {
        table
            .provenance
            .dumps
            .insert(format!("{}:sha256:{}", header.dump, header.dump_sha256));
    }
    if let Some(date) = &config.dump_date {
        table.provenance.dump_dates.insert(date.clone());
    }
    write_atomic(out, |w| Ok(table::write_table(w, &table)?))?;
    eprintln!(
        "build-table: {} names from {} entities",
        table.len(),
        stats.entities_counted
    );
    Ok(json!({
        "entities_read": records.len(),
        "entities_counted": stats.entities_counted,
        "names_skipped_empty": stats.names_skipped_empty,
        "names": table.len(),
    }))
}

/// Merges authorship records onto the table. With several roles `out` is a
/// directory receiving `<role>.tsv`; with one role it is the file itself.
pub fn stage_merge(
    table_path: &Path,
    authors: &Path,
    out: &Path,
    config: &PipelineConfig,
    as_directory: bool,
) -> Result<serde_json::Value> {
    let table = table::read_table_file(table_path)?;
    let file = std::fs::File::open(authors).map_err(|e| Error::io(authors, e))?;
    let ingest_opts = IngestOptions {
        year_range: config.year_range,
    };
    let (records, ingest_stats) = biblio::ingest(io::BufReader::new(file), &ingest_opts)?;
    let (records, article_stats) = biblio::group_articles(records);
    let (scored, merge_stats) = biblio::score_all(&records, &table, &config.normalize_options());

    let mut per_role = serde_json::Map::new();
    for &role in &config.roles {
        let ds = biblio::build_role_dataset(&scored, role);
        let path = if as_directory {
            out.join(format!("{role}.tsv"))
        } else {
            out.to_path_buf()
        };
        write_atomic(&path, |w| Ok(biblio::write_merged(w, &ds)?))?;
        let tokens: u64 = ds.buckets.values().map(|b| b.tokens).sum();
        per_role.insert(
            role.to_string(),
            json!({ "points": ds.buckets.len(), "tokens": tokens }),
        );
    }
    eprintln!(
        "merge: {} of {} authorship records scored ({} unmatched)",
        merge_stats.scored, merge_stats.records_in, merge_stats.dropped_unmatched
    );
    Ok(json!({
        "ingest": ingest_stats,
        "articles": article_stats,
        "merge": merge_stats,
        "roles": per_role,
    }))
}

pub fn stage_analyze(
    merged: &[PathBuf],
    table_path: Option<&Path>,
    out_dir: &Path,
    config: &PipelineConfig,
) -> Result<serde_json::Value> {
    let mut datasets = Vec::new();
    for path in merged {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let ds = analytics::read_merged(crate::io::open_input(path)?, &stem)?;
        datasets.push(ds);
    }
    if let Some(t) = table_path {
        datasets.push(Dataset::from_table(&table::read_table_file(t)?));
    }
    let mut seen = std::collections::BTreeSet::new();
    for ds in &datasets {
        if !seen.insert(ds.name.clone()) {
            return Err(Error::Usage(format!("dataset {:?} given twice", ds.name)));
        }
    }

    let summary = analytics::report(&datasets, config.alpha)?;
    for ds in &datasets {
        let path = out_dir.join(format!("{}.tsv", ds.name));
        write_atomic(&path, |w| {
            analytics::write_analysis(w, ds, config.transform)
        })?;
    }
    write_atomic(&out_dir.join("summary.json"), |w| {
        Ok(analytics::write_summary(w, &summary)?)
    })?;
    eprintln!(
        "analyze: {} datasets written to {}",
        datasets.len(),
        out_dir.display()
    );
    Ok(json!({
        "datasets": datasets.iter().map(|d| json!({"name": d.name, "points": d.points.len()})).collect::<Vec<_>>(),
    }))
}

// ---- subcommands --------------------------------------------------------

fn run_extract(args: ExtractArgs, config: &PipelineConfig) -> Result<()> {
    let dump = require(config.dump_path.clone(), "dump")?;
    let source = if dump.as_os_str() == "-" {
        DumpSource::Stdin
    } else {
        DumpSource::Path(dump.clone())
    };
    let mut run = Run::new("extract", config);
    let (stats, sha) = match &args.out {
        Some(out) => {
            let mut result = None;
            write_atomic(out, |w| {
                result = Some(stage_extract(&source, config, w)?);
                Ok(())
            })?;
            result.expect("extract ran")
        }
        None => {
            let stdout = io::stdout();
            let mut lock = io::BufWriter::new(stdout.lock());
            let r = stage_extract(&source, config, &mut lock)?;
            lock.flush()?;
            r
        }
    };
    if let Some(path) = &args.stats_out {
        write_json(path, &stats)?;
    }
    if let Some(out) = &args.out {
        run.inputs.push(InputDigest {
            path: dump.display().to_string(),
            sha256: sha,
        });
        run.stage(
            "extract",
            serde_json::to_value(&stats).expect("stats serialize"),
        );
        run.finish(&manifest_path_for(out))?;
    }
    Ok(())
}

fn run_build_table(args: BuildTableArgs, config: &PipelineConfig) -> Result<()> {
    let entities = require(args.entities, "entities")?;
    let out = require(args.out, "out")?;
    let mut run = Run::new("build-table", config);
    run.inputs.push(digest(&entities)?);
    let stats = stage_build_table(&entities, &out, config)?;
    run.stage("build_table", stats);
    run.finish(&manifest_path_for(&out))
}

fn run_normalize(config: &PipelineConfig) -> Result<()> {
    let opts = config.normalize_options();
    let stdin = io::stdin();
    let mut out = io::BufWriter::new(io::stdout().lock());
    for line in stdin.lock().lines() {
        let line = line?;
        let cleaned = clean(line.trim_end_matches('\r'), &opts);
        writeln!(out, "{}", cleaned.as_ref().map_or("", |c| c.as_str()))?;
    }
    out.flush()?;
    Ok(())
}

fn run_merge(args: MergeArgs, config: &PipelineConfig) -> Result<()> {
    let table_path = require(args.table, "table")?;
    let authors = require(args.authors, "authors")?;
    let out = require(args.out, "out")?;
    let as_dir = config.roles.len() > 1;
    let mut run = Run::new("merge", config);
    run.inputs.push(digest(&table_path)?);
    run.inputs.push(digest(&authors)?);
    let stats = stage_merge(&table_path, &authors, &out, config, as_dir)?;
    run.stage("merge", stats);
    let manifest = if as_dir {
        out.join("manifest.json")
    } else {
        manifest_path_for(&out)
    };
    run.finish(&manifest)
}

fn run_analyze(args: AnalyzeArgs, config: &PipelineConfig) -> Result<()> {
    let out_dir = require(config.out_dir.clone(), "out-dir")?;
    if args.merged.is_empty() && args.table.is_none() {
        return Err(Error::Usage("missing required flag --merged".into()));
    }
    let mut run = Run::new("analyze", config);
    for p in args.merged.iter().chain(args.table.iter()) {
        run.inputs.push(digest(p)?);
    }
    let stats = stage_analyze(&args.merged, args.table.as_deref(), &out_dir, config)?;
    run.stage("analyze", stats);
    run.finish(&out_dir.join("manifest.json"))
}

/// Output layout of `pipeline` under its output directory.
pub struct PipelineLayout {
    pub entities: PathBuf,
    pub table: PathBuf,
    pub merged_dir: PathBuf,
    pub analysis_dir: PathBuf,
    pub stats: PathBuf,
    pub manifest: PathBuf,
}

impl PipelineLayout {
    pub fn new(root: &Path) -> Self {
        PipelineLayout {
            entities: root.join("entities.tsv"),
            table: root.join("table.tsv"),
            merged_dir: root.join("merged"),
            analysis_dir: root.join("analysis"),
            stats: root.join("stats.json"),
            manifest: root.join("manifest.json"),
        }
    }
}

fn run_pipeline(args: PipelineArgs, config: &PipelineConfig) -> Result<()> {
    let dump = require(config.dump_path.clone(), "dump")?;
    let authors = require(args.authors, "authors")?;
    let out_dir = require(config.out_dir.clone(), "out-dir")?;
    let layout = PipelineLayout::new(&out_dir);
    let mut run = Run::new("pipeline", config);

    let source = DumpSource::Path(dump.clone());
    let mut extracted = None;
    write_atomic(&layout.entities, |w| {
        extracted = Some(stage_extract(&source, config, w)?);
        Ok(())
    })?;
    let (extract_stats, dump_sha) = extracted.expect("extract ran");
    run.inputs.push(InputDigest {
        path: dump.display().to_string(),
        sha256: dump_sha,
    });
    run.inputs.push(digest(&authors)?);
    run.stage(
        "extract",
        serde_json::to_value(&extract_stats).expect("stats serialize"),
    );

    let s = stage_build_table(&layout.entities, &layout.table, config)?;
    run.stage("build_table", s);

    let s = stage_merge(&layout.table, &authors, &layout.merged_dir, config, true)?;
    run.stage("merge", s);

    let merged: Vec<PathBuf> = config
        .roles
        .iter()
        .map(|r| layout.merged_dir.join(format!("{r}.tsv")))
        .collect();
    let s = stage_analyze(&merged, Some(&layout.table), &layout.analysis_dir, config)?;
    run.stage("analyze", s);

    write_json(
        &layout.stats,
        &serde_json::Value::Object(run.stages.clone()),
    )?;
    run.finish(&layout.manifest)
}

fn execute(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            parse_config(&text)?
        }
        None => BTreeMap::new(),
    };
    let mut flags = Flags {
        threads: cli.threads,
        ..Default::default()
    };
    match &cli.command {
        Command::Extract(a) => {
            flags.dump = a.dump.clone();
            flags.labels_lang = a.labels_lang.clone();
        }
        Command::BuildTable(a) => {
            flags.initials_max_len = a.initials_max_len;
            flags.dump_date = a.dump_date.clone();
        }
        Command::Normalize(a) => flags.initials_max_len = a.initials_max_len,
        Command::Merge(a) => {
            flags.initials_max_len = a.initials_max_len;
            flags.year_min = a.year_min;
            flags.year_max = a.year_max;
            flags.role = a.role.clone();
        }
        Command::Analyze(a) => {
            flags.alpha = a.alpha.clone();
            flags.out_dir = a.out_dir.clone();
            flags.transform = a.transform.clone();
        }
        Command::Pipeline(a) => {
            flags.dump = a.dump.clone();
            flags.labels_lang = a.labels_lang.clone();
            flags.initials_max_len = a.initials_max_len;
            flags.alpha = a.alpha.clone();
            flags.year_min = a.year_min;
            flags.year_max = a.year_max;
            flags.role = a.role.clone();
            flags.out_dir = a.out_dir.clone();
            flags.transform = a.transform.clone();
            flags.dump_date = a.dump_date.clone();
        }
    }
    let config = resolve(flags, &file)?;
    match cli.command {
        Command::Extract(a) => run_extract(a, &config),
        Command::BuildTable(a) => run_build_table(a, &config),
        Command::Normalize(_) => run_normalize(&config),
        Command::Merge(a) => run_merge(a, &config),
        Command::Analyze(a) => run_analyze(a, &config),
        Command::Pipeline(a) => run_pipeline(a, &config),
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("onomast: {e}");
            e.exit_code()
        }
    }
}
