//! Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Set ONOMAST_FULL_TABLE to a table built from a real truthy dump to run the
//! full-scale magnitude check.

mod oracle;

use std::collections::BTreeSet;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use onomast::analytics::{
    arcsine_x, cumulative_difference, cumulative_share, share_at_least, sqrt_y, top_share,
    transform_axes, Measure, SpectrumPoint,
};
use onomast::biblio::{attach_genderedness, AuthorshipRecord, Role};
use onomast::extract::{HumanEntityRecord, Qid, Sex};
use onomast::normalize::{clean, NormalizeOptions};
use onomast::ntriples::{Literal, Object, Triple, TripleReader};
use onomast::table::{
    accumulate, merge_tables, read_table_file, score, GenderTable, Genderedness, SexCounts,
};

type Outcome = Result<String, String>;

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_onomast")
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed < budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, budget {budget:.0?}"))
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

// 1

fn golden_normalization() -> Outcome {
    let start = Instant::now();
    let text = fs::read_to_string(fixture("normalize_golden.tsv")).map_err(|e| e.to_string())?;
    let opts = NormalizeOptions::default();
    let mut cases = 0;
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
    {
        let (input, expected) = line
            .split_once('\t')
            .ok_or_else(|| format!("bad corpus line {line:?}"))?;
        let got = clean(input, &opts)
            .map(|c| c.into_string())
            .unwrap_or_default();
        ensure!(got == expected, "{input:?}: got {got:?}, want {expected:?}");
        let again = clean(&got, &opts)
            .map(|c| c.into_string())
            .unwrap_or_default();
        ensure!(
            again == got,
            "not idempotent on {input:?}: {got:?} -> {again:?}"
        );
        cases += 1;
    }
    ensure!(cases == 200, "corpus has {cases} cases, want 200");
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{cases} cases, {elapsed:.2?}"))
}

// 2

fn count() -> impl Strategy<Value = u64> {
    prop_oneof![Just(0u64), 0u64..10, 0u64..1_000_000_000]
}

fn score_exactness() -> Outcome {
    let start = Instant::now();
    let mut runner = TestRunner::new(Config {
        cases: 10_000,
        max_global_rejects: 100_000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(count(), count(), 1u64..10_000), |(m, f, k)| {
            prop_assume!(m + f > 0);
            let g = score(SexCounts::new(m, f)).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(
                g.as_ratio() >= Ratio::from_integer(0) && g.as_ratio() <= Ratio::from_integer(1)
            );
            prop_assert!((0.0..=1.0).contains(&g.to_f64()));
            prop_assert_eq!(g.is_zero(), m == 0);
            prop_assert_eq!(g.is_one(), f == 0);
            let scaled = score(SexCounts::new(k * m, k * f)).unwrap();
            prop_assert_eq!(
                (scaled.numerator(), scaled.denominator()),
                (g.numerator(), g.denominator())
            );
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("10000 pairs, {elapsed:.2?}"))
}

// 3

const NAME_POOL: [&str; 12] = [
    "mary",
    "jane",
    "mary jane",
    "robert",
    "ali",
    "kim",
    "jean",
    "jean pierre",
    "andrea",
    "sasha",
    "noa",
    "eitan",
];

fn entities() -> impl Strategy<Value = Vec<HumanEntityRecord>> {
    prop::collection::vec(
        (
            1u64..1_000_000,
            prop::collection::btree_set(0..NAME_POOL.len(), 1..3),
            any::<bool>(),
        ),
        0..=1000,
    )
    .prop_map(|v| {
        v.into_iter()
            .map(|(q, idx, male)| HumanEntityRecord {
                entity: Qid(q),
                given_names: idx.into_iter().map(|i| NAME_POOL[i].to_string()).collect(),
                sex: if male { Sex::Male } else { Sex::Female },
            })
            .collect()
    })
}

fn recount(records: &[HumanEntityRecord]) -> std::collections::BTreeMap<String, (u64, u64)> {
    let mut m = std::collections::BTreeMap::new();
    for r in records {
        for n in &r.given_names {
            let slot: &mut (u64, u64) = m.entry(n.clone()).or_default();
            match r.sex {
                Sex::Male => slot.0 += 1,
                Sex::Female => slot.1 += 1,
            }
        }
    }
    m
}

fn as_map(t: &GenderTable) -> std::collections::BTreeMap<String, (u64, u64)> {
    t.iter()
        .map(|(n, c)| (n.to_string(), (c.male, c.female)))
        .collect()
}

fn merge_algebra() -> Outcome {
    let start = Instant::now();
    let opts = NormalizeOptions::default();
    let mut runner = TestRunner::new(Config {
        cases: 256,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (
        entities(),
        entities(),
        entities(),
        any::<prop::sample::Index>(),
    );
    runner
        .run(&strategy, |(a, b, c, cut)| {
            let (ta, _) = accumulate(&a, &opts);
            let (tb, _) = accumulate(&b, &opts);
            let (tc, _) = accumulate(&c, &opts);
            prop_assert_eq!(
                merge_tables(ta.clone(), tb.clone()),
                merge_tables(tb.clone(), ta.clone())
            );
            prop_assert_eq!(
                merge_tables(merge_tables(ta.clone(), tb.clone()), tc.clone()),
                merge_tables(ta.clone(), merge_tables(tb.clone(), tc.clone()))
            );
            prop_assert_eq!(merge_tables(ta.clone(), GenderTable::new()), ta.clone());
            prop_assert_eq!(merge_tables(GenderTable::new(), ta.clone()), ta.clone());

            let k = if a.is_empty() {
                0
            } else {
                cut.index(a.len() + 1)
            };
            let (whole, _) = accumulate(&a, &opts);
            let (left, _) = accumulate(&a[..k], &opts);
            let (right, _) = accumulate(&a[k..], &opts);
            prop_assert_eq!(&merge_tables(left, right), &whole);
            prop_assert_eq!(as_map(&whole), recount(&a));
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("256 cases of up to 1000 entities, {elapsed:.2?}"))
}

// 4

fn two_step_merge() -> Outcome {
    let opts = NormalizeOptions::default();
    let mut table = GenderTable::new();
    table.insert_counts("mary jane", SexCounts::new(0, 10));
    table.insert_counts("mary", SexCounts::new(1, 99));
    table.insert_counts("jane", SexCounts::new(0, 500));
    let record = |name: &str| AuthorshipRecord {
        article_id: "a1".into(),
        role: Role::First,
        raw_first_name: name.into(),
        citations: 3,
        year: None,
    };
    let s = attach_genderedness(&record("Mary Jane"), &table, &opts)
        .map_err(|e| format!("mary jane unscored: {e:?}"))?;
    ensure!(
        (s.sex_counts.male, s.sex_counts.female) == (1, 109),
        "counts {:?}",
        s.sex_counts
    );
    ensure!(
        s.genderedness == Genderedness::new(1, 110).unwrap(),
        "genderedness {}",
        s.genderedness
    );

    let synth = read_table_file(&fixture("synth_table.tsv")).map_err(|e| e.to_string())?;
    let mut singles = 0;
    for (name, counts) in synth.iter().filter(|(n, _)| !n.contains(' ')) {
        let s = attach_genderedness(&record(name), &synth, &opts)
            .map_err(|e| format!("{name} unscored: {e:?}"))?;
        ensure!(s.sex_counts == counts, "{name}: counts differ");
        ensure!(
            Some(s.genderedness) == synth.score(name),
            "{name}: score differs"
        );
        singles += 1;
    }
    ensure!(singles > 0, "no single-token names in synthetic table");
    Ok(format!("(1,109) -> 1/110; {singles} single-token names"))
}

// 5

fn random_points(rng: &mut ChaCha8Rng, proportional: bool) -> Vec<SpectrumPoint> {
    let n = rng.gen_range(1..=500);
    let mut gs = BTreeSet::new();
    while gs.len() < n {
        let den = rng.gen_range(1..=2000u64);
        let num = rng.gen_range(0..=den);
        gs.insert(Genderedness::new(num, den).unwrap());
    }
    let k = rng.gen_range(1..=50u64);
    gs.into_iter()
        .map(|g| {
            let types = rng.gen_range(1..=20u64);
            let tokens = types + rng.gen_range(0..=100u64);
            let articles = if rng.gen_bool(0.1) {
                0
            } else {
                rng.gen_range(1..=tokens)
            };
            let citations = if proportional {
                k * articles
            } else if rng.gen_bool(0.2) {
                0
            } else {
                rng.gen_range(0..=10_000u64)
            };
            SpectrumPoint {
                g,
                types,
                tokens,
                articles,
                citations,
            }
        })
        .collect()
}

fn cumulative_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let one = Ratio::from_integer(1u128);
    let alphas: Vec<Ratio<u64>> = [1u64, 5, 10, 50, 100, 250, 499]
        .iter()
        .map(|&a| Ratio::new(a, 1000))
        .collect();
    for i in 0..1000 {
        let proportional = i % 4 == 0;
        let pts = random_points(&mut rng, proportional);
        for m in [
            Measure::Types,
            Measure::Tokens,
            Measure::Articles,
            Measure::Citations,
        ] {
            let Ok(series) = cumulative_share(&pts, m) else {
                ensure!(
                    onomast::analytics::total(&pts, m) == 0,
                    "dataset {i}: {m:?} refused"
                );
                continue;
            };
            ensure!(
                series.points.windows(2).all(|w| w[0].1 <= w[1].1),
                "dataset {i}: {m:?} series decreases"
            );
            ensure!(
                series.points.last().unwrap().1 == one,
                "dataset {i}: {m:?} does not end at 1"
            );
        }
        if let Ok(d) = cumulative_difference(&pts) {
            ensure!(
                d.points.last().unwrap().1 == Ratio::from_integer(0),
                "dataset {i}: D(last) != 0"
            );
            if proportional {
                ensure!(
                    d.points.iter().all(|(_, v)| *v == Ratio::from_integer(0)),
                    "dataset {i}: D not identically 0 under proportionality"
                );
            }
        }
        for m in [Measure::Types, Measure::Tokens] {
            let shares: Vec<_> = alphas
                .iter()
                .map(|&a| top_share(&pts, m, a).unwrap())
                .collect();
            ensure!(
                shares.windows(2).all(|w| w[0] <= w[1]),
                "dataset {i}: top_share not monotone in alpha"
            );
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("1000 datasets, {elapsed:.2?}"))
}

// 6

fn oracle_equivalence() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let merged_dir = dir.path().join("merged");
    let analysis_dir = dir.path().join("analysis");
    let table = fixture("synth_table.tsv");
    let authors = fixture("synth_authors.csv");

    let status = Command::new(bin())
        .arg("merge")
        .arg("--table")
        .arg(&table)
        .arg("--authors")
        .arg(&authors)
        .args(["--role", "all", "--out"])
        .arg(&merged_dir)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        status.status.success(),
        "merge failed: {}",
        String::from_utf8_lossy(&status.stderr)
    );

    let expected = oracle::expected(
        &fs::read_to_string(&authors).map_err(|e| e.to_string())?,
        &fs::read_to_string(&table).map_err(|e| e.to_string())?,
    );

    let mut analyze = Command::new(bin());
    analyze.arg("analyze").arg("--merged");
    for role in expected.merged.keys() {
        analyze.arg(merged_dir.join(format!("{role}.tsv")));
    }
    let status = analyze
        .args(["--alpha", "0.005", "--transform", "paper", "--out-dir"])
        .arg(&analysis_dir)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        status.status.success(),
        "analyze failed: {}",
        String::from_utf8_lossy(&status.stderr)
    );

    let mut rows = 0;
    for (role, want) in &expected.merged {
        let got = fs::read_to_string(merged_dir.join(format!("{role}.tsv")))
            .map_err(|e| e.to_string())?;
        ensure!(&got == want, "merged/{role}.tsv differs from oracle");
        rows += want.lines().filter(|l| !l.starts_with('#')).count();
    }
    for (role, want) in &expected.analysis {
        let got = fs::read_to_string(analysis_dir.join(format!("{role}.tsv")))
            .map_err(|e| e.to_string())?;
        ensure!(&got == want, "analysis/{role}.tsv differs from oracle");
    }
    Ok(format!(
        "{} roles, {rows} merged rows identical",
        expected.merged.len()
    ))
}

// 7

fn parser_robustness() -> Outcome {
    let file = fs::File::open(fixture("parser_robustness.nt")).map_err(|e| e.to_string())?;
    let mut reader = TripleReader::new(BufReader::new(file));
    let got: Vec<Triple<'static>> = reader
        .by_ref()
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;

    let iri = |s: &str| Object::Iri(s.to_string().into());
    let lit = |lex: &str, lang: Option<&str>, dt: Option<&str>| {
        Object::Literal(Literal {
            lexical: lex.to_string().into(),
            lang: lang.map(|l| l.to_string().into()),
            datatype: dt.map(|d| d.to_string().into()),
        })
    };
    let t = |s: &str, p: &str, o: Object<'static>| Triple {
        subject: s.to_string().into(),
        predicate: p.to_string().into(),
        object: o,
    };
    let want = vec![
        t(
            "http://www.wikidata.org/entity/Q42",
            "http://www.wikidata.org/prop/direct/P31",
            iri("http://www.wikidata.org/entity/Q5"),
        ),
        t("http://x", "http://y", lit("Ana\u{EF}s", Some("fr"), None)),
        t(
            "http://x",
            "http://y",
            lit("tab\tand \"quotes\"", None, None),
        ),
        t(
            "http://a\u{E9}",
            "http://y",
            Object::Blank("b1".to_string().into()),
        ),
        t(
            "http://x",
            "http://y",
            lit("snow \u{1F328}", Some("en-GB"), None),
        ),
        t(
            "http://x",
            "http://y",
            lit("42", None, Some("http://www.w3.org/2001/XMLSchema#integer")),
        ),
    ];
    ensure!(
        got.len() == want.len(),
        "got {} triples, want {}",
        got.len(),
        want.len()
    );
    for (i, (g, w)) in got.iter().zip(&want).enumerate() {
        ensure!(g == w, "triple {i}: got {g:?}, want {w:?}");
    }
    let stats = reader.stats();
    ensure!(
        stats.lines_skipped_malformed == 3,
        "malformed = {}, want 3",
        stats.lines_skipped_malformed
    );
    Ok(format!(
        "6 triples, 3 malformed of {} lines",
        stats.lines_read
    ))
}

// 8

const E: &str = "http://www.wikidata.org/entity/";
const P: &str = "http://www.wikidata.org/prop/direct/";
const LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";

/// Writes at least `target` bytes of synthetic truthy triples and returns
/// the number of human entities it should yield.
fn generate_dump(path: &Path, target: u64) -> std::io::Result<u64> {
    let mut w = BufWriter::with_capacity(1 << 20, fs::File::create(path)?);
    let (mut written, mut humans) = (0u64, 0u64);
    let mut buf = String::new();
    let mut i = 0u64;
    while written < target {
        use std::fmt::Write as _;
        i += 1;
        let q = 1_000_000 + i;
        buf.clear();
        if i.is_multiple_of(10) {
            let sex = if i.is_multiple_of(20) {
                6581097
            } else {
                6581072
            };
            let _ = writeln!(buf, "<{E}Q{q}> <{P}P31> <{E}Q5> .");
            let _ = writeln!(buf, "<{E}Q{q}> <{P}P21> <{E}Q{sex}> .");
            let _ = writeln!(buf, "<{E}Q{q}> <{P}P735> <{E}Q{}> .", 1_000_001 + i % 497);
            humans += 1;
        }
        if i.is_multiple_of(100_003) {
            buf.push_str("<broken line without terminator\n");
        }
        let _ = writeln!(buf, "<{E}Q{q}> <{P}P17> <{E}Q30> .");
        let _ = writeln!(
            buf,
            "<{E}Q{q}> <{LABEL}> \"Item number {i} with \\u00E9\"@en ."
        );
        let _ = writeln!(
            buf,
            "<{E}Q{q}> <http://schema.org/description> \"some description text for {i}\"@fr ."
        );
        w.write_all(buf.as_bytes())?;
        written += buf.len() as u64;
    }
    w.flush()?;
    Ok(humans)
}

fn peak_child_rss_kib() -> i64 {
    // SAFETY: getrusage only writes into the struct we hand it.
    unsafe {
        let mut usage: libc::rusage = std::mem::zeroed();
        libc::getrusage(libc::RUSAGE_CHILDREN, &mut usage);
        usage.ru_maxrss
    }
}

fn streaming_bound() -> Outcome {
    const TARGET: u64 = 1 << 30;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dump = dir.path().join("dump.nt");
    let humans = generate_dump(&dump, TARGET).map_err(|e| e.to_string())?;

    let mut outputs = Vec::new();
    let mut times = Vec::new();
    for threads in ["1", "8"] {
        let out = dir.path().join(format!("entities-{threads}.tsv"));
        let start = Instant::now();
        let run = Command::new(bin())
            .args(["--threads", threads, "extract", "--dump"])
            .arg(&dump)
            .arg("--out")
            .arg(&out)
            .output()
            .map_err(|e| e.to_string())?;
        times.push(start.elapsed());
        ensure!(
            run.status.success(),
            "extract --threads {threads} failed: {}",
            String::from_utf8_lossy(&run.stderr)
        );
        outputs.push(fs::read(&out).map_err(|e| e.to_string())?);
    }
    let peak_mib = peak_child_rss_kib() / 1024;
    ensure!(
        outputs[0] == outputs[1],
        "--threads 1 and --threads 8 outputs differ"
    );
    let records = BufReader::new(&outputs[0][..])
        .lines()
        .map_while(Result::ok)
        .filter(|l| !l.starts_with('#'))
        .count() as u64;
    ensure!(
        records == humans,
        "{records} entities extracted, generator wrote {humans}"
    );
    ensure!(peak_mib < 512, "peak RSS {peak_mib} MiB, bound 512 MiB");
    Ok(format!(
        "1 GiB, {humans} entities, peak RSS {peak_mib} MiB, {:.1?} / {:.1?}",
        times[0], times[1]
    ))
}

// 9

fn transform_fixed_points() -> Outcome {
    for x in [0.0, 0.5, 1.0] {
        let got = arcsine_x(x).map_err(|e| e.to_string())?;
        ensure!((got - x).abs() <= 1e-12, "x' at {x} = {got}");
    }
    let grid: Vec<(f64, f64)> = (0..100)
        .map(|i| (i as f64 / 99.0, i as f64 / 99.0))
        .collect();
    for &(_, y) in &grid {
        let got = sqrt_y(y).map_err(|e| e.to_string())?;
        ensure!((got - y.sqrt()).abs() <= 1e-12, "y' at {y} = {got}");
        ensure!(
            (got * got - y).abs() <= 1e-12,
            "y'^2 at {y} = {}",
            got * got
        );
    }
    let both = transform_axes(&grid).map_err(|e| e.to_string())?;
    ensure!(
        both.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1),
        "transformed grid is not strictly increasing"
    );
    Ok("3 fixed points, 100-point grid".into())
}

// 10

fn full_scale() -> Verdict {
    let Some(path) = std::env::var_os("ONOMAST_FULL_TABLE") else {
        return Verdict::Skip("ONOMAST_FULL_TABLE not set".into());
    };
    let run = || -> Outcome {
        let table = read_table_file(Path::new(&path)).map_err(|e| e.to_string())?;
        let pts = onomast::analytics::table_spectrum(&table);
        let share = share_at_least(&pts, Measure::Types, Ratio::new(9999, 10000))
            .map_err(|e| e.to_string())?;
        let share = *share.numer() as f64 / *share.denom() as f64;
        ensure!(
            (share - 0.80).abs() <= 0.05,
            "share at g >= 0.9999 is {share:.4}, want 0.80 +/- 0.05"
        );
        let names = table.len() as f64;
        let entities = table.provenance.entity_count as f64;
        ensure!(
            (names / 65_263.0 - 1.0).abs() <= 0.20,
            "{names} names, want 65263 +/- 20%"
        );
        ensure!(
            (entities / 7_807_233.0 - 1.0).abs() <= 0.20,
            "{entities} entities, want 7807233 +/- 20%"
        );
        Ok(format!(
            "share {share:.4}, {names} names, {entities} entities"
        ))
    };
    match run() {
        Ok(s) => Verdict::Pass(s),
        Err(s) => Verdict::Fail(s),
    }
}

type Check = Box<dyn Fn() -> Verdict>;

fn main() {
    let criteria: Vec<(&str, Check)> = vec![
        ("normalization golden suite", lift(golden_normalization)),
        ("score exactness", lift(score_exactness)),
        ("merge algebra", lift(merge_algebra)),
        ("two-step merge oracle", lift(two_step_merge)),
        ("cumulative properties", lift(cumulative_properties)),
        ("end-to-end oracle equivalence", lift(oracle_equivalence)),
        ("parser robustness", lift(parser_robustness)),
        ("streaming bound", lift(streaming_bound)),
        ("transform fixed points", lift(transform_fixed_points)),
        ("full-scale magnitudes (optional)", Box::new(full_scale)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let verdict = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Verdict::Fail("panicked".into()));
        let (tag, detail) = match verdict {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Verdict::Skip(d) => ("SKIP", d),
        };
        println!("{tag} {:>2} {name}: {detail}", i + 1);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

fn lift(f: fn() -> Outcome) -> Check {
    Box::new(move || match f() {
        Ok(d) => Verdict::Pass(d),
        Err(d) => Verdict::Fail(d),
    })
}
