//! Straight-line recomputation of the merge and analysis outputs.
//!
//! Nothing here calls into the crate under test: CSV parsing, name
//! cleaning, fraction arithmetic, ordering and formatting are all redone
//! by hand so that agreement with the pipeline means something.

use std::collections::{BTreeMap, BTreeSet};

const ROLES: [&str; 5] = ["single", "first", "middle", "last", "corresponding"];

pub struct Row {
    article: String,
    role: String,
    name: String,
    citations: u64,
}

fn split_csv_line(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        if quoted {
            if c == '"' {
                if chars.peek() == Some(&'"') {
                    cur.push('"');
                    chars.next();
                } else {
                    quoted = false;
                }
            } else {
                cur.push(c);
            }
        } else if c == '"' {
            quoted = true;
        } else if c == ',' {
            fields.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    fields.push(cur);
    fields
}

pub fn read_rows(csv: &str) -> Vec<Row> {
    let mut lines = csv.lines();
    let header = split_csv_line(lines.next().unwrap());
    assert_eq!(
        header,
        ["article_id", "role", "first_name", "citations", "year"]
    );
    let mut rows = Vec::new();
    for line in lines {
        let f = split_csv_line(line);
        let role = f[1].to_ascii_lowercase();
        if f[0].is_empty() || !ROLES.contains(&role.as_str()) {
            continue;
        }
        let Ok(citations) = f[3].parse::<u64>() else {
            continue;
        };
        if !f[4].is_empty() && f[4].parse::<i32>().is_err() {
            continue;
        }
        rows.push(Row {
            article: f[0].clone(),
            role,
            name: f[2].clone(),
            citations,
        });
    }
    rows
}

pub fn read_table(tsv: &str) -> BTreeMap<String, (u64, u64)> {
    let mut t = BTreeMap::new();
    for line in tsv.lines() {
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        t.insert(
            f[0].to_string(),
            (f[1].parse().unwrap(), f[2].parse().unwrap()),
        );
    }
    t
}

fn fold_char(c: char) -> &'static str {
    match c {
        'é' => "e",
        'á' => "a",
        'ø' => "o",
        'ü' => "u",
        'í' => "i",
        'ñ' => "n",
        'ç' => "c",
        other => panic!("oracle has no mapping for {other:?}"),
    }
}

fn clean(raw: &str) -> String {
    let mut ascii = String::new();
    for c in raw.chars() {
        if c.is_ascii() {
            ascii.push(c);
        } else {
            ascii.push_str(fold_char(c));
        }
    }
    let mut spaced = String::new();
    for c in ascii.chars() {
        if c.is_ascii_alphanumeric() || c == '_' {
            spaced.push(c);
        } else {
            spaced.push(' ');
        }
    }
    let mut out: Vec<String> = Vec::new();
    for tok in spaced.split(' ') {
        if tok.len() < 2 {
            continue;
        }
        if tok.len() <= 3 && tok.chars().all(|c| c.is_ascii_uppercase()) {
            continue;
        }
        out.push(tok.to_lowercase());
    }
    out.join(" ")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

type Key = (u64, u64);

#[derive(Default)]
struct Cell {
    names: BTreeSet<String>,
    tokens: u64,
    citations: u64,
}

fn fmt(v: f64) -> String {
    let r: f64 = format!("{v:.11e}").parse().unwrap();
    if r == 0.0 {
        "0".into()
    } else {
        r.to_string()
    }
}

pub struct Expected {
    pub merged: BTreeMap<String, String>,
    pub analysis: BTreeMap<String, String>,
}

pub fn expected(csv: &str, table_tsv: &str) -> Expected {
    let table = read_table(table_tsv);
    let rows = read_rows(csv);

    let mut articles: BTreeMap<String, Vec<Row>> = BTreeMap::new();
    for r in rows {
        articles.entry(r.article.clone()).or_default().push(r);
    }
    let mut all = Vec::new();
    for (_, group) in articles {
        if group.iter().any(|r| r.citations != group[0].citations) {
            continue;
        }
        let has_corr = group.iter().any(|r| r.role == "corresponding");
        let has_single = group.iter().any(|r| r.role == "single");
        let mut extra = Vec::new();
        if !has_corr {
            let src = if has_single { "single" } else { "first" };
            for r in &group {
                if r.role == src {
                    extra.push(Row {
                        article: r.article.clone(),
                        role: "corresponding".into(),
                        name: r.name.clone(),
                        citations: r.citations,
                    });
                }
            }
        }
        all.extend(group);
        all.extend(extra);
    }

    // reduced (num, den) -> cell, per role
    let mut per_role: BTreeMap<&str, Vec<(Key, Cell)>> = BTreeMap::new();
    for role in ROLES {
        per_role.insert(role, Vec::new());
    }
    for r in &all {
        let name = clean(&r.name);
        if name.is_empty() {
            continue;
        }
        let mut male = 0;
        let mut female = 0;
        let mut hit = false;
        if let Some(&(m, f)) = table.get(&name) {
            male += m;
            female += f;
            hit = true;
        }
        if name.contains(' ') {
            let first = name.split(' ').next().unwrap();
            if let Some(&(m, f)) = table.get(first) {
                male += m;
                female += f;
                hit = true;
            }
        }
        if !hit {
            continue;
        }
        let total = male + female;
        let d = gcd(male, total);
        let key = (male / d, total / d);
        let cells = per_role.get_mut(r.role.as_str()).unwrap();
        let idx = match cells.iter().position(|(k, _)| *k == key) {
            Some(i) => i,
            None => {
                cells.push((key, Cell::default()));
                cells.len() - 1
            }
        };
        let cell = &mut cells[idx].1;
        cell.names.insert(name);
        cell.tokens += 1;
        cell.citations += r.citations;
    }

    let mut merged = BTreeMap::new();
    let mut analysis = BTreeMap::new();
    for (role, mut cells) in per_role {
        cells.sort_by(|a, b| {
            let lhs = u128::from(a.0 .0) * u128::from(b.0 .1);
            let rhs = u128::from(b.0 .0) * u128::from(a.0 .1);
            lhs.cmp(&rhs)
        });

        let mut m = String::new();
        m.push_str("# format_version=1\n");
        m.push_str(&format!("# role={role}\n"));
        m.push_str(
            "# columns=genderedness_num\tgenderedness_den\ttypes\ttokens\tarticles\tcitations\n",
        );
        for ((n, d), c) in &cells {
            m.push_str(&format!(
                "{n}\t{d}\t{}\t{}\t{}\t{}\n",
                c.names.len(),
                c.tokens,
                c.tokens,
                c.citations
            ));
        }
        merged.insert(role.to_string(), m);

        let t_types: u64 = cells.iter().map(|(_, c)| c.names.len() as u64).sum();
        let t_tokens: u64 = cells.iter().map(|(_, c)| c.tokens).sum();
        let t_cit: u64 = cells.iter().map(|(_, c)| c.citations).sum();
        let mut a = String::new();
        a.push_str("# format_version=1\n");
        a.push_str(&format!("# dataset={role}\n"));
        a.push_str("# token_unit=authorships\n");
        a.push_str("# transform=paper\n");
        a.push_str("# columns=g_float\tg_transformed\ttypes\ttokens\tcitations\tcum_type_share\tcum_token_share\tcum_citation_share\tD\tsqrt_cum_type_share\tsqrt_cum_token_share\tsqrt_cum_citation_share\n");
        let (mut ct, mut ck, mut cc) = (0u64, 0u64, 0u64);
        for ((n, d), c) in &cells {
            ct += c.names.len() as u64;
            ck += c.tokens;
            cc += c.citations;
            let g = *n as f64 / *d as f64;
            let gx = g.sqrt().asin() / (std::f64::consts::PI / 2.0);
            let st = ct as f64 / t_types as f64;
            let sk = ck as f64 / t_tokens as f64;
            let (sc, dd) = if t_cit == 0 {
                ("NA".to_string(), "NA".to_string())
            } else {
                let sc = cc as f64 / t_cit as f64;
                let num =
                    i128::from(cc) * i128::from(t_tokens) - i128::from(ck) * i128::from(t_cit);
                let den = i128::from(t_cit) * i128::from(t_tokens);
                (fmt(sc), fmt(num as f64 / den as f64))
            };
            let sqrt_c = if t_cit == 0 {
                "NA".to_string()
            } else {
                fmt((cc as f64 / t_cit as f64).sqrt())
            };
            a.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                fmt(g),
                fmt(gx),
                c.names.len(),
                c.tokens,
                c.citations,
                fmt(st),
                fmt(sk),
                sc,
                dd,
                fmt(st.sqrt()),
                fmt(sk.sqrt()),
                sqrt_c
            ));
        }
        analysis.insert(role.to_string(), a);
    }
    Expected { merged, analysis }
}
