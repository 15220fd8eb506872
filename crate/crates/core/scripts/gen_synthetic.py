"""Regenerate fixtures/synth_table.tsv and fixtures/synth_authors.csv.

Deterministic (fixed seed). The table has 2,000 names; the authorship file
has 10,000 data rows, a few of them deliberately invalid.
"""
import random

rng = random.Random(20240403)
SYL = ["an", "na", "ma", "ri", "jo", "el", "la", "ro", "be", "rt", "li", "sa",
       "ke", "vi", "da", "mi", "to", "ne", "ka", "lu", "so", "fi", "ha", "de"]
ACCENTS = {"e": "é", "a": "á", "o": "ø", "u": "ü", "i": "í", "n": "ñ", "c": "ç"}

def make_name():
    return "".join(rng.choice(SYL) for _ in range(rng.randint(2, 4)))

simple = set()
while len(simple) < 1700:
    simple.add(make_name())
simple = sorted(simple)
compounds = set()
while len(compounds) < 300:
    compounds.add(f"{rng.choice(simple)} {rng.choice(simple)}")
names = sorted(set(simple) | compounds)
assert len(names) == 2000

def counts():
    r = rng.random()
    if r < 0.35:
        return rng.randint(1, 400), 0
    if r < 0.6:
        return 0, rng.randint(1, 400)
    if r < 0.7:
        k = rng.randint(1, 30)
        return k, k
    return rng.randint(0, 300), rng.randint(1, 300)

table = {n: counts() for n in names}
with open("fixtures/synth_table.tsv", "w") as f:
    f.write("# format_version=1\n# dump=synthetic\n")
    f.write(f"# entities={sum(m + w for m, w in table.values())}\n")
    f.write(f"# names={len(table)}\n# columns=name\tmale\tfemale\n")
    for n in names:
        m, w = table[n]
        f.write(f"{n}\t{m}\t{w}\n")

def accentize(s):
    return "".join(ACCENTS[c] if c in ACCENTS and rng.random() < 0.3 else c for c in s)

def raw_name():
    r = rng.random()
    base = rng.choice(names)
    if r < 0.05:
        return make_name() + "x"                       # probably unmatched
    if r < 0.10:
        return rng.choice(["J.", "A. B.", "K", "TJ"])  # cleans to empty
    if r < 0.20:
        base = f"{rng.choice(simple)} {rng.choice(simple)}"  # step 2 only
    words = base.split(" ")
    words = [w.capitalize() if rng.random() < 0.7 else w for w in words]
    s = rng.choice([" ", "-"]).join(words)
    if rng.random() < 0.2:
        s = accentize(s)
    if rng.random() < 0.15:
        s = rng.choice(["J. ", "M ", "AB "]) + s
    if rng.random() < 0.15:
        s = s + rng.choice([" K.", " L", " RJ"])
    return s

rows = []
article = 0
while len(rows) < 10000:
    article += 1
    aid = f"w{article:05d}"
    cit = int(rng.paretovariate(1.2)) - 1
    year = rng.randint(2008, 2021)
    n = rng.choice([1, 1, 2, 3, 4, 5, 6])
    if n == 1:
        roles = ["single"]
    else:
        roles = ["first"] + ["middle"] * (n - 2) + ["last"]
    if rng.random() < 0.3:
        roles.append("corresponding")
    for role in roles:
        rows.append((aid, role.upper() if rng.random() < 0.05 else role, raw_name(), cit, year))
rows = rows[:10000]
for i in rng.sample(range(len(rows)), 12):
    aid, role, name, cit, year = rows[i]
    rows[i] = (aid, role, name, -3, year)

def quote(s):
    if any(c in s for c in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s

with open("fixtures/synth_authors.csv", "w") as f:
    f.write("article_id,role,first_name,citations,year\n")
    for aid, role, name, cit, year in rows:
        f.write(f"{aid},{role},{quote(name)},{cit},{year}\n")
