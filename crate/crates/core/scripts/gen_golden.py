"""Regenerate fixtures/normalize_golden.tsv (input<TAB>expected).

Expected values come from an independent route: unidecode restricted to
U+00A0..U+024F, a regex word-character split, and the token rules.
"""
import re
from unidecode import unidecode

def translit(s):
    out = []
    for ch in s:
        cp = ord(ch)
        if cp < 128:
            out.append(ch)
        elif 0xA0 <= cp <= 0x24F:
            out.append(unidecode(ch))
    return "".join(out)

def clean(s, cap=3):
    s = re.sub(r"[^A-Za-z0-9_]", " ", translit(s))
    toks = s.split()
    toks = [t for t in toks if len(t) > 1]
    toks = [t for t in toks if not (re.fullmatch(r"[A-Z]+", t) and (cap == 0 or len(t) <= cap))]
    return " ".join(t.lower() for t in toks)

cases = """J. Robert
Mary-Anne
A. B.
anna
TJ Henry
Émile
Robert
李
mary jane
anne sophie marie
MARIA
José
JOSÉ
François
Françoise
Zoë
Chloé
Renée
Søren
Bjørn
Åsa
Ægir
Œdipe
Straße
Łukasz
Małgorzata
Đorđe
Ștefan
Țiprian
Ğül
İlker
Şule
Jiří
Tomáš
Přemysl
Žofia
Ľubomír
Ķārlis
Māra
Ėglė
Ħarry
Ðórr
Þórunn
Jean-Pierre
Jean-Luc Picard
Marie-Claude
Anne-Sophie
Ana-María
Hans-Jürgen
Karl-Heinz
Maria-Theresia
O'Brien
D'Angelo
Jo
Al
Ed
Li
J.R.R.
J.R.R. Tolkien
J. R. R.
W.E.B.
C.S. Lewis
H.G. Wells
JR Smith
AJ
ABC
ABCD
ABCD Jones
ANNA MARIA
ANA LUISA
JO ANN
JP Morgan
JFK
Dr. John
John Jr.
Mary Ann K.
Mary Ann K
Mary Ann KL
Mary Ann KLM
Mary Ann KLMN
Robert L
Robert L.
Robert Lee
R Lee
Lee
Leigh-Ann
Billy Bob
Jo Ann
Jo-Ann
  Anna   Maria  
Anna Maria
Anna_Maria
anna_maria
Anna__Maria
_
__
a_b
X Æ A-12
R2D2
4th
2nd Lt
123
A1
Maria1
Mary (Molly)
"Molly"
Anna/Maria
Anna, Maria
Anna;Maria
Anna.Maria
Anna+Maria
Anna&Maria
Anna@Maria
Anna#1
Anna!
¿Pedro?
¡Hola!
«Jean»
Pépé
Ñandú
Iñaki
Begoña
Núria
Joaquín
Inês
João
Conceição
Gonçalo
Müller
Jürgen
Günther
Björn
Özlem
Çağla
Göran
Mårten
Åke
Øystein
Ærø
Nguyễn
Trần
Phạm
Võ
Иван
Ольга
Μαρία
Γιώργος
محمد
אברהם
さくら
김민준
王芳
Amélie-Anne
Ève
Éloïse
Hélène
Gaëlle
Maëlle
Noël
Noëlle
Raphaël
Mikaël
Anaïs
Loïc
Zoé Léa
Léa-Rose
Marie-Hélène
Marie Hélène
Jean Baptiste
Jean-Baptiste
Jean B.
Jean B
J.-B.
J-B
J.-P. Sartre
Ã
Ð
Ǆ
ǅ
ǆ
Ǉ
Ǌ
ǰ
ȳ
ɏ
Ɓ
ƒ
ƙ
µ
¼
½
©
®
°
×
÷
ß
ẞ
Mary Jane Watson
M.J. Watson
""".split("\n")
cases = [c.replace("\\u00a0", " ") for c in cases if c != ""]
seen = []
for c in cases:
    if c not in seen:
        seen.append(c)
assert len(seen) == 200, len(seen)
with open("fixtures/normalize_golden.tsv", "w") as f:
    f.write("# input\texpected (empty = nothing survives); default initials cap 3\n")
    for c in seen:
        assert "\t" not in c
        f.write(f"{c}\t{clean(c)}\n")
