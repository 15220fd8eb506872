"""Regenerate src/normalize/table.rs from the unidecode package.

Covers U+00A0..=U+024F (Latin-1 Supplement, Latin Extended-A and B).
"""
import sys
from unidecode import unidecode

START, END = 0x00A0, 0x024F

out = sys.stdout
out.write("// Generated by scripts/gen_translit.py. Do not edit by hand.\n\n")
out.write(f"pub(super) const FIRST: u32 = 0x{START:04X};\n")
out.write(f"pub(super) const LAST: u32 = 0x{END:04X};\n\n")
out.write(f"pub(super) static TABLE: [&str; {END - START + 1}] = [\n")
for cp in range(START, END + 1):
    s = unidecode(chr(cp))
    assert s.isascii()
    lit = s.replace("\\", "\\\\").replace('"', '\\"')
    out.write(f'    "{lit}", // U+{cp:04X} {chr(cp) if cp != 0xAD else "SHY"}\n')
out.write("];\n")
