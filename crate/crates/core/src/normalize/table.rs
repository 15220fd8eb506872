// Generated by scripts/gen_translit.py. Do not edit by hand.

pub(super) const FIRST: u32 = 0x00A0;
pub(super) const LAST: u32 = 0x024F;

pub(super) static TABLE: [&str; 432] = [
    " ",    // U+00A0
    "!",    // U+00A1 ¡
    "C/",   // U+00A2 ¢
    "PS",   // U+00A3 £
    "$?",   // U+00A4 ¤
    "Y=",   // U+00A5 ¥
    "|",    // U+00A6 ¦
    "SS",   // U+00A7 §
    "\"",   // U+00A8 ¨
    "(c)",  // U+00A9 ©
    "a",    // U+00AA ª
    "<<",   // U+00AB «
    "!",    // U+00AC ¬
    "",     // U+00AD SHY
    "(r)",  // U+00AE ®
    "-",    // U+00AF ¯
    "deg",  // U+00B0 °
    "+-",   // U+00B1 ±
    "2",    // U+00B2 ²
    "3",    // U+00B3 ³
    "'",    // U+00B4 ´
    "u",    // U+00B5 µ
    "P",    // U+00B6 ¶
    "*",    // U+00B7 ·
    ",",    // U+00B8 ¸
    "1",    // U+00B9 ¹
    "o",    // U+00BA º
    ">>",   // U+00BB »
    " 1/4", // U+00BC ¼
    " 1/2", // U+00BD ½
    " 3/4", // U+00BE ¾
    "?",    // U+00BF ¿
    "A",    // U+00C0 À
    "A",    // U+00C1 Á
    "A",    // U+00C2 Â
    "A",    // U+00C3 Ã
    "A",    // U+00C4 Ä
    "A",    // U+00C5 Å
    "AE",   // U+00C6 Æ
    "C",    // U+00C7 Ç
    "E",    // U+00C8 È
    "E",    // U+00C9 É
    "E",    // U+00CA Ê
    "E",    // U+00CB Ë
    "I",    // U+00CC Ì
    "I",    // U+00CD Í
    "I",    // U+00CE Î
    "I",    // U+00CF Ï
    "D",    // U+00D0 Ð
    "N",    // U+00D1 Ñ
    "O",    // U+00D2 Ò
    "O",    // U+00D3 Ó
    "O",    // U+00D4 Ô
    "O",    // U+00D5 Õ
    "O",    // U+00D6 Ö
    "x",    // U+00D7 ×
    "O",    // U+00D8 Ø
    "U",    // U+00D9 Ù
    "U",    // U+00DA Ú
    "U",    // U+00DB Û
    "U",    // U+00DC Ü
    "Y",    // U+00DD Ý
    "Th",   // U+00DE Þ
    "ss",   // U+00DF ß
    "a",    // U+00E0 à
    "a",    // U+00E1 á
    "a",    // U+00E2 â
    "a",    // U+00E3 ã
    "a",    // U+00E4 ä
    "a",    // U+00E5 å
    "ae",   // U+00E6 æ
    "c",    // U+00E7 ç
    "e",    // U+00E8 è
    "e",    // U+00E9 é
    "e",    // U+00EA ê
    "e",    // U+00EB ë
    "i",    // U+00EC ì
    "i",    // U+00ED í
    "i",    // U+00EE î
    "i",    // U+00EF ï
    "d",    // U+00F0 ð
    "n",    // U+00F1 ñ
    "o",    // U+00F2 ò
    "o",    // U+00F3 ó
    "o",    // U+00F4 ô
    "o",    // U+00F5 õ
    "o",    // U+00F6 ö
    "/",    // U+00F7 ÷
    "o",    // U+00F8 ø
    "u",    // U+00F9 ù
    "u",    // U+00FA ú
    "u",    // U+00FB û
    "u",    // U+00FC ü
    "y",    // U+00FD ý
    "th",   // U+00FE þ
    "y",    // U+00FF ÿ
    "A",    // U+0100 Ā
    "a",    // U+0101 ā
    "A",    // U+0102 Ă
    "a",    // U+0103 ă
    "A",    // U+0104 Ą
    "a",    // U+0105 ą
    "C",    // U+0106 Ć
    "c",    // U+0107 ć
    "C",    // U+0108 Ĉ
    "c",    // U+0109 ĉ
    "C",    // U+010A Ċ
    "c",    // U+010B ċ
    "C",    // U+010C Č
    "c",    // U+010D č
    "D",    // U+010E Ď
    "d",    // U+010F ď
    "D",    // U+0110 Đ
    "d",    // U+0111 đ
    "E",    // U+0112 Ē
    "e",    // U+0113 ē
    "E",    // U+0114 Ĕ
    "e",    // U+0115 ĕ
    "E",    // U+0116 Ė
    "e",    // U+0117 ė
    "E",    // U+0118 Ę
    "e",    // U+0119 ę
    "E",    // U+011A Ě
    "e",    // U+011B ě
    "G",    // U+011C Ĝ
    "g",    // U+011D ĝ
    "G",    // U+011E Ğ
    "g",    // U+011F ğ
    "G",    // U+0120 Ġ
    "g",    // U+0121 ġ
    "G",    // U+0122 Ģ
    "g",    // U+0123 ģ
    "H",    // U+0124 Ĥ
    "h",    // U+0125 ĥ
    "H",    // U+0126 Ħ
    "h",    // U+0127 ħ
    "I",    // U+0128 Ĩ
    "i",    // U+0129 ĩ
    "I",    // U+012A Ī
    "i",    // U+012B ī
    "I",    // U+012C Ĭ
    "i",    // U+012D ĭ
    "I",    // U+012E Į
    "i",    // U+012F į
    "I",    // U+0130 İ
    "i",    // U+0131 ı
    "IJ",   // U+0132 Ĳ
    "ij",   // U+0133 ĳ
    "J",    // U+0134 Ĵ
    "j",    // U+0135 ĵ
    "K",    // U+0136 Ķ
    "k",    // U+0137 ķ
    "k",    // U+0138 ĸ
    "L",    // U+0139 Ĺ
    "l",    // U+013A ĺ
    "L",    // U+013B Ļ
    "l",    // U+013C ļ
    "L",    // U+013D Ľ
    "l",    // U+013E ľ
    "L",    // U+013F Ŀ
    "l",    // U+0140 ŀ
    "L",    // U+0141 Ł
    "l",    // U+0142 ł
    "N",    // U+0143 Ń
    "n",    // U+0144 ń
    "N",    // U+0145 Ņ
    "n",    // U+0146 ņ
    "N",    // U+0147 Ň
    "n",    // U+0148 ň
    "'n",   // U+0149 ŉ
    "NG",   // U+014A Ŋ
    "ng",   // U+014B ŋ
    "O",    // U+014C Ō
    "o",    // U+014D ō
    "O",    // U+014E Ŏ
    "o",    // U+014F ŏ
    "O",    // U+0150 Ő
    "o",    // U+0151 ő
    "OE",   // U+0152 Œ
    "oe",   // U+0153 œ
    "R",    // U+0154 Ŕ
    "r",    // U+0155 ŕ
    "R",    // U+0156 Ŗ
    "r",    // U+0157 ŗ
    "R",    // U+0158 Ř
    "r",    // U+0159 ř
    "S",    // U+015A Ś
    "s",    // U+015B ś
    "S",    // U+015C Ŝ
    "s",    // U+015D ŝ
    "S",    // U+015E Ş
    "s",    // U+015F ş
    "S",    // U+0160 Š
    "s",    // U+0161 š
    "T",    // U+0162 Ţ
    "t",    // U+0163 ţ
    "T",    // U+0164 Ť
    "t",    // U+0165 ť
    "T",    // U+0166 Ŧ
    "t",    // U+0167 ŧ
    "U",    // U+0168 Ũ
    "u",    // U+0169 ũ
    "U",    // U+016A Ū
    "u",    // U+016B ū
    "U",    // U+016C Ŭ
    "u",    // U+016D ŭ
    "U",    // U+016E Ů
    "u",    // U+016F ů
    "U",    // U+0170 Ű
    "u",    // U+0171 ű
    "U",    // U+0172 Ų
    "u",    // U+0173 ų
    "W",    // U+0174 Ŵ
    "w",    // U+0175 ŵ
    "Y",    // U+0176 Ŷ
    "y",    // U+0177 ŷ
    "Y",    // U+0178 Ÿ
    "Z",    // U+0179 Ź
    "z",    // U+017A ź
    "Z",    // U+017B Ż
    "z",    // U+017C ż
    "Z",    // U+017D Ž
    "z",    // U+017E ž
    "s",    // U+017F ſ
    "b",    // U+0180 ƀ
    "B",    // U+0181 Ɓ
    "B",    // U+0182 Ƃ
    "b",    // U+0183 ƃ
    "6",    // U+0184 Ƅ
    "6",    // U+0185 ƅ
    "O",    // U+0186 Ɔ
    "C",    // U+0187 Ƈ
    "c",    // U+0188 ƈ
    "D",    // U+0189 Ɖ
    "D",    // U+018A Ɗ
    "D",    // U+018B Ƌ
    "d",    // U+018C ƌ
    "d",    // U+018D ƍ
    "3",    // U+018E Ǝ
    "@",    // U+018F Ə
    "E",    // U+0190 Ɛ
    "F",    // U+0191 Ƒ
    "f",    // U+0192 ƒ
    "G",    // U+0193 Ɠ
    "G",    // U+0194 Ɣ
    "hv",   // U+0195 ƕ
    "I",    // U+0196 Ɩ
    "I",    // U+0197 Ɨ
    "K",    // U+0198 Ƙ
    "k",    // U+0199 ƙ
    "l",    // U+019A ƚ
    "l",    // U+019B ƛ
    "W",    // U+019C Ɯ
    "N",    // U+019D Ɲ
    "n",    // U+019E ƞ
    "O",    // U+019F Ɵ
    "O",    // U+01A0 Ơ
    "o",    // U+01A1 ơ
    "OI",   // U+01A2 Ƣ
    "oi",   // U+01A3 ƣ
    "P",    // U+01A4 Ƥ
    "p",    // U+01A5 ƥ
    "YR",   // U+01A6 Ʀ
    "2",    // U+01A7 Ƨ
    "2",    // U+01A8 ƨ
    "SH",   // U+01A9 Ʃ
    "sh",   // U+01AA ƪ
    "t",    // U+01AB ƫ
    "T",    // U+01AC Ƭ
    "t",    // U+01AD ƭ
    "T",    // U+01AE Ʈ
    "U",    // U+01AF Ư
    "u",    // U+01B0 ư
    "Y",    // U+01B1 Ʊ
    "V",    // U+01B2 Ʋ
    "Y",    // U+01B3 Ƴ
    "y",    // U+01B4 ƴ
    "Z",    // U+01B5 Ƶ
    "z",    // U+01B6 ƶ
    "ZH",   // U+01B7 Ʒ
    "ZH",   // U+01B8 Ƹ
    "zh",   // U+01B9 ƹ
    "zh",   // U+01BA ƺ
    "2",    // U+01BB ƻ
    "5",    // U+01BC Ƽ
    "5",    // U+01BD ƽ
    "ts",   // U+01BE ƾ
    "w",    // U+01BF ƿ
    "|",    // U+01C0 ǀ
    "||",   // U+01C1 ǁ
    "|=",   // U+01C2 ǂ
    "!",    // U+01C3 ǃ
    "DZ",   // U+01C4 Ǆ
    "Dz",   // U+01C5 ǅ
    "dz",   // U+01C6 ǆ
    "LJ",   // U+01C7 Ǉ
    "Lj",   // U+01C8 ǈ
    "lj",   // U+01C9 ǉ
    "NJ",   // U+01CA Ǌ
    "Nj",   // U+01CB ǋ
    "nj",   // U+01CC ǌ
    "A",    // U+01CD Ǎ
    "a",    // U+01CE ǎ
    "I",    // U+01CF Ǐ
    "i",    // U+01D0 ǐ
    "O",    // U+01D1 Ǒ
    "o",    // U+01D2 ǒ
    "U",    // U+01D3 Ǔ
    "u",    // U+01D4 ǔ
    "U",    // U+01D5 Ǖ
    "u",    // U+01D6 ǖ
    "U",    // U+01D7 Ǘ
    "u",    // U+01D8 ǘ
    "U",    // U+01D9 Ǚ
    "u",    // U+01DA ǚ
    "U",    // U+01DB Ǜ
    "u",    // U+01DC ǜ
    "@",    // U+01DD ǝ
    "A",    // U+01DE Ǟ
    "a",    // U+01DF ǟ
    "A",    // U+01E0 Ǡ
    "a",    // U+01E1 ǡ
    "AE",   // U+01E2 Ǣ
    "ae",   // U+01E3 ǣ
    "G",    // U+01E4 Ǥ
    "g",    // U+01E5 ǥ
    "G",    // U+01E6 Ǧ
    "g",    // U+01E7 ǧ
    "K",    // U+01E8 Ǩ
    "k",    // U+01E9 ǩ
    "O",    // U+01EA Ǫ
    "o",    // U+01EB ǫ
    "O",    // U+01EC Ǭ
    "o",    // U+01ED ǭ
    "ZH",   // U+01EE Ǯ
    "zh",   // U+01EF ǯ
    "j",    // U+01F0 ǰ
    "DZ",   // U+01F1 Ǳ
    "Dz",   // U+01F2 ǲ
    "dz",   // U+01F3 ǳ
    "G",    // U+01F4 Ǵ
    "g",    // U+01F5 ǵ
    "HV",   // U+01F6 Ƕ
    "W",    // U+01F7 Ƿ
    "N",    // U+01F8 Ǹ
    "n",    // U+01F9 ǹ
    "A",    // U+01FA Ǻ
    "a",    // U+01FB ǻ
    "AE",   // U+01FC Ǽ
    "ae",   // U+01FD ǽ
    "O",    // U+01FE Ǿ
    "o",    // U+01FF ǿ
    "A",    // U+0200 Ȁ
    "a",    // U+0201 ȁ
    "A",    // U+0202 Ȃ
    "a",    // U+0203 ȃ
    "E",    // U+0204 Ȅ
    "e",    // U+0205 ȅ
    "E",    // U+0206 Ȇ
    "e",    // U+0207 ȇ
    "I",    // U+0208 Ȉ
    "i",    // U+0209 ȉ
    "I",    // U+020A Ȋ
    "i",    // U+020B ȋ
    "O",    // U+020C Ȍ
    "o",    // U+020D ȍ
    "O",    // U+020E Ȏ
    "o",    // U+020F ȏ
    "R",    // U+0210 Ȑ
    "r",    // U+0211 ȑ
    "R",    // U+0212 Ȓ
    "r",    // U+0213 ȓ
    "U",    // U+0214 Ȕ
    "u",    // U+0215 ȕ
    "U",    // U+0216 Ȗ
    "u",    // U+0217 ȗ
    "S",    // U+0218 Ș
    "s",    // U+0219 ș
    "T",    // U+021A Ț
    "t",    // U+021B ț
    "Y",    // U+021C Ȝ
    "y",    // U+021D ȝ
    "H",    // U+021E Ȟ
    "h",    // U+021F ȟ
    "N",    // U+0220 Ƞ
    "d",    // U+0221 ȡ
    "OU",   // U+0222 Ȣ
    "ou",   // U+0223 ȣ
    "Z",    // U+0224 Ȥ
    "z",    // U+0225 ȥ
    "A",    // U+0226 Ȧ
    "a",    // U+0227 ȧ
    "E",    // U+0228 Ȩ
    "e",    // U+0229 ȩ
    "O",    // U+022A Ȫ
    "o",    // U+022B ȫ
    "O",    // U+022C Ȭ
    "o",    // U+022D ȭ
    "O",    // U+022E Ȯ
    "o",    // U+022F ȯ
    "O",    // U+0230 Ȱ
    "o",    // U+0231 ȱ
    "Y",    // U+0232 Ȳ
    "y",    // U+0233 ȳ
    "l",    // U+0234 ȴ
    "n",    // U+0235 ȵ
    "t",    // U+0236 ȶ
    "j",    // U+0237 ȷ
    "db",   // U+0238 ȸ
    "qp",   // U+0239 ȹ
    "A",    // U+023A Ⱥ
    "C",    // U+023B Ȼ
    "c",    // U+023C ȼ
    "L",    // U+023D Ƚ
    "T",    // U+023E Ⱦ
    "s",    // U+023F ȿ
    "z",    // U+0240 ɀ
    "",     // U+0241 Ɂ
    "",     // U+0242 ɂ
    "B",    // U+0243 Ƀ
    "U",    // U+0244 Ʉ
    "^",    // U+0245 Ʌ
    "E",    // U+0246 Ɇ
    "e",    // U+0247 ɇ
    "J",    // U+0248 Ɉ
    "j",    // U+0249 ɉ
    "q",    // U+024A Ɋ
    "q",    // U+024B ɋ
    "R",    // U+024C Ɍ
    "r",    // U+024D ɍ
    "Y",    // U+024E Ɏ
    "y",    // U+024F ɏ
];
