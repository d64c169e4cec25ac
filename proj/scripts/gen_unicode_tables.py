#!/usr/bin/env python3
"""Regenerates include/lemcluster/detail/unicode_tables.hpp.

Two tables are emitted:
  * case folding (full Unicode case folding, one codepoint -> up to 3),
  * ASCII folding: the ASCII projection of the NFKD decomposition of a
    codepoint, plus a small supplement for Latin letters that carry no
    Unicode decomposition (stroked/barred letters, ligatures, eszett).

Codepoints whose projection is empty are absent from the table; the
library drops them.
"""

import sys
import unicodedata

MAX_CP = 0x30000

# Latin letters with conventional ASCII folds but no Unicode decomposition.
SUPPLEMENT = {
    0x00C6: "AE", 0x00E6: "ae",      # Æ æ
    0x00D0: "D",  0x00F0: "d",       # Ð ð
    0x00D8: "O",  0x00F8: "o",       # Ø ø
    0x00DE: "TH", 0x00FE: "th",      # Þ þ
    0x00DF: "ss", 0x1E9E: "SS",      # ß ẞ
    0x0110: "D",  0x0111: "d",       # Đ đ
    0x0126: "H",  0x0127: "h",       # Ħ ħ
    0x0131: "i",                     # ı
    0x0138: "k",                     # ĸ
    0x0141: "L",  0x0142: "l",       # Ł ł
    0x014A: "NG", 0x014B: "ng",      # Ŋ ŋ
    0x0152: "OE", 0x0153: "oe",      # Œ œ
    0x0166: "T",  0x0167: "t",       # Ŧ ŧ
    0x017F: "s",                     # ſ
    0x01E4: "G",  0x01E5: "g",       # Ǥ ǥ
    0x0180: "b",                     # ƀ
    0x0197: "I",  0x0268: "i",       # Ɨ ɨ
    0x2205: "",                      # ∅ reserved by stems, never folded
}


def ascii_projection(cp: int) -> str:
    if cp in SUPPLEMENT:
        return SUPPLEMENT[cp]
    decomposed = unicodedata.normalize("NFKD", chr(cp))
    out = []
    for ch in decomposed:
        o = ord(ch)
        if o < 0x80:
            out.append(ch)
        elif o in SUPPLEMENT:
            out.append(SUPPLEMENT[o])
    return "".join(out)


def cxx_escape(s: str) -> str:
    out = []
    for ch in s:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "?":
            # Three-digit octal: never extends into following characters
            # and never forms a trigraph.
            out.append("\\077")
        elif 0x20 <= ord(ch) < 0x7F:
            out.append(ch)
        else:
            out.append("\\%03o" % ord(ch))
    return "".join(out)


def main() -> None:
    case_fold = []
    for cp in range(0x80, MAX_CP):
        folded = chr(cp).casefold()
        if folded != chr(cp):
            cps = [ord(c) for c in folded]
            assert len(cps) <= 3, hex(cp)
            case_fold.append((cp, cps))

    ascii_fold = []
    pool = []
    pool_index = {}
    for cp in range(0x80, MAX_CP):
        proj = ascii_projection(cp)
        if not proj:
            continue
        assert len(proj) <= 31 and all(ord(c) < 0x80 for c in proj), hex(cp)
        if proj in pool_index:
            off = pool_index[proj]
        else:
            off = len(pool)
            pool_index[proj] = off
            pool.extend(proj)
        ascii_fold.append((cp, off, len(proj)))

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py -- do not edit.\n")
    w("#pragma once\n\n#include <cstdint>\n\n")
    w("namespace lemcluster::detail {\n\n")

    w("struct CaseFoldEntry {\n  char32_t cp;\n  char32_t out[3];\n"
      "  std::uint8_t len;\n};\n\n")
    w("inline constexpr CaseFoldEntry kCaseFold[] = {\n")
    for cp, cps in case_fold:
        padded = cps + [0] * (3 - len(cps))
        w("  {%#x, {%s}, %d},\n" % (cp, ", ".join("%#x" % c for c in padded),
                                    len(cps)))
    w("};\n\n")

    w("struct AsciiFoldEntry {\n  char32_t cp;\n  std::uint32_t offset;\n"
      "  std::uint8_t len;\n};\n\n")
    w('inline constexpr char kAsciiFoldPool[] =\n')
    pool_str = "".join(pool)
    for i in range(0, len(pool_str), 72):
        w('    "%s"\n' % cxx_escape(pool_str[i:i + 72]))
    w(";\n\n")
    w("inline constexpr AsciiFoldEntry kAsciiFold[] = {\n")
    for cp, off, ln in ascii_fold:
        w("  {%#x, %d, %d},\n" % (cp, off, ln))
    w("};\n\n")
    w("}  // namespace lemcluster::detail\n")


if __name__ == "__main__":
    main()
