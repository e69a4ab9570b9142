#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.inc from the Python unicodedata module.

The toolkit needs three small Unicode tables: canonical composition pairs
(for NFC), combining classes (to detect blocked compositions), and simple
lowercase mappings. Run this script only when bumping the Unicode version;
the generated file is checked in.
"""

import sys
import unicodedata

MAX_CP = 0x10000  # BMP is enough for the scripts this toolkit handles


def composition_pairs():
    pairs = []
    for cp in range(MAX_CP):
        ch = chr(cp)
        decomp = unicodedata.decomposition(ch)
        if not decomp or decomp.startswith("<"):
            continue
        parts = decomp.split()
        if len(parts) != 2:
            continue
        a, b = int(parts[0], 16), int(parts[1], 16)
        # Skip composition exclusions: NFC must not produce them.
        if unicodedata.normalize("NFC", chr(a) + chr(b)) != ch:
            continue
        pairs.append((a, b, cp))
    pairs.sort()
    return pairs


def combining_classes():
    ccc = []
    for cp in range(MAX_CP):
        c = unicodedata.combining(chr(cp))
        if c != 0:
            ccc.append((cp, c))
    return ccc


def lowercase_pairs():
    pairs = []
    for cp in range(0x80, MAX_CP):  # ASCII handled inline in C++
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            pairs.append((cp, ord(lo)))
    pairs.sort()
    return pairs


def main():
    comp = composition_pairs()
    ccc = combining_classes()
    lower = lowercase_pairs()

    out = sys.stdout
    out.write("// Generated by tools/gen_unicode_tables.py -- do not edit.\n")
    out.write("// Unicode version: %s\n\n" % unicodedata.unidata_version)

    out.write("struct CompositionPair { char32_t first; char32_t second; char32_t composed; };\n")
    out.write("inline constexpr CompositionPair kCompositionPairs[] = {\n")
    for a, b, c in comp:
        out.write("    {0x%04X, 0x%04X, 0x%04X},\n" % (a, b, c))
    out.write("};\n\n")

    out.write("struct CombiningClassEntry { char32_t cp; unsigned char ccc; };\n")
    out.write("inline constexpr CombiningClassEntry kCombiningClasses[] = {\n")
    for cp, c in ccc:
        out.write("    {0x%04X, %d},\n" % (cp, c))
    out.write("};\n\n")

    out.write("struct LowercasePair { char32_t upper; char32_t lower; };\n")
    out.write("inline constexpr LowercasePair kLowercasePairs[] = {\n")
    for u, l in lower:
        out.write("    {0x%04X, 0x%04X},\n" % (u, l))
    out.write("};\n")


if __name__ == "__main__":
    main()
