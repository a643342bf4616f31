#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from the Python unicodedata database.

The byte-level BPE pre-tokenizer needs Unicode general-category tests for
letters (L*) and numbers (N*). Checked-in output keeps the C++ build free of
any ICU-sized dependency. Run from the repo root:

    python3 scripts/gen_unicode_tables.py > src/unicode_tables.cpp
"""

import sys
import unicodedata


def category_ranges(prefix: str):
    ranges = []
    start = None
    prev = None
    for cp in range(0x110000):
        if unicodedata.category(chr(cp)).startswith(prefix):
            if start is None:
                start = cp
            prev = cp
        elif start is not None:
            ranges.append((start, prev))
            start = None
    if start is not None:
        ranges.append((start, prev))
    return ranges


def emit(name: str, ranges) -> None:
    print(f"const CodepointRange k{name}Ranges[] = {{")
    for i in range(0, len(ranges), 4):
        chunk = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in ranges[i : i + 4])
        print(f"    {chunk},")
    print("};")
    print(f"const std::size_t k{name}RangeCount = sizeof(k{name}Ranges) / sizeof(k{name}Ranges[0]);")
    print()


def main() -> int:
    letters = category_ranges("L")
    numbers = category_ranges("N")
    print("// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.")
    print(f"// Unicode version: {unicodedata.unidata_version}")
    print()
    print('#include "unicode_tables.hpp"')
    print()
    print("namespace logitscope::detail {")
    print()
    emit("Letter", letters)
    emit("Number", numbers)
    print("}  // namespace logitscope::detail")
    return 0


if __name__ == "__main__":
    sys.exit(main())
