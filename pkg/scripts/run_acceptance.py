#!/usr/bin/env python3
"""Run the acceptance suite and print one pass/fail line per criterion.

Usage: python scripts/run_acceptance.py [criterion numbers...]
"""

import sys

from hopflift import acceptance


def main():
    numbers = [int(a) for a in sys.argv[1:]] or None
    results = acceptance.run(numbers)
    failed = [r for r in results if not r.passed]
    total = sum(r.seconds for r in results)
    print(f"\n{len(results) - len(failed)}/{len(results)} criteria passed in {total:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
