#!/usr/bin/env python3
"""Run the acceptance suite and print the pass/fail table."""

import sys

from cubeworks.verify import format_table, run_all


def main():
    jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    results, ok = run_all(jobs=jobs)
    print(format_table(results))
    print("ALL CRITERIA PASS" if ok else "CRITERIA FAILED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
