"""Run every theorem check, print a summary and dump the verdicts as JSON.

    python scripts/verify_report.py [verdicts.json]
"""

import json
import sys
import time

from qtg.analysis import run_all


def main(json_path=None):
    t0 = time.perf_counter()
    verdicts = run_all(workers=4)
    elapsed = time.perf_counter() - t0
    for v in verdicts:
        print(f"{'PASS' if v.passed else 'FAIL'}  {v.id:<22} {v.checked_count:>6} checks")
    print(f"{sum(v.passed for v in verdicts)}/{len(verdicts)} passed in {elapsed:.2f}s")
    if json_path:
        with open(json_path, "w") as fh:
            json.dump([v.to_dict() for v in verdicts], fh, indent=2)
    return 0 if all(v.passed for v in verdicts) else 3


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:2]))
