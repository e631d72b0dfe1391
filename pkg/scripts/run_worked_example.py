"""Run the worked Z/6 example and print one line per stage.

    python3 scripts/run_worked_example.py [--component 1|2]
"""

import argparse
import sys

from convring import worked_example
from convring.errors import StageMismatch


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--component", type=int, choices=(1, 2))
    args = parser.parse_args()
    try:
        result = worked_example.run(None if args.component is None else args.component - 1)
        stages, status = result["stages"], 0
    except StageMismatch as exc:
        stages, status = exc.stages, 1
    for s in stages:
        print(f"{'ok  ' if s['passed'] else 'FAIL'} {s['mode']:<12} {s['name']}")
    return status


if __name__ == "__main__":
    sys.exit(main())
