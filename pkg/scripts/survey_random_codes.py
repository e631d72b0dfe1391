"""Survey a seeded family of random codes: minimality of the first-order
triple, whether a single output split exists, reachability and observability.

    python3 scripts/survey_random_codes.py --count 300 --seed 1
"""

import argparse
import random
from collections import Counter
from time import perf_counter

from convring.code import codes_equal, is_observable_code
from convring.errors import NoCommonSplit
from convring.first_order import check_minimality, code_of, for_code
from convring.sampling import random_code, random_code_params
from convring.state_space import for_to_iso, is_observable_system, is_reachable


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--max-k", type=int, default=2)
    parser.add_argument("--max-delta", type=int, default=4)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    tally: dict[int, Counter] = {}
    start = perf_counter()
    for _ in range(args.count):
        m, n, k, delta = random_code_params(rng, max_n=args.max_n, max_k=args.max_k, max_delta=args.max_delta)
        code = random_code(rng, m, n, k, delta)
        c = tally.setdefault(m, Counter())
        c["codes"] += 1
        rep = for_code(code)
        c["minimal"] += check_minimality(rep).minimal
        c["kernel equal"] += codes_equal(code_of(rep), code)
        observable = is_observable_code(code)
        c["observable code"] += observable
        try:
            sys_ = for_to_iso(rep)
        except NoCommonSplit:
            c["no common split"] += 1
            continue
        c["reachable"] += is_reachable(sys_)
        c["observability agrees"] += is_observable_system(sys_) == observable

    cols = ["codes", "minimal", "kernel equal", "observable code", "no common split", "reachable",
            "observability agrees"]
    print("m   " + "  ".join(f"{h:>20}" for h in cols))
    for m in sorted(tally):
        print(f"{m:<4}" + "  ".join(f"{tally[m][h]:>20}" for h in cols))
    print(f"{perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
