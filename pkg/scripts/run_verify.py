"""Run the randomized verification suites and print a one-line summary per suite.

    python3 scripts/run_verify.py --suite all --seed 7 --corpus 50 --jobs 4
"""
import argparse
import time

from shilov.verify import SUITES, VerifyConfig, run_suites


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--corpus", type=int, default=50)
    p.add_argument("--M", type=int, default=64)
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    cfg = VerifyConfig(seed=args.seed, corpus=args.corpus, M=args.M)
    start = time.perf_counter()
    results = run_suites(args.suite, cfg, jobs=args.jobs)
    for r in results:
        status = "ok" if r.ok else "WITNESS"
        extra = " ".join(f"{k}={v}" for k, v in sorted(r.notes.items()))
        print(f"{r.suite:20s} {status:8s} checked={r.checked:<7d} {extra}")
        for w in r.witnesses:
            print(f"    {w}")
    print(f"total {time.perf_counter() - start:.1f} s")
    raise SystemExit(0 if all(r.ok for r in results) else 1)


if __name__ == "__main__":
    main()
