"""How far must the brute-force Samuel bracket run before it closes?

For a monomial f the bracket ``max_m ord(f^m)/m`` reaches the asymptotic Samuel
value exactly at ``m = denominator``, so closing by ``m <= M`` needs every
denominator to be at most M. This script tallies denominators on seeded random
corpora and prints instances whose denominator exceeds the bound.

    python3 scripts/samuel_denominators.py --seeds 0-20 --bound 60
"""
import argparse
import collections

from shilov.corpus import random_ideal, random_monomial, rng_for
from shilov.monomial import parse_ideal
from shilov.core import parse_polynomial
from shilov.rees import samuel, samuel_bruteforce


def seed_range(text):
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def main():
    p = argparse.ArgumentParser(description="Denominators of the Samuel function on random corpora")
    p.add_argument("--seeds", type=seed_range, default=seed_range("0-20"))
    p.add_argument("--ideals", type=int, default=50)
    p.add_argument("--per-ideal", type=int, default=10)
    p.add_argument("--bound", type=int, default=60)
    args = p.parse_args()

    tally = collections.Counter()
    large = []
    for seed in args.seeds:
        rng = rng_for(seed, "acceptance-2")
        for _ in range(args.ideals):
            n = rng.randint(1, 3)
            I = random_ideal(rng, n, 6)
            for _ in range(args.per_ideal):
                f = random_monomial(rng, n, 6)
                d = samuel(I, f).denominator
                tally[min(d, args.bound + 1)] += 1
                if d > args.bound:
                    large.append((seed, I.format(), f.format(), samuel(I, f)))
    total = sum(tally.values())
    print(f"{total} instances over seeds {args.seeds.start}..{args.seeds.stop - 1}")
    print(f"denominator > {args.bound}: {len(large)}")
    for seed, I, f, nu in large[:10]:
        print(f"  seed {seed}: I={I} f={f} samuel={nu}")

    # a hand-picked instance whose denominator is above 60
    xyz = ["x", "y", "z"]
    I = parse_ideal("(x^4*z, x^2*y^5*z^3, x*z^6)", xyz)
    f = parse_polynomial("x^3*y*z^2", xyz)
    nu = samuel(I, f)
    br = samuel_bruteforce(I, f, args.bound)
    print(f"example: samuel={nu}, bracket at M={args.bound}: [{br.lower}, {br.upper}] closed={br.closed}")
    br = samuel_bruteforce(I, f, nu.denominator)
    print(f"         bracket at M={nu.denominator}: closed={br.closed} m*={br.m_star}")


if __name__ == "__main__":
    main()
