"""Randomized Problem 1 scan over real friezes of odd period; candidates are certified exactly."""
from dataclasses import dataclass

from friezes.search import scan_random

from _config import parse_config


@dataclass
class RandomScanConfig:
    n: int = 11
    k: str = "1,2,3,4"
    samples: int = 10_000
    seed: int = 0
    threads: int = 1
    out: str | None = None


def main():
    args = parse_config(RandomScanConfig, __doc__)
    rep = scan_random(args.n, [int(k) for k in args.k.split(",")], args.samples, args.seed,
                      workers=args.threads)
    print(f"n={args.n}: {rep.pairs_checked} pairs, min counts {rep.min_count_per_k}")
    print(f"certified violations: {len(rep.violations)}, unconfirmed floating candidates: "
          f"{rep.unconfirmed_candidates}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rep.to_json())


if __name__ == "__main__":
    main()
