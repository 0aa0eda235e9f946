"""Sign-change statistics for diagonal-length differences of equilateral convex polygons."""
from dataclasses import dataclass
import json

from friezes.geometry import problem2_experiment

from _config import parse_config


@dataclass
class Problem2Config:
    n_min: int = 5
    n_max: int = 12
    pairs: int = 1000
    seed: int = 0
    out: str | None = None


def main():
    args = parse_config(Problem2Config, __doc__)
    rep = problem2_experiment(range(args.n_min, args.n_max + 1), args.pairs, args.seed)
    print(rep["reading"])
    print(f"k=1 floor holds: {rep['legendre_cauchy_ok']}")
    for k, s in sorted(rep["summary"].items(), key=lambda kv: int(kv[0])):
        hist = " ".join(f"{c}:{m}" for c, m in sorted(s["histogram"].items(), key=lambda kv: int(kv[0])))
        print(f"k={k:>2}  pairs={s['pairs']:>5}  min={s['min']}  histogram {hist}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rep, fh, indent=2)


if __name__ == "__main__":
    main()
