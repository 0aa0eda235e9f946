"""Dimension of the kernel of q -> c for each (n, k), and how much of it the
constants and the first harmonic explain."""
from dataclasses import dataclass

import numpy as np

from friezes.deformation import kernel_basis

from _config import parse_config


@dataclass
class KernelConfig:
    n_max: int = 14


def main():
    args = parse_config(KernelConfig, __doc__)
    for n in range(5, args.n_max + 1):
        i = np.arange(1, n + 1)
        known = np.stack([np.ones(n), np.cos(2 * np.pi * i / n), np.sin(2 * np.pi * i / n)])
        for k in range(2, n - 1):
            K = kernel_basis(n, k)
            # components of the kernel orthogonal to the known directions
            q, _ = np.linalg.qr(known.T)
            extra = K - (K @ q) @ q.T
            rank_extra = int(np.sum(np.linalg.svd(extra, compute_uv=False) > 1e-8)) if len(K) else 0
            print(f"n={n:>2} k={k:>2}  kernel dim={len(K)}  beyond constants+harmonic={rank_extra}")


if __name__ == "__main__":
    main()
