"""Time each stage of the per-prime pipeline up to a bound."""

import argparse
import time

from sscoincidence.arith import primes_up_to
from sscoincidence.jacobi import jacobi_cusp_dim
from sscoincidence.modcurve import genus_profile
from sscoincidence.supersingular import supersingular_report


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--bound", type=int, default=10_000)
    args = parser.parse_args()
    primes = primes_up_to(args.bound)

    for name, fn in (
        ("genus", genus_profile),
        ("jacobi", jacobi_cusp_dim),
        ("supersingular", supersingular_report),
    ):
        t0 = time.perf_counter()
        for p in primes:
            fn(p)
        print(f"{name:>14}: {time.perf_counter() - t0:7.2f}s over {len(primes)} primes")


if __name__ == "__main__":
    main()
