"""Print the Kodaira status of A_p for every prime p up to a bound,
grouped by tag, with the data that decides each tag."""

import argparse

from sscoincidence.harness import KodairaStatus, verify_coincidence


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--bound", type=int, default=200)
    args = parser.parse_args()

    summary = verify_coincidence(args.bound)
    for tag in KodairaStatus:
        recs = [r for r in summary.records if r.kodaira is tag]
        print(f"{tag.value} ({len(recs)})")
        for r in recs:
            print(f"  p={r.p:<6} g+={r.genus.genus_plus:<4} dimJ={r.jacobi.dim:<4} in_S={r.in_S}")


if __name__ == "__main__":
    main()
