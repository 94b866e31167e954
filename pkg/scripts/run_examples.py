"""Run the full pipeline on a list of Kac gradings and print one line each.

    python scripts/run_examples.py
    python scripts/run_examples.py A2:0,1,1 G2:1,0,1
"""
import argparse
import time

from gradedlie.cli import JobSpec, run
from gradedlie.cli.jobs import parse_kac

DEFAULT = ["A1:1,1", "A2:1,1,1", "A1:1,0", "A2:1,0,0", "A2:0,1,1", "B2:1,0,0", "B2:1,1,1",
           "B2:1,0,1", "G2:1,0,1", "G2:0,1,0", "A3:1,1,0,0"]


def line(item, rep, dt):
    s = rep["sections"]

    def get(sec, key):
        d = s.get(sec, {})
        return d.get(key, "-") if d.get("status") == "ok" else d.get("status", "-")

    orbits = s.get("real-orbits", {}).get("orbits")
    counts = [o["count"] for o in orbits] if orbits else "-"
    return (f"{item:<14} dims={get('grade', 'dims')!s:<14} rank={get('cartan', 'rank')!s:<3} "
            f"|W|={get('weyl', 'order')!s:<6} strata={get('strata', 'count')!s:<4} "
            f"central={get('central', 'pass')!s:<6} H1={get('h1', 'classes')!s:<3} "
            f"orbits={counts}  ({dt:.2f}s)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("specs", nargs="*", default=DEFAULT, help="TYPE:KAC items")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for item in args.specs:
        t, kac = item.split(":")
        t0 = time.perf_counter()
        rep = run(JobSpec(t, parse_kac(kac), seed=args.seed))
        print(line(item, rep, time.perf_counter() - t0))


if __name__ == "__main__":
    main()
