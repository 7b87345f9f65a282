"""Round-trip t_nu * omega_(1+u) through the decomposer and time it.

    python scripts/decompose_fuzz.py --seed 0 --trials 50 --block 5
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction

from intdiff.base import scalar_str
from intdiff.endo import compose, decompose, inner, torus
from intdiff.fmatrix import deg_F
from intdiff.sampling import rand_unit_f


@dataclass
class FuzzConfig:
    seed: int = 0
    trials: int = 50
    block: int = 4
    terms: int = 6
    nus: tuple = (1, 2, -1, Fraction(5, 3))


def run(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    rows = []
    for t in range(cfg.trials):
        nu = cfg.nus[t % len(cfg.nus)]
        u = rand_unit_f(rng, cfg.block, cfg.terms)
        s = compose(torus(nu), inner(u))
        t0 = time.perf_counter()
        r = decompose(s)
        dt = time.perf_counter() - t0
        rows.append((nu, deg_F(u), r.diagnostics.s, r.nu == nu and r.u == u, dt))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--block", type=int, default=4)
    args = ap.parse_args()
    rows = run(FuzzConfig(seed=args.seed, trials=args.trials, block=args.block))
    print(f"{'nu':>6} {'degF(u)':>8} {'s':>3} {'ok':>3} {'ms':>8}")
    for nu, d, s, ok, dt in rows:
        print(f"{scalar_str(Fraction(nu)):>6} {d:>8} {s:>3} {'y' if ok else 'N':>3} {dt * 1e3:8.1f}")
    times = [r[-1] for r in rows]
    print(f"\n{sum(r[3] for r in rows)}/{len(rows)} exact, median {statistics.median(times) * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
