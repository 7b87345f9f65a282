"""Fredholm index and kernel of sample operators, with and without an F term.

    python scripts/index_table.py --seed 3
"""

import argparse
import random

from intdiff.fmatrix import deg_F
from intdiff.fredholm import kernel_basis, stable_counts
from intdiff.iop import IOp
from intdiff.parser import evaluate
from intdiff.sampling import rand_fmatrix
from intdiff.serialize import dumps, polyx_to_json

OPS = ["D", "D^3", "Int^2", "1 + D", "H*D", "H - 5", "x*D - 3", "D^2*x", "(H - 2)*D^2 + Int"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--block", type=int, default=4)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'a':<20} {'ker':>3} {'coker':>5} {'ind':>4} {'ind(a+f)':>8} {'degF f':>6}  kernel")
    for text in OPS:
        a = evaluate(text)
        kernel, coker = stable_counts(a)
        f = rand_fmatrix(rng, args.block, 6)
        k2, c2 = stable_counts(a + IOp.from_f(f))
        basis = dumps([polyx_to_json(p) for p in kernel_basis(a)])
        print(f"{text:<20} {len(kernel):>3} {coker:>5} {len(kernel) - coker:>4} "
              f"{len(k2) - c2:>8} {deg_F(f):>6}  {basis}")


if __name__ == "__main__":
    main()
