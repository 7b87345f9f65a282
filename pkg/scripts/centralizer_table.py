"""dim Cen_F(a) restricted to span(e_ij : i, j <= N), for a range of N.

Elements of K[H] + F give growing columns; everything else stays flat.

    python scripts/centralizer_table.py --max-n 10 "H" "D" "H^2 + e(0,0)"
"""

import argparse

from intdiff.iop import centralizer_F_dim, is_in_KH_plus_F
from intdiff.parser import evaluate

DEFAULT = ["H", "H^2 - 3*H", "H + e(0,0)", "D", "Int", "D + Int", "H*D", "x", "x*D^2"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("exprs", nargs="*", default=DEFAULT)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    ns = range(1, args.max_n + 1)
    print(f"{'a':<14} {'K[H]+F':>6}  " + " ".join(f"{n:>3}" for n in ns))
    for text in args.exprs:
        a = evaluate(text)
        dims = [centralizer_F_dim(a, n) for n in ns]
        flag = "yes" if is_in_KH_plus_F(a) else "no"
        print(f"{text:<14} {flag:>6}  " + " ".join(f"{d:>3}" for d in dims))


if __name__ == "__main__":
    main()
