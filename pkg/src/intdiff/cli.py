"""Command-line front end.

Every command prints one JSON document on stdout.  Exit codes: 0 success,
1 domain error (NotAUnit, ElementOfF, RelationViolated, ...), 2 syntax or
I/O error.  Errors are reported as ``{"error": kind, "detail": text}``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import endo as endo_mod
from . import fredholm
from .b1 import ad_eigenvalue_on_component, sigma_n_apply, sigma_n_preimage_search
from .base import HPoly, PolyX, polyx_divided_to_monomial, polyx_monomial_to_divided, scalar, scalar_str
from .errors import IntDiffError, NotAUnit, NotInOnePlusF, ParseError
from .fmatrix import deg_F, det_one_plus
from .iop import centralizer_F_dim, is_unit, pi, unit_inverse
from .parser import evaluate, parse_poly
from .sampling import rand_unit_f, rand_scalar
from . import serialize as ser


class InputError(Exception):
    """Unreadable or malformed input file (exit code 2)."""

    kind = "InputError"


def _i1(text):
    return evaluate(text, "I1")


def _load_endo(path):
    try:
        if path == "-":
            obj = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc
    try:
        return ser.endo_from_json(obj)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"malformed endomorphism file: {exc!r}") from exc


def cmd_normalize(args):
    return ser.iop_to_json(_i1(args.expr))


def cmd_pi(args):
    return ser.b1_to_json(pi(_i1(args.expr)))


def cmd_degf(args):
    return {"degf": deg_F(_i1(args.expr).fpart)}


def cmd_det(args):
    a = _i1(args.expr)
    if a.towers != {0: a.towers.get(0)} or a.towers[0] != 1:
        raise NotInOnePlusF("det is defined on 1 + F only")
    return {"det": scalar_str(det_one_plus(a.fpart))}


def cmd_is_unit(args):
    a = _i1(args.expr)
    if not is_unit(a):
        raise NotAUnit("units of I1 are lam*(1+f) with lam != 0 and det(1+f) != 0")
    return {"is_unit": True, "inverse": ser.iop_to_json(unit_inverse(a))}


def cmd_index(args):
    a = _i1(args.expr)
    kernel, coker = fredholm.stable_counts(a)
    return {
        "index": len(kernel) - coker,
        "kernel": [ser.polyx_to_json(PolyX(v)) for v in kernel],
    }


def cmd_kernel(args):
    return {"kernel": [ser.polyx_to_json(p) for p in fredholm.kernel_basis(_i1(args.expr))]}


def cmd_apply(args):
    a = _i1(args.expr)
    p = polyx_monomial_to_divided(parse_poly(args.poly))
    out = fredholm.apply(a, p)
    return {
        "divided": ser.polyx_to_json(out),
        "monomial": [scalar_str(c) for c in polyx_divided_to_monomial(out)],
    }


def cmd_centralizer_dim(args):
    return {"dim": centralizer_F_dim(_i1(args.expr), args.N), "N": args.N}


def cmd_check_endo(args):
    s = _load_endo(args.file)
    return {"valid": True, "endo": ser.endo_to_json(s)}


def cmd_decompose(args):
    return ser.decomposition_to_json(endo_mod.decompose(_load_endo(args.file)))


def cmd_sigma_n(args):
    _require_n(args.n, 1)
    return ser.b1_to_json(sigma_n_apply(args.n, evaluate(args.expr, "B1")))


def cmd_sigma_n_preimage(args):
    _require_n(args.n, 2)
    pre = sigma_n_preimage_search(args.n, evaluate(args.expr, "B1"), args.D)
    return {"preimage": None if pre is None else ser.b1_to_json(pre)}


def cmd_ad_eigenvalue(args):
    b = evaluate(args.expr, "B1")
    if set(b.components) - {0}:
        raise InputError("ad-eigenvalue takes a polynomial in H")
    nu = ad_eigenvalue_on_component(b.components.get(0, HPoly()), args.i)
    return {"eigenvalue": None if nu is None else scalar_str(nu)}


def cmd_make_endo(args):
    try:
        u = ser.fmatrix_from_json(json.loads(args.u))
        nu = scalar(args.nu)
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc
    s = endo_mod.compose(endo_mod.torus(nu), endo_mod.inner(u))
    return ser.endo_to_json(s)


def cmd_fuzz_decompose(args):
    rng = random.Random(args.seed)
    failures = []
    for trial in range(args.count):
        nu = rand_scalar(rng, 3)
        while nu == 0:
            nu = rand_scalar(rng, 3)
        u = rand_unit_f(rng, args.block)
        try:
            r = endo_mod.decompose(endo_mod.compose(endo_mod.torus(nu), endo_mod.inner(u)))
            ok = r.nu == nu and r.u == u
            detail = "" if ok else "decomposition differs from the construction"
        except IntDiffError as exc:
            ok, detail = False, f"{exc.kind}: {exc.detail}"
        if not ok:
            failures.append({"trial": trial, "nu": scalar_str(nu), "u": ser.fmatrix_to_json(u),
                             "detail": detail})
    out = {"seed": args.seed, "count": args.count, "passed": args.count - len(failures),
           "failures": failures}
    return out, (1 if failures else 0)


def _require_n(n, low):
    if n < low:
        raise InputError(f"n must be >= {low}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intdiff", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *params, help=None):
        sp = sub.add_parser(name, help=help)
        for param, kw in params:
            sp.add_argument(param, **kw)
        sp.set_defaults(func=func)
        return sp

    expr = ("expr", {"help": "operator expression (use -- before a leading minus)"})
    add("normalize", cmd_normalize, expr, help="canonical form of an I1 expression")
    add("pi", cmd_pi, expr, help="image in B1")
    add("degf", cmd_degf, expr, help="F-degree")
    add("det", cmd_det, expr, help="determinant of an element of 1+F")
    add("is-unit", cmd_is_unit, expr, help="unit test with inverse")
    add("index", cmd_index, expr, help="Fredholm index on K[x]")
    add("kernel", cmd_kernel, expr, help="kernel on K[x]")
    add("apply", cmd_apply, expr, ("poly", {"help": "polynomial in x, e.g. '1 + x^2/2'"}),
        help="act on a polynomial")
    add("centralizer-dim", cmd_centralizer_dim, expr, ("N", {"type": int}),
        help="dim of the centralizer in span(e_ij, i,j <= N)")
    add("check-endo", cmd_check_endo, ("file", {"help": "endomorphism JSON, or - for stdin"}),
        help="validate generator images")
    add("decompose", cmd_decompose, ("file", {"help": "endomorphism JSON, or - for stdin"}),
        help="split an endomorphism as torus * inner")
    add("sigma-n", cmd_sigma_n, ("n", {"type": int}), expr, help="apply sigma_n on B1")
    add("sigma-n-preimage", cmd_sigma_n_preimage, ("n", {"type": int}), expr, ("D", {"type": int}),
        help="bounded preimage search for sigma_n")
    add("ad-eigenvalue", cmd_ad_eigenvalue, ("expr", {"help": "polynomial in H"}),
        ("i", {"type": int, "help": "weight of the component D^(-i)"}),
        help="eigenvalue of ad(a) on the weight-i component of B1")
    mk = add("make-endo", cmd_make_endo, help="JSON for t_nu composed with omega_(1+u)")
    mk.add_argument("--nu", default="1")
    mk.add_argument("--u", default="[]", help='FMatrix JSON, e.g. \'[[0,1,"1"]]\'')
    fz = add("fuzz-decompose", cmd_fuzz_decompose, help="seeded round-trip decompositions")
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--count", type=int, default=20)
    fz.add_argument("--block", type=int, default=4)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    code = 0
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            result, code = result
    except IntDiffError as exc:
        result, code = {"error": exc.kind, "detail": exc.detail}, 1
    except (ParseError, InputError) as exc:
        result, code = {"error": exc.kind, "detail": str(exc)}, 2
    out.write(ser.dumps(result) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
