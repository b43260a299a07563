"""spectral-rank command line: tables, verification sweeps, graph queries."""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import __version__
from .exact import charpoly, largest_real_root, rank
from .extremal import (
    MAX_ENUM_N,
    alpha,
    alpha_floor_ceil,
    f_radius,
    identity_terms,
    family_comparisons,
    min_radius_bounds,
    min_rank5_extremal,
    theorem1_report,
    theorem2_report,
)
from .graph import Graph, catalog, contains_clique, family_graph
from .graph6 import from_graph6, to_graph6
from .spectral import spectral_radius
from .tables import build_table, render_csv, render_json, render_text

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

VERIFY_DEFAULTS = {
    "theorem1": (2, 6),
    "theorem2": (5, 7),
    "lemmas": (8, 30),
    "identities": (12, 40),
    "unimodal": (12, 60),
    "bounds": (12, 60),
}
VERIFY_MIN_N = {"theorem1": 2, "theorem2": 5, "lemmas": 8, "identities": 12, "unimodal": 12, "bounds": 12}

IDENTITY_TOL = 1e-8
UNIMODAL_MARGIN = 1e-7
BOUND_SLACK = 1e-9


class UsageError(ValueError):
    pass


# --------------------------------------------------------------------------
# verify targets; each yields (row dict, passed)
# --------------------------------------------------------------------------

def _verify_theorem1(n_min, n_max, args):
    for n in range(n_min, n_max + 1):
        rs = [args.r] if args.r is not None else range(2, n + 1)
        for r in rs:
            if not 2 <= r <= n:
                continue
            rep = theorem1_report(n, r, allow_large=args.allow_large)
            yield {
                "n": n, "r": r, "maximizer": f"T({n},{r})", "candidates": rep.candidates,
                "witnesses": rep.witnesses, "rho_max": f"{rep.extreme_radius:.12f}",
                "gap": f"{rep.gap:.6g}", "clique_free": rep.clique_free,
            }, rep.passed


def _verify_theorem2(n_min, n_max, args):
    for n in range(n_min, n_max + 1):
        rep = theorem2_report(n, allow_large=args.allow_large)
        yield {
            "n": n, "minimizer": min_rank5_extremal(n).spec, "candidates": rep.candidates,
            "witnesses": rep.witnesses, "rho_min": f"{rep.extreme_radius:.12f}",
            "gap": f"{rep.gap:.6g}", "clique_free": rep.clique_free,
        }, rep.passed


def _verify_lemmas(n_min, n_max, args):
    for n in range(n_min, n_max + 1):
        rep = family_comparisons(n)
        row = {"n": n, "g1_vs_g7": f"{rep.g1_vs_g7:.6g}"}
        if rep.g1_k1_vs_k2 is not None:
            row["g1_k1_vs_k2"] = f"{rep.g1_k1_vs_k2:.6g}"
            row["g10_vs_g1_min"] = f"{min(rep.g10_vs_g1.values()):.6g}"
        yield row, rep.passed


def _verify_identities(n_min, n_max, args):
    for n in range(n_min, n_max + 1):
        worst, low = 0.0, math.inf
        for i in range(1, (n - 4) // 2 + 1):
            _, a, b = identity_terms(n, i)
            worst = max(worst, abs(a * b - 2))
            low = min(low, a, b)
        yield {"n": n, "max_abs_product_minus_2": f"{worst:.3g}", "min_factor": f"{low:.6g}"}, \
            worst < IDENTITY_TOL and low > 0


def unimodal_check(n: int) -> dict:
    """Direct argmin over i of rho(F_n(i)) and the strict down-then-up margin.

    Only the step between the pivot indices floor(alpha) and ceil(alpha) is
    exempt from the margin.
    """
    idx = list(range(1, (n - 4) // 2 + 1))
    radii = [f_radius(n, i) for i in idx]
    best = idx[min(range(len(idx)), key=radii.__getitem__)]
    lo, hi = alpha_floor_ceil(n)
    margin = math.inf
    for a, b, ra, rb in zip(idx, idx[1:], radii, radii[1:]):
        if (a, b) == (lo, hi):
            continue
        step = ra - rb if b <= best else rb - ra
        margin = min(margin, step)
    return {"n": n, "argmin": best, "alpha": alpha(n), "floor": lo, "ceil": hi, "margin": margin}


def _verify_unimodal(n_min, n_max, args):
    for n in range(n_min, n_max + 1):
        c = unimodal_check(n)
        ok = c["argmin"] in (c["floor"], c["ceil"]) and c["margin"] > UNIMODAL_MARGIN
        yield {"n": n, "argmin": c["argmin"], "alpha": f"{c['alpha']:.6f}",
               "margin": f"{c['margin']:.6g}"}, ok


def _verify_bounds(n_min, n_max, args):
    for n in range(n_min, n_max + 1):
        rho = min_rank5_extremal(n).radius
        lower, upper = min_radius_bounds(n)
        yield {"n": n, "lower": f"{lower:.12f}", "rho": f"{rho:.12f}", "upper": f"{upper:.12f}"}, \
            lower - BOUND_SLACK <= rho <= upper + BOUND_SLACK


VERIFIERS = {
    "theorem1": _verify_theorem1,
    "theorem2": _verify_theorem2,
    "lemmas": _verify_lemmas,
    "identities": _verify_identities,
    "unimodal": _verify_unimodal,
    "bounds": _verify_bounds,
}


# --------------------------------------------------------------------------
# query
# --------------------------------------------------------------------------

_ID = re.compile(r"^(K\d+|[A-Z]\w*)$")


def parse_graph(text: str) -> tuple[Graph, str]:
    """Family spec ("G1:1,1,1,1,4"), catalog id ("K3", "G7") or graph6 string."""
    text = text.strip()
    if ":" in text:
        return family_graph(text), text
    if _ID.match(text):
        try:
            return catalog(text), text
        except KeyError:
            pass
    return from_graph6(text), text


def query(text: str) -> dict:
    g, label = parse_graph(text)
    poly = charpoly(g.int_matrix())
    r = rank(g.int_matrix())
    connected = g.is_connected()
    return {
        "input": label,
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "rank": r,
        "connected": connected,
        "rho_power": f"{spectral_radius(g).radius:.12f}" if connected else None,
        "rho_charpoly": f"{largest_real_root(poly):.12f}",
        "charpoly": str(poly),
        "clique_free": {"clique": f"K{r + 1}", "free": not contains_clique(g, r + 1)},
    }


def extremal_report(n: int) -> dict:
    if n < 5:
        raise UsageError("extremal needs n >= 5")
    v = min_rank5_extremal(n)
    out = {"n": n, "graph": v.spec, "k": v.k, "rho": f"{v.radius:.12f}", "bounds": None}
    if n >= 12:
        lower, upper = min_radius_bounds(n)
        out["bounds"] = [f"{lower:.12f}", f"{upper:.12f}"]
    return out


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _print_kv(d: dict, out) -> None:
    for k, v in d.items():
        if isinstance(v, dict):
            v = " ".join(f"{a}={b}" for a, b in v.items())
        elif isinstance(v, list):
            v = " ".join(map(str, v))
        print(f"{k}: {v}", file=out)


def cmd_table(args, out) -> int:
    report = build_table(args.id, tol=args.tol, reference=args.reference)
    if args.format == "csv":
        out.write(render_csv(report))
    elif args.format == "json":
        out.write(render_json(report, __version__) + "\n")
    else:
        out.write(render_text(report))
    for row in report.failures():
        print(f"mismatch: table {row.table} n={row.n} {row.column}: computed {row.value_text()}, "
              f"reference {row.reference}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    lo, hi = VERIFY_DEFAULTS[args.target]
    if args.n is not None:
        args.n_min = args.n_max = args.n
    n_min = args.n_min if args.n_min is not None else lo
    n_max = args.n_max if args.n_max is not None else hi
    if n_min < VERIFY_MIN_N[args.target] or n_max < n_min:
        raise UsageError(f"{args.target} needs {VERIFY_MIN_N[args.target]} <= n-min <= n-max")
    if args.target in ("theorem1", "theorem2") and n_max > MAX_ENUM_N and not args.allow_large:
        raise UsageError(f"exhaustive enumeration is limited to n <= {MAX_ENUM_N} (use --allow-large)")
    rows, ok = [], True
    for row, passed in VERIFIERS[args.target](n_min, n_max, args):
        row["pass"] = passed
        ok = ok and passed
        rows.append(row)
        if args.format == "text":
            print("  ".join(f"{k}={v}" for k, v in row.items()), file=out)
    if args.format == "json":
        print(json.dumps({"verdict": args.target, "rows": rows, "pass": ok, "tool_version": __version__},
                         indent=2), file=out)
    else:
        print(f"{args.target}: {'PASS' if ok else 'FAIL'}", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_query(args, out) -> int:
    info = query(args.graph)
    if args.format == "json":
        print(json.dumps({"verdict": "query", "rows": [info], "pass": True, "tool_version": __version__},
                         indent=2), file=out)
    else:
        _print_kv(info, out)
    return EXIT_OK


def cmd_extremal(args, out) -> int:
    info = extremal_report(args.n)
    if args.format == "json":
        print(json.dumps({"verdict": "extremal", "rows": [info], "pass": True, "tool_version": __version__},
                         indent=2), file=out)
    else:
        _print_kv(info, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spectral-rank", description=__doc__)
    p.add_argument("--version", action="version", version=f"spectral-rank {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="recompute a reference table and compare")
    t.add_argument("id", type=int, choices=(1, 2, 3, 4))
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.add_argument("--tol", type=float, default=5e-5, help="tolerance for 4-decimal cells")
    t.add_argument("--reference", help="alternative reference JSON file")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("target", choices=tuple(VERIFIERS))
    v.add_argument("--n", type=int, help="single order, shorthand for --n-min N --n-max N")
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--r", type=int, help="single rank for theorem1")
    v.add_argument("--allow-large", action="store_true", help="permit enumeration beyond n = 7")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("query", help="rank, radius and charpoly of one graph")
    q.add_argument("graph", help="graph6 string, family spec BASE:n1,...,nk, or id such as K3")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_query)

    e = sub.add_parser("extremal", help="minimum-radius connected rank-5 graph of order n")
    e.add_argument("n", type=int)
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_extremal)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ValueError, KeyError, OSError) as exc:
        print(f"spectral-rank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
