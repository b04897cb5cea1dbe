"""``chow-kit`` command line.

Exit codes: 0 success, 1 a verification failed or a counterexample was
found, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import comb
from pathlib import Path
from typing import Sequence

from .chow import ConsistencyError, analyze, flag_beta_via_h, gamma_chow_via_p
from .classical import (
    binomial_eulerian, eulerian, gamma_binomial_eulerian, gamma_eulerian, verify_decomposition,
)
from .descent import (
    EnumerationBoundError, build_diagram, verify_five_conditions, verify_interlacing_diagram,
)
from .fuzz import FuzzRecord, replay_record, run_fuzz, write_records
from .io import PosetFormatError, load_poset
from .polynomial import IntPoly, gamma_expand, multiplicity_at
from .poset import (
    InvalidPosetError, add_top, boolean_lattice, dual, f_vector, flag_alpha, flag_beta, flag_stats,
    h_vector, is_simplicial, remove_top, uniform_flats,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _err(msg: str) -> None:
    print(f"chow-kit: error: {msg}", file=sys.stderr)


def _key(S) -> str:
    return "{" + ",".join(map(str, S)) + "}"


def _gamma_text(g: IntPoly | None) -> str | None:
    return None if g is None else g.to_text()


# ---------------------------------------------------------------------------
# compute


def compute_report(P) -> dict:
    res = analyze(P)
    stats = flag_stats(add_top(P))
    return {
        "rank": res.n,
        "simplicial": res.simplicial,
        "f_vector": res.f_vector,
        "h_vector": res.h_vector,
        "h_positive": res.h_positive,
        "flag_alpha": {_key(S): v for S, v in stats.alpha.items()},
        "flag_beta": {_key(S): v for S, v in stats.beta.items()},
        "chow": res.chow.to_text(),
        "chow_dual": res.chow_dual.to_text(),
        "aug": res.aug.to_text(),
        "gamma_chow": _gamma_text(res.gamma_chow),
        "gamma_chow_dual": _gamma_text(res.gamma_chow_dual),
        "gamma_aug": _gamma_text(res.gamma_aug),
        "real_rooted": res.real_rooted,
        "interlace_dual_aug": res.interlace_dual_aug,
        "interlace_chow_aug": res.interlace_chow_aug,
        "routes": list(res.routes),
    }


def _print_text_report(rep: dict) -> None:
    print(f"rank n = {rep['rank']}  simplicial = {rep['simplicial']}")
    print(f"f-vector: {','.join(map(str, rep['f_vector']))}")
    print(f"h-vector: {','.join(map(str, rep['h_vector']))}  (h-positive: {rep['h_positive']})")
    print("flag alpha: " + "  ".join(f"{k}={v}" for k, v in rep["flag_alpha"].items()))
    print("flag beta:  " + "  ".join(f"{k}={v}" for k, v in rep["flag_beta"].items()))
    for name in ("chow", "chow_dual", "aug"):
        poly = IntPoly.from_text(rep[name])
        g = rep[f"gamma_{name}"]
        gtxt = IntPoly.from_text(g).pretty() if g is not None else "n/a (not palindromic)"
        print(f"{name:10s} {rep[name]:24s} = {poly.pretty()}")
        print(f"{'':10s} gamma = {gtxt}   real-rooted: {rep['real_rooted'][name]}")
    print(f"H_dual interlaces Haug: {rep['interlace_dual_aug']}")
    print(f"H interlaces Haug:      {rep['interlace_chow_aug']}")
    print(f"cross-checked by: {', '.join(rep['routes'])}")


def cmd_compute(args) -> int:
    try:
        P = load_poset(args.file)
    except FileNotFoundError:
        _err(f"no such file: {args.file}")
        return EXIT_USAGE
    except PosetFormatError as exc:
        _err(f"{args.file}:{exc}")
        return EXIT_USAGE
    try:
        if args.require_simplicial and not is_simplicial(P):
            _err("poset is not simplicial (--require-simplicial)")
            return EXIT_USAGE
        rep = compute_report(P)
    except (InvalidPosetError, ValueError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ConsistencyError as exc:
        _err(f"internal cross-check failed: {exc}")
        return EXIT_FAIL
    if args.format == "json":
        print(json.dumps(rep, sort_keys=True, indent=2))
    else:
        _print_text_report(rep)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-diagram


def parse_t_spec(spec: str, n: int) -> frozenset[int]:
    if spec == "full":
        return frozenset(range(1, n + 1))
    if spec == "chow":
        return frozenset(range(1, n))
    try:
        T = frozenset(int(t) for t in spec.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad T spec {spec!r}: expected full, chow or a list like 1,3") from None
    if 1 not in T:
        raise argparse.ArgumentTypeError(f"T = {sorted(T)} must contain 1")
    if not T <= set(range(1, n + 1)):
        raise argparse.ArgumentTypeError(f"T = {sorted(T)} is not inside [1, {n}]")
    return T


def cmd_verify_diagram(args) -> int:
    n = args.n
    if n < 2:
        _err("--n must be at least 2")
        return EXIT_USAGE
    try:
        T = parse_t_spec(args.t, n)
        cells = build_diagram(n, T)
    except argparse.ArgumentTypeError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except EnumerationBoundError as exc:
        _err(str(exc))
        return EXIT_USAGE
    print(f"D_{n}(T), T = {_key(sorted(T))}")
    for row in ("top", "mid", "bot"):
        polys = [c.poly.pretty() for c in cells if c.row == row]
        print(f"  {row}: " + " | ".join(polys))
    verdicts = [verify_interlacing_diagram(n, T)]
    if n >= 3 and T in (frozenset(range(1, n + 1)), frozenset(range(1, n))):
        verdicts.append(verify_five_conditions(n, T))
    ok = True
    for v in verdicts:
        print(f"{v.name}: {'pass' if v else 'FAIL'} ({v.checked} checks)")
        for f in v.failures:
            print(f"  {f}")
        ok = ok and v.passed
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# fuzz


def cmd_fuzz(args) -> int:
    if args.replay:
        return _replay(args.replay)
    for name in ("vertices", "rank", "count", "seed"):
        if getattr(args, name) is None:
            _err(f"--{name} is required unless --replay is given")
            return EXIT_USAGE
    if args.out is None:
        _err("--out is required unless --replay is given")
        return EXIT_USAGE
    facets = args.facets
    if facets != "random":
        try:
            facets = int(facets)
        except ValueError:
            _err(f"--facets must be an integer or 'random', got {facets!r}")
            return EXIT_USAGE
    if not 1 <= args.rank <= args.vertices:
        _err(f"--rank must lie in [1, {args.vertices}]")
        return EXIT_USAGE
    if facets != "random" and not 1 <= facets <= comb(args.vertices, args.rank):
        _err(f"--facets must lie in [1, {comb(args.vertices, args.rank)}]")
        return EXIT_USAGE
    try:
        out = open(args.out, "a", encoding="utf-8")
    except OSError as exc:
        _err(f"cannot write {args.out}: {exc.strerror}")
        return EXIT_USAGE
    with out:
        summary = write_records(
            run_fuzz(args.vertices, args.rank, facets, args.count, args.seed, jobs=args.jobs), out)
    print(f"instances: {summary['instances']}  h-positive: {summary['h_positive']}  "
          f"violations: {summary['violations']}")
    if summary["violations"]:
        print("violating seeds: " + ",".join(map(str, summary["violating_seeds"])))
        return EXIT_FAIL
    return EXIT_OK


def _replay(path: str) -> int:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        _err(f"cannot read {path}: {exc.strerror}")
        return EXIT_USAGE
    bad = 0
    count = 0
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            rec = FuzzRecord.from_json(line)
        except (ValueError, TypeError, KeyError) as exc:
            _err(f"{path}:{lineno}: not a fuzz record ({exc})")
            return EXIT_USAGE
        count += 1
        diffs = replay_record(rec)
        if diffs:
            bad += 1
            print(f"line {lineno} (seed {rec.seed}): mismatch")
            for d in diffs:
                print(f"  {d}")
        elif rec.violation:
            bad += 1
            print(f"line {lineno} (seed {rec.seed}): reproduced violation")
    print(f"replayed {count} records, {bad} flagged")
    return EXIT_FAIL if bad else EXIT_OK


# ---------------------------------------------------------------------------
# reproduce-example

# the worked example: U_{3,4}, whose proper flats form the edge set of K_4
EXPECTED = {
    "f": (1, 4, 6),
    "h": (1, 2, 3),
    "alpha": {(): 1, (1,): 4, (2,): 6, (1, 2): 12},
    "beta": {(): 1, (1,): 3, (2,): 5, (1, 2): 3},
    "beta_dual": {(): 1, (1,): 5, (2,): 3, (1, 2): 3},
    "beta_via_h": {(): 1, (1,): 3, (2,): 5, (1, 2): 3},
    "chow": "1,7,1",
    "chow_dual": "1,5,1",
    "aug": "1,11,11,1",
    "gamma_chow": "1,5",
    "gamma_chow_dual": "1,3",
    "gamma_aug": "1,8",
    "aug_multiplicity_at_minus_one": 1,
    "interlace_dual_aug": True,
    "interlace_chow_aug": True,
    "real_rooted": True,
}


def reproduce_example(expected: dict = EXPECTED) -> tuple[list[str], list[str]]:
    """Compute every quantity of the worked example; returns (lines, discrepancies)."""
    P = remove_top(uniform_flats(3, 4))
    Phat = add_top(P)
    Pstar = dual(Phat)
    res = analyze(P, require_simplicial=True)
    h = h_vector(P)
    subsets = [(), (1,), (2,), (1, 2)]
    got = {
        "f": tuple(f_vector(P)),
        "h": tuple(h),
        "alpha": {S: flag_alpha(Phat, S) for S in subsets},
        "beta": {S: flag_beta(Phat, S) for S in subsets},
        "beta_dual": {S: flag_beta(Pstar, S) for S in subsets},
        "beta_via_h": {S: flag_beta_via_h(h, S) for S in subsets},
        "chow": res.chow.to_text(),
        "chow_dual": res.chow_dual.to_text(),
        "aug": res.aug.to_text(),
        "gamma_chow": gamma_expand(res.chow).to_text(),
        "gamma_chow_dual": gamma_expand(res.chow_dual).to_text(),
        "gamma_aug": gamma_expand(res.aug).to_text(),
        "gamma_chow_via_p": gamma_chow_via_p(h, "chow").to_text(),
        "gamma_chow_dual_via_p": gamma_chow_via_p(h, "chow_dual").to_text(),
        "gamma_aug_via_p": gamma_chow_via_p(h, "aug").to_text(),
        "aug_multiplicity_at_minus_one": multiplicity_at(res.aug, -1),
        "interlace_dual_aug": res.interlace_dual_aug,
        "interlace_chow_aug": res.interlace_chow_aug,
        "real_rooted": res.all_real_rooted,
    }
    # the descent-family route must land on the same gamma polynomials
    for v in ("gamma_chow", "gamma_chow_dual", "gamma_aug"):
        expected = {**expected, f"{v}_via_p": expected.get(v)}
    lines, bad = [], []
    for key in got:
        want = expected.get(key)
        ok = got[key] == want
        lines.append(f"{'ok  ' if ok else 'FAIL'} {key}: {_show(got[key])}")
        if not ok:
            bad.append(f"{key}: expected {_show(want)}, computed {_show(got[key])}")
    return lines, bad


def _show(v) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{_key(k)}={x}" for k, x in v.items())
    if isinstance(v, tuple):
        return ",".join(map(str, v))
    return str(v)


def cmd_reproduce_example(args, expected: dict = EXPECTED) -> int:
    lines, bad = reproduce_example(expected)
    print("U_{3,4}: lattice of flats of the rank-3 uniform matroid on 4 elements")
    for line in lines:
        print(line)
    if bad:
        print(f"{len(bad)} discrepancies:")
        for b in bad:
            print(f"  {b}")
        return EXIT_FAIL
    print("all quantities match")
    return EXIT_OK


# ---------------------------------------------------------------------------
# eulerian


def cmd_eulerian(args) -> int:
    n = args.n
    if n < 1:
        _err("--n must be at least 1")
        return EXIT_USAGE
    try:
        A, At = eulerian(n + 1), binomial_eulerian(n + 1)
        verdicts = {
            "gamma counts match A": gamma_expand(A) == IntPoly(gamma_eulerian(n + 1)),
            "gamma counts match binomial A": gamma_expand(At) == IntPoly(gamma_binomial_eulerian(n + 1)),
        }
        res = analyze(remove_top(boolean_lattice(n + 1)))
        verdicts["Chow of Boolean lattice = A"] = res.chow == A
        verdicts["augmented Chow of Boolean lattice = binomial A"] = res.aug == At
        failures = []
        if n >= 2:
            dec = verify_decomposition(n)
            verdicts["descent-family decomposition"] = dec.passed
            failures = dec.failures
    except EnumerationBoundError as exc:
        _err(str(exc))
        return EXIT_USAGE
    print(f"A_{n + 1}       = {A.to_text()}  ({A.pretty()})")
    print(f"binomial A_{n + 1} = {At.to_text()}  ({At.pretty()})")
    print(f"gamma(A_{n + 1})          = {','.join(map(str, gamma_eulerian(n + 1)))}")
    print(f"gamma(binomial A_{n + 1}) = {','.join(map(str, gamma_binomial_eulerian(n + 1)))}")
    for name, ok in verdicts.items():
        print(f"{'pass' if ok else 'FAIL'} {name}")
    for f in failures:
        print(f"  {f}")
    return EXIT_OK if all(verdicts.values()) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chow-kit",
                                 description="Exact Chow polynomials of graded posets and interlacing checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="all statistics and polynomials of a poset file")
    c.add_argument("file")
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.add_argument("--require-simplicial", action="store_true")
    c.set_defaults(func=cmd_compute)

    d = sub.add_parser("verify-diagram", help="exact check of the interlacing diagram D_n(T)")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--t", default="full", help="full, chow, or a comma list containing 1")
    d.set_defaults(func=cmd_verify_diagram)

    f = sub.add_parser("fuzz", help="random pure complexes, appended to a JSONL log")
    f.add_argument("--vertices", type=int)
    f.add_argument("--rank", type=int)
    f.add_argument("--facets", default="random", help="facet count or 'random'")
    f.add_argument("--count", type=int)
    f.add_argument("--seed", type=int)
    f.add_argument("--out")
    f.add_argument("--jobs", type=int, default=1)
    f.add_argument("--replay", metavar="FILE", help="recompute and re-check every record in FILE")
    f.set_defaults(func=cmd_fuzz)

    r = sub.add_parser("reproduce-example", help="worked example on U_{3,4}")
    r.set_defaults(func=cmd_reproduce_example)

    e = sub.add_parser("eulerian", help="Eulerian cross-checks for the Boolean lattice")
    e.add_argument("--n", type=int, required=True)
    e.set_defaults(func=cmd_eulerian)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
