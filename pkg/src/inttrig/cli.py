"""Command-line interface.

Subcommands expose the library operations with stable text/JSON I/O so every
worked example is reproducible from a shell.  Exit codes: 0 success, 1 a
verification check failed, 2 invalid input, 3 operator not applicable to the
input (the diagnostic carries the library error name).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .cone_ops import (
    adjacent,
    canonical_point_coords,
    euclid_reduce,
    partial_quotient,
    perm_parse,
    permute,
    plucker,
    sba_cones,
    sba_step_cone,
    simplex_partner_check,
    special_matrix,
    special_matrix_det_check,
    verify_cycle_products,
    verify_plucker_transpose,
    verify_transpose_relations,
)
from .core_arith import ProjRat
from .errors import (
    CosineNotInvertible,
    InputError,
    IntTrigError,
    NonUnitEdgeLengths,
    NotSimple,
)
from .generators import random_nonsimple_cone3, random_simple_cone, random_unit_simplex
from .hnf_arctan import arctan_form, icos_ji, is_simple, isin_i, itan_i
from .lattice_invariants import Cone, Simplex, cone, simplex
from .trig2d import (
    angle,
    iarctan2,
    icos2,
    isin2,
    itan2,
    lls,
    sail,
    sba_classical,
    sba_step,
    transpose2,
    triangle_exists,
)

SUITES = ("transpose", "cycle", "adjacent", "simplex", "propp", "special-det", "plucker", "all")


# -- serialization helpers ----------------------------------------------------

def _s(x: int) -> str:
    return str(int(x))


def _frac(x: Fraction) -> str:
    x = Fraction(x)
    return _s(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _proj(x: ProjRat) -> str:
    return str(x)


def _grid(g: np.ndarray) -> list[list[str]]:
    return [[_s(v) for v in row] for row in g]


def _vec(v) -> list[str]:
    return [_s(x) for x in v]


def _cone_doc(c: Cone) -> dict:
    return {"vertex": _vec(c.vertex), "edges": [_vec(e) for e in c.edges]}


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace, numbers as
    decimal strings (arbitrary precision survives a round trip)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(args, obj, text_lines=None) -> None:
    if getattr(args, "text", False):
        for line in text_lines or [json.dumps(obj, indent=2, sort_keys=True)]:
            print(line)
    else:
        sys.stdout.write(dumps(obj))


# -- input parsing ------------------------------------------------------------

def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None


def parse_cone_document(text: str) -> tuple[Cone, dict]:
    """Cone from a JSON document or a plain text matrix (columns are edges)."""
    stripped = text.lstrip()
    if not stripped:
        raise InputError("empty input")
    if stripped[0] == "{":
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InputError(f"bad JSON: {e}") from None
        if "edges" not in doc or not isinstance(doc["edges"], list):
            raise InputError("document needs an 'edges' list")
        try:
            edges = [[int(x) for x in e] for e in doc["edges"]]
            vertex = [int(x) for x in doc["vertex"]] if doc.get("vertex") else None
        except (TypeError, ValueError) as e:
            raise InputError(f"non-integer entry: {e}") from None
        try:
            return cone(edges, vertex), doc
        except IntTrigError as e:
            raise InputError(f"{type(e).__name__}: {e}") from None
    rows = []
    for line in stripped.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
        except ValueError:
            raise InputError(f"bad matrix row: {line!r}") from None
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InputError("matrix rows are ragged or missing")
    edges = [list(col) for col in zip(*rows)]
    try:
        return cone(edges), {}
    except IntTrigError as e:
        raise InputError(f"{type(e).__name__}: {e}") from None


def _cone_to_simplex(c: Cone) -> Simplex:
    verts = [c.vertex] + [tuple(v + e for v, e in zip(c.vertex, edge)) for edge in c.edges]
    return simplex(verts)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational: {text!r}") from None


# -- subcommands ---------------------------------------------------------------

def cmd_arctan(args) -> int:
    c, _ = parse_cone_document(_read_source(args.input))
    f = arctan_form(c)
    k = f.k
    obj = {
        "grid": _grid(f.grid),
        "transform": _grid(f.transform),
        "isin": [_s(isin_i(f, i)) for i in range(1, k + 1)],
        "icos": {f"{j},{i}": _s(icos_ji(f, j, i)) for i in range(1, k + 1) for j in range(1, i)},
        "itan": [_vec(itan_i(f, i)) for i in range(1, k + 1)],
    }
    lines = ["grid:"] + ["  " + " ".join(r) for r in obj["grid"]]
    lines += ["isin: " + " ".join(obj["isin"])]
    lines += [f"icos[{key}] = {val}" for key, val in sorted(obj["icos"].items())]
    lines += ["itan: " + "; ".join("(" + ":".join(t) + ")" for t in obj["itan"])]
    _emit(args, obj, lines)
    return 0


def _angle_from_arg(arg: str):
    txt = arg.strip()
    looks_rational = txt and not txt.startswith("{") and txt != "-" and all(
        ch.isdigit() or ch in "+-/" for ch in txt
    )
    if looks_rational:
        return iarctan2(_parse_fraction(txt))
    c, _ = parse_cone_document(_read_source(arg))
    if c.k != 2 or c.ambient_dim != 2:
        raise InputError("trig2d needs a 2-cone in the plane")
    return angle(c.edges[0], c.edges[1], c.vertex)


def cmd_trig2d(args) -> int:
    a = _angle_from_arg(args.input)
    obj = {
        "isin": _s(isin2(a)),
        "icos": _s(icos2(a)),
        "itan": _frac(itan2(a)),
        "lls": [_s(x) for x in lls(a)],
        "sail": [_vec(p) for p in sail(a)],
    }
    if args.sba:
        obj["sba"] = [_frac(v) for v in sba_classical(itan2(a))]
    lines = [f"itan = {obj['itan']}, isin = {obj['isin']}, icos = {obj['icos']}",
             "lls: (" + ",".join(obj["lls"]) + ")",
             "sail: " + " ".join("(" + ",".join(p) + ")" for p in obj["sail"])]
    if args.sba:
        lines.append("sba: " + " ".join(obj["sba"]))
    _emit(args, obj, lines)
    return 0


def cmd_transform(args) -> int:
    c, _ = parse_cone_document(_read_source(args.input))
    op = args.op
    if op == "transpose":
        out = permute(c, perm_parse(args.arg, c.k))
    elif op == "adjacent":
        out = adjacent(c, int(args.arg))
    elif op == "reduce":
        out = euclid_reduce(c, int(args.arg))
    elif op == "T":
        out = sba_step_cone(c, int(args.arg))
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown op {op}")
    f = arctan_form(out)
    obj = {"cone": _cone_doc(out), "grid": _grid(f.grid)}
    lines = ["edges: " + " ".join("(" + ",".join(_vec(e)) + ")" for e in out.edges),
             "grid:"] + ["  " + " ".join(r) for r in obj["grid"]]
    _emit(args, obj, lines)
    return 0


def cmd_triangle(args) -> int:
    angles = [iarctan2(_parse_fraction(t)) for t in (args.a, args.b, args.c)]
    res = triangle_exists(*angles)
    obj = {
        "exists": res.exists,
        "ordering": list(res.ordering) if res.ordering is not None else None,
        "bracket_full": _proj(res.bracket_full),
        "bracket_pair": _proj(res.bracket_pair),
    }
    _emit(args, obj, [f"exists: {res.exists}",
                      f"ordering: {obj['ordering']}",
                      f"brackets: {obj['bracket_full']}, {obj['bracket_pair']}"])
    return 0


def cmd_sba(args) -> int:
    txt = args.input.strip()
    if txt and not txt.startswith("{") and txt != "-" and all(ch.isdigit() or ch in "+-/" for ch in txt):
        vals = sba_classical(_parse_fraction(txt))
        obj = {"sba": [_frac(v) for v in vals]}
        _emit(args, obj, ["sba: " + " ".join(obj["sba"])])
        return 0
    c, _ = parse_cone_document(_read_source(args.input))
    forms = sba_cones(c, args.max_steps)
    obj = {"classes": [_grid(f.grid) for f in forms], "max_steps": _s(args.max_steps)}
    lines = [f"{len(forms)} classes reached:"]
    lines += ["  " + "; ".join(" ".join(r) for r in g) for g in obj["classes"]]
    _emit(args, obj, lines)
    return 0


def cmd_plucker(args) -> int:
    c, _ = parse_cone_document(_read_source(args.input))
    f = arctan_form(c)
    obj = {"plucker": _vec(plucker(c)), "grid": _grid(f.grid)}
    _emit(args, obj, ["plucker: (" + ", ".join(obj["plucker"]) + ")"])
    return 0


# -- verify --------------------------------------------------------------------

def _check(name: str, holds, details: str) -> dict:
    return {"name": name, "holds": holds, "details": details}


def _residue_details(f) -> str:
    k = f.k
    return "grid " + "; ".join(" ".join(_s(x) for x in row) for row in f.grid)


def _suite_checks(c: Cone, suites: tuple[str, ...], doc: dict, label: str) -> list[dict]:
    checks: list[dict] = []
    f = arctan_form(c)
    k = f.k
    simple = is_simple(c)
    s = isin_i(f, k)

    if doc.get("expect_grid") is not None:
        want = [[int(x) for x in row] for row in doc["expect_grid"]]
        got = [[int(x) for x in row] for row in f.grid]
        checks.append(_check(f"{label}:expected-grid", got == want,
                             f"computed {got}, document says {want}"))

    def needs_simple(suite: str) -> bool:
        if simple:
            return False
        checks.append(_check(f"{label}:{suite}", None, "skipped: cone is not simple"))
        return True

    for suite in suites:
        if suite == "transpose":
            if needs_simple(suite):
                continue
            for i in range(1, k + 1):
                for j in range(i + 1, k + 1):
                    try:
                        ok = verify_transpose_relations(c, i, j)
                        checks.append(_check(f"{label}:transpose({i},{j})", ok,
                                             f"cosine relations mod isin_k={_s(s)}"))
                    except CosineNotInvertible as e:
                        checks.append(_check(f"{label}:transpose({i},{j})", None,
                                             f"skipped: {e}"))
        elif suite == "cycle":
            if k < 2 or needs_simple(suite):
                continue
            tau = tuple(list(range(2, k + 1)) + [1])
            ok = verify_cycle_products(c, tau)
            checks.append(_check(f"{label}:cycle(1..{k})", ok,
                                 f"products == (-1)^{k} mod {_s(s)}"))
        elif suite == "adjacent":
            if needs_simple(suite):
                continue
            ok = True
            for i in range(1, k + 1):
                fa = arctan_form(adjacent(c, i))
                if isin_i(fa, k) != s:
                    ok = False
                for x in range(1, k):
                    want = (s - icos_ji(f, x, k)) % s if (x == i or i == k) else icos_ji(f, x, k)
                    if icos_ji(fa, x, k) != want:
                        ok = False
            checks.append(_check(f"{label}:adjacent", ok, "cosine flips isin-icos"))
        elif suite == "simplex":
            try:
                sx = _cone_to_simplex(c)
                ok = simplex_partner_check(sx)
                fa2 = arctan_form(c)
                checks.append(_check(f"{label}:simplex", ok,
                                     f"partner congruence == 1 mod {_s(isin_i(fa2, k))}"))
            except (NonUnitEdgeLengths, NotSimple, IntTrigError) as e:
                checks.append(_check(f"{label}:simplex", None,
                                     f"skipped: {type(e).__name__}: {e}"))
        elif suite == "propp":
            if needs_simple(suite):
                continue
            coords = canonical_point_coords(c)
            want = tuple((-icos_ji(f, x, k)) % coords.modulus for x in range(1, k)) + (1 % coords.modulus,)
            checks.append(_check(f"{label}:propp", coords.coords == want,
                                 f"coords {list(coords.coords)} mod {_s(coords.modulus)}"))
        elif suite == "special-det":
            if needs_simple(suite):
                continue
            ok = special_matrix_det_check(c)
            checks.append(_check(f"{label}:special-det", ok, f"det == 1-{k} mod {_s(s)}"))
        elif suite == "plucker":
            if k < 2:
                checks.append(_check(f"{label}:plucker", None, "skipped: k < 2"))
                continue
            ok = all(verify_plucker_transpose(c, i) for i in range(1, k))
            checks.append(_check(f"{label}:plucker", ok,
                                 f"p_i p_i' == (iv/isin_k)^2 mod {_s(f.iv)}"))
    return checks


def cmd_verify(args) -> int:
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    checks: list[dict] = []
    if args.random:
        rng = random.Random(args.seed)
        for t in range(args.random):
            if args.suite == "plucker":
                c = random_nonsimple_cone3(rng)
            elif args.suite == "simplex":
                sx = random_unit_simplex(rng, 3, 6)
                checks.append(_check(f"random[{t}]:simplex", simplex_partner_check(sx),
                                     f"vertices {[list(v) for v in sx.vertices]}"))
                continue
            else:
                c = random_simple_cone(rng, args.k, sine_bound=10**6)
            checks.extend(_suite_checks(c, suites, {}, f"random[{t}]"))
    else:
        if not args.input:
            raise InputError("verify needs an input document or --random N")
        c, doc = parse_cone_document(_read_source(args.input))
        checks.extend(_suite_checks(c, suites, doc, "input"))
    passed = sum(1 for ch in checks if ch["holds"] is True)
    failed = sum(1 for ch in checks if ch["holds"] is False)
    skipped = sum(1 for ch in checks if ch["holds"] is None)
    obj = {
        "checks": checks,
        "seed": _s(args.seed) if args.random else None,
        "summary": {"passed": passed, "failed": failed, "skipped": skipped},
    }
    lines = [f"{'PASS' if ch['holds'] else ('SKIP' if ch['holds'] is None else 'FAIL')}  "
             f"{ch['name']}  {ch['details']}" for ch in checks]
    lines.append(f"passed={passed} failed={failed} skipped={skipped}")
    _emit(args, obj, lines)
    return 1 if failed else 0


# -- entry ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="inttrig",
        description="Exact integer trigonometry of rational simplicial cones.",
    )
    p.add_argument("--version", action="version", version=f"inttrig {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_fmt(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="text", action="store_false", default=False,
                       help="canonical JSON output (default)")
        g.add_argument("--text", dest="text", action="store_true", help="human-readable output")

    sp = sub.add_parser("arctan", help="normalised Hermite form and trig values of a cone")
    sp.add_argument("input", help="cone document path, '-' for stdin")
    add_fmt(sp)
    sp.set_defaults(fn=cmd_arctan)

    sp = sub.add_parser("trig2d", help="planar trig report for a rational or a 2D cone")
    sp.add_argument("input", help="rational like 8/5, or an angle document path")
    sp.add_argument("--sba", action="store_true", help="include strong best approximations")
    add_fmt(sp)
    sp.set_defaults(fn=cmd_trig2d)

    sp = sub.add_parser("transform", help="transpose/adjacent/reduce/T on a cone")
    sp.add_argument("input")
    sp.add_argument("op", choices=("transpose", "adjacent", "reduce", "T"))
    sp.add_argument("arg", help="permutation '(1,3)' or '[3,2,1]' for transpose; index otherwise")
    add_fmt(sp)
    sp.set_defaults(fn=cmd_transform)

    sp = sub.add_parser("verify", help="run congruence check suites")
    sp.add_argument("input", nargs="?", help="cone document (omit with --random)")
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("--random", type=int, default=0, metavar="N",
                    help="run on N seeded random cones instead of an input")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--k", type=int, default=3, help="cone dimension for --random")
    add_fmt(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("triangle", help="integer triangle criterion for three tangents")
    sp.add_argument("a"); sp.add_argument("b"); sp.add_argument("c")
    add_fmt(sp)
    sp.set_defaults(fn=cmd_triangle)

    sp = sub.add_parser("sba", help="strong best approximations of a rational or a cone")
    sp.add_argument("input", help="rational like 43/30, or a cone document path")
    sp.add_argument("--max-steps", "--depth", dest="max_steps", type=int, default=8)
    add_fmt(sp)
    sp.set_defaults(fn=cmd_sba)

    sp = sub.add_parser("plucker", help="Pluecker coordinates of a cone's normal form")
    sp.add_argument("input")
    add_fmt(sp)
    sp.set_defaults(fn=cmd_plucker)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error[InputError]: {e}", file=sys.stderr)
        return 2
    except IntTrigError as e:
        print(f"error[{type(e).__name__}]: {e}", file=sys.stderr)
        return 3


def entry() -> None:  # console script
    sys.exit(main())
