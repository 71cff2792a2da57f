"""Command-line front end: ``uslev <verb> ...`` prints one JSON document.

Exit codes: 0 success, 1 refusal because a hypothesis could not be
certified, 2 malformed input.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import re
import sys
from typing import Optional

import numpy as np

from . import checks, efficiency, norms, order, scalarize, sets
from . import phi as phi_mod
from .extvalues import to_json as ext_json
from .sets import SetSchemaError, UnsupportedError, UslevError

logger = logging.getLogger("uslev")

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INPUT = 2
SIG_DIGITS = 12


class InputError(UslevError):
    pass


# --------------------------------------------------------------------------
# input


def parse_vector(text: str, name: str) -> np.ndarray:
    try:
        vals = [float(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise InputError(f"--{name}: expected comma-separated numbers, got {text!r}") from None
    if not vals or not all(math.isfinite(v) for v in vals):
        raise InputError(f"--{name}: expected finite comma-separated numbers, got {text!r}")
    return np.array(vals)


def parse_set(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return sets.set_from_json(obj)
    except SetSchemaError as exc:
        raise InputError(f"{path}: {exc}") from None


def _is_number(tok: str) -> bool:
    try:
        float(tok)
    except ValueError:
        return False
    return True


def parse_points(path: str) -> np.ndarray:
    """CSV with one point per row; a first row with a non-numeric first token is a header."""
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    if rows and not _is_number(rows[0][0].strip()):
        rows = rows[1:]
    if not rows:
        raise InputError(f"{path}: no points")
    width = len(rows[0])
    out = []
    for lineno, row in enumerate(rows, start=1):
        if len(row) != width:
            raise InputError(f"{path}: row {lineno} has {len(row)} fields, expected {width}")
        try:
            out.append([float(c) for c in row])
        except ValueError:
            raise InputError(f"{path}: row {lineno} is not numeric") from None
    P = np.array(out)
    if not np.all(np.isfinite(P)):
        raise InputError(f"{path}: coordinates must be finite")
    return P


def _check_dim(n, *named):
    for name, v in named:
        if v is not None and len(v) != n:
            raise InputError(f"--{name} has dimension {len(v)}, the set has dimension {n}")


def env_tolerance() -> float:
    raw = os.environ.get("USLEV_TOL")
    if raw is None:
        return sets.TOL
    try:
        tol = float(raw)
    except ValueError:
        raise InputError(f"USLEV_TOL must be a positive number, got {raw!r}") from None
    if not (tol > 0 and math.isfinite(tol)):
        raise InputError(f"USLEV_TOL must be a positive number, got {raw!r}")
    return tol


# --------------------------------------------------------------------------
# output


def _round(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return "-inf" if x == -math.inf else ("inf" if x > 0 else "nan")
        return float(f"{x:.{SIG_DIGITS}g}")
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_round(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(_round(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


# --------------------------------------------------------------------------
# verbs


def cmd_phi(args):
    A = parse_set(args.set)
    n = sets.dim(A)
    k = parse_vector(args.k, "k")
    _check_dim(n, ("k", k))
    prob = phi_mod.PhiProblem(A, k, env_tolerance())
    if args.dump_grid:
        return _dump_grid(prob, args)
    if args.point is None:
        raise InputError("--point is required unless --dump-grid is given")
    y = parse_vector(args.point, "point")
    _check_dim(n, ("point", y))
    if args.oracle:
        v = phi_mod.phi_oracle(prob, y)
    else:
        try:
            v = phi_mod.phi_eval(prob, y)
        except UnsupportedError as exc:
            raise InputError(f"{exc} (pass --oracle)") from None
    return {"phi": ext_json(v), "class": v.kind}


def _dump_grid(prob, args):
    if prob.dim != 2:
        raise InputError("--dump-grid needs a two-dimensional set")
    spec = parse_vector(args.dump_grid, "dump-grid")
    if len(spec) != 3:
        raise InputError("--dump-grid expects LO,HI,N")
    lo, hi, m = spec
    if not (hi > lo) or m < 2 or m != int(m) or m > 1000:
        raise InputError("--dump-grid expects LO,HI,N with HI > LO and integer 2 <= N <= 1000")
    axis = np.linspace(lo, hi, int(m))
    X, Y = np.meshgrid(axis, axis)
    pts = np.column_stack([X.ravel(), Y.ravel()])
    if args.oracle or not sets.is_polyhedral(prob.A):
        vals = [ext_json(phi_mod.phi_oracle(prob, p)) for p in pts]
    else:
        kinds, values = phi_mod.phi_many(prob.A, prob.k, pts, prob.tol)
        vals = [ext_json(phi_mod.to_ext(int(c), float(v))) for c, v in zip(kinds, values)]
    rows = [vals[i * len(axis):(i + 1) * len(axis)] for i in range(len(axis))]
    return {"x": axis.tolist(), "y": axis.tolist(), "values": rows}


def cmd_norm(args):
    C = parse_set(args.cone)
    n = sets.dim(C)
    k = parse_vector(args.k, "k")
    y = parse_vector(args.point, "point")
    _check_dim(n, ("k", k), ("point", y))
    spec = norms.OrderUnitSpec.validated(C, k)
    return {"norm": norms.order_unit_norm(spec, y)}


def _cloud_and_set(args):
    P = parse_points(args.points)
    D = parse_set(args.set)
    if P.shape[1] != sets.dim(D):
        raise InputError(f"points have dimension {P.shape[1]}, the set has dimension {sets.dim(D)}")
    return P, D


def cmd_eff(args):
    P, D = _cloud_and_set(args)
    res = efficiency.weff(P, D) if args.weak else efficiency.eff(P, D)
    return res.to_json()


def cmd_min(args):
    P, D = _cloud_and_set(args)
    idx = order.min_points(order.DominationRelation(D), P)
    return {"indices": idx}


def cmd_characterize(args, rng):
    P, D = _cloud_and_set(args)
    k = parse_vector(args.k, "k")
    _check_dim(P.shape[1], ("k", k))
    if args.weak:
        res = scalarize.characterize_weff(P, D, k, rng)
        tag = scalarize.TAG_NONNEG_ELSEWHERE
    else:
        res = scalarize.characterize_eff(P, D, k)
        tag = scalarize.TAG_POSITIVE_ELSEWHERE
    return {**res.to_json(), "theorem": tag}


def cmd_scalarize(args, rng):
    P = parse_points(args.points)
    H = parse_set(args.set)
    D = parse_set(args.dom)
    a = parse_vector(args.ref, "ref")
    k = parse_vector(args.k, "k")
    n = P.shape[1]
    _check_dim(n, ("ref", a), ("k", k))
    if sets.dim(H) != n or sets.dim(D) != n:
        raise InputError("points, --set and --dom must share one dimension")
    rep = scalarize.reference_scalarize(P, H, a, k, D, rng)
    return {**rep.to_json(), "theorem": sorted({c["tag"] for c in rep.claims})}


def cmd_bound(args, rng):
    P, D = _cloud_and_set(args)
    a = parse_vector(args.ref, "ref")
    _check_dim(P.shape[1], ("ref", a))
    if args.norm:
        rep = scalarize.norm_characterize(P, D, a, rng)
        tags = [scalarize.TAG_NORM_ANCHOR, scalarize.TAG_NORM_STRICT]
    else:
        rep = scalarize.bound_scalarize(P, D, a, args.orientation, rng)
        tags = [scalarize.TAG_BOUND_ANCHOR, scalarize.TAG_BOUND_STRICT]
    return {**rep.to_json(), "theorem": tags}


def cmd_separate(args, rng):
    A = parse_set(args.set)
    P = parse_points(args.points)
    k = parse_vector(args.k, "k")
    _check_dim(sets.dim(A), ("k", k))
    if P.shape[1] != sets.dim(A):
        raise InputError("points and --set must share one dimension")
    return scalarize.separate(A, k, P, rng).to_json()


def cmd_check(args):
    if args.size is not None and args.size < 0:
        raise InputError("--size must be nonnegative")
    try:
        results = checks.run_suites(args.seed, args.suite, args.size)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = {"suites": [r.to_json() for r in results],
           "passed": all(r.passed for r in results),
           "failed": [r.name for r in results if not r.passed]}
    if args.size == 0:
        out["warning"] = "size 0: all suites passed vacuously"
    return out


SAMPLED_VERBS = {"characterize": cmd_characterize, "scalarize": cmd_scalarize,
                 "bound": cmd_bound, "separate": cmd_separate}
PLAIN_VERBS = {"phi": cmd_phi, "norm": cmd_norm, "eff": cmd_eff, "min": cmd_min,
               "check": cmd_check}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uslev", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--seed", type=int, default=0, help="seed for sampled audits")
        return sp

    sp = verb("phi", "evaluate the functional at a point")
    sp.add_argument("--set", required=True)
    sp.add_argument("--k", required=True)
    sp.add_argument("--point")
    sp.add_argument("--oracle", action="store_true", help="use bisection instead of the closed form")
    sp.add_argument("--dump-grid", metavar="LO,HI,N",
                    help="print raw values on an N x N grid over [LO,HI]^2")

    sp = verb("norm", "order-unit norm of a point")
    sp.add_argument("--cone", required=True)
    sp.add_argument("--k", required=True)
    sp.add_argument("--point", required=True)

    for name, help_ in (("eff", "efficient points of a cloud"), ("min", "minimal points of a cloud")):
        sp = verb(name, help_)
        sp.add_argument("--points", required=True)
        sp.add_argument("--set", required=True)
        if name == "eff":
            sp.add_argument("--weak", action="store_true")

    sp = verb("characterize", "per-point (weak) efficiency via the functional")
    sp.add_argument("--points", required=True)
    sp.add_argument("--set", required=True)
    sp.add_argument("--k", required=True)
    sp.add_argument("--weak", action="store_true")

    sp = verb("scalarize", "reference-point scalarization")
    sp.add_argument("--points", required=True)
    sp.add_argument("--set", required=True, help="the set H")
    sp.add_argument("--ref", required=True)
    sp.add_argument("--k", required=True)
    sp.add_argument("--dom", required=True, help="the domination set D")

    sp = verb("bound", "characterization anchored at a bound point")
    sp.add_argument("--points", required=True)
    sp.add_argument("--set", required=True)
    sp.add_argument("--ref", required=True)
    sp.add_argument("--orientation", choices=("below", "above"), default="below")
    sp.add_argument("--norm", action="store_true", help="use the order-unit norm (a below F)")

    sp = verb("separate", "separate a set from a point cloud")
    sp.add_argument("--set", required=True)
    sp.add_argument("--k", required=True)
    sp.add_argument("--points", required=True)

    sp = verb("check", "run the seeded property suites")
    sp.add_argument("--suite", default="all", help="all or a module name")
    sp.add_argument("--size", type=int, default=None, help="samples per suite")
    return p


VECTOR_FLAGS = ("--k", "--point", "--ref", "--dump-grid")
_NEGATIVE = re.compile(r"^-[\d.]")


def _glue_negative_vectors(argv):
    """``--point -1,-1`` would read as a flag; rewrite it to ``--point=-1,-1``."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in VECTOR_FLAGS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_vectors(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=err)
    try:
        if args.verb in SAMPLED_VERBS:
            rng = np.random.default_rng(args.seed)
            result = SAMPLED_VERBS[args.verb](args, rng)
            result["seed"] = args.seed
        else:
            result = PLAIN_VERBS[args.verb](args)
            if args.verb == "check":
                result["seed"] = args.seed
    except phi_mod.PreconditionError as exc:
        err.write(f"refused: {exc}\n")
        return EXIT_REFUSED
    except norms.GaugeUndefinedError as exc:
        err.write(f"refused: {exc}\n")
        return EXIT_REFUSED
    except (InputError, SetSchemaError, UnsupportedError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    out.write(dumps(result))
    if args.verb == "check" and not result["passed"]:
        return EXIT_REFUSED
    return EXIT_OK


def main(argv: Optional[list] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
