"""Command-line interface.

Exit codes: 0 on success, 1 when the computation ends in a structured
failure or a negative verdict, 2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import warnings

from .auxiliary import build_auxiliary, select_centers
from .colouring import Colouring, colour_graph, validate_colouring
from .decomposition import find_B, validate_decomposition
from .errors import ColouringFailure, NotInFamily, OddColourError, ParseError
from .formats import parse_graph, serialize, to_jsonable
from .generators import gen_blow_up, gen_cycle, gen_mycielski, gen_random_Hk
from .graph_core import SimpleGraph
from .parity import check_membership, odd_girth
from .weighted import WeightedGraph

log = logging.getLogger("oddcolour")


class InputError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, fmt: str, kind: type | None = None):
    obj = parse_graph(_read(path), fmt)
    if kind is SimpleGraph and not isinstance(obj, SimpleGraph):
        raise InputError(f"{path}: expected an unweighted graph")
    if kind is WeightedGraph and not isinstance(obj, WeightedGraph):
        if obj.m == 0:
            return WeightedGraph.from_edges(obj.n, [])
        raise InputError(f"{path}: expected a weighted graph")
    return obj


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None


def _parse_B(spec: str) -> list[int]:
    if os.path.exists(spec):
        data = _load_json(spec)
        data = data["B"] if isinstance(data, dict) else data
    else:
        data = [x for x in spec.replace(",", " ").split() if x]
    try:
        return [int(x) for x in data]
    except (TypeError, ValueError):
        raise InputError(f"cannot read the vertex set {spec!r}") from None


def cmd_colour(args):
    G = _load(args.input, args.format, SimpleGraph)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = colour_graph(G, args.k, args.t, fallback_limit=args.fallback_limit)
    for w in caught:
        log.warning("%s", w.message)
    return result, 0


def cmd_build_aux(args):
    G = _load(args.input, args.format, SimpleGraph)
    H = build_auxiliary(G, select_centers(G))
    return H, 0


def cmd_decompose(args):
    H = _load(args.input, args.format, WeightedGraph)
    dec = find_B(H, args.k, args.t, fallback_limit=args.fallback_limit)
    return dec, 0


def cmd_check_membership(args):
    H = _load(args.input, args.format, WeightedGraph)
    rep = check_membership(H, args.k, args.s)
    return rep, 0 if rep.is_member else 1


def cmd_odd_girth(args):
    G = _load(args.input, args.format, SimpleGraph)
    g, witness = odd_girth(G)
    return {"odd_girth": g, "witness": witness}, 0


_REQUIRED = {"cycle": ("n",), "blow-up": ("cycle",), "mycielski": (), "random-hk": ("n",)}


def cmd_generate(args):
    fam = args.family
    missing = [f"--{name}" for name in _REQUIRED[fam] if getattr(args, name) is None]
    if missing:
        raise InputError(f"generate {fam} needs {', '.join(missing)}")
    if fam == "cycle":
        G = gen_cycle(args.n)
    elif fam == "blow-up":
        base = gen_cycle(args.cycle)
        sizes = [int(x) for x in args.sizes.split(",")] if args.sizes else args.size
        G = gen_blow_up(base, sizes)
    elif fam == "mycielski":
        G = gen_mycielski(args.base, args.levels)
    else:
        G = gen_random_Hk(args.k, args.n, args.bias, args.seed, args.locality)
    return G, 0


def cmd_verify_colouring(args):
    G = _load(args.input, args.format, SimpleGraph)
    data = _load_json(args.colouring)
    colours = data["colours"] if isinstance(data, dict) else data
    c = Colouring(tuple(colours))
    ok = validate_colouring(G, c)
    return c, 0 if ok else 1


def cmd_validate_B(args):
    H = _load(args.input, args.format, WeightedGraph)
    dec = validate_decomposition(H, _parse_B(args.B))
    return dec, 0 if dec.valid else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", default="-", help="output file (default: stdout)")
    common.add_argument("--format", choices=("edgelist", "json"), default="edgelist", help="input graph format")
    common.add_argument("--out-format", choices=("edgelist", "json"), default=None, help="output format for graphs")
    common.add_argument("--json", action="store_true", help="machine-readable diagnostics on stderr")
    common.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("ODDCOLOUR_THREADS", "1") or 1),
        help="worker cap (default: $ODDCOLOUR_THREADS or 1)",
    )
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="oddcolour", description="3-colouring graphs of large odd girth")
    sub = p.add_subparsers(dest="command", required=True)

    def kt(sp, need_t=True):
        sp.add_argument("--k", type=int, required=True)
        if need_t:
            sp.add_argument("--t", type=int, default=0)
            sp.add_argument("--fallback-limit", type=int, default=20)

    sp = sub.add_parser("colour", parents=[common], help="run the full colouring pipeline")
    kt(sp)
    sp.add_argument("input")
    sp.set_defaults(func=cmd_colour)

    sp = sub.add_parser("build-aux", parents=[common], help="write the auxiliary weighted graph")
    sp.add_argument("input")
    sp.set_defaults(func=cmd_build_aux)

    sp = sub.add_parser("decompose", parents=[common], help="find a decomposition set of a weighted graph")
    kt(sp)
    sp.add_argument("input")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("check-membership", parents=[common], help="test membership in H(k) or H(k, s)")
    kt(sp, need_t=False)
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("input")
    sp.set_defaults(func=cmd_check_membership)

    sp = sub.add_parser("odd-girth", parents=[common], help="length of a shortest odd cycle")
    sp.add_argument("input")
    sp.set_defaults(func=cmd_odd_girth)

    sp = sub.add_parser("generate", parents=[common], help="generate an instance")
    sp.add_argument("family", choices=("cycle", "blow-up", "mycielski", "random-hk"))
    sp.add_argument("--n", type=int, help="cycle length or vertex count")
    sp.add_argument("--cycle", type=int, help="base cycle length for blow-up")
    sp.add_argument("--size", type=int, default=2, help="uniform part size for blow-up")
    sp.add_argument("--sizes", help="comma separated part sizes for blow-up")
    sp.add_argument("--base", type=int, default=5, help="base odd cycle for mycielski")
    sp.add_argument("--levels", type=int, default=1)
    sp.add_argument("--k", type=int, default=8)
    sp.add_argument("--bias", type=float, default=0.3)
    sp.add_argument("--locality", type=int, default=None, help="attach tree vertices to recent ones only")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify-colouring", parents=[common], help="check a colouring against a graph")
    sp.add_argument("input")
    sp.add_argument("colouring", help="JSON file with a 'colours' array")
    sp.set_defaults(func=cmd_verify_colouring)

    sp = sub.add_parser("validate-B", parents=[common], help="certify a candidate decomposition set")
    sp.add_argument("input")
    sp.add_argument("B", help="JSON file or comma separated vertex list")
    sp.set_defaults(func=cmd_validate_B)
    return p


def _emit_error(args, code: int, exc: Exception) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    for attr in ("diagnostics", "witness", "report", "line", "reason", "clause"):
        if hasattr(exc, attr):
            payload[attr] = to_jsonable(getattr(exc, attr))
    if getattr(args, "json", False):
        sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"oddcolour: {type(exc).__name__}: {exc}\n")
    return code


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.threads < 1:
        return _emit_error(args, 2, InputError("--threads must be positive"))
    try:
        result, code = args.func(args)
    except (InputError, ParseError) as exc:
        return _emit_error(args, 2, exc)
    except (ColouringFailure, NotInFamily) as exc:
        return _emit_error(args, 1, exc)
    except OddColourError as exc:
        # remaining library errors are argument or input problems
        return _emit_error(args, 2, exc)
    if isinstance(result, (SimpleGraph, WeightedGraph)):
        data = serialize(result, args.out_format)
    else:
        data = serialize(result, "json")
    try:
        _write(args.output, data)
    except OSError as exc:
        return _emit_error(args, 2, InputError(f"cannot write {args.output}: {exc.strerror}"))
    if args.json and isinstance(result, Colouring) and result.diagnostics:
        sys.stderr.write(json.dumps(to_jsonable(result.diagnostics), sort_keys=True) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
