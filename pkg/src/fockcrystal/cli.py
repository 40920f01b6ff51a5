"""Command-line front-end.

Vectors are comma separated (``--s 0,0``); exact rationals use ``p/q``.
A vector starting with a minus sign must be attached with ``=``:
``--m=-1,3``. Multipartitions are JSON: ``--lp "[[3,1],[2,2,1,1]]"``.

Exit codes: 0 success, 1 parse error, 2 configuration error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cherednik import CherednikParams, derive_crystal_data, wall_crossing_bijection
from .core import ConfigurationError, LPartition, parse_modulus
from .crystal import build_graph, m_order
from .highest_weight import reduction_trace, render_trace
from .symbols import general_symbol, symbol_of_bipartition
from .walls import chamber_samples, crossing_path, essential_walls, signature, wall_cross


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def _vector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational vector: {text!r}") from exc


def _charge(text: str) -> tuple[int, ...]:
    v = _vector(text)
    if any(x.denominator != 1 for x in v):
        raise argparse.ArgumentTypeError(f"charge must be integral: {text!r}")
    return tuple(int(x) for x in v)


def _modulus(text: str):
    try:
        return parse_modulus(text)
    except (ValueError, ConfigurationError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _lp(text: str) -> LPartition:
    try:
        return LPartition.from_json(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad multipartition {text!r}: {exc}") from exc


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _params(text: str) -> CherednikParams:
    try:
        return CherednikParams.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad parameter JSON {text!r}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fockcrystal", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *names):
        if "e" in names:
            p.add_argument("--e", type=_modulus, required=True, help="modulus (integer >= 2 or inf)")
        if "s" in names:
            p.add_argument("--s", type=_charge, required=True, help="integer multicharge, e.g. 0,0")
        if "m" in names:
            p.add_argument("--m", type=_vector, required=True, help="order vector, e.g. 0,-1/2")
        if "m2" in names:
            p.add_argument("--m2", type=_vector, required=True, help="target order vector")
        if "lp" in names:
            p.add_argument("--lp", type=_lp, required=True, help='multipartition as JSON, e.g. "[[1],[2]]"')
        if "n" in names:
            p.add_argument("--n", type=int, required=True)
        if "l" in names:
            p.add_argument("--l", type=int, required=True)
        p.add_argument("--format", choices=("json", "text", "dot"), default="text")

    g = sub.add_parser("graph", help="build the crystal graph G_{e,m,s} on ranks 0..n")
    common(g, "e", "s", "m", "n")
    w = sub.add_parser("wall-cross", help="transport a multipartition from m to m2")
    common(w, "e", "s", "m", "m2", "lp")
    w.set_defaults(format="json")
    c = sub.add_parser("wc", help="wall-crossing bijection between Cherednik parameters")
    c.add_argument("--kappa", type=_rational, help="kappa for the source parameters")
    c.add_argument("--s", type=_vector, help="rational charge for the source parameters")
    c.add_argument("--kappa2", type=_rational, help="kappa for the target parameters")
    c.add_argument("--s2", type=_vector, help="rational charge for the target parameters")
    c.add_argument("--params", type=_params, help='source as JSON {"kappa": "3/2", "s": ["1/3","2/3"]}')
    c.add_argument("--params2", type=_params, help="target as JSON")
    c.add_argument("--lp", type=_lp, required=True)
    c.add_argument("--format", choices=("json", "text"), default="text")
    h = sub.add_parser("highest-weight", help="period-deletion highest-weight test")
    common(h, "e", "s", "m", "lp")
    h.add_argument("--trace", action="store_true", help="print every intermediate symbol")
    h.add_argument("--pad", type=int, help="extra symbol columns beyond the minimal width (default e)")
    ch = sub.add_parser("chambers", help="essential walls and one sample point per chamber")
    common(ch, "e", "s", "n", "l")
    ch.add_argument("--m", type=_vector, help="also report the chamber of this point")
    sy = sub.add_parser("symbol", help="print the symbol of a multipartition")
    sy.add_argument("--s", type=_charge, required=True)
    sy.add_argument("--lp", type=_lp, required=True)
    sy.add_argument("--format", choices=("json", "text"), default="text")
    st = sub.add_parser("selftest", help="run the built-in golden examples")
    st.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _emit(out, args, payload, text: str) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _cmd_graph(args, out):
    g = build_graph(len(args.s), args.n, args.e, args.s, m_order(args.m))
    if args.format == "dot":
        out.write(g.to_dot() + "\n")
        return
    lines = [f"{a} -{z}-> {b}" for a, b, z in g.edges]
    lines.append("highest weight: " + " ".join(str(v) for v in g.highest_weight_vertices()))
    _emit(out, args, g.to_json(), "\n".join(lines))


def _cmd_wall_cross(args, out):
    n = args.lp.rank()
    path = crossing_path(args.m, args.m2, essential_walls(args.lp.level, n, args.e, args.s))
    res = wall_cross(args.lp, args.s, args.e, args.m, args.m2)
    if args.format == "json":
        out.write(json.dumps(res.to_json(), separators=(",", ":")) + "\n")
        return
    crossed = " ".join(c.wall.label() for c in path) or "none"
    out.write(f"{res}\nwalls crossed: {crossed}\n")


def _cmd_wc(args, out):
    p = args.params or _params_from(args.kappa, args.s, "--kappa/--s")
    q = args.params2 or _params_from(args.kappa2, args.s2, "--kappa2/--s2")
    res = wall_crossing_bijection(args.lp, p, q)
    text = str(res)
    if p.kappa > 0:
        dp, dq = derive_crystal_data(p), derive_crystal_data(q)
        text += f"\nc = {list(dp.c)}  m = {_fmt(dp.m)}  m' = {_fmt(dq.m)}"
    _emit(out, args, res.to_json(), text)


def _params_from(kappa, s, flag):
    if kappa is None or s is None:
        raise ParseError(f"wc: give {flag} or the JSON form")
    return CherednikParams(kappa, s)


def _fmt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _cmd_highest_weight(args, out):
    trace, ok = reduction_trace(args.lp, args.s, args.e, args.m, args.pad)
    text = "true" if ok else "false"
    if args.trace:
        text = render_trace(trace) + "\n" + text
    payload = {"highest_weight": ok, "trace": [[list(r) for r in sym.rows] for sym in trace]}
    _emit(out, args, payload, text)


def _cmd_chambers(args, out):
    if len(args.s) != args.l:
        raise ConfigurationError(f"--s has length {len(args.s)} but --l is {args.l}")
    walls = essential_walls(args.l, args.n, args.e, args.s)
    samples = chamber_samples(args.l, args.n, args.e, args.s)
    payload = {
        "walls": [{"i": w.i, "j": w.j, "N": w.N, "equation": w.equation()} for w in walls],
        "chambers": [{"signs": list(sig.signs), "sample": [str(x) for x in pts[0]]} for sig, pts in samples],
    }
    lines = [f"{len(walls)} walls"] + [f"  {w.label()}: {w.equation()}" for w in walls]
    lines.append(f"{len(samples)} chambers")
    lines += [f"  {''.join('+' if x > 0 else '-' for x in sig.signs)}  m = {_fmt(pts[0])}" for sig, pts in samples]
    if args.m is not None:
        sig = signature(args.m, walls)
        payload["signature"] = list(sig.signs)
        lines.append("m lies in " + "".join("+" if x > 0 else "-" for x in sig.signs))
    _emit(out, args, payload, "\n".join(lines))


def _cmd_symbol(args, out):
    if len(args.s) != args.lp.level:
        raise ConfigurationError("--s must have one entry per component")
    if args.lp.level == 2:
        sym = symbol_of_bipartition(args.lp[1], args.lp[2], *args.s)
    else:
        sym = general_symbol(args.lp, args.s)
    _emit(out, args, {"rows": [list(r) for r in sym.rows], "width": sym.width}, sym.render())


def _cmd_selftest(args, out):
    from .selftest import run_all

    results = run_all()
    failed = [name for name, ok in results if not ok]
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results]
    _emit(out, args, {"results": dict(results), "failed": failed}, "\n".join(lines))
    return 1 if failed else 0


COMMANDS = {
    "graph": _cmd_graph,
    "wall-cross": _cmd_wall_cross,
    "wc": _cmd_wc,
    "highest-weight": _cmd_highest_weight,
    "chambers": _cmd_chambers,
    "symbol": _cmd_symbol,
    "selftest": _cmd_selftest,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out) or 0
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except ConfigurationError as exc:
        err.write(f"configuration error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
