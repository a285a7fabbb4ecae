"""Command-line entry point: ``isolab <command> [flags]``.

Exact rationals are printed as ``p/q``. Exit status: 0 success, 1 a module
error or a failed criterion, 2 bad flags, 3 file problems.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .errors import BadFlags, FileIO, IsolabError

EXIT_OK, EXIT_FAIL, EXIT_FLAGS, EXIT_IO = 0, 1, 2, 3

# flags whose values may start with '-' (a range such as -3..3)
_RANGE_FLAGS = ("--n-range", "--sweep", "--t")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadFlags(message)


# --------------------------------------------------------------------------------
# small parsers
# --------------------------------------------------------------------------------


def _int_range(text: str) -> list:
    """'a..b' (inclusive) or 'a,b,c'."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise BadFlags(f"cannot read integer list {text!r}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise BadFlags(f"cannot read rational {text!r}") from None


def _fr(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _json_default(o):
    if isinstance(o, Fraction):
        return _fr(o)
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, (np.bool_,)):
        return bool(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (set, frozenset, tuple)):
        return sorted(o) if isinstance(o, (set, frozenset)) else list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _dumps(obj) -> str:
    return json.dumps(obj, default=_json_default, indent=2, sort_keys=True)


def _emit(text: str, out: str | None):
    if out:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise FileIO(f"cannot write {out}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _load(path):
    from .planar_map import load_json

    try:
        return load_json(path)
    except OSError as exc:
        raise FileIO(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise FileIO(f"{path} is not a map file: {exc}") from None


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([r.get(h, "") for h in header])
    return buf.getvalue()


def _table(rows, header) -> str:
    cells = [[str(r.get(h, "")) for h in header] for r in rows]
    widths = [max([len(h)] + [len(c[i]) for c in cells]) for i, h in enumerate(header)]
    line = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    return "\n".join([line(header), line(["-" * w for w in widths])] + [line(c) for c in cells]) + "\n"


def _render(rows, header, fmt):
    if fmt == "csv":
        return _csv(rows, header)
    if fmt == "table":
        return _table(rows, header)
    return _dumps(rows)


def _family_params(a) -> dict:
    p = {}
    for key, attr in (("radius", "radius"), ("k", "k"), ("n", "n"), ("N", "N"), ("count", "count"), ("depth", "depth")):
        v = getattr(a, attr, None)
        if v is not None:
            p[key] = v
    if a.n_range:
        r = _int_range(a.n_range)
        p["n_range"] = (r[0], r[-1])
    if a.schedule:
        p["schedule"] = tuple(_int_range(a.schedule))
    if a.ell_rule:
        p["ell_rule"] = "auto" if a.ell_rule == "auto" else _int_range(a.ell_rule)
    if a.whole:
        p["whole"] = True
    for item in a.param or []:
        if "=" not in item:
            raise BadFlags(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        try:
            p[k] = json.loads(v)
        except json.JSONDecodeError:
            p[k] = v
    return p


def _generate(family, params):
    from .generators import FAMILIES, generate

    if family not in FAMILIES:
        raise BadFlags(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    try:
        return generate(family, **params)
    except TypeError as exc:
        raise BadFlags(f"bad parameters for {family}: {exc}") from None


def _vertex_set(host, a) -> list:
    if a.vertices:
        return _int_range(a.vertices)
    if a.group:
        if a.group not in host.groups:
            raise BadFlags(f"no group {a.group!r}; available: {', '.join(sorted(host.groups)) or 'none'}")
        return list(host.groups[a.group])
    if a.labels:
        return [host.vertex_by_label(s.strip()) for s in a.labels.split(",")]
    raise BadFlags("give --vertices, --group or --labels")


# --------------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------------


def cmd_generate(a):
    from .planar_map import dump_json

    m = _generate(a.family, _family_params(a))
    if a.out:
        try:
            dump_json(m, a.out)
        except OSError as exc:
            raise FileIO(f"cannot write {a.out}: {exc.strerror}") from None
        print(f"{a.family}: {m.n_vertices} vertices, {m.n_edges} edges, {m.n_faces} faces -> {a.out}")
    else:
        _emit(m.to_json(), None)
    return EXIT_OK


def cmd_classify(a):
    from .planar_map import classify

    c = classify(_load(a.host))
    d = c.as_dict()
    if a.format == "json":
        _emit(_dumps(d), a.out)
    else:
        _emit(_render([{"property": k, "value": v} for k, v in d.items()], ["property", "value"], a.format), a.out)
    return EXIT_OK


def cmd_curvature(a):
    from .curvature import carriers, curvature

    host = _load(a.host)
    kind = a.kind
    rows = []
    for c in carriers(host, kind):
        try:
            val = curvature(host, kind, c, allow_violation=a.allow_violation)
        except IsolabError:
            if a.allow_violation:
                continue
            raise
        row = {"carrier": {"psi": "vertex", "phi": "edge"}.get(kind, "face"), "id": c, "value": _fr(val)}
        row["label"] = host.labels.get(c, "") if kind == "psi" else ""
        rows.append(row)
    _emit(_render(rows, ["carrier", "id", "label", "value"], a.format), a.out)
    return EXIT_OK


def cmd_iso(a):
    from .isoperimetry import estimate_many

    host = _load(a.host)
    kinds = [k.strip() for k in a.kind.split(",")]
    extra = [host.groups[g] for g in (a.witness_group or [])]
    est = estimate_many(host, kinds, a.cap, fill=not a.no_fill, extra_witnesses=extra)
    rows = [est[k].as_row() for k in kinds]
    if a.format == "json":
        _emit(_dumps(rows), a.out)
    else:
        flat = [dict(r, witness=" ".join(map(str, r["witness"]))) for r in rows]
        _emit(_render(flat, ["kind", "value", "search_cap", "host_radius", "witness"], a.format), a.out)
    return EXIT_OK


def cmd_partition(a):
    from .decomposition import contract, find_parts, partition
    from .subgraphs import SubgraphView

    host = _load(a.host)
    S = SubgraphView(host, _vertex_set(host, a))
    T = contract(S)
    P = partition(S, T)
    report = {
        "vertices": S.sorted_vertices,
        "parts": [p.as_dict() for p in find_parts(S)],
        "partition": P.as_dict(),
        "tree": {"nodes": len(T.nodes), "m": T.m, "B": len(T.degree_one), "A": len(T.branch_nodes), "is_tree": T.is_tree},
    }
    _emit(_dumps(report), a.out)
    ok = all(v for k, v in P.conditions.items() if isinstance(v, bool))
    return EXIT_OK if ok else EXIT_FAIL


def _sample_spec(text: str, seed: int):
    if text == "all":
        return "all"
    if text.startswith("random:"):
        return ("random", int(text.split(":", 1)[1]), seed)
    raise BadFlags(f"--sample expects 'all' or 'random:K', got {text!r}")


def cmd_hyperbolicity(a):
    from .hyperbolicity import detour_growth, growth_bound_check, growth_threshold, thinness

    if a.mode == "thinness":
        hosts = []
        if a.family:
            key = a.sweep_param
            for r in _int_range(a.sweep or "2..4"):
                params = _family_params(a)
                params[key] = r
                hosts.append((r, _generate(a.family, params)))
        elif a.host:
            m = _load(a.host)
            p = m.family.get("params", {}) if m.family else {}
            hosts.append((p.get("radius", p.get("n", p.get("N", ""))), m))
        else:
            raise BadFlags("thinness needs --host or --family with --sweep")
        rows = []
        for r, m in hosts:
            rep = thinness(m, _sample_spec(a.sample, a.seed), cap=a.cap)
            rows.append({"radius": r, "delta": rep.delta, "triangle": " ".join(map(str, rep.worst_triangle)), "vertices": m.n_vertices})
        _emit(_render(rows, ["radius", "delta", "vertices", "triangle"], a.format), a.out)
        return EXIT_OK
    if not a.host:
        raise BadFlags("detour mode needs --host")
    m = _load(a.host)
    spec = _int_range(a.center)
    centers = tuple(spec) if len(spec) == 3 else spec[0]
    probes = detour_growth(m, centers, _int_range(a.t or "2..4"), allow_missing=True)
    rows = []
    j = _fraction(a.j_lower) if a.j_lower else None
    big = [p for p in probes if p.t >= 12]
    rep = growth_bound_check(m, j, big) if (j is not None and big) else None
    by_t = {r["t"]: r for r in rep.rows} if rep else {}
    for p in probes:
        row = {"t": p.t, "a": p.a, "b": p.b, "d_ab": p.d_ab, "detour_length": "inf" if p.shortest_detour_length is None else p.shortest_detour_length}
        if j is not None:
            thr = growth_threshold(j, p.t)
            row["bound"] = f"{thr:.6g}"
            row["margin"] = "inf" if p.shortest_detour_length is None else f"{p.shortest_detour_length - thr:.6g}"
            if p.t in by_t:
                row["ok"] = by_t[p.t]["ok"]
        rows.append(row)
    header = ["t", "a", "b", "d_ab", "detour_length"] + (["bound", "margin", "ok"] if j is not None else [])
    _emit(_render(rows, header, a.format), a.out)
    return EXIT_OK if rep is None or rep.ok else EXIT_FAIL


def cmd_dual(a):
    from .planar_map import classify, dual, dump_json

    d = dual(_load(a.host))
    if a.out:
        try:
            dump_json(d.map, a.out)
        except OSError as exc:
            raise FileIO(f"cannot write {a.out}: {exc.strerror}") from None
    c = classify(d.map)
    print(_dumps({"vertices": d.map.n_vertices, "edges": d.map.n_edges, "faces": d.map.n_faces, "simple": c.simple, "out": a.out}))
    return EXIT_OK


def cmd_export(a):
    from .export import to_dot, to_svg

    m = _load(a.host)
    hl = _int_range(a.highlight) if a.highlight else ()
    text = to_svg(m, a.layout, highlight=hl) if a.format == "svg" else to_dot(m, a.layout)
    _emit(text, a.out)
    return EXIT_OK


def cmd_verify(a):
    from .suite import run_suite

    if a.suite != "paper":
        raise BadFlags(f"unknown suite {a.suite!r}; the only suite is 'paper'")
    only = _int_range(a.only) if a.only else None
    results = run_suite(only, progress=lambda r: print(r.line(), flush=True))
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    if a.json:
        try:
            with open(a.json, "w") as fh:
                fh.write(_dumps([r.as_dict() for r in results]))
        except OSError as exc:
            raise FileIO(f"cannot write {a.json}: {exc.strerror}") from None
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# --------------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------------


def _family_flags(p):
    p.add_argument("--radius", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--n-range", dest="n_range")
    p.add_argument("--schedule")
    p.add_argument("--ell-rule", dest="ell_rule")
    p.add_argument("--whole", action="store_true")
    p.add_argument("--param", action="append", help="extra key=value (JSON value) passed to the generator")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="isolab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"isolab {__version__}")
    ap.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("generate", help="build a host graph")
    g.add_argument("--family", required=True)
    _family_flags(g)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    def common(p, fmt="table", choices=("json", "table", "csv")):
        p.add_argument("--host", required=True)
        p.add_argument("--format", default=fmt, choices=choices)
        p.add_argument("--out")

    c = sub.add_parser("classify", help="validity record of a map")
    common(c, "json")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("curvature", help="exact curvature values")
    common(c, "csv")
    c.add_argument("--kind", default="psi", choices=("psi", "phi", "chi"))
    c.add_argument("--allow-violation", action="store_true")
    c.set_defaults(func=cmd_curvature)

    c = sub.add_parser("iso", help="isoperimetric estimates")
    common(c)
    c.add_argument("--kind", default="j", help="comma list of iota, j, kappa, jtilde")
    c.add_argument("--cap", type=int, default=10)
    c.add_argument("--no-fill", action="store_true")
    c.add_argument("--witness-group", action="append")
    c.set_defaults(func=cmd_iso)

    c = sub.add_parser("partition", help="partition a simply connected subgraph")
    c.add_argument("--host", required=True)
    c.add_argument("--vertices")
    c.add_argument("--group")
    c.add_argument("--labels")
    c.add_argument("--out")
    c.set_defaults(func=cmd_partition)

    c = sub.add_parser("hyperbolicity", help="thinness sweeps and detour probes")
    c.add_argument("--host")
    c.add_argument("--family")
    _family_flags(c)
    c.add_argument("--mode", default="thinness", choices=("thinness", "detour"))
    c.add_argument("--sweep", help="values for --sweep-param, e.g. 2..5")
    c.add_argument("--sweep-param", default="radius")
    c.add_argument("--sample", default="all", help="all or random:K")
    c.add_argument("--cap", type=int, default=300)
    c.add_argument("--center", default="0", help="z, or a,b,z")
    c.add_argument("--t", help="radii, e.g. 2..6")
    c.add_argument("--j-lower", dest="j_lower")
    c.add_argument("--format", default="csv", choices=("json", "table", "csv"))
    c.add_argument("--out")
    c.set_defaults(func=cmd_hyperbolicity)

    c = sub.add_parser("dual", help="write the dual map")
    c.add_argument("--host", required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_dual)

    c = sub.add_parser("export", help="DOT or SVG drawing")
    c.add_argument("--host", required=True)
    c.add_argument("--format", default="svg", choices=("svg", "dot"))
    c.add_argument("--layout", default="auto", choices=("auto", "tutte"))
    c.add_argument("--highlight")
    c.add_argument("--out")
    c.set_defaults(func=cmd_export)

    c = sub.add_parser("verify", help="run the acceptance suite")
    c.add_argument("--suite", default="paper")
    c.add_argument("--only", help="criterion numbers, e.g. 1,2,5 or 1..4")
    c.add_argument("--json", help="write a machine-readable report here")
    c.set_defaults(func=cmd_verify)
    return ap


def _glue_ranges(argv):
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _RANGE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = _glue_ranges(sys.argv[1:] if argv is None else list(argv))
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "command", None):
            raise BadFlags("missing command; try --help")
        return args.func(args)
    except BadFlags as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    except FileIO as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except IsolabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
