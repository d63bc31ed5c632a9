"""Command-line interface: ``mapsym <subcommand> ...``.

Maps are read and written as flag-system JSON.  ``-`` as a file name means
standard input.  Exit codes: 0 success, 1 bad data, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter

from mapsym import __version__
from mapsym.catalog import (
    CATALOG,
    FOUR_ORBIT_NAMES,
    classify_pregraph,
    dual_name,
    enumerate_candidates,
    petrie_name,
    shape_id_or_none,
    verify_against_tables,
)
from mapsym.errors import MapsymError
from mapsym.flagsys import FlagSystem, dual, elements, euler_characteristic, petrie_dual, validate
from mapsym.generators import (
    PLATONIC,
    antiprism,
    enumerate_flag_systems,
    medial,
    platonic,
    prism,
    torus_grid,
    truncation,
)
from mapsym.pregraph import components, to_dot
from mapsym.symmetry import automorphisms, colour_deleted, element_types, flag_orbits, symmetry_type_graph

SCHEMA = "mapsym/1"


class _DataError(Exception):
    """Carries a message and error kind up to :func:`run`."""

    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind


class _Style:
    def __init__(self, stream):
        mode = os.environ.get("MAPSYM_COLOR", "auto").lower()
        if mode == "always":
            self.enabled = True
        elif mode == "never":
            self.enabled = False
        else:
            self.enabled = hasattr(stream, "isatty") and stream.isatty()

    def _wrap(self, code, text):
        return f"\033[{code}m{text}\033[0m" if self.enabled else text

    def good(self, text):
        return self._wrap("32", text)

    def bad(self, text):
        return self._wrap("31", text)

    def bold(self, text):
        return self._wrap("1", text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_text(path, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _DataError("io", f"cannot read {path}: {exc.strerror or exc}") from exc


def _load(path, stdin) -> FlagSystem:
    return FlagSystem.from_json(_read_text(path, stdin))


def _component_ids(p):
    ids = [shape_id_or_none(c) for c in components(p)]
    return sorted(ids, key=lambda s: (s is None, s or ""))


def analysis_report(fs: FlagSystem) -> dict:
    """Everything ``analyze`` prints, as a JSON-ready dict."""
    group = automorphisms(fs)
    orbits = flag_orbits(fs)
    k = orbits.orbit_count
    types = element_types(fs)

    def records(items, measure_key):
        return [{"id": r.element, "type": r.type_id, measure_key: r.measure,
                 "characteristic": list(r.characteristic.as_tuple()),
                 "component": list(r.component)} for r in items]

    v, e, f = elements(fs).counts
    report = {
        "schema": SCHEMA,
        "flags": fs.n_flags,
        "counts": {"vertices": v, "edges": e, "faces": f},
        "euler_characteristic": v - e + f,
        "aut_order": group.order,
        "k": k,
        "orbit_sizes": list(orbits.sizes),
        "vertices": records(types.vertices, "degree"),
        "faces": records(types.faces, "size"),
        "t0_components": _component_ids(colour_deleted(fs, 0)),
        "t2_components": _component_ids(colour_deleted(fs, 2)),
    }
    if k == 4:
        check = verify_against_tables(fs)
        report["type_name"] = check.name
        report["table_check"] = {"ok": check.ok, "problems": list(check.problems),
                                 "note": check.note}
    return report


def _fmt_char(c):
    return f"({c[0]},k{c[1]},k{c[2]})"


def _print_analysis(rep, out, style):
    def line(label, value):
        print(f"{label:<14}{value}", file=out)

    def ids(xs):
        return " ".join(x or "?" for x in xs)

    line("flags", rep["flags"])
    c = rep["counts"]
    line("V E F", f"{c['vertices']} {c['edges']} {c['faces']}  (euler {rep['euler_characteristic']})")
    line("aut order", rep["aut_order"])
    line("k", rep["k"])
    if "type_name" in rep:
        line("type", style.bold(rep["type_name"]))
    line("orbit sizes", " ".join(map(str, rep["orbit_sizes"])))
    line("T0", ids(rep["t0_components"]))
    line("T2", ids(rep["t2_components"]))
    for title, key, measure in (("vertex classes", "vertices", "degree"),
                                ("face classes", "faces", "size")):
        classes = Counter((r["type"] or "?", r[measure], _fmt_char(r["characteristic"]))
                          for r in rep[key])
        print(f"{title}:", file=out)
        for (tid, m, ch), count in sorted(classes.items()):
            print(f"  {tid:<6} {measure} {m:<4} {ch:<12} x{count}", file=out)
    if "table_check" in rep:
        chk = rep["table_check"]
        status = style.good("ok") if chk["ok"] else style.bad("FAILED")
        line("table check", status)
        for p in chk["problems"]:
            print(f"  {p}", file=out)
        if chk["note"]:
            print(f"  note: {chk['note']}", file=out)


def cmd_validate(args, out, stdin, style):
    fs = _load(args.file, stdin)
    report = validate(fs, strict=args.strict)
    if args.json:
        print(_dumps({"valid": report.ok, "strict": args.strict,
                      "violations": list(report.violations)}), file=out)
    elif report.ok:
        print(style.good("valid"), file=out)
    else:
        print(style.bad("invalid"), file=out)
        for v in report.violations:
            print(f"  {v}", file=out)
    return 0 if report.ok else 1


def cmd_analyze(args, out, stdin, style):
    rep = analysis_report(_load(args.file, stdin))
    if args.json:
        print(_dumps(rep), file=out)
    else:
        _print_analysis(rep, out, style)
    return 0


def cmd_classify(args, out, stdin, style):
    fs = _load(args.file, stdin)
    k = flag_orbits(fs).orbit_count
    if k != 4:
        print(f"k={k} (not 4-orbit)", file=out)
    else:
        print(classify_pregraph(symmetry_type_graph(fs)), file=out)
    return 0


_OPERATIONS = {"medial": medial, "truncation": truncation, "dual": dual, "petrie": petrie_dual}


def cmd_generate(args, out, stdin, style):
    kind = args.kind
    if kind in ("antiprism", "prism"):
        fs = (antiprism if kind == "antiprism" else prism)(args.n)
    elif kind == "platonic":
        fs = platonic(args.name)
    elif kind == "torus-grid":
        fs = torus_grid(args.rows, args.cols)
    else:
        fs = _OPERATIONS[kind](_load(args.file, stdin))
    print(fs.to_json(), file=out)
    return 0


def cmd_enumerate_types(args, out, stdin, style):
    cands = enumerate_candidates(args.k)
    named = [(classify_pregraph(p) if args.k == 4 else None, p) for p in cands]
    if args.json:
        print(_dumps({"k": args.k, "count": len(cands),
                      "candidates": [{"name": n, "pregraph": p.to_dict()} for n, p in named]}),
              file=out)
        return 0
    for i, (name, p) in enumerate(named):
        print(f"{i:>3}  {name or '-':<6} {p.to_json()}", file=out)
    print(f"{len(cands)} candidate symmetry type graphs with {args.k} vertices", file=out)
    return 0


def cmd_enumerate_maps(args, out, stdin, style):
    maps = enumerate_flag_systems(args.flags)
    rows = []
    for fs in maps:
        v, e, f = elements(fs).counts
        rows.append({"k": flag_orbits(fs).orbit_count, "aut_order": automorphisms(fs).order,
                     "counts": [v, e, f], "euler_characteristic": euler_characteristic(fs),
                     "flag_system": fs.to_dict()})
    by_k = Counter(r["k"] for r in rows)
    if args.json:
        print(_dumps({"flags": args.flags, "count": len(rows),
                      "by_k": {str(k): n for k, n in sorted(by_k.items())}, "maps": rows}),
              file=out)
        return 0
    for i, r in enumerate(rows):
        v, e, f = r["counts"]
        print(f"{i:>4}  k={r['k']:<3} |Aut|={r['aut_order']:<3} V={v} E={e} F={f} "
              f"euler={r['euler_characteristic']}", file=out)
    summary = ", ".join(f"k={k}: {n}" for k, n in sorted(by_k.items()))
    print(f"{len(rows)} maps with {args.flags} flags ({summary})", file=out)
    return 0


def cmd_catalog(args, out, stdin, style):
    entries = [CATALOG[n] for n in FOUR_ORBIT_NAMES]
    if args.json:
        print(_dumps([{"name": e.name, "t0": list(e.t0_fingerprint), "t2": list(e.t2_fingerprint),
                       "dual": dual_name(e.name), "petrie": petrie_name(e.name),
                       "pregraph": e.pregraph.to_dict()} for e in entries]), file=out)
        return 0
    print(f"{'name':<6} {'T0':<18} {'T2':<18} {'dual':<6} petrie", file=out)
    for e in entries:
        print(f"{e.name:<6} {' '.join(e.t0_fingerprint):<18} {' '.join(e.t2_fingerprint):<18} "
              f"{dual_name(e.name):<6} {petrie_name(e.name)}", file=out)
    return 0


def cmd_export_dot(args, out, stdin, style):
    fs = _load(args.file, stdin)
    out.write(to_dot(symmetry_type_graph(fs), args.name))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapsym",
        description="Flag systems, flag orbits and symmetry type graphs of maps.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--error-format", choices=("text", "json"), default="text",
                        help="how data errors are reported (json goes to stdout)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", help="check the map axioms")
    p.add_argument("file", help="flag-system JSON, or - for stdin")
    p.add_argument("--strict", action="store_true",
                   help="also require a simple graph with degrees and face sizes >= 3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="orbits, type graphs and table data")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="catalog name of a 4-orbit map")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="write a known map as flag-system JSON")
    gen = p.add_subparsers(dest="kind", required=True, metavar="KIND")
    for kind in ("antiprism", "prism"):
        g = gen.add_parser(kind)
        g.add_argument("n", type=int)
    g = gen.add_parser("platonic")
    g.add_argument("name", choices=sorted(PLATONIC))
    g = gen.add_parser("torus-grid")
    g.add_argument("rows", type=int)
    g.add_argument("cols", type=int)
    for kind in _OPERATIONS:
        g = gen.add_parser(kind, help=f"{kind} of the map in FILE")
        g.add_argument("file")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate-types", help="candidate symmetry type graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate_types)

    p = sub.add_parser("enumerate-maps", help="all maps with a given number of flags")
    p.add_argument("--flags", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate_maps)

    p = sub.add_parser("catalog", help="the 22 symmetry type graphs of 4-orbit maps")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("export-dot", help="Graphviz DOT of the symmetry type graph")
    p.add_argument("file")
    p.add_argument("--name", default="symmetry_type_graph")
    p.set_defaults(func=cmd_export_dot)
    return parser


def run(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out, inp, _Style(out))
    except (_DataError, MapsymError) as exc:
        kind = exc.kind if isinstance(exc, _DataError) else type(exc).__name__
        if args.error_format == "json":
            print(_dumps({"error": {"kind": kind, "message": str(exc)}}), file=out)
        else:
            print(f"mapsym: error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
