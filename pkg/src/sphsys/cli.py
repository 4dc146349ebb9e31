"""Command-line front end.

Exit codes: 0 on success (and positive verdicts), 1 on negative verdicts
from predicate verbs, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from . import structure as st
from .quotient import (
    QuotientReport,
    center_data,
    defect,
    distinguished_subsets,
    is_reductive,
    is_star_distinguished,
    minimal_subsets,
    quotient,
    weight_monoid,
)
from .catalog import catalog_table
from .enumeration import EnumerationQuery, enumerate_systems, probe_distinguished_not_star
from .rootsystem import RootSystem, format_root
from .system import SphericalSystem, build_colors, validate
from .textio import ParseError, format_system, parse_system


def _read_system(path: str) -> SphericalSystem:
    text = _sys.stdin.read() if path == "-" else open(path).read()
    return parse_system(text)


def _system_json(sys: SphericalSystem) -> dict:
    rs = sys.rs
    return {
        "roots": rs.token,
        "sp": [rs.root_name(i) for i in sorted(sys.sp)],
        "sigma": [format_root(rs, v) for v in sys.sigma],
        "apart": [
            {
                "name": c.name,
                "moved": [rs.root_name(i) for i in sorted(c.moved_by)],
                "row": list(c.row),
            }
            for c in sys.apart
        ],
    }


def _colors_json(sys: SphericalSystem) -> dict:
    table = build_colors(sys)
    return {
        "colors": [
            {
                "name": c.name,
                "kind": c.kind,
                "moved": [sys.rs.root_name(i) for i in sorted(c.moved_by)],
                "row": list(c.row),
            }
            for c in table.colors
        ],
        "matrix": [list(r) for r in table.matrix],
    }


def _report_json(rep: QuotientReport) -> dict:
    return {
        "colors": list(rep.delta_prime),
        "distinguished": rep.distinguished,
        "star": rep.star,
        "smooth": rep.smooth,
        "homogeneous": rep.homogeneous,
        "witness": list(rep.witness) if rep.witness is not None else None,
        "quotient": _system_json(rep.quotient) if rep.quotient is not None else None,
    }


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _colors_text(sys: SphericalSystem) -> str:
    table = build_colors(sys)
    rs = sys.rs
    lines = []
    for c in table.colors:
        moved = ",".join(rs.root_name(i) for i in sorted(c.moved_by))
        row = " ".join(f"{x:3d}" for x in c.row)
        lines.append(f"{c.name:<6} {c.kind:<3} moved {moved:<12} row [{row}]")
    return "\n".join(lines) + ("\n" if lines else "")


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(prog="sphsys", description=__doc__)
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="verb", required=True)

    for verb in ("validate", "info", "colors", "tails", "primitive"):
        q = sub.add_parser(verb)
        q.add_argument("file")
    q = sub.add_parser("quotients")
    q.add_argument("file")
    q.add_argument("--star", action="store_true")
    q.add_argument("--minimal", action="store_true")
    q.add_argument("--homogeneous", action="store_true")
    q = sub.add_parser("quotient")
    q.add_argument("file")
    q.add_argument("--colors", required=True)
    q = sub.add_parser("localize")
    q.add_argument("file")
    q.add_argument("--roots")
    q.add_argument("--sigma")
    q = sub.add_parser("reduce")
    q.add_argument("file")
    q.add_argument("--tree", action="store_true")
    q = sub.add_parser("center")
    q.add_argument("file")
    q.add_argument("--q", required=True)
    q = sub.add_parser("monoid")
    q.add_argument("file")
    q.add_argument("--q", required=True)
    q = sub.add_parser("catalog")
    q.add_argument("roots")
    q = sub.add_parser("enumerate")
    q.add_argument("roots")
    q.add_argument("--primitive", action="store_true")
    q.add_argument("--cuspidal", action="store_true")
    q.add_argument("--defect", type=int)
    q.add_argument("--max-rank", type=int, dest="max_rank")
    q.add_argument("--count", action="store_true")
    q.add_argument("--probe-star", action="store_true", dest="probe_star")
    q.add_argument("--mod-aut", action="store_true", dest="mod_aut")

    args = p.parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=_sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.verb == "catalog":
        rs = RootSystem.parse(args.roots)
        rows = []
        for e in catalog_table(rs):
            rows.append(
                {
                    "root": format_root(rs, e.gamma),
                    "tag": e.tag,
                    "required": [rs.root_name(i) for i in sorted(e.required)],
                    "optional": [rs.root_name(i) for i in sorted(e.optional)],
                    "verify": e.verify,
                }
            )
        text = "\n".join(
            f"{r['root']:<24} {r['tag']:<10} required [{' '.join(r['required'])}]"
            f" optional [{' '.join(r['optional'])}]" + ("  verify" if r["verify"] else "")
            for r in rows
        )
        _emit(args, {"roots": rs.token, "entries": rows}, text + "\n")
        return 0

    if args.verb == "enumerate":
        rs = RootSystem.parse(args.roots)
        query = EnumerationQuery(
            rs,
            cuspidal=args.cuspidal,
            primitive=args.primitive,
            max_rank=args.max_rank,
            defect=args.defect,
            mod_aut=args.mod_aut,
        )
        if args.probe_star:
            hits = probe_distinguished_not_star(query)
            for sys, names in hits:
                print(f"# distinguished-not-star: {','.join(names)}")
                print(format_system(sys))
            print(f"probe hits: {len(hits)}")
            return 0 if not hits else 1
        count = 0
        for sys in enumerate_systems(query):
            count += 1
            if not args.count:
                print(format_system(sys))
        if args.count:
            print(count)
        return 0

    sys = _read_system(args.file)

    if args.verb == "validate":
        bad = validate(sys)
        if bad:
            for v in bad:
                print(str(v))
            return 1
        _emit(args, {"valid": True}, "ok")
        return 0

    if args.verb == "colors":
        _emit(args, _colors_json(sys), _colors_text(sys))
        return 0

    if args.verb == "info":
        bad = validate(sys)
        if bad:
            for v in bad:
                print(str(v))
            return 1
        table = build_colors(sys)
        red, _ = is_reductive(sys, table)
        prim, markers = st.is_primitive(sys)
        info = {
            "rank": sys.rank,
            "defect": defect(sys, table),
            "cuspidal": st.is_cuspidal(sys),
            "reductive": red,
            "primitive": prim,
            "markers": list(markers),
        }
        text = (
            f"rank {info['rank']}\ndefect {info['defect']}\n"
            f"cuspidal {'yes' if info['cuspidal'] else 'no'}\n"
            f"reductive {'yes' if info['reductive'] else 'no'}\n"
            f"primitive {'yes' if info['primitive'] else 'no'}\n"
        )
        for m in markers:
            text += f"marker {m}\n"
        text += _colors_text(sys)
        _emit(args, {**info, **_colors_json(sys)}, text)
        return 0

    if args.verb == "quotients":
        table = build_colors(sys)
        if args.minimal:
            kind = "homogeneous" if args.homogeneous else "star"
            subsets = minimal_subsets(sys, kind, table)
            reports = [is_star_distinguished(sys, names, table) for names in subsets]
        else:
            reports = distinguished_subsets(sys, table)
            if args.star:
                reports = [r for r in reports if r.star]
            if args.homogeneous:
                reports = [r for r in reports if r.homogeneous]
        lines = []
        for r in reports:
            flags = []
            if r.star:
                flags.append("star")
            if r.smooth:
                flags.append("smooth")
            if r.homogeneous:
                flags.append("homogeneous")
            lines.append(f"{{{','.join(r.delta_prime)}}} {' '.join(flags) or 'distinguished'}")
        _emit(args, {"reports": [_report_json(r) for r in reports]}, "\n".join(lines) + "\n")
        return 0

    if args.verb == "quotient":
        names = tuple(x for x in args.colors.split(",") if x)
        q = quotient(sys, names)
        _emit(args, _system_json(q), format_system(q))
        return 0

    if args.verb == "localize":
        from .system import localize_sigma, localize_simple
        from .rootsystem import parse_root_expr

        if (args.roots is None) == (args.sigma is None):
            raise ValueError("localize needs exactly one of --roots / --sigma")
        if args.roots is not None:
            keep = [sys.rs.root_index(t) for t in args.roots.replace(",", " ").split()]
            out = localize_simple(sys, keep)
        else:
            subset = [
                parse_root_expr(sys.rs, t) for t in args.sigma.split(",") if t.strip()
            ]
            out = localize_sigma(sys, subset)
        _emit(args, _system_json(out), format_system(out))
        return 0

    if args.verb == "tails":
        tails = st.detect_tails(sys)
        payload = {
            "tails": [
                {
                    "gamma": format_root(sys.rs, t.gamma),
                    "shape": t.shape,
                    "colors": list(t.delta_prime),
                }
                for t in tails
            ]
        }
        text = "\n".join(
            f"{format_root(sys.rs, t.gamma)} {t.shape} via {{{','.join(t.delta_prime)}}}"
            for t in tails
        )
        _emit(args, payload, (text + "\n") if text else "no tails\n")
        return 0

    if args.verb == "primitive":
        prim, markers = st.is_primitive(sys)
        text = "primitive: " + ("yes" if prim else "no")
        for m in markers:
            text += f"\nmarker {m}"
        _emit(args, {"primitive": prim, "markers": list(markers)}, text + "\n")
        return 0 if prim else 1

    if args.verb == "reduce":
        node = st.reduction_tree(sys) if args.tree else st.reduction_step(sys)
        _emit(args, _node_json(node), _node_text(node))
        return 0

    if args.verb == "center":
        names = tuple(x for x in args.q.split(",") if x)
        data = center_data(sys, names)
        payload = {
            "q_colors": list(data.q_colors),
            "n_basis": [format_root(sys.rs, v) for v in data.n_basis],
            "lambda_weights": [
                [
                    {"color": c, "weight": sys.rs.root_name(w), "coeff": k}
                    for c, w, k in entry
                ]
                for entry in data.lambda_weights
            ],
            "dim_c": data.dim_c,
        }
        text = f"dim C = {data.dim_c}\n"
        if data.n_basis:
            text += "N basis: " + ", ".join(format_root(sys.rs, v) for v in data.n_basis) + "\n"
        else:
            text += "N = 0\n"
        _emit(args, payload, text)
        return 0

    if args.verb == "monoid":
        names = tuple(x for x in args.q.split(",") if x)
        gens = weight_monoid(sys, names)
        text = "\n".join(format_root(sys.rs, v) for v in gens)
        _emit(args, {"generators": [format_root(sys.rs, v) for v in gens]}, (text or "-") + "\n")
        return 0

    raise AssertionError(args.verb)


def _node_json(node: st.ReductionNode) -> dict:
    return {
        "tag": node.tag,
        "detail": [list(d) if isinstance(d, tuple) else d for d in node.detail],
        "markers": list(node.markers),
        "system": _system_json(node.system),
        "children": [_node_json(c) for c in node.children],
    }


def _node_text(node: st.ReductionNode, indent: int = 0) -> str:
    pad = "  " * indent
    detail = ""
    if node.tag == "parabolic-induction":
        names = ",".join(node.system.rs.root_name(i) for i in node.detail[0])
        detail = f" S'={{{names}}}"
    elif node.tag == "fiber-product":
        detail = " " + " ".join("{" + ",".join(d) + "}" for d in node.detail)
    elif node.tag == "projective-fibration":
        detail = f" delta={node.detail[0]}"
    marker = "".join(f" [{m}]" for m in node.markers)
    line = f"{pad}{node.tag}{detail}{marker}"
    parts = [line]
    for c in node.children:
        parts.append(_node_text(c, indent + 1))
    return "\n".join(parts)


if __name__ == "__main__":
    raise SystemExit(main())
