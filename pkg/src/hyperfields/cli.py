"""Command line entry point: ``hyperfields <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import ParseError, load_catalog, parse, to_json_dict
from .core import HyperStructure, verify
from .dot import form_hash, to_dot
from .enumeration import CapacityError, default_workers, enumerate_hyperfields, naive_enumerate
from .groups import identify, parse_group
from .morphisms import STRONG, WEAK, canonical_form, extension_digraph, find_homs

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(arg: str) -> tuple[str, HyperStructure]:
    """A file path, or failing that a catalog key."""
    if os.path.exists(arg):
        try:
            with open(arg, encoding="utf-8") as fh:
                return arg, parse(fh.read())
        except OSError as exc:
            raise UsageError(f"{arg}: {exc.strerror}") from None
        except ParseError as exc:
            raise UsageError(f"{arg}: {exc}") from None
    catalog = load_catalog()
    if arg in catalog:
        return arg, catalog.structure(arg)
    raise UsageError(f"{arg}: no such file or catalog entry")


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _class_name(catalog, form):
    return catalog.label(form) or form_hash(form)


def cmd_enumerate(args) -> int:
    if args.naive and (args.group or args.neg is not None):
        raise UsageError("--naive searches every group; drop --group/--neg")
    if args.neg is not None and not args.group:
        raise UsageError("--neg needs --group")
    group = parse_group(args.group) if args.group else None
    if args.naive:
        result = naive_enumerate(args.order)
    else:
        result = enumerate_hyperfields(args.order, group=group, neg=args.neg, workers=args.workers)
    catalog = load_catalog()
    subtotals = sorted(result.subtotals.items())
    if args.format == "json":
        doc = {
            "order": result.order,
            "count": result.count,
            "subtotals": [{"group": g, "neg_one": e, "count": c} for (g, e), c in subtotals],
            "classes": [],
        }
        for form, h in zip(result.forms, result.classes):
            doc["classes"].append({"name": _class_name(catalog, form), "form": form.hex(),
                                   "group": identify(h.mul)[0].label, "neg_one": h.names[h.neg_one],
                                   "structure": to_json_dict(h)})
        text = json.dumps(doc, indent=1) + "\n"
    else:
        out = [f"{result.count} classes"]
        out += [f"  {g} with -1 = {e}: {c}" for (g, e), c in subtotals]
        for form, h in zip(result.forms, result.classes):
            out.append("")
            out.append(f"{_class_name(catalog, form)}  {identify(h.mul)[0].label}  -1 = {h.names[h.neg_one]}"
                       f"  form {form.hex()}")
            out.append(h.table_text())
        text = "\n".join(out) + "\n"
    _write(text, args.out)
    if args.out:
        print(f"{result.count} classes")
    return OK


def _report(label: str, h: HyperStructure) -> bool:
    report = verify(h)
    for axiom, state in report.status().items():
        print(f"  {axiom:16} {state}")
    for failure in report.all_failures():
        print("  " + failure.describe(h.names))
    return report.ok


def cmd_verify(args) -> int:
    label, h = _load(args.target)
    print(label)
    ok = _report(label, h)
    catalog = load_catalog()
    if not os.path.exists(args.target) and args.target in catalog:
        entry = catalog[args.target]
        if entry.errata:
            print(f"  errata: {entry.note}")
        for problem in catalog.header_problems(args.target):
            print(f"  header: {problem}")
            ok = False
    print("verified" if ok else "FAILED")
    return OK if ok else FAILED


def cmd_classify(args) -> int:
    catalog = load_catalog()
    status = OK
    for path in args.paths:
        label, h = _load(path)
        report = verify(h)
        if not report.ok:
            print(f"{label}: not a hyperfield")
            for failure in report.all_failures():
                print("  " + failure.describe(h.names))
            status = FAILED
            continue
        form = canonical_form(h)
        matches = catalog.matches(h)
        print(f"{label}: {_class_name(catalog, form)}  form {form.hex()}"
              + (f"  catalog {', '.join(matches)}" if matches else ""))
    return status


def cmd_hom(args) -> int:
    src_label, src = _load(args.source)
    dst_label, dst = _load(args.target)
    homs = find_homs(src, dst, args.kind, injective_only=args.injective)
    kind = f"{'injective ' if args.injective else ''}{args.kind}"
    print(f"{len(homs)} {kind} homomorphisms {src_label} -> {dst_label}")
    for m in homs:
        print("  " + m.describe())
    return OK


def cmd_lattice(args) -> int:
    if args.max_order < 2:
        raise UsageError("--max-order must be at least 2")
    catalog = load_catalog()
    classes, orders = [], {}
    for n in range(2, args.max_order + 1):
        result = enumerate_hyperfields(n, workers=args.workers)
        for form, h in zip(result.forms, result.classes):
            name = _class_name(catalog, form)
            classes.append((name, h))
            orders[name] = n
    graph = extension_digraph(classes, workers=args.workers)
    _write(to_dot(graph, orders), args.dot)
    strong = sum(1 for e in graph.edges if e[2] == "strong-extension")
    print(f"{len(graph.nodes)} nodes, {len(graph.edges) - strong} weak edges, {strong} strong edges")
    return OK


def cmd_show(args) -> int:
    catalog = load_catalog()
    if args.name not in catalog:
        raise UsageError(f"unknown catalog name {args.name!r}")
    entry = catalog[args.name]
    h = entry.structure
    print(f"{entry.key}  order {h.order}  {identify(h.mul)[0].label}  -1 = {h.names[h.neg_one]}")
    if entry.source:
        print(f"source: {entry.source}")
    if entry.errata:
        print("errata: yes")
    if entry.note:
        print(f"note: {entry.note}")
    print(h.table_text())
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperfields", description="Finite hyperfield toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="all hyperfields of one order up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--group", help="restrict to one unit group, e.g. cyclic:4 or product:2,2")
    p.add_argument("--neg", type=int, help="carrier index of -1 (needs --group)")
    p.add_argument("--naive", action="store_true", help="use the brute-force oracle (order <= 4)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check every axiom of a table")
    p.add_argument("target", help="file path or catalog name")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="name the isomorphism class of each table")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("hom", help="list homomorphisms between two hyperfields")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--kind", choices=(WEAK, STRONG), default=WEAK)
    p.add_argument("--injective", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("lattice", help="extension digraph of all classes up to an order, as DOT")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--dot", required=True, help="output path ('-' for stdout)")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("show", help="print a catalog table")
    p.add_argument("name")
    p.set_defaults(func=cmd_show)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = default_workers()
    if getattr(args, "dot", None) == "-":
        args.dot = None
    try:
        return args.func(args)
    except (UsageError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
