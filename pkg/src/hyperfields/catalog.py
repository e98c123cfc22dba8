"""Text/JSON serialisation and the shipped fixture catalog.

Text documents are line oriented::

    hyperfield 1
    order 3
    elements 0 1 a
    neg_one 1
    mul
    0 0 0
    0 1 a
    0 a 1
    add
    {0} {1} {a}
    {1} {a,0} {1,a}
    {a} {1,a} {1,0}
    end

Catalog entries replace the ``hyperfield`` line with ``entry KEY`` plus
metadata, and may give ``group C4`` instead of a ``mul`` block.  The JSON
mirror carries the same fields with element indices instead of names.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .core import HyperStructure, StructureError, is_hyperfield, members, verify
from .groups import parse_group
from .morphisms import canonical_form, is_isomorphic

FORMAT_VERSION = 1
_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, column {col}: {message}" if line else message)
        self.line = line
        self.col = col


def _tokens(text):
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]


def _parse_set(token, col, lineno, index):
    if not (token.startswith("{") and token.endswith("}")):
        raise ParseError(f"expected a set like {{a,0}}, got {token!r}", lineno, col)
    body = token[1:-1]
    if not body:
        raise ParseError("empty cell", lineno, col)
    mask = 0
    offset = col + 1
    for part in body.split(","):
        if part not in index:
            raise ParseError(f"unknown element name {part!r}", lineno, offset)
        mask |= 1 << index[part]
        offset += len(part) + 1
    return mask


@dataclass
class _Doc:
    meta: dict = field(default_factory=dict)
    claims: list = field(default_factory=list)
    start: int = 0
    order: int | None = None
    names: list | None = None
    group: object = None
    neg_name: tuple | None = None
    mul: list | None = None
    add: list | None = None


def _read_rows(lines, pos, n, what):
    rows = []
    for _ in range(n):
        if pos >= len(lines):
            raise ParseError(f"{what} table ends early", pos, 1)
        pos += 1
        text = lines[pos - 1]
        if not text.strip() or text.lstrip().startswith("#"):
            raise ParseError(f"{what} table ends early", pos, 1)
        rows.append((pos, text))
    return rows, pos


def _finish(doc: _Doc) -> HyperStructure:
    if doc.names is None:
        raise ParseError("missing 'elements' line", doc.start, 1)
    names = doc.names
    n = len(names)
    if doc.order is not None and doc.order != n:
        raise ParseError(f"order {doc.order} but {n} element names", doc.start, 1)
    if n < 2 or names[0] != "0" or names[1] != "1":
        raise ParseError("elements must start with 0 and 1", doc.start, 1)
    index = {name: i for i, name in enumerate(names)}
    if len(index) != n:
        raise ParseError("duplicate element names", doc.start, 1)

    if doc.mul is not None:
        mul = []
        for lineno, text in doc.mul:
            toks = _tokens(text)
            if len(toks) != n:
                raise ParseError(f"mul row has {len(toks)} entries, expected {n}", lineno, 1)
            row = []
            for tok, col in toks:
                if tok not in index:
                    raise ParseError(f"unknown element name {tok!r}", lineno, col)
                row.append(index[tok])
            mul.append(row)
    elif doc.group is not None:
        lineno, group = doc.group
        if group.order + 1 != n:
            raise ParseError(f"group {group.label} does not fit {n} elements", lineno, 1)
        mul = group.monoid_table
    else:
        raise ParseError("need a 'mul' table or a 'group' line", doc.start, 1)

    if doc.add is None:
        raise ParseError("missing 'add' table", doc.start, 1)
    add = []
    for lineno, text in doc.add:
        toks = _tokens(text)
        if len(toks) != n:
            raise ParseError(f"add row has {len(toks)} cells, expected {n}", lineno, 1)
        add.append([_parse_set(tok, col, lineno, index) for tok, col in toks])

    if doc.neg_name is not None:
        lineno, col, name = doc.neg_name
        if name not in index:
            raise ParseError(f"unknown element name {name!r}", lineno, col)
        neg_one = index[name]
    else:
        found = [y for y in range(n) if add[1][y] & 1]
        neg_one = found[0] if len(found) == 1 else 1
    try:
        return HyperStructure.from_tables(mul, add, neg_one, names)
    except StructureError as exc:
        raise ParseError(str(exc), doc.start, 1) from None


def _parse_text(text: str) -> list[tuple[dict, list, HyperStructure]]:
    lines = text.splitlines()
    docs = []
    doc = None
    pos = 0
    while pos < len(lines):
        pos += 1
        raw = lines[pos - 1]
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(raw)
        key, kcol = toks[0]
        rest = raw[raw.index(key) + len(key):].strip()
        if doc is None:
            if key == "hyperfield":
                if rest != str(FORMAT_VERSION):
                    raise ParseError(f"unsupported format version {rest!r}", pos, kcol)
                doc = _Doc(start=pos)
            elif key == "entry":
                if not rest:
                    raise ParseError("entry needs a key", pos, kcol)
                doc = _Doc(meta={"key": rest}, start=pos)
            else:
                raise ParseError(f"expected 'hyperfield' or 'entry', got {key!r}", pos, kcol)
            continue
        if key == "end":
            docs.append((doc.meta, doc.claims, _finish(doc)))
            doc = None
        elif key == "order":
            try:
                doc.order = int(rest)
            except ValueError:
                raise ParseError(f"bad order {rest!r}", pos, kcol) from None
            if doc.order < 2:
                raise ParseError("order must be at least 2", pos, kcol)
        elif key == "elements":
            doc.names = [t for t, _ in toks[1:]]
        elif key == "group":
            try:
                doc.group = (pos, parse_group(rest))
            except ValueError as exc:
                raise ParseError(str(exc), pos, kcol) from None
        elif key == "neg_one":
            if len(toks) != 2:
                raise ParseError("neg_one takes one element name", pos, kcol)
            doc.neg_name = (pos, toks[1][1], toks[1][0])
        elif key in ("mul", "add"):
            if doc.names is None:
                raise ParseError(f"'{key}' before 'elements'", pos, kcol)
            rows, pos = _read_rows(lines, pos, len(doc.names), key)
            setattr(doc, key, rows)
        elif key in ("source", "note"):
            doc.meta[key] = rest
        elif key == "errata":
            if rest not in ("yes", "no"):
                raise ParseError("errata must be yes or no", pos, kcol)
            doc.meta["errata"] = rest == "yes"
        elif key == "claim":
            doc.claims.append((pos, rest))
        else:
            raise ParseError(f"unknown keyword {key!r}", pos, kcol)
    if doc is not None:
        raise ParseError("document not terminated by 'end'", len(lines), 1)
    return docs


def parse(text: str) -> HyperStructure:
    """One text or JSON document -> structure (shape-checked, axioms not verified)."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    docs = _parse_text(text)
    if len(docs) != 1:
        raise ParseError(f"expected one document, found {len(docs)}")
    return docs[0][2]


def serialize(h: HyperStructure) -> str:
    names = h.names
    n = h.order
    out = [f"hyperfield {FORMAT_VERSION}", f"order {n}", "elements " + " ".join(names),
           f"neg_one {names[h.neg_one]}", "mul"]
    out += [" ".join(names[v] for v in row) for row in h.mul]
    out.append("add")
    for row in h.add:
        out.append(" ".join("{" + ",".join(names[i] for i in members(c)) + "}" for c in row))
    out.append("end")
    return "\n".join(out) + "\n"


def to_json_dict(h: HyperStructure) -> dict:
    return {
        "format": "hyperfield",
        "version": FORMAT_VERSION,
        "order": h.order,
        "elements": list(h.names),
        "neg_one": h.neg_one,
        "mul": [list(row) for row in h.mul],
        "add": [[list(members(c)) for c in row] for row in h.add],
    }


def to_json(h: HyperStructure) -> str:
    return json.dumps(to_json_dict(h), indent=1) + "\n"


def from_json(text: str | dict) -> HyperStructure:
    try:
        data = json.loads(text) if isinstance(text, str) else text
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if data.get("format") != "hyperfield" or data.get("version") != FORMAT_VERSION:
        raise ParseError("not a version 1 hyperfield document")
    try:
        n = data["order"]
        names = data["elements"]
        mul = data["mul"]
        add = data["add"]
        neg_one = data["neg_one"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    if len(names) != n or len(mul) != n or len(add) != n or any(len(r) != n for r in mul + add):
        raise ParseError(f"tables must be {n}x{n}")
    for x, row in enumerate(add):
        for y, cell in enumerate(row):
            if not cell:
                raise ParseError(f"empty cell at ({x}, {y})")
            if any(not 0 <= v < n for v in cell):
                raise ParseError(f"cell ({x}, {y}) mentions an unknown element")
    try:
        return HyperStructure.from_tables(mul, add, neg_one, names)
    except StructureError as exc:
        raise ParseError(str(exc)) from None


@dataclass
class CatalogEntry:
    key: str
    structure: HyperStructure
    source: str = ""
    errata: bool = False
    note: str = ""
    claims: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return self.structure.order

    @property
    def is_alternate(self) -> bool:
        """Extra printings kept for cross-checks rather than as a class name."""
        return self.key.endswith("-table")


class Catalog:
    def __init__(self, entries: list[CatalogEntry]):
        self.entries = {}
        for e in entries:
            if e.key in self.entries:
                raise ValueError(f"duplicate catalog key {e.key!r}")
            self.entries[e.key] = e

    def __contains__(self, key):
        return key in self.entries

    def __getitem__(self, key) -> CatalogEntry:
        try:
            return self.entries[key]
        except KeyError:
            raise KeyError(f"unknown catalog name {key!r}") from None

    def structure(self, key: str) -> HyperStructure:
        return self[key].structure

    def names(self) -> list[str]:
        """Class names (no alternates, no errata) in file order."""
        return [k for k, e in self.entries.items() if not e.is_alternate and not e.errata]

    def valid(self, order: int | None = None) -> list[CatalogEntry]:
        return [e for e in self.entries.values() if not e.errata and (order is None or e.order == order)]

    def header_problems(self, key: str) -> list[str]:
        """Claims attached to an entry that its table does not satisfy."""
        entry = self[key]
        h = entry.structure
        index = {name: i for i, name in enumerate(h.names)}
        out = []
        for lineno, claim in entry.claims:
            toks = claim.split()
            if toks[0] == "cell" and len(toks) == 4:
                x, y = index[toks[1]], index[toks[2]]
                want = _parse_set(toks[3], 1, lineno, index)
                if h.add[x][y] != want:
                    out.append(f"claimed {toks[1]}+{toks[2]} = {toks[3]} but the table has "
                               f"{h.fmt(members(h.add[x][y]))}")
            elif toks[0] == "iso" and len(toks) == 2:
                other = self[toks[1]].structure
                if not verify(h).ok or not verify(other).ok or is_isomorphic(h, other) is None:
                    out.append(f"claimed to be {toks[1]} but is not isomorphic to it")
            else:
                out.append(f"unreadable claim {claim!r}")
        return out

    @property
    def _forms(self) -> dict[bytes, list[str]]:
        if not hasattr(self, "_form_cache"):
            forms = {}
            for e in self.valid():
                if not is_hyperfield(e.structure):
                    continue
                forms.setdefault(canonical_form(e.structure), []).append(e.key)
            self._form_cache = forms
        return self._form_cache

    def matches(self, h: HyperStructure) -> list[str]:
        """Keys of non-errata entries isomorphic to ``h``."""
        return list(self._forms.get(canonical_form(h), []))

    def label(self, form: bytes) -> str | None:
        """Preferred class name for a canonical form."""
        keys = [k for k in self._forms.get(form, []) if not self.entries[k].is_alternate]
        return keys[0] if keys else None


def load_catalog_text(text: str) -> Catalog:
    entries = []
    for meta, claims, h in _parse_text(text):
        if "key" not in meta:
            raise ParseError("catalog documents must start with 'entry'")
        entries.append(CatalogEntry(meta["key"], h, meta.get("source", ""), meta.get("errata", False),
                                    meta.get("note", ""), claims))
    return Catalog(entries)


@lru_cache(maxsize=1)
def load_catalog() -> Catalog:
    text = resources.files("hyperfields").joinpath("data/catalog.txt").read_text(encoding="utf-8")
    return load_catalog_text(text)
