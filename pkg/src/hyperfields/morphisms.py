"""Isomorphism classes, homomorphism search and the extension digraph.

Canonical form byte layout (version 1)::

    [1, n, r, f1..fr, neg_one, S_1 .. S_{n-1}]

where ``f1..fr`` are the cyclic factor orders of the unit group, every
element index refers to the standard carrier of that group (see
``groups``), and ``S_g`` is the bitmask of ``1 + g``.  The form is the
lexicographic minimum over every isomorphism from the standard group onto
the structure's units, so two structures share a form exactly when they
are isomorphic.  Each ``S_g`` takes ``ceil(n / 8)`` big-endian bytes, so
orders up to 8 use one byte per row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .core import HyperStructure, is_hyperfield, members
from .groups import AbelianGroup, automorphisms, homomorphisms, identify, isomorphisms

WEAK = "weak"
STRONG = "strong"


class UnverifiedError(ValueError):
    pass


def _image(f: Sequence[int], mask: int) -> int:
    out = 0
    for u in members(mask):
        out |= 1 << f[u]
    return out


@lru_cache(maxsize=None)
def _automorphisms(group: AbelianGroup):
    return automorphisms(group)


def _labelings(h: HyperStructure, group: AbelianGroup | None):
    if group is not None and h.mul == group.monoid_table:
        return group, _automorphisms(group)
    std, _ = identify(h.mul)
    return std, isomorphisms(std, h.mul)


def canonical_labeling(h: HyperStructure, group: AbelianGroup | None = None) -> tuple[bytes, tuple[int, ...]]:
    """Canonical form plus an isomorphism (standard carrier -> ``h``) attaining it."""
    std, isos = _labelings(h, group)
    n = h.order
    head = [1, n, len(std.factors), *std.factors]
    width = _row_width(n)
    best = None
    for phi in isos:
        inv = [0] * n
        for i, v in enumerate(phi):
            inv[v] = i
        rows = b"".join(_image(inv, h.add[1][phi[g]]).to_bytes(width, "big") for g in range(1, n))
        key = bytes(head + [inv[h.neg_one]]) + rows
        if best is None or key < best[0]:
            best = (key, phi)
    return best


def _row_width(n: int) -> int:
    return (n + 7) // 8


@lru_cache(maxsize=4096)
def _cached_form(h: HyperStructure) -> bytes:
    return canonical_labeling(h)[0]


def canonical_form(h: HyperStructure, group: AbelianGroup | None = None, check: bool = True) -> bytes:
    """Automorphism-orbit-minimal serialisation of a verified structure."""
    if check and not is_hyperfield(h):
        raise UnverifiedError("canonical forms are only defined for hyperfields")
    if group is None:
        return _cached_form(h)
    return canonical_labeling(h, group)[0]


def structure_from_form(form: bytes, names: Sequence[str] | None = None) -> HyperStructure:
    """Rebuild the standard-labelled structure a canonical form describes."""
    n, r = form[1], form[2]
    group = AbelianGroup(tuple(form[3:3 + r]))
    neg_one = form[3 + r]
    width = _row_width(n)
    body = form[4 + r:]
    rows = [int.from_bytes(body[i:i + width], "big") for i in range(0, len(body), width)]
    mul = group.monoid_table
    inv = [0] + [next(y for y in range(1, n) if mul[x][y] == 1) for x in range(1, n)]
    add = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x == 0 or y == 0:
                add[x][y] = 1 << (x + y)
            else:
                add[x][y] = _image(mul[x], rows[mul[inv[x]][y] - 1])
    return HyperStructure.from_tables(mul, add, neg_one, names or group.names)


@dataclass(frozen=True)
class MorphismMap:
    """A carrier map with the properties it was checked to have."""

    source: HyperStructure = field(repr=False)
    target: HyperStructure = field(repr=False)
    mapping: tuple[int, ...]
    weak: bool
    strong: bool
    injective: bool
    iso: bool

    def describe(self) -> str:
        pairs = ", ".join(f"{self.source.names[x]}->{self.target.names[y]}" for x, y in enumerate(self.mapping))
        kinds = [k for k in ("weak", "strong", "injective", "iso") if getattr(self, k)]
        return f"[{pairs}] ({', '.join(kinds) or 'not a homomorphism'})"


def is_multiplicative(source: HyperStructure, target: HyperStructure, f: Sequence[int]) -> bool:
    if f[0] != 0 or f[1] != 1:
        return False
    sm, tm = source.mul, target.mul
    n = source.order
    return all(f[sm[x][y]] == tm[f[x]][f[y]] for x in range(n) for y in range(n))


def addition_relation(source: HyperStructure, target: HyperStructure, f: Sequence[int]) -> tuple[bool, bool]:
    """``(weak, strong)``: ``f(x+y)`` contained in / equal to ``f(x)+f(y)`` for all pairs."""
    weak = strong = True
    n = source.order
    for x in range(n):
        for y in range(n):
            img = _image(f, source.add[x][y])
            cell = target.add[f[x]][f[y]]
            if img & ~cell:
                return False, False
            if img != cell:
                strong = False
    return weak, strong


def check_map(source: HyperStructure, target: HyperStructure, f: Sequence[int]) -> MorphismMap:
    """Classify a carrier map directly from the definitions."""
    f = tuple(f)
    if len(f) != source.order or any(not 0 <= v < target.order for v in f):
        raise ValueError("map must send every source element into the target carrier")
    mult = is_multiplicative(source, target, f)
    weak, strong = addition_relation(source, target, f) if mult else (False, False)
    injective = len(set(f)) == len(f)
    iso = False
    if weak and injective and source.order == target.order:
        g = [0] * target.order
        for x, y in enumerate(f):
            g[y] = x
        iso = is_multiplicative(target, source, g) and addition_relation(target, source, g)[0]
    return MorphismMap(source, target, f, weak, strong, injective, iso)


def compose(g: MorphismMap, f: MorphismMap) -> MorphismMap:
    """``g o f`` re-checked from scratch."""
    return check_map(f.source, g.target, [g.mapping[v] for v in f.mapping])


def identity_map(h: HyperStructure) -> MorphismMap:
    return check_map(h, h, range(h.order))


def find_homs(source: HyperStructure, target: HyperStructure, kind: str = WEAK,
              injective_only: bool = False) -> list[MorphismMap]:
    """Every homomorphism of the given kind, via unit-group homomorphisms."""
    if kind not in (WEAK, STRONG):
        raise ValueError(f"unknown kind {kind!r}")
    group, phi = identify(source.mul)
    inv = [0] * source.order
    for i, v in enumerate(phi):
        inv[v] = i
    out = []
    for psi in homomorphisms(group, target.mul):
        f = [psi[inv[x]] for x in range(source.order)]
        if injective_only and len(set(f)) != len(f):
            continue
        m = check_map(source, target, f)
        if m.strong if kind == STRONG else m.weak:
            out.append(m)
    out.sort(key=lambda m: m.mapping)
    return out


def is_isomorphic(h1: HyperStructure, h2: HyperStructure) -> MorphismMap | None:
    """An explicit isomorphism when the canonical forms agree, else ``None``."""
    if h1.order != h2.order:
        return None
    k1, phi1 = canonical_labeling(h1)
    k2, phi2 = canonical_labeling(h2)
    if k1 != k2:
        return None
    inv1 = [0] * h1.order
    for i, v in enumerate(phi1):
        inv1[v] = i
    m = check_map(h1, h2, [phi2[inv1[x]] for x in range(h1.order)])
    if not (m.iso and m.strong and m.injective):
        raise RuntimeError("canonical forms agree but the induced map is not an isomorphism")
    return m


WEAK_EXTENSION = "weak-extension"
STRONG_EXTENSION = "strong-extension"


@dataclass
class ExtensionDigraph:
    nodes: list[str]
    edges: list[tuple[str, str, str]]

    def has_edge(self, src: str, dst: str, kind: str = WEAK_EXTENSION) -> bool:
        return (src, dst, kind) in self._edge_set

    @property
    def _edge_set(self):
        return set(self.edges)

    def successors(self, src: str, kind: str = WEAK_EXTENSION) -> list[str]:
        return [d for s, d, k in self.edges if s == src and k == kind]

    def predecessors(self, dst: str, kind: str = WEAK_EXTENSION) -> list[str]:
        return [s for s, d, k in self.edges if d == dst and k == kind]


def _pair_edges(args):
    (sname, source), (tname, target) = args
    out = []
    if target.order < source.order or (target.order - 1) % (source.order - 1):
        return out
    homs = find_homs(source, target, WEAK, injective_only=True)
    if homs:
        out.append((sname, tname, WEAK_EXTENSION))
        if any(m.strong for m in homs):
            out.append((sname, tname, STRONG_EXTENSION))
    return out


def extension_digraph(classes: Iterable[tuple[str, HyperStructure]], workers: int = 1) -> ExtensionDigraph:
    """Edge ``F -> L`` of each kind when an injective homomorphism of that kind exists."""
    classes = list(classes)
    pairs = [(a, b) for a in classes for b in classes if a[0] != b[0]]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_pair_edges, pairs, chunksize=32))
    else:
        results = [_pair_edges(p) for p in pairs]
    edges = sorted(e for r in results for e in r)
    return ExtensionDigraph([name for name, _ in classes], edges)
