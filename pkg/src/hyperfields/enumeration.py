"""Exhaustive search for all hyperfields of a given order.

Distributivity forces ``x + y = x * (1 + x^-1 y)`` for every unit ``x``, so
a hyperfield on ``G u {0}`` is fixed by its row family ``S_g = 1 + g``.
The search backtracks over row families with three necessary conditions
as pruning, rebuilds the full table and re-checks every axiom on it.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from . import kernels
from .core import HyperStructure, is_hyperfield, members, verify
from .groups import AbelianGroup, abelian_groups
from .morphisms import _automorphisms, canonical_form


class CapacityError(ValueError):
    """Input outside what a search is designed to handle."""


def negation_representatives(group: AbelianGroup) -> list[int]:
    """Elements with ``e^2 = 1``, one per automorphism orbit (largest index kept)."""
    mul = group.monoid_table
    candidates = [x for x in range(1, group.order + 1) if mul[x][x] == 1]
    seen = set()
    reps = []
    for x in sorted(candidates, reverse=True):
        if x in seen:
            continue
        orbit = {sigma[x] for sigma in _automorphisms(group)}
        seen |= orbit
        reps.append(x)
    return sorted(reps)


@dataclass(frozen=True)
class RowFamily:
    """Candidate sets ``S_g = 1 + g`` for every unit ``g`` (rows[g - 1])."""

    group: AbelianGroup
    neg_one: int
    rows: tuple[int, ...]

    def violations(self) -> list[tuple]:
        """Broken necessary conditions, as ``(kind, ...)`` tuples."""
        return _violations(self.group.monoid_table, _inverses(self.group), self.neg_one,
                           dict(enumerate(self.rows, start=1)))

    def assemble(self) -> HyperStructure:
        return _assemble(self.group, self.rows, self.neg_one)


def _inverses(group):
    mul = group.monoid_table
    return [0] + [next(y for y in range(1, len(mul)) if mul[x][y] == 1) for x in range(1, len(mul))]


def _scale(mul_row, mask):
    out = 0
    for u in members(mask):
        out |= 1 << mul_row[u]
    return out


def _violations(mul, inv, e, rows, only=None):
    """Check the row conditions among assigned rows (``rows`` maps g -> mask).

    1. ``0 in S_g`` exactly when ``g == e``;
    2. ``S_g = g * S_{g^-1}`` (commutativity);
    3. ``x in S_z  <=>  x^-1 z in S_{e x^-1}`` (reversibility).
    ``only`` restricts to conditions that mention that row.
    """
    out = []
    n = len(mul)
    for g, s in rows.items():
        if only is not None and g != only and inv[g] != only:
            continue
        if (s & 1) != (g == e):
            out.append(("zero", g))
        gi = inv[g]
        if gi in rows and s != _scale(mul[g], rows[gi]):
            out.append(("commutativity", g))
    for x in range(1, n):
        xi = inv[x]
        w = mul[e][xi]
        if w not in rows:
            continue
        sw = rows[w]
        for z in range(1, n):
            if z not in rows or (only is not None and only not in (z, w)):
                continue
            if (rows[z] >> x & 1) != (sw >> mul[xi][z] & 1):
                out.append(("reversibility", x, z))
    return out


def _assemble(group, rows, e):
    mul = group.monoid_table
    inv = _inverses(group)
    n = len(mul)
    add = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x == 0 or y == 0:
                add[x][y] = 1 << (x + y)
            else:
                add[x][y] = _scale(mul[x], rows[mul[inv[x]][y] - 1])
    return HyperStructure.from_tables(mul, add, e, group.names)


def _search(factors, e, first_mask=None, reverse=False):
    """Search one (group, -1) branch; optionally pin the first free row."""
    group = AbelianGroup(tuple(factors))
    mul = group.monoid_table
    inv = _inverses(group)
    n = len(mul)
    order = list(range(1, n))
    masks = [m for m in range(1, 1 << n)]
    if reverse:
        masks.reverse()
    flat_mul = tuple(v for row in mul for v in row)
    stats = Counter()
    found = {}
    rows = {}

    def options(g):
        gi = inv[g]
        if gi in rows:
            return [_scale(mul[g], rows[gi])]
        want = 1 if g == e else 0
        return [m for m in masks if (m & 1) == want]

    def recurse(i):
        if i == len(order):
            stats["candidates"] += 1
            rtuple = tuple(rows[g] for g in order)
            h = _assemble(group, rtuple, e)
            if not kernels.is_hyperfield(h.flat_add, flat_mul, n, e):
                return
            if not verify(h).ok:
                raise AssertionError("fast check and full verifier disagree")
            stats["verified"] += 1
            form = canonical_form(h, group, check=False)
            if form not in found or rtuple < found[form]:
                found[form] = rtuple
            return
        g = order[i]
        opts = options(g)
        if i == 0 and first_mask is not None:
            opts = [m for m in opts if m == first_mask]
        for m in opts:
            rows[g] = m
            if not _violations(mul, inv, e, rows, only=g):
                recurse(i + 1)
            del rows[g]

    recurse(0)
    return found, stats


@dataclass
class EnumerationResult:
    order: int
    classes: list[HyperStructure]
    forms: list[bytes]
    subtotals: dict[tuple[str, str], int]
    counters: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def count(self) -> int:
        return len(self.forms)


def default_workers() -> int:
    cap = os.environ.get("HYPERFIELD_THREADS")
    return max(1, int(cap)) if cap else 1


def enumerate_hyperfields(n: int, group: AbelianGroup | None = None, neg: int | None = None,
                          workers: int | None = None, reverse: bool = False) -> EnumerationResult:
    """All hyperfields of order ``n`` up to isomorphism.

    ``group``/``neg`` restrict the search to one unit group and one choice of
    -1 (``neg`` must then be a negation representative).  ``workers > 1``
    splits branches over processes; the class set does not depend on it.
    """
    if n < 2:
        raise ValueError("hyperfields have order at least 2")
    if workers is None:
        workers = default_workers()
    start = time.perf_counter()
    groups = abelian_groups(n - 1)
    if group is not None:
        groups = [g for g in groups if g.factors == group.factors]
        if not groups:
            raise ValueError(f"{group.label} is not a standard group of order {n - 1}")
    tasks = []
    for g in groups:
        reps = negation_representatives(g)
        if neg is not None:
            if neg not in reps:
                raise ValueError(f"{neg} is not a negation representative of {g.label}")
            reps = [neg]
        for e in reps:
            if workers > 1:
                # pin the first row S_1 = 1 + 1 to split the branch
                want = 1 if e == 1 else 0
                for m in range(1, 1 << n):
                    if (m & 1) == want:
                        tasks.append((g.factors, e, m, reverse))
            else:
                tasks.append((g.factors, e, None, reverse))

    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(_run_task, tasks))
    else:
        outputs = [_run_task(t) for t in tasks]

    merged: dict[tuple, dict[bytes, tuple]] = {}
    counters = Counter()
    for (factors, e, _, _), (found, stats) in zip(tasks, outputs):
        bucket = merged.setdefault((factors, e), {})
        counters.update(stats)
        for form, rows in found.items():
            if form not in bucket or rows < bucket[form]:
                bucket[form] = rows

    classes = {}
    subtotals = {}
    for (factors, e), bucket in merged.items():
        g = AbelianGroup(factors)
        subtotals[(g.label, g.names[e])] = len(bucket)
        for form, rows in bucket.items():
            classes[form] = _assemble(g, rows, e)
    forms = sorted(classes)
    counters["classes"] = len(forms)
    return EnumerationResult(n, [classes[f] for f in forms], forms, subtotals, dict(counters),
                             time.perf_counter() - start)


def _run_task(task):
    factors, e, first, reverse = task
    return _search(factors, e, first, reverse)


NAIVE_MAX_ORDER = 4


def naive_enumerate(n: int) -> EnumerationResult:
    """Independent oracle: every commutative table with ``0 + x = {x}``.

    Each unit-group class is tried with every involution of the units as
    the "contains 0" pattern, and every other cell bit is free.  Only the
    full axiom check filters.  Orders above 4 are refused.
    """
    if n < 2:
        raise ValueError("hyperfields have order at least 2")
    if n > NAIVE_MAX_ORDER:
        raise CapacityError(f"naive enumeration is limited to order <= {NAIVE_MAX_ORDER}")
    start = time.perf_counter()
    units = list(range(1, n))
    pairs = [(x, y) for x in units for y in units if x <= y]
    counters = Counter()
    classes = {}
    subtotals = Counter()
    for group in abelian_groups(n - 1):
        mul = group.monoid_table
        flat_mul = tuple(v for row in mul for v in row)
        for sigma in _involutions(units):
            neg_one = sigma[1]
            choices = []
            for x, y in pairs:
                zero = 1 if sigma[x] == y else 0
                lo = 0 if zero else 2
                choices.append([(m << 1) | zero for m in range(lo >> 1, 1 << (n - 1))])
            add = [0] * (n * n)
            for x in range(n):
                add[x] = 1 << x
                add[x * n] = 1 << x
            for cells in product(*choices):
                counters["candidates"] += 1
                for (x, y), c in zip(pairs, cells):
                    add[x * n + y] = c
                    add[y * n + x] = c
                if not kernels.is_hyperfield(add, flat_mul, n, neg_one):
                    continue
                h = HyperStructure.from_tables(mul, [add[i * n:(i + 1) * n] for i in range(n)], neg_one,
                                               group.names)
                if not verify(h).ok:
                    raise AssertionError("fast check and full verifier disagree")
                counters["verified"] += 1
                form = canonical_form(h, group, check=False)
                if form not in classes:
                    classes[form] = h
                    subtotals[(group.label, h.names[neg_one])] += 1
    forms = sorted(classes)
    counters["classes"] = len(forms)
    return EnumerationResult(n, [classes[f] for f in forms], forms, dict(subtotals), dict(counters),
                             time.perf_counter() - start)


def _involutions(units):
    """Every involution of ``units`` as a dict (fixed points allowed)."""
    if not units:
        yield {0: 0}
        return
    first, rest = units[0], units[1:]
    for sub in _involutions(rest):
        yield {**sub, first: first}
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for sub in _involutions(remaining):
            yield {**sub, first: partner, partner: first}
