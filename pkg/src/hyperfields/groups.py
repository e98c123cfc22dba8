"""Finite abelian groups as products of cyclic factors, plus their maps.

Group elements are coordinate tuples ``(k1, ..., kr)`` with ``0 <= ki < fi``.
On a carrier ``G u {0}`` the zero sits at index 0 and the element with
mixed-radix code ``k`` (first factor least significant) at index ``k + 1``,
so the identity is index 1.  For ``C4`` this gives ``0, 1, a, a^2, a^3`` and
for ``C2 x C2`` it gives ``0, 1, a, b, ab``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterator, Sequence

LETTERS = "abcdefgh"


def factorize(m: int) -> dict[int, int]:
    out = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def partitions(k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``k`` with non-increasing parts, largest first."""
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class AbelianGroup:
    """``C_{f1} x ... x C_{fr}``; the trivial group has ``factors == ()``."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if any(f < 2 for f in self.factors):
            raise ValueError("cyclic factors must have order >= 2")

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def label(self) -> str:
        if not self.factors:
            return "C1"
        if len(self.factors) == 1:
            return f"C{self.factors[0]}"
        return "C" + ",".join(map(str, self.factors))

    @cached_property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        ranges = [range(f) for f in reversed(self.factors)]
        return tuple(tuple(reversed(c)) for c in product(*ranges))

    def index(self, coords: Sequence[int]) -> int:
        k = 0
        for c, f in zip(reversed(coords), reversed(self.factors)):
            k = k * f + c % f
        return k + 1

    def coords(self, index: int) -> tuple[int, ...]:
        return self.elements[index - 1]

    @cached_property
    def monoid_table(self) -> tuple[tuple[int, ...], ...]:
        """Multiplication table of the carrier ``G u {0}``."""
        n = self.order + 1
        rows = [tuple([0] * n)]
        for x in range(1, n):
            cx = self.coords(x)
            row = [0]
            for y in range(1, n):
                cy = self.coords(y)
                row.append(self.index([a + b for a, b in zip(cx, cy)]))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Carrier indices of the unit coordinate vectors."""
        r = len(self.factors)
        return tuple(self.index([int(i == j) for j in range(r)]) for i in range(r))

    @cached_property
    def names(self) -> tuple[str, ...]:
        out = ["0"]
        for c in self.elements:
            parts = []
            for letter, k in zip(LETTERS, c):
                if k == 1:
                    parts.append(letter)
                elif k > 1:
                    parts.append(f"{letter}^{k}")
            out.append("".join(parts) or "1")
        return tuple(out)


def abelian_groups(m: int) -> list[AbelianGroup]:
    """One group per isomorphism class of abelian groups of order ``m``.

    Built from the prime factorisation: each prime power ``p^k`` splits along
    the partitions of ``k``, and the classes are the products of those choices.
    """
    if m < 1:
        raise ValueError("group order must be positive")
    per_prime = []
    for p, k in sorted(factorize(m).items()):
        per_prime.append([tuple(p ** e for e in part) for part in partitions(k)])
    return [AbelianGroup(tuple(f for part in choice for f in part)) for choice in product(*per_prime)]


def element_order(mul: Sequence[Sequence[int]], x: int) -> int:
    k, y = 1, x
    while y != 1:
        y = mul[y][x]
        k += 1
    return k


def power(mul: Sequence[Sequence[int]], x: int, k: int) -> int:
    y = 1
    for _ in range(k):
        y = mul[y][x]
    return y


def homomorphisms(group: AbelianGroup, mul: Sequence[Sequence[int]]) -> Iterator[tuple[int, ...]]:
    """All homomorphisms from ``group`` into the units of monoid table ``mul``.

    Maps are carrier tuples (``0 -> 0``).  Candidates come from generator
    images of compatible order and are each checked on every pair.
    """
    n = len(mul)
    units = range(1, n)
    options = [[h for h in units if power(mul, h, f) == 1] for f in group.factors]
    src = group.monoid_table
    for images in product(*options):
        f = [0] * (group.order + 1)
        for x in range(1, group.order + 1):
            y = 1
            for h, k in zip(images, group.coords(x)):
                y = mul[y][power(mul, h, k)]
            f[x] = y
        if all(f[src[x][y]] == mul[f[x]][f[y]] for x in units_of(group) for y in units_of(group)):
            yield tuple(f)


def units_of(group: AbelianGroup) -> range:
    return range(1, group.order + 1)


def isomorphisms(group: AbelianGroup, mul: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Bijective homomorphisms from ``group`` onto the units of ``mul``."""
    if len(mul) != group.order + 1:
        return []
    return [f for f in homomorphisms(group, mul) if len(set(f)) == len(f)]


def automorphisms(group: AbelianGroup) -> list[tuple[int, ...]]:
    """Every automorphism, as a permutation of the carrier fixing 0 and 1."""
    return isomorphisms(group, group.monoid_table)


def identify(mul: Sequence[Sequence[int]]) -> tuple[AbelianGroup, tuple[int, ...]]:
    """Standard group isomorphic to the units of ``mul`` and one isomorphism onto them."""
    for g in abelian_groups(len(mul) - 1):
        for f in homomorphisms(g, mul):
            if len(set(f)) == len(f):
                return g, f
    raise ValueError("nonzero elements do not form an abelian group")


def parse_group(text: str) -> AbelianGroup:
    """``cyclic:4`` / ``product:2,2`` / ``C4`` / ``C2,2`` -> group."""
    text = text.strip()
    if ":" in text:
        kind, _, rest = text.partition(":")
        nums = tuple(int(t) for t in rest.split(",") if t)
        if kind == "cyclic" and len(nums) != 1:
            raise ValueError(f"bad group description {text!r}")
        if kind not in ("cyclic", "product"):
            raise ValueError(f"bad group description {text!r}")
    elif text.startswith("C"):
        nums = tuple(int(t) for t in text[1:].split(","))
    else:
        raise ValueError(f"bad group description {text!r}")
    return AbelianGroup(tuple(f for f in nums if f != 1))
