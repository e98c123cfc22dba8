"""Named hyperfield families and small finite fields."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .core import HyperStructure
from .groups import AbelianGroup

# Pinned irreducible polynomials, coefficients lowest degree first.
IRREDUCIBLE = {
    (2, 1): (0, 1),
    (3, 1): (0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
}


@dataclass(frozen=True)
class FiniteFieldSpec:
    """GF(p^k) modulo a fixed monic irreducible polynomial.

    Field elements are integer codes ``sum(c_i * p**i)`` of their
    coefficient vectors.
    """

    p: int
    k: int
    irreducible: tuple[int, ...]

    def __post_init__(self):
        if self.q not in (2, 3, 4, 5, 7, 8, 9):
            raise ValueError(f"unsupported field order {self.q}")
        if len(self.irreducible) != self.k + 1 or self.irreducible[-1] != 1:
            raise ValueError("polynomial must be monic of degree k")
        if self.k > 1 and not _irreducible(self.p, self.irreducible):
            raise ValueError(f"polynomial {self.irreducible} is reducible over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p ** self.k

    def _vec(self, code):
        return [(code // self.p ** i) % self.p for i in range(self.k)]

    def _code(self, vec):
        return sum(c * self.p ** i for i, c in enumerate(vec))

    def add(self, x: int, y: int) -> int:
        return self._code([(a + b) % self.p for a, b in zip(self._vec(x), self._vec(y))])

    def mul(self, x: int, y: int) -> int:
        if self.k == 1:
            return x * y % self.p
        a, b = self._vec(x), self._vec(y)
        prod_ = [0] * (2 * self.k - 1)
        for i, u in enumerate(a):
            for j, v in enumerate(b):
                prod_[i + j] = (prod_[i + j] + u * v) % self.p
        # reduce by the monic modulus
        for d in range(len(prod_) - 1, self.k - 1, -1):
            c = prod_[d]
            if c:
                for i, m in enumerate(self.irreducible):
                    prod_[d - self.k + i] = (prod_[d - self.k + i] - c * m) % self.p
        return self._code(prod_[: self.k])

    def primitive(self) -> int:
        """Smallest code whose powers cover every nonzero element."""
        for g in range(1, self.q):
            seen, x = set(), 1
            for _ in range(self.q - 1):
                x = self.mul(x, g)
                seen.add(x)
            if len(seen) == self.q - 1:
                return g
        raise ValueError("no primitive element")

    def powers(self) -> list[int]:
        """Codes of ``a^0, a^1, ...`` for the primitive element ``a``."""
        g = self.primitive()
        out, x = [], 1
        for _ in range(self.q - 1):
            out.append(x)
            x = self.mul(x, g)
        return out


def _irreducible(p, poly):
    k = len(poly) - 1
    # degree <= 3 over GF(p): irreducible iff no root
    if k <= 3:
        return all(sum(c * x ** i for i, c in enumerate(poly)) % p for x in range(p))
    raise ValueError("irreducibility check only implemented for degree <= 3")


def field_spec(q: int) -> FiniteFieldSpec:
    for (p, k), poly in IRREDUCIBLE.items():
        if p ** k == q:
            return FiniteFieldSpec(p, k, poly)
    raise ValueError(f"unsupported field order {q}")


def krasner() -> HyperStructure:
    mul = [[0, 0], [0, 1]]
    add = [[{0}, {1}], [{1}, {0, 1}]]
    return HyperStructure.from_tables(mul, add, 1, ("0", "1"))


def sign_hyperfield() -> HyperStructure:
    g = AbelianGroup((2,))
    add = [[{0}, {1}, {2}], [{1}, {1}, {0, 1, 2}], [{2}, {0, 1, 2}, {2}]]
    return HyperStructure.from_tables(g.monoid_table, add, 2, ("0", "1", "-1"))


def weak_hyperfield(group: AbelianGroup, e: int) -> HyperStructure:
    """``W(G, e)``: ``x + ex`` is everything, any other sum of units is ``G``."""
    mul = group.monoid_table
    n = len(mul)
    if not 1 <= e < n or mul[e][e] != 1:
        raise ValueError("e must be a unit with e^2 = 1")
    units = set(range(1, n))
    add = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x == 0 or y == 0:
                add[x][y] = {x + y}
            elif y == mul[e][x]:
                add[x][y] = units | {0}
            else:
                add[x][y] = units
    return HyperStructure.from_tables(mul, add, e, group.names)


def _cyclic_structure(q_units, add_values, neg_one):
    group = AbelianGroup((q_units,) if q_units > 1 else ())
    return HyperStructure.from_tables(group.monoid_table, add_values, neg_one, group.names)


def field_hyperfield(spec: FiniteFieldSpec | int) -> HyperStructure:
    """A finite field with singleton sums, labelled by powers of its smallest primitive element."""
    if isinstance(spec, int):
        spec = field_spec(spec)
    q = spec.q
    powers = spec.powers()
    index = {0: 0}
    for i, c in enumerate(powers):
        index[c] = i + 1
    codes = [0] + powers
    add = [[{index[spec.add(codes[x], codes[y])]} for y in range(q)] for x in range(q)]
    minus_one = spec._code([(-c) % spec.p for c in spec._vec(1)])
    return _cyclic_structure(q - 1, add, index[minus_one])


def quotient_hyperfield(spec: FiniteFieldSpec | int, subgroup: Iterable[int]) -> HyperStructure:
    """Cosets of a multiplicative subgroup, with ``X + Y = {class(z) : z in xH + yH}``.

    ``subgroup`` holds field element codes.  Sums are computed by brute force
    over all coset members.
    """
    if isinstance(spec, int):
        spec = field_spec(spec)
    sub = frozenset(subgroup)
    q = spec.q
    if not sub or 1 not in sub or 0 in sub or any(not 0 < h < q for h in sub):
        raise ValueError("not a subgroup of the unit group")
    if any(spec.mul(x, y) not in sub for x in sub for y in sub):
        raise ValueError("not a subgroup of the unit group")
    powers = spec.powers()
    m = (q - 1) // len(sub)
    # coset of a^i has index 1 + (i mod m); a^m generates sub
    cls = {0: 0}
    for i, c in enumerate(powers):
        cls[c] = 1 + i % m
    members = [[0]] + [[c for c in powers if cls[c] == j] for j in range(1, m + 1)]
    add = []
    for x in range(m + 1):
        row = []
        for y in range(m + 1):
            row.append({cls[spec.add(u, v)] for u, v in product(members[x], members[y])})
        add.append(row)
    minus_one = spec._code([(-c) % spec.p for c in spec._vec(1)])
    return _cyclic_structure(m, add, cls[minus_one])


def named(name: str) -> HyperStructure:
    """Catalog table by name, e.g. ``named("K")`` or ``named("F2^u3")``."""
    from .catalog import load_catalog

    return load_catalog().structure(name)
