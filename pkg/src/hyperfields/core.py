"""Finite hyperfield carriers, hyperaddition and the axiom verifier.

A carrier of order ``n`` is always ``0 .. n-1`` with ``0`` the additive zero
and ``1`` the multiplicative unit.  Hyperaddition cells are stored as
bitmasks: bit ``i`` set means element ``i`` belongs to the cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels


class StructureError(ValueError):
    """Raised for tables that cannot describe a structure of the given order."""


class NegationError(ValueError):
    """Raised when an element has no hyperinverse or more than one."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def default_names(n: int) -> tuple[str, ...]:
    return ("0", "1") + tuple(f"e{i}" for i in range(2, n))


@dataclass(frozen=True)
class FiniteMonoid:
    """Multiplication table of ``G u {0}``."""

    mul: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.mul)
        if n < 2:
            raise StructureError("order must be at least 2")
        if any(len(row) != n for row in self.mul):
            raise StructureError("multiplication table is not square")
        if any(not 0 <= v < n for row in self.mul for v in row):
            raise StructureError("multiplication entry out of range")

    @property
    def order(self) -> int:
        return len(self.mul)

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        """Multiplicative inverses; ``inverse[0]`` is 0 and -1 marks a missing one."""
        n = self.order
        inv = [0] * n
        for x in range(1, n):
            found = [y for y in range(1, n) if self.mul[x][y] == 1]
            inv[x] = found[0] if len(found) == 1 else -1
        return tuple(inv)

    def failures(self) -> list[Failure]:
        """Every violated monoid law, as ``unit_group`` failures."""
        n = self.order
        mul = self.mul
        out = []

        def fail(witness, detail):
            out.append(Failure("unit_group", witness, None, None, detail))

        for x in range(n):
            if mul[0][x] != 0 or mul[x][0] != 0:
                fail((0, x), "zero is not absorbing")
            if mul[1][x] != x or mul[x][1] != x:
                fail((1, x), "1 is not a unit")
            for y in range(x + 1, n):
                if mul[x][y] != mul[y][x]:
                    fail((x, y), "multiplication not commutative")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                        fail((x, y, z), "multiplication not associative")
        for x in range(1, n):
            if self.inverse[x] < 0:
                fail((x,), "nonzero element without unique inverse")
            for y in range(1, n):
                if mul[x][y] == 0:
                    fail((x, y), "product of nonzero elements is zero")
        return out


@dataclass(frozen=True)
class Failure:
    axiom: str
    witness: tuple
    left: frozenset | None
    right: frozenset | None
    detail: str = ""

    def describe(self, names: Sequence[str]) -> str:
        def fmt_set(s):
            return "{" + ",".join(names[i] for i in sorted(s)) + "}"

        w = "(" + ", ".join(names[i] if 0 <= i < len(names) else str(i) for i in self.witness) + ")"
        text = f"{self.axiom}: witness {w}"
        if self.left is not None:
            text += f" {fmt_set(self.left)} != {fmt_set(self.right)}"
        if self.detail:
            text += f" [{self.detail}]"
        return text


AXIOMS = (
    "nonempty_cells",
    "unit_group",
    "zero_identity",
    "commutativity",
    "associativity",
    "unique_inverse",
    "reversibility",
    "distributivity",
)


@dataclass
class AxiomReport:
    """Outcome of :func:`verify`: failures grouped per axiom."""

    failures: dict[str, list[Failure]] = field(default_factory=lambda: {a: [] for a in AXIOMS})
    skipped: set[str] = field(default_factory=set)

    @property
    def ok(self) -> bool:
        return not self.skipped and not any(self.failures.values())

    def passed(self, axiom: str) -> bool:
        return axiom not in self.skipped and not self.failures[axiom]

    def status(self) -> dict[str, str]:
        out = {}
        for a in AXIOMS:
            if a in self.skipped:
                out[a] = "skipped"
            else:
                out[a] = "fail" if self.failures[a] else "pass"
        return out

    def all_failures(self) -> list[Failure]:
        return [f for a in AXIOMS for f in self.failures[a]]


@dataclass(frozen=True)
class HyperStructure:
    """A candidate hyperfield: monoid, hyperaddition table and designated -1."""

    monoid: FiniteMonoid
    add: tuple[tuple[int, ...], ...]
    neg_one: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.monoid.order
        if len(self.add) != n or any(len(row) != n for row in self.add):
            raise StructureError(f"addition table must be {n}x{n}")
        if any(c < 0 or c >> n for row in self.add for c in row):
            raise StructureError("addition cell mentions an element outside the carrier")
        if not 0 <= self.neg_one < n:
            raise StructureError("neg_one out of range")
        if not self.names:
            object.__setattr__(self, "names", default_names(n))
        elif len(self.names) != n or len(set(self.names)) != n:
            raise StructureError("need one distinct name per element")

    @classmethod
    def from_tables(cls, mul, add, neg_one, names=()) -> HyperStructure:
        """Build from nested lists; ``add`` cells may be masks or iterables."""
        cells = tuple(tuple(c if isinstance(c, int) else to_mask(c) for c in row) for row in add)
        return cls(FiniteMonoid(tuple(tuple(r) for r in mul)), cells, neg_one, tuple(names))

    @property
    def order(self) -> int:
        return self.monoid.order

    @property
    def mul(self) -> tuple[tuple[int, ...], ...]:
        return self.monoid.mul

    @cached_property
    def flat_add(self) -> tuple[int, ...]:
        return tuple(c for row in self.add for c in row)

    @cached_property
    def flat_mul(self) -> tuple[int, ...]:
        return tuple(c for row in self.mul for c in row)

    def _check(self, *xs):
        for x in xs:
            if not 0 <= x < self.order:
                raise IndexError(f"element {x} outside carrier of order {self.order}")

    def hyperadd(self, x: int, y: int) -> frozenset[int]:
        self._check(x, y)
        return frozenset(members(self.add[x][y]))

    def set_mask(self, a: int, b: int) -> int:
        """Mask-level ``A + B``."""
        if not a or not b:
            raise ValueError("set hyperaddition needs non-empty sets")
        return kernels.set_add(self.flat_add, self.order, a, b)

    def set_hyperadd(self, a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
        a, b = list(a), list(b)
        self._check(*a, *b)
        return frozenset(members(self.set_mask(to_mask(a), to_mask(b))))

    def hypersum(self, xs: Sequence[int]) -> frozenset[int]:
        """``x1 + (x2 + ... + xm)``; a single element gives its singleton."""
        if not xs:
            raise ValueError("hypersum of an empty list")
        self._check(*xs)
        acc = 1 << xs[-1]
        for x in reversed(xs[:-1]):
            acc = self.set_mask(1 << x, acc)
        return frozenset(members(acc))

    def neg(self, x: int) -> int:
        self._check(x)
        found = [y for y in range(self.order) if self.add[x][y] & 1]
        if len(found) != 1:
            raise NegationError(
                f"{self.names[x]} has {len(found)} hyperinverses", (x, tuple(found))
            )
        return found[0]

    def scale(self, a: int, mask: int) -> int:
        """Elementwise product ``a * S`` of a mask."""
        out = 0
        row = self.mul[a]
        for u in members(mask):
            out |= 1 << row[u]
        return out

    def row_family(self) -> tuple[int, ...]:
        """Masks ``1 + g`` for ``g = 1 .. n-1``."""
        return tuple(self.add[1][g] for g in range(1, self.order))

    def fmt(self, x: int | Iterable[int]) -> str:
        if isinstance(x, int):
            return self.names[x]
        return "{" + ",".join(self.names[i] for i in sorted(x)) + "}"

    def table_text(self) -> str:
        """Human-readable hyperaddition table."""
        n = self.order
        cells = [[self.fmt(members(self.add[x][y])) for y in range(n)] for x in range(n)]
        head = ["+"] + list(self.names)
        rows = [head] + [[self.names[x]] + cells[x] for x in range(n)]
        widths = [max(len(r[i]) for r in rows) for i in range(n + 1)]
        return "\n".join(" | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def verify(h: HyperStructure) -> AxiomReport:
    """Check every hyperfield axiom over all pairs and triples.

    Every failure is recorded with a witness; nothing stops at the first
    problem.  Empty cells are structural and suppress the axiom checks.
    """
    report = AxiomReport()
    fails = report.failures
    n = h.order
    add = h.add
    mul = h.mul

    for x in range(n):
        for y in range(n):
            if add[x][y] == 0:
                fails["nonempty_cells"].append(Failure("nonempty_cells", (x, y), None, None, "empty cell"))
    fails["unit_group"].extend(h.monoid.failures())
    if fails["nonempty_cells"]:
        report.skipped.update(AXIOMS[2:])
        return report

    def sets(a, b):
        return frozenset(members(a)), frozenset(members(b))

    for x in range(n):
        if add[0][x] != 1 << x:
            fails["zero_identity"].append(Failure("zero_identity", (0, x), *sets(add[0][x], 1 << x)))
        for y in range(x + 1, n):
            if add[x][y] != add[y][x]:
                fails["commutativity"].append(Failure("commutativity", (x, y), *sets(add[x][y], add[y][x])))

    for x, y, z, lhs, rhs in kernels.assoc_failures(h.flat_add, n):
        fails["associativity"].append(Failure("associativity", (x, y, z), *sets(lhs, rhs), "(x+y)+z vs x+(y+z)"))

    neg = [None] * n
    for x in range(n):
        found = [y for y in range(n) if add[x][y] & 1]
        if len(found) != 1:
            fails["unique_inverse"].append(
                Failure("unique_inverse", (x, *found), None, None, f"{len(found)} hyperinverses")
            )
            continue
        neg[x] = found[0]
        expect = mul[h.neg_one][x]
        if found[0] != expect:
            fails["unique_inverse"].append(
                Failure("unique_inverse", (x, found[0], expect), None, None, "-x differs from (-1)x")
            )
    if not add[1][h.neg_one] & 1:
        fails["unique_inverse"].append(
            Failure("unique_inverse", (1, h.neg_one), None, None, "0 not in 1 + neg_one")
        )

    for y in range(n):
        ny = neg[y] if neg[y] is not None else mul[h.neg_one][y]
        for z in range(n):
            for x in range(n):
                lhs = bool(add[y][z] >> x & 1)
                rhs = bool(add[x][ny] >> z & 1)
                if lhs != rhs:
                    fails["reversibility"].append(
                        Failure("reversibility", (x, y, z), None, None,
                                "x in y+z" if lhs else "z in x+(-y)")
                    )

    for a in range(n):
        for x in range(n):
            for y in range(n):
                left = h.scale(a, add[x][y])
                right = add[mul[a][x]][mul[a][y]]
                if left != right:
                    fails["distributivity"].append(
                        Failure("distributivity", (a, x, y), *sets(left, right), "a(x+y) vs ax+ay")
                    )
                # right-handed law, (x+y)a = xa + ya
                right_r = add[mul[x][a]][mul[y][a]]
                left_r = 0
                for u in members(add[x][y]):
                    left_r |= 1 << mul[u][a]
                if left_r != right_r:
                    fails["distributivity"].append(
                        Failure("distributivity", (x, y, a), *sets(left_r, right_r), "(x+y)a vs xa+ya")
                    )
    return report


def is_hyperfield(h: HyperStructure) -> bool:
    """Fast boolean version of ``verify(h).ok`` (stops at the first failure)."""
    if h.monoid.failures():
        return False
    return kernels.is_hyperfield(h.flat_add, h.flat_mul, h.order, h.neg_one)


@dataclass(frozen=True)
class ParityReport:
    ok: bool
    applies: bool
    witness: tuple = ()
    detail: str = ""


def parity_check(h: HyperStructure) -> ParityReport:
    """When -1 != 1: odd order, and every ``a + (-a)`` has odd size and is closed under negation."""
    if h.neg(1) == 1:
        return ParityReport(True, False)
    n = h.order
    if n % 2 == 0:
        return ParityReport(False, True, (n,), "even order with -1 != 1")
    for a in range(n):
        cell = h.add[a][h.neg(a)]
        size = bin(cell).count("1")
        if size % 2 == 0:
            return ParityReport(False, True, (a,), f"|a + (-a)| = {size}")
        for x in members(cell):
            if not cell >> h.neg(x) & 1:
                return ParityReport(False, True, (a, x), "a + (-a) not closed under negation")
    return ParityReport(True, True)
