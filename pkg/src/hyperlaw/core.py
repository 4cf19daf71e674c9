"""Finite hypergroupoids stored as Cayley hypertables over bit-mask subsets.

A subset of the carrier {0, ..., n-1} is a plain ``int`` whose bit ``i`` marks
element ``i``.  Every hyperoperation value is such a mask and must be nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateLabel,
    EmptyCell,
    EmptyOperand,
    HyperlawError,
    OrderOutOfBounds,
    OutOfRange,
)

MAX_ORDER = 32
# rows get a full 2**n lifting table up to this order; beyond it compose loops
LIFT_CACHE_MAX_ORDER = 10


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """Element indices present in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class WitnessTuple:
    """Elements at which two sides of a claim differ, with both sides."""

    role: str
    elements: tuple[int, ...]
    lhs: int
    rhs: int


@dataclass(frozen=True)
class HyperTable:
    """An immutable finite hypergroupoid.

    ``cells[a][b]`` is the mask of ``a ∘ b``.  Construction validates the
    table, so every instance is a legal hypergroupoid.
    """

    n: int
    cells: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_ORDER:
            raise OrderOutOfBounds(n)
        if len(self.cells) != n or any(len(row) != n for row in self.cells):
            raise HyperlawError(f"expected {n}x{n} cells")
        if len(self.labels) != n:
            raise HyperlawError(f"expected {n} labels, got {len(self.labels)}")
        seen = set()
        for label in self.labels:
            if label in seen:
                raise DuplicateLabel(label)
            seen.add(label)
        top = full_mask(n)
        for i, row in enumerate(self.cells):
            for j, cell in enumerate(row):
                if cell == 0:
                    raise EmptyCell(i, j)
                if cell & ~top:
                    raise OutOfRange(i, j, (cell & ~top).bit_length() - 1)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def cell(self, a: int, b: int) -> int:
        return self.cells[a][b]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise HyperlawError(f"unknown element label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(x) for x in labels)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in elements_of(mask)]

    def format_mask(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"

    def flat(self) -> tuple[int, ...]:
        """Row-major cell sequence."""
        return tuple(c for row in self.cells for c in row)

    @cached_property
    def _lift(self) -> list[list[int]] | None:
        # _lift[a][B] = union of a∘b over b in B
        if self.n > LIFT_CACHE_MAX_ORDER:
            return None
        size = 1 << self.n
        table = []
        for row in self.cells:
            lifted = [0] * size
            for m in range(1, size):
                low = m & -m
                lifted[m] = lifted[m ^ low] | row[low.bit_length() - 1]
            table.append(lifted)
        return table

    def relabel(self, perm: Sequence[int]) -> "HyperTable":
        """Isomorphic copy where element ``i`` is renamed ``perm[i]``."""
        n = self.n
        image = [0] * (1 << n) if n <= LIFT_CACHE_MAX_ORDER else None

        def move(m: int) -> int:
            if image is not None and image[m]:
                return image[m]
            out = 0
            for e in elements_of(m):
                out |= 1 << perm[e]
            if image is not None:
                image[m] = out
            return out

        cells = [[0] * n for _ in range(n)]
        labels = [""] * n
        for i in range(n):
            labels[perm[i]] = self.labels[i]
            for j in range(n):
                cells[perm[i]][perm[j]] = move(self.cells[i][j])
        return HyperTable(n, tuple(map(tuple, cells)), tuple(labels))

    def __str__(self) -> str:
        rows = ["|".join(",".join(self.names(c)) for c in row) for row in self.cells]
        return "\n".join(rows)


def validate(raw: Sequence[Sequence[object]], labels: Sequence[str] | None = None) -> HyperTable:
    """Build a :class:`HyperTable` from nested rows of cells.

    A cell is either an ``int`` mask or an iterable of element indices.
    """
    n = len(raw)
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfBounds(n)
    rows = []
    for i, row in enumerate(raw):
        if len(row) != n:
            raise HyperlawError(f"row {i} has {len(row)} cells, expected {n}")
        out = []
        for j, cell in enumerate(row):
            if isinstance(cell, int):
                mask = cell
                if mask < 0:
                    raise HyperlawError(f"cell ({i},{j}) is a negative mask")
            else:
                mask = 0
                for e in cell:
                    if not isinstance(e, int) or not 0 <= e < n:
                        raise OutOfRange(i, j, e)
                    mask |= 1 << e
            out.append(mask)
        rows.append(tuple(out))
    if labels is None:
        labels = default_labels(n)
    return HyperTable(n, tuple(rows), tuple(labels))


def _check_operand(t: HyperTable, m: int) -> None:
    if m == 0:
        raise EmptyOperand("set-lifted composition needs nonempty operands")
    if m & ~t.full:
        raise OutOfRange(-1, -1, m.bit_length() - 1)


def compose(t: HyperTable, a: int, b: int) -> int:
    """Set-lifted composition: union of ``x∘y`` for x in ``a`` and y in ``b``."""
    _check_operand(t, a)
    _check_operand(t, b)
    return lift(t, a, b)


def lift(t: HyperTable, a: int, b: int) -> int:
    """Unchecked :func:`compose` for hot loops; operands must be valid and nonempty."""
    lifted = t._lift
    out = 0
    if lifted is not None:
        while a:
            low = a & -a
            out |= lifted[low.bit_length() - 1][b]
            a ^= low
        return out
    cells = t.cells
    for x in elements_of(a):
        row = cells[x]
        for y in elements_of(b):
            out |= row[y]
    return out


def square(t: HyperTable, a: int) -> int:
    """``a∘a`` as a mask."""
    return t.cells[a][a]


def singleton(a: int) -> int:
    return 1 << a
