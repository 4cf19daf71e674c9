"""Equational laws and identity/zero classification for hypertables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

from .core import HyperTable, WitnessTuple, lift


class Law(str, Enum):
    LEFT_INVERTIVE = "left_invertive"
    MEDIAL = "medial"
    PARAMEDIAL = "paramedial"
    ASSOCIATIVE = "associative"
    COMMUTATIVE = "commutative"
    LEFT_EXCHANGE = "left_exchange"
    SEMIHYPERGROUP_CRITERION = "semihypergroup_criterion"


Sides = Callable[[HyperTable, tuple[int, ...]], tuple[int, int]]


def _left_invertive(t, v):
    x, y, z = v
    c = t.cells
    return lift(t, c[x][y], 1 << z), lift(t, c[z][y], 1 << x)


def _medial(t, v):
    x, y, z, w = v
    c = t.cells
    return lift(t, c[x][y], c[z][w]), lift(t, c[x][z], c[y][w])


def _paramedial(t, v):
    x, y, z, w = v
    c = t.cells
    return lift(t, c[x][y], c[z][w]), lift(t, c[w][y], c[z][x])


def _associative(t, v):
    x, y, z = v
    c = t.cells
    return lift(t, c[x][y], 1 << z), lift(t, 1 << x, c[y][z])


def _commutative(t, v):
    x, y = v
    return t.cells[x][y], t.cells[y][x]


def _left_exchange(t, v):
    x, y, z = v
    c = t.cells
    return lift(t, 1 << x, c[y][z]), lift(t, 1 << y, c[x][z])


def _criterion(t, v):
    a, b, c_ = v
    c = t.cells
    return lift(t, 1 << a, c[b][c_]), lift(t, c[c_][b], 1 << a)


LAWS: dict[Law, tuple[int, Sides, str]] = {
    Law.LEFT_INVERTIVE: (3, _left_invertive, "(x∘y)∘z = (z∘y)∘x"),
    Law.MEDIAL: (4, _medial, "(x∘y)∘(z∘w) = (x∘z)∘(y∘w)"),
    Law.PARAMEDIAL: (4, _paramedial, "(x∘y)∘(z∘w) = (w∘y)∘(z∘x)"),
    Law.ASSOCIATIVE: (3, _associative, "(x∘y)∘z = x∘(y∘z)"),
    Law.COMMUTATIVE: (2, _commutative, "x∘y = y∘x"),
    Law.LEFT_EXCHANGE: (3, _left_exchange, "x∘(y∘z) = y∘(x∘z)"),
    Law.SEMIHYPERGROUP_CRITERION: (3, _criterion, "a∘(b∘c) = (c∘b)∘a"),
}


@dataclass(frozen=True)
class LawVerdict:
    law: Law
    holds: bool
    witness: WitnessTuple | None = None


def evaluate_law(t: HyperTable, law: Law, elements: tuple[int, ...]) -> WitnessTuple:
    """Both sides of ``law`` at one element tuple."""
    arity, sides, _ = LAWS[law]
    if len(elements) != arity:
        raise ValueError(f"{law.value} takes {arity} elements, got {len(elements)}")
    lhs, rhs = sides(t, tuple(elements))
    return WitnessTuple(law.value, tuple(elements), lhs, rhs)


def law_violations(t: HyperTable, law: Law) -> Iterator[WitnessTuple]:
    """Every violating tuple, in lexicographic order."""
    arity, sides, _ = LAWS[law]
    for v in itertools.product(range(t.n), repeat=arity):
        lhs, rhs = sides(t, v)
        if lhs != rhs:
            yield WitnessTuple(law.value, v, lhs, rhs)


def check_law(t: HyperTable, law: Law) -> LawVerdict:
    witness = next(law_violations(t, law), None)
    return LawVerdict(law, witness is None, witness)


def is_la_semihypergroup(t: HyperTable) -> LawVerdict:
    return check_law(t, Law.LEFT_INVERTIVE)


@dataclass(frozen=True)
class ElementIdentity:
    left_identity: bool
    pure_left_identity: bool
    right_identity: bool
    pure_right_identity: bool
    identity: bool
    pure_identity: bool
    zero: bool


FLAG_NAMES = tuple(ElementIdentity.__dataclass_fields__)


@dataclass(frozen=True)
class IdentityProfile:
    elements: tuple[ElementIdentity, ...]

    def having(self, flag: str) -> list[int]:
        return [i for i, e in enumerate(self.elements) if getattr(e, flag)]

    @property
    def left_identities(self) -> list[int]:
        return self.having("left_identity")

    @property
    def pure_left_identities(self) -> list[int]:
        return self.having("pure_left_identity")

    @property
    def pure_right_identities(self) -> list[int]:
        return self.having("pure_right_identity")

    @property
    def zeros(self) -> list[int]:
        return self.having("zero")


def classify_element(t: HyperTable, e: int) -> ElementIdentity:
    c = t.cells
    n = t.n
    row = c[e]
    col = [c[a][e] for a in range(n)]
    left = all(row[a] >> a & 1 for a in range(n))
    pure_left = all(row[a] == 1 << a for a in range(n))
    right = all(col[a] >> a & 1 for a in range(n))
    pure_right = all(col[a] == 1 << a for a in range(n))
    both = all((row[a] & col[a]) >> a & 1 for a in range(n))
    pure_both = all(row[a] & col[a] == 1 << a for a in range(n))
    zero = all(row[a] == 1 << e and col[a] == 1 << e for a in range(n))
    return ElementIdentity(left, pure_left, right, pure_right, both, pure_both, zero)


def classify_identities(t: HyperTable) -> IdentityProfile:
    return IdentityProfile(tuple(classify_element(t, e) for e in range(t.n)))
