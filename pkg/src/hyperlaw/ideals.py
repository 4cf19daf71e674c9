"""Hyperideal predicates, exhaustive enumeration, and principal sets."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import HyperTable, WitnessTuple, compose, elements_of, lift
from .errors import EmptyOperand, OrderTooLargeForExhaustive

EXHAUSTIVE_MAX_ORDER = 22


class IdealKind(str, Enum):
    SUB = "sub"
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two_sided"
    BI = "bi"
    GENERALIZED_BI = "generalized_bi"
    INTERIOR = "interior"
    QUASI = "quasi"
    ONE_TWO = "one_two"
    SEMIPRIME = "semiprime"
    IDEMPOTENT = "idempotent"


@dataclass(frozen=True)
class IdealVerdict:
    kind: IdealKind
    subset: int
    holds: bool
    witness: WitnessTuple | None = None


def _outside(role: str, elements: tuple[int, ...], product: int, a: int) -> WitnessTuple:
    # lhs is a piece of the required product, rhs its part inside A
    return WitnessTuple(role, elements, product, product & a)


def _sub_witness(t, a):
    c = t.cells
    for x in elements_of(a):
        for y in elements_of(a):
            if c[x][y] & ~a:
                return _outside("sub", (x, y), c[x][y], a)
    return None


def _left_witness(t, a):
    c = t.cells
    for h in range(t.n):
        for x in elements_of(a):
            if c[h][x] & ~a:
                return _outside("left", (h, x), c[h][x], a)
    return None


def _right_witness(t, a):
    c = t.cells
    for x in elements_of(a):
        for h in range(t.n):
            if c[x][h] & ~a:
                return _outside("right", (x, h), c[x][h], a)
    return None


def _sandwich_witness(t, a, role):
    # (x∘h)∘y ⊆ A for x, y in A and any h
    c = t.cells
    for x in elements_of(a):
        for h in range(t.n):
            for y in elements_of(a):
                piece = lift(t, c[x][h], 1 << y)
                if piece & ~a:
                    return _outside(role, (x, h, y), piece, a)
    return None


def _interior_witness(t, a):
    # (h∘x)∘k ⊆ A for x in A and any h, k
    c = t.cells
    for h in range(t.n):
        for x in elements_of(a):
            for k in range(t.n):
                piece = lift(t, c[h][x], 1 << k)
                if piece & ~a:
                    return _outside("interior", (h, x, k), piece, a)
    return None


def _one_two_witness(t, a):
    c = t.cells
    for x in elements_of(a):
        for h in range(t.n):
            for y in elements_of(a):
                for z in elements_of(a):
                    piece = lift(t, c[x][h], c[y][z])
                    if piece & ~a:
                        return _outside("one_two", (x, h, y, z), piece, a)
    return None


def _holds_fast(t: HyperTable, kind: IdealKind, a: int) -> bool:
    h = t.full
    if kind is IdealKind.SUB:
        return not lift(t, a, a) & ~a
    if kind is IdealKind.LEFT:
        return not lift(t, h, a) & ~a
    if kind is IdealKind.RIGHT:
        return not lift(t, a, h) & ~a
    if kind is IdealKind.TWO_SIDED:
        return not (lift(t, h, a) | lift(t, a, h)) & ~a
    if kind is IdealKind.GENERALIZED_BI:
        return not lift(t, lift(t, a, h), a) & ~a
    if kind is IdealKind.BI:
        return _holds_fast(t, IdealKind.SUB, a) and not lift(t, lift(t, a, h), a) & ~a
    if kind is IdealKind.INTERIOR:
        return _holds_fast(t, IdealKind.SUB, a) and not lift(t, lift(t, h, a), h) & ~a
    if kind is IdealKind.ONE_TWO:
        aa = lift(t, a, a)
        return not aa & ~a and not lift(t, lift(t, a, h), aa) & ~a
    if kind is IdealKind.QUASI:
        return not lift(t, a, h) & lift(t, h, a) & ~a
    if kind is IdealKind.SEMIPRIME:
        c = t.cells
        return all(a >> x & 1 or c[x][x] & ~a for x in range(t.n))
    if kind is IdealKind.IDEMPOTENT:
        return lift(t, a, a) == a
    raise ValueError(kind)


def _witness(t: HyperTable, kind: IdealKind, a: int) -> WitnessTuple:
    h = t.full
    if kind is IdealKind.SUB:
        return _sub_witness(t, a)
    if kind is IdealKind.LEFT:
        return _left_witness(t, a)
    if kind is IdealKind.RIGHT:
        return _right_witness(t, a)
    if kind is IdealKind.TWO_SIDED:
        return _left_witness(t, a) or _right_witness(t, a)
    if kind is IdealKind.GENERALIZED_BI:
        return _sandwich_witness(t, a, "generalized_bi")
    if kind is IdealKind.BI:
        return _sub_witness(t, a) or _sandwich_witness(t, a, "bi")
    if kind is IdealKind.INTERIOR:
        return _sub_witness(t, a) or _interior_witness(t, a)
    if kind is IdealKind.ONE_TWO:
        return _sub_witness(t, a) or _one_two_witness(t, a)
    if kind is IdealKind.QUASI:
        meet = lift(t, a, h) & lift(t, h, a)
        q = (meet & ~a).bit_length() - 1
        return WitnessTuple("quasi", (q,), meet, meet & a)
    if kind is IdealKind.SEMIPRIME:
        c = t.cells
        for x in range(t.n):
            if not a >> x & 1 and not c[x][x] & ~a:
                return WitnessTuple("semiprime", (x,), 1 << x, 0)
    if kind is IdealKind.IDEMPOTENT:
        return WitnessTuple("idempotent", (), lift(t, a, a), a)
    raise AssertionError(f"no witness for failing {kind}")


def is_ideal(t: HyperTable, kind: IdealKind, a: int) -> IdealVerdict:
    """Decide whether the nonempty subset ``a`` is a hyperideal of ``kind``.

    A failing verdict carries a witness whose ``lhs`` is the offending
    product (or intersection) and whose ``rhs`` is its part inside ``a``;
    for ``idempotent`` the two sides are ``A∘A`` and ``A``.
    """
    kind = IdealKind(kind)
    if a == 0:
        raise EmptyOperand("hyperideal candidates must be nonempty")
    if a & ~t.full:
        compose(t, a, a)  # raises OutOfRange
    if _holds_fast(t, kind, a):
        return IdealVerdict(kind, a, True)
    return IdealVerdict(kind, a, False, _witness(t, kind, a))


def enumerate_ideals(t: HyperTable, kind: IdealKind) -> list[int]:
    """All nonempty subsets of ``kind``, ascending by mask."""
    kind = IdealKind(kind)
    if t.n > EXHAUSTIVE_MAX_ORDER:
        raise OrderTooLargeForExhaustive(
            f"subset scan needs order <= {EXHAUSTIVE_MAX_ORDER}, got {t.n}"
        )
    return [a for a in range(1, t.full + 1) if _holds_fast(t, kind, a)]


def inclusion_minimal(family: list[int]) -> list[int]:
    return [a for a in family if not any(b != a and b & ~a == 0 for b in family)]


def minimal_ideals(t: HyperTable, kind: IdealKind) -> list[int]:
    return inclusion_minimal(enumerate_ideals(t, kind))


@dataclass(frozen=True)
class PrincipalSets:
    Ha: int
    aH: int
    a2H: int
    Ha2: int


def principal_sets(t: HyperTable, a: int) -> PrincipalSets:
    h = t.full
    one = 1 << a
    sq = t.cells[a][a]
    return PrincipalSets(
        Ha=compose(t, h, one),
        aH=compose(t, one, h),
        a2H=compose(t, sq, h),
        Ha2=compose(t, h, sq),
    )
