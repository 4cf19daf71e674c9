"""Intra-regularity witnesses and invertibility relative to an identity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import HyperTable, lift
from .errors import NotAnIdentity
from .laws import classify_element

Pair = tuple[int, int]


@dataclass(frozen=True)
class IntraRegularityReport:
    witnesses: tuple[Optional[Pair], ...]

    @property
    def is_intra_regular(self) -> bool:
        return all(w is not None for w in self.witnesses)

    @property
    def failing_element(self) -> Optional[int]:
        for a, w in enumerate(self.witnesses):
            if w is None:
                return a
        return None


def intra_regular_witness(t: HyperTable, a: int) -> Optional[Pair]:
    """First (x, y) in lexicographic order with a ∈ (x∘a²)∘y."""
    sq = t.cells[a][a]
    bit = 1 << a
    for x in range(t.n):
        left = lift(t, 1 << x, sq)
        for y in range(t.n):
            if lift(t, left, 1 << y) & bit:
                return (x, y)
    return None


def is_intra_regular_witness(t: HyperTable, a: int, x: int, y: int) -> bool:
    return bool(lift(t, lift(t, 1 << x, t.cells[a][a]), 1 << y) >> a & 1)


def intra_regular(t: HyperTable) -> IntraRegularityReport:
    return IntraRegularityReport(tuple(intra_regular_witness(t, a) for a in range(t.n)))


@dataclass(frozen=True)
class InvertibilityReport:
    """Inverses of each element with respect to the left identity ``identity``.

    ``left_inverse[a]`` is the first u with e ∈ u∘a; the ``pure_`` fields
    require u∘a = {e} instead.  Right-hand fields use a∘u.
    """

    identity: int
    left_inverse: tuple[Optional[int], ...]
    pure_left_inverse: tuple[Optional[int], ...]
    right_inverse: tuple[Optional[int], ...]
    pure_right_inverse: tuple[Optional[int], ...]

    @property
    def left_invertible(self) -> bool:
        return None not in self.left_inverse

    @property
    def right_invertible(self) -> bool:
        return None not in self.right_inverse

    @property
    def invertible(self) -> bool:
        return self.left_invertible and self.right_invertible

    @property
    def pure_left_invertible(self) -> bool:
        return None not in self.pure_left_inverse

    @property
    def pure_right_invertible(self) -> bool:
        return None not in self.pure_right_inverse


def _first(candidates):
    return next(iter(candidates), None)


def invertibility(t: HyperTable, e: int) -> InvertibilityReport:
    if not 0 <= e < t.n or not classify_element(t, e).left_identity:
        raise NotAnIdentity(f"element {e} is not a left identity")
    c = t.cells
    n = t.n
    bit = 1 << e
    return InvertibilityReport(
        identity=e,
        left_inverse=tuple(_first(u for u in range(n) if c[u][a] & bit) for a in range(n)),
        pure_left_inverse=tuple(_first(u for u in range(n) if c[u][a] == bit) for a in range(n)),
        right_inverse=tuple(_first(u for u in range(n) if c[a][u] & bit) for a in range(n)),
        pure_right_inverse=tuple(_first(u for u in range(n) if c[a][u] == bit) for a in range(n)),
    )
