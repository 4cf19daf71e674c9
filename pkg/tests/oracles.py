"""Naive reference implementations over Python sets.

Nothing here touches bit masks or the package's lifting code: tables are
lists of lists of frozensets, and every product is a fresh union.  Tests
compare the optimized paths against these.
"""

from __future__ import annotations

import itertools
import random

from hyperlaw.core import HyperTable, elements_of


def as_sets(t: HyperTable) -> list[list[frozenset]]:
    return [[frozenset(elements_of(c)) for c in row] for row in t.cells]


def to_mask(s) -> int:
    return sum(1 << e for e in s)


def prod(T, A, B) -> frozenset:
    out = set()
    for a in A:
        for b in B:
            out |= T[a][b]
    return frozenset(out)


def law_holds(T, law: str) -> bool:
    n = len(T)
    E = range(n)
    one = lambda x: frozenset({x})  # noqa: E731
    if law == "left_invertive":
        return all(prod(T, T[x][y], one(z)) == prod(T, T[z][y], one(x))
                   for x in E for y in E for z in E)
    if law == "medial":
        return all(prod(T, T[x][y], T[z][w]) == prod(T, T[x][z], T[y][w])
                   for x in E for y in E for z in E for w in E)
    if law == "paramedial":
        return all(prod(T, T[x][y], T[z][w]) == prod(T, T[w][y], T[z][x])
                   for x in E for y in E for z in E for w in E)
    if law == "associative":
        return all(prod(T, T[x][y], one(z)) == prod(T, one(x), T[y][z])
                   for x in E for y in E for z in E)
    if law == "commutative":
        return all(T[x][y] == T[y][x] for x in E for y in E)
    if law == "left_exchange":
        return all(prod(T, one(x), T[y][z]) == prod(T, one(y), T[x][z])
                   for x in E for y in E for z in E)
    if law == "semihypergroup_criterion":
        return all(prod(T, one(a), T[b][c]) == prod(T, T[c][b], one(a))
                   for a in E for b in E for c in E)
    raise KeyError(law)


def identity_flags(T, e: int) -> dict:
    n = len(T)
    E = range(n)
    return {
        "left_identity": all(a in T[e][a] for a in E),
        "pure_left_identity": all(T[e][a] == {a} for a in E),
        "right_identity": all(a in T[a][e] for a in E),
        "pure_right_identity": all(T[a][e] == {a} for a in E),
        "identity": all(a in (T[e][a] & T[a][e]) for a in E),
        "pure_identity": all((T[e][a] & T[a][e]) == {a} for a in E),
        "zero": all(T[x][e] == {e} and T[e][x] == {e} for x in E),
    }


def ideal_holds(T, kind: str, A: frozenset) -> bool:
    n = len(T)
    H = frozenset(range(n))
    sub = all(T[x][y] <= A for x in A for y in A)
    if kind == "sub":
        return sub
    if kind == "left":
        return all(T[h][a] <= A for h in H for a in A)
    if kind == "right":
        return all(T[a][h] <= A for a in A for h in H)
    if kind == "two_sided":
        return ideal_holds(T, "left", A) and ideal_holds(T, "right", A)
    if kind == "generalized_bi":
        return prod(T, prod(T, A, H), A) <= A
    if kind == "bi":
        return sub and prod(T, prod(T, A, H), A) <= A
    if kind == "interior":
        return sub and prod(T, prod(T, H, A), H) <= A
    if kind == "quasi":
        return (prod(T, A, H) & prod(T, H, A)) <= A
    if kind == "one_two":
        return sub and prod(T, prod(T, A, H), prod(T, A, A)) <= A
    if kind == "semiprime":
        return all(a in A for a in H if T[a][a] <= A)
    if kind == "idempotent":
        return prod(T, A, A) == A
    raise KeyError(kind)


def nonempty_subsets(n: int):
    for r in range(1, n + 1):
        for combo in itertools.combinations(range(n), r):
            yield frozenset(combo)


def intra_regular_element(T, a: int) -> bool:
    n = len(T)
    sq = T[a][a]
    return any(a in prod(T, prod(T, {x}, sq), {y}) for x in range(n) for y in range(n))


def intra_regular(T) -> bool:
    return all(intra_regular_element(T, a) for a in range(len(T)))


def all_raw_tables(n: int):
    """Every n×n table of nonempty subsets, in lexicographic mask order."""
    values = range(1, 1 << n)
    for flat in itertools.product(values, repeat=n * n):
        yield flat


def random_flat(n: int, rng: random.Random) -> tuple:
    return tuple(rng.randint(1, (1 << n) - 1) for _ in range(n * n))


def table_from_flat(n: int, flat) -> HyperTable:
    from hyperlaw.core import default_labels
    return HyperTable(n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)), default_labels(n))


def relabel_sets(T, perm) -> list[list[frozenset]]:
    """Isomorphic copy: element i becomes perm[i]."""
    n = len(T)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = frozenset(perm[e] for e in T[i][j])
    return out
