"""Generation of small LA-semihypergroups, canonical forms, and modular families.

The exhaustive search fills the table row-major, trying cell values in
ascending mask order, so tables come out lexicographically sorted by their
flat cell sequence.  After each assignment only the left-invertive triples
that read the new cell are re-examined; a triple is decided as soon as every
cell it touches is known.  Parallel runs split the work by first row and
merge in prefix order, so the output never depends on the worker count.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .core import MAX_ORDER, HyperTable, default_labels, elements_of, full_mask, popcount
from .errors import (
    HyperlawError,
    InfeasibleQuery,
    OrderTooLargeForCanonical,
    StepDoesNotDivideModulus,
)
from .laws import FLAG_NAMES, Law, check_law, classify_identities
from .regularity import intra_regular

EXHAUSTIVE_MAX_ORDER = 3
PRUNED_MAX_ORDER = 4
CANONICAL_MAX_ORDER = 8

STRUCTURE_FLAGS = ("intra_regular",) + FLAG_NAMES


def flag_holds(t: HyperTable, flag: str) -> bool:
    """``intra_regular``, or "some element is a <flag>" for identity flags; ``not_`` negates."""
    negate = flag.startswith("not_")
    name = flag[4:] if negate else flag
    if name == "intra_regular":
        value = intra_regular(t).is_intra_regular
    elif name in FLAG_NAMES:
        value = bool(classify_identities(t).having(name))
    else:
        raise HyperlawError(f"unknown flag {flag!r}")
    return value != negate


def _check_flag_name(flag: str) -> None:
    name = flag[4:] if flag.startswith("not_") else flag
    if name not in STRUCTURE_FLAGS:
        choices = ", ".join(STRUCTURE_FLAGS)
        raise HyperlawError(f"unknown flag {flag!r}; choose from {choices} (optionally not_)")


@dataclass(frozen=True)
class EnumerationQuery:
    order: int
    laws: frozenset[Law] = frozenset({Law.LEFT_INVERTIVE})
    flags: tuple[str, ...] = ()
    mode: str = "exhaustive"
    count: int = 1000
    seed: int = 0
    canonical_only: bool = False
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "laws", frozenset(Law(x) for x in self.laws))
        for flag in self.flags:
            _check_flag_name(flag)

    def check_feasible(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise InfeasibleQuery(f"order must be in 1..{MAX_ORDER}, got {n}")
        if self.mode == "exhaustive":
            if n > PRUNED_MAX_ORDER:
                raise InfeasibleQuery(f"exhaustive mode needs order <= {PRUNED_MAX_ORDER}, got {n}")
            if n == PRUNED_MAX_ORDER and Law.LEFT_INVERTIVE not in self.laws:
                raise InfeasibleQuery("exhaustive order 4 requires the left_invertive law for pruning")
        elif self.mode == "sample":
            if self.count < 0:
                raise InfeasibleQuery("sample count must be nonnegative")
        else:
            raise InfeasibleQuery(f"unknown mode {self.mode!r}")
        if self.canonical_only and n > CANONICAL_MAX_ORDER:
            raise InfeasibleQuery(f"canonical forms need order <= {CANONICAL_MAX_ORDER}, got {n}")
        if self.jobs < 1:
            raise InfeasibleQuery("jobs must be at least 1")


@dataclass
class EnumerationSummary:
    nodes: int = 0
    candidates: int = 0
    emitted: int = 0


# --- pruned search -------------------------------------------------------------


class _Search:
    """Row-major backtracking over cell masks with incremental left-invertive checks."""

    def __init__(self, n: int, prune: bool):
        self.n = n
        self.size = n * n
        self.full = full_mask(n)
        self.cells = [0] * self.size
        self.bits = [elements_of(m) for m in range(1 << n)]
        self.nodes = 0
        self.limit = None  # stop descending once nodes reaches this
        # (x,y,z) with x<z; reads cells x*n+y, z*n+y and columns z and x
        triples = [(x * n + y, z * n + y, x, z)
                   for x in range(n) for y in range(n) for z in range(x + 1, n)]
        self.watch = [
            [tr for tr in triples if k in (tr[0], tr[1]) or k % n in (tr[2], tr[3])]
            if prune else []
            for k in range(self.size)
        ]

    def _lift(self, m: int, col: int) -> int:
        cells, n = self.cells, self.n
        out = 0
        for a in self.bits[m]:
            v = cells[a * n + col]
            if not v:
                return -1
            out |= v
        return out

    def consistent(self, k: int) -> bool:
        cells = self.cells
        for i, j, x, z in self.watch[k]:
            ci, cj = cells[i], cells[j]
            if not ci or not cj:
                continue
            lhs = self._lift(ci, z)
            if lhs < 0:
                continue
            rhs = self._lift(cj, x)
            if rhs >= 0 and lhs != rhs:
                return False
        return True

    def complete(self, start: int, stop: int | None = None,
                 values: Callable[[], Sequence[int]] | None = None) -> Iterator[tuple]:
        """Yield every consistent filling of cells[start:stop], in ascending order."""
        cells, full = self.cells, self.full
        stop = self.size if stop is None else stop
        order = range(1, full + 1)

        def rec(k):
            if k == stop:
                yield tuple(cells)
                return
            for v in (values() if values else order):
                if self.limit is not None and self.nodes >= self.limit:
                    return
                self.nodes += 1
                cells[k] = v
                if self.consistent(k):
                    yield from rec(k + 1)
            cells[k] = 0

        yield from rec(start)


def _first_rows(n: int, prune: bool) -> tuple[list[tuple], int]:
    search = _Search(n, prune)
    rows = [c[:n] for c in search.complete(0, n)]
    return rows, search.nodes


def _filter_factory(q: EnumerationQuery):
    extra = [law for law in sorted(q.laws, key=lambda l: list(Law).index(l))
             if law is not Law.LEFT_INVERTIVE]

    if not extra and not q.flags and not q.canonical_only:
        return None

    def accept(t: HyperTable) -> bool:
        if any(not check_law(t, law).holds for law in extra):
            return False
        if any(not flag_holds(t, flag) for flag in q.flags):
            return False
        if q.canonical_only and canonicalize(t).cells != t.cells:
            return False
        return True

    return accept


def _complete_prefix(args) -> tuple[list[tuple], int, int]:
    q, row = args
    n = q.order
    search = _Search(n, Law.LEFT_INVERTIVE in q.laws)
    search.cells[:n] = row
    accept = _filter_factory(q)
    kept, candidates = [], 0
    for flat in search.complete(n):
        candidates += 1
        if accept is None or accept(_from_flat(n, flat)):
            kept.append(flat)
    return kept, search.nodes, candidates


def _from_flat(n: int, flat: Sequence[int]) -> HyperTable:
    return HyperTable(n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)), default_labels(n))


class Enumeration:
    """Iterable over the tables a query selects; ``summary`` fills in as it runs."""

    def __init__(self, q: EnumerationQuery):
        q.check_feasible()
        self.query = q
        self.summary = EnumerationSummary()

    def __iter__(self) -> Iterator[HyperTable]:
        q = self.query
        if q.mode == "sample":
            yield from self._sample()
            return
        n = q.order
        rows, nodes = _first_rows(n, Law.LEFT_INVERTIVE in q.laws)
        self.summary.nodes += nodes
        tasks = [(q, row) for row in rows]
        if q.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=q.jobs) as pool:
                yield from self._absorb(pool.map(_complete_prefix, tasks, chunksize=4))
        else:
            yield from self._absorb(map(_complete_prefix, tasks))

    def _absorb(self, results) -> Iterator[HyperTable]:
        n = self.query.order
        for kept, nodes, candidates in results:
            self.summary.nodes += nodes
            self.summary.candidates += candidates
            for flat in kept:
                self.summary.emitted += 1
                yield _from_flat(n, flat)

    def _sample(self) -> Iterator[HyperTable]:
        q = self.query
        n, full = q.order, full_mask(q.order)
        rng = random.Random(q.seed)
        accept = _filter_factory(EnumerationQuery(n, q.laws, q.flags, "sample", q.count, q.seed))
        seen = set()
        for _ in range(q.count):
            flat = [rng.randint(1, full) for _ in range(n * n)]
            self.summary.nodes += 1
            t = _from_flat(n, flat)
            if Law.LEFT_INVERTIVE in q.laws and not check_law(t, Law.LEFT_INVERTIVE).holds:
                continue
            self.summary.candidates += 1
            if accept is not None and not accept(t):
                continue
            if q.canonical_only:
                t = canonicalize(t).table()
                if t.cells in seen:
                    continue
                seen.add(t.cells)
            self.summary.emitted += 1
            yield t


def enumerate_tables(q: EnumerationQuery) -> Enumeration:
    return Enumeration(q)


def random_la_tables(n: int, rng: random.Random, budget: int, dive_cap: int | None = None,
                     bias: float = 2.0) -> Iterator[tuple[HyperTable, int]]:
    """Randomized depth-first dives that each end in one LA-semihypergroup.

    Each cell tries the masks in a random order weighted toward larger
    subsets (weight popcount**bias), which finds complete tables far more
    often than a uniform shuffle.  A dive stops at its first complete table
    or after ``dive_cap`` nodes.  Yields (table, nodes used so far) until
    ``budget`` search nodes are spent.
    """
    search = _Search(n, True)
    masks = list(range(1, full_mask(n) + 1))
    exponents = {m: 1.0 / popcount(m) ** bias for m in masks}
    cap = dive_cap if dive_cap is not None else 8 * n * n

    def weighted():
        return sorted(masks, key=lambda m: -rng.random() ** exponents[m])

    while search.nodes < budget:
        search.cells[:] = [0] * search.size
        search.limit = min(budget, search.nodes + cap)
        for flat in search.complete(0, values=weighted):
            yield _from_flat(n, flat), search.nodes
            break


# --- canonical forms -----------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Least relabeled cell sequence, with one permutation reaching it.

    Equality ignores ``perm``: isomorphic tables share a form even when
    different relabelings reach it.
    """

    n: int
    cells: tuple[tuple[int, ...], ...]
    perm: tuple[int, ...] = field(compare=False)

    def table(self) -> HyperTable:
            return HyperTable(self.n, self.cells, default_labels(self.n))


def _move(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i, p in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << p
    return out


def canonicalize(t: HyperTable) -> CanonicalForm:
    """Minimum over all relabelings; element i goes to perm[i]."""
    n = t.n
    if n > CANONICAL_MAX_ORDER:
        raise OrderTooLargeForCanonical(f"canonical form needs order <= {CANONICAL_MAX_ORDER}, got {n}")
    best, best_perm = None, None
    c = t.cells
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        cand = tuple(tuple(_move(c[inv[p]][inv[q]], perm) for q in range(n)) for p in range(n))
        if best is None or cand < best:
            best, best_perm = cand, perm
    return CanonicalForm(n, best, best_perm)


def is_canonical(t: HyperTable) -> bool:
    return canonicalize(t).cells == t.cells


# --- modular families ----------------------------------------------------------


def _check_family(n: int, k: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise InfeasibleQuery(f"modulus must be in 1..{MAX_ORDER}, got {n}")
    if k < 1 or n % k:
        raise StepDoesNotDivideModulus(f"step {k} does not divide modulus {n}")


def _multiples(n: int, k: int) -> int:
    return sum(1 << j for j in range(0, n, k))


def gen_coset(n: int, k: int) -> HyperTable:
    """ℤ_n with x∘y = (y − x) + kℤ_n."""
    _check_family(n, k)
    base = _multiples(n, k)
    cells = tuple(
        tuple(_rotate(base, (y - x) % n, n) for y in range(n)) for x in range(n)
    )
    return HyperTable(n, cells, default_labels(n))


def gen_union(n: int, k: int) -> HyperTable:
    """ℤ_n with x∘y = {x, y} ∪ kℤ_n."""
    _check_family(n, k)
    base = _multiples(n, k)
    cells = tuple(tuple(base | 1 << x | 1 << y for y in range(n)) for x in range(n))
    return HyperTable(n, cells, default_labels(n))


def _rotate(mask: int, shift: int, n: int) -> int:
    full = full_mask(n)
    return ((mask << shift) | (mask >> (n - shift))) & full if shift else mask


# --- converse hunting ----------------------------------------------------------


@dataclass(frozen=True)
class HuntResult:
    theorem: str
    order: int
    seed: int
    budget: int
    nodes: int
    tables: int
    classes: int
    verdict: object = None  # TheoremVerdict of the first counterexample, if any

    @property
    def found(self) -> bool:
        return self.verdict is not None


def hunt_converse(theorem: str, n: int, budget: int, seed: int) -> HuntResult:
    """Search random LA-semihypergroups of order ``n`` for a converse failure.

    Each table found is reduced to its canonical form and skipped if that
    isomorphism class was already examined.
    """
    from .theorems import Outcome, TheoremId, check_converse

    tid = TheoremId(theorem)
    if n > CANONICAL_MAX_ORDER:
        raise InfeasibleQuery(f"hunting uses canonical forms, order must be <= {CANONICAL_MAX_ORDER}")
    rng = random.Random(seed)
    seen: set = set()
    tables = nodes = 0
    for t, nodes in random_la_tables(n, rng, budget):
        tables += 1
        canon = canonicalize(t).table()
        if canon.cells in seen:
            continue
        seen.add(canon.cells)
        verdict = check_converse(canon, tid)
        if verdict.outcome is Outcome.COUNTEREXAMPLE:
            return HuntResult(tid.value, n, seed, budget, nodes, tables, len(seen), verdict)
    return HuntResult(tid.value, n, seed, budget, nodes, tables, len(seen))
