"""Atomic, replayable claims about a table.

Theorem certificates are built from :class:`Check` values: a list of
premises that must hold and one failing check.  :func:`evaluate` decides a
check from scratch using only the public core/laws/ideals/regularity
operations, which is what makes a certificate independently replayable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import HyperTable, compose
from .ideals import IdealKind, enumerate_ideals, is_ideal, minimal_ideals
from .laws import FLAG_NAMES, Law, check_law, classify_element, classify_identities, evaluate_law
from .regularity import intra_regular, intra_regular_witness, invertibility


@dataclass(frozen=True)
class Check:
    name: str
    subsets: tuple[int, ...] = ()
    elements: tuple[int, ...] = ()


Result = tuple[bool, Optional[int], Optional[int]]

# name -> (lhs, rhs) from (table, subsets, elements); each describes an equation
EXPRESSIONS: dict[str, Callable[[HyperTable, tuple, tuple], tuple[int, int]]] = {
    "HH=H": lambda t, s, e: (compose(t, t.full, t.full), t.full),
    "eH=H": lambda t, s, e: (compose(t, 1 << e[0], t.full), t.full),
    "He=H": lambda t, s, e: (compose(t, t.full, 1 << e[0]), t.full),
    "Ha=H": lambda t, s, e: (compose(t, t.full, 1 << e[0]), t.full),
    "aH=H": lambda t, s, e: (compose(t, 1 << e[0], t.full), t.full),
    "(BH)B=B&H": lambda t, s, e: (compose(t, compose(t, s[0], t.full), s[0]), s[0] & t.full),
    "(HB)H=H&B": lambda t, s, e: (compose(t, compose(t, t.full, s[0]), t.full), t.full & s[0]),
    "AA=A": lambda t, s, e: (compose(t, s[0], s[0]), s[0]),
    "AA=B": lambda t, s, e: (compose(t, s[0], s[0]), s[1]),
    "A=(HA)^2": lambda t, s, e: (
        s[0],
        compose(t, compose(t, t.full, s[0]), compose(t, t.full, s[0])),
    ),
    "(AH)A=A": lambda t, s, e: (compose(t, compose(t, s[0], t.full), s[0]), s[0]),
    "HQ&QH=Q": lambda t, s, e: (compose(t, t.full, s[0]) & compose(t, s[0], t.full), s[0]),
    "(HA)H=A": lambda t, s, e: (compose(t, compose(t, t.full, s[0]), t.full), s[0]),
    "(AH)A^2=A": lambda t, s, e: (
        compose(t, compose(t, s[0], t.full), compose(t, s[0], s[0])),
        s[0],
    ),
    "R&L=RL": lambda t, s, e: (s[0] & s[1], compose(t, s[0], s[1])),
    "L|R=LR": lambda t, s, e: (s[0] | s[1], compose(t, s[0], s[1])),
    "A&B=C": lambda t, s, e: (s[0] & s[1], s[2]),
    "Ha&aH=Q": lambda t, s, e: (
        compose(t, t.full, 1 << e[0]) & compose(t, 1 << e[0], t.full),
        s[0],
    ),
}


def _all_pairs(t, left_kind, right_kind, expr, right_filter=None) -> bool:
    lefts = enumerate_ideals(t, left_kind)
    rights = enumerate_ideals(t, right_kind)
    if right_filter is not None:
        rights = [r for r in rights if is_ideal(t, right_filter, r).holds]
    f = EXPRESSIONS[expr]
    for a in lefts:
        for b in rights:
            lhs, rhs = f(t, (a, b), ())
            if lhs != rhs:
                return False
    return True


def _structure(t: HyperTable, name: str, elements: tuple) -> bool:
    h = t.full
    if name == "la_semihypergroup":
        return check_law(t, Law.LEFT_INVERTIVE).holds
    if name == "intra_regular":
        return intra_regular(t).is_intra_regular
    if name == "intra_regular_element":
        return intra_regular_witness(t, elements[0]) is not None
    if name == "all_Ha_eq_H":
        return all(compose(t, h, 1 << a) == h for a in range(t.n))
    if name == "all_aH_eq_H":
        return all(compose(t, 1 << a, h) == h for a in range(t.n))
    if name == "each_Ha_or_aH_eq_H":
        return all(compose(t, h, 1 << a) == h or compose(t, 1 << a, h) == h for a in range(t.n))
    if name == "union_product_condition":
        # every left L and semiprime right R satisfy L∪R = L∘R
        return _all_pairs(t, IdealKind.LEFT, IdealKind.RIGHT, "L|R=LR", IdealKind.SEMIPRIME)
    if name == "meet_product_condition":
        return _all_pairs(t, IdealKind.RIGHT, IdealKind.LEFT, "R&L=RL")
    if name == "left_square_condition":
        f = EXPRESSIONS["A=(HA)^2"]
        return all(
            lhs == rhs
            for lhs, rhs in (f(t, (a,), ()) for a in enumerate_ideals(t, IdealKind.LEFT))
        )
    raise KeyError(name)


def evaluate(t: HyperTable, check: Check) -> Result:
    """Decide ``check`` on ``t``; returns (holds, lhs, rhs) where sides apply."""
    name, subsets, elements = check.name, check.subsets, check.elements
    kind, _, arg = name.partition(":")
    if kind == "eq":
        lhs, rhs = EXPRESSIONS[arg](t, subsets, elements)
        return lhs == rhs, lhs, rhs
    if kind == "law":
        law = Law(arg)
        if elements:
            w = evaluate_law(t, law, elements)
            return w.lhs == w.rhs, w.lhs, w.rhs
        verdict = check_law(t, law)
        if verdict.holds:
            return True, None, None
        return False, verdict.witness.lhs, verdict.witness.rhs
    if kind == "ideal":
        verdict = is_ideal(t, IdealKind(arg), subsets[0])
        if verdict.holds:
            return True, None, None
        return False, verdict.witness.lhs, verdict.witness.rhs
    if kind == "minimal":
        return subsets[0] in minimal_ideals(t, IdealKind(arg)), None, None
    if kind == "element":
        if arg not in FLAG_NAMES:
            raise KeyError(arg)
        return getattr(classify_element(t, elements[0]), arg), None, None
    if kind == "has":
        return bool(classify_identities(t).having(arg)), None, None
    if kind == "invertible":
        report = invertibility(t, elements[0])
        attr = {"left": "left_invertible", "right": "right_invertible",
                "pure_left": "pure_left_invertible", "pure_right": "pure_right_invertible"}[arg]
        return getattr(report, attr), None, None
    if name == "minimal_intersection":
        mins = minimal_ideals(t, IdealKind.TWO_SIDED)
        q = subsets[0]
        return any(i & j == q for i in mins for j in mins), None, None
    return _structure(t, name, elements), None, None


def describe(t: HyperTable, check: Check) -> str:
    parts = [check.name]
    if check.subsets:
        parts.append(" ".join(t.format_mask(s) for s in check.subsets))
    if check.elements:
        parts.append(",".join(t.labels[e] for e in check.elements))
    return " ".join(parts)


def check_to_json(t: HyperTable, check: Check) -> dict:
    return {
        "check": check.name,
        "subsets": [t.names(s) for s in check.subsets],
        "elements": [t.labels[e] for e in check.elements],
    }


def check_from_json(t: HyperTable, doc: dict) -> Check:
    return Check(
        doc["check"],
        tuple(t.mask(s) for s in doc.get("subsets", [])),
        tuple(t.index(e) for e in doc.get("elements", [])),
    )

