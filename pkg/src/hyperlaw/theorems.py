"""Executable hypothesis → conclusion checks for the LA-semihypergroup results.

Each theorem is evaluated extensionally on one finite table.  A verdict is
``holds``, ``vacuous`` (the hypothesis fails, with the failing clause named)
or ``counterexample`` with a :class:`Certificate` that :func:`replay` can
re-verify on a freshly rebuilt table.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from .checks import EXPRESSIONS, Check, check_from_json, check_to_json, describe, evaluate
from .core import HyperTable, lift, validate
from .errors import NotLaShg, UnsupportedConverse
from .formats import parse_document, to_document
from .ideals import IdealKind, enumerate_ideals, inclusion_minimal, is_ideal
from .laws import Law, check_law, classify_identities
from .regularity import intra_regular, invertibility


class TheoremId(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    T9 = "T9"
    T10 = "T10"
    T11 = "T11"
    T12 = "T12"
    T13 = "T13"
    T14 = "T14"
    T15 = "T15"
    T16 = "T16"
    T17 = "T17"
    T18 = "T18"
    T19 = "T19"
    T20 = "T20"
    T21 = "T21"
    T22 = "T22"
    T23 = "T23"
    T24 = "T24"
    T25A = "T25a"
    T25B = "T25b"
    T25C = "T25c"


ALL_THEOREMS: tuple[TheoremId, ...] = tuple(TheoremId)
FOUNDATIONAL = ALL_THEOREMS[:7]
DEEP = ALL_THEOREMS[7:]
CONVERSES = (TheoremId.T10, TheoremId.T11)

STATEMENTS = {
    TheoremId.T1: "medial law holds",
    TheoremId.T2: "pure left identity ⇒ x∘(y∘z) = y∘(x∘z)",
    TheoremId.T3: "pure left identity ⇒ paramedial law",
    TheoremId.T4: "left identity ⇒ H∘H = H",
    TheoremId.T5: "pure left identity e ⇒ H∘H = H = e∘H = H∘e",
    TheoremId.T6: "pure right identity e ⇒ e pure left and pure identity, commutative, associative",
    TheoremId.T7: "associative ⇔ a∘(b∘c) = (c∘b)∘a",
    TheoremId.T8: "pure left identity ∧ left or right invertible ⇒ intra-regular",
    TheoremId.T9: "left identity ∧ (∀a H∘a=H ∨ ∀a a∘H=H) ⇒ intra-regular; ∀a a∘H=H ⇒ ∀a H∘a=H",
    TheoremId.T10: "intra-regular ∧ pure left identity ⇒ (B∘H)∘B = B∩H for generalized bi B",
    TheoremId.T11: "intra-regular ∧ pure left identity ⇒ (H∘B)∘H = H∩B for interior B",
    TheoremId.T12: "pure left identity ∧ L∪R = L∘R (L left, R semiprime right) ⇒ intra-regular",
    TheoremId.T13: "intra-regular ⇒ H = H²",
    TheoremId.T14: "left invertible with pure left identity: intra-regular ⇔ R∩L = R∘L",
    TheoremId.T15: "intra-regular ∧ left identity ⇒ two-sided hyperideals idempotent",
    TheoremId.T16: "left identity: intra-regular ⇔ A = (H∘A)² for left A",
    TheoremId.T17: "bi(A) ⇔ (A∘H)∘A = A ∧ A² = A",
    TheoremId.T18: "quasi(Q) ⇔ H∘Q ∩ Q∘H = Q",
    TheoremId.T19: "interior(A) ⇔ (H∘A)∘H = A",
    TheoremId.T20: "(1,2)(A) ⇔ (A∘H)∘A² = A ∧ A² = A",
    TheoremId.T21: "left(A) ⇔ right(A)",
    TheoremId.T22: "(1,2)(A) ⇔ two-sided(A)",
    TheoremId.T23: "two-sided(A) ⇔ quasi(A)",
    TheoremId.T24: "two-sided Q minimal ⇔ Q = I∩J, I and J minimal two-sided",
    TheoremId.T25A: "pure left identity ⇒ right hyperideals are bi-hyperideals",
    TheoremId.T25B: "pure left identity ∧ I left ⇒ I∘I two-sided",
    TheoremId.T25C: "intersections of (generalized) bi-hyperideals are empty or (generalized) bi",
}


class Outcome(str, Enum):
    HOLDS = "holds"
    VACUOUS = "vacuous"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Options:
    """Readings for the two ambiguous statements.

    ``t9_per_element`` reads T9's hypothesis as ∀a (H∘a=H ∨ a∘H=H) instead
    of (∀a H∘a=H) ∨ (∀a a∘H=H).  ``t14_membership`` reads e = a'∘a as
    e ∈ a'∘a instead of a'∘a = {e}.
    """

    t9_per_element: bool = False
    t14_membership: bool = False


@dataclass(frozen=True)
class Certificate:
    theorem: str
    direction: str
    table: HyperTable
    premises: tuple[Check, ...]
    failure: Check
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    options: Options = Options()


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: TheoremId
    outcome: Outcome
    reason: Optional[str] = None
    certificate: Optional[Certificate] = None
    directions: tuple[tuple[str, Outcome], ...] = ()
    notes: tuple[str, ...] = ()


class _Context:
    """Per-table facts shared by all theorems in one run."""

    def __init__(self, t: HyperTable, options: Options):
        self.t = t
        self.h = t.full
        self.options = options
        self.profile = classify_identities(t)
        self.intra = intra_regular(t)
        self._ideals: dict[IdealKind, list[int]] = {}
        self._ideal_sets: dict[IdealKind, frozenset[int]] = {}

    @property
    def is_intra(self) -> bool:
        return self.intra.is_intra_regular

    def ideals(self, kind: IdealKind) -> list[int]:
        found = self._ideals.get(kind)
        if found is None:
            found = self._ideals[kind] = enumerate_ideals(self.t, kind)
        return found

    def is_kind(self, kind: IdealKind, a: int) -> bool:
        members = self._ideal_sets.get(kind)
        if members is None:
            members = self._ideal_sets[kind] = frozenset(self.ideals(kind))
        return a in members

    def first(self, flag: str) -> Optional[int]:
        found = self.profile.having(flag)
        return found[0] if found else None

    def cert(self, theorem, direction, premises, failure, lhs=None, rhs=None) -> Certificate:
        return Certificate(theorem.value, direction, self.t, tuple(premises), failure,
                           lhs, rhs, self.options)


def _vacuous(tid: TheoremId, reason: str, **kw) -> TheoremVerdict:
    return TheoremVerdict(tid, Outcome.VACUOUS, reason=reason, **kw)


def _holds(tid: TheoremId, **kw) -> TheoremVerdict:
    return TheoremVerdict(tid, Outcome.HOLDS, **kw)


def _counter(tid: TheoremId, cert: Certificate, **kw) -> TheoremVerdict:
    return TheoremVerdict(tid, Outcome.COUNTEREXAMPLE, certificate=cert, **kw)


def _direction_outcome(seen: bool, cert: Optional[Certificate]) -> Outcome:
    if cert is not None:
        return Outcome.COUNTEREXAMPLE
    return Outcome.HOLDS if seen else Outcome.VACUOUS


def _law_conclusion(ctx, tid, premises, law: Law) -> TheoremVerdict:
    verdict = check_law(ctx.t, law)
    if verdict.holds:
        return _holds(tid)
    w = verdict.witness
    failure = Check(f"law:{law.value}", elements=w.elements)
    return _counter(tid, ctx.cert(tid, "main", premises, failure, w.lhs, w.rhs))


def _equation(ctx, name, subsets=(), elements=()):
    lhs, rhs = EXPRESSIONS[name](ctx.t, subsets, elements)
    return lhs == rhs, lhs, rhs


def _intra_failure(ctx, tid, direction, premises) -> TheoremVerdict:
    a = ctx.intra.failing_element
    cert = ctx.cert(tid, direction, premises, Check("intra_regular_element", elements=(a,)))
    return _counter(tid, cert)


# --- foundational results -------------------------------------------------


def _t1(ctx):
    return _law_conclusion(ctx, TheoremId.T1, [Check("la_semihypergroup")], Law.MEDIAL)


def _pure_left_law(tid, law):
    def run(ctx):
        e = ctx.first("pure_left_identity")
        if e is None:
            return _vacuous(tid, "no pure left identity")
        return _law_conclusion(ctx, tid, [Check("element:pure_left_identity", elements=(e,))], law)
    return run


def _t4(ctx):
    tid = TheoremId.T4
    e = ctx.first("left_identity")
    if e is None:
        return _vacuous(tid, "no left identity")
    ok, lhs, rhs = _equation(ctx, "HH=H")
    if ok:
        return _holds(tid)
    premises = [Check("element:left_identity", elements=(e,))]
    return _counter(tid, ctx.cert(tid, "main", premises, Check("eq:HH=H"), lhs, rhs))


def _t5(ctx):
    tid = TheoremId.T5
    ids = ctx.profile.pure_left_identities
    if not ids:
        return _vacuous(tid, "no pure left identity")
    for e in ids:
        premises = [Check("element:pure_left_identity", elements=(e,))]
        for name, elements in (("HH=H", ()), ("eH=H", (e,)), ("He=H", (e,))):
            ok, lhs, rhs = _equation(ctx, name, elements=elements)
            if not ok:
                failure = Check(f"eq:{name}", elements=elements)
                return _counter(tid, ctx.cert(tid, "main", premises, failure, lhs, rhs))
    return _holds(tid)


def _t6(ctx):
    tid = TheoremId.T6
    ids = ctx.profile.pure_right_identities
    if not ids:
        return _vacuous(tid, "no pure right identity")
    notes = ("commutative hypermonoid read as commutative + associative + pure identity",)
    for e in ids:
        premises = [Check("element:pure_right_identity", elements=(e,))]
        for flag in ("pure_left_identity", "pure_identity"):
            if not getattr(ctx.profile.elements[e], flag):
                failure = Check(f"element:{flag}", elements=(e,))
                return _counter(tid, ctx.cert(tid, "main", premises, failure), notes=notes)
        for law in (Law.COMMUTATIVE, Law.ASSOCIATIVE):
            verdict = _law_conclusion(ctx, tid, premises, law)
            if verdict.outcome is Outcome.COUNTEREXAMPLE:
                return TheoremVerdict(tid, verdict.outcome, certificate=verdict.certificate,
                                      notes=notes)
    return _holds(tid, notes=notes)


def _t7(ctx):
    tid = TheoremId.T7
    assoc = check_law(ctx.t, Law.ASSOCIATIVE)
    crit = check_law(ctx.t, Law.SEMIHYPERGROUP_CRITERION)
    base = [Check("la_semihypergroup")]
    directions = (
        ("forward", _direction_outcome(assoc.holds, None)),
        ("backward", _direction_outcome(crit.holds, None)),
    )
    if assoc.holds and not crit.holds:
        w = crit.witness
        cert = ctx.cert(tid, "forward", base + [Check("law:associative")],
                        Check("law:semihypergroup_criterion", elements=w.elements), w.lhs, w.rhs)
        return _counter(tid, cert, directions=(("forward", Outcome.COUNTEREXAMPLE), directions[1]))
    if crit.holds and not assoc.holds:
        w = assoc.witness
        cert = ctx.cert(tid, "backward", base + [Check("law:semihypergroup_criterion")],
                        Check("law:associative", elements=w.elements), w.lhs, w.rhs)
        return _counter(tid, cert, directions=(directions[0], ("backward", Outcome.COUNTEREXAMPLE)))
    return _holds(tid, directions=directions)


# --- intra-regularity ------------------------------------------------------


def _t8(ctx):
    tid = TheoremId.T8
    ids = ctx.profile.pure_left_identities
    if not ids:
        return _vacuous(tid, "no pure left identity")
    for e in ids:
        report = invertibility(ctx.t, e)
        side = "left" if report.left_invertible else "right" if report.right_invertible else None
        if side is None:
            continue
        if ctx.is_intra:
            return _holds(tid)
        premises = [Check("element:pure_left_identity", elements=(e,)),
                    Check(f"invertible:{side}", elements=(e,))]
        return _intra_failure(ctx, tid, "main", premises)
    return _vacuous(tid, "neither left nor right invertible")


def _t9(ctx):
    tid = TheoremId.T9
    t, h = ctx.t, ctx.h
    ha = [lift(t, h, 1 << a) for a in range(t.n)]
    ah = [lift(t, 1 << a, h) for a in range(t.n)]
    all_ha = all(x == h for x in ha)
    all_ah = all(x == h for x in ah)
    reading = "per-element" if ctx.options.t9_per_element else "uniform"
    notes = [f"hypothesis reading: {reading}"]

    main_cert = None
    e = ctx.first("left_identity")
    if ctx.options.t9_per_element:
        covered = all(x == h or y == h for x, y in zip(ha, ah))
        cover_check = Check("each_Ha_or_aH_eq_H")
    else:
        covered = all_ha or all_ah
        cover_check = Check("all_Ha_eq_H" if all_ha else "all_aH_eq_H")
    main_seen = e is not None and covered
    if main_seen and not ctx.is_intra:
        premises = [Check("element:left_identity", elements=(e,)), cover_check]
        main_cert = _intra_failure(ctx, tid, "main", premises).certificate

    cor_cert = None
    if all_ah and not all_ha:
        a = next(i for i, x in enumerate(ha) if x != h)
        cor_cert = ctx.cert(tid, "corollary", [Check("all_aH_eq_H")],
                            Check("eq:Ha=H", elements=(a,)), ha[a], h)
    directions = (
        ("main", _direction_outcome(main_seen, main_cert)),
        ("corollary", _direction_outcome(all_ah, cor_cert)),
    )
    cert = main_cert or cor_cert
    if cert is not None:
        return _counter(tid, cert, directions=directions, notes=tuple(notes))
    if main_seen or all_ah:
        return _holds(tid, directions=directions, notes=tuple(notes))
    reason = "no left identity" if e is None else "H∘a = H and a∘H = H coverage fails"
    return _vacuous(tid, reason, directions=directions, notes=tuple(notes))


def _intra_pure_left(ctx, tid):
    """Shared hypothesis: intra-regular with a pure left identity."""
    if not ctx.is_intra:
        return None, _vacuous(tid, "not intra-regular")
    e = ctx.first("pure_left_identity")
    if e is None:
        return None, _vacuous(tid, "no pure left identity")
    return [Check("intra_regular"), Check("element:pure_left_identity", elements=(e,))], None


def _all_ideals_satisfy(tid, kind, expr, hypothesis=_intra_pure_left):
    def run(ctx):
        premises, verdict = hypothesis(ctx, tid)
        if verdict is not None:
            return verdict
        for b in ctx.ideals(kind):
            ok, lhs, rhs = _equation(ctx, expr, (b,))
            if not ok:
                cert = ctx.cert(tid, "main", premises + [Check(f"ideal:{kind.value}", (b,))],
                                Check(f"eq:{expr}", (b,)), lhs, rhs)
                return _counter(tid, cert)
        return _holds(tid)
    return run


def _t12(ctx):
    tid = TheoremId.T12
    e = ctx.first("pure_left_identity")
    if e is None:
        return _vacuous(tid, "no pure left identity")
    t = ctx.t
    for l in ctx.ideals(IdealKind.LEFT):
        for r in ctx.ideals(IdealKind.RIGHT):
            if ctx.is_kind(IdealKind.SEMIPRIME, r) and l | r != lift(t, l, r):
                return _vacuous(tid, "L∪R ≠ L∘R for some left L and semiprime right R")
    if ctx.is_intra:
        return _holds(tid)
    premises = [Check("element:pure_left_identity", elements=(e,)),
                Check("union_product_condition")]
    return _intra_failure(ctx, tid, "main", premises)


def _t13(ctx):
    tid = TheoremId.T13
    if not ctx.is_intra:
        return _vacuous(tid, "not intra-regular")
    ok, lhs, rhs = _equation(ctx, "HH=H")
    if ok:
        return _holds(tid)
    return _counter(tid, ctx.cert(tid, "main", [Check("intra_regular")], Check("eq:HH=H"), lhs, rhs))


def _t14(ctx):
    tid = TheoremId.T14
    membership = ctx.options.t14_membership
    side = "left" if membership else "pure_left"
    notes = (f"inverse reading: {'e ∈ a′∘a' if membership else 'a′∘a = {e}'}",)
    base = None
    for e in ctx.profile.pure_left_identities:
        report = invertibility(ctx.t, e)
        if report.left_invertible if membership else report.pure_left_invertible:
            base = [Check("element:pure_left_identity", elements=(e,)),
                    Check(f"invertible:{side}", elements=(e,))]
            break
    if base is None:
        reason = ("no pure left identity" if not ctx.profile.pure_left_identities
                  else "not left invertible under the chosen inverse reading")
        return _vacuous(tid, reason, notes=notes)

    t = ctx.t
    failing_pair = None
    for r in ctx.ideals(IdealKind.RIGHT):
        for l in ctx.ideals(IdealKind.LEFT):
            if r & l != lift(t, r, l):
                failing_pair = (r, l)
                break
        if failing_pair:
            break
    condition = failing_pair is None
    fwd_cert = bwd_cert = None
    if ctx.is_intra and not condition:
        r, l = failing_pair
        premises = base + [Check("intra_regular"), Check("ideal:right", (r,)),
                           Check("ideal:left", (l,))]
        fwd_cert = ctx.cert(tid, "forward", premises, Check("eq:R&L=RL", (r, l)),
                            r & l, lift(t, r, l))
    if condition and not ctx.is_intra:
        bwd_cert = _intra_failure(ctx, tid, "backward",
                                  base + [Check("meet_product_condition")]).certificate
    directions = (("forward", _direction_outcome(ctx.is_intra, fwd_cert)),
                  ("backward", _direction_outcome(condition, bwd_cert)))
    cert = fwd_cert or bwd_cert
    if cert:
        return _counter(tid, cert, directions=directions, notes=notes)
    return _holds(tid, directions=directions, notes=notes)


def _intra_left_identity(ctx, tid):
    if not ctx.is_intra:
        return None, _vacuous(tid, "not intra-regular")
    e = ctx.first("left_identity")
    if e is None:
        return None, _vacuous(tid, "no left identity")
    return [Check("intra_regular"), Check("element:left_identity", elements=(e,))], None


def _t16(ctx):
    tid = TheoremId.T16
    e = ctx.first("left_identity")
    if e is None:
        return _vacuous(tid, "no left identity")
    base = [Check("element:left_identity", elements=(e,))]
    failing = None
    for a in ctx.ideals(IdealKind.LEFT):
        ok, lhs, rhs = _equation(ctx, "A=(HA)^2", (a,))
        if not ok:
            failing = (a, lhs, rhs)
            break
    condition = failing is None
    fwd_cert = bwd_cert = None
    if ctx.is_intra and not condition:
        a, lhs, rhs = failing
        fwd_cert = ctx.cert(tid, "forward",
                            base + [Check("intra_regular"), Check("ideal:left", (a,))],
                            Check("eq:A=(HA)^2", (a,)), lhs, rhs)
    if condition and not ctx.is_intra:
        bwd_cert = _intra_failure(ctx, tid, "backward",
                                  base + [Check("left_square_condition")]).certificate
    directions = (("forward", _direction_outcome(ctx.is_intra, fwd_cert)),
                  ("backward", _direction_outcome(condition, bwd_cert)))
    cert = fwd_cert or bwd_cert
    if cert:
        return _counter(tid, cert, directions=directions)
    return _holds(tid, directions=directions)


# A side of a per-subset biconditional: an ideal kind or a conjunction of equations.
Side = tuple[str, object]


def _side(ctx, side: Side, a: int):
    """Evaluate one side on subset ``a``: (holds, failing check, lhs, rhs, premise checks)."""
    tag, what = side
    if tag == "ideal":
        checks = [Check(f"ideal:{what.value}", (a,))]
        if ctx.is_kind(what, a):
            return True, None, None, None, checks
        w = is_ideal(ctx.t, what, a).witness
        return False, checks[0], w.lhs, w.rhs, checks
    checks = [Check(f"eq:{name}", (a,)) for name in what]
    for check, name in zip(checks, what):
        ok, lhs, rhs = _equation(ctx, name, (a,))
        if not ok:
            return False, check, lhs, rhs, checks
    return True, None, None, None, checks


def _biconditional(tid, left: Side, right: Side):
    def run(ctx):
        premises, verdict = _intra_pure_left(ctx, tid)
        if verdict is not None:
            return verdict
        seen = {"forward": False, "backward": False}
        certs = {"forward": None, "backward": None}
        for a in range(1, ctx.h + 1):
            lok, lfail, llhs, lrhs, lchecks = _side(ctx, left, a)
            rok, rfail, rlhs, rrhs, rchecks = _side(ctx, right, a)
            if lok:
                seen["forward"] = True
                if not rok and certs["forward"] is None:
                    certs["forward"] = ctx.cert(tid, "forward", premises + lchecks, rfail,
                                                rlhs, rrhs)
            if rok:
                seen["backward"] = True
                if not lok and certs["backward"] is None:
                    certs["backward"] = ctx.cert(tid, "backward", premises + rchecks, lfail,
                                                 llhs, lrhs)
        directions = tuple((d, _direction_outcome(seen[d], certs[d]))
                           for d in ("forward", "backward"))
        cert = certs["forward"] or certs["backward"]
        if cert:
            return _counter(tid, cert, directions=directions)
        return _holds(tid, directions=directions)
    return run


def _t24(ctx):
    tid = TheoremId.T24
    premises, verdict = _intra_pure_left(ctx, tid)
    if verdict is not None:
        return verdict
    t = ctx.t
    two_sided = ctx.ideals(IdealKind.TWO_SIDED)
    minimal = inclusion_minimal(two_sided)
    minimal_set = set(minimal)
    notes = []
    fwd_cert = bwd_cert = None
    for q in two_sided:
        is_min = q in minimal_set
        pair = next(((i, j) for i in minimal for j in minimal if i & j == q), None)
        if is_min and pair is None and fwd_cert is None:
            fwd_cert = ctx.cert(tid, "forward", premises + [Check("minimal:two_sided", (q,))],
                                Check("minimal_intersection", (q,)))
        if pair is not None and not is_min and bwd_cert is None:
            i, j = pair
            bwd_cert = ctx.cert(
                tid, "backward",
                premises + [Check("ideal:two_sided", (q,)), Check("minimal:two_sided", (i,)),
                            Check("minimal:two_sided", (j,)), Check("eq:A&B=C", (i, j, q))],
                Check("minimal:two_sided", (q,)))
        if is_min:
            for a in range(t.n):
                if q >> a & 1:
                    meet = lift(t, t.full, 1 << a) & lift(t, 1 << a, t.full)
                    status = "works" if meet == q else "fails"
                    notes.append(f"principal H∘a∩a∘H for Q={t.format_mask(q)}, "
                                 f"a={t.labels[a]}: {status}")
    directions = (("forward", _direction_outcome(bool(minimal), fwd_cert)),
                  ("backward", _direction_outcome(bool(minimal), bwd_cert)))
    cert = fwd_cert or bwd_cert
    if cert:
        return _counter(tid, cert, directions=directions, notes=tuple(notes))
    return _holds(tid, directions=directions, notes=tuple(notes))


# --- preliminary hyperideal claims -----------------------------------------


def _t25a(ctx):
    tid = TheoremId.T25A
    e = ctx.first("pure_left_identity")
    if e is None:
        return _vacuous(tid, "no pure left identity")
    premises = [Check("element:pure_left_identity", elements=(e,))]
    for a in ctx.ideals(IdealKind.RIGHT):
        if not ctx.is_kind(IdealKind.BI, a):
            w = is_ideal(ctx.t, IdealKind.BI, a).witness
            cert = ctx.cert(tid, "main", premises + [Check("ideal:right", (a,))],
                            Check("ideal:bi", (a,)), w.lhs, w.rhs)
            return _counter(tid, cert)
    return _holds(tid)


def _t25b(ctx):
    tid = TheoremId.T25B
    e = ctx.first("pure_left_identity")
    if e is None:
        return _vacuous(tid, "no pure left identity")
    premises = [Check("element:pure_left_identity", elements=(e,))]
    for a in ctx.ideals(IdealKind.LEFT):
        sq = lift(ctx.t, a, a)
        if not ctx.is_kind(IdealKind.TWO_SIDED, sq):
            w = is_ideal(ctx.t, IdealKind.TWO_SIDED, sq).witness
            cert = ctx.cert(tid, "main",
                            premises + [Check("ideal:left", (a,)), Check("eq:AA=B", (a, sq))],
                            Check("ideal:two_sided", (sq,)), w.lhs, w.rhs)
            return _counter(tid, cert)
    return _holds(tid)


def _t25c(ctx):
    tid = TheoremId.T25C
    premises = [Check("la_semihypergroup")]
    for kind in (IdealKind.GENERALIZED_BI, IdealKind.BI):
        family = ctx.ideals(kind)
        for i, b1 in enumerate(family):
            for b2 in family[i + 1:]:
                c = b1 & b2
                if c and not ctx.is_kind(kind, c):
                    w = is_ideal(ctx.t, kind, c).witness
                    cert = ctx.cert(
                        tid, "main",
                        premises + [Check(f"ideal:{kind.value}", (b1,)),
                                    Check(f"ideal:{kind.value}", (b2,)),
                                    Check("eq:A&B=C", (b1, b2, c))],
                        Check(f"ideal:{kind.value}", (c,)), w.lhs, w.rhs)
                    return _counter(tid, cert)
    return _holds(tid)


def _ideal_side(kind):
    return ("ideal", kind)


_RUNNERS: dict[TheoremId, Callable[[_Context], TheoremVerdict]] = {
    TheoremId.T1: _t1,
    TheoremId.T2: _pure_left_law(TheoremId.T2, Law.LEFT_EXCHANGE),
    TheoremId.T3: _pure_left_law(TheoremId.T3, Law.PARAMEDIAL),
    TheoremId.T4: _t4,
    TheoremId.T5: _t5,
    TheoremId.T6: _t6,
    TheoremId.T7: _t7,
    TheoremId.T8: _t8,
    TheoremId.T9: _t9,
    TheoremId.T10: _all_ideals_satisfy(TheoremId.T10, IdealKind.GENERALIZED_BI, "(BH)B=B&H"),
    TheoremId.T11: _all_ideals_satisfy(TheoremId.T11, IdealKind.INTERIOR, "(HB)H=H&B"),
    TheoremId.T12: _t12,
    TheoremId.T13: _t13,
    TheoremId.T14: _t14,
    TheoremId.T15: _all_ideals_satisfy(TheoremId.T15, IdealKind.TWO_SIDED, "AA=A",
                                       _intra_left_identity),
    TheoremId.T16: _t16,
    TheoremId.T17: _biconditional(TheoremId.T17, _ideal_side(IdealKind.BI),
                                  ("eq", ("(AH)A=A", "AA=A"))),
    TheoremId.T18: _biconditional(TheoremId.T18, _ideal_side(IdealKind.QUASI),
                                  ("eq", ("HQ&QH=Q",))),
    TheoremId.T19: _biconditional(TheoremId.T19, _ideal_side(IdealKind.INTERIOR),
                                  ("eq", ("(HA)H=A",))),
    TheoremId.T20: _biconditional(TheoremId.T20, _ideal_side(IdealKind.ONE_TWO),
                                  ("eq", ("(AH)A^2=A", "AA=A"))),
    TheoremId.T21: _biconditional(TheoremId.T21, _ideal_side(IdealKind.LEFT),
                                  _ideal_side(IdealKind.RIGHT)),
    TheoremId.T22: _biconditional(TheoremId.T22, _ideal_side(IdealKind.ONE_TWO),
                                  _ideal_side(IdealKind.TWO_SIDED)),
    TheoremId.T23: _biconditional(TheoremId.T23, _ideal_side(IdealKind.TWO_SIDED),
                                  _ideal_side(IdealKind.QUASI)),
    TheoremId.T24: _t24,
    TheoremId.T25A: _t25a,
    TheoremId.T25B: _t25b,
    TheoremId.T25C: _t25c,
}


def parse_theorem_ids(text: str) -> tuple[TheoremId, ...]:
    """``all``, ``T25`` (all three parts) or a comma list such as ``T1,T25b``."""
    if text.strip().lower() == "all":
        return ALL_THEOREMS
    out: list[TheoremId] = []
    for part in text.split(","):
        part = part.strip()
        if part.upper() == "T25":
            out.extend((TheoremId.T25A, TheoremId.T25B, TheoremId.T25C))
            continue
        key = part[:1].upper() + part[1:].lower()
        try:
            out.append(TheoremId(key))
        except ValueError:
            raise ValueError(f"unknown theorem id {part!r}") from None
    return tuple(out)


def _require_la(t: HyperTable) -> None:
    verdict = check_law(t, Law.LEFT_INVERTIVE)
    if not verdict.holds:
        w = verdict.witness
        names = ",".join(t.labels[e] for e in w.elements)
        raise NotLaShg(f"table violates the left invertive law at ({names})")


def run_theorem(t: HyperTable, tid: TheoremId | str, options: Options = Options()) -> TheoremVerdict:
    _require_la(t)
    return _RUNNERS[TheoremId(tid)](_Context(t, options))


def run_all(t: HyperTable, options: Options = Options(),
            ids: Sequence[TheoremId] = ALL_THEOREMS) -> list[TheoremVerdict]:
    _require_la(t)
    ctx = _Context(t, options)
    return [_RUNNERS[TheoremId(tid)](ctx) for tid in ids]


def check_converse(t: HyperTable, tid: TheoremId | str, options: Options = Options()) -> TheoremVerdict:
    """Test the converse direction discussed for T10 and T11.

    The converse hypothesis is that some hyperideal of the relevant kind
    satisfies the equation; the converse conclusion is intra-regularity with
    a pure left identity.  Every witnessing subset is listed as a premise.
    """
    tid = TheoremId(tid)
    if tid not in CONVERSES:
        raise UnsupportedConverse(f"no converse check for {tid.value}; choose T10 or T11")
    _require_la(t)
    ctx = _Context(t, options)
    kind, expr = ((IdealKind.GENERALIZED_BI, "(BH)B=B&H") if tid is TheoremId.T10
                  else (IdealKind.INTERIOR, "(HB)H=H&B"))
    witnesses = [b for b in ctx.ideals(kind) if _equation(ctx, expr, (b,))[0]]
    if not witnesses:
        return _vacuous(tid, f"no {kind.value} hyperideal satisfies {expr}")
    if ctx.is_intra and ctx.profile.pure_left_identities:
        return _holds(tid)
    premises = []
    for b in witnesses:
        premises += [Check(f"ideal:{kind.value}", (b,)), Check(f"eq:{expr}", (b,))]
    failure = Check("intra_regular") if not ctx.is_intra else Check("has:pure_left_identity")
    return _counter(tid, ctx.cert(tid, "converse", premises, failure))


# --- certificates ------------------------------------------------------------


def replay(cert: Certificate) -> bool:
    """Re-verify a certificate on a freshly rebuilt copy of its table."""
    src = cert.table
    t = validate([list(row) for row in src.cells], list(src.labels))
    if not check_law(t, Law.LEFT_INVERTIVE).holds:
        return False
    if not all(evaluate(t, p)[0] for p in cert.premises):
        return False
    ok, lhs, rhs = evaluate(t, cert.failure)
    if ok:
        return False
    if cert.lhs is not None and (lhs, rhs) != (cert.lhs, cert.rhs):
        return False
    return True


def _mask_json(t, m):
    return None if m is None else t.names(m)


def certificate_to_json(cert: Certificate) -> dict:
    t = cert.table
    return {
        "theorem": cert.theorem,
        "direction": cert.direction,
        "options": {"t9_per_element": cert.options.t9_per_element,
                    "t14_membership": cert.options.t14_membership},
        "table": to_document(t),
        "premises": [check_to_json(t, p) for p in cert.premises],
        "failure": check_to_json(t, cert.failure),
        "lhs": _mask_json(t, cert.lhs),
        "rhs": _mask_json(t, cert.rhs),
    }


def certificate_from_json(doc: dict) -> Certificate:
    t = parse_document(doc["table"])
    lhs = None if doc.get("lhs") is None else t.mask(doc["lhs"])
    rhs = None if doc.get("rhs") is None else t.mask(doc["rhs"])
    return Certificate(
        theorem=doc["theorem"],
        direction=doc["direction"],
        table=t,
        premises=tuple(check_from_json(t, p) for p in doc["premises"]),
        failure=check_from_json(t, doc["failure"]),
        lhs=lhs,
        rhs=rhs,
        options=Options(**doc.get("options", {})),
    )


def describe_certificate(cert: Certificate) -> str:
    t = cert.table
    lines = [f"{cert.theorem} {cert.direction} fails"]
    lines += [f"  premise: {describe(t, p)}" for p in cert.premises]
    lines.append(f"  failure: {describe(t, cert.failure)}")
    if cert.lhs is not None:
        lines.append(f"  lhs = {t.format_mask(cert.lhs)}  rhs = {t.format_mask(cert.rhs)}")
    return "\n".join(lines)


def verdict_to_json(v: TheoremVerdict) -> dict:
    return {
        "theorem": v.theorem.value,
        "outcome": v.outcome.value,
        "reason": v.reason,
        "directions": {d: o.value for d, o in v.directions},
        "notes": list(v.notes),
        "certificate": None if v.certificate is None else certificate_to_json(v.certificate),
    }


# --- sweeps -------------------------------------------------------------------


@dataclass
class Tally:
    holds: int = 0
    vacuous: int = 0
    counterexample: int = 0

    @property
    def non_vacuous(self) -> int:
        return self.holds + self.counterexample


@dataclass
class SweepReport:
    tables: int = 0
    tallies: dict[str, Tally] = field(default_factory=dict)
    counterexamples: list[TheoremVerdict] = field(default_factory=list)

    @property
    def flagged(self) -> list[str]:
        """Theorems whose hypothesis was never satisfied in the sweep."""
        return [tid for tid, tally in self.tallies.items() if tally.non_vacuous == 0]

    def to_json(self) -> dict:
        return {
            "tables": self.tables,
            "tallies": {tid: {"holds": x.holds, "vacuous": x.vacuous,
                              "counterexample": x.counterexample}
                        for tid, x in self.tallies.items()},
            "flagged_never_non_vacuous": self.flagged,
            "counterexamples": [verdict_to_json(v) for v in self.counterexamples],
        }


def _sweep_chunk(args):
    cells_list, labels, n, ids, options = args
    out = []
    for cells in cells_list:
        t = HyperTable(n, cells, labels)
        out.append(run_all(t, options, ids))
    return out


def sweep(tables: Iterable[HyperTable], ids: Sequence[TheoremId] = ALL_THEOREMS,
          options: Options = Options(), jobs: int = 1, chunk: int = 2000,
          keep_counterexamples: int = 50) -> SweepReport:
    """Run ``ids`` over every table and tally outcomes per theorem.

    At most ``keep_counterexamples`` certificates are retained per theorem;
    tallies always count all of them.  Results do not depend on ``jobs``.
    """
    report = SweepReport(tallies={tid.value: Tally() for tid in ids})
    kept: dict[str, int] = {}

    def absorb(verdicts):
        report.tables += 1
        for v in verdicts:
            tally = report.tallies[v.theorem.value]
            setattr(tally, v.outcome.value, getattr(tally, v.outcome.value) + 1)
            if v.outcome is Outcome.COUNTEREXAMPLE:
                if kept.get(v.theorem.value, 0) < keep_counterexamples:
                    kept[v.theorem.value] = kept.get(v.theorem.value, 0) + 1
                    report.counterexamples.append(v)

    if jobs <= 1:
        for t in tables:
            absorb(run_all(t, options, ids))
        return report

    tables = list(tables)
    batches = []
    for start in range(0, len(tables), chunk):
        group = tables[start:start + chunk]
        # tables in one batch must share order and labels to ship as raw cells
        by_shape: list = []
        for t in group:
            if by_shape and by_shape[-1][1] == t.labels:
                by_shape[-1][0].append(t.cells)
            else:
                by_shape.append(([t.cells], t.labels, t.n))
        batches.extend((cells, labels, n, tuple(ids), options) for cells, labels, n in by_shape)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for result in pool.map(_sweep_chunk, batches):
            for verdicts in result:
                absorb(verdicts)
    return report


def persist_counterexamples(verdicts: Iterable[TheoremVerdict], directory: str | Path) -> list[Path]:
    """Write each certificate as a JSON fixture named by theorem and table digest."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for v in verdicts:
        doc = certificate_to_json(v.certificate)
        body = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
        digest = hashlib.sha1(body.encode()).hexdigest()[:12]
        path = directory / f"{v.theorem.value}-{v.certificate.direction}-{digest}.json"
        path.write_text(body, encoding="utf-8")
        paths.append(path)
    return paths


def load_certificate(path: str | Path) -> Certificate:
    return certificate_from_json(json.loads(Path(path).read_text(encoding="utf-8")))
