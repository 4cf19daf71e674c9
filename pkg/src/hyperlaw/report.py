"""Full classification profile of one table, as an ordered JSON-ready dict."""

from __future__ import annotations

import json

from .core import HyperTable
from .ideals import EXHAUSTIVE_MAX_ORDER, IdealKind, enumerate_ideals
from .laws import FLAG_NAMES, Law, check_law, classify_identities
from .regularity import intra_regular, invertibility
from .theorems import Options, run_all, verdict_to_json


def camel(name: str) -> str:
    head, *rest = name.split("_")
    return head + "".join(part.capitalize() for part in rest)


def _law_section(t: HyperTable) -> dict:
    out = {}
    for law in Law:
        verdict = check_law(t, law)
        entry = {"holds": verdict.holds, "witness": None}
        if not verdict.holds:
            w = verdict.witness
            entry["witness"] = {
                "elements": [t.labels[e] for e in w.elements],
                "lhs": t.names(w.lhs),
                "rhs": t.names(w.rhs),
            }
        out[camel(law.value)] = entry
    return out


def _identity_section(t: HyperTable) -> dict:
    profile = classify_identities(t)
    return {
        t.labels[e]: {camel("is_" + flag): getattr(profile.elements[e], flag) for flag in FLAG_NAMES}
        for e in range(t.n)
    }


def _intra_section(t: HyperTable) -> dict:
    report = intra_regular(t)
    failing = report.failing_element
    return {
        "intraRegular": report.is_intra_regular,
        "failingElement": None if failing is None else t.labels[failing],
        "witnesses": {
            t.labels[a]: None if w is None else [t.labels[w[0]], t.labels[w[1]]]
            for a, w in enumerate(report.witnesses)
        },
    }


def _invertibility_section(t: HyperTable):
    profile = classify_identities(t)
    candidates = profile.pure_left_identities or profile.left_identities
    if not candidates:
        return None
    r = invertibility(t, candidates[0])

    def names(inverses):
        return {t.labels[a]: None if u is None else t.labels[u] for a, u in enumerate(inverses)}

    return {
        "identity": t.labels[r.identity],
        "leftInvertible": r.left_invertible,
        "rightInvertible": r.right_invertible,
        "invertible": r.invertible,
        "pureLeftInvertible": r.pure_left_invertible,
        "pureRightInvertible": r.pure_right_invertible,
        "leftInverse": names(r.left_inverse),
        "pureLeftInverse": names(r.pure_left_inverse),
        "rightInverse": names(r.right_inverse),
        "pureRightInverse": names(r.pure_right_inverse),
    }


def _ideal_section(t: HyperTable):
    if t.n > EXHAUSTIVE_MAX_ORDER:
        return None
    return {camel(kind.value): len(enumerate_ideals(t, kind)) for kind in IdealKind}


def structure_report(t: HyperTable, theorems: bool = False, options: Options = Options()) -> dict:
    """Laws, identities, intra-regularity, invertibility and hyperideal counts.

    Invertibility is taken relative to the first pure left identity, or the
    first left identity when no pure one exists; it is null without either.
    With ``theorems`` the verdicts of every theorem are appended, or a
    ``theoremsSkipped`` reason when the table is not an LA-semihypergroup.
    """
    report = {
        "order": t.n,
        "elements": list(t.labels),
        "laSemihypergroup": check_law(t, Law.LEFT_INVERTIVE).holds,
        "laws": _law_section(t),
        "identities": _identity_section(t),
        "intraRegularity": _intra_section(t),
        "invertibility": _invertibility_section(t),
        "idealCounts": _ideal_section(t),
    }
    if theorems:
        if report["laSemihypergroup"]:
            report["theorems"] = [verdict_to_json(v) for v in run_all(t, options)]
        else:
            report["theorems"] = None
            report["theoremsSkipped"] = "not an LA-semihypergroup"
    return report


def dumps(doc) -> str:
    """Stable JSON text: insertion-ordered keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    lines = [f"order {report['order']}: {' '.join(report['elements'])}"]
    lines.append(f"LA-semihypergroup: {'yes' if report['laSemihypergroup'] else 'no'}")
    for name, entry in report["laws"].items():
        if entry["holds"]:
            lines.append(f"  {name}: holds")
        else:
            w = entry["witness"]
            lines.append(f"  {name}: fails at ({','.join(w['elements'])}) "
                         f"{{{','.join(w['lhs'])}}} vs {{{','.join(w['rhs'])}}}")
    for label, flags in report["identities"].items():
        held = [k for k, v in flags.items() if v]
        if held:
            lines.append(f"  {label}: {', '.join(held)}")
    intra = report["intraRegularity"]
    if intra["intraRegular"]:
        lines.append("intra-regular: yes")
    else:
        lines.append(f"intra-regular: no (fails at {intra['failingElement']})")
    inv = report["invertibility"]
    if inv is not None:
        lines.append(f"invertibility w.r.t. {inv['identity']}: left={inv['leftInvertible']} "
                     f"right={inv['rightInvertible']} pureLeft={inv['pureLeftInvertible']}")
    if report["idealCounts"] is not None:
        lines.append("hyperideal counts: " + ", ".join(f"{k}={v}" for k, v in report["idealCounts"].items()))
    if report.get("theorems"):
        for v in report["theorems"]:
            extra = f" ({v['reason']})" if v["reason"] else ""
            lines.append(f"  {v['theorem']}: {v['outcome']}{extra}")
    return "\n".join(lines) + "\n"
