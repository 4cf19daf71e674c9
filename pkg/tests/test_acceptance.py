"""Acceptance criteria 1-8.

Each criterion prints one ``ACCEPTANCE <n> PASS|FAIL`` line with its
runtime; the lines are repeated in the pytest terminal summary.  Run this
file directly (``python tests/test_acceptance.py``) for the lines alone.
"""

from __future__ import annotations

import json
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperlaw.cli import run_cli  # noqa: E402
from hyperlaw.enumeration import EnumerationQuery, enumerate_tables, gen_coset, gen_union  # noqa: E402
from hyperlaw.formats import FIXTURES, fixture_text, load_fixture  # noqa: E402
from hyperlaw.ideals import IdealKind, is_ideal  # noqa: E402
from hyperlaw.laws import Law, check_law, classify_identities, evaluate_law  # noqa: E402
from hyperlaw.regularity import intra_regular, is_intra_regular_witness  # noqa: E402
from hyperlaw.report import dumps, structure_report  # noqa: E402
from hyperlaw.theorems import (  # noqa: E402
    DEEP,
    FOUNDATIONAL,
    Outcome,
    check_converse,
    load_certificate,
    persist_counterexamples,
    replay,
    sweep,
)
from oracles import (  # noqa: E402
    all_raw_tables,
    as_sets,
    ideal_holds,
    law_holds,
    nonempty_subsets,
    random_flat,
    table_from_flat,
    to_mask,
)

RESULTS: list[str] = []


def _run(number: int, title: str, body, limit: float | None = None):
    start = time.perf_counter()
    error = None
    try:
        body()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    if error is None and limit is not None and elapsed >= limit:
        error = AssertionError(f"took {elapsed:.2f}s, limit {limit}s")
    status = "PASS" if error is None else "FAIL"
    bound = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"ACCEPTANCE {number} {status}: {title} [{elapsed:.2f}s{bound}]"
    if error is not None:
        line += f" -- {error}"
    RESULTS.append(line)
    print(line)
    if error is not None:
        raise error


def _idx(t, names):
    return tuple(t.index(x) for x in names)


# --- 1 -------------------------------------------------------------------------------


def fixture_classification():
    l5, p4, r3 = load_fixture("L5"), load_fixture("P4"), load_fixture("R3")
    assert check_law(l5, Law.LEFT_INVERTIVE).holds
    assert not check_law(l5, Law.ASSOCIATIVE).holds
    w = evaluate_law(l5, Law.ASSOCIATIVE, _idx(l5, "tty"))
    assert (w.lhs, w.rhs) == (l5.mask("yzt"), l5.mask("yt"))
    t = classify_identities(l5).elements[l5.index("t")]
    assert t.left_identity and not t.pure_left_identity
    assert classify_identities(p4).elements[p4.index("x")].pure_left_identity
    x = classify_identities(r3).elements[r3.index("x")]
    assert x.right_identity and not x.left_identity
    assert not check_law(r3, Law.ASSOCIATIVE).holds
    w = evaluate_law(r3, Law.ASSOCIATIVE, _idx(r3, "yyz"))
    assert (w.lhs, w.rhs) == (r3.mask("yz"), r3.mask("z"))


def test_criterion_1_fixture_classification():
    _run(1, "fixture classification", fixture_classification, limit=1.0)


# --- 2 -------------------------------------------------------------------------------


def intra_regularity():
    i4 = load_fixture("I4")
    assert intra_regular(i4).is_intra_regular
    for a, (x, y) in {"x": "yz", "y": "zz", "z": "yy", "w": "xz"}.items():
        assert is_intra_regular_witness(i4, i4.index(a), i4.index(x), i4.index(y))
    for name in ("K4", "A5"):
        t = load_fixture(name)
        report = intra_regular(t)
        assert not report.is_intra_regular
        assert report.failing_element == t.index("x")


def test_criterion_2_intra_regularity():
    _run(2, "intra-regularity of I4, K4, A5", intra_regularity, limit=1.0)


# --- 3 -------------------------------------------------------------------------------


def converse_counterexamples():
    for name, tid, kind in (("K4", "T10", IdealKind.GENERALIZED_BI), ("A5", "T11", IdealKind.INTERIOR)):
        t = load_fixture(name)
        v = check_converse(t, tid)
        assert v.outcome is Outcome.COUNTEREXAMPLE
        assert any(p.name == f"ideal:{kind.value}" and p.subsets == (t.mask("zw"),)
                   for p in v.certificate.premises)
        assert replay(v.certificate)


def test_criterion_3_converse_counterexamples():
    _run(3, "converse counterexamples K4/T10 and A5/T11 replay", converse_counterexamples, limit=1.0)


# --- 4 -------------------------------------------------------------------------------


def test_criterion_4_foundational_sweep(order3):
    def body():
        naive2 = [flat for flat in all_raw_tables(2)
                  if law_holds(as_sets(table_from_flat(2, flat)), "left_invertive")]
        pruned2 = list(enumerate_tables(EnumerationQuery(2)))
        assert [t.flat() for t in pruned2] == naive2
        assert len(order3) == 112_573
        report = sweep(pruned2 + order3, FOUNDATIONAL)
        for tid, tally in report.tallies.items():
            print(f"  {tid}: holds={tally.holds} vacuous={tally.vacuous} "
                  f"counterexample={tally.counterexample}")
            assert tally.counterexample == 0, tid

    _run(4, "T1-T7 have no counterexample at orders 2 and 3", body, limit=600.0)


# --- 5 -------------------------------------------------------------------------------


def test_criterion_5_deep_sweep(order3, tmp_path):
    def body():
        universe = list(enumerate_tables(EnumerationQuery(2))) + order3
        universe += [load_fixture(n) for n in FIXTURES if check_law(load_fixture(n), Law.LEFT_INVERTIVE).holds]
        universe += [gen_coset(6, 3), gen_union(4, 2)]
        first = sweep(universe, DEEP)
        second = sweep(universe, DEEP)
        assert first.to_json() == second.to_json()
        for tid, tally in first.tallies.items():
            print(f"  {tid}: non-vacuous={tally.non_vacuous} vacuous={tally.vacuous} "
                  f"counterexample={tally.counterexample}")
        print(f"  never non-vacuous: {first.flagged or 'none'}")
        paths = persist_counterexamples(first.counterexamples, tmp_path)
        assert all(replay(load_certificate(p)) for p in paths)
        print(f"  counterexamples persisted: {len(paths)}")

    _run(5, "T8-T25 sweep deterministic, vacuity reported, certificates replay", body)


# --- 6 -------------------------------------------------------------------------------


def family_generators():
    for n in range(1, 13):
        for k in range(1, n + 1):
            if n % k == 0:
                assert check_law(gen_coset(n, k), Law.LEFT_INVERTIVE).holds
                assert check_law(gen_union(n, k), Law.LEFT_INVERTIVE).holds
    assert intra_regular(gen_coset(6, 3)).is_intra_regular
    assert intra_regular(gen_union(4, 2)).is_intra_regular


def test_criterion_6_family_generators():
    _run(6, "modular families are LA for k|n<=12; coset(6,3), union(4,2) intra-regular",
         family_generators, limit=5.0)


# --- 7 -------------------------------------------------------------------------------


def _cli_text(capsys, *argv):
    assert run_cli(list(argv)) == 0
    return capsys.readouterr().out


def test_criterion_7_determinism(capsys, tmp_path):
    def body():
        for order in (2, 3):
            runs = [[t.flat() for t in enumerate_tables(EnumerationQuery(order, jobs=j))]
                    for j in (1, 2, 8)]
            assert runs[0] == runs[1] == runs[2]
        sample = [_cli_text(capsys, "enumerate", "--order", "3", "--sample", "2000", "--seed", "5",
                            "--json", "--jobs", str(j)) for j in (1, 2, 8, 1)]
        assert len(set(sample)) == 1
        for name in FIXTURES:
            path = tmp_path / f"{name}.tbl"
            path.write_text(fixture_text(name))
            a = _cli_text(capsys, "check", str(path), "--json", "--theorems")
            b = _cli_text(capsys, "check", str(path), "--json", "--theorems")
            assert a == b
        hunts = {_cli_text(capsys, "hunt", "--theorem", "T10-converse", "--order", "4",
                           "--budget", "20000", "--seed", "3", "--json") for _ in range(2)}
        assert len(hunts) == 1
        sweeps = {_cli_text(capsys, "sweep", "--order", "2", "--json", "--jobs", str(j))
                  for j in (1, 2, 8)}
        assert len(sweeps) == 1

    _run(7, "byte-identical output across 1, 2, 8 workers and repeated runs", body)


# --- 8 -------------------------------------------------------------------------------


def oracle_equivalence():
    rng = random.Random(8)
    mismatches = 0
    for i in range(1000):
        n = 1 + i % 4
        t = table_from_flat(n, random_flat(n, rng))
        T = as_sets(t)
        for law in Law:
            mismatches += check_law(t, law).holds != law_holds(T, law.value)
        for A in nonempty_subsets(n):
            m = to_mask(A)
            for kind in IdealKind:
                mismatches += is_ideal(t, kind, m).holds != ideal_holds(T, kind.value, A)
    assert mismatches == 0, f"{mismatches} mismatches"


def test_criterion_8_oracle_equivalence():
    _run(8, "1000 random tables: law and ideal verdicts equal the naive oracle", oracle_equivalence)


if __name__ == "__main__":
    # standalone: each criterion prints its own line
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
