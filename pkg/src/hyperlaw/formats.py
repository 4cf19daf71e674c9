"""Reading and writing hypertables.

Two formats are supported:

* compact text: an optional ``elements: a b c`` header, then one row per line
  with cells separated by ``|`` and elements inside a cell by ``,``.  Lines
  starting with ``#`` are comments.  Without a header the labels are
  ``0 .. n-1``.
* a JSON document ``{"order": n, "elements": [...], "table": [[[...]]]}``
  where each cell is a list of element labels.  This one is canonical for
  round trips.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .core import HyperTable, default_labels, elements_of
from .errors import HyperlawError, TableSyntaxError

FIXTURES = ("L5", "P4", "R3", "I4", "K4", "A5")


def parse_compact(text: str) -> HyperTable:
    labels: list[str] | None = None
    rows: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("elements:"):
            if labels is not None or rows:
                raise TableSyntaxError("elements header must come first", lineno, 1)
            labels = stripped[len("elements:"):].split()
            if not labels:
                raise TableSyntaxError("empty elements header", lineno, 1)
            continue
        rows.append((lineno, line))
    if not rows:
        raise TableSyntaxError("no table rows", 1, 1)

    if labels is None:
        labels = list(default_labels(rows[0][1].count("|") + 1))
    index = {label: i for i, label in enumerate(labels)}
    n = len(labels)
    cells = []
    for lineno, line in rows:
        row = []
        col = 1
        parts = line.split("|")
        if len(parts) != n:
            raise TableSyntaxError(f"expected {n} cells, found {len(parts)}", lineno, 1)
        for part in parts:
            mask = 0
            tcol = col
            for token in part.split(","):
                name = token.strip()
                if not name:
                    raise TableSyntaxError("empty element name", lineno, tcol)
                if name not in index:
                    raise TableSyntaxError(f"unknown element {name!r}", lineno, tcol)
                mask |= 1 << index[name]
                tcol += len(token) + 1
            row.append(mask)
            col += len(part) + 1
        cells.append(tuple(row))
    if len(rows) != n:
        raise TableSyntaxError(f"expected {n} rows, found {len(rows)}", rows[-1][0], 1)
    return HyperTable(n, tuple(cells), tuple(labels))


def parse_document(doc: dict) -> HyperTable:
    try:
        n = doc["order"]
        labels = [str(x) for x in doc["elements"]]
        table = doc["table"]
    except (KeyError, TypeError) as exc:
        raise HyperlawError(f"table document missing field: {exc}") from None
    if not isinstance(n, int) or len(labels) != n or len(table) != n:
        raise HyperlawError("table document order does not match elements/table")
    index = {label: i for i, label in enumerate(labels)}
    cells = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise HyperlawError(f"row {i} has {len(row)} cells, expected {n}")
        out = []
        for j, cell in enumerate(row):
            mask = 0
            for name in cell:
                if str(name) not in index:
                    raise HyperlawError(f"cell ({i},{j}) names unknown element {name!r}")
                mask |= 1 << index[str(name)]
            out.append(mask)
        cells.append(tuple(out))
    return HyperTable(n, tuple(cells), tuple(labels))


def parse(text: str) -> HyperTable:
    """Parse either format, telling them apart by a leading ``{``."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TableSyntaxError(exc.msg, exc.lineno, exc.colno) from None
        return parse_document(doc)
    return parse_compact(text)


def to_document(t: HyperTable) -> dict:
    return {
        "order": t.n,
        "elements": list(t.labels),
        "table": [[t.names(c) for c in row] for row in t.cells],
    }


def serialize_document(t: HyperTable) -> str:
    return json.dumps(to_document(t), indent=2, ensure_ascii=False) + "\n"


def serialize_compact(t: HyperTable) -> str:
    lines = ["elements: " + " ".join(t.labels)]
    for row in t.cells:
        lines.append("|".join(",".join(t.labels[e] for e in elements_of(c)) for c in row))
    return "\n".join(lines) + "\n"


def read_table(path: str | Path) -> HyperTable:
    return parse(Path(path).read_text(encoding="utf-8"))


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise HyperlawError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return resources.files("hyperlaw").joinpath("fixtures", f"{name}.tbl").read_text(encoding="utf-8")


def load_fixture(name: str) -> HyperTable:
    return parse_compact(fixture_text(name))
