"""Oriented knot diagrams as PD codes, plus the bundled knot table.

A diagram is a list of crossings ``X[a,b,c,d]`` over edges numbered
1..2n along the knot.  ``a`` is the incoming under-edge, ``b,c,d``
follow counterclockwise, so the under-strand runs a -> c and the
over-strand occupies {b, d}.  Which of b, d is the incoming over-edge
is recovered from the edge numbering: the over-strand, like the under
one, advances the traversal by one step.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from importlib import resources

DATA_ENV_VAR = "KNOTINVERT_DATA"


class PDError(ValueError):
    """Malformed PD code or violated diagram invariant."""


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    c: int
    d: int

    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"X[{self.a},{self.b},{self.c},{self.d}]"


def _succ(e: int, edge_count: int) -> int:
    return e % edge_count + 1


def _over_in(x: Crossing, edge_count: int) -> int:
    """The incoming over-edge of x (the over-strand runs over_in -> succ)."""
    candidates = []
    if x.b == _succ(x.d, edge_count) and (x.d, x.b) != (x.a, x.c):
        candidates.append(x.d)
    if x.d == _succ(x.b, edge_count) and (x.b, x.d) != (x.a, x.c):
        candidates.append(x.b)
    if len(candidates) != 1:
        raise PDError(
            f"crossing {x}: cannot orient the over-strand "
            f"(edge numbering does not advance through exactly one of b, d)"
        )
    return candidates[0]


@dataclass(frozen=True)
class Diagram:
    """An oriented knot diagram. Immutable; 0 crossings is the unknot."""

    crossings: tuple[Crossing, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.crossings)
        ec = 2 * n
        seen: dict[int, int] = {}
        for x in self.crossings:
            for e in x.labels():
                if not 1 <= e <= ec:
                    raise PDError(f"crossing {x}: edge {e} outside 1..{ec}")
                seen[e] = seen.get(e, 0) + 1
        for e in range(1, ec + 1):
            if seen.get(e, 0) != 2:
                raise PDError(
                    f"edge {e} appears {seen.get(e, 0)} times (each edge must appear exactly twice)"
                )
        sources = []
        for x in self.crossings:
            if x.c != _succ(x.a, ec):
                raise PDError(
                    f"crossing {x}: under-strand must advance the traversal "
                    f"(expected c = {_succ(x.a, ec)}, got {x.c})"
                )
            sources.append(x.a)
            sources.append(_over_in(x, ec))
        if sorted(sources) != list(range(1, ec + 1)):
            raise PDError("edges do not form a single closed traversal")

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    def signs(self) -> tuple[int, ...]:
        """Crossing signs: +1 when the over-strand runs d -> b, else -1."""
        ec = self.edge_count
        return tuple(+1 if _over_in(x, ec) == x.d else -1 for x in self.crossings)

    def writhe(self) -> int:
        return sum(self.signs())

    def over_in(self, x: Crossing) -> int:
        return _over_in(x, self.edge_count)

    def pd_text(self) -> str:
        return " ".join(str(x) for x in self.crossings)

    def reverse(self) -> "Diagram":
        """The same curve with orientation reversed (the inverse knot -K)."""
        ec = self.edge_count
        new = lambda e: ec + 1 - e
        xs = tuple(
            Crossing(new(x.c), new(x.d), new(x.a), new(x.b)) for x in self.crossings
        )
        return Diagram(xs, name=None if self.name is None else f"{self.name}*rev")

    def mirror(self) -> "Diagram":
        """All crossings switched over<->under; every sign negates."""
        ec = self.edge_count
        xs = []
        for x in self.crossings:
            if _over_in(x, ec) == x.d:
                xs.append(Crossing(x.d, x.a, x.b, x.c))
            else:
                xs.append(Crossing(x.b, x.c, x.d, x.a))
        return Diagram(tuple(xs), name=None if self.name is None else f"{self.name}*mir")

    def canonical_form(self) -> tuple:
        """Equality key invariant under cyclic renumbering of the edges."""
        n = len(self.crossings)
        if n == 0:
            return ()
        ec = self.edge_count
        best = None
        for s in range(ec):
            rel = lambda e: (e - 1 - s) % ec + 1
            key = tuple(
                sorted((rel(x.a), rel(x.b), rel(x.c), rel(x.d)) for x in self.crossings)
            )
            if best is None or key < best:
                best = key
        return best

    def __str__(self) -> str:
        label = self.name or "diagram"
        return f"{label}: {len(self.crossings)} crossings, writhe {self.writhe()}"


_TERM_RE = re.compile(r"X\[(-?\d+),(-?\d+),(-?\d+),(-?\d+)\]\Z")


def parse_pd(text: str, name: str | None = None) -> Diagram:
    """Parse whitespace-separated ``X[a,b,c,d]`` terms into a Diagram.

    An empty string denotes the unknot.
    """
    crossings = []
    for term in text.split():
        m = _TERM_RE.match(term)
        if not m:
            raise PDError(f"bad PD term {term!r} (expected X[a,b,c,d])")
        a, b, c, d = (int(g) for g in m.groups())
        crossings.append(Crossing(a, b, c, d))
    return Diagram(tuple(crossings), name=name)


def writhe(d: Diagram) -> int:
    return d.writhe()


def reverse(d: Diagram) -> Diagram:
    return d.reverse()


def mirror(d: Diagram) -> Diagram:
    return d.mirror()


def _data_root():
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        return override
    return resources.files("knotinvert") / "data"


def _read_data_text(filename: str) -> str:
    root = _data_root()
    if isinstance(root, str):
        with open(os.path.join(root, filename), encoding="utf-8") as fh:
            return fh.read()
    return (root / filename).read_text(encoding="utf-8")


def _load_table() -> dict[str, str]:
    # parsed per call so a KNOTINVERT_DATA override takes effect immediately
    table: dict[str, str] = {}
    for line in _read_data_text("knots.txt").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        table[parts[0]] = parts[1] if len(parts) > 1 else ""
    return table


def table_names() -> list[str]:
    return sorted(_load_table())


def table_lookup(name: str) -> Diagram:
    """Load a named knot from the bundled table (see data/knots.txt)."""
    table = _load_table()
    if name not in table:
        raise PDError(
            f"unknown knot {name!r}; available: {', '.join(sorted(table))}"
        )
    return parse_pd(table[name], name=name)
