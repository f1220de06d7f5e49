"""Wirtinger presentation of the knot group, with peripheral system.

Generators are the arcs of the diagram (maximal over-strand runs); each
crossing contributes one conjugation relation.  The meridian is the arc
containing edge 1 and the longitude is the untwisted (nullhomologous)
longitude based at that arc.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram


@dataclass(frozen=True)
class Relation:
    """u_out = over^sign . u_in . over^-sign   (arc indices, 0-based)."""

    over: int
    u_in: int
    u_out: int
    sign: int

    def arcs(self) -> tuple[int, int, int]:
        return (self.over, self.u_in, self.u_out)


@dataclass(frozen=True)
class WirtingerPresentation:
    """Knot group data: generators x1..x_arc_count, conjugation relations,
    meridian arc, and longitude word as (arc, exponent) pairs.

    The last longitude entry is the correction term (meridian, -writhe),
    present whenever the diagram has crossings; the total exponent sum of
    the word is 0.
    """

    arc_count: int
    relations: tuple[Relation, ...]
    meridian: int
    longitude: tuple[tuple[int, int], ...]

    @property
    def crossing_count(self) -> int:
        return len(self.relations)


def presentation(d: Diagram) -> WirtingerPresentation:
    """Build the Wirtinger presentation of a diagram's knot group."""
    n = len(d.crossings)
    if n == 0:
        return WirtingerPresentation(1, (), 0, ())
    ec = d.edge_count

    # The transition edge e -> succ(e) continues an arc iff the strand
    # passes over at the crossing where it happens.
    joins = [False] * (ec + 1)
    under_in_at: dict[int, int] = {}
    for i, x in enumerate(d.crossings):
        joins[d.over_in(x)] = True
        under_in_at[x.a] = i

    arc_of_edge = [0] * (ec + 1)
    starts = sorted(x.c for x in d.crossings)  # each arc starts at an under-out edge
    runs = []
    for start in starts:
        run = [start]
        e = start
        while joins[e]:
            e = e % ec + 1
            run.append(e)
        runs.append(run)
    runs.sort(key=min)
    for idx, run in enumerate(runs):
        for e in run:
            arc_of_edge[e] = idx

    signs = d.signs()
    relations = tuple(
        Relation(
            over=arc_of_edge[d.over_in(x)],
            u_in=arc_of_edge[x.a],
            u_out=arc_of_edge[x.c],
            sign=signs[i],
        )
        for i, x in enumerate(d.crossings)
    )
    meridian = arc_of_edge[1]

    # Longitude: one over-arc factor per under-passage, in traversal order
    # from edge 1, then the meridian correction that kills the homology
    # class.  The factor exponent is minus the crossing sign: that is the
    # choice consistent with the relation convention above, pinned by the
    # requirement that meridian and longitude images always commute.
    longitude = []
    for e in range(1, ec + 1):
        if e in under_in_at:
            i = under_in_at[e]
            longitude.append((relations[i].over, -signs[i]))
    longitude.append((meridian, d.writhe()))

    return WirtingerPresentation(n, relations, meridian, tuple(longitude))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def validate(p: WirtingerPresentation) -> list[CheckResult]:
    """Structural sanity checks; returns findings instead of raising."""
    results = []

    total = sum(e for _, e in p.longitude)
    results.append(
        CheckResult(
            "longitude_exponent_sum_zero",
            total == 0,
            f"exponent sum {total}",
        )
    )

    if p.relations:
        in_counts = [0] * p.arc_count
        out_counts = [0] * p.arc_count
        for r in p.relations:
            in_counts[r.u_in] += 1
            out_counts[r.u_out] += 1
        ok = all(c == 1 for c in in_counts) and all(c == 1 for c in out_counts)
        results.append(
            CheckResult(
                "each_arc_under_in_and_out_once",
                ok,
                f"u_in counts {in_counts}, u_out counts {out_counts}" if not ok else "",
            )
        )

    # Abelianized relations identify u_in with u_out; the quotient is Z
    # exactly when that identification connects all arcs.
    parent = list(range(p.arc_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for r in p.relations:
        parent[find(r.u_in)] = find(r.u_out)
    components = len({find(a) for a in range(p.arc_count)})
    results.append(
        CheckResult(
            "abelianization_rank_one",
            components == 1,
            f"{components} components",
        )
    )
    return results


def _word_str(word: tuple[tuple[int, int], ...]) -> str:
    if not word:
        return "1"
    parts = []
    for arc, exp in word:
        parts.append(f"x{arc + 1}" if exp == 1 else f"x{arc + 1}^{exp}")
    return " ".join(parts)


def format_presentation(p: WirtingerPresentation) -> str:
    """Render the presentation in the documented text form.

    Generators print as x1..xn; a relation prints as
    ``x_out = x_over x_in x_over^-1`` (sign +1) or
    ``x_out = x_over^-1 x_in x_over`` (sign -1); the longitude prints as a
    word of ``xi^e`` factors (exponent 1 bare, final factor is the
    meridian correction), or ``1`` when empty.
    """
    lines = [f"generators: {' '.join(f'x{i + 1}' for i in range(p.arc_count))}"]
    lines.append(f"meridian: x{p.meridian + 1}")
    lines.append("relations:")
    for r in p.relations:
        o, i, u = f"x{r.over + 1}", f"x{r.u_in + 1}", f"x{r.u_out + 1}"
        if r.sign == 1:
            lines.append(f"  {u} = {o} {i} {o}^-1")
        else:
            lines.append(f"  {u} = {o}^-1 {i} {o}")
    lines.append(f"longitude: {_word_str(p.longitude)}")
    return "\n".join(lines)
