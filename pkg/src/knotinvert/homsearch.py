"""Count homomorphisms from a Wirtinger-presented knot group to a finite
permutation group, with the meridian pinned to a chosen element.

Every generator of a knot group is a meridian, so all generator images
must lie in the conjugacy class of the chosen element; the search
branches over that class and propagates the crossing relations.  A
greedy schedule keeps the branching depth tiny (for well-ordered
diagrams only two or three generators are free), and the innermost
branch is evaluated for all class members at once with numpy.

Comparing counts for meridian targets g and g^-1, refined by the
longitude image, obstructs invertibility: an orientation-reversing
symmetry would have to match them up.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .permgroup import ConjClass, PermGroup, Permutation, subgroup_order
from .wirtinger import WirtingerPresentation

# Full k x k conjugation tables are materialized up to this class size;
# beyond it rows are built on demand.
_FULL_TABLE_LIMIT = 2048


class NotInGroupError(ValueError):
    """Meridian image fails the membership sift."""


@dataclass(frozen=True)
class SearchSpec:
    presentation: WirtingerPresentation
    group: PermGroup
    meridian_image: Permutation
    epi_only: bool = False
    collect_longitudes: bool = True
    threads: int = 1


@dataclass
class HomCountReport:
    """Exact counts for one meridian target.

    longitude_breakdown maps each longitude image h to the number of
    homomorphisms sending (meridian, longitude) to (g, h); it sums to
    hom_count.  orbit_count is epi_count divided by the centralizer
    order when that division is exact, else None.
    """

    meridian_image: Permutation
    hom_count: int
    epi_count: int
    longitude_breakdown: dict[Permutation, int] | None
    orbit_count: int | None
    nodes_visited: int
    elapsed: float

    def counts_equal(self, other: "HomCountReport") -> bool:
        return self.hom_count == other.hom_count and self.epi_count == other.epi_count


# -- search schedule -----------------------------------------------------


@dataclass(frozen=True)
class Assign:
    arc: int


@dataclass(frozen=True)
class Propagate:
    relation: int
    target: str | None  # "u_out", "u_in", or None for a consistency check


@dataclass(frozen=True)
class Schedule:
    steps: tuple
    assigned_arcs: tuple[int, ...]

    @property
    def branching_assigns(self) -> int:
        return len(self.assigned_arcs) - 1


def plan_order(p: WirtingerPresentation, meridian: int | None = None) -> Schedule:
    """Greedy unit-propagation schedule.

    Start from the meridian; while any relation can determine its one
    unknown under-arc (or has become a pure check), emit a Propagate.
    When stuck, assign the unknown arc completing the most two-known
    relations (ties to the lowest arc index).  Relations whose only
    unknown is the over-arc are never solved, only checked once the
    over-arc is known: solving them would fan out over the whole class.
    """
    if meridian is None:
        meridian = p.meridian
    known = [False] * p.arc_count
    known[meridian] = True
    steps: list = [Assign(meridian)]
    assigned = [meridian]
    emitted = [False] * len(p.relations)

    def fire_one() -> bool:
        for ri, r in enumerate(p.relations):
            if emitted[ri]:
                continue
            unknown = [slot for slot in ("over", "u_in", "u_out") if not known[getattr(r, slot)]]
            if not unknown:
                steps.append(Propagate(ri, None))
                emitted[ri] = True
                return True
            if len(unknown) == 1 and unknown[0] in ("u_in", "u_out"):
                steps.append(Propagate(ri, unknown[0]))
                known[getattr(r, unknown[0])] = True
                emitted[ri] = True
                return True
        return False

    while True:
        while fire_one():
            pass
        if all(emitted):
            break
        scores = [0] * p.arc_count
        for ri, r in enumerate(p.relations):
            if emitted[ri]:
                continue
            unknown = [getattr(r, slot) for slot in ("over", "u_in", "u_out") if not known[getattr(r, slot)]]
            if len(unknown) == 1:
                scores[unknown[0]] += 1
        candidates = [a for a in range(p.arc_count) if not known[a]]
        if not candidates:
            raise AssertionError("relations left but every arc is known")
        best = max(candidates, key=lambda a: (scores[a], -a))
        steps.append(Assign(best))
        assigned.append(best)
        known[best] = True

    return Schedule(tuple(steps), tuple(assigned))


# -- conjugation tables ---------------------------------------------------


class _ConjTables:
    """Conjugation action of class members on the class, as index maps.

    row(o)[u]  = index of  o . u . o^-1
    irow(o)[u] = index of  o^-1 . u . o
    """

    def __init__(self, members: list[Permutation]):
        self.k = len(members)
        self.members = members
        self.images = np.array([m.images for m in members], dtype=np.int32)
        self.inv_images = np.array([m.inverse().images for m in members], dtype=np.int32)
        self.index = {m.images: i for i, m in enumerate(members)}
        self._rows: dict[int, np.ndarray] = {}
        self._irows: dict[int, np.ndarray] = {}
        self._matrix: np.ndarray | None = None
        self._imatrix: np.ndarray | None = None

    def row(self, o: int) -> np.ndarray:
        cached = self._rows.get(o)
        if cached is None:
            conj = self.images[o][self.images[:, self.inv_images[o]]]
            cached = np.fromiter(
                (self.index[tuple(r)] for r in conj.tolist()), dtype=np.int32, count=self.k
            )
            self._rows[o] = cached
        return cached

    def irow(self, o: int) -> np.ndarray:
        cached = self._irows.get(o)
        if cached is None:
            cached = np.empty(self.k, dtype=np.int32)
            cached[self.row(o)] = np.arange(self.k, dtype=np.int32)
            self._irows[o] = cached
        return cached

    def matrix(self) -> np.ndarray:
        if self._matrix is None:
            if self.k > _FULL_TABLE_LIMIT:
                raise RuntimeError(
                    f"class size {self.k} too large for a full conjugation table"
                )
            self._matrix = np.stack([self.row(o) for o in range(self.k)])
        return self._matrix

    def imatrix(self) -> np.ndarray:
        if self._imatrix is None:
            self._imatrix = np.stack([self.irow(o) for o in range(self.k)])
        return self._imatrix


# -- the engine ------------------------------------------------------------


class _Engine:
    def __init__(self, spec: SearchSpec, cls: ConjClass, schedule: Schedule):
        self.spec = spec
        self.p = spec.presentation
        self.schedule = schedule
        self.members = cls.sorted_members()
        self.tables = _ConjTables(self.members)
        self.g_index = self.tables.index[spec.meridian_image.images]
        self.group_order = spec.group.order()
        # segments[i] = propagation steps to run after the i-th Assign
        self.segments: list[list[Propagate]] = []
        for step in schedule.steps:
            if isinstance(step, Assign):
                self.segments.append([])
            else:
                self.segments[-1].append(step)
        self.arcs = schedule.assigned_arcs
        self.hom_count = 0
        self.epi_count = 0
        self.breakdown: dict[Permutation, int] = {}
        self.nodes = 0

    # scalar propagation between branch levels
    def _run_scalar_segment(self, seg_index: int, vals: list) -> bool:
        for step in self.segments[seg_index]:
            r = self.p.relations[step.relation]
            o = vals[r.over]
            if step.target == "u_out":
                row = self.tables.row(o) if r.sign == 1 else self.tables.irow(o)
                vals[r.u_out] = int(row[vals[r.u_in]])
            elif step.target == "u_in":
                row = self.tables.irow(o) if r.sign == 1 else self.tables.row(o)
                vals[r.u_in] = int(row[vals[r.u_out]])
            else:
                row = self.tables.row(o) if r.sign == 1 else self.tables.irow(o)
                if vals[r.u_out] != int(row[vals[r.u_in]]):
                    return False
        return True

    # vectorized innermost level: evaluate all candidate members at once
    def _run_vector_level(self, level: int, vals: list, choices=None) -> None:
        if choices is None:
            candidates = np.arange(self.tables.k, dtype=np.int32)
        else:
            candidates = np.asarray(list(choices), dtype=np.int32)
        self.nodes += len(candidates)
        arc = self.arcs[level]
        vvals: list = list(vals)
        vvals[arc] = candidates
        alive = np.ones(len(candidates), dtype=bool)

        def fetch(rule_sign: int, o, u):
            # rule_sign +1 means conjugate by o, -1 by o^-1
            if isinstance(o, np.ndarray):
                mat = self.tables.matrix() if rule_sign == 1 else self.tables.imatrix()
                return mat[o, u]
            row = self.tables.row(o) if rule_sign == 1 else self.tables.irow(o)
            return row[u]

        for step in self.segments[level]:
            r = self.p.relations[step.relation]
            o, uin, uout = vvals[r.over], vvals[r.u_in], vvals[r.u_out]
            if step.target == "u_out":
                vvals[r.u_out] = fetch(r.sign, o, uin)
            elif step.target == "u_in":
                vvals[r.u_in] = fetch(-r.sign, o, uout)
            else:
                expected = fetch(r.sign, o, uin)
                ok = expected == uout
                alive &= ok if isinstance(ok, np.ndarray) else bool(ok)
                if isinstance(alive, np.ndarray) and not alive.any():
                    return
        for idx in np.flatnonzero(alive):
            leaf = [v[idx] if isinstance(v, np.ndarray) else v for v in vvals]
            self._finalize(leaf)

    def _descend(self, level: int, vals: list, choices=None) -> None:
        arc = self.arcs[level]
        last = level == len(self.arcs) - 1
        if last and level > 0:
            self._run_vector_level(level, vals, choices)
            return
        if choices is None:
            choices = [self.g_index] if level == 0 else range(self.tables.k)
        for value in choices:
            self.nodes += 1
            branch = list(vals)
            branch[arc] = value
            if not self._run_scalar_segment(level, branch):
                continue
            if last:
                self._finalize(branch)
            else:
                self._descend(level + 1, branch)

    def _finalize(self, vals: list) -> None:
        perms = [self.members[v] for v in vals]
        # full re-check of every relation on the complete assignment
        for r in self.p.relations:
            o = perms[r.over] if r.sign == 1 else perms[r.over].inverse()
            if perms[r.u_out] != o * perms[r.u_in] * o.inverse():
                return
        self.hom_count += 1
        image_gens = sorted(set(perms))
        order = subgroup_order(self.spec.group.degree, image_gens, stop_at=self.group_order)
        if order == self.group_order:
            self.epi_count += 1
        if self.spec.collect_longitudes:
            h = Permutation.identity(self.spec.group.degree)
            for arc, exp in self.p.longitude:
                h = h * perms[arc] ** exp
            self.breakdown[h] = self.breakdown.get(h, 0) + 1


def _search_chunk(spec: SearchSpec, cls: ConjClass, schedule: Schedule, vals: list, choices) -> _Engine:
    engine = _Engine(spec, cls, schedule)
    engine._descend(1, vals, choices=choices)
    return engine


def count_homs(spec: SearchSpec) -> HomCountReport:
    """Exact, deterministic homomorphism counts for one meridian target."""
    start = time.perf_counter()
    group = spec.group
    if spec.meridian_image.degree != group.degree:
        raise NotInGroupError("meridian image degree does not match the group")
    if not group.sift(spec.meridian_image).is_identity():
        raise NotInGroupError("meridian image is not a member of the group")
    cls = group.conjugacy_class(spec.meridian_image)
    schedule = plan_order(spec.presentation)

    engine = _Engine(spec, cls, schedule)
    vals: list = [None] * spec.presentation.arc_count
    vals[schedule.assigned_arcs[0]] = engine.g_index
    engine.nodes += 1
    root_ok = engine._run_scalar_segment(0, vals)

    if root_ok and len(schedule.assigned_arcs) == 1:
        engine._finalize(vals)
    elif root_ok:
        k = engine.tables.k
        threads = max(1, spec.threads)
        if threads == 1 or k < 2 * threads:
            engine._descend(1, vals)
        else:
            bounds = [k * i // threads for i in range(threads + 1)]
            chunks = [range(bounds[i], bounds[i + 1]) for i in range(threads)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(
                    pool.map(
                        lambda c: _search_chunk(spec, cls, schedule, list(vals), c),
                        chunks,
                    )
                )
            for part in parts:
                engine.hom_count += part.hom_count
                engine.epi_count += part.epi_count
                engine.nodes += part.nodes
                for h, c in part.breakdown.items():
                    engine.breakdown[h] = engine.breakdown.get(h, 0) + c

    orbit_count = None
    cent = group.centralizer_order(spec.meridian_image)
    if engine.epi_count % cent == 0:
        orbit_count = engine.epi_count // cent
    breakdown = dict(sorted(engine.breakdown.items())) if spec.collect_longitudes else None
    return HomCountReport(
        meridian_image=spec.meridian_image,
        hom_count=engine.hom_count,
        epi_count=engine.epi_count,
        longitude_breakdown=breakdown,
        orbit_count=orbit_count,
        nodes_visited=engine.nodes,
        elapsed=time.perf_counter() - start,
    )


# -- invertibility --------------------------------------------------------


class Verdict(Enum):
    NON_INVERTIBLE = "NonInvertible"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class InvertibilityResult:
    verdict: Verdict
    forward: HomCountReport
    backward: HomCountReport
    reasons: list[str] = field(default_factory=list)


def invertibility_test(
    p: WirtingerPresentation,
    group: PermGroup,
    x: Permutation,
    threads: int = 1,
) -> InvertibilityResult:
    """Compare counts for meridian -> x against meridian -> x^-1.

    Any mismatch (in totals, or between the (x, h) and (x^-1, h^-1)
    longitude-refined counts) certifies non-invertibility; agreement is
    only ever Inconclusive, since the obstruction is one-sided.
    """
    fwd = count_homs(SearchSpec(p, group, x, collect_longitudes=True, threads=threads))
    bwd = count_homs(
        SearchSpec(p, group, x.inverse(), collect_longitudes=True, threads=threads)
    )
    reasons = []
    if fwd.hom_count != bwd.hom_count:
        reasons.append(f"hom counts differ: {fwd.hom_count} vs {bwd.hom_count}")
    if fwd.epi_count != bwd.epi_count:
        reasons.append(f"epi counts differ: {fwd.epi_count} vs {bwd.epi_count}")
    paired = set(fwd.longitude_breakdown) | {h.inverse() for h in bwd.longitude_breakdown}
    for h in sorted(paired):
        a = fwd.longitude_breakdown.get(h, 0)
        b = bwd.longitude_breakdown.get(h.inverse(), 0)
        if a != b:
            reasons.append(
                f"longitude-refined counts differ at h = {h.cycle_string()}: {a} vs {b}"
            )
    verdict = Verdict.NON_INVERTIBLE if reasons else Verdict.INCONCLUSIVE
    return InvertibilityResult(verdict, fwd, bwd, reasons)


def orbit_reduce(report: HomCountReport, group: PermGroup, x: Permutation) -> int:
    """Epimorphism count up to conjugation: epi_count / |centralizer(x)|.

    Requires a trivial center (then the centralizer acts freely on the
    epimorphisms with meridian image x) and exact division.
    """
    if not group.center_is_trivial():
        raise ValueError("orbit reduction requires a group with trivial center")
    cent = group.centralizer_order(x)
    if report.epi_count % cent != 0:
        raise ValueError(
            f"epi count {report.epi_count} not divisible by centralizer order {cent}"
        )
    return report.epi_count // cent
