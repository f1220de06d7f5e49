"""Finite permutation groups: elements, stabilizer chains, conjugacy classes.

Permutations act on 0..degree-1 and are stored as flat image tuples;
composition is a single indexed pass.  Group order and membership come
from a deterministic (non-randomized) Schreier-Sims stabilizer chain
with base points chosen as the smallest non-fixed points, so every
computed quantity is reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .diagram import _read_data_text


class GroupFileError(ValueError):
    """Unreadable or malformed group file."""


class CycleError(ValueError):
    """Malformed disjoint-cycle notation."""


class Permutation:
    """A permutation of 0..degree-1, stored as the tuple of point images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (p * q)(x) = p(q(x))."""
        p, q = self.images, other.images
        return Permutation(p[x] for x in q)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """g * self * g^-1."""
        gi, si = g.images, self.images
        inv = [0] * len(gi)
        for i, j in enumerate(gi):
            inv[j] = i
        return Permutation(gi[si[inv[x]]] for x in range(len(gi)))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles on 0-based points, each starting at its minimum."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        n = 1
        for cyc in self.cycles():
            n = n * len(cyc) // gcd(n, len(cyc))
        return n

    def cycle_string(self) -> str:
        """Disjoint-cycle notation on 1-based points; identity is ``()``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in cyc) + ")" for cyc in cycles)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation{self.cycle_string()}"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles over 1-based points, e.g. ``(1,2,3)(4,5)``.

    ``()`` denotes the identity.
    """
    stripped = text.replace(" ", "")
    if not stripped:
        raise CycleError("empty permutation string")
    consumed = "".join(_CYCLE_RE.findall(stripped))
    if _CYCLE_RE.sub("", stripped):
        raise CycleError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    seen: set[int] = set()
    for cycle_body in _CYCLE_RE.findall(stripped):
        if not cycle_body:
            continue
        try:
            points = [int(tok) for tok in cycle_body.split(",")]
        except ValueError:
            raise CycleError(f"non-integer point in cycle ({cycle_body})") from None
        for p in points:
            if not 1 <= p <= degree:
                raise CycleError(f"point {p} outside 1..{degree}")
            if p - 1 in seen:
                raise CycleError(f"point {p} repeated")
            seen.add(p - 1)
        for i, p in enumerate(points):
            images[p - 1] = points[(i + 1) % len(points)] - 1
    return Permutation(images)


@dataclass(frozen=True)
class ConjClass:
    """A full conjugacy-class orbit with constant-time membership."""

    representative: Permutation
    members: frozenset[Permutation]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.members

    def sorted_members(self) -> list[Permutation]:
        """Canonical iteration order: sorted by image tuple."""
        return sorted(self.members)


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {base: Permutation.identity(degree)}


class PermGroup:
    """A permutation group given by generators; the stabilizer chain is
    built once on first use and the group is immutable afterwards."""

    def __init__(self, degree: int, generators, name: str | None = None):
        self.degree = int(degree)
        self.generators = tuple(generators)
        self.name = name
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError(
                    f"generator degree {g.degree} does not match group degree {self.degree}"
                )
        self._levels: list[_Level] | None = None
        self._elements: list[Permutation] | None = None
        self._classes: dict[Permutation, ConjClass] = {}

    # -- stabilizer chain ------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = _schreier_sims(self.degree, self.generators)
        return self._levels

    def order(self) -> int:
        result = 1
        for level in self._chain():
            result *= len(level.transversal)
        return result

    def sift(self, p: Permutation) -> Permutation:
        """Factor p through the chain; the residue is the identity iff p is
        a member."""
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        return _strip(self._chain(), p)[0]

    def __contains__(self, p: Permutation) -> bool:
        return self.sift(p).is_identity()

    # -- element and class enumeration ------------------------------------

    def elements(self) -> list[Permutation]:
        """All group elements, found breadth-first over generator products
        in generator-list order (deterministic; cached)."""
        if self._elements is None:
            identity = Permutation.identity(self.degree)
            seen = {identity}
            queue = [identity]
            for p in queue:
                for g in self.generators:
                    q = p * g
                    if q not in seen:
                        seen.add(q)
                        queue.append(q)
            self._elements = queue
        return self._elements

    def conjugacy_class(self, x: Permutation) -> ConjClass:
        """Orbit of x under conjugation by the group (breadth-first closure
        under conjugation by generators); materialized and cached."""
        if x.degree != self.degree:
            raise ValueError("degree mismatch")
        if x in self._classes:
            return self._classes[x]
        seen = {x}
        queue = [x]
        for p in queue:
            for g in self.generators:
                q = p.conjugate_by(g)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        cls = ConjClass(x, frozenset(seen))
        for member in seen:
            self._classes.setdefault(member, ConjClass(member, cls.members))
        return self._classes[x]

    def centralizer_order(self, x: Permutation) -> int:
        """|G| / |class(x)| by orbit-stabilizer."""
        size = len(self.conjugacy_class(x))
        order = self.order()
        assert order % size == 0
        return order // size

    def center_is_trivial(self) -> bool:
        for e in self.elements():
            if e.is_identity():
                continue
            if all(e * g == g * e for g in self.generators):
                return False
        return True

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"


def _strip(levels: list[_Level], p: Permutation) -> tuple[Permutation, int]:
    """Sift p through the chain; returns (residue, level index where stuck)."""
    for i, level in enumerate(levels):
        pt = p(level.base)
        if pt == level.base:
            continue
        rep = level.transversal.get(pt)
        if rep is None:
            return p, i
        p = rep.inverse() * p
    return p, len(levels)


def _rebuild_orbit(levels: list[_Level], i: int) -> None:
    """Recompute level i's transversal from the generators at levels >= i."""
    level = levels[i]
    gens = [g for lv in levels[i:] for g in lv.gens]
    identity_rep = level.transversal[level.base]
    level.transversal = {level.base: identity_rep}
    queue = [level.base]
    for pt in queue:
        rep = level.transversal[pt]
        for g in gens:
            q = g(pt)
            if q not in level.transversal:
                level.transversal[q] = g * rep
                queue.append(q)


def _schreier_sims(degree: int, generators) -> list[_Level]:
    """Deterministic Schreier-Sims: sift generators in, then close under
    Schreier generators until every one of them sifts to the identity.

    Degrees here are tiny, so the simple fixed-point iteration is fast and
    has no correctness subtleties.
    """
    levels: list[_Level] = []

    def add_at(i: int, g: Permutation) -> None:
        while i >= len(levels):
            base = min(p for p in range(degree) if g(p) != p)
            levels.append(_Level(base, degree))
            i = min(i, len(levels) - 1)
        levels[i].gens.append(g)
        for j in range(i + 1):
            _rebuild_orbit(levels, j)

    def sift_in(g: Permutation) -> bool:
        residue, i = _strip(levels, g)
        if residue.is_identity():
            return False
        add_at(i, residue)
        return True

    for g in generators:
        sift_in(g)

    changed = True
    while changed:
        changed = False
        for i in range(len(levels)):
            gens = [g for lv in levels[i:] for g in lv.gens]
            for pt in sorted(levels[i].transversal):
                rep = levels[i].transversal[pt]
                for g in gens:
                    target = levels[i].transversal[g(pt)]
                    schreier = target.inverse() * g * rep
                    if sift_in(schreier):
                        changed = True
        if changed:
            continue
    return levels


def subgroup_order(degree: int, gens, stop_at: int | None = None) -> int:
    """Order of the subgroup generated by ``gens`` via a fresh chain.

    With ``stop_at`` the computation returns early once the order reaches
    that bound (useful for surjectivity checks).
    """
    gens = list(gens)
    for g in gens:
        if g.degree != degree:
            raise ValueError("degree mismatch among generators")
    if stop_at is not None and len(gens) > 1:
        # Adding generators one at a time lets the early exit fire before
        # the full chain is closed.
        partial: list[Permutation] = []
        for g in gens:
            partial.append(g)
            levels = _schreier_sims(degree, partial)
            size = 1
            for level in levels:
                size *= len(level.transversal)
            if size >= stop_at:
                return size
        return size
    levels = _schreier_sims(degree, gens)
    size = 1
    for level in levels:
        size *= len(level.transversal)
    return size


def group_order(g: PermGroup) -> int:
    if not g.generators:
        raise ValueError("group_order requires a nonempty generator list")
    return g.order()


def conjugacy_class(g: PermGroup, x: Permutation) -> ConjClass:
    return g.conjugacy_class(x)


def centralizer_order(g: PermGroup, x: Permutation) -> int:
    return g.centralizer_order(x)


def order_of_element(p: Permutation) -> int:
    return p.order()


def find_class_rep(g: PermGroup, n: int) -> Permutation | None:
    """First element of order exactly n in breadth-first product order;
    None when no element has that order."""
    if n < 1:
        raise ValueError("element order must be >= 1")
    for e in g.elements():
        if e.order() == n:
            return e
    return None


def load_group_file(text: str, name: str | None = None) -> PermGroup:
    """Parse the group file format: line 1 ``degree N``, then one generator
    per non-comment line in disjoint-cycle notation; ``#`` starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GroupFileError("empty group file")
    m = re.fullmatch(r"degree\s+(\d+)", lines[0])
    if not m:
        raise GroupFileError(f"first line must be 'degree N', got {lines[0]!r}")
    degree = int(m.group(1))
    if degree < 1:
        raise GroupFileError("degree must be positive")
    gens = []
    for line in lines[1:]:
        try:
            gens.append(parse_cycles(line, degree))
        except CycleError as exc:
            raise GroupFileError(f"bad generator line {line!r}: {exc}") from exc
    if not gens:
        raise GroupFileError("group file has no generators")
    return PermGroup(degree, gens, name=name)


def _symmetric(n: int) -> PermGroup:
    gens = [parse_cycles("(" + ",".join(str(i) for i in range(1, n + 1)) + ")", n)]
    if n >= 2:
        gens.append(parse_cycles("(1,2)", n))
    return PermGroup(n, gens, name=f"s{n}")


def _alternating(n: int) -> PermGroup:
    threes = ["(" + f"{i},{i + 1},{i + 2}" + ")" for i in range(1, n - 1)]
    gens = [parse_cycles(c, n) for c in threes]
    return PermGroup(n, gens, name=f"a{n}")


@lru_cache(maxsize=None)
def builtin_group(name: str) -> PermGroup:
    """Look up a built-in group by name, or load a ``.grp`` file by path.

    Built-ins: m11 (from the bundled data file), s3..s8, a4..a8, d4
    (dihedral of order 8 on 4 points).
    """
    key = name.lower()
    m = re.fullmatch(r"s([3-8])", key)
    if m:
        return _symmetric(int(m.group(1)))
    m = re.fullmatch(r"a([4-8])", key)
    if m:
        return _alternating(int(m.group(1)))
    if key == "d4":
        return PermGroup(
            4, [parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)], name="d4"
        )
    if key == "m11":
        return load_group_file(_read_data_text("m11.grp"), name="m11")
    try:
        with open(name, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GroupFileError(
            f"unknown group {name!r} and not a readable group file: {exc}"
        ) from exc
    return load_group_file(text, name=name)
