"""Braid-word closures as PD diagrams (internal utility).

Words are sequences of nonzero ints: +j is the Artin generator taking
the strand at position j over position j+1, -j its inverse.  The
closure is traversed to number edges along the knot, so the resulting
PD code always satisfies the diagram invariants; this is how the
bundled knot table was generated and how tests obtain realizable
random diagrams.
"""

from __future__ import annotations

from .diagram import Crossing, Diagram


def strand_permutation(word: list[int], strands: int) -> list[int]:
    """Position map of the braid (0-based); the closure is a knot iff this
    is a single cycle."""
    perm = list(range(strands))
    for letter in word:
        j = abs(letter) - 1
        perm[j], perm[j + 1] = perm[j + 1], perm[j]
    return perm


def closure_is_knot(word: list[int], strands: int) -> bool:
    perm = strand_permutation(word, strands)
    seen = 0
    p = 0
    for _ in range(strands):
        p = perm[p]
        seen += 1
        if p == 0:
            break
    return seen == strands


def closure_pd(word: list[int], strands: int | None = None, name: str | None = None) -> Diagram:
    """PD diagram of the braid closure (must be a single component)."""
    word = list(word)
    if strands is None:
        strands = max(abs(w) for w in word) + 1 if word else 1
    if not word:
        return Diagram((), name=name)
    if not closure_is_knot(word, strands):
        raise ValueError("braid closure is a link, not a knot")

    m = len(word)
    # Traverse the closure, recording each crossing passage as
    # (crossing index, entered-on-left).  Edge t (1-based) enters
    # passage t; the exit edge of passage t is t+1 (mod 2m).
    passages: list[tuple[int, bool]] = []
    level, pos = 0, 0
    for _ in range(2 * m):
        i = level
        while True:
            if i == m:
                i = 0
                pos = pos  # closure arc returns to the top, same position
            j = abs(word[i]) - 1
            if pos == j or pos == j + 1:
                break
            i += 1
        passages.append((i, pos == j))
        pos = j + 1 if pos == j else j
        level = i + 1

    entry_left: dict[int, int] = {}
    entry_right: dict[int, int] = {}
    for t, (i, on_left) in enumerate(passages, start=1):
        (entry_left if on_left else entry_right)[i] = t

    def succ(e: int) -> int:
        return e % (2 * m) + 1

    crossings = []
    for i, letter in enumerate(word):
        tl, tr = entry_left[i], entry_right[i]
        if letter > 0:
            # left strand passes over: under-in at top right
            crossings.append(Crossing(tr, succ(tl), succ(tr), tl))
        else:
            crossings.append(Crossing(tl, tr, succ(tl), succ(tr)))
    return Diagram(tuple(crossings), name=name)
