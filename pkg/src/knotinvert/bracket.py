"""Kauffman bracket state sum and the Jones polynomial.

The Jones polynomial is the one concrete quantum invariant shipped here;
it is invariant under orientation reversal, which is the behaviour the
homomorphism counts are designed to beat.
"""

from __future__ import annotations

from .diagram import Diagram
from .laurent import LaurentPoly

MAX_CROSSINGS = 24


class CrossingLimitError(ValueError):
    """State sum would exceed the 2^MAX_CROSSINGS guard."""


def kauffman_bracket(d: Diagram) -> LaurentPoly:
    """Bracket polynomial in A over all 2^n smoothings.

    Each A-smoothing of X[a,b,c,d] joins edges (a,b) and (c,d), each
    B-smoothing joins (a,d) and (b,c); a state contributes
    A^(#A - #B) * (-A^2 - A^-2)^(loops - 1) with loops counted by
    union-find over the edge identifications.
    """
    n = len(d.crossings)
    if n == 0:
        return LaurentPoly.one()
    if n > MAX_CROSSINGS:
        raise CrossingLimitError(
            f"{n} crossings exceeds the {MAX_CROSSINGS}-crossing state-sum limit"
        )
    ec = d.edge_count
    delta = LaurentPoly((-1, 0, 0, 0, -1), -2)  # -A^2 - A^-2
    delta_pows = [LaurentPoly.one()]
    for _ in range(n):
        delta_pows.append(delta_pows[-1] * delta)

    pairs_a = [((x.a, x.b), (x.c, x.d)) for x in d.crossings]
    pairs_b = [((x.a, x.d), (x.b, x.c)) for x in d.crossings]

    total = LaurentPoly.zero()
    parent = list(range(ec + 1))

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for state in range(1 << n):
        for e in range(ec + 1):
            parent[e] = e
        exponent = 0
        for i in range(n):
            if state >> i & 1:
                (p, q), (r, s) = pairs_b[i]
                exponent -= 1
            else:
                (p, q), (r, s) = pairs_a[i]
                exponent += 1
            parent[find(p)] = find(q)
            parent[find(r)] = find(s)
        loops = len({find(e) for e in range(1, ec + 1)})
        total = total + delta_pows[loops - 1].shift(exponent)
    return total


def jones(d: Diagram) -> LaurentPoly:
    """Jones polynomial V(t): normalize the bracket by (-A^3)^(-writhe),
    then substitute t = A^-4."""
    w = d.writhe()
    f = kauffman_bracket(d).shift(-3 * w)
    if w % 2:
        f = -f
    coeffs: dict[int, int] = {}
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        e = f.min_exp + i
        if e % 4 != 0:
            raise ValueError(
                f"bracket exponent {e} not divisible by 4; diagram is not a knot"
            )
        coeffs[-e // 4] = c
    if not coeffs:
        return LaurentPoly.zero()
    lo, hi = min(coeffs), max(coeffs)
    return LaurentPoly([coeffs.get(e, 0) for e in range(lo, hi + 1)], lo)
