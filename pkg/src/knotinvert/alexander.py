"""Alexander polynomial via Fox calculus on the Wirtinger presentation.

The polynomial satisfies Delta(t) = Delta(t^-1), which is exactly why it
cannot see orientation reversal; computing it here makes that blindness
checkable against the homomorphism-counting route.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .wirtinger import Relation, WirtingerPresentation


class SingularPresentationError(ValueError):
    """The Alexander matrix minor has zero determinant (the PD code does
    not describe a knot)."""


def _relator_word(r: Relation) -> list[tuple[int, int]]:
    """The relator over^s . u_in . over^-s . u_out^-1 as (arc, exponent) letters."""
    return [(r.over, r.sign), (r.u_in, 1), (r.over, -r.sign), (r.u_out, -1)]


def _fox_row(word: list[tuple[int, int]], arc_count: int) -> list[LaurentPoly]:
    """Fox derivatives of a word with every generator abelianized to t.

    Rules: d(uv)/dx = du/dx + ab(u) dv/dx, dx/dx = 1, d(x^-1)/dx = -t^-1
    evaluated at the prefix; letters with other generators contribute 0.
    """
    row = [LaurentPoly.zero() for _ in range(arc_count)]
    exp = 0  # abelianized prefix is t^exp
    for arc, e in word:
        if e == 1:
            row[arc] = row[arc] + LaurentPoly.term(1, exp)
            exp += 1
        else:
            exp -= 1
            row[arc] = row[arc] - LaurentPoly.term(1, exp)
    return row


def fox_matrix(p: WirtingerPresentation) -> list[list[LaurentPoly]]:
    """The full n x n Alexander matrix (one Fox-derivative row per relator)."""
    if not p.relations:
        raise ValueError("unknot presentation has no relations; Delta = 1")
    return [_fox_row(_relator_word(r), p.arc_count) for r in p.relations]


def _bareiss_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant over the integer Laurent ring."""
    n = len(m)
    if n == 0:
        return LaurentPoly.one()
    m = [row[:] for row in m]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev)
            m[i][k] = LaurentPoly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _normalize(poly: LaurentPoly) -> LaurentPoly:
    """Scale by +-t^k so min_exp = 0 and the constant coefficient is positive."""
    if poly.is_zero():
        return poly
    poly = poly.shift(-poly.min_exp)
    if poly.coeffs[0] < 0:
        poly = -poly
    return poly


def alexander_poly(p: WirtingerPresentation, drop_row: int | None = None) -> LaurentPoly:
    """Normalized Alexander polynomial from the Wirtinger presentation.

    Deletes one relator row (the last by default; ``drop_row`` overrides,
    and the result is independent of the choice) and the meridian's
    generator column, then takes the fraction-free determinant.
    """
    if not p.relations:
        return LaurentPoly.one()
    matrix = fox_matrix(p)
    if drop_row is None:
        drop_row = len(matrix) - 1
    minor = [
        [entry for j, entry in enumerate(row) if j != p.meridian]
        for i, row in enumerate(matrix)
        if i != drop_row
    ]
    det = _bareiss_det(minor)
    if det.is_zero():
        raise SingularPresentationError(
            "Alexander minor is singular; the diagram code is not realizable as a knot"
        )
    return _normalize(det)


def is_symmetric(poly: LaurentPoly) -> bool:
    """True iff Delta(t) = Delta(t^-1) up to the standard normalization,
    i.e. the coefficient array is palindromic."""
    return poly.is_palindromic()
