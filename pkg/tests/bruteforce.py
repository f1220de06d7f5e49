"""Independent brute-force oracle for homomorphism counting.

Deliberately shares nothing with the engine: no schedule, no
propagation, no conjugation tables.  Every map from the non-meridian
arcs into the meridian's conjugacy class is enumerated and the
relations are checked directly with permutation arithmetic.
"""

import itertools

from knotinvert.permgroup import PermGroup, Permutation, subgroup_order
from knotinvert.wirtinger import WirtingerPresentation


def brute_hom_counts(
    p: WirtingerPresentation, group: PermGroup, g: Permutation
) -> tuple[int, int, dict[Permutation, int]]:
    """(hom_count, epi_count, longitude breakdown) with meridian -> g."""
    cls = sorted(group.conjugacy_class(g).members)
    free = [a for a in range(p.arc_count) if a != p.meridian]
    hom = epi = 0
    breakdown: dict[Permutation, int] = {}
    target = group.order()
    for combo in itertools.product(cls, repeat=len(free)):
        vals: list = [None] * p.arc_count
        vals[p.meridian] = g
        for arc, v in zip(free, combo):
            vals[arc] = v
        ok = True
        for r in p.relations:
            o = vals[r.over] if r.sign == 1 else vals[r.over].inverse()
            if vals[r.u_out] != o * vals[r.u_in] * o.inverse():
                ok = False
                break
        if not ok:
            continue
        hom += 1
        if subgroup_order(group.degree, sorted(set(vals)), stop_at=target) == target:
            epi += 1
        h = Permutation.identity(group.degree)
        for arc, exp in p.longitude:
            h = h * vals[arc] ** exp
        breakdown[h] = breakdown.get(h, 0) + 1
    return hom, epi, breakdown
