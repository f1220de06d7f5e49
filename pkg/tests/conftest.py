import random

import pytest

from knotinvert._braid import closure_is_knot, closure_pd


def random_braid_knots(count: int, strands: int = 3, length: int = 8, seed: int = 20240817):
    """Deterministic sample of realizable knot diagrams (braid closures).

    The word length must have the parity of an n-cycle (even for 3
    strands), or no closure is a knot.
    """
    rng = random.Random(seed)
    letters = [s * j for j in range(1, strands) for s in (1, -1)]
    out = []
    for _ in range(100000):
        if len(out) == count:
            break
        word = [rng.choice(letters) for _ in range(length)]
        if closure_is_knot(word, strands):
            out.append(closure_pd(word, strands))
    assert len(out) == count, "could not sample enough braid knots"
    return out


@pytest.fixture(scope="session")
def braid_knot_sample():
    return random_braid_knots(12)
