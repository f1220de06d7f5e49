import random

import pytest

from knotinvert.permgroup import (
    CycleError,
    GroupFileError,
    PermGroup,
    Permutation,
    builtin_group,
    find_class_rep,
    load_group_file,
    parse_cycles,
    subgroup_order,
)


def closure_size(degree, gens):
    """Brute-force group order by closure enumeration (oracle)."""
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


# -- parsing ---------------------------------------------------------------


def test_parse_cycles_identity_and_transposition():
    assert parse_cycles("()", 5).is_identity()
    p = parse_cycles("(1,2)", 3)
    assert p.images == (1, 0, 2)
    q = parse_cycles("(1,2,3)(4,5)", 5)
    assert q.order() == 6


def test_parse_cycles_errors():
    with pytest.raises(CycleError, match="repeated"):
        parse_cycles("(1,2)(2,3)", 3)
    with pytest.raises(CycleError, match="outside"):
        parse_cycles("(1,4)", 3)
    with pytest.raises(CycleError, match="malformed"):
        parse_cycles("(1,2", 3)
    with pytest.raises(CycleError):
        parse_cycles("(1,x)", 3)


def test_cycle_string_roundtrip():
    p = parse_cycles("(1,3,2)(4,5)", 6)
    assert parse_cycles(p.cycle_string(), 6) == p
    assert Permutation.identity(4).cycle_string() == "()"


# -- element order ----------------------------------------------------------


def test_order_of_element():
    assert Permutation.identity(5).order() == 1
    assert parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11).order() == 11
    assert parse_cycles("(1,2)(3,4,5)", 5).order() == 6


# -- group order -------------------------------------------------------------


@pytest.mark.parametrize(
    "name,order",
    [("s3", 6), ("s4", 24), ("s5", 120), ("d4", 8), ("a4", 12), ("a5", 60)],
)
def test_builtin_orders_match_bruteforce(name, order):
    g = builtin_group(name)
    assert g.order() == order
    assert closure_size(g.degree, g.generators) == order


def test_trivial_group():
    g = PermGroup(4, [Permutation.identity(4)])
    assert g.order() == 1


def test_order_invariant_under_generator_shuffle():
    g = builtin_group("s4")
    doubled = PermGroup(4, list(g.generators) * 2 + list(reversed(g.generators)))
    assert doubled.order() == 24


def test_m11():
    m11 = builtin_group("m11")
    assert m11.order() == 7920


def test_m11_class_asymmetry():
    m11 = builtin_group("m11")
    g = find_class_rep(m11, 11)
    cls = m11.conjugacy_class(g)
    assert len(cls) == 720
    assert g.inverse() not in cls
    assert m11.centralizer_order(g) == 11
    assert find_class_rep(m11, 7) is None


def test_orbit_stabilizer_product():
    for name in ("s3", "s4", "d4", "a5"):
        g = builtin_group(name)
        for x in g.elements()[:10]:
            assert len(g.conjugacy_class(x)) * g.centralizer_order(x) == g.order()


def test_class_members_share_order():
    s5 = builtin_group("s5")
    x = parse_cycles("(1,2,3)(4,5)", 5)
    cls = s5.conjugacy_class(x)
    assert all(m.order() == 6 for m in cls.members)
    assert len(cls) % 1 == 0 and s5.order() % len(cls) == 0


def test_s3_transposition_class():
    s3 = builtin_group("s3")
    cls = s3.conjugacy_class(parse_cycles("(1,2)", 3))
    assert len(cls) == 3
    assert s3.centralizer_order(parse_cycles("(1,2)", 3)) == 2
    assert len(s3.conjugacy_class(Permutation.identity(3))) == 1


def test_sift_membership_and_random_products():
    m11 = builtin_group("m11")
    rng = random.Random(7)
    for _ in range(25):
        p = Permutation.identity(11)
        for _ in range(rng.randint(1, 5)):
            p = p * rng.choice(m11.generators)
        assert m11.sift(p).is_identity()
    odd = parse_cycles("(1,2)", 11)
    assert not m11.sift(odd).is_identity()


def test_subgroup_order():
    assert subgroup_order(4, [Permutation.identity(4)]) == 1
    assert subgroup_order(3, [parse_cycles("(1,2)", 3)]) == 2
    assert subgroup_order(4, [parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4)]) == 24
    m11 = builtin_group("m11")
    assert subgroup_order(11, list(m11.generators), stop_at=7920) == 7920
    with pytest.raises(ValueError, match="degree"):
        subgroup_order(4, [parse_cycles("(1,2)", 3)])


def test_second_generating_pair_same_group():
    m11 = builtin_group("m11")
    a, b = m11.generators
    alt = PermGroup(11, [a, b.conjugate_by(a) * b], name="m11-alt")
    assert alt.order() == 7920
    # same subgroup of S11, not merely isomorphic
    assert all(m11.sift(g).is_identity() for g in alt.generators)
    assert all(alt.sift(g).is_identity() for g in m11.generators)


# -- group files --------------------------------------------------------------


def test_load_group_file_roundtrip(tmp_path):
    text = "# comment\ndegree 4\n(1,2,3,4)\n(1,2)  # inline comment\n"
    g = load_group_file(text, name="s4-file")
    assert g.order() == 24
    path = tmp_path / "s4.grp"
    path.write_text(text, encoding="utf-8")
    loaded = builtin_group(str(path))
    assert loaded.order() == 24


def test_group_file_errors():
    with pytest.raises(GroupFileError, match="degree"):
        load_group_file("(1,2)\n")
    with pytest.raises(GroupFileError, match="no generators"):
        load_group_file("degree 3\n")
    with pytest.raises(GroupFileError, match="bad generator"):
        load_group_file("degree 3\n(1,5)\n")
    with pytest.raises(GroupFileError, match="empty"):
        load_group_file("# nothing\n")
    with pytest.raises(GroupFileError, match="unknown group"):
        builtin_group("nosuchgroup")
