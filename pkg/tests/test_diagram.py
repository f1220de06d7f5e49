import pytest

from knotinvert.diagram import Diagram, PDError, parse_pd, table_lookup, table_names

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def test_parse_trefoil_signs_and_writhe():
    d = parse_pd(TREFOIL)
    assert len(d.crossings) == 3
    assert d.edge_count == 6
    assert d.signs() == (-1, -1, -1)
    assert d.writhe() == -3


def test_empty_is_unknot():
    d = parse_pd("")
    assert len(d.crossings) == 0
    assert d.writhe() == 0
    assert d.pd_text() == ""


def test_parse_errors():
    with pytest.raises(PDError, match="edge 1 appears 3"):
        parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,1]")
    with pytest.raises(PDError, match="bad PD term"):
        parse_pd("X[1,4,2]")
    with pytest.raises(PDError, match="bad PD term"):
        parse_pd("X[1,a,2,5]")
    with pytest.raises(PDError, match="outside"):
        parse_pd("X[1,4,2,9] X[3,6,4,1] X[5,2,6,3]")
    # under-strand numbering must advance along the knot
    with pytest.raises(PDError):
        parse_pd("X[1,4,5,2] X[3,6,4,1] X[5,2,6,3]")


def test_kink_signs():
    positive = parse_pd("X[2,2,1,1]")
    negative = parse_pd("X[1,2,2,1]")
    assert positive.writhe() == 1
    assert negative.writhe() == -1


def test_mirror_negates_writhe_and_is_involutive():
    d = parse_pd(TREFOIL)
    m = d.mirror()
    assert m.writhe() == 3
    assert m.mirror().canonical_form() == d.canonical_form()
    assert parse_pd("").mirror().pd_text() == ""


def test_reverse_preserves_writhe_and_is_involutive():
    d = parse_pd(TREFOIL)
    r = d.reverse()
    assert r.writhe() == d.writhe()
    assert r.reverse().canonical_form() == d.canonical_form()
    assert parse_pd("").reverse().pd_text() == ""


def test_mirror_reverse_commute():
    for name in table_names():
        d = table_lookup(name)
        lhs = d.mirror().reverse().canonical_form()
        rhs = d.reverse().mirror().canonical_form()
        assert lhs == rhs, name


def test_braid_sample_symmetries(braid_knot_sample):
    for d in braid_knot_sample:
        assert d.mirror().writhe() == -d.writhe()
        assert d.reverse().writhe() == d.writhe()
        assert d.reverse().reverse().canonical_form() == d.canonical_form()


def test_table_roundtrip_and_sizes():
    expected_crossings = {"unknot": 0, "3_1": 3, "4_1": 4, "8_17": 8, "conway": 11, "kt": 11}
    names = table_names()
    for name, count in expected_crossings.items():
        assert name in names, f"table is missing {name}"
    for name in names:
        d = table_lookup(name)
        again = parse_pd(d.pd_text())
        assert again.crossings == d.crossings
        if name in expected_crossings:
            assert len(d.crossings) == expected_crossings[name]


def test_table_lookup_unknown_lists_names():
    with pytest.raises(PDError, match="available"):
        table_lookup("9_42")


def test_data_dir_override(tmp_path, monkeypatch):
    (tmp_path / "knots.txt").write_text(
        "# custom\nmy_trefoil X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n", encoding="utf-8"
    )
    monkeypatch.setenv("KNOTINVERT_DATA", str(tmp_path))
    assert table_names() == ["my_trefoil"]
    assert table_lookup("my_trefoil").writhe() == -3
