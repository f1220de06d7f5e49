import json

import pytest

from knotinvert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out) if out else None, err


def test_knots_lists_table(capsys):
    code, out, _ = run(capsys, "knots")
    names = out.split()
    assert code == 0
    assert {"unknot", "3_1", "4_1", "8_17", "conway", "kt"} <= set(names)


def test_info(capsys):
    code, report, _ = run_json(capsys, "info", "3_1")
    assert code == 0
    assert report["crossings"] == 3
    assert report["writhe"] == -3
    assert report["arc_count"] == 3


def test_wirtinger_reports_checks(capsys):
    code, report, _ = run_json(capsys, "wirtinger", "4_1")
    assert code == 0
    assert all(report["checks"].values())
    assert "x1" in report["presentation"]


def test_alexander_conway(capsys):
    code, report, _ = run_json(capsys, "alexander", "conway")
    assert code == 0
    assert report["alexander"] == "1"
    assert report["symmetric"] is True


def test_jones_check_inverse(capsys):
    code, report, _ = run_json(capsys, "jones", "8_17", "--check-inverse")
    assert code == 0
    assert report["equal_under_reversal"] is True
    assert report["jones"] == report["jones_reversed"]


def test_homcount_trefoil_s3(capsys):
    code, report, _ = run_json(
        capsys, "homcount", "3_1", "--group", "s3", "--class-order", "2", "--longitudes"
    )
    assert code == 0
    counts = report["counts"]
    assert counts["hom_count"] == 3
    assert counts["epi_count"] == 2
    assert counts["orbit_count"] == 1
    assert sum(counts["longitude_breakdown"].values()) == 3


def test_homcount_class_rep_override(capsys):
    code, report, _ = run_json(
        capsys, "homcount", "3_1", "--group", "s3", "--class-rep", "(1,3)"
    )
    assert code == 0
    assert report["counts"]["hom_count"] == 3
    assert report["inputs"]["class_rep"] == "(1,3)"


def test_homcount_unknot_m11(capsys):
    code, report, _ = run_json(
        capsys, "homcount", "unknot", "--group", "m11", "--class-order", "11"
    )
    assert code == 0
    assert report["counts"]["hom_count"] == 1


def test_json_stable_across_runs(capsys):
    _, first, _ = run_json(capsys, "homcount", "4_1", "--group", "s4", "--class-order", "4")
    _, second, _ = run_json(capsys, "homcount", "4_1", "--group", "s4", "--class-order", "4")
    for report in (first, second):
        report["counts"].pop("elapsed_ms")
    assert first == second


def test_threads_flag_matches_single_thread(capsys):
    _, one, _ = run_json(
        capsys, "homcount", "4_1", "--group", "s4", "--class-order", "4", "--threads", "1"
    )
    _, eight, _ = run_json(
        capsys, "homcount", "4_1", "--group", "s4", "--class-order", "4", "--threads", "8"
    )
    one["counts"].pop("elapsed_ms")
    eight["counts"].pop("elapsed_ms")
    assert one == eight


def test_invert_test_inconclusive(capsys):
    code, report, _ = run_json(
        capsys, "invert-test", "4_1", "--group", "s4", "--class-order", "4"
    )
    assert code == 0
    assert report["verdict"] == "Inconclusive"
    assert report["reasons"] == []


def test_usage_errors_exit_1(capsys):
    code, _, err = run(capsys, "homcount", "3_1", "--group", "s3")
    assert code == 1
    assert "class-order" in err
    assert main(["nosuchcommand"]) == 1
    assert main([]) == 1


def test_computation_errors_exit_2(capsys):
    code, _, err = run(capsys, "info", "9_99")
    assert code == 2
    assert "unknown knot" in err
    code, _, err = run(capsys, "homcount", "3_1", "--group", "nosuchgroup", "--class-order", "2")
    assert code == 2
    code, _, err = run(capsys, "homcount", "3_1", "--group", "s3", "--class-order", "7")
    assert code == 2
    assert "no element of order" in err
    # meridian image not in the group
    code, _, err = run(
        capsys, "homcount", "3_1", "--group", "a4", "--class-rep", "(1,2)"
    )
    assert code == 2


def test_version_flag(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
