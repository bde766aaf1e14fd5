from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftmatroid.catalog import catalog_get, uniform
from liftmatroid.cli import main
from liftmatroid.errors import CapacityError, ParseError
from liftmatroid.formats import (
    parse_machine,
    parse_text,
    read_catalog,
    read_graph,
    read_matroid,
    render_machine,
    render_text,
    write_catalog,
    write_graph,
    write_matroid,
)
from liftmatroid.lift import lift_matroid
from strategies import graphs, matroids

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestGraphFormat:
    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6, max_m=10))
    def test_roundtrip(self, g):
        assert read_graph(write_graph(g)) == g

    def test_comments_and_blank_lines(self):
        assert read_graph("# k2\nGRAPH 2 1\n\n# edge\n0 1\n").edges == ((0, 1),)

    @pytest.mark.parametrize(
        "text,line",
        [
            ("GRAF 2 1\n0 1\n", 1),
            ("GRAPH 2 2\n0 1\n", 2),
            ("GRAPH 2 1\n1 0\n", 2),
            ("GRAPH 2 2\n0 1\n0 5\n", 3),
            ("GRAPH 2 1\n0 x\n", 2),
        ],
    )
    def test_errors_cite_line(self, text, line):
        with pytest.raises(ParseError) as info:
            read_graph(text, "g.graph")
        assert info.value.line == line
        assert str(info.value).startswith(f"g.graph:{line}:")

    def test_capacity(self):
        text = "GRAPH 2 33\n" + "0 1\n" * 33
        with pytest.raises(CapacityError):
            read_graph(text)


class TestMatroidFormat:
    @settings(max_examples=60, deadline=None)
    @given(matroids())
    def test_roundtrip(self, m):
        assert read_matroid(write_matroid(m)) == m

    def test_catalog_files(self):
        assert read_matroid((DATA / "F7.matroid").read_text()) == catalog_get("F7")

    @pytest.mark.parametrize(
        "text,line",
        [
            ("MATROID 3 2\nCIRCUITS 1\n0 2 1\n", 3),
            ("MATROID 3 2\nCIRCUITS 2\n1 2\n0 1\n", 4),
            ("MATROID 3 1\nCIRCUITS 1\n0 1 2\n", 1),
            ("MATROID 2 1\nCIRCUITS 2\n0\n0 1\n", 2),
            ("MATROID 2 1\nCIRCUITS 1\n0 3\n", 3),
        ],
    )
    def test_errors_cite_line(self, text, line):
        with pytest.raises(ParseError) as info:
            read_matroid(text)
        assert info.value.line == line

    def test_catalog_roundtrip(self):
        ms = [uniform(2, 4), catalog_get("F7"), uniform(0, 0)]
        assert read_catalog(write_catalog(ms)) == ms

    def test_catalog_capacity_item(self):
        big = "MATROID 33 33\nCIRCUITS 0\n"
        items = read_catalog(write_matroid(uniform(2, 4)) + "\n" + big)
        assert items[0] == uniform(2, 4) and isinstance(items[1], CapacityError)


class TestReportFormat:
    records = [
        {"type": "header", "caps": {"max_vertices": 8}, "seed": 0},
        {"type": "verdict", "member": True, "witness": None, "evidence": {"a": [1, 2]}, "text": "x: y"},
    ]

    def test_machine_roundtrip(self):
        assert parse_machine(render_machine(self.records)) == self.records

    def test_text_roundtrip(self):
        assert parse_text(render_text(self.records)) == self.records

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.dictionaries(st.text("abc_", min_size=1, max_size=4).filter(lambda k: k != "type"),
                                    st.integers() | st.booleans() | st.text(max_size=5)), max_size=4))
    def test_both_renderings_carry_same_fields(self, bodies):
        recs = [{"type": "r", **b} for b in bodies]
        assert parse_text(render_text(recs)) == parse_machine(render_machine(recs)) == recs

    def test_bad_machine_line(self):
        with pytest.raises(ParseError):
            parse_machine('{"type": "a"}\nnot json\n')


class TestCLI:
    def test_graph_circuits(self):
        code, out, _ = run("graph", "circuits", str(DATA / "K2_4.graph"))
        assert code == 0
        assert read_matroid(out) == uniform(2, 4)
        assert out.startswith("# [header]")

    def test_graph_circuits_machine(self):
        code, out, _ = run("graph", "circuits", str(DATA / "K4.graph"), "--format", "machine")
        recs = parse_machine(out)
        assert code == 0 and recs[0]["type"] == "header" and recs[1]["rank"] == 4

    def test_graph_info(self):
        code, out, _ = run("graph", "info", str(DATA / "K2_4.graph"), "--format", "machine")
        info = parse_machine(out)[1]
        assert code == 0 and info["parallel_classes"] == [[0, 1, 2, 3]]
        assert info["lift"] == {"rank": 2, "corank": 2, "circuits": 4}

    def test_matroid_info(self):
        code, out, _ = run("matroid", "info", "F7", "--format", "machine")
        info = parse_machine(out)[1]
        assert info["binary"] and info["connectivity"] == "three_connected"

    def test_check_excluded_fano(self):
        code, out, _ = run("check", "excluded", str(DATA / "F7.matroid"))
        recs = parse_text(out)
        assert code == 0 and recs[1]["type"] == "certificate"
        assert len(recs[1]["per_element"]) == 7

    def test_check_excluded_false(self):
        code, out, _ = run("check", "excluded", str(DATA / "U24.matroid"), "--format", "machine")
        assert code == 1 and parse_machine(out)[1] == {"type": "exclusion", "excluded": False}

    def test_check_graphic(self):
        assert run("check", "graphic", str(DATA / "U24.matroid"))[0] == 1
        assert run("check", "graphic", "MK4")[0] == 0

    def test_check_biclift_and_class(self):
        code, out, _ = run("check", "biclift", "uniform(2,4)", "--format", "machine")
        v = parse_machine(out)[1]
        assert code == 0 and v["member"] and v["witness"]["kind"] == "bicircular_lift"
        assert run("check", "class", "F7")[0] == 1

    def test_catalog_get(self):
        code, out, _ = run("catalog", "get", "F7")
        assert code == 0 and read_matroid(out) == catalog_get("F7")
        assert run("catalog", "get", "nothing")[0] == 2

    def test_scan(self):
        code, out, _ = run("scan", str(DATA / "small.catalog"), "--format", "machine")
        recs = parse_machine(out)
        certs = [r for r in recs if r["type"] == "certificate"]
        assert code == 0 and [c["index"] for c in certs] == [1, 3]
        assert [r for r in recs if r["type"] == "duplicate"] == [{"type": "duplicate", "index": 4, "first": 3}]

    def test_verify_one(self):
        code, out, _ = run("verify", "parallel_u2k", "--format", "machine")
        recs = parse_machine(out)
        assert code == 0 and recs[1]["passed"] and recs[1]["elapsed_ms"] is None
        assert recs[-1]["type"] == "verify_summary"

    def test_verify_expected_failure_row_passes(self):
        assert run("verify", "series_pair_caveat")[0] == 0

    def test_verify_failure_exit(self):
        assert run("verify", "two_sum_decomposition")[0] == 1

    def test_verify_resource_exit(self):
        code, out, _ = run("verify", "series_pair", "--max-instances", "5", "--format", "machine")
        recs = parse_machine(out)
        assert code == 3 and recs[1]["error"] and not recs[1]["passed"]

    def test_resource_error_has_no_verdict(self):
        code, out, _ = run("check", "biclift", "dualK5", "--max-vertices", "4", "--format", "machine")
        recs = parse_machine(out)
        assert code == 3
        assert [r["type"] for r in recs] == ["header", "resource_error"]

    def test_usage_errors(self):
        assert run("check", "graphic", "/no/such/file")[0] == 2
        assert run("--bogus")[0] == 2
        assert run("verify", "nope")[0] == 2
        assert run("check", "graphic", "F7", "--max-vertices", "99")[0] == 2

    def test_parse_error_cites_file_and_line(self, tmp_path):
        p = tmp_path / "bad.graph"
        p.write_text("GRAPH 2 1\n0 9\n")
        code, _, err = run("graph", "info", str(p))
        assert code == 2 and f"{p}:2:" in err

    def test_header_is_self_describing(self):
        _, out, _ = run("check", "graphic", "F7", "--format", "machine", "--seed", "4")
        h = parse_machine(out)[0]
        assert h["caps"]["max_vertices"] == 8 and h["seed"] == 4 and h["input"] == "F7"

    def test_identical_invocations_identical_bytes(self):
        args = ("scan", str(DATA / "small.catalog"), "--format", "machine")
        assert run(*args)[1] == run(*args)[1]
        assert run(*args)[1] == run(*args, "--jobs", "2")[1]

    def test_text_and_machine_same_fields(self):
        a = parse_text(run("check", "biclift", "uniform(2,4)")[1])
        b = parse_machine(run("check", "biclift", "uniform(2,4)", "--format", "machine")[1])
        assert a == b

    def test_console_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "liftmatroid", "check", "graphic", str(DATA / "U24.matroid")],
            capture_output=True, text=True,
        )
        assert proc.returncode == 1
        assert parse_text(proc.stdout)[1]["member"] is False

    def test_version(self):
        assert run("--version")[0] == 0


def test_lift_file_roundtrip_through_cli(tmp_path):
    p = tmp_path / "g.graph"
    g = read_graph((DATA / "K4.graph").read_text())
    p.write_text(write_graph(g))
    _, out, _ = run("graph", "circuits", str(p))
    assert read_matroid(out) == lift_matroid(g)
    assert json.loads(json.dumps(out))  # plain text, UTF-8 safe
