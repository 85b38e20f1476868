import json

import pytest

from biquandles.cli import main
from biquandles.group_constructions import dihedral_quandle, trivial_quandle
from biquandles.combinators import union_biquandle_constant
from biquandles.core import Permutation


@pytest.fixture
def r3_file(tmp_path):
    p = tmp_path / "r3.json"
    p.write_text(dihedral_quandle(3).to_json())
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstructAndCheck:
    def test_construct_dihedral(self, capsys):
        code, out, _ = run(capsys, "construct", "dihedral", "3")
        assert code == 0
        assert json.loads(out) == {"n": 3, "table": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]}

    def test_check_valid(self, capsys, r3_file):
        code, out, _ = run(capsys, "check", r3_file)
        assert code == 0 and "ok" in out

    def test_check_reports_violation(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"n": 2, "table": [[0, 1], [0, 1]]}')
        code, out, _ = run(capsys, "check", str(p))
        assert code == 0 and "FAILED" in out and "r1" in out

    def test_malformed_exits_2(self, capsys, tmp_path):
        p = tmp_path / "nope.json"
        p.write_text("garbage")
        code, _, err = run(capsys, "check", str(p))
        assert code == 2 and "error" in err

    def test_check_biquandle_file(self, capsys, tmp_path):
        from biquandles.group_constructions import wada_biquandle
        from biquandles.groups import cyclic_group

        p = tmp_path / "w.json"
        p.write_text(wada_biquandle(cyclic_group(3)).to_json())
        code, out, _ = run(capsys, "--format", "json", "check", str(p))
        assert code == 0
        got = json.loads(out)
        assert got["kind"] == "biquandle" and got["passed"]

    def test_check_all_witnesses(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"n": 2, "table": [[0, 0], [1, 0]]}')
        code, out, _ = run(capsys, "--format", "json", "check", str(p), "--all-witnesses")
        assert code == 0
        got = json.loads(out)
        assert not got["passed"]
        axioms = {v[0] for v in got["violations"]}
        assert {"q1", "r1"} <= axioms

    def test_domain_error_exits_1(self, capsys):
        code, _, err = run(capsys, "construct", "takasaki", "--group", "s3")
        assert code == 1 and "abelian" in err

    def test_construct_families_via_group_specs(self, capsys):
        for argv in (
            ("construct", "conj", "--group", "s3"),
            ("construct", "core", "--group", "z5"),
            ("construct", "alex", "--group", "z5", "--phi", "1"),
            ("construct", "wada", "--group", "z2x2"),
            ("construct", "alexbq", "5", "3", "2"),
            ("construct", "genalex", "--group", "z5", "--phi", "1", "--psi", "2"),
        ):
            code, out, err = run(capsys, *argv)
            assert code == 0, (argv, err)
            json.loads(out)

    def test_construct_combinators(self, capsys, tmp_path, r3_file):
        t2 = tmp_path / "t2.json"
        t2.write_text(trivial_quandle(2).to_json())
        code, out, _ = run(capsys, "construct", "union", r3_file, r3_file)
        assert code == 0 and json.loads(out)["n"] == 6
        code, out, _ = run(capsys, "construct", "unionbq", str(t2), str(t2), "--f", "1,0", "--g", "1,0")
        assert code == 0 and json.loads(out)["n"] == 4
        code, out, _ = run(capsys, "construct", "semidirect", r3_file, str(t2))
        assert code == 0 and json.loads(out)["n"] == 6
        code, out, _ = run(capsys, "construct", "holomorph", r3_file)
        assert code == 0 and json.loads(out)["n"] == 18

    def test_construct_semidirect_with_aut_indices(self, capsys, tmp_path, r3_file):
        # psi assigns each element of Q2 an index into the sorted Aut(Q1) list
        t2 = tmp_path / "t2.json"
        t2.write_text(trivial_quandle(2).to_json())
        code, out, _ = run(capsys, "construct", "semidirect", r3_file, str(t2), "--psi-map", "1,1")
        assert code == 0 and json.loads(out)["n"] == 6
        code, _, err = run(capsys, "construct", "semidirect", r3_file, str(t2), "--psi-map", "9,9")
        assert code == 1 and "out of range" in err
        code, _, err = run(capsys, "construct", "semidirect", r3_file, str(t2), "--psi-map", "1")
        assert code == 2


class TestAut:
    def test_quandle_aut(self, capsys, r3_file):
        code, out, _ = run(capsys, "--format", "json", "aut", "--quandle", r3_file)
        assert code == 0 and json.loads(out)["order"] == 6

    def test_group_aut(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "aut", "--group", "z5")
        assert code == 0 and json.loads(out)["order"] == 4

    def test_elements_listing(self, capsys, r3_file):
        code, out, _ = run(capsys, "--format", "json", "aut", "--quandle", r3_file, "--elements")
        assert len(json.loads(out)["elements"]) == 6


class TestColor:
    def test_virtual_hopf_example(self, capsys, tmp_path):
        t2 = trivial_quandle(2)
        b = union_biquandle_constant(t2, t2, Permutation((1, 0)), Permutation((1, 0)))
        bq = tmp_path / "unionT2T2.json"
        bq.write_text(b.to_json())
        diagram = tmp_path / "vhopf.txt"
        diagram.write_text("X + b d c a\nV a c d b\n")
        code, out, _ = run(capsys, "color", "--diagram", str(diagram), "--biquandle", str(bq))
        assert code == 0 and out.strip() == "8"

    def test_structure_flag_autodetects(self, capsys, tmp_path, r3_file):
        diagram = tmp_path / "unknot.txt"
        diagram.write_text("= a a\n")
        code, out, _ = run(capsys, "color", "--diagram", str(diagram), "--structure", r3_file)
        assert code == 0 and out.strip() == "3"

    def test_exactly_one_input(self, capsys, tmp_path, r3_file):
        diagram = tmp_path / "unknot.txt"
        diagram.write_text("= a a\n")
        code, _, err = run(capsys, "color", "--diagram", str(diagram))
        assert code == 2


class TestVerbalYbeIsoCoverEnumerate:
    def test_verbal_classify_pair(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "verbal", "classify", "--u", "y^-2 x", "--v", "y^-1 x^-1 y^1")
        assert code == 0 and json.loads(out)["family"] == 6

    def test_verbal_classify_quandle_word(self, capsys):
        code, out, _ = run(capsys, "verbal", "classify", "--w", "y x^-1 y")
        assert code == 0 and "core" in out

    def test_verbal_enumerate(self, capsys):
        code, out, _ = run(capsys, "verbal", "enumerate", "--bound", "0")
        pairs = [json.loads(line) for line in out.splitlines()]
        assert {(p["u"], p["v"]) for p in pairs} == {("x", "x"), ("x^-1", "x^-1")}

    def test_verbal_enumerate_quandle_words(self, capsys):
        code, out, _ = run(capsys, "verbal", "enumerate", "--bound", "1", "--quandle-words")
        words = [json.loads(line)["w"] for line in out.splitlines()]
        assert code == 0 and set(words) == {"x", "y^-1 x y", "y x y^-1", "y x^-1 y"}

    def test_verbal_check(self, capsys):
        code, out, _ = run(capsys, "verbal", "check", "--u", "x^-1", "--v", "x^-1")
        assert code == 0 and out.strip() == "true"
        code, out, _ = run(capsys, "verbal", "check", "--w", "x^-1")
        assert code == 0 and out.strip() == "false"

    def test_ybe(self, capsys, tmp_path):
        from biquandles.group_constructions import wada_biquandle
        from biquandles.groups import cyclic_group

        f = tmp_path / "w.json"
        f.write_text(wada_biquandle(cyclic_group(3)).to_json())
        code, out, _ = run(capsys, "ybe", "--biquandle", str(f))
        assert code == 0 and out.strip() == "true"

    def test_iso(self, capsys, tmp_path, r3_file):
        code, out, _ = run(capsys, "--format", "json", "iso", r3_file, r3_file)
        assert code == 0 and json.loads(out)["isomorphic"]

    def test_enumerate_quandles(self, capsys):
        code, out, _ = run(capsys, "enumerate", "quandles", "3")
        assert code == 0 and len(out.splitlines()) == 5

    def test_enumerate_structures_with_jobs(self, capsys):
        code1, out1, _ = run(capsys, "enumerate", "trivial-structures", "3")
        code2, out2, _ = run(capsys, "--jobs", "2", "enumerate", "trivial-structures", "3")
        assert code1 == code2 == 0 and out1 == out2
        assert len(out1.splitlines()) == 12

    def test_enumerate_cap(self, capsys):
        code, _, err = run(capsys, "enumerate", "quandles", "9")
        assert code == 1 and "cap" in err

    def test_cover_check_and_lift(self, capsys, tmp_path, r3_file):
        from helpers import projection_quandle
        from biquandles.structures import constant_structure

        qt = tmp_path / "qt.json"
        qt.write_text(projection_quandle().to_json())
        code, out, _ = run(capsys, "cover", "check", "--total", str(qt), "--base", r3_file, "--map", "0,0,1,1,2,2")
        assert code == 0 and out.strip() == "true"
        st = tmp_path / "st.json"
        st.write_text(constant_structure(dihedral_quandle(3), Permutation.identity(3)).to_json())
        code, out, _ = run(
            capsys, "--format", "json", "cover", "lift",
            "--total", str(qt), "--base", r3_file, "--map", "0,0,1,1,2,2", "--structure", str(st),
        )
        assert code == 0 and json.loads(out)["found"]
