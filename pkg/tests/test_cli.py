import io
import json
import subprocess
import sys

import pytest

from sscat.cli import main
from sscat.fincat import poset_category
from sscat.fixtures import wrong_target_category
from sscat.serialize import SCHEMA_VERSION, dumps
from sscat.simpset import nerve
from sscat.sspace import embed_horizontal


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv, stdin=""):
    code, out, err = run(*argv, stdin=stdin)
    return code, json.loads(out)


def test_segal_failure_on_spine():
    code, doc = run_json("check", "segal", "spine2")
    assert code == 1
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["verdict"] is False
    assert doc["counts"]["level2"] == [7, 8]
    assert doc["failing_levels"] == [2, 3]


def test_segal_on_category_and_bisimpset():
    code, doc = run_json("check", "segal", "B2")
    assert code == 0 and doc["verdict"]
    code, doc = run_json("check", "segal", "G2")
    assert code == 1
    assert doc["row0"]["level2"] == [7, 8]


def test_completeness_failure_on_iso_arrow():
    code, doc = run_json("check", "complete", "E1")
    assert code == 1
    assert doc["counts"]["level0"] == [2, 4]
    code, doc = run_json("check", "complete", "F1")
    assert code == 0


def test_build_pipes_into_kan_check():
    code, built, _ = run("build", "delta", "2", "--trunc", "3")
    assert code == 0
    code, doc = run_json("check", "kan", "--upto", "2", stdin=built)
    assert code == 1
    assert doc["target"] == "stdin"
    assert doc["kan_witness"]["shape"][0] == "horn"
    assert set(doc["kan_witness"]["bottom_vertices"]) == {"(0)", "(1)", "(2)"}


def test_kan_complex_nerve_of_groupoid():
    code, doc = run_json("check", "kan", "nerve_I1", "--upto", "2")
    assert code == 0 and doc["kan_fibration"]


def test_category_check_reports_violation(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text(dumps(wrong_target_category()))
    code, doc = run_json("validate", str(p))
    assert code == 1 and doc["verdict"] is False
    code, doc = run_json("validate", "B2")
    assert code == 0 and doc["source"] == "fixture B2"


def test_bad_json_reports_position():
    code, out, err = run("check", "segal", "-", stdin='{"objects": [1,\n  ]}')
    assert code == 2
    assert "line 2" in err


def test_unknown_fixture_is_input_error():
    code, _, err = run("check", "segal", "no_such_thing")
    assert code == 2 and "neither a file nor a known fixture" in err


def test_bad_usage_is_input_error():
    assert run("frobnicate")[0] == 2
    assert run("check", "nonsense", "B2")[0] == 2


def test_enumeration_bound_exit_code():
    code, _, err = run("check", "segal", "classifying_Z3", "--max-enum", "100")
    assert code == 3 and err.startswith("sscat:")


def test_completeness_withheld_outside_decidable_regimes():
    # a horizontal embedding has non-groupoid vertical rows
    doc = dumps(embed_horizontal(nerve(poset_category(1), 2), 3))
    code, doc = run_json("check", "complete", stdin=doc)
    assert code == 1 and doc["verdict"] is None and doc["strategy"] == "undecidable"


def test_export_json_round_trips(tmp_path):
    code, first, _ = run("export", "json", "galois")
    assert code == 0
    p = tmp_path / "g.json"
    p.write_text(first)
    code, second, _ = run("export", "json", str(p))
    assert code == 0 and first == second


def test_export_dot_and_out_flag(tmp_path):
    out = tmp_path / "b2.dot"
    code, text, _ = run("export", "dot", "B2", "--out", str(out))
    assert code == 0 and text == ""
    dot = out.read_text()
    assert dot.startswith("digraph") and '"0" -> "a"' in dot
    assert run("export", "dot", "delta2")[0] == 2


@pytest.mark.parametrize(
    "argv,kind",
    [
        (["build", "poset", "2"], "category"),
        (["build", "iso", "1"], "category"),
        (["build", "boundary", "2"], "simpset"),
        (["build", "horn", "2", "1"], "simpset"),
        (["build", "spine", "3"], "simpset"),
        (["build", "F", "1", "--trunc", "2"], "bisimpset"),
        (["build", "G", "2", "--trunc", "2"], "bisimpset"),
        (["build", "E1", "--trunc", "2"], "bisimpset"),
        (["build", "nerve", "Z2", "--trunc", "2"], "simpset"),
        (["build", "core", "B2"], "category"),
        (["build", "opposite", "span"], "category"),
        (["build", "classifying", "poset1", "--trunc", "2", "--vtrunc", "1"], "bisimpset"),
        (["build", "embed", "delta1"], "bisimpset"),
        (["build", "funcat", "poset1", "poset1"], "category"),
        (["build", "under", "B2", "a"], "functor"),
    ],
)
def test_build_constructors(argv, kind):
    code, doc = run_json(*argv)
    assert code == 0 and doc["kind"] == kind


def test_build_argument_errors():
    assert run("build", "delta", "x")[0] == 2
    assert run("build", "nerve")[0] == 2
    assert run("build", "under", "B2", "zz")[0] == 2
    assert run("build", "nerve", "delta1")[0] == 2


def test_compute_colimit_and_aliases():
    code, doc = run_json("compute", "colimit", "pushout")
    assert code == 0 and doc["vertex"] == "ab" and doc["verdict"] is True
    assert run_json("colimit", "pushout") == (code, doc)


def test_compute_adjoint():
    code, doc = run_json("adjoint", "galois")
    assert code == 0
    assert doc["right_adjoint"]["obMap"] == {"0": 0, "1": 2}
    assert doc["collage_cartesian"] is True
    code, doc = run_json("compute", "adjoint", "constant_map")
    assert code == 1 and doc["failing"] == 0 and doc["collage_cartesian"] is False


def test_fibration_checks_and_aliases():
    assert run("cofibered-check", "target_projection")[0] == 1
    assert run("leftfib-check", "target_projection")[0] == 1
    code, doc = run_json("cocart-check", "target_projection")
    assert code == 0 and doc["lifts"]
    assert run("check", "cofibered", "Y0_poset2")[0] == 2


def test_grothendieck_of_representable():
    code, doc = run_json("grothendieck", "Y0_poset2")
    assert code == 0 and doc["kind"] == "functor"
    assert len(doc["domain"]["objects"]) == 3


def test_compute_ho_and_nerve_and_classify():
    assert run("compute", "ho", "spine2")[0] == 1
    code, doc = run_json("compute", "ho", "F2")
    assert code == 0 and len(doc["objects"]) == 3
    code, doc = run_json("compute", "nerve", "poset1", "--trunc", "2")
    assert code == 0 and len(doc["levels"]) == 3
    code, doc = run_json("compute", "classify", "poset1", "--trunc", "2", "--vtrunc", "1")
    assert code == 0 and doc["kind"] == "bisimpset"


def test_initial_objects():
    code, doc = run_json("initial", "B2")
    assert code == 0 and doc["initial"] == ["0"] and doc["final"] == ["ab"]
    assert run("initial", "span")[0] == 0
    assert run("initial", "parallel")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sscat", "check", "segal", "spine2"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["counts"]["level2"] == [7, 8]
