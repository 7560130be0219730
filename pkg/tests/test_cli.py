import json

import pytest

from shadowcover.cli import main
from shadowcover.corpus import named
from shadowcover.jsonio import polytope_to_doc, write_json


@pytest.fixture()
def pyramid_file(tmp_path):
    path = tmp_path / "pyramid.json"
    write_json(path, polytope_to_doc(named("square-pyramid")))
    return str(path)


@pytest.fixture()
def cube_file(tmp_path):
    path = tmp_path / "cube.json"
    write_json(path, polytope_to_doc(named("cube-3")))
    return str(path)


@pytest.fixture()
def big_cube_file(tmp_path):
    from shadowcover.polytope import scale_polytope

    path = tmp_path / "big.json"
    write_json(path, polytope_to_doc(scale_polytope(named("cube-3"), 2)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_pass(capsys, pyramid_file):
    code, out, _ = run(capsys, "validate", pyramid_file)
    assert code == 0
    assert "PASS" in out and "5 facets" in out


def test_validate_duplicate_vertex_notes(capsys, tmp_path):
    path = tmp_path / "dup.json"
    write_json(
        path,
        {"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"],
                                ["1", "1"], ["1", "1"], ["1/2", "1/2"]]},
    )
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0
    assert "normalised" in out


def test_validate_malformed_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2, "vertices": [["0.5", "1"]]}')
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "input error" in err


def test_validate_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/nope.json")
    assert code == 2


def test_reliability_exit_codes(capsys, pyramid_file):
    code, out, _ = run(capsys, "reliability", pyramid_file, "--d", "2")
    assert code == 0 and "RELIABLE" in out
    code, out, _ = run(capsys, "reliability", pyramid_file, "--d", "1")
    assert code == 1 and "NOT RELIABLE" in out


def test_reliability_directions_input(capsys, tmp_path):
    from shadowcover.jsonio import directions_to_doc

    path = tmp_path / "q.json"
    write_json(path, directions_to_doc(named("q-directions")))
    code, out, _ = run(capsys, "reliability", str(path), "--d", "3")
    assert code == 0
    code, out, _ = run(capsys, "reliability", str(path), "--d", "2")
    assert code == 1 and "size 4" in out


def test_decompose_pyramid(capsys, pyramid_file):
    code, out, _ = run(capsys, "decompose", pyramid_file, "--d", "2")
    assert code == 1
    assert "dims [3]" in out


def test_decompose_writes_factors(capsys, cube_file, tmp_path):
    outdir = tmp_path / "factors"
    outdir.mkdir()
    code, out, _ = run(capsys, "decompose", cube_file, "--out", str(outdir))
    assert code == 0
    assert len(list(outdir.glob("factor_*.json"))) == 3


def test_decompose_lower_dimensional_needs_affine(capsys, tmp_path):
    path = tmp_path / "flat.json"
    write_json(
        path,
        {"dim": 3, "vertices": [["0", "0", "0"], ["1", "0", "0"],
                                ["0", "1", "0"], ["1", "1", "0"]]},
    )
    code, _, err = run(capsys, "decompose", str(path))
    assert code == 2 and "--affine" in err
    code, out, _ = run(capsys, "decompose", str(path), "--affine")
    assert code == 0


def test_contain_exit_codes(capsys, cube_file, big_cube_file):
    code, out, _ = run(capsys, "contain", cube_file, big_cube_file)
    assert code == 0 and "FITS" in out
    code, out, _ = run(capsys, "contain", big_cube_file, cube_file)
    assert code == 1 and "NO FIT" in out


def test_shadow_cover_requires_seed(capsys, cube_file, big_cube_file):
    with pytest.raises(SystemExit):
        main(["shadow-cover", cube_file, big_cube_file, "--d", "2"])


def test_shadow_cover_runs(capsys, cube_file, big_cube_file):
    code, out, _ = run(
        capsys, "shadow-cover", cube_file, big_cube_file,
        "--d", "2", "--seed", "5", "--trials", "40",
    )
    assert code == 0 and "40/40" in out


def test_shadow_cover_failure_exit(capsys, cube_file, big_cube_file):
    code, out, _ = run(
        capsys, "shadow-cover", big_cube_file, cube_file,
        "--d", "1", "--seed", "5", "--trials", "40",
    )
    assert code == 1


def test_json_reports_reproduce_byte_for_byte(capsys, pyramid_file):
    code1, out1, _ = run(
        capsys, "reliability", pyramid_file, "--d", "1", "--format", "json"
    )
    code2, out2, _ = run(
        capsys, "reliability", pyramid_file, "--d", "1", "--format", "json"
    )
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["tool"] == "shadowcover"
    assert doc["config"]["d"] == 1
    assert doc["result"]["certificate"]["coefficients"] == ["1", "2", "1"]


def test_counterexample_bundle_output(capsys, tmp_path):
    from shadowcover.jsonio import polytope_to_doc as pdoc

    oct_file = tmp_path / "oct.json"
    write_json(oct_file, pdoc(named("octahedron")))
    bundle_file = tmp_path / "bundle.json"
    code, out, _ = run(
        capsys, "counterexample", str(oct_file), "--d", "2", "--seed", "7",
        "--trials", "60", "--verify-trials", "80", "--out", str(bundle_file),
    )
    assert code == 0
    assert "alpha" in out
    doc = json.loads(bundle_file.read_text())
    assert doc["kind"] == "counterexample-bundle"
    assert doc["shadow_failures"] == 0


def test_counterexample_reliable_cover_exits_1(capsys, pyramid_file):
    code, _, err = run(
        capsys, "counterexample", pyramid_file, "--d", "2", "--seed", "1",
        "--trials", "10", "--verify-trials", "10",
    )
    assert code == 1
    assert "2-reliable" in err


def test_corpus_listing_and_output(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus")
    assert code == 0 and "square-pyramid" in out
    target = tmp_path / "sp.json"
    code, out, _ = run(capsys, "corpus", "square-pyramid", "--out", str(target))
    assert code == 0 and target.exists()
    code, _, err = run(capsys, "corpus", "no-such-body")
    assert code == 2


def test_invalid_margin_rejected(capsys, pyramid_file):
    with pytest.raises(SystemExit):
        main(["counterexample", pyramid_file, "--d", "1", "--seed", "1",
              "--margin", "2"])
