import json

import pytest

from cubeworks.cli import main
from cubeworks.cubical import boundary, open_box, standard_cube, tensor
from cubeworks.enriched import build_E, build_H, special_category
from cubeworks.io_json import (
    Workspace,
    cubical_from_json,
    cubical_to_json,
    presentation_from_json,
    presentation_to_json,
    simplicial_from_json,
    simplicial_to_json,
    to_json,
)
from cubeworks.james import james
from cubeworks.simplicial import wedge_of_intervals
from cubeworks.triangulate import triangulate


def run(capsys, tmp_path, *argv):
    code = main(["--workspace", str(tmp_path / "ws"), *argv])
    out = capsys.readouterr().out
    return code, out


def test_roundtrip_cubical_sets():
    for X in [standard_cube(3), boundary(3)[0], open_box(3, 2, 1)[0],
              tensor(boundary(2)[0], standard_cube(1))]:
        data = cubical_to_json(X)
        Y = cubical_from_json(data)
        assert cubical_to_json(Y) == data
        assert Y.cells == X.cells and Y.faces == X.faces


def test_roundtrip_simplicial_sets():
    for S in [triangulate(standard_cube(2)), james(wedge_of_intervals(2), "w", 2)]:
        data = simplicial_to_json(S)
        T = simplicial_from_json(data)
        assert simplicial_to_json(T) == data


def test_roundtrip_presentations():
    for P in [build_H(), build_E(), special_category("interval_tilde")]:
        data = presentation_to_json(P)
        Q = presentation_from_json(data)
        assert presentation_to_json(Q) == data


def test_workspace_roundtrip(tmp_path):
    ws = Workspace(str(tmp_path / "ws"))
    X = boundary(2)[0]
    ws.save("b2", X)
    Y = ws.load("b2")
    assert to_json(Y) == to_json(X)
    assert ws.names() == ["b2"]


def test_cli_build_and_homology(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "cube", "build", "boundary", "--n", "3", "--name", "b3")
    assert code == 0
    code, out = run(capsys, tmp_path, "homology", "b3", "--pipeline", "both")
    assert code == 0
    data = json.loads(out)
    assert data["agree"]
    groups = {g["degree"]: g for g in data["cubical"]["groups"]}
    assert groups[0]["betti"] == 1 and groups[2]["betti"] == 1


def test_cli_homology_inline_spec(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "homology", "boundary:2", "--pipeline", "cubical")
    assert code == 0
    data = json.loads(out)
    groups = {g["degree"]: g for g in data["cubical"]["groups"]}
    assert groups[1]["betti"] == 1


def test_cli_pushout_product(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "cube", "pushout-product", "i", "j0")
    assert code == 0
    data = json.loads(out)
    assert data["source_cells"] == {"0": 4, "1": 3}


def test_cli_kan_check(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "cube", "kan-check", "cube:0", "--max-dim", "2")
    assert code == 0
    assert json.loads(out)["pass"]


def test_cli_enriched_flow(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "enriched", "build", "E", "--name", "E")
    assert code == 0
    code, out = run(capsys, tmp_path, "enriched", "localize", "E", "u", "--name", "EL")
    assert code == 0
    code, out = run(capsys, tmp_path, "enriched", "h-cat", "EL", "--bound", "3")
    assert code == 0
    data = json.loads(out)
    assert all(len(v) == 1 for v in data["homs"].values())
    code, out = run(capsys, tmp_path, "enriched", "map-space", "EL", "c", "c", "--bound", "2")
    assert code == 0
    assert json.loads(out)["cells"]["0"] == 7


def test_cli_extend_inverse(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "enriched", "build", "H", "--name", "H")
    assert code == 0
    code, out = run(capsys, tmp_path, "enriched", "extend-inverse", "H", "u", "--bound", "4")
    assert code == 0
    data = json.loads(out)
    assert data["right"] == "inconclusive"
    assert not data["extends"]


def test_cli_james(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "james", "circle", "--bound", "3", "--homology")
    assert code == 0
    data = json.loads(out)
    groups = {g["degree"]: g for g in data["homology"]["groups"]}
    assert groups[1]["betti"] == 1 and groups[2]["betti"] == 1


def test_cli_quillen(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "quillen", "check", "--max-dim", "2")
    assert code == 0
    assert json.loads(out)["pass"]


def test_cli_quillen_broken_fails(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "quillen", "check", "--max-dim", "1", "--broken")
    assert code == 1


def test_cli_guard_exit_code(capsys, tmp_path):
    code, out = run(
        capsys, tmp_path, "cube", "kan-check", "cube:2", "--max-dim", "3", "--guard", "10"
    )
    assert code == 3


def test_cli_usage_error(capsys, tmp_path):
    code, out = run(capsys, tmp_path, "homology", "no-such-name")
    assert code == 2


def test_cli_deterministic_output(capsys, tmp_path):
    _, out1 = run(capsys, tmp_path, "cube", "build", "cube", "--n", "2")
    _, out2 = run(capsys, tmp_path, "cube", "build", "cube", "--n", "2")
    assert out1 == out2


def test_cli_interval_with_label(capsys, tmp_path):
    code, out = run(
        capsys, tmp_path, "enriched", "build", "interval", "--label", "cube:1", "--name", "I1"
    )
    assert code == 0
    data = json.loads(out)
    (edge_block,) = data["edges"]
    assert edge_block["space"]["cells"] == {"0": 0, "1": 0, "*": 1}


def test_emitted_artifacts_validate_against_shipped_schema():
    jsonschema = pytest.importorskip("jsonschema")
    import pathlib

    schema = json.loads(
        (pathlib.Path(__file__).parent.parent / "schemas" / "cubeworks-1.schema.json").read_text()
    )
    from cubeworks.chains import cubical_chains, homology

    artifacts = [
        to_json(boundary(3)[0]),
        to_json(triangulate(standard_cube(2))),
        to_json(build_E()),
        to_json(special_category("interval_tilde")),
        to_json(homology(cubical_chains(boundary(2)[0]))),
    ]
    for art in artifacts:
        jsonschema.validate(art, schema)
