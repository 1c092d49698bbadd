import json
import xml.etree.ElementTree as ET

import pytest

from asymgon.cli import main
from asymgon.geometry import DiameterSet, GeometryError
from asymgon.plotting import render_svg

SVG = "{http://www.w3.org/2000/svg}"


def _group(root, gid):
    for g in root.iter(SVG + "g"):
        if g.get("id") == gid:
            return g
    raise AssertionError(f"no group {gid}")


def _clave_result(tmp_path):
    ds = DiameterSet.evenly_spaced(8)
    res = {"n": 8, "k": 5, "solver": "lattice", "area": 2.2774329,
           "vertex_indices": [0, 3, 6, 10, 12], "angles": list(ds.angles)}
    p = tmp_path / "clave.json"
    p.write_text(json.dumps(res))
    return p


def test_clave_structure(tmp_path):
    out = tmp_path / "clave.svg"
    assert main(["render", str(_clave_result(tmp_path)), str(out)]) == 0
    root = ET.parse(out).getroot()
    assert len(list(_group(root, "endpoints").iter(SVG + "use"))) == 16
    assert len(list(_group(root, "vertices").iter(SVG + "use"))) == 5
    path = _group(root, "solution-polygon").find(SVG + "path").get("d")
    assert path.count("L") == 4 and path.rstrip().endswith("z")
    diameters = [g for g in root.iter(SVG + "g") if (g.get("id") or "").startswith("diameter-")]
    assert len(diameters) == 8


def test_render_is_byte_identical(tmp_path):
    src = _clave_result(tmp_path)
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["render", str(src), str(a)]) == 0
    assert main(["render", str(src), str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_empty_selection(tmp_path):
    with pytest.raises(GeometryError):
        render_svg(DiameterSet.evenly_spaced(4), [], tmp_path / "x.svg")
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"angles": [0.0, 1.0, 2.0], "vertex_indices": []}))
    assert main(["render", str(p), str(tmp_path / "y.svg")]) == 2


@pytest.mark.parametrize("content", ["{", '{"angles": [0.0, 1.0]}', '{"vertex_indices": [0, 1, 2]}',
                                     '{"angles": [0.0, 1.0, 2.0], "vertex_indices": "012"}'])
def test_malformed_result(tmp_path, content):
    p = tmp_path / "bad.json"
    p.write_text(content)
    assert main(["render", str(p), str(tmp_path / "z.svg")]) == 2
