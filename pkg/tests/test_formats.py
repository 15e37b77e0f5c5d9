import json
import math

import pytest

from helicover.formats import (PathFormatError, dumps, parse_complex, read_path, read_path_csv,
                               read_path_json)
from helicover.helicoid import HelicoidParams
from helicover.mesh import grid_faces, helicoid_mesh, obj_text, read_obj, write_obj
from helicover.numerics import GridSpec, make_grid


@pytest.mark.parametrize("text, z", [
    ("0+0i", 0), ("1+2i", 1 + 2j), ("1-2i", 1 - 2j), ("-1.5e-3+4i", -1.5e-3 + 4j),
    ("0+3.141592653589793i", 3.141592653589793j), ("2i", 2j), ("-i", -1j), ("i", 1j),
    ("3", 3), ("-0.25", -0.25), ("1+i", 1 + 1j), (".5-.5i", 0.5 - 0.5j),
])
def test_parse_complex(text, z):
    assert parse_complex(text) == z


@pytest.mark.parametrize("bad", ["", "1 + 2i", "1+2j", "(1+2i)", "nan", "inf+0i", "1+2", "i1", "1e+i"])
def test_parse_complex_rejects(bad):
    with pytest.raises(ValueError):
        parse_complex(bad)


def test_dumps_sorted_and_17_digits():
    out = dumps({"y": 0.0, "x": 1.0, "h": math.pi, "flag": True, "k": -3, "l": [0.1, []]})
    assert out == '{"flag":true,"h":3.1415926535897931,"k":-3,"l":[0.10000000000000001,[]],"x":1,"y":0}'
    assert json.loads(out)["h"] == math.pi
    with pytest.raises(ValueError):
        dumps({"x": float("nan")})


def test_dumps_indented_is_valid_json():
    obj = {"b": [1.5, {"c": None}], "a": {}}
    assert json.loads(dumps(obj, indent=2)) == obj


def test_read_csv_with_and_without_header():
    assert read_path_csv("re,im\n1,0\n0,1\n") == [1, 1j]
    assert read_path_csv("1,0\n\n0,1\n") == [1, 1j]


def test_read_csv_names_bad_row():
    with pytest.raises(PathFormatError) as info:
        read_path_csv("re,im\n1,0\n0,oops\n1,1\n", "p.csv")
    assert info.value.row == 3
    assert "row 3" in str(info.value)
    with pytest.raises(PathFormatError) as info:
        read_path_csv("1,0\n1,2,3\n")
    assert info.value.row == 2


def test_read_json():
    assert read_path_json("[[1, 0], [0, 1.5]]") == [1, 1.5j]
    with pytest.raises(PathFormatError) as info:
        read_path_json('[[1, 0], [0], [1, 1]]')
    assert info.value.row == 2


def test_read_path_dispatch(tmp_path):
    (tmp_path / "a.json").write_text("[[1, 2]]")
    (tmp_path / "a.csv").write_text("1,2\n")
    assert read_path(tmp_path / "a.json") == read_path(tmp_path / "a.csv") == [1 + 2j]


def test_faces_single_quad():
    assert grid_faces(2, 2) == [(1, 3, 4), (1, 4, 2)]


def test_faces_count_and_diagonal():
    faces = grid_faces(32, 256)
    assert len(faces) == (32 - 1) * (256 - 1) * 2 == 15810
    # every quad is split along (i, j) -> (i + 1, j + 1)
    nv = 256
    for (a, b, c), (a2, c2, d) in zip(faces[::2], faces[1::2]):
        assert a == a2 and c == c2 and c - a == nv + 1


def test_obj_roundtrip(tmp_path):
    spec = GridSpec(0, 1, 0, 2 * math.pi, 32, 256)
    verts, faces = helicoid_mesh(HelicoidParams(1), spec)
    out = tmp_path / "h.obj"
    write_obj(out, verts, faces)
    raw = out.read_bytes()
    assert b"\r" not in raw and raw.endswith(b"\n")
    v2, f2 = read_obj(out)
    assert len(v2) == 8192 and len(f2) == 15810
    assert v2 == verts
    for z, q in zip(make_grid(spec), v2):
        assert q.x**2 + q.y**2 == pytest.approx(math.exp(2 * z.real), rel=1e-13)


def test_obj_text_two_by_two():
    verts, faces = helicoid_mesh(1, GridSpec(0, 1, 0, 1, 2, 2))
    lines = obj_text(verts, faces).splitlines()
    assert [ln.split()[0] for ln in lines] == ["v"] * 4 + ["f"] * 2
    assert lines[0] == "v 1 0 0"
