"""Triangulated helicoid patches as Wavefront OBJ."""

from __future__ import annotations

from pathlib import Path

from .formats import format_float
from .helicoid import HelicoidParams, HelicoidPoint, sample_surface
from .numerics import GridSpec


def grid_faces(nu: int, nv: int) -> list[tuple[int, int, int]]:
    """1-based triangles, two per quad, split along the (i,j)-(i+1,j+1) diagonal."""
    def idx(i, j):
        return i * nv + j + 1

    faces = []
    for i in range(nu - 1):
        for j in range(nv - 1):
            a, b, c, d = idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)
            faces.append((a, b, c))
            faces.append((a, c, d))
    return faces


def helicoid_mesh(p: HelicoidParams | float, spec: GridSpec):
    return sample_surface(p, spec), grid_faces(spec.nu, spec.nv)


def obj_text(vertices, faces) -> str:
    lines = [f"v {format_float(q[0])} {format_float(q[1])} {format_float(q[2])}" for q in vertices]
    lines += [f"f {a} {b} {c}" for a, b, c in faces]
    return "\n".join(lines) + "\n"


def write_obj(path: str | Path, vertices, faces) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(obj_text(vertices, faces))


def read_obj(path: str | Path) -> tuple[list[HelicoidPoint], list[tuple[int, int, int]]]:
    verts, faces = [], []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            tag, *rest = line.split() or [""]
            if tag == "v":
                verts.append(HelicoidPoint(*map(float, rest[:3])))
            elif tag == "f":
                faces.append(tuple(int(t.split("/")[0]) for t in rest))
    return verts, faces
