"""JSON complex format.

    {"vertices": [...], "facets": [[...], ...]}
    {"vertices": ["1.1", ...], "facets": [["1.1", "2.1"], ...], "colors": 2}

Colored vertices are written "i.j" for u_{i,j}.  Vertices listed but lying in
no facet are kept as isolated vertices.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .colored import ColoredComplex, ColoredGround
from .complex import Complex

AnyComplex = Union[Complex, ColoredComplex]


def to_dict(c: AnyComplex) -> dict:
    if isinstance(c, ColoredComplex):
        name = c.ground.name
        cx = c.complex
        return {
            "vertices": [name(v) for v in cx.vertices],
            "facets": [[name(v) for v in sorted(F)] for F in cx.facets],
            "colors": c.d,
        }
    return {"vertices": c.vertices, "facets": [sorted(F) for F in c.facets]}


def from_dict(data: dict) -> AnyComplex:
    facets = data.get("facets")
    if facets is None:
        raise ValueError("complex JSON needs a 'facets' list")
    verts = data.get("vertices", [])
    d = data.get("colors")
    if d is None and any(isinstance(v, str) for f in facets for v in f):
        d = max(int(str(v).split(".")[0]) for f in facets for v in f)
    if d is not None:
        ground = ColoredGround(int(d))
        conv = lambda v: ground.parse(v) if isinstance(v, str) else int(v)  # noqa: E731
        faces = [[conv(v) for v in f] for f in facets] + [[conv(v)] for v in verts]
        return ColoredComplex(Complex(faces or [[]]), int(d))
    faces = [[int(v) for v in f] for f in facets] + [[int(v)] for v in verts]
    return Complex(faces or [[]])


def dumps(c: AnyComplex) -> str:
    return json.dumps(to_dict(c))


def loads(text: str) -> AnyComplex:
    return from_dict(json.loads(text))


def read_complex(path: Union[str, Path]) -> AnyComplex:
    return loads(Path(path).read_text())


def write_complex(c: AnyComplex, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(c) + "\n")


def plain(c: AnyComplex) -> Complex:
    return c.complex if isinstance(c, ColoredComplex) else c

