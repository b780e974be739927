"""Finite simplicial complexes stored as their full face family.

Vertices are plain integers.  Colored vertices u_{i,j} are encoded as
integers of the canonical partition Pi_d (see :mod:`flagcx.colored`), whose
integer order coincides with the colored linear order, so every routine here
works unchanged on colored complexes.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

Face = frozenset


class MalformedFaceError(ValueError):
    pass


class NotAFaceError(ValueError):
    pass


class DisjointnessError(ValueError):
    pass


def face_key(face: Iterable[int]) -> tuple:
    """Canonical sort key: dimension first, then the sorted vertex list."""
    verts = sorted(face)
    return (len(verts), verts)


def _as_face(face: Iterable[int]) -> frozenset:
    verts = list(face)
    fs = frozenset(verts)
    if len(fs) != len(verts):
        raise MalformedFaceError(f"face {verts!r} repeats a vertex")
    return fs


def _maximal(faces: Iterable[frozenset]) -> list[frozenset]:
    ordered = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset] = []
    for f in ordered:
        if not any(f <= g for g in kept):
            kept.append(f)
    return kept


class Complex:
    """An immutable simplicial complex; always contains the empty face."""

    __slots__ = ("_faces", "_by_dim", "_hash")

    def __init__(self, faces: Iterable[Iterable[int]]):
        gens = [_as_face(f) for f in faces]
        if not gens:
            raise ValueError("the void complex (no faces at all) is not allowed")
        closure: set[frozenset] = set()
        for top in _maximal(gens):
            if top in closure:
                continue
            verts = sorted(top)
            for size in range(len(verts) + 1):
                closure.update(frozenset(c) for c in combinations(verts, size))
        self._init(closure)

    @classmethod
    def from_closed(cls, faces: Iterable[frozenset]) -> "Complex":
        """Build from a family already known to be closed under inclusion."""
        obj = cls.__new__(cls)
        fam = set(faces)
        fam.add(frozenset())
        obj._init(fam)
        return obj

    def _init(self, faces: set) -> None:
        self._faces = frozenset(faces)
        top = max(len(f) for f in self._faces)
        by_dim: list[list[frozenset]] = [[] for _ in range(top + 1)]
        for f in self._faces:
            by_dim[len(f)].append(f)
        self._by_dim = tuple(
            tuple(sorted(group, key=lambda f: sorted(f))) for group in by_dim
        )
        self._hash = None

    # -- basic queries -------------------------------------------------

    @property
    def faces(self) -> frozenset:
        return self._faces

    @property
    def dim(self) -> int:
        return len(self._by_dim) - 2

    def faces_of_dim(self, k: int) -> tuple:
        """k-faces in canonical order (empty tuple when there are none)."""
        if k < -1 or k + 1 >= len(self._by_dim):
            return ()
        return self._by_dim[k + 1]

    def sorted_faces(self) -> list:
        return [f for group in self._by_dim for f in group]

    @property
    def vertices(self) -> list[int]:
        return sorted(v for f in self.faces_of_dim(0) for v in f)

    @property
    def facets(self) -> list[frozenset]:
        covered = {G - {v} for G in self._faces for v in G}
        return sorted((f for f in self._faces if f not in covered), key=face_key)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(group) for group in self._by_dim)

    def __contains__(self, face) -> bool:
        return frozenset(face) in self._faces

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.sorted_faces())

    def __len__(self) -> int:
        return len(self._faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._faces == other._faces

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._faces)
        return self._hash

    def __repr__(self) -> str:
        gens = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"Complex<{gens}>"


def generate(faces: Sequence[Iterable[int]]) -> Complex:
    """The complex generated by ``faces`` (their downward closure)."""
    return Complex(faces)


def f_vector(c: Complex) -> tuple[int, ...]:
    return c.f_vector()


def h_vector(f: Sequence[int]) -> tuple[int, ...]:
    """h-vector of an f-vector ``(f_{-1}, ..., f_{d-1})``.

    Solves sum h_i x^i = sum f_{i-1} x^i (1-x)^(d-i) exactly.
    """
    d = len(f) - 1
    return tuple(
        sum((-1) ** (i - j) * comb(d - j, i - j) * f[j] for j in range(i + 1))
        for i in range(d + 1)
    )


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`h_vector`."""
    d = len(h) - 1
    return tuple(sum(comb(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1))


def _require_face(c: Complex, face) -> frozenset:
    fs = frozenset(face)
    if fs not in c.faces:
        raise NotAFaceError(f"{sorted(fs)} is not a face of the complex")
    return fs


def link(c: Complex, face) -> Complex:
    F = _require_face(c, face)
    return Complex.from_closed(G for G in c.faces if not (G & F) and (G | F) in c.faces)


def antistar(c: Complex, face) -> Complex:
    F = _require_face(c, face)
    return Complex.from_closed(G for G in c.faces if not (G & F))


def closed_star(c: Complex, face) -> Complex:
    F = _require_face(c, face)
    return Complex.from_closed(G for G in c.faces if (G | F) in c.faces)


def induced(c: Complex, vertices: Iterable[int]) -> Complex:
    W = frozenset(vertices)
    return Complex.from_closed(G for G in c.faces if G <= W)


def join(a: Complex, b: Complex) -> Complex:
    if set(a.vertices) & set(b.vertices):
        raise DisjointnessError("join needs disjoint vertex sets")
    return Complex.from_closed(F | G for F in a.faces for G in b.faces)


def cone(c: Complex, v: int) -> Complex:
    if v in c.vertices:
        raise DisjointnessError(f"cone point {v} is already a vertex")
    return join(c, Complex([[v]]))


def facet_free_reduction(c: Complex, dims: Iterable[int]) -> Complex:
    """Strip facets whose dimension lies in ``dims``, largest dimension first."""
    faces = set(c.faces)
    for a in sorted(set(dims), reverse=True):
        layer = [F for F in faces if len(F) == a + 1]
        bigger = [G for G in faces if len(G) == a + 2]
        covered = {G - {v} for G in bigger for v in G}
        faces.difference_update(F for F in layer if F not in covered)
    return Complex.from_closed(faces)


def is_pure(c: Complex) -> bool:
    return len({len(f) for f in c.facets}) == 1


def h_polynomial_product(*hs: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of the product of h-polynomials."""
    out = [1]
    for h in hs:
        nxt = [0] * (len(out) + len(h) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(h):
                nxt[i + j] += x * y
        out = nxt
    return tuple(out)
