"""Colored, balanced, color-shifted and revlex complexes.

Colored vertices live in the canonical partition Pi_d: vertex u_{i,j} (color
i in [d], index j >= 1) is the integer (j-1)*d + i.  The integer order then is
exactly the colored linear order (larger index wins, ties broken by color),
and a class of size lambda_i is the first lambda_i members of Pi_{d,i}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator, Sequence

from .canon import shadow_down, shadow_up
from .complex import Complex, antistar, closed_star, join, link
from .graph import is_flag


class NotColorShiftedError(ValueError):
    pass


class InvalidFVectorError(ValueError):
    pass


@dataclass(frozen=True)
class ColoredGround:
    """An ordered partition (U_1, ..., U_d) embedded in Pi_d.

    ``sizes`` bounds each class (lambda_i); None means unbounded.
    """

    d: int
    sizes: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("need at least one color")
        if self.sizes is not None and len(self.sizes) != self.d:
            raise ValueError("one size per color class")

    def vertex(self, color: int, index: int) -> int:
        if not 1 <= color <= self.d or index < 1:
            raise ValueError(f"no vertex u_({color},{index}) with d={self.d}")
        if self.sizes is not None and index > self.sizes[color - 1]:
            raise ValueError(f"class {color} has only {self.sizes[color - 1]} vertices")
        return (index - 1) * self.d + color

    def color(self, v: int) -> int:
        return (v - 1) % self.d + 1

    def index(self, v: int) -> int:
        return (v - 1) // self.d + 1

    def name(self, v: int) -> str:
        return f"{self.color(v)}.{self.index(v)}"

    def parse(self, name: str) -> int:
        color, index = name.split(".")
        return self.vertex(int(color), int(index))

    def vertices(self) -> list[int]:
        if self.sizes is None:
            raise ValueError("unbounded ground set")
        return sorted(self.vertex(i + 1, j + 1) for i, lam in enumerate(self.sizes) for j in range(lam))


def recolor(v: int, d_from: int, d_to: int) -> int:
    """Re-encode vertex v of Pi_{d_from} as the same (color, index) in Pi_{d_to}."""
    color, index = (v - 1) % d_from + 1, (v - 1) // d_from + 1
    return (index - 1) * d_to + color


@dataclass(frozen=True)
class ColoredComplex:
    complex: Complex
    d: int
    ground: ColoredGround = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ground", ColoredGround(self.d))
        for face in self.complex.faces:
            colors = [self.ground.color(v) for v in face]
            if len(set(colors)) != len(colors):
                raise ValueError(f"face {sorted(face)} repeats a color")

    @property
    def is_balanced(self) -> bool:
        return self.complex.dim == self.d - 1

    def color(self, v: int) -> int:
        return self.ground.color(v)

    def index(self, v: int) -> int:
        return self.ground.index(v)


def is_color_shifted(cc: ColoredComplex) -> bool:
    """Every face survives lowering any vertex's in-class index by one.

    One step suffices: repeated single steps reach every lower index.
    """
    d, faces = cc.d, cc.complex.faces
    for F in faces:
        for v in F:
            if v > d and (F - {v}) | {v - d} not in faces:
                return False
    return True


def revlex_compare(A: Iterable[int], B: Iterable[int]) -> int:
    """-1, 0 or 1 as A <, =, > B in revlex: the larger max of the
    symmetric difference decides."""
    A, B = frozenset(A), frozenset(B)
    if len(A) != len(B):
        raise ValueError("revlex compares sets of equal size")
    if A == B:
        return 0
    return 1 if max(A - B) > max(B - A) else -1


def rainbow_sets_revlex(k: int, d: int) -> Iterator[tuple[int, ...]]:
    """All rainbow k-subsets of Pi_d in increasing revlex order (infinite for k >= 1)."""
    if k > d:
        return
    if k == 0:
        yield ()
        return

    def below(k: int, bound: int, banned: frozenset) -> Iterator[tuple[int, ...]]:
        # rainbow k-sets inside [1, bound) avoiding colors in banned
        if k == 0:
            yield ()
            return
        for m in range(1, bound):
            col = (m - 1) % d
            if col in banned or m < k:
                continue
            for rest in below(k - 1, m, banned | {col}):
                yield rest + (m,)

    m = k
    while True:
        yield from (rest + (m,) for rest in below(k - 1, m, frozenset({(m - 1) % d})))
        m += 1


def first_rainbow_sets(N: int, k: int, d: int) -> list[tuple[int, ...]]:
    sets = list(islice(rainbow_sets_revlex(k, d), N))
    if len(sets) < N:
        raise ValueError(f"only {len(sets)} rainbow {k}-sets exist for d={d}")
    return sets


def revlex_complex_top(N: int, d: int) -> ColoredComplex:
    """Downward closure of the first N rainbow d-sets of Pi_d in revlex order."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if N == 0:
        return ColoredComplex(Complex([[]]), d)
    return ColoredComplex(Complex(first_rainbow_sets(N, d, d)), d)


def is_revlex(cc: ColoredComplex) -> bool:
    """At every level the faces are an initial revlex segment of rainbow sets."""
    for k in range(1, cc.complex.dim + 2):
        layer = cc.complex.faces_of_dim(k - 1)
        if set(layer) != {frozenset(s) for s in first_rainbow_sets(len(layer), k, cc.d)}:
            return False
    return True


def ffk_conditions(f: Sequence[int], r: int) -> tuple[bool, bool]:
    """The two numerical forms of the colored Kruskal-Katona condition.

    First: f_{k-1} >= lower shadow of f_k; second: upper shadow of f_{k-1}
    >= f_k; both for k in [d-1] where f = (f_{-1}, ..., f_{d-1}).
    """
    d = len(f) - 1
    if d > r or f[0] != 1 or any(x < 1 for x in f):
        return False, False
    lower = all(f[k] >= shadow_down(f[k + 1], k + 1, r) for k in range(1, d))
    upper = all(shadow_up(f[k], k, r) >= f[k + 1] for k in range(1, d))
    return lower, upper


def ffk_check(f: Sequence[int], r: int) -> bool:
    lower, upper = ffk_conditions(f, r)
    if lower != upper:
        raise ArithmeticError(f"FFK conditions disagree on {list(f)} with r={r}")
    return lower


def revlex_complex_fvec(f: Sequence[int], d: int) -> ColoredComplex:
    """The revlex d-colored complex with f-vector f (closure verified explicitly)."""
    if not ffk_check(f, d):
        raise InvalidFVectorError(f"{list(f)} is not the f-vector of a {d}-colorable complex")
    faces = {frozenset()}
    for k in range(1, len(f)):
        faces.update(frozenset(s) for s in first_rainbow_sets(f[k], k, d))
    for F in faces:
        for v in F:
            if F - {v} not in faces:
                raise ArithmeticError(f"revlex layers of {list(f)} are not closed under inclusion")
    return ColoredComplex(Complex.from_closed(faces), d)


def _require_shifted(cc: ColoredComplex) -> None:
    if not is_color_shifted(cc):
        raise NotColorShiftedError("complex is not color-shifted")


def hat_complex(cc: ColoredComplex) -> Complex:
    """{F minus its index-1 vertices : F a top face} for a balanced color-shifted complex."""
    _require_shifted(cc)
    if not cc.is_balanced:
        raise ValueError("hat complex needs a balanced complex")
    d = cc.d
    tops = cc.complex.faces_of_dim(d - 1)
    hat = {frozenset(v for v in F if v > d) for F in tops}
    for F in hat:
        if F not in cc.complex.faces or any(F - {v} not in hat for v in F):
            raise ArithmeticError("hat family is not a subcomplex")
    if len(hat) != len(tops):
        raise ArithmeticError("hat family is not in bijection with the top faces")
    return Complex.from_closed(hat)


def shifted_betti_top(cc: ColoredComplex) -> int:
    """Top Betti number of a color-shifted (d-1)-complex: top faces avoiding
    every index-1 vertex."""
    _require_shifted(cc)
    if cc.complex.dim != cc.d - 1:
        raise ValueError("complex must have dimension d-1")
    return sum(1 for F in cc.complex.faces_of_dim(cc.d - 1) if min(F) > cc.d)


@dataclass
class SigmaResult:
    sigma: ColoredComplex
    v0: int
    order: list[int]
    a: list[int]
    links: list[Complex]
    parts: list[ColoredComplex]


def build_sigma(delta: Complex) -> SigmaResult:
    """Replace a flag d-complex by a (d+1)-colored complex with the same number
    of d-faces and at least its top Betti number.

    Peels the vertices outside the closed star of a busiest vertex v0 (ties:
    smallest id) in ascending order, records the (d-1)-face counts a_i of the
    successive links, and cones revlex d-colored complexes with those top
    counts over fresh vertices of a (d+1)-th color.
    """
    if not is_flag(delta):
        raise ValueError("build_sigma needs a flag complex")
    d = delta.dim
    if d < 1:
        raise ValueError("build_sigma needs dimension at least 1")
    tops = delta.faces_of_dim(d)
    load = {v: 0 for v in delta.vertices}
    for F in tops:
        for v in F:
            load[v] += 1
    v0 = min(delta.vertices, key=lambda v: (-load[v], v))
    star_verts = set(closed_star(delta, [v0]).vertices)
    order = [v for v in delta.vertices if v not in star_verts]

    a = [len(link(delta, [v0]).faces_of_dim(d - 1))]
    links = [link(delta, [v0])]
    tail_a, tail_links = [], []
    current = delta
    for v in reversed(order):
        lk = link(current, [v])
        tail_links.append(lk)
        tail_a.append(len(lk.faces_of_dim(d - 1)))
        current = antistar(current, [v])
    a += tail_a[::-1]
    links += tail_links[::-1]

    parts = [revlex_complex_top(x, d) for x in a]
    pieces = []
    for t, part in enumerate(parts):
        lifted = Complex.from_closed(frozenset(recolor(v, d, d + 1) for v in F) for F in part.complex.faces)
        apex = t * (d + 1) + (d + 1)
        pieces.append(join(lifted, Complex([[apex]])))
    sigma = Complex.from_closed(frozenset().union(*[p.faces for p in pieces]))
    return SigmaResult(ColoredComplex(sigma, d + 1), v0, order, a, links, parts)
