"""One executable check per stated result or conjecture.

Each check takes an :class:`Instance`, a prime p and keyword options, and
returns a :class:`CheckReport` whose witness carries both sides of every
inequality it tested.  Verdicts: ``pass``; ``equality`` when the headline
inequality is tight; ``skipped`` when the instance is outside the statement's
hypotheses; ``fail``; and for conjectures ``certificate`` (a counterexample).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb
from typing import Callable, Optional

import gmpy2

from .canon import betti_bound, canonical_rep, face_lower_bound, top_count_for_bound
from .colored import (
    ColoredComplex,
    InvalidFVectorError,
    build_sigma,
    first_rainbow_sets,
    is_color_shifted,
    is_revlex,
    revlex_complex_fvec,
    revlex_complex_top,
    shifted_betti_top,
)
from .complex import Complex, antistar, link
from .corpus import balanced_instance
from .graph import (
    Graph,
    chromatic_number,
    clique_complex,
    from_graph6,
    is_flag,
    is_turan_complex,
    underlying_graph,
    zykov_check,
)
from .homology import betti_vector
from .report import CERTIFICATE, FAIL, PASS, SKIPPED, CheckReport, verdict
from .turan import turan_coeff, turan_f_vector


@dataclass
class Instance:
    """A complex under test plus whatever structure it came with."""

    descriptor: str
    complex: Complex
    graph: Optional[Graph] = None
    colored: Optional[ColoredComplex] = None

    @classmethod
    def from_descriptor(cls, desc: str) -> "Instance":
        if desc.startswith("balanced:"):
            _, seed, i = desc.split(":")
            cc = balanced_instance(int(seed), int(i))
            return cls(desc, cc.complex, colored=cc)
        g = from_graph6(desc)
        return cls(desc, clique_complex(g), graph=g)

    @classmethod
    def from_complex(cls, c, descriptor: str = "") -> "Instance":
        if isinstance(c, ColoredComplex):
            return cls(descriptor or repr(c.complex), c.complex, colored=c)
        return cls(descriptor or repr(c), c)

    @property
    def dim(self) -> int:
        return self.complex.dim

    @cached_property
    def fvec(self) -> tuple[int, ...]:
        return self.complex.f_vector()

    def f(self, i: int) -> int:
        """f_i, zero above the dimension (f_{-1} = 1)."""
        return self.fvec[i + 1] if i + 1 < len(self.fvec) else 0

    def betti(self, k: int, p: int) -> int:
        return betti_vector(self.complex, p)[k]

    @cached_property
    def flag(self) -> bool:
        return self.graph is not None or is_flag(self.complex)

    @cached_property
    def colors(self) -> Optional[int]:
        """Number of colors available: the given coloring, else the chromatic
        number of the 1-skeleton of a flag complex."""
        if self.colored is not None:
            return self.colored.d
        if self.flag:
            g = self.graph if self.graph is not None else underlying_graph(self.complex)[0]
            return chromatic_number(g)
        return None

    @property
    def balanced(self) -> bool:
        return self.dim >= 0 and self.colors == self.dim + 1


def _report(check: str, inst: Instance, p: int, ok: bool, tight: bool = False, **witness) -> CheckReport:
    return CheckReport(check, inst.descriptor, verdict(ok, tight), witness, p)


def _skip(check: str, inst: Instance, p: int, why: str) -> CheckReport:
    return CheckReport(check, inst.descriptor, SKIPPED, {"reason": why}, p)


def _fail(check: str, inst: Instance, p: int, **witness) -> CheckReport:
    return CheckReport(check, inst.descriptor, FAIL, witness, p)


# -- exact comparison against C(d,i) (a^(1/d) + 1)^i -----------------------


def compare_root_power(F: int, coeff: int, a: int, d: int, i: int) -> int:
    """Sign of F - coeff * (a^(1/d) + 1)^i, computed exactly.

    A perfect d-th power is compared in integers.  Otherwise the root is
    irrational, so the difference is never zero, and dyadic brackets
    lo <= a^(1/d) < hi are tightened until the sign is decided.
    """
    root, exact = gmpy2.iroot(a, d)
    if exact or i == 0:
        rhs = coeff * (int(root) + 1) ** i
        return (F > rhs) - (F < rhs)
    bits = 16
    while True:
        lo = int(gmpy2.iroot(a << (bits * d), d)[0])
        scale = 1 << bits
        below = coeff * (1 + Fraction(lo, scale)) ** i
        above = coeff * (1 + Fraction(lo + 1, scale)) ** i
        if F >= above:
            return 1
        if F <= below:
            return -1
        bits *= 2


def _f_poly_bound(check: str, inst: Instance, p: int, turan_clause: bool) -> CheckReport:
    d = inst.dim + 1
    if d < 1:
        return _skip(check, inst, p, "void top dimension")
    a = inst.betti(d - 1, p)
    signs = [compare_root_power(inst.f(i - 1), comb(d, i), a, d, i) for i in range(d + 1)]
    ok = all(s >= 0 for s in signs)
    all_equal = all(s == 0 for s in signs)
    wit = {"d": d, "a": a, "f": list(inst.fvec), "sign": signs}
    if turan_clause and ok:
        root, exact = gmpy2.iroot(a, d)
        iso = bool(exact) and inst.f(0) == d * (int(root) + 1) and is_turan_complex(inst.complex, d)
        wit["isomorphic_to_turan"] = iso
        ok = iso == all_equal
    return _report(check, inst, p, ok, all_equal, **wit)


# -- flag theorems ---------------------------------------------------------


def check_zykov(inst: Instance, p: int = 2, **_) -> CheckReport:
    if not inst.flag:
        return _skip("ZYKOV", inst, p, "not flag")
    rep = zykov_check(inst.complex)
    rep.instance, rep.p = inst.descriptor, p
    return rep


def check_thm_1_1(inst: Instance, p: int = 2, **_) -> CheckReport:
    """A balanced complex with the same f-vector and top Betti number at least as large."""
    if not inst.flag:
        return _skip("THM_1_1", inst, p, "not flag")
    d = inst.dim
    if d < 0:
        return _skip("THM_1_1", inst, p, "void complex")
    try:
        gamma = revlex_complex_fvec(inst.fvec, d + 1)
    except InvalidFVectorError as err:
        return _fail("THM_1_1", inst, p, f=list(inst.fvec), error=str(err))
    bd, bg = inst.betti(d, p), betti_vector(gamma.complex, p)[d]
    same_f = gamma.complex.f_vector() == inst.fvec
    return _report("THM_1_1", inst, p, same_f and bg >= bd, bg == bd and bd > 0,
                   d=d, f=list(inst.fvec), f_gamma=list(gamma.complex.f_vector()),
                   betti=bd, betti_gamma=bg)


def check_thm_1_2(inst: Instance, p: int = 2, **_) -> CheckReport:
    """beta_{d-1} is at most the shifted bound computed from any single f_{k-1}."""
    if not inst.flag:
        return _skip("THM_1_2", inst, p, "not flag")
    d = inst.dim + 1
    if d < 1:
        return _skip("THM_1_2", inst, p, "void complex")
    b = inst.betti(d - 1, p)
    bounds = [betti_bound(inst.f(k - 1), k, d) for k in range(1, d + 1)]
    return _report("THM_1_2", inst, p, all(b <= x for x in bounds), b == bounds[-1],
                   d=d, betti=b, bounds=bounds)


def _face_bounds(check: str, inst: Instance, p: int, d: int, a: int) -> CheckReport:
    """f_{i-1} >= the (d,d)-representation bound for all i, plus rigidity."""
    rep = canonical_rep(a, d, d)
    bounds = [face_lower_bound(a, d, i) for i in range(d + 1)]
    f = [inst.f(i - 1) for i in range(d + 1)]
    ok = all(x >= y for x, y in zip(f, bounds))
    rigid = True
    for k in range(rep.s + 1, d + 1):
        if f[k] == bounds[k] and any(f[i] != bounds[i] for i in range(k, d + 1)):
            rigid = False
    return _report(check, inst, p, ok and rigid, f[d] == bounds[d],
                   d=d, a=a, rep=list(rep.indices), f=f, bounds=bounds, rigid=rigid)


def check_thm_1_3(inst: Instance, p: int = 2, **_) -> CheckReport:
    if not inst.flag:
        return _skip("THM_1_3", inst, p, "not flag")
    d = inst.dim + 1
    a = inst.betti(d - 1, p) if d >= 1 else 0
    if a == 0:
        return _skip("THM_1_3", inst, p, "top Betti number is zero")
    return _face_bounds("THM_1_3", inst, p, d, a)


def check_cor_1_4(inst: Instance, p: int = 2, **_) -> CheckReport:
    """f(Delta) >= f(T) for every Turan complex T of the same dimension with
    beta(T) <= beta(Delta); when beta(T) = beta(Delta), equal vertex counts,
    equal f-vectors and isomorphism all coincide."""
    if not inst.flag:
        return _skip("COR_1_4", inst, p, "not flag")
    d = inst.dim + 1
    a = inst.betti(d - 1, p) if d >= 1 else 0
    if a == 0:
        return _skip("COR_1_4", inst, p, "top Betti number is zero")
    f = list(inst.fvec)
    swept, ok, tight = [], True, False
    n = d
    while turan_coeff(n - d, d, d) <= a:
        t = turan_f_vector(n, d)
        ok = ok and all(x >= y for x, y in zip(f, t))
        if turan_coeff(n - d, d, d) == a:
            same_n = f[1] == n
            same_f = tuple(f) == t
            iso = same_n and is_turan_complex(inst.complex, d)
            if not same_n == same_f == iso:
                ok = False
            tight = tight or iso
            swept.append({"n": n, "same_n": same_n, "same_f": same_f, "iso": iso})
        else:
            swept.append({"n": n})
        n += 1
    return _report("COR_1_4", inst, p, ok, tight, d=d, a=a, f=f, turan=swept)


def check_thm_1_5(inst: Instance, p: int = 2, **_) -> CheckReport:
    if not inst.flag:
        return _skip("THM_1_5", inst, p, "not flag")
    return _f_poly_bound("THM_1_5", inst, p, turan_clause=True)


def check_meshulam(inst: Instance, p: int = 2, **_) -> CheckReport:
    """Nonvanishing beta_{k-1} forces f_{i-1} >= 2^i C(k,i)."""
    if not inst.flag:
        return _skip("MESHULAM", inst, p, "not flag")
    ks = [k for k in range(1, inst.dim + 2) if inst.betti(k - 1, p)]
    if not ks:
        return _skip("MESHULAM", inst, p, "no nonvanishing Betti number")
    ok, tight, rows = True, False, []
    for k in ks:
        bounds = [turan_coeff(2 * k, i, k) for i in range(k + 1)]
        if bounds != [2 ** i * comb(k, i) for i in range(k + 1)]:
            raise ArithmeticError(f"Turan coefficient mismatch at k={k}")
        f = [inst.f(i - 1) for i in range(k + 1)]
        ok = ok and all(x >= y for x, y in zip(f, bounds))
        tight = tight or f == bounds
        rows.append({"k": k, "f": f, "bounds": bounds})
    return _report("MESHULAM", inst, p, ok, tight, checked=rows)


def check_lem_4_1(inst: Instance, p: int = 2, **_) -> CheckReport:
    """beta_k(Delta) <= beta_k(antistar v) + beta_{k-1}(link v) for every vertex."""
    c = inst.complex
    bad = []
    for v in c.vertices:
        ast, lk = betti_vector(antistar(c, [v]), p), betti_vector(link(c, [v]), p)
        for k in range(0, c.dim + 1):
            lhs, rhs = inst.betti(k, p), ast[k] + lk[k - 1]
            if lhs > rhs:
                bad.append({"v": v, "k": k, "lhs": lhs, "rhs": rhs})
    return _report("LEM_4_1", inst, p, not bad, vertices=len(c.vertices), violations=bad)


@lru_cache(maxsize=1024)
def _revlex_top_betti(N: int, d: int, p: int) -> int:
    """beta_{d-1} of the revlex d-colored complex with N top faces."""
    gamma = revlex_complex_top(N, d)
    if not is_revlex(gamma):
        raise ArithmeticError(f"closure of the first {N} rainbow {d}-sets is not revlex")
    b = betti_vector(gamma.complex, p)[d - 1]
    if N and b != shifted_betti_top(gamma):
        raise ArithmeticError(f"revlex top Betti mismatch at N={N}, d={d}")
    return b


def check_thm_4_2(inst: Instance, p: int = 2, **_) -> CheckReport:
    """The revlex (d+1)-colored complex with f_d(Delta) top faces has top
    Betti number at least beta_d(Delta); the intermediate complex Sigma is
    checked step by step."""
    if not inst.flag:
        return _skip("THM_4_2", inst, p, "not flag")
    d = inst.dim
    if d < 0:
        return _skip("THM_4_2", inst, p, "void complex")
    fd, bd = inst.f(d), inst.betti(d, p)
    bg = _revlex_top_betti(fd, d + 1, p)
    wit = {"d": d, "f_d": fd, "betti": bd, "betti_revlex": bg}
    ok = bg >= bd
    if d >= 1:
        res = build_sigma(inst.complex)
        sb = betti_vector(res.sigma.complex, p)
        parts = [_revlex_top_betti(x, d, p) for x in res.a]
        link_b = [betti_vector(lk, p)[d - 1] for lk in res.links]
        wit.update(a=res.a, betti_sigma=sb[d], betti_parts=parts, betti_links=link_b)
        ok = ok and all([
            res.sigma.complex.f_vector()[d + 1] == fd,
            all(res.a[0] >= x for x in res.a),
            sb[d] == sum(parts[1:]),
            sb[d] >= bd,
            all(x >= y for x, y in zip(parts, link_b)),
            bg >= sb[d],
        ])
    return _report("THM_4_2", inst, p, ok, bg == bd and bd > 0, **wit)


# -- balanced theorems ----------------------------------------------------


@lru_cache(maxsize=1024)
def _bound_attained(N: int, k: int, d: int, p: int) -> bool:
    """The revlex complex generated by the first N rainbow k-sets and the first
    top_count_for_bound(N, k, d) rainbow d-sets keeps f_{k-1} = N and reaches
    top Betti number betti_bound(N, k, d)."""
    gens = first_rainbow_sets(top_count_for_bound(N, k, d), d, d) + first_rainbow_sets(N, k, d)
    gamma = ColoredComplex(Complex(gens), d)
    return (
        len(gamma.complex.faces_of_dim(k - 1)) == N
        and is_revlex(gamma)
        and betti_vector(gamma.complex, p)[d - 1] == betti_bound(N, k, d)
    )


def check_thm_3_5(inst: Instance, p: int = 2, **_) -> CheckReport:
    if not inst.balanced:
        return _skip("THM_3_5", inst, p, "not balanced")
    d = inst.dim + 1
    b = inst.betti(d - 1, p)
    bounds = [betti_bound(inst.f(k - 1), k, d) for k in range(1, d + 1)]
    attained = [_bound_attained(inst.f(k - 1), k, d, p) for k in range(1, d + 1)]
    return _report("THM_3_5", inst, p, all(b <= x for x in bounds) and all(attained),
                   b == bounds[-1], d=d, betti=b, bounds=bounds, attained=attained)


def check_cor_5_2(inst: Instance, p: int = 2, **_) -> CheckReport:
    if not inst.balanced:
        return _skip("COR_5_2", inst, p, "not balanced")
    d = inst.dim + 1
    a = inst.betti(d - 1, p)
    if a == 0:
        return _skip("COR_5_2", inst, p, "top Betti number is zero")
    return _face_bounds("COR_5_2", inst, p, d, a)


def check_cor_5_4(inst: Instance, p: int = 2, **_) -> CheckReport:
    if not inst.balanced:
        return _skip("COR_5_4", inst, p, "not balanced")
    return _f_poly_bound("COR_5_4", inst, p, turan_clause=False)


def check_ffk_cont(inst: Instance, p: int = 2, **_) -> CheckReport:
    """For an r-colorable complex and j <= k: f_{j-1} >= C(r,j) alpha^j where
    f_{k-1} = C(r,k) alpha^k, compared as
    (f_{j-1} / C(r,j))^k >= (f_{k-1} / C(r,k))^j in integers."""
    r = inst.colors
    if r is None:
        return _skip("FFK_CONT", inst, p, "no coloring known")
    bad = []
    for k in range(1, min(r, inst.dim + 1) + 1):
        fk, ck = inst.f(k - 1), comb(r, k)
        for j in range(1, k + 1):
            fj, cj = inst.f(j - 1), comb(r, j)
            if fj ** k * ck ** j < fk ** j * cj ** k:
                bad.append({"k": k, "j": j, "f_k": fk, "f_j": fj})
    return _report("FFK_CONT", inst, p, not bad, r=r, f=list(inst.fvec), violations=bad)


def check_betti_formula(inst: Instance, p: int = 2, **_) -> CheckReport:
    """Top Betti number of a color-shifted balanced complex counts the top
    faces avoiding index 1."""
    cc = inst.colored
    if cc is None or not cc.is_balanced or not is_color_shifted(cc):
        return _skip("BETTI_FORMULA", inst, p, "not a color-shifted balanced complex")
    formula, ranked = shifted_betti_top(cc), inst.betti(cc.d - 1, p)
    return _report("BETTI_FORMULA", inst, p, formula == ranked, formula=formula, betti=ranked)


# -- conjectures --------------------------------------------------------


def _scan_ks(inst: Instance, p: int, opts: dict, lo: int) -> list[int]:
    want = opts.get("k")
    return [k for k in range(lo, inst.dim + 2)
            if inst.betti(k - 1, p) > 0 and (want is None or k == want)]


def _conjecture_report(check: str, inst: Instance, p: int, rows: list, bad: list) -> CheckReport:
    if not rows:
        return _skip(check, inst, p, "no nonvanishing Betti number in range")
    v = CERTIFICATE if bad else PASS
    return CheckReport(check, inst.descriptor, v, {"checked": rows, "violations": bad}, p)


def check_conj_6_2(inst: Instance, p: int = 2, **opts) -> CheckReport:
    """beta_{k-1} = a > 0 conjecturally forces the (k,k)-representation face bounds."""
    if not inst.flag:
        return _skip("CONJ_6_2", inst, p, "not flag")
    rows, bad = [], []
    for k in _scan_ks(inst, p, opts, 1):
        a = inst.betti(k - 1, p)
        bounds = [face_lower_bound(a, k, i) for i in range(k + 1)]
        f = [inst.f(i - 1) for i in range(k + 1)]
        rows.append({"k": k, "a": a, "f": f, "bounds": bounds})
        if any(x < y for x, y in zip(f, bounds)):
            bad.append(rows[-1])
    return _conjecture_report("CONJ_6_2", inst, p, rows, bad)


def check_conj_6_3(inst: Instance, p: int = 2, **opts) -> CheckReport:
    """beta_{k-1} = a > 0 conjecturally forces f >= f(T) for every Turan
    (k-1)-complex T with beta_{k-1}(T) <= a."""
    if not inst.flag:
        return _skip("CONJ_6_3", inst, p, "not flag")
    rows, bad = [], []
    for k in _scan_ks(inst, p, opts, 1):
        a = inst.betti(k - 1, p)
        n = k
        while turan_coeff(n - k, k, k) <= a:
            t = turan_f_vector(n, k)
            row = {"k": k, "a": a, "n": n, "turan": list(t)}
            if any(inst.fvec[i] < t[i] for i in range(len(t))):
                bad.append(row)
            rows.append(row)
            n += 1
    return _conjecture_report("CONJ_6_3", inst, p, rows, bad)


THEOREM_CHECKS: dict[str, Callable[..., CheckReport]] = {
    "ZYKOV": check_zykov,
    "THM_1_1": check_thm_1_1,
    "THM_1_2": check_thm_1_2,
    "THM_1_3": check_thm_1_3,
    "COR_1_4": check_cor_1_4,
    "THM_1_5": check_thm_1_5,
    "MESHULAM": check_meshulam,
    "LEM_4_1": check_lem_4_1,
    "THM_4_2": check_thm_4_2,
    "THM_3_5": check_thm_3_5,
    "COR_5_2": check_cor_5_2,
    "COR_5_4": check_cor_5_4,
    "FFK_CONT": check_ffk_cont,
    "BETTI_FORMULA": check_betti_formula,
}

CONJECTURE_CHECKS: dict[str, Callable[..., CheckReport]] = {
    "CONJ_6_2": check_conj_6_2,
    "CONJ_6_3": check_conj_6_3,
}

ALL_CHECKS = {**THEOREM_CHECKS, **CONJECTURE_CHECKS}


def resolve_checks(spec: str | list[str]) -> list[str]:
    """'all' (theorems), 'conjectures', or a comma list of ids, in registry order."""
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    out: list[str] = []
    for name in (x.strip().upper() for x in names if x.strip()):
        if name == "ALL":
            out += THEOREM_CHECKS
        elif name == "CONJECTURES":
            out += CONJECTURE_CHECKS
        elif name in ALL_CHECKS:
            out.append(name)
        else:
            raise ValueError(f"unknown check {name!r}")
    order = list(ALL_CHECKS)
    return sorted(set(out), key=order.index)


def run_check(name: str, inst: Instance, p: int = 2, **opts) -> CheckReport:
    return ALL_CHECKS[name](inst, p, **opts)
