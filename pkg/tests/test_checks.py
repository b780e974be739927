from decimal import Decimal, getcontext
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagcx.checks import (
    ALL_CHECKS,
    CONJECTURE_CHECKS,
    THEOREM_CHECKS,
    Instance,
    compare_root_power,
    resolve_checks,
    run_check,
)
from flagcx.colored import revlex_complex_top
from flagcx.complex import Complex
from flagcx.graph import Graph, clique_complex, to_graph6, turan_graph
from flagcx.report import EQUALITY, PASS, SKIPPED

C4 = Instance.from_descriptor("C]")
K23 = Instance.from_descriptor(to_graph6(turan_graph(5, 2)))
OCTA = Instance.from_descriptor(to_graph6(turan_graph(6, 3)))


def test_top_betti_bound_square():
    r = run_check("THM_1_2", C4)
    assert r.verdict == EQUALITY and r.witness["bounds"][-1] == 1 and r.witness["betti"] == 1


def test_face_lower_bound_k23():
    r = run_check("THM_1_3", K23)
    assert r.witness["a"] == 2 and r.witness["bounds"] == [1, 5, 6]
    assert r.witness["f"] == [1, 5, 6] and r.verdict == EQUALITY


def test_root_bound_octahedron():
    r = run_check("THM_1_5", OCTA)
    assert r.verdict == EQUALITY and r.witness["isomorphic_to_turan"]
    assert r.witness["sign"] == [0, 0, 0, 0]


def test_root_bound_strict_on_path():
    path = Instance.from_descriptor(to_graph6(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])))
    assert run_check("THM_1_5", path).verdict == PASS


def test_non_flag_skips():
    hollow = Instance.from_complex(Complex([[1, 2], [2, 3], [1, 3]]), "hollow")
    for name in ("ZYKOV", "THM_1_1", "THM_1_2", "CONJ_6_2"):
        assert run_check(name, hollow).verdict == SKIPPED
    assert run_check("LEM_4_1", hollow).verdict == PASS
    assert run_check("BETTI_FORMULA", hollow).verdict == SKIPPED


def test_balanced_instance_checks():
    inst = Instance.from_complex(revlex_complex_top(9, 3), "revlex")
    assert inst.balanced and inst.colors == 3
    for name in ("THM_3_5", "COR_5_2", "COR_5_4", "BETTI_FORMULA", "FFK_CONT"):
        assert run_check(name, inst, 3).ok


@pytest.mark.parametrize("p", [2, 3, 5])
def test_all_checks_on_examples(p):
    for inst in (C4, K23, OCTA):
        for name in ALL_CHECKS:
            assert run_check(name, inst, p).ok


def test_conjecture_k_filter():
    r = run_check("CONJ_6_2", OCTA, 2, k=3)
    assert [row["k"] for row in r.witness["checked"]] == [3]
    assert run_check("CONJ_6_3", OCTA, 2, k=1).verdict == SKIPPED


def test_resolve():
    assert resolve_checks("all") == list(THEOREM_CHECKS)
    assert resolve_checks("conjectures") == list(CONJECTURE_CHECKS)
    assert resolve_checks("thm_1_2,ZYKOV") == ["ZYKOV", "THM_1_2"]
    with pytest.raises(ValueError):
        resolve_checks("THM_9_9")


def _sign_decimal(F, coeff, a, d, i):
    getcontext().prec = 120
    rhs = coeff * (Decimal(a) ** (Decimal(1) / d) + 1) ** i
    diff = Decimal(F) - rhs
    return 0 if abs(diff) < Decimal(10) ** -80 else (1 if diff > 0 else -1)


@given(st.integers(0, 10 ** 6), st.integers(1, 6), st.data())
def test_compare_root_power_matches_high_precision(a, d, data):
    i = data.draw(st.integers(0, d))
    coeff = comb(d, i)
    approx = int(coeff * (a ** (1 / d) + 1) ** i)
    F = data.draw(st.integers(max(0, approx - 3), approx + 3))
    assert compare_root_power(F, coeff, a, d, i) == _sign_decimal(F, coeff, a, d, i)


def test_compare_root_power_perfect_powers():
    assert compare_root_power(8, 1, 1, 3, 3) == 0
    assert compare_root_power(27, 1, 8, 3, 3) == 0
    assert compare_root_power(26, 1, 8, 3, 3) == -1
    # 2^(1/2) + 1 squared is 5.828...
    assert compare_root_power(6, 1, 2, 2, 2) == 1
    assert compare_root_power(5, 1, 2, 2, 2) == -1


def test_instance_from_plain_flag_complex():
    inst = Instance.from_complex(clique_complex(turan_graph(4, 2)))
    assert inst.flag and inst.colors == 2 and inst.balanced
