"""The ten acceptance criteria, one test each, with exact equality throughout.

Each test prints a PASS/FAIL line (shown with ``-s``, and repeated in the
terminal summary).  Criteria 1, 2, 4 and 8 also assert the published values
directly, independent of the constants kept in the acceptance module.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from hypertutte import acceptance
from hypertutte.core import MonomialSet, UniPolynomial, classical_tutte_slices, kirchhoff_count
from hypertutte.fixtures import fig2, fig2_g0, fig2_g1, tetra4, trin1
from hypertutte.invariants import exterior_polynomial, interior_polynomial
from hypertutte.lattice import exterior_poly, interior_poly, support_function, tightness_closure_check
from hypertutte.trinity import berman_determinant, enhanced_determinant

P = UniPolynomial


def run(number):
    res = acceptance.run_criterion(acceptance.CRITERIA[number - 1])
    line = res.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert res.number == number
    assert res.passed, "\n".join(map(str, res.mismatches))
    return res


def test_criterion_1():
    run(1)
    assert interior_polynomial(fig2_g0()) == P([1, 3, 3])
    assert exterior_polynomial(fig2_g0()) == P([1, 3, 3])
    assert interior_polynomial(fig2_g1()) == P([1, 3, 3])
    assert exterior_polynomial(fig2_g1()) == P([1, 2, 3, 1])


def test_criterion_2():
    run(2)
    assert kirchhoff_count(fig2()) == 50
    tx, ty = classical_tutte_slices(fig2())
    assert tx == P([6, 12, 12, 10, 6, 3, 1])
    assert ty == P([25, 18, 6, 1])


def test_criterion_3():
    run(3)


def test_criterion_4():
    run(4)
    t = tetra4()
    assert interior_poly(t, "xyzt") == P([1, 2, 1])
    assert interior_poly(t, "yztx") == P([2, 0, 2])
    assert exterior_poly(t, "xtzy") == P([2, 0, 2])
    assert not tightness_closure_check(support_function(t), (1, 1, 0, 0))


def test_criterion_5():
    run(5)


def test_criterion_6():
    run(6)


def test_criterion_7():
    run(7)


def test_criterion_8():
    run(8)
    t = trin1()
    assert berman_determinant(t) == 7
    assert len(t.points) == t.n + 2
    ev = enhanced_determinant(t, "e-v")
    assert ev == MonomialSet.parse("e0^2 e1 + e0 e1^2 + e0^2 e2 + e0 e1 e2 + e1^2 e2 + e0 e2^2 + e1 e2^2",
                                   ev.variables)


def test_criterion_9():
    run(9)


def test_criterion_10():
    res = run(10)
    # equal counts are asserted inside the criterion; the interior flag is only reported
    assert res.notes["graphs"] == 100
    print(f"interior polynomials equal on all graphs: {res.notes['interior_equal_everywhere']}")
    for g in res.notes["counterexamples"]:
        print("counterexample:", g)
