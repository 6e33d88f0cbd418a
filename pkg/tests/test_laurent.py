from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl3web.laurent import LaurentPoly, quantum_integer

Q2 = quantum_integer(2)
Q3 = quantum_integer(3)


def poly(d: dict) -> LaurentPoly:
    out = LaurentPoly.zero()
    for e, c in d.items():
        out = out + LaurentPoly.monomial(e, c)
    return out


def test_quantum_integers():
    assert quantum_integer(1) == LaurentPoly.one()
    assert Q2 == poly({1: 1, -1: 1})
    assert Q3 == poly({2: 1, 0: 1, -2: 1})
    assert str(Q3) == "q^2+1+q^-2"


def test_quantum_integer_rejects_nonpositive():
    with pytest.raises(ValueError):
        quantum_integer(0)


def test_zero_coefficients_are_dropped():
    p = poly({3: 1}) + poly({3: -1})
    assert p == LaurentPoly.zero()
    assert not p.items()
    assert str(p) == "0"


def test_product_and_known_identity():
    # [2]^2 = [3] + 1
    assert Q2 * Q2 == Q3 + LaurentPoly.one()
    assert Q2 * Q3 == poly({3: 1, 1: 2, -1: 2, -3: 1})


def test_degree_and_leading_coefficient():
    p = poly({4: 2, 0: 5, -6: 1})
    assert p.degree == 4
    assert p.leading_coefficient == 2
    with pytest.raises(ValueError):
        LaurentPoly.zero().degree


def test_shift_and_bar():
    p = poly({1: 1, -3: 2})
    assert p.shifted(3) == poly({4: 1, 0: 2})
    assert p.bar() == poly({-1: 1, 3: 2})
    assert (Q2 * Q3).bar() == Q2 * Q3


def test_symmetry_and_monicity():
    assert Q3.is_symmetric()
    assert not poly({2: 1, 0: 1}).is_symmetric()
    assert Q3.is_monic_of_degree(2)
    assert not Q3.is_monic_of_degree(4)
    assert not poly({2: 2, 0: 2, -2: 2}).is_monic_of_degree(2)
    assert poly({0: 1}).is_monic_of_degree(0)


def test_nonnegative_coefficients():
    assert Q3.has_nonnegative_coefficients()
    assert not poly({1: 1, 0: -1}).has_nonnegative_coefficients()


def test_str_formats_descending():
    p = poly({2: 1, 0: -3, -1: 4})
    assert str(p) == "q^2-3+4q^-1"


coeffs = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6)


@given(coeffs, coeffs, coeffs)
def test_ring_laws(a, b, c):
    pa, pb, pc = poly(a), poly(b), poly(c)
    assert pa + pb == pb + pa
    assert pa * pb == pb * pa
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert (pa * pb).bar() == pa.bar() * pb.bar()


def test_pow():
    assert Q2 ** 2 == Q2 * Q2
    assert Q2 ** 0 == LaurentPoly.one()
