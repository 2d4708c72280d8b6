import pytest
from hypothesis import given, strategies as st

from hecke_satake.fields import GF, gf

QS = [2, 3, 4, 5, 7, 8, 9, 25, 27]


@pytest.mark.parametrize("q", QS)
def test_generator_has_full_order(q):
    F = gf(q)
    seen = {F.exp(k) for k in range(q - 1)}
    assert seen == set(range(1, q))


@pytest.mark.parametrize("bad", [1, 6, 12, 1 << 17])
def test_rejects_non_prime_powers(bad):
    with pytest.raises(ValueError):
        GF(bad)


@given(st.sampled_from(QS), st.data())
def test_field_axioms(q, data):
    F = gf(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.exp(F.log(a)) == a


def test_characteristic():
    F = gf(9)
    assert F.scale(3, 1) == 0 and F.from_int(-1) == F.neg(1)
