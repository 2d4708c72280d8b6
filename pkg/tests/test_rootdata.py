import json
from itertools import product

import pytest
from hypothesis import given, strategies as st

from hecke_satake.rootdata import BasedRootDatum, load_datum, nu_to_v, preset, v_to_nu

NAMES = ["A1sc", "A1ad", "GL2", "GL3", "A2sc", "B2", "G2"]


def test_pairing_examples():
    sl2, a2, gl2 = preset("SL2"), preset("A2"), preset("GL2")
    assert sl2.pairing(0, sl2.simple_coroots[0]) == 2
    assert a2.pairing(0, a2.simple_coroots[1]) == -1
    assert gl2.pairing((1, -1), (1, 0)) == 1


def test_dominance_examples():
    sl2 = preset("SL2")
    a = sl2.simple_coroots[0]
    assert sl2.is_dominant((0,))
    assert sl2.is_dominant(tuple(-x for x in a))
    assert not sl2.is_dominant(a)


def test_preceq_examples():
    sl2, gl2 = preset("SL2"), preset("GL2")
    assert sl2.preceq((0,), (0,))
    assert sl2.preceq((-1,), (-2,))  # nu(x1) = nu(x2) + alpha^vee
    assert not gl2.preceq((1, 0), (0, 0))


def test_lambda_alpha():
    assert preset("SL2").lambda_alpha(0) == (1,)
    assert preset("GL2").lambda_alpha(0) == (1, -1)
    a2 = preset("A2")
    assert a2.lambda_alpha(1) == a2.simple_coroots[1]


def test_nu_v_conversion():
    assert v_to_nu((1, 0)) == (-1, 0)
    assert nu_to_v(v_to_nu((3, -2))) == (3, -2)


@pytest.mark.parametrize("name,J,z,n", [
    ("A1sc", [], (0,), []),
    ("A1sc", [0], (0,), [1]),
    ("A2sc", [0], (0, 0), [2]),
    ("B2", [0, 1], (0, 0), [1, 2]),
    ("G2", [1], (-1, 0), [3]),
])
def test_dominating_shift_postcondition(name, J, z, n):
    d = preset(name)
    y = d.dominating_shift(z, J, n)
    assert d.is_dominant_on(y, J)
    for m in product(*[range(k + 1) for k in n]):
        x = tuple(y[c] + z[c] + sum(mj * d.simple_coroots[j][c] for mj, j in zip(m, J)) for c in range(d.rank))
        assert d.is_dominant_on(x, J)


def test_dominating_shift_trivial_when_already_dominant():
    d = preset("A1sc")
    # <alpha, v(z)> = 4 >= 2 n(alpha)
    assert d.dominating_shift((-2,), [0], [2]) == (0,)


def test_sl2_shift_pairs_at_least_two():
    d = preset("SL2")
    y = d.dominating_shift((0,), [0], [1])
    assert -d.pairing(0, y) >= 2


def test_levi_subdatum():
    a2 = preset("A2")
    assert a2.levi_subdatum([0, 1]) == a2
    torus = a2.levi_subdatum([])
    assert torus.n_simple == 0 and torus.positive_roots == () and torus.rank == 2
    a1 = a2.levi_subdatum([0])
    assert a1.rank == 2 and a1.cartan == ((2,),) and len(a1.positive_roots) == 1
    with pytest.raises(ValueError):
        a2.levi_subdatum([2])


def test_validation_accepts_semisimple_rank_one_in_rank_two():
    d = BasedRootDatum("ok", 2, ((2, 0),), ((1, 1),))
    assert d.n_simple == 1 and len(d.positive_roots) == 1


@pytest.mark.parametrize("kwargs", [
    dict(name="bad", rank=1, simple_roots=((1,),), simple_coroots=((1,),)),            # diagonal 1
    dict(name="bad", rank=2, simple_roots=((2, -3), (-3, 2)), simple_coroots=((1, 0), (0, 1))),  # affine/hyperbolic
    dict(name="bad", rank=2, simple_roots=((2, 1), (1, 2)), simple_coroots=((1, 0), (0, 1))),    # positive entry
    dict(name="bad", rank=1, simple_roots=((2,),), simple_coroots=((1,),), p=4),
])
def test_validation_rejects(kwargs):
    with pytest.raises(ValueError):
        BasedRootDatum(**kwargs)


@pytest.mark.parametrize("name", NAMES)
def test_root_system_closure(name):
    d = preset(name)
    for r in d.positive_roots:
        assert sum(a * b for a, b in zip(r.root, r.coroot)) == 2
    # W0 permutes the roots
    roots = {r.root for r in d.positive_roots} | {tuple(-x for x in r.root) for r in d.positive_roots}
    for w in d.weyl.elements:
        assert {d.weyl.act_root(w, r) for r in roots} == roots
    assert len(d.weyl) == {"A1sc": 2, "A1ad": 2, "GL2": 2, "GL3": 6, "A2sc": 6, "B2": 8, "G2": 12}[name]


def test_json_round_trip(tmp_path):
    d = preset("B2", 9)
    path = tmp_path / "b2.json"
    path.write_text(json.dumps(d.to_json()))
    assert load_datum(str(path)) == d
    assert load_datum(str(path), 5).q == 5
    with pytest.raises(ValueError):
        BasedRootDatum.from_json({"name": "x"})


def test_unknown_preset():
    with pytest.raises(KeyError):
        preset("E8")


vec2 = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@given(st.sampled_from(["A2sc", "B2", "G2", "GL2"]), vec2, vec2, vec2)
def test_preceq_is_a_partial_order(name, x, y, z):
    d = preset(name)
    assert d.preceq(x, x)
    if d.preceq(x, y) and d.preceq(y, z):
        assert d.preceq(x, z)
    if d.preceq(x, y) and d.preceq(y, x):
        assert x == y


@given(st.sampled_from(["A2sc", "B2", "G2"]), vec2, vec2)
def test_pairing_is_linear(name, x, y):
    d = preset(name)
    s = tuple(a + b for a, b in zip(x, y))
    for i in range(d.n_simple):
        assert d.pairing(i, s) == d.pairing(i, x) + d.pairing(i, y)


@given(st.sampled_from(["A2sc", "B2", "G2"]), vec2)
def test_weyl_action_preserves_pairing(name, x):
    d = preset(name)
    W0 = d.weyl
    for w in W0.elements:
        wx = W0.act(w, x)
        for r in d.positive_roots:
            assert sum(a * b for a, b in zip(W0.act_root(w, r.root), wx)) == sum(a * b for a, b in zip(r.root, x))
